#include "acqudit/validation.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "acqudit/fidelity.hpp"
#include "acqudit/oracles.hpp"
#include "acqudit/runner.hpp"
#include "acqudit/solvers.hpp"
#include "acqudit/specfun.hpp"

namespace acqudit::validation {

namespace {

constexpr double kPi = 3.14159265358979323846;
using specfun::Complex;

std::string num(double x) {
  std::ostringstream ss;
  ss.precision(6);
  ss << x;
  return ss.str();
}

// Smooth random velocity profile with v(0) = 0, for oracle cross-checks.
std::vector<double> random_velocity(const TimeGrid& grid, std::mt19937& rng) {
  std::uniform_real_distribution<double> amp(-0.7, 0.7);
  const double a1 = amp(rng), a2 = amp(rng), a3 = amp(rng), b = amp(rng);
  std::vector<double> v(grid.size());
  for (int i = 0; i < grid.size(); ++i) {
    const double u = grid.t[i] / grid.t_f;
    v[i] = a1 * std::sin(kPi * u) + a2 * std::sin(2 * kPi * u) +
           a3 * std::sin(3 * kPi * u) + b * u;
  }
  return v;
}

}  // namespace

double quadratic_action(const kernels::KernelSet& ks, double lambda,
                        std::span<const double> v) {
  const TimeGrid& g = ks.grid;
  const int n = g.size();
  double s = 0.0;
  for (int i = 0; i + 1 < n; ++i) {
    const double dv = v[i + 1] - v[i];
    s += lambda * dv * dv / g.h;
  }
  for (int i = 0; i < n; ++i) {
    s -= g.w[i] * (2.0 * ks.eta[i] * v[i] + ks.zeta[i] * v[i] * v[i]);
  }
  for (int i = 0; i < n; ++i) {
    double inner = 0.0;
    for (int j = 0; j < n; ++j) inner += g.w[j] * ks.phi[std::abs(i - j)] * v[j];
    s += g.w[i] * v[i] * inner;
  }
  return s;
}

double fidelity_action(const kernels::SpectralTables& tab, const TimeGrid& grid,
                       double lambda, std::span<const double> v) {
  Trajectory traj = trajectory_from_velocity(grid, std::vector<double>(v.begin(), v.end()));
  const fidelity::TransportResult res = fidelity::survival(traj, tab);
  return res.J_nonadiabatic + res.J_bath + lambda * traj.kinetic_integral();
}

std::vector<CheckResult> run_validation(int jobs) {
  std::vector<CheckResult> out;
  auto add = [&](const std::string& name, bool pass, const std::string& detail) {
    out.push_back({name, pass, detail});
  };

  // --- special functions -------------------------------------------------
  {
    double worst = 0.0;
    for (double y : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
      const double got = specfun::abs_gamma_sq(Complex(1.0, y));
      const double want = kPi * y / std::sinh(kPi * y);
      worst = std::max(worst, std::abs(got - want) / want);
    }
    add("gamma_modulus_identity", worst < 1e-10, "max rel err " + num(worst));
  }
  {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> re(-19.0, 19.0), im(-20.0, 20.0);
    double worst = 0.0;
    int n = 0;
    while (n < 100) {
      Complex z(re(rng), im(rng));
      if (std::abs(z.imag()) < 1e-3) continue;  // stay away from the pole line
      const Complex lhs = specfun::complex_gamma(z + 1.0);
      const Complex rhs = z * specfun::complex_gamma(z);
      worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
      ++n;
    }
    add("gamma_recurrence_random", worst < 1e-10, "max rel err " + num(worst));
  }
  {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> re(-19.0, 19.0), im(0.01, 20.0);
    double worst = 0.0;
    for (int n = 0; n < 100; ++n) {
      Complex z(re(rng), im(rng));
      const Complex a = specfun::complex_gamma(std::conj(z));
      const Complex b = std::conj(specfun::complex_gamma(z));
      worst = std::max(worst, std::abs(a - b) / std::abs(b));
    }
    add("gamma_conjugation", worst < 1e-12, "max rel err " + num(worst));
  }
  {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> re(-10.0, 10.0), im(0.05, 10.0);
    double worst = 0.0;
    for (int n = 0; n < 100; ++n) {
      Complex z(re(rng), im(rng));
      const double a = specfun::abs_gamma_sq(z);
      const double b = std::norm(specfun::complex_gamma(z));
      worst = std::max(worst, std::abs(a - b) / b);
    }
    add("abs_gamma_sq_consistency", worst < 1e-9, "max rel err " + num(worst));
  }

  // --- trap gate and spectrum anchor --------------------------------------
  {
    bool pass = true;
    std::string detail;
    try {
      morse::build_structure({2.0, 1.0, 0.5});
      morse::build_structure({2.0, 2.0, 2.0});
    } catch (const Error& e) {
      pass = false;
      detail = e.what();
    }
    try {
      morse::build_structure({2.0, 1.0, 2.0});
      pass = false;
      detail += " (deep trap accepted)";
    } catch (const MultipleStatesError&) {
    }
    add("morse_bound_state_gate", pass, detail.empty() ? "accept/reject as derived" : detail);
  }
  const morse::TrapSpec trap{2.0, 1.0, 0.5};
  const kernels::SpectralTables tab =
      kernels::build_tables(trap, {1.0, 5.0, 5.0, 200, 200}, jobs);
  {
    const double min_gap = morse::gap(tab.structure, tab.eps_grid.nodes.front());
    add("spectrum_anchor_min_gap", std::abs(min_gap - 0.8358) < 0.01,
        "min gap " + num(min_gap));
  }

  // --- kernels -------------------------------------------------------------
  const TimeGrid grid = make_time_grid(1.0, 200);
  const kernels::KernelSet ks = kernels::build_kernels(tab, grid, jobs);
  {
    double eta_max = 0.0, zeta_scale = 0.0;
    for (int i = 0; i < grid.size(); ++i) {
      eta_max = std::max(eta_max, std::abs(ks.eta[i]));
      zeta_scale = std::max(zeta_scale, std::abs(ks.zeta[i]));
    }
    add("kernel_eta_parity", eta_max < 1e-10 * std::max(1.0, zeta_scale),
        "sup|eta| " + num(eta_max) + " vs sup|zeta| " + num(zeta_scale));
  }
  {
    bool pass = ks.phi[0] > 0.0 && ks.phi1[0] >= 0.0;
    double worst = 0.0;
    for (int i = 0; i < grid.size(); ++i) worst = std::max(worst, std::abs(ks.phi[i]));
    pass = pass && worst <= ks.phi[0] * (1.0 + 1e-12);
    add("phi_bounds", pass, "phi(0) " + num(ks.phi[0]) + ", sup|phi| " + num(worst));
  }
  {
    const kernels::SpectralTables tab0 =
        kernels::build_tables(trap, {0.0, 5.0, 5.0, 200, 200}, jobs);
    const kernels::KernelSet ks0 = kernels::build_kernels(tab0, grid, jobs);
    double d = 0.0;
    for (int i = 0; i < grid.size(); ++i) d = std::max(d, std::abs(ks.phi1[i] - ks0.phi1[i]));
    add("phi1_coupling_independence", d == 0.0, "sup diff " + num(d));
  }
  {
    std::vector<double> x0(grid.size(), 0.0), e1, z1;
    kernels::eta1_zeta1_profile(tab, grid, x0, e1, z1);
    double d = 0.0;
    for (int i = 0; i < grid.size(); ++i) {
      d = std::max(d, std::abs(e1[i] - ks.eta[i]));
      d = std::max(d, std::abs(z1[i] - ks.zeta[i]));
    }
    add("eta1_zeta1_static_limit", d < 1e-8, "sup diff " + num(d));
  }
  {
    const kernels::SpectralTables tab2 =
        kernels::build_tables(trap, {1.0, 5.0, 5.0, 400, 400}, jobs);
    const kernels::KernelSet ks2 = kernels::build_kernels(tab2, grid, jobs);
    const double dphi = std::abs(ks2.phi[0] - ks.phi[0]) / std::abs(ks.phi[0]);
    const int mid = grid.size() / 2;
    const double dzeta = std::abs(ks2.zeta[mid] - ks.zeta[mid]) / std::abs(ks.zeta[mid]);
    add("grid_convergence", dphi < 0.005 && dzeta < 0.005,
        "phi(0) change " + num(dphi) + ", zeta(t_f/2) change " + num(dzeta));
  }

  // --- solvers ---------------------------------------------------------------
  const double c = bath::UnitSystem::c_sound;
  {
    const double g2 = solvers::greens2(0.25, 0.5, 1.0, 1.0);
    const double g3 = solvers::greens3(1.0, 0.5, 1.0);
    const double sym = solvers::greens2(0.3, 0.7, 1.0, 2.0) - solvers::greens2(0.7, 0.3, 1.0, 2.0);
    add("greens_function_anchors",
        std::abs(g2 + 0.125) < 1e-15 && std::abs(g3 - 0.25) < 1e-15 && std::abs(sym) < 1e-15,
        "G2(0.25,0.5) " + num(g2) + ", G3(1,0.5) " + num(g3));
  }
  solvers::SolverSettings st;
  solvers::NeumannReport rep;
  const Trajectory lin = solvers::solve_linear(ks, st, {0.0, 1.5 * c}, &rep);
  {
    add("fredholm_residual", rep.fredholm_residual < 10.0 * st.tol,
        "residual " + num(rep.fredholm_residual));
  }
  {
    const bool pass = lin.v.front() == 0.0 && std::abs(lin.v.back() - 1.5 * c) < 1e-15 &&
                      lin.x.front() == 0.0;
    add("boundary_conditions_exact", pass,
        "v(0) " + num(lin.v.front()) + ", v(t_f) " + num(lin.v.back()));
  }

  // --- fidelity oracles (coarse grids, random trajectories) -----------------
  {
    const kernels::SpectralTables ctab =
        kernels::build_tables(trap, {1.0, 5.0, 5.0, 24, 24}, jobs);
    const TimeGrid cgrid = make_time_grid(1.0, 64);
    std::mt19937 rng(2024);
    double worst_na = 0.0, worst_bath = 0.0;
    for (int rep_i = 0; rep_i < 5; ++rep_i) {
      const Trajectory traj = trajectory_from_velocity(cgrid, random_velocity(cgrid, rng));
      const fidelity::TransportResult res = fidelity::survival(traj, ctab);
      const double na_ref = oracles::j_nonadiabatic_double_integral(traj, ctab);
      const double bath_ref = oracles::j_bath_double_integral(traj, ctab);
      worst_na = std::max(worst_na,
                          std::abs(res.J_nonadiabatic - na_ref) / std::max(1e-300, na_ref));
      worst_bath =
          std::max(worst_bath, std::abs(res.J_bath - bath_ref) / std::max(1e-300, bath_ref));
    }
    add("oracle_j_nonadiabatic", worst_na < 1e-8, "max rel err " + num(worst_na));
    add("oracle_j_bath", worst_bath < 1e-8, "max rel err " + num(worst_bath));
  }
  {
    // CDF exponent identity: J_cdf - J_na equals the eps-integrated condition.
    std::mt19937 rng(99);
    double worst = 0.0;
    for (int rep_i = 0; rep_i < 5; ++rep_i) {
      const Trajectory traj = trajectory_from_velocity(grid, random_velocity(grid, rng));
      const fidelity::TransportResult plain = fidelity::survival(traj, tab);
      const fidelity::TransportResult with_cdf = fidelity::survival_cdf(traj, tab);
      const fidelity::CdfConditionReport cond = fidelity::cdf_condition_check(traj, tab);
      const double lhs = with_cdf.J_nonadiabatic - plain.J_nonadiabatic;
      worst = std::max(worst, std::abs(lhs - cond.aggregate) /
                                  std::max(1.0, std::abs(cond.aggregate)));
    }
    add("cdf_exponent_identity", worst < 1e-9, "max rel err " + num(worst));
  }

  // --- determinism -----------------------------------------------------------
  {
    runner::RunConfig cfg;
    cfg.trap = trap;
    cfg.bath = {1.0, 5.0, 5.0, 32, 32};
    cfg.t_f = 0.5;
    cfg.n_t = 48;
    cfg.protocol = runner::Protocol::AcquditLinear;
    cfg.bc.vf_over_c = 1.5;
    const kernels::SpectralTables dtab = kernels::build_tables(cfg.trap, cfg.bath, jobs);
    const runner::CellResult a = runner::solve_cell(cfg, dtab, cfg.t_f);
    const runner::CellResult b = runner::solve_cell(cfg, dtab, cfg.t_f);
    bool same = a.optimal.survival == b.optimal.survival &&
                a.cdf.survival == b.cdf.survival &&
                a.constant.survival == b.constant.survival;
    for (int i = 0; same && i < a.trajectory.grid.size(); ++i) {
      same = a.trajectory.v[i] == b.trajectory.v[i];
    }
    add("determinism", same, same ? "bit-identical rerun" : "rerun differs");
  }

  return out;
}

}  // namespace acqudit::validation
