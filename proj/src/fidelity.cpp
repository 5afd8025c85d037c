#include "acqudit/fidelity.hpp"

#include <cmath>

namespace acqudit::fidelity {

namespace {
using Complex = std::complex<double>;

void check_grid(const Trajectory& traj) {
  const std::size_t n = static_cast<std::size_t>(traj.grid.size());
  if (traj.x.size() != n || traj.v.size() != n || traj.a.size() != n) {
    throw GridMismatch("trajectory samples do not match its time grid");
  }
}

double bath_exponent(const Trajectory& traj, const kernels::SpectralTables& tab) {
  if (!tab.has_bath()) return 0.0;
  const TimeGrid& g = traj.grid;
  const int nt = g.size();
  const int ne = tab.n_eps();
  const int nk = tab.n_k();

  // I(eps, k) = int e^{-i[(gap+Omega)t + k x(t)]} dt factorises into
  // per-eps and per-k phase rows.
  std::vector<Complex> e_eps(static_cast<std::size_t>(ne) * nt);
  std::vector<Complex> e_k(static_cast<std::size_t>(nk) * nt);
  for (int ie = 0; ie < ne; ++ie) {
    for (int it = 0; it < nt; ++it) {
      e_eps[static_cast<std::size_t>(ie) * nt + it] =
          std::polar(1.0, -tab.gap[ie] * g.t[it]);
    }
  }
  for (int ik = 0; ik < nk; ++ik) {
    const double k = tab.k_grid.nodes[ik];
    for (int it = 0; it < nt; ++it) {
      e_k[static_cast<std::size_t>(ik) * nt + it] =
          g.w[it] * std::polar(1.0, -(tab.omega_k[ik] * g.t[it] + k * traj.x[it]));
    }
  }

  double j_bath = 0.0;
  for (int ie = 0; ie < ne; ++ie) {
    const Complex* pe = &e_eps[static_cast<std::size_t>(ie) * nt];
    const std::size_t row = static_cast<std::size_t>(ie) * nk;
    for (int ik = 0; ik < nk; ++ik) {
      const double w = tab.weight[row + ik];
      if (w == 0.0) continue;
      const Complex* pk = &e_k[static_cast<std::size_t>(ik) * nt];
      Complex isum(0.0, 0.0);
      for (int it = 0; it < nt; ++it) isum += pe[it] * pk[it];
      j_bath += w * std::norm(isum);
    }
  }
  return j_bath;
}

void fill_diagnostics(const Trajectory& traj, const kernels::SpectralTables& tab,
                      TransportResult& res) {
  res.survival = std::exp(-res.J_nonadiabatic - res.J_bath);
  const AdiabaticityCheck ad = adiabaticity_check(traj, tab);
  res.adiabaticity_lhs = ad.lhs;
  res.adiabaticity_rhs = ad.rhs;
  res.adiabatic = ad.is_adiabatic;
  const SpeedCondition sc = speed_condition_check(traj, tab);
  res.speed_margin = sc.min_vs - sc.max_v;
  res.speed_ok = sc.ok;
  res.kinetic_integral = traj.kinetic_integral();
}

}  // namespace

Complex finite_time_ft(const TimeGrid& grid, std::span<const double> f, double omega) {
  if (static_cast<int>(f.size()) != grid.size()) {
    throw GridMismatch("finite_time_ft: samples not on the grid");
  }
  Complex sum(0.0, 0.0);
  for (int i = 0; i < grid.size(); ++i) {
    sum += grid.w[i] * f[i] * std::polar(1.0, -omega * grid.t[i]);
  }
  return sum;
}

TransportResult survival(const Trajectory& traj, const kernels::SpectralTables& tab) {
  check_grid(traj);
  TransportResult res;
  double j_na = 0.0;
  for (int ie = 0; ie < tab.n_eps(); ++ie) {
    const Complex vft = finite_time_ft(traj.grid, traj.v, tab.gap[ie]);
    const double c = tab.mu_over_gap[ie];
    j_na += tab.eps_grid.weights[ie] * c * c * std::norm(vft);
  }
  res.J_nonadiabatic = j_na;
  res.J_bath = bath_exponent(traj, tab);
  fill_diagnostics(traj, tab, res);
  return res;
}

TransportResult survival_cdf(const Trajectory& traj, const kernels::SpectralTables& tab) {
  check_grid(traj);
  TransportResult res;
  const double m = tab.trap.mass_m;
  const TimeGrid& g = traj.grid;
  double j_na = 0.0;
  for (int ie = 0; ie < tab.n_eps(); ++ie) {
    const double omega = tab.gap[ie];
    Complex amp(0.0, 0.0);
    for (int it = 0; it < g.size(); ++it) {
      const Complex rate(traj.v[it] * tab.mu_over_gap[ie],
                         -m * traj.a[it] * tab.dipole[ie]);
      amp += g.w[it] * rate * std::polar(1.0, -omega * g.t[it]);
    }
    j_na += tab.eps_grid.weights[ie] * std::norm(amp);
  }
  res.J_nonadiabatic = j_na;
  res.J_bath = bath_exponent(traj, tab);
  fill_diagnostics(traj, tab, res);
  return res;
}

AdiabaticityCheck adiabaticity_check(const Trajectory& traj,
                                     const kernels::SpectralTables& tab,
                                     double threshold_factor) {
  AdiabaticityCheck out;
  double coupling = 0.0;
  double min_gap = tab.gap[0];
  for (int ie = 0; ie < tab.n_eps(); ++ie) {
    coupling = std::max(coupling, std::abs(tab.mu_over_gap[ie]));
    min_gap = std::min(min_gap, tab.gap[ie]);
  }
  out.lhs = traj.max_abs_v() * coupling;
  out.rhs = min_gap;
  out.is_adiabatic = out.lhs < out.rhs / threshold_factor;
  return out;
}

CdfConditionReport cdf_condition_check(const Trajectory& traj,
                                       const kernels::SpectralTables& tab) {
  CdfConditionReport rep;
  const double m = tab.trap.mass_m;
  const int ne = tab.n_eps();
  rep.eps = tab.eps_grid.nodes;
  rep.csd_term.resize(ne);
  rep.psd_term.resize(ne);
  for (int ie = 0; ie < ne; ++ie) {
    const double omega = tab.gap[ie];
    const Complex vft = finite_time_ft(traj.grid, traj.v, omega);
    const Complex aft = finite_time_ft(traj.grid, traj.a, omega);
    const Complex csd = vft * std::conj(aft);
    rep.csd_term[ie] =
        (2.0 * Complex(0.0, 1.0) * m * tab.mu_over_gap[ie] * tab.dipole[ie] * csd).real();
    rep.psd_term[ie] = m * m * tab.dipole[ie] * tab.dipole[ie] * std::norm(aft);
    rep.aggregate += tab.eps_grid.weights[ie] * (rep.csd_term[ie] + rep.psd_term[ie]);
  }
  rep.positive = rep.aggregate > 0.0;
  return rep;
}

SpeedCondition speed_condition_check(const Trajectory& traj,
                                     const kernels::SpectralTables& tab) {
  SpeedCondition out;
  out.max_v = traj.max_abs_v();
  out.min_vs = bath::min_sonic_bound(tab.structure, tab.eps_grid, tab.k_grid);
  out.ok = out.max_v < out.min_vs;
  return out;
}

}  // namespace acqudit::fidelity
