#include "acqudit/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <string>

namespace acqudit::solvers {

namespace {

double sup_norm(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// Dense Fredholm system v = F + A v on the time grid; A[i][j] already
// contains the quadrature weight of node j.
struct FredholmSystem {
  int n = 0;
  std::vector<double> F;
  std::vector<double> A;  // row-major n x n

  std::vector<double> apply(std::span<const double> v) const {
    std::vector<double> out(n, 0.0);
    for (int i = 0; i < n; ++i) {
      const double* row = &A[static_cast<std::size_t>(i) * n];
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += row[j] * v[j];
      out[i] = s;
    }
    return out;
  }
};

// Liouville-Neumann summation v = sum_j A^j F.  The optional ramp is added
// to the recorded partial sums so that reports always describe the physical
// velocity.  Throws NonConvergence if the last update still exceeds tol.
std::vector<double> neumann_sum(const FredholmSystem& sys, const SolverSettings& st,
                                std::span<const double> ramp, NeumannReport* report) {
  std::vector<double> acc = sys.F;
  std::vector<double> term = sys.F;
  auto record_partial = [&](NeumannReport* rep) {
    if (rep == nullptr || !st.keep_history) return;
    std::vector<double> snapshot = acc;
    if (!ramp.empty()) {
      for (int i = 0; i < sys.n; ++i) snapshot[i] += ramp[i];
    }
    rep->partials.push_back(std::move(snapshot));
  };

  double update = sup_norm(term);
  int terms = 0;
  if (report != nullptr) {
    report->update_norms.clear();
    report->partials.clear();
    report->update_norms.push_back(update);
  }
  record_partial(report);

  for (int j = 1; j <= st.series_terms; ++j) {
    term = sys.apply(term);
    for (int i = 0; i < sys.n; ++i) acc[i] += term[i];
    update = sup_norm(term);
    terms = j;
    if (report != nullptr) report->update_norms.push_back(update);
    record_partial(report);
    if (!st.keep_history && update < st.tol) break;
  }

  if (update >= st.tol && terms == st.series_terms) {
    throw NonConvergence("Neumann series update " + std::to_string(update) +
                             " above tol after " + std::to_string(st.series_terms) +
                             " terms",
                         update);
  }
  if (report != nullptr) {
    report->terms_used = terms;
    report->last_update = update;
    std::vector<double> rhs = sys.apply(acc);
    double res = 0.0;
    for (int i = 0; i < sys.n; ++i) res = std::max(res, std::abs(acc[i] - sys.F[i] - rhs[i]));
    report->fredholm_residual = res;
  }
  return acc;
}

std::vector<double> boundary_ramp(const TimeGrid& g, VelocityBC bc) {
  std::vector<double> ramp(g.size());
  for (int i = 0; i < g.size(); ++i) ramp[i] = bc.v0 + (bc.vf - bc.v0) * g.t[i] / g.t_f;
  return ramp;
}

// System for lambda v'' = -eta - zeta v + int phi (t-s) v(s) ds with the
// boundary ramp already subtracted (Q = v - ramp has homogeneous BCs):
//   Q = F + A Q,  A(i,j) = w_j [ H(i,j) - G(i,j) zeta(j) ],
//   H(i,j) = sum_l w_l G(i,l) phi(|l-j|),
//   F(i) = -sum_l w_l G(i,l) eta_eff(l),
//   eta_eff = eta + zeta ramp - int phi (.-s) ramp(s) ds.
FredholmSystem build_linear_system(const kernels::KernelSet& ks, const SolverSettings& st,
                                   std::span<const double> ramp) {
  const TimeGrid& g = ks.grid;
  const int n = g.size();
  FredholmSystem sys;
  sys.n = n;
  sys.F.assign(n, 0.0);
  sys.A.assign(static_cast<std::size_t>(n) * n, 0.0);

  std::vector<double> eta_eff(n);
  for (int l = 0; l < n; ++l) {
    double conv = 0.0;
    for (int m = 0; m < n; ++m) conv += g.w[m] * ks.phi[std::abs(l - m)] * ramp[m];
    eta_eff[l] = ks.eta[l] + ks.zeta[l] * ramp[l] - conv;
  }

  std::vector<double> grow(n);
  for (int i = 0; i < n; ++i) {
    for (int l = 0; l < n; ++l) grow[l] = greens2(g.t[i], g.t[l], g.t_f, st.lambda);
    double f = 0.0;
    double* arow = &sys.A[static_cast<std::size_t>(i) * n];
    for (int j = 0; j < n; ++j) {
      double h = 0.0;
      for (int l = 0; l < n; ++l) h += g.w[l] * grow[l] * ks.phi[std::abs(l - j)];
      arow[j] = g.w[j] * (h - grow[j] * ks.zeta[j]);
    }
    for (int l = 0; l < n; ++l) f -= g.w[l] * grow[l] * eta_eff[l];
    sys.F[i] = f;
  }
  return sys;
}

}  // namespace

double greens2(double t, double s, double t_f, double lambda) {
  if (t <= s) return -t * (t_f - s) / (lambda * t_f);
  return -s * (t_f - t) / (lambda * t_f);
}

double greens3(double t, double s, double t_f) {
  const double tail = -t * (t_f - s) * (t_f - s) / (t_f * t_f);
  if (s <= t) return (t - s) + tail;
  return tail;
}

Trajectory solve_linear(const kernels::KernelSet& ks, const SolverSettings& st,
                        VelocityBC bc, NeumannReport* report) {
  st.validate();
  const std::vector<double> ramp = boundary_ramp(ks.grid, bc);
  FredholmSystem sys = build_linear_system(ks, st, ramp);
  std::vector<double> q = neumann_sum(sys, st, ramp, report);
  for (int i = 0; i < sys.n; ++i) q[i] += ramp[i];
  q.front() = bc.v0;
  q.back() = bc.vf;
  return trajectory_from_velocity(ks.grid, std::move(q));
}

Trajectory solve_linear_position_bc(const kernels::KernelSet& ks, const SolverSettings& st,
                                    double xf, NeumannReport* report) {
  st.validate();
  const TimeGrid& g = ks.grid;
  const int n = g.size();
  FredholmSystem sys;
  sys.n = n;
  sys.F.assign(n, 0.0);
  sys.A.assign(static_cast<std::size_t>(n) * n, 0.0);

  std::vector<double> grow(n);
  for (int i = 0; i < n; ++i) {
    for (int l = 0; l < n; ++l) grow[l] = greens3(g.t[i], g.t[l], g.t_f);
    double* arow = &sys.A[static_cast<std::size_t>(i) * n];
    for (int j = 0; j < n; ++j) {
      double h = 0.0;
      for (int l = 0; l < n; ++l) h += g.w[l] * grow[l] * ks.phi[std::abs(l - j)];
      arow[j] = g.w[j] * (h - grow[j] * ks.zeta[j]) / st.lambda;
    }
    double f = 0.0;
    for (int l = 0; l < n; ++l) f -= g.w[l] * grow[l] * ks.eta[l];
    sys.F[i] = 2.0 * xf * g.t[i] / (g.t_f * g.t_f) + f / st.lambda;
  }

  std::vector<double> v = neumann_sum(sys, st, {}, report);
  v.front() = 0.0;
  Trajectory traj = trajectory_from_velocity(g, std::move(v));
  if (std::abs(traj.distance() - xf) > 1e-6 * std::max(1.0, std::abs(xf))) {
    throw BoundaryMiss("position-constrained solve reached x(t_f) = " +
                       std::to_string(traj.distance()) + ", requested " + std::to_string(xf));
  }
  return traj;
}

Trajectory solve_dissipationless(const kernels::KernelSet& ks, const SolverSettings& st,
                                 VelocityBC bc, NeumannReport* report) {
  st.validate();
  const TimeGrid& g = ks.grid;
  const int n = g.size();
  const std::vector<double> ramp = boundary_ramp(g, bc);

  FredholmSystem sys;
  sys.n = n;
  sys.F.assign(n, 0.0);
  sys.A.assign(static_cast<std::size_t>(n) * n, 0.0);

  std::vector<double> source(n);
  for (int l = 0; l < n; ++l) {
    double conv = 0.0;
    for (int m = 0; m < n; ++m) conv += g.w[m] * ks.phi1[std::abs(l - m)] * ramp[m];
    source[l] = 0.5 * st.lambda1 + conv;
  }

  std::vector<double> grow(n);
  for (int i = 0; i < n; ++i) {
    for (int l = 0; l < n; ++l) grow[l] = greens2(g.t[i], g.t[l], g.t_f, st.lambda);
    double* arow = &sys.A[static_cast<std::size_t>(i) * n];
    for (int j = 0; j < n; ++j) {
      double h = 0.0;
      for (int l = 0; l < n; ++l) h += g.w[l] * grow[l] * ks.phi1[std::abs(l - j)];
      arow[j] = g.w[j] * h;
    }
    double f = 0.0;
    for (int l = 0; l < n; ++l) f += g.w[l] * grow[l] * source[l];
    sys.F[i] = f;
  }

  std::vector<double> q = neumann_sum(sys, st, ramp, report);
  for (int i = 0; i < n; ++i) q[i] += ramp[i];
  q.front() = bc.v0;
  q.back() = bc.vf;
  return trajectory_from_velocity(g, std::move(q));
}

Trajectory solve_nonlinear_picard(const kernels::KernelSet& ks,
                                  const kernels::SpectralTables& tab,
                                  const SolverSettings& st, VelocityBC bc,
                                  PicardReport* report) {
  st.validate();
  const TimeGrid& g = ks.grid;
  const int n = g.size();
  const double alpha = bc.v0;
  const double beta = bc.vf;

  std::vector<double> v(n, alpha);
  std::vector<double> f(n), eta1, zeta1, tf_vec(n);
  double relax = st.relax;
  double prev_residual = std::numeric_limits<double>::infinity();
  bool converged = false;
  int iter = 0;

  if (report != nullptr) {
    report->residuals.clear();
  }

  for (iter = 1; iter <= st.picard_iters; ++iter) {
    const std::vector<double> x = cumtrapz(g, v);
    kernels::eta1_zeta1_profile(tab, g, x, eta1, zeta1);
    for (int i = 0; i < n; ++i) {
      double conv = 0.0;
      for (int m = 0; m < n; ++m) conv += g.w[m] * ks.phi[std::abs(i - m)] * v[m];
      f[i] = (-eta1[i] - zeta1[i] * v[i] + conv) / st.lambda;
      tf_vec[i] = g.t[i] * f[i];
    }
    // I(t) = int_0^t (t-s) f(s) ds = t F1(t) - F2(t)
    const std::vector<double> f1 = cumtrapz(g, f);
    const std::vector<double> f2 = cumtrapz(g, tf_vec);
    const double shoot = g.t_f * f1.back() - f2.back();  // int (t_f - s) f ds
    const double gamma = (beta - alpha - shoot) / g.t_f;

    double residual = 0.0;
    std::vector<double> v_new(n);
    for (int i = 0; i < n; ++i) {
      v_new[i] = alpha + gamma * g.t[i] + (g.t[i] * f1[i] - f2[i]);
      residual = std::max(residual, std::abs(v_new[i] - v[i]));
    }
    if (residual > prev_residual && relax == 1.0) relax = 0.5;
    for (int i = 0; i < n; ++i) v[i] += relax * (v_new[i] - v[i]);
    prev_residual = residual;
    if (report != nullptr) report->residuals.push_back(residual);
    if (residual < st.tol) {
      converged = true;
      break;
    }
  }

  if (report != nullptr) {
    report->iterations = std::min(iter, st.picard_iters);
    report->converged = converged;
    report->relax_used = relax;
  }
  if (!converged) {
    std::string log = "Picard residuals:";
    if (report != nullptr) {
      for (double r : report->residuals) log += " " + std::to_string(r);
    }
    throw NonConvergence(log, prev_residual);
  }
  return trajectory_from_velocity(g, std::move(v));
}

double fredholm_residual(const kernels::KernelSet& ks, const SolverSettings& st,
                         VelocityBC bc, const Trajectory& traj) {
  const std::vector<double> ramp = boundary_ramp(ks.grid, bc);
  FredholmSystem sys = build_linear_system(ks, st, ramp);
  std::vector<double> q(traj.v.size());
  for (std::size_t i = 0; i < q.size(); ++i) q[i] = traj.v[i] - ramp[i];
  const std::vector<double> aq = sys.apply(q);
  double res = 0.0;
  for (int i = 0; i < sys.n; ++i) res = std::max(res, std::abs(q[i] - sys.F[i] - aq[i]));
  return res;
}

}  // namespace acqudit::solvers
