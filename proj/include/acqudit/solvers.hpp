#pragma once

#include <vector>

#include "acqudit/kernels.hpp"
#include "acqudit/trajectory.hpp"

namespace acqudit::solvers {

struct SolverSettings {
  double lambda = 1.0;      // weight of the kinetic-energy constraint
  double lambda1 = 1.0;     // distance-constraint multiplier (dissipationless only)
  int series_terms = 50;    // Neumann series length
  int picard_iters = 20;    // successive-approximation limit
  double tol = 1e-8;        // sup-norm stopping tolerance
  double relax = 1.0;       // Picard relaxation factor in (0, 1]
  bool keep_history = false;  // record partial sums / disable early exit

  void validate() const {
    if (lambda == 0.0) throw ConfigError("solver: lambda must be nonzero");
    if (series_terms < 3) throw ConfigError("solver: series_terms must be >= 3");
    if (picard_iters < 1) throw ConfigError("solver: picard_iters must be >= 1");
    if (!(tol > 0.0)) throw ConfigError("solver: tol must be > 0");
    if (!(relax > 0.0) || relax > 1.0) throw ConfigError("solver: relax in (0, 1]");
  }
};

struct VelocityBC {
  double v0 = 0.0;
  double vf = 0.0;
};

// Convergence record of a Neumann-series solve.  When keep_history is set,
// partials[j] holds the accumulated velocity through series term j (with the
// boundary ramp already added back).
struct NeumannReport {
  int terms_used = 0;
  double last_update = 0.0;
  double fredholm_residual = 0.0;
  std::vector<double> update_norms;
  std::vector<std::vector<double>> partials;
};

struct PicardReport {
  int iterations = 0;
  bool converged = false;
  double relax_used = 1.0;
  std::vector<double> residuals;
};

// Green's function of lambda d^2v/dt^2 = f with v(0) = v(t_f) = 0:
//   G(t,s) = -t (t_f - s) / (lambda t_f)   for t <= s,
//            -s (t_f - t) / (lambda t_f)   for s <= t.
// Piecewise linear in t for fixed s, symmetric, zero at both ends.
double greens2(double t, double s, double t_f, double lambda);

// Green's function of the once-integrated problem d^3x/dt^3 = g with
// x(0) = 0, v(0) = 0, x(t_f) fixed:
//   G(t,s) = (t - s) - t (t_f - s)^2 / t_f^2   for s <= t,
//            -t (t_f - s)^2 / t_f^2            for t <= s.
double greens3(double t, double s, double t_f);

// Solves lambda v'' = -eta(t) - zeta(t) v + int phi(t-s) v(s) ds with
// v(0) = bc.v0, v(t_f) = bc.vf, by Green's-function reduction to a Fredholm
// equation of the second kind summed as a Liouville-Neumann series.  Nonzero
// boundary values are removed with the substitution Q = v - ramp before the
// homogeneous solve.
Trajectory solve_linear(const kernels::KernelSet& ks, const SolverSettings& st,
                        VelocityBC bc, NeumannReport* report = nullptr);

// Same equation under boundary data x(0) = 0, v(0) = 0, x(t_f) = xf, via the
// third-order Green's function.  Throws BoundaryMiss if the integrated
// trajectory misses xf by more than 1e-6 max(1, |xf|).
Trajectory solve_linear_position_bc(const kernels::KernelSet& ks, const SolverSettings& st,
                                    double xf, NeumannReport* report = nullptr);

// Dissipationless transport: lambda v'' = lambda1/2 + int phi1(t-s) v(s) ds
// with velocity boundary conditions.
Trajectory solve_dissipationless(const kernels::KernelSet& ks, const SolverSettings& st,
                                 VelocityBC bc, NeumannReport* report = nullptr);

// Fully nonlinear equation via Picard successive approximations:
//   v'' = f(t, v) = (1/lambda) [ -eta1(t) - zeta1(t) v + int phi(t-s) v(s) ds ]
// where eta1, zeta1 are re-evaluated from the current trajectory each sweep.
Trajectory solve_nonlinear_picard(const kernels::KernelSet& ks,
                                  const kernels::SpectralTables& tab,
                                  const SolverSettings& st, VelocityBC bc,
                                  PicardReport* report = nullptr);

// Sup-norm residual of the Fredholm form v = F + K v for a solved velocity
// profile (diagnostic; small for a converged series).
double fredholm_residual(const kernels::KernelSet& ks, const SolverSettings& st,
                         VelocityBC bc, const Trajectory& traj);

}  // namespace acqudit::solvers
