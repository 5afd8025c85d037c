#pragma once

#include <span>
#include <string>
#include <vector>

#include "acqudit/kernels.hpp"
#include "acqudit/trajectory.hpp"

namespace acqudit::validation {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Full invariant suite (special-function identities, kernel parity,
// Fredholm residuals, fidelity-oracle equivalences, determinism).
std::vector<CheckResult> run_validation(int jobs = 1);

// Quadratic action whose exact first variation is the discretised linear
// transport equation lambda v'' + eta + zeta v - int phi(t-s) v(s) ds = 0:
//   S[v] = lambda sum_cells (dv)^2/h - sum w (2 eta v + zeta v^2)
//          + sum_ij w_i w_j v_i phi(|i-j|) v_j.
// Interior-node stationarity of S is equivalent to the solver's fixed point.
double quadratic_action(const kernels::KernelSet& ks, double lambda,
                        std::span<const double> v);

// Fidelity cost J_na + J_bath + lambda int v^2 dt of the velocity profile.
double fidelity_action(const kernels::SpectralTables& tab, const TimeGrid& grid,
                       double lambda, std::span<const double> v);

struct StationarityProbe {
  double grad_solution = 0.0;   // max |dS/dv_i| at the solution
  double grad_perturbed = 0.0;  // same at a 5% sine-perturbed profile
  double ratio = 0.0;           // grad_perturbed / grad_solution
};

// Central finite-difference bump gradient over interior nodes of `action`,
// at the solution and at a 5%-of-max|v| half-sine perturbation of it.
template <class Action>
StationarityProbe stationarity_probe(const TimeGrid& grid, std::span<const double> v_opt,
                                     Action&& action, int stride = 1);

}  // namespace acqudit::validation

#include "acqudit/validation_impl.hpp"
