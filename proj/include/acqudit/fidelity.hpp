#pragma once

#include <complex>
#include <span>
#include <vector>

#include "acqudit/kernels.hpp"
#include "acqudit/trajectory.hpp"

namespace acqudit::fidelity {

// Survival probability of the trapped wavepacket and the diagnostics that
// qualify it.  survival = exp(-J_nonadiabatic - J_bath).
struct TransportResult {
  double J_nonadiabatic = 0.0;
  double J_bath = 0.0;
  double survival = 1.0;
  double adiabaticity_lhs = 0.0;  // max_t,eps |v mu/gap|
  double adiabaticity_rhs = 0.0;  // min_eps gap
  bool adiabatic = true;
  double speed_margin = 0.0;  // min v_s - max |v|
  bool speed_ok = true;
  double kinetic_integral = 0.0;  // int v^2 dt
};

// Finite-time Fourier transform int_0^{t_f} e^{-i omega tau} f(tau) dtau
// (trapezoid on the sampling grid).
std::complex<double> finite_time_ft(const TimeGrid& grid, std::span<const double> f,
                                    double omega);

// Fidelity exponent of a trajectory:
//   J_na   = sum_eps w (mu/gap)^2 |V(gap)|^2             (velocity PSD)
//   J_bath = sum_{eps,k} w W |int e^{-i[(gap+Omega)t + k x(t)]} dt|^2
TransportResult survival(const Trajectory& traj, const kernels::SpectralTables& tab);

// Same with a counterdiabatic compensation field: the non-adiabatic term
// becomes sum_eps w |int [v mu/gap - i m a D] e^{-i gap t} dt|^2; the bath
// term is unchanged.
TransportResult survival_cdf(const Trajectory& traj, const kernels::SpectralTables& tab);

struct AdiabaticityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool is_adiabatic = false;
};

// max_{t,eps} |v(t) mu/gap|  vs  min_eps gap; "much less" is operationalised
// as lhs < rhs / threshold_factor (default 3).
AdiabaticityCheck adiabaticity_check(const Trajectory& traj,
                                     const kernels::SpectralTables& tab,
                                     double threshold_factor = 3.0);

struct CdfConditionReport {
  std::vector<double> eps;        // grid nodes
  std::vector<double> csd_term;   // 2 Re[i m (mu D / gap) V conj(A)]
  std::vector<double> psd_term;   // m^2 D^2 |A|^2
  double aggregate = 0.0;         // eps-integrated sum of both terms
  bool positive = false;
};

// Per-eps decomposition of the exponent excess incurred by the
// counterdiabatic field; aggregate > 0 exactly when survival >= survival_cdf.
CdfConditionReport cdf_condition_check(const Trajectory& traj,
                                       const kernels::SpectralTables& tab);

struct SpeedCondition {
  double max_v = 0.0;
  double min_vs = 0.0;
  bool ok = false;
};

// max_t |v| against the smallest linearisation bound v_s on the grid.
SpeedCondition speed_condition_check(const Trajectory& traj,
                                     const kernels::SpectralTables& tab);

}  // namespace acqudit::fidelity
