#pragma once

#include "acqudit/kernels.hpp"
#include "acqudit/trajectory.hpp"

namespace acqudit::oracles {

// Reference evaluations of the fidelity exponent as literal double-time
// integrals.  Deliberately independent of the spectral fast paths in
// fidelity.cpp: nested trapezoid loops over (t1, t2) and direct cosines.
// Used only for validation and tests; quadratic in the grid size.

// sum_eps w (mu/gap)^2 intint v(t1) v(t2) cos[gap (t1 - t2)] dt1 dt2
double j_nonadiabatic_double_integral(const Trajectory& traj,
                                      const kernels::SpectralTables& tab);

// sum_{eps,k} w W intint cos[(gap+Omega)(t1-t2) + k (x(t1)-x(t2))] dt1 dt2
double j_bath_double_integral(const Trajectory& traj,
                              const kernels::SpectralTables& tab);

}  // namespace acqudit::oracles
