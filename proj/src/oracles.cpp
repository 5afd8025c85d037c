#include "acqudit/oracles.hpp"

#include <cmath>

namespace acqudit::oracles {

double j_nonadiabatic_double_integral(const Trajectory& traj,
                                      const kernels::SpectralTables& tab) {
  const TimeGrid& g = traj.grid;
  const int nt = g.size();
  double total = 0.0;
  for (int ie = 0; ie < tab.n_eps(); ++ie) {
    const double omega = tab.gap[ie];
    const double c = tab.mu_over_gap[ie];
    double acc = 0.0;
    for (int i = 0; i < nt; ++i) {
      for (int j = 0; j < nt; ++j) {
        acc += g.w[i] * g.w[j] * traj.v[i] * traj.v[j] *
               std::cos(omega * (g.t[i] - g.t[j]));
      }
    }
    total += tab.eps_grid.weights[ie] * c * c * acc;
  }
  return total;
}

double j_bath_double_integral(const Trajectory& traj,
                              const kernels::SpectralTables& tab) {
  if (!tab.has_bath()) return 0.0;
  const TimeGrid& g = traj.grid;
  const int nt = g.size();
  const int nk = tab.n_k();
  double total = 0.0;
  for (int ie = 0; ie < tab.n_eps(); ++ie) {
    const std::size_t row = static_cast<std::size_t>(ie) * nk;
    for (int ik = 0; ik < nk; ++ik) {
      const double w = tab.weight[row + ik];
      if (w == 0.0) continue;
      const double osum = tab.omega_sum[row + ik];
      const double k = tab.k_grid.nodes[ik];
      double acc = 0.0;
      for (int i = 0; i < nt; ++i) {
        for (int j = 0; j < nt; ++j) {
          acc += g.w[i] * g.w[j] *
                 std::cos(osum * (g.t[i] - g.t[j]) + k * (traj.x[i] - traj.x[j]));
        }
      }
      total += w * acc;
    }
  }
  return total;
}

}  // namespace acqudit::oracles
