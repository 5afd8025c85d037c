#pragma once

#include <complex>
#include <span>
#include <vector>

#include "acqudit/bath.hpp"
#include "acqudit/grid.hpp"
#include "acqudit/morse.hpp"

namespace acqudit::kernels {

// Immutable per-(trap, bath, grid) cache of everything the kernels and the
// fidelity exponent need: transition elements on the eps grid, dispersion on
// the k grid, and the combined spectral weight
//   weight(eps, k) = w_eps w_k W_g(k) |d(eps, k)|^2
// together with the total oscillation frequency gap(eps) + Omega_k.
struct SpectralTables {
  morse::TrapSpec trap;
  morse::MorseStructure structure;
  bath::BathSpec spec;
  Quadrature eps_grid;  // midpoint nodes on (0, eps_max)
  Quadrature k_grid;    // symmetric midpoint nodes on (-k_max, k_max), no 0

  std::vector<double> gap;          // per eps node
  std::vector<double> mu;           // per eps node
  std::vector<double> mu_over_gap;  // per eps node
  std::vector<double> dipole;       // per eps node
  std::vector<double> omega_k;      // per k node
  std::vector<double> weight;       // n_eps * n_k, row-major in eps
  std::vector<double> omega_sum;    // n_eps * n_k: gap + Omega_k

  int n_eps() const { return eps_grid.size(); }
  int n_k() const { return k_grid.size(); }
  double weight_at(int ie, int ik) const { return weight[ie * n_k() + ik]; }
  double omega_sum_at(int ie, int ik) const { return omega_sum[ie * n_k() + ik]; }
  bool has_bath() const { return spec.g_tilde > 0.0; }
};

SpectralTables build_tables(const morse::TrapSpec& trap, const bath::BathSpec& spec,
                            int jobs = 1);

// Memory kernels of the linearised transport equation, sampled on the time
// grid.  eta and zeta carry the analytic inner s-integral
//   C(t; W) = int_0^{t_f} cos[W (t - s)] ds = [sin(W t) + sin(W (t_f - t))]/W,
// phi and phi1 are stored on the lag grid [0, t_f] and evaluated at |lag|.
struct KernelSet {
  TimeGrid grid;
  std::vector<double> eta;   // per time node
  std::vector<double> zeta;  // per time node
  std::vector<double> phi;   // per lag node
  std::vector<double> phi1;  // per lag node

  // Linear interpolation on the lag grid; lag may be negative (even kernels).
  double phi_at(double lag) const;
  double phi1_at(double lag) const;
};

KernelSet build_kernels(const SpectralTables& tab, const TimeGrid& grid, int jobs = 1);

// Nonlinear kernels along a trajectory x(t) (frequency-modulated phases):
//   eta1(t) = sum w k (gap+Omega) W int_0^{t_f} cos[(gap+Omega)(t-s) + k (x(t)-x(s))] ds
//   zeta1(t) = same with k^2 W.
// The s-integral is composite trapezoid on the grid.  Profile form computes
// every time node at once.
void eta1_zeta1_profile(const SpectralTables& tab, const TimeGrid& grid,
                        std::span<const double> x, std::vector<double>& eta1,
                        std::vector<double>& zeta1);

// Single-node convenience wrapper (t must be a grid node index).
std::pair<double, double> eval_eta1_zeta1(const SpectralTables& tab, const TimeGrid& grid,
                                          std::span<const double> x, int time_index);

// Antisymmetric frequency-modulated kernel
//   K(t, t') = sum w k W sin[(gap+Omega)(t-t') + k (x(t) - x(t'))]
// with x linearly interpolated between grid nodes.
double eval_K(const SpectralTables& tab, const TimeGrid& grid, std::span<const double> x,
              double t, double t_prime);

}  // namespace acqudit::kernels
