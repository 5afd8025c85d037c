#pragma once

#include "acqudit/errors.hpp"
#include "acqudit/grid.hpp"
#include "acqudit/morse.hpp"

namespace acqudit::bath {

// Scaled unit system: lengths in the phonon coherence length xi, times in
// t_B = xi / (sqrt(2) c), masses in the phonon mass m_B.  With
// xi = t_B = m_B = 1 (and hbar = 1) the sound speed becomes c = 1/sqrt(2),
// which keeps t_B / xi^2 = 1 exactly.  User-facing speeds are quoted in
// multiples of c.
struct UnitSystem {
  static constexpr double xi = 1.0;
  static constexpr double t_B = 1.0;
  static constexpr double m_B = 1.0;
  static constexpr double c_sound = 0.70710678118654752440;  // 1/sqrt(2)
};

// Bath parameters: effective coupling strength g_tilde (1/t_B; confinement
// length, condensate density and 2*pi factors are absorbed into it) and the
// spectral cutoffs / grid sizes for the (eps, k) quadrature.
struct BathSpec {
  double g_tilde = 1.0;
  double eps_max = 5.0;
  double k_max = 5.0;
  int n_eps = 200;
  int n_k = 200;

  void validate() const {
    if (g_tilde < 0.0) throw ConfigError("bath: g_tilde must be >= 0");
    if (!(eps_max > 0.0) || !(k_max > 0.0))
      throw ConfigError("bath: cutoffs must be > 0");
    if (n_eps < 8 || n_k < 8) throw ConfigError("bath: n_eps, n_k must be >= 8");
    if (n_k % 2 != 0) throw ConfigError("bath: n_k must be even");
  }
};

// Bogoliubov dispersion Omega_k = c |k| sqrt(1 + k^2/2); even, gapless.
double dispersion(double k);

// Squared spectral coupling weight W_g(k) = g_tilde^2 sqrt(k^2 / (k^2 + 2)),
// even in k and -> g_tilde^2 for |k| -> inf.
double coupling_weight(const BathSpec& spec, double k);

// Speed bound v_s(eps, k) = |(gap(eps) + Omega_k) / k| below which the
// frequency-modulated kernel may be linearised.
double sonic_bound(const morse::MorseStructure& s, double k, double eps);

// Minimum of v_s over the quadrature grid.
double min_sonic_bound(const morse::MorseStructure& s, const Quadrature& eps_grid,
                       const Quadrature& k_grid);

}  // namespace acqudit::bath
