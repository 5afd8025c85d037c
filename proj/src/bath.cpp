#include "acqudit/bath.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace acqudit::bath {

double dispersion(double k) {
  return UnitSystem::c_sound * std::abs(k) * std::sqrt(1.0 + 0.5 * k * k);
}

double coupling_weight(const BathSpec& spec, double k) {
  if (k == 0.0) throw DomainError("coupling_weight: k must be nonzero");
  return spec.g_tilde * spec.g_tilde * std::sqrt(k * k / (k * k + 2.0));
}

double sonic_bound(const morse::MorseStructure& s, double k, double eps) {
  if (k == 0.0) throw DomainError("sonic_bound: k must be nonzero");
  if (eps < 0.0) throw DomainError("sonic_bound: eps must be >= 0");
  return std::abs((morse::gap(s, eps) + dispersion(k)) / k);
}

double min_sonic_bound(const morse::MorseStructure& s, const Quadrature& eps_grid,
                       const Quadrature& k_grid) {
  double vmin = std::numeric_limits<double>::infinity();
  for (double eps : eps_grid.nodes) {
    for (double k : k_grid.nodes) {
      vmin = std::min(vmin, sonic_bound(s, k, eps));
    }
  }
  return vmin;
}

}  // namespace acqudit::bath
