#pragma once

#include <complex>

#include "acqudit/errors.hpp"

namespace acqudit::morse {

// Morse trap V(q) = D [exp(-2 a q) - 2 exp(-a q)] in scaled units
// (depth in 1/t_B, width in 1/xi, mass in m_B).
struct TrapSpec {
  double depth_D = 2.0;
  double width_a = 1.0;
  double mass_m = 0.5;
};

// Derived eigenstructure for the single-bound-state regime.
//   N          = sqrt(2 m D)/a - 1/2, must satisfy 0 < N < 1
//   omega_bound = -a^2 N^2 / (2 m) < 0
//   bound_norm  = sqrt(2N / Gamma(2N + 1))
struct MorseStructure {
  double N_param = 0.0;
  double omega_bound = 0.0;
  double bound_norm = 0.0;
  double curvature = 0.0;  // a^2 / (2 m), fixes the continuum dispersion
};

// Validates the trap and derives N, omega_bound, bound_norm.
// Throws InvalidTrap for non-positive parameters or a trap with no bound
// state, MultipleStatesError when more than one bound state fits
// (equivalently D >= 9 a^2 / (8 m)).
MorseStructure build_structure(const TrapSpec& trap);

// Continuum frequency omega_eps = a^2 eps^2 / (2 m) and the transition
// frequency gap(eps) = omega_eps - omega_bound > 0.
double continuum_frequency(const MorseStructure& s, double eps);
double gap(const MorseStructure& s, double eps);

// Continuum normalisation  N(kappa) = |Gamma(-N - i kappa)| sqrt(kappa sinh(2 pi kappa)) / pi.
double continuum_norm(const MorseStructure& s, double kappa);

// Bound-to-continuum transition element driven by the trap motion:
//   mu(kappa) = 2 D N0 N(kappa) / (2N+1)^2
//               * [ |Gamma(N+2+i kappa)|^2 - (2N+1) |Gamma(N+1+i kappa)|^2 ].
double mu_nonadiabatic(const MorseStructure& s, const TrapSpec& trap, double kappa);

// Phonon-assisted bound-to-continuum element d(eps, k) = <0| e^{-ikq} |eps>
// for the single bound state.  d_abs_sq is |d|^2 computed from Gamma moduli
// only (log-domain; the unimodular phase factors drop out).
std::complex<double> d_phonon(const MorseStructure& s, double eps, double k);
double d_abs_sq(const MorseStructure& s, double eps, double k);

// Dipole element <0| q |eps>; real and negative for eps > 0.
double dipole_D(const MorseStructure& s, double eps);

}  // namespace acqudit::morse
