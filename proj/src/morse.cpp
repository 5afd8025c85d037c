#include "acqudit/morse.hpp"

#include <cmath>

#include "acqudit/specfun.hpp"

namespace acqudit::morse {

namespace {
constexpr double kPi = 3.14159265358979323846;
using specfun::Complex;
}  // namespace

MorseStructure build_structure(const TrapSpec& trap) {
  if (!(trap.depth_D > 0.0) || !(trap.width_a > 0.0) || !(trap.mass_m > 0.0)) {
    throw InvalidTrap("trap parameters must be positive");
  }
  const double N = std::sqrt(2.0 * trap.mass_m * trap.depth_D) / trap.width_a - 0.5;
  if (N <= 0.0) {
    throw InvalidTrap("trap holds no bound state (sqrt(2mD)/a <= 1/2)");
  }
  if (N >= 1.0) {
    throw MultipleStatesError("trap holds more than one bound state (D >= 9a^2/8m)");
  }
  MorseStructure s;
  s.N_param = N;
  s.curvature = trap.width_a * trap.width_a / (2.0 * trap.mass_m);
  s.omega_bound = -s.curvature * N * N;
  s.bound_norm = std::sqrt(2.0 * N / std::tgamma(2.0 * N + 1.0));
  return s;
}

double continuum_frequency(const MorseStructure& s, double eps) {
  if (eps < 0.0) throw DomainError("continuum_frequency: eps must be >= 0");
  return s.curvature * eps * eps;
}

double gap(const MorseStructure& s, double eps) {
  return continuum_frequency(s, eps) - s.omega_bound;
}

double continuum_norm(const MorseStructure& s, double kappa) {
  if (kappa < 0.0) throw DomainError("continuum_norm: kappa must be >= 0");
  if (kappa == 0.0) return 0.0;
  const double lg = specfun::log_abs_gamma(Complex(-s.N_param, -kappa));
  const double lsh = specfun::log_sinh(2.0 * kPi * kappa);
  return std::exp(lg + 0.5 * (std::log(kappa) + lsh)) / kPi;
}

double mu_nonadiabatic(const MorseStructure& s, const TrapSpec& trap, double kappa) {
  if (kappa < 0.0) throw DomainError("mu_nonadiabatic: kappa must be >= 0");
  if (kappa == 0.0) return 0.0;
  const double N = s.N_param;
  const double g2 = specfun::abs_gamma_sq(Complex(N + 2.0, kappa));
  const double g1 = specfun::abs_gamma_sq(Complex(N + 1.0, kappa));
  const double bracket = g2 - (2.0 * N + 1.0) * g1;
  const double pref = 2.0 * trap.depth_D * s.bound_norm * continuum_norm(s, kappa) /
                      ((2.0 * N + 1.0) * (2.0 * N + 1.0));
  const double mu = pref * bracket;
  if (!std::isfinite(mu)) throw DomainError("mu_nonadiabatic: non-finite result");
  return mu;
}

std::complex<double> d_phonon(const MorseStructure& s, double eps, double k) {
  if (!(eps > 0.0)) throw DomainError("d_phonon: eps must be > 0");
  if (k == 0.0) throw DomainError("d_phonon: k must be nonzero");
  const double N = s.N_param;
  const double g2n1 = std::tgamma(2.0 * N + 1.0);
  // Real amplitude, computed in the log domain except for the sign of sinh(pi k).
  const double log_amp = 0.5 * (std::log(2.0 * N * g2n1 * eps) +
                                specfun::log_sinh(2.0 * kPi * eps)) +
                         specfun::log_sinh(kPi * std::abs(k)) +
                         specfun::log_abs_gamma(Complex(-N, eps)) -
                         2.0 * std::log(kPi) - std::log(g2n1);
  const double amp = (k > 0.0 ? 1.0 : -1.0) * std::exp(log_amp);
  const Complex phase = std::exp(Complex(0.0, k * std::log(2.0 * N + 1.0))) /
                        Complex(0.0, 1.0);
  const Complex gammas = specfun::complex_gamma(Complex(1.0, k)) *
                         specfun::complex_gamma(Complex(N, -eps - k)) *
                         specfun::complex_gamma(Complex(N, eps - k));
  // The matrix element is the conjugate of the amplitude above.
  return std::conj(amp * phase * gammas);
}

double d_abs_sq(const MorseStructure& s, double eps, double k) {
  if (!(eps > 0.0)) throw DomainError("d_abs_sq: eps must be > 0");
  if (k == 0.0) throw DomainError("d_abs_sq: k must be nonzero");
  const double N = s.N_param;
  const double ak = std::abs(k);
  const double log_d2 = std::log(2.0 * N) - std::lgamma(2.0 * N + 1.0) +
                        std::log(eps) + specfun::log_sinh(2.0 * kPi * eps) +
                        2.0 * specfun::log_sinh(kPi * ak) +
                        2.0 * specfun::log_abs_gamma(Complex(-N, eps)) +
                        2.0 * specfun::log_abs_gamma(Complex(1.0, k)) +
                        2.0 * specfun::log_abs_gamma(Complex(N, -eps - k)) +
                        2.0 * specfun::log_abs_gamma(Complex(N, eps - k)) -
                        4.0 * std::log(kPi);
  const double d2 = std::exp(log_d2);
  if (!std::isfinite(d2)) throw DomainError("d_abs_sq: non-finite result");
  return d2;
}

double dipole_D(const MorseStructure& s, double eps) {
  if (!(eps > 0.0)) throw DomainError("dipole_D: eps must be > 0");
  const double N = s.N_param;
  const double root = std::exp(0.5 * (std::log(eps) + specfun::log_sinh(2.0 * kPi * eps) +
                                      std::log(2.0 * N) - std::lgamma(2.0 * N + 1.0)));
  const double d = -std::exp(specfun::log_abs_gamma(Complex(-N, eps))) /
                   (kPi * (N * N + eps * eps)) * root *
                   specfun::abs_gamma_sq(Complex(1.0 + N, eps));
  if (!std::isfinite(d)) throw DomainError("dipole_D: non-finite result");
  return d;
}

}  // namespace acqudit::morse
