#pragma once

#include <complex>

#include "acqudit/errors.hpp"

namespace acqudit::specfun {

using Complex = std::complex<double>;

// Gamma(z) for complex z, accurate to >= 10 significant digits on
// -20 <= Re z <= 20, |Im z| <= 20.  Lanczos rational approximation with
// reflection for Re z < 1/2.  Throws PoleError at non-positive integers.
Complex complex_gamma(Complex z);

// log|Gamma(z)|.  Same domain and pole handling as complex_gamma, but works
// entirely in the log domain so that products of several Gamma moduli can be
// accumulated without overflow.
double log_abs_gamma(Complex z);

// |Gamma(z)|^2 = exp(2 log|Gamma(z)|).
double abs_gamma_sq(Complex z);

// log(sinh x) for x > 0, stable against overflow of sinh itself.
double log_sinh(double x);

}  // namespace acqudit::specfun
