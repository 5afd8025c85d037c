#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "acqudit/errors.hpp"

namespace acqudit {

// Sizes of the discretisation: uniform time grid on [0, t_f] with n_t nodes
// (endpoints included) and midpoint quadrature grids for the continuum index
// (n_eps cells on (0, eps_max)) and the phonon wave vector (n_k cells on
// (-k_max, k_max), symmetric, k = 0 excluded).
struct GridSpec {
  double t_f = 1.0;
  int n_t = 200;
  int n_eps = 200;
  int n_k = 200;

  void validate() const {
    if (t_f <= 0.0) throw ConfigError("grid: t_f must be > 0");
    if (n_t < 33) throw ConfigError("grid: n_t must be >= 33");
    if (n_eps < 8 || n_k < 8) throw ConfigError("grid: n_eps, n_k must be >= 8");
    if (n_k % 2 != 0) throw ConfigError("grid: n_k must be even");
  }
};

// One-dimensional quadrature rule: sum_i weights[i] * f(nodes[i]).
struct Quadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
  int size() const { return static_cast<int>(nodes.size()); }
};

// Composite midpoint rule (1-point Gauss-Legendre per cell) on [a, b].
// Nodes sit strictly inside the interval, half a cell away from the ends.
Quadrature midpoint_rule(double a, double b, int n_cells);

// Uniform time grid with trapezoid weights.
struct TimeGrid {
  double t_f = 0.0;
  double h = 0.0;
  std::vector<double> t;  // n_t nodes, t[0] = 0, t[n-1] = t_f
  std::vector<double> w;  // trapezoid weights: h/2 at ends, h inside

  int size() const { return static_cast<int>(t.size()); }
  bool compatible(const TimeGrid& other) const {
    return size() == other.size() && std::abs(t_f - other.t_f) < 1e-12 * (1.0 + t_f);
  }
};

TimeGrid make_time_grid(double t_f, int n_t);

// Trapezoid integral of samples on a uniform grid.
double trapz(const TimeGrid& g, std::span<const double> f);

// Running trapezoid integral; out[i] = integral of f over [0, t_i].
std::vector<double> cumtrapz(const TimeGrid& g, std::span<const double> f);

// First derivative by centered differences (one-sided at the ends).
std::vector<double> central_derivative(const TimeGrid& g, std::span<const double> f);

}  // namespace acqudit
