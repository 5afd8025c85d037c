#include "acqudit/grid.hpp"

#include <cmath>

namespace acqudit {

Quadrature midpoint_rule(double a, double b, int n_cells) {
  if (n_cells < 1 || !(b > a)) throw ConfigError("midpoint_rule: bad interval");
  Quadrature q;
  q.nodes.resize(n_cells);
  q.weights.assign(n_cells, (b - a) / n_cells);
  const double dx = (b - a) / n_cells;
  for (int i = 0; i < n_cells; ++i) q.nodes[i] = a + (i + 0.5) * dx;
  return q;
}

TimeGrid make_time_grid(double t_f, int n_t) {
  if (n_t < 2 || t_f <= 0.0) throw ConfigError("make_time_grid: bad arguments");
  TimeGrid g;
  g.t_f = t_f;
  g.h = t_f / (n_t - 1);
  g.t.resize(n_t);
  g.w.assign(n_t, g.h);
  for (int i = 0; i < n_t; ++i) g.t[i] = i * g.h;
  g.t.back() = t_f;
  g.w.front() = 0.5 * g.h;
  g.w.back() = 0.5 * g.h;
  return g;
}

double trapz(const TimeGrid& g, std::span<const double> f) {
  double s = 0.0;
  for (int i = 0; i < g.size(); ++i) s += g.w[i] * f[i];
  return s;
}

std::vector<double> cumtrapz(const TimeGrid& g, std::span<const double> f) {
  std::vector<double> out(g.size(), 0.0);
  for (int i = 1; i < g.size(); ++i) {
    out[i] = out[i - 1] + 0.5 * g.h * (f[i - 1] + f[i]);
  }
  return out;
}

std::vector<double> central_derivative(const TimeGrid& g, std::span<const double> f) {
  const int n = g.size();
  std::vector<double> out(n, 0.0);
  if (n < 2) return out;
  out[0] = (f[1] - f[0]) / g.h;
  out[n - 1] = (f[n - 1] - f[n - 2]) / g.h;
  for (int i = 1; i < n - 1; ++i) out[i] = (f[i + 1] - f[i - 1]) / (2.0 * g.h);
  return out;
}

}  // namespace acqudit
