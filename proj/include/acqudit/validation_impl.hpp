#pragma once

#include <cmath>
#include <vector>

namespace acqudit::validation {

template <class Action>
StationarityProbe stationarity_probe(const TimeGrid& grid, std::span<const double> v_opt,
                                     Action&& action, int stride) {
  constexpr double kPi = 3.14159265358979323846;
  std::vector<double> v(v_opt.begin(), v_opt.end());
  double vmax = 0.0;
  for (double x : v) vmax = std::max(vmax, std::abs(x));
  if (vmax == 0.0) vmax = 1.0;
  const double delta = 1e-5 * vmax;

  auto grad_max = [&](std::vector<double>& w) {
    double g = 0.0;
    for (std::size_t i = 1; i + 1 < w.size(); i += stride) {
      const double keep = w[i];
      w[i] = keep + delta;
      const double jp = action(w);
      w[i] = keep - delta;
      const double jm = action(w);
      w[i] = keep;
      g = std::max(g, std::abs(jp - jm) / (2.0 * delta));
    }
    return g;
  };

  StationarityProbe probe;
  probe.grad_solution = grad_max(v);

  std::vector<double> vp(v_opt.begin(), v_opt.end());
  for (int i = 0; i < grid.size(); ++i) {
    vp[i] += 0.05 * vmax * std::sin(kPi * grid.t[i] / grid.t_f);
  }
  probe.grad_perturbed = grad_max(vp);
  probe.ratio = probe.grad_perturbed / std::max(probe.grad_solution, 1e-300);
  return probe;
}

}  // namespace acqudit::validation
