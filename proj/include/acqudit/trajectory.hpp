#pragma once

#include <span>
#include <vector>

#include "acqudit/grid.hpp"

namespace acqudit {

// Trap-center trajectory sampled on a uniform time grid.  x(0) = 0 and x is
// the cumulative trapezoid integral of v; a is the centered difference of v
// (one-sided at the ends).
struct Trajectory {
  TimeGrid grid;
  std::vector<double> x;
  std::vector<double> v;
  std::vector<double> a;

  double max_abs_v() const;
  double distance() const { return x.empty() ? 0.0 : x.back(); }
  double kinetic_integral() const;  // int v^2 dt
};

// Builds x and a from a sampled velocity profile.
Trajectory trajectory_from_velocity(const TimeGrid& grid, std::vector<double> v);

// Constant-speed protocol: v = v_bar, x = v_bar t, a = 0.
Trajectory constant_speed(double v_bar, const TimeGrid& grid);

}  // namespace acqudit
