#include "acqudit/trajectory.hpp"

#include <cmath>

namespace acqudit {

double Trajectory::max_abs_v() const {
  double m = 0.0;
  for (double vi : v) m = std::max(m, std::abs(vi));
  return m;
}

double Trajectory::kinetic_integral() const {
  double s = 0.0;
  for (int i = 0; i < grid.size(); ++i) s += grid.w[i] * v[i] * v[i];
  return s;
}

Trajectory trajectory_from_velocity(const TimeGrid& grid, std::vector<double> v) {
  Trajectory traj;
  traj.grid = grid;
  traj.x = cumtrapz(grid, v);
  traj.a = central_derivative(grid, v);
  traj.v = std::move(v);
  return traj;
}

Trajectory constant_speed(double v_bar, const TimeGrid& grid) {
  Trajectory traj;
  traj.grid = grid;
  traj.v.assign(grid.size(), v_bar);
  traj.a.assign(grid.size(), 0.0);
  traj.x.resize(grid.size());
  for (int i = 0; i < grid.size(); ++i) traj.x[i] = v_bar * grid.t[i];
  return traj;
}

}  // namespace acqudit
