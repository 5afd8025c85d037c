#include <doctest.h>

#include <cmath>
#include <vector>

#include "acqudit/solvers.hpp"
#include "acqudit/validation.hpp"

using namespace acqudit;

namespace {
const morse::TrapSpec kTrap{2.0, 1.0, 0.5};
const double kC = bath::UnitSystem::c_sound;

kernels::SpectralTables tables(double g_tilde, int n = 64) {
  return kernels::build_tables(kTrap, {g_tilde, 5.0, 5.0, n, n});
}
}  // namespace

TEST_CASE("greens2 anchors, symmetry, boundary values") {
  CHECK(solvers::greens2(0.25, 0.5, 1.0, 1.0) == doctest::Approx(-0.125).epsilon(1e-15));
  for (auto [t, s] : {std::pair{0.1, 0.8}, {0.6, 0.3}, {0.5, 0.5}}) {
    CHECK(solvers::greens2(t, s, 1.0, 2.0) ==
          doctest::Approx(solvers::greens2(s, t, 1.0, 2.0)).epsilon(1e-15));
  }
  CHECK(solvers::greens2(0.0, 0.4, 1.0, 1.0) == 0.0);
  CHECK(solvers::greens2(1.0, 0.4, 1.0, 1.0) == 0.0);
  // continuity across t = s
  const double below = solvers::greens2(0.4 - 1e-12, 0.4, 1.0, 1.0);
  const double above = solvers::greens2(0.4 + 1e-12, 0.4, 1.0, 1.0);
  CHECK(std::abs(below - above) < 1e-11);
}

TEST_CASE("greens3 anchors and boundary values") {
  CHECK(solvers::greens3(1.0, 0.5, 1.0) == doctest::Approx(0.25).epsilon(1e-15));
  for (double s : {0.0, 0.3, 0.9}) CHECK(solvers::greens3(0.0, s, 1.0) == 0.0);
  const double below = solvers::greens3(0.62 - 1e-12, 0.62, 1.0);
  const double above = solvers::greens3(0.62 + 1e-12, 0.62, 1.0);
  CHECK(std::abs(below - above) < 1e-11);
}

TEST_CASE("vacuum with homogeneous BCs returns the static trajectory") {
  const auto tab = tables(0.0);
  const auto ks = kernels::build_kernels(tab, make_time_grid(1.0, 64));
  solvers::SolverSettings st;
  const Trajectory traj = solvers::solve_linear(ks, st, {0.0, 0.0});
  CHECK(traj.max_abs_v() < 1e-14);
  CHECK(std::abs(traj.distance()) < 1e-14);
}

TEST_CASE("solve_linear meets BCs exactly and converges") {
  const auto tab = tables(1.0, 128);
  const auto ks = kernels::build_kernels(tab, make_time_grid(1.0, 128));
  solvers::SolverSettings st;
  solvers::NeumannReport rep;
  const Trajectory traj = solvers::solve_linear(ks, st, {0.0, 1.5 * kC}, &rep);
  CHECK(traj.v.front() == 0.0);
  CHECK(traj.v.back() == doctest::Approx(1.5 * kC).epsilon(1e-15));
  CHECK(traj.x.front() == 0.0);
  CHECK(rep.fredholm_residual < 10.0 * st.tol);
  CHECK(rep.last_update < st.tol);
  // x is the running trapezoid integral of v by construction
  const std::vector<double> xs = cumtrapz(traj.grid, traj.v);
  for (int i = 0; i < traj.grid.size(); ++i) {
    CHECK(traj.x[i] == doctest::Approx(xs[i]).epsilon(1e-12));
  }
  // independent residual recomputation
  CHECK(solvers::fredholm_residual(ks, st, {0.0, 1.5 * kC}, traj) < 10.0 * st.tol);
}

TEST_CASE("Neumann partial sums settle after the first few terms") {
  const auto tab = tables(1.0, 128);
  const auto ks = kernels::build_kernels(tab, make_time_grid(1.0, 128));
  solvers::SolverSettings st;
  st.keep_history = true;
  solvers::NeumannReport rep;
  solvers::solve_linear(ks, st, {0.0, 1.5 * kC}, &rep);
  REQUIRE(rep.partials.size() == 51);
  double diff = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < rep.partials[50].size(); ++i) {
    diff = std::max(diff, std::abs(rep.partials[50][i] - rep.partials[3][i]));
    scale = std::max(scale, std::abs(rep.partials[50][i]));
  }
  CHECK(diff / scale < 1e-3);
}

TEST_CASE("NonConvergence carries the last update norm") {
  const auto tab = tables(1.0, 48);
  const auto ks = kernels::build_kernels(tab, make_time_grid(3.0, 64));
  solvers::SolverSettings st;
  st.lambda = 0.004;  // huge kernel-to-stiffness ratio, series diverges
  st.series_terms = 10;
  CHECK_THROWS_AS(solvers::solve_linear(ks, st, {0.0, 1.5 * kC}), NonConvergence);
}

TEST_CASE("position-BC solve reproduces the velocity-BC profile") {
  const auto tab = tables(1.0, 128);
  const auto ks = kernels::build_kernels(tab, make_time_grid(1.0, 128));
  solvers::SolverSettings st;
  const Trajectory lin = solvers::solve_linear(ks, st, {0.0, 1.5 * kC});
  const Trajectory pos = solvers::solve_linear_position_bc(ks, st, lin.distance());
  double diff = 0.0;
  for (int i = 0; i < lin.grid.size(); ++i) {
    diff = std::max(diff, std::abs(lin.v[i] - pos.v[i]));
  }
  CHECK(diff / lin.max_abs_v() < 1e-6);
  CHECK(pos.distance() == doctest::Approx(lin.distance()).epsilon(1e-12));
  CHECK(pos.v.front() == 0.0);
}

TEST_CASE("position-BC vacuum with xf = 0 is static") {
  const auto tab = tables(0.0);
  const auto ks = kernels::build_kernels(tab, make_time_grid(1.0, 64));
  solvers::SolverSettings st;
  const Trajectory traj = solvers::solve_linear_position_bc(ks, st, 0.0);
  CHECK(traj.max_abs_v() < 1e-14);
}

TEST_CASE("Picard fixed point equals the linear solution without a bath") {
  const auto tab = tables(0.0, 48);
  const auto ks = kernels::build_kernels(tab, make_time_grid(1.0, 64));
  solvers::SolverSettings st;
  st.tol = 1e-11;
  st.picard_iters = 60;
  const Trajectory lin = solvers::solve_linear(ks, st, {0.0, 1.5 * kC});
  solvers::PicardReport rep;
  const Trajectory pic = solvers::solve_nonlinear_picard(ks, tab, st, {0.0, 1.5 * kC}, &rep);
  CHECK(rep.converged);
  double diff = 0.0;
  for (int i = 0; i < lin.grid.size(); ++i) {
    diff = std::max(diff, std::abs(lin.v[i] - pic.v[i]));
  }
  CHECK(diff / lin.max_abs_v() < 1e-7);
}

TEST_CASE("Picard meets BCs exactly and logs decreasing residuals") {
  const auto tab = tables(1.0, 48);
  const auto ks = kernels::build_kernels(tab, make_time_grid(1.0, 64));
  solvers::SolverSettings st;
  st.tol = 1e-10;
  st.picard_iters = 40;
  solvers::PicardReport rep;
  const Trajectory pic = solvers::solve_nonlinear_picard(ks, tab, st, {0.0, 1.5 * kC}, &rep);
  CHECK(pic.v.front() == 0.0);
  CHECK(pic.v.back() == doctest::Approx(1.5 * kC).epsilon(1e-15));
  REQUIRE(rep.residuals.size() >= 6);
  for (std::size_t i = 2; i < rep.residuals.size(); ++i) {
    CHECK(rep.residuals[i] < rep.residuals[i - 1]);
  }
}

TEST_CASE("Picard exhaustion raises NonConvergence") {
  const auto tab = tables(1.0, 32);
  const auto ks = kernels::build_kernels(tab, make_time_grid(1.0, 48));
  solvers::SolverSettings st;
  st.tol = 1e-14;
  st.picard_iters = 2;
  CHECK_THROWS_AS(solvers::solve_nonlinear_picard(ks, tab, st, {0.0, 1.5 * kC}),
                  NonConvergence);
}

TEST_CASE("dissipationless solver") {
  const auto tab = tables(0.0, 96);
  const auto ks = kernels::build_kernels(tab, make_time_grid(0.5, 96));
  solvers::SolverSettings st;  // lambda = lambda1 = 1

  SUBCASE("homogeneous problem is static") {
    st.lambda1 = 0.0;
    const Trajectory traj = solvers::solve_dissipationless(ks, st, {0.0, 0.0});
    CHECK(traj.max_abs_v() < 1e-14);
  }
  SUBCASE("boundary speed reached exactly") {
    const Trajectory traj = solvers::solve_dissipationless(ks, st, {0.0, 1.5 * kC});
    CHECK(traj.v.back() == doctest::Approx(1.5 * kC).epsilon(1e-15));
    CHECK(traj.v.front() == 0.0);
    CHECK(traj.distance() > 0.0);  // realized distance is reported, not prescribed
  }
  SUBCASE("lambda1 sign flip mirrors the profile") {
    const Trajectory plus = solvers::solve_dissipationless(ks, st, {0.0, 0.0});
    st.lambda1 = -1.0;
    const Trajectory minus = solvers::solve_dissipationless(ks, st, {0.0, 0.0});
    for (int i = 0; i < plus.grid.size(); ++i) {
      CHECK(plus.v[i] == doctest::Approx(-minus.v[i]).epsilon(1e-12));
    }
  }
}

TEST_CASE("returned trajectory is the discrete stationary point of the action") {
  const auto tab = tables(1.0, 64);
  const auto ks = kernels::build_kernels(tab, make_time_grid(1.0, 96));
  solvers::SolverSettings st;
  st.tol = 1e-12;
  st.series_terms = 80;
  const Trajectory lin = solvers::solve_linear(ks, st, {0.0, 1.5 * kC});
  const auto probe = validation::stationarity_probe(
      lin.grid, lin.v,
      [&](const std::vector<double>& v) {
        return validation::quadratic_action(ks, st.lambda, v);
      },
      2);
  CHECK(probe.ratio > 100.0);
}

TEST_CASE("settings validation") {
  solvers::SolverSettings st;
  st.lambda = 0.0;
  CHECK_THROWS_AS(st.validate(), ConfigError);
  st = {};
  st.series_terms = 2;
  CHECK_THROWS_AS(st.validate(), ConfigError);
  st = {};
  st.tol = 0.0;
  CHECK_THROWS_AS(st.validate(), ConfigError);
}
