#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "acqudit/fidelity.hpp"
#include "acqudit/oracles.hpp"

using namespace acqudit;

namespace {
constexpr double kPi = 3.14159265358979323846;
const morse::TrapSpec kTrap{2.0, 1.0, 0.5};
const double kC = bath::UnitSystem::c_sound;

std::vector<double> random_velocity(const TimeGrid& grid, std::mt19937& rng) {
  std::uniform_real_distribution<double> amp(-0.7, 0.7);
  const double a1 = amp(rng), a2 = amp(rng), b = amp(rng);
  std::vector<double> v(grid.size());
  for (int i = 0; i < grid.size(); ++i) {
    const double u = grid.t[i] / grid.t_f;
    v[i] = a1 * std::sin(kPi * u) + a2 * std::sin(2 * kPi * u) + b * u;
  }
  return v;
}
}  // namespace

TEST_CASE("finite-time Fourier transform") {
  const TimeGrid grid = make_time_grid(1.0, 2001);
  std::vector<double> zero(grid.size(), 0.0), one(grid.size(), 1.0);
  CHECK(std::abs(fidelity::finite_time_ft(grid, zero, 3.0)) == 0.0);
  CHECK(fidelity::finite_time_ft(grid, one, 0.0).real() == doctest::Approx(1.0).epsilon(1e-14));
  const std::complex<double> got = fidelity::finite_time_ft(grid, one, 2.0);
  const std::complex<double> want =
      (1.0 - std::exp(std::complex<double>(0.0, -2.0))) / std::complex<double>(0.0, 2.0);
  CHECK(std::abs(got - want) < 1e-6);  // trapezoid at h = 5e-4
  std::vector<double> bad(7, 0.0);
  CHECK_THROWS_AS(fidelity::finite_time_ft(grid, bad, 1.0), GridMismatch);
}

TEST_CASE("static trap in vacuum survives with certainty") {
  const auto tab = kernels::build_tables(kTrap, {0.0, 5.0, 5.0, 32, 32});
  const Trajectory still = constant_speed(0.0, make_time_grid(1.0, 64));
  const auto res = fidelity::survival(still, tab);
  CHECK(res.J_nonadiabatic == 0.0);
  CHECK(res.J_bath == 0.0);
  CHECK(res.survival == 1.0);
}

TEST_CASE("static trap in the bath still dissipates") {
  const auto tab = kernels::build_tables(kTrap, {1.0, 5.0, 5.0, 64, 64});
  const Trajectory still = constant_speed(0.0, make_time_grid(1.0, 64));
  const auto res = fidelity::survival(still, tab);
  CHECK(res.J_nonadiabatic == 0.0);
  CHECK(res.J_bath > 0.0);
  CHECK(res.survival < 1.0);
  CHECK(res.survival > 0.0);
}

TEST_CASE("survival is a probability with nonnegative exponent parts") {
  const auto tab = kernels::build_tables(kTrap, {1.0, 5.0, 5.0, 48, 48});
  const TimeGrid grid = make_time_grid(1.3, 96);
  std::mt19937 rng(7);
  for (int i = 0; i < 5; ++i) {
    const Trajectory traj = trajectory_from_velocity(grid, random_velocity(grid, rng));
    const auto res = fidelity::survival(traj, tab);
    CHECK(res.J_nonadiabatic >= 0.0);
    CHECK(res.J_bath >= 0.0);
    CHECK(res.survival > 0.0);
    CHECK(res.survival <= 1.0);
  }
}

TEST_CASE("fast paths match the double-time-integral oracles") {
  const auto tab = kernels::build_tables(kTrap, {1.0, 5.0, 5.0, 24, 24});
  const TimeGrid grid = make_time_grid(1.0, 64);
  std::mt19937 rng(2024);
  for (int i = 0; i < 3; ++i) {
    const Trajectory traj = trajectory_from_velocity(grid, random_velocity(grid, rng));
    const auto res = fidelity::survival(traj, tab);
    CHECK(res.J_nonadiabatic ==
          doctest::Approx(oracles::j_nonadiabatic_double_integral(traj, tab)).epsilon(1e-8));
    CHECK(res.J_bath ==
          doctest::Approx(oracles::j_bath_double_integral(traj, tab)).epsilon(1e-8));
  }
}

TEST_CASE("survival decreases with coupling at a matched trajectory") {
  const auto weak = kernels::build_tables(kTrap, {0.2, 5.0, 5.0, 64, 64});
  const auto strong = kernels::build_tables(kTrap, {1.0, 5.0, 5.0, 64, 64});
  const TimeGrid grid = make_time_grid(1.0, 96);
  std::vector<double> v(grid.size());
  for (int i = 0; i < grid.size(); ++i) v[i] = 1.5 * kC * grid.t[i] / grid.t_f;
  const Trajectory traj = trajectory_from_velocity(grid, std::move(v));
  CHECK(fidelity::survival(traj, strong).survival <= fidelity::survival(traj, weak).survival);
}

TEST_CASE("counterdiabatic exponent: static limit and identity") {
  const auto tab = kernels::build_tables(kTrap, {1.0, 5.0, 5.0, 48, 48});
  const TimeGrid grid = make_time_grid(1.0, 96);
  const Trajectory still = trajectory_from_velocity(grid, std::vector<double>(grid.size(), 0.0));
  const auto plain = fidelity::survival(still, tab);
  const auto with_cdf = fidelity::survival_cdf(still, tab);
  CHECK(with_cdf.J_nonadiabatic == plain.J_nonadiabatic);
  CHECK(with_cdf.J_bath == plain.J_bath);

  // J_cdf - J_na equals the eps-integrated condition for any trajectory
  std::mt19937 rng(55);
  for (int i = 0; i < 5; ++i) {
    const Trajectory traj = trajectory_from_velocity(grid, random_velocity(grid, rng));
    const double lhs = fidelity::survival_cdf(traj, tab).J_nonadiabatic -
                       fidelity::survival(traj, tab).J_nonadiabatic;
    const auto cond = fidelity::cdf_condition_check(traj, tab);
    CHECK(lhs == doctest::Approx(cond.aggregate).epsilon(1e-9));
    CHECK((cond.aggregate > 0.0) ==
          (fidelity::survival(traj, tab).survival >= fidelity::survival_cdf(traj, tab).survival));
  }
}

TEST_CASE("constant-speed protocol") {
  const TimeGrid grid = make_time_grid(2.0, 64);
  const Trajectory traj = constant_speed(1.5 * kC, grid);
  CHECK(traj.v.front() == 1.5 * kC);
  CHECK(traj.v.back() == 1.5 * kC);
  CHECK(traj.x.back() == doctest::Approx(3.0 * kC).epsilon(1e-14));
  for (double a : traj.a) CHECK(a == 0.0);
  const Trajectory still = constant_speed(0.0, grid);
  CHECK(still.max_abs_v() == 0.0);
}

TEST_CASE("adiabaticity check anchors") {
  const auto tab = kernels::build_tables(kTrap, {1.0, 5.0, 5.0, 200, 200});
  const TimeGrid grid = make_time_grid(1.0, 64);
  const auto slow = fidelity::adiabaticity_check(constant_speed(0.1 * kC, grid), tab);
  CHECK(slow.rhs == doctest::Approx(0.8358).epsilon(0.01));
  CHECK(slow.is_adiabatic);
  const auto fast = fidelity::adiabaticity_check(constant_speed(4.0 * kC, grid), tab);
  CHECK_FALSE(fast.is_adiabatic);
  CHECK(fast.lhs > slow.lhs);
}

TEST_CASE("speed condition flags supersonic profiles") {
  const auto tab = kernels::build_tables(kTrap, {1.0, 5.0, 5.0, 64, 64});
  const TimeGrid grid = make_time_grid(1.0, 64);
  const auto ok = fidelity::speed_condition_check(constant_speed(0.0, grid), tab);
  CHECK(ok.ok);
  const auto bad = fidelity::speed_condition_check(constant_speed(10.0 * kC, grid), tab);
  CHECK_FALSE(bad.ok);
  CHECK(bad.min_vs == ok.min_vs);
}

TEST_CASE("grid mismatch is rejected") {
  const auto tab = kernels::build_tables(kTrap, {1.0, 5.0, 5.0, 16, 16});
  Trajectory traj = constant_speed(0.1, make_time_grid(1.0, 64));
  traj.v.pop_back();
  CHECK_THROWS_AS(fidelity::survival(traj, tab), GridMismatch);
}
