#include <doctest.h>

#include <cmath>

#include "acqudit/bath.hpp"

using namespace acqudit;

TEST_CASE("unit system relations hold exactly") {
  // t_B = xi / (sqrt(2) c) and t_B / xi^2 = 1 with c = 1/sqrt(2)
  CHECK(bath::UnitSystem::t_B ==
        bath::UnitSystem::xi / (std::sqrt(2.0) * bath::UnitSystem::c_sound));
  CHECK(bath::UnitSystem::t_B / (bath::UnitSystem::xi * bath::UnitSystem::xi) == 1.0);
}

TEST_CASE("Bogoliubov dispersion") {
  CHECK(bath::dispersion(0.0) == 0.0);
  CHECK(bath::dispersion(1.0) == doctest::Approx(std::sqrt(1.5) / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(bath::dispersion(1.0) == doctest::Approx(0.8660254).epsilon(1e-7));
  for (double k : {0.5, 2.0, 5.0}) {
    CHECK(bath::dispersion(k) == bath::dispersion(-k));
  }
}

TEST_CASE("coupling weight") {
  bath::BathSpec off{0.0, 5.0, 5.0, 16, 16};
  bath::BathSpec on{1.0, 5.0, 5.0, 16, 16};
  CHECK(bath::coupling_weight(off, 2.0) == 0.0);
  CHECK(bath::coupling_weight(on, std::sqrt(2.0)) == doctest::Approx(0.7071068).epsilon(1e-7));
  for (double k : {0.3, 1.7, 4.0}) {
    CHECK(bath::coupling_weight(on, k) == bath::coupling_weight(on, -k));
  }
  CHECK(bath::coupling_weight(on, 50.0) == doctest::Approx(1.0).epsilon(1e-3));
  CHECK_THROWS_AS(bath::coupling_weight(on, 0.0), DomainError);
}

TEST_CASE("sonic bound") {
  const auto s = morse::build_structure({2.0, 1.0, 0.5});
  CHECK(bath::sonic_bound(s, 5.0, 0.0) == doctest::Approx(2.765233).epsilon(1e-6));
  CHECK_THROWS_AS(bath::sonic_bound(s, 0.0, 1.0), DomainError);
  const Quadrature eps_grid = midpoint_rule(0.0, 5.0, 64);
  const Quadrature k_grid = midpoint_rule(-5.0, 5.0, 64);
  const double vmin = bath::min_sonic_bound(s, eps_grid, k_grid);
  CHECK(vmin > 0.0);
  CHECK(vmin < bath::sonic_bound(s, 5.0, 0.0));
}

TEST_CASE("spec validation") {
  bath::BathSpec bad{1.0, 5.0, 5.0, 4, 16};
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bath::BathSpec odd{1.0, 5.0, 5.0, 16, 15};
  CHECK_THROWS_AS(odd.validate(), ConfigError);
  bath::BathSpec neg{-0.1, 5.0, 5.0, 16, 16};
  CHECK_THROWS_AS(neg.validate(), ConfigError);
}

TEST_CASE("symmetric k grid excludes zero") {
  const Quadrature k_grid = midpoint_rule(-5.0, 5.0, 200);
  for (double k : k_grid.nodes) CHECK(k != 0.0);
  // half-cell clearance around zero
  double closest = 1e9;
  for (double k : k_grid.nodes) closest = std::min(closest, std::abs(k));
  CHECK(closest == doctest::Approx(0.025).epsilon(1e-12));
}
