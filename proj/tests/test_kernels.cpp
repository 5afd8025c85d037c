#include <doctest.h>

#include <cmath>
#include <vector>

#include "acqudit/kernels.hpp"

using namespace acqudit;

namespace {
const morse::TrapSpec kTrap{2.0, 1.0, 0.5};
const bath::BathSpec kBath{1.0, 5.0, 5.0, 64, 64};
const bath::BathSpec kVacuum{0.0, 5.0, 5.0, 64, 64};
}  // namespace

TEST_CASE("phi bounds and parity") {
  const auto tab = kernels::build_tables(kTrap, kBath);
  const auto grid = make_time_grid(1.0, 128);
  const auto ks = kernels::build_kernels(tab, grid);
  CHECK(ks.phi[0] > 0.0);
  CHECK(ks.phi1[0] >= 0.0);
  double min_gap = tab.gap[0];
  for (double g : tab.gap) min_gap = std::min(min_gap, g);
  CHECK(ks.phi1[0] <= ks.phi[0] / (min_gap * min_gap) + 1e-12);
  for (int i = 0; i < grid.size(); ++i) {
    CHECK(std::abs(ks.phi[i]) <= ks.phi[0] * (1.0 + 1e-12));
    CHECK(std::isfinite(ks.zeta[i]));
  }
  // even under lag negation via the |lag| evaluator
  CHECK(ks.phi_at(-0.37) == ks.phi_at(0.37));
  CHECK(ks.phi1_at(-0.8) == ks.phi1_at(0.8));
}

TEST_CASE("vacuum kernels vanish; phi1 is coupling-independent") {
  const auto tab0 = kernels::build_tables(kTrap, kVacuum);
  const auto tab1 = kernels::build_tables(kTrap, kBath);
  const auto grid = make_time_grid(1.0, 96);
  const auto ks0 = kernels::build_kernels(tab0, grid);
  const auto ks1 = kernels::build_kernels(tab1, grid);
  for (int i = 0; i < grid.size(); ++i) {
    CHECK(ks0.eta[i] == 0.0);
    CHECK(ks0.zeta[i] == 0.0);
    CHECK(ks0.phi1[i] == ks1.phi1[i]);
    CHECK(ks0.phi[i] == ks1.phi[i]);
  }
}

TEST_CASE("eta cancels on the symmetric k grid; zeta does not") {
  const auto tab = kernels::build_tables(kTrap, kBath);
  const auto grid = make_time_grid(1.0, 96);
  const auto ks = kernels::build_kernels(tab, grid);
  double eta_max = 0.0;
  for (double e : ks.eta) eta_max = std::max(eta_max, std::abs(e));
  CHECK(eta_max < 1e-12);
  CHECK(ks.zeta[grid.size() / 2] > 0.0);
}

TEST_CASE("eta1/zeta1 reduce to eta/zeta on a static trajectory") {
  const auto tab = kernels::build_tables(kTrap, kBath);
  const auto grid = make_time_grid(1.0, 96);
  const auto ks = kernels::build_kernels(tab, grid);
  std::vector<double> x(grid.size(), 0.0), e1, z1;
  kernels::eta1_zeta1_profile(tab, grid, x, e1, z1);
  for (int i = 0; i < grid.size(); ++i) {
    CHECK(std::abs(e1[i] - ks.eta[i]) < 1e-8);
    CHECK(std::abs(z1[i] - ks.zeta[i]) < 1e-8);
  }
}

TEST_CASE("eta1/zeta1 match the closed form for uniform motion") {
  // x(t) = v t makes the phase exactly linear with shifted frequency
  // gap + Omega_k + k v, so the s-integral has the same closed form as the
  // static kernels.  Independent per-node oracle.
  const auto tab = kernels::build_tables(kTrap, {1.0, 5.0, 5.0, 24, 24});
  const auto grid = make_time_grid(0.8, 48);
  const double vbar = 0.3;
  std::vector<double> x(grid.size());
  for (int i = 0; i < grid.size(); ++i) x[i] = vbar * grid.t[i];
  std::vector<double> e1, z1;
  kernels::eta1_zeta1_profile(tab, grid, x, e1, z1);
  for (int it : {0, 13, 29, 47}) {
    double e_ref = 0.0, z_ref = 0.0;
    for (int ie = 0; ie < tab.n_eps(); ++ie) {
      for (int ik = 0; ik < tab.n_k(); ++ik) {
        const double w = tab.weight[static_cast<std::size_t>(ie) * tab.n_k() + ik];
        if (w == 0.0) continue;
        const double k = tab.k_grid.nodes[ik];
        const double osum = tab.omega_sum[static_cast<std::size_t>(ie) * tab.n_k() + ik];
        const double shifted = osum + k * vbar;
        const double t = grid.t[it];
        const double c_int =
            (std::sin(shifted * t) + std::sin(shifted * (grid.t_f - t))) / shifted;
        e_ref += w * k * osum * c_int;
        z_ref += w * k * k * c_int;
      }
    }
    CHECK(e1[it] == doctest::Approx(e_ref).epsilon(1e-10));
    CHECK(z1[it] == doctest::Approx(z_ref).epsilon(1e-10));
  }
}

TEST_CASE("eta1 is nonzero for an accelerating trajectory") {
  const auto tab = kernels::build_tables(kTrap, kBath);
  const auto grid = make_time_grid(1.0, 96);
  std::vector<double> x(grid.size()), e1, z1;
  for (int i = 0; i < grid.size(); ++i) {
    const double t = grid.t[i];
    x[i] = 0.5 * 1.06 * t * t;  // ramp to a supersonic final speed
  }
  kernels::eta1_zeta1_profile(tab, grid, x, e1, z1);
  CHECK(std::abs(e1[grid.size() / 2]) > 1e-3);
}

TEST_CASE("vacuum eta1/zeta1 vanish") {
  const auto tab = kernels::build_tables(kTrap, kVacuum);
  const auto grid = make_time_grid(1.0, 64);
  std::vector<double> x(grid.size()), e1, z1;
  for (int i = 0; i < grid.size(); ++i) x[i] = 0.3 * grid.t[i];
  kernels::eta1_zeta1_profile(tab, grid, x, e1, z1);
  for (int i = 0; i < grid.size(); ++i) {
    CHECK(e1[i] == 0.0);
    CHECK(z1[i] == 0.0);
  }
}

TEST_CASE("K kernel is antisymmetric with zero diagonal") {
  const auto tab = kernels::build_tables(kTrap, {1.0, 5.0, 5.0, 32, 32});
  const auto grid = make_time_grid(1.0, 64);
  std::vector<double> x(grid.size());
  for (int i = 0; i < grid.size(); ++i) x[i] = 0.4 * grid.t[i] * grid.t[i];
  CHECK(kernels::eval_K(tab, grid, x, 0.37, 0.37) == 0.0);
  for (auto [t, tp] : {std::pair{0.2, 0.9}, {0.55, 0.1}, {1.0, 0.3}}) {
    CHECK(kernels::eval_K(tab, grid, x, t, tp) ==
          doctest::Approx(-kernels::eval_K(tab, grid, x, tp, t)).epsilon(1e-12));
  }
  const auto vac = kernels::build_tables(kTrap, {0.0, 5.0, 5.0, 32, 32});
  CHECK(kernels::eval_K(vac, grid, x, 0.2, 0.8) == 0.0);
}

TEST_CASE("grid refinement leaves phi(0) and zeta(t_f/2) stable") {
  const auto grid = make_time_grid(1.0, 64);
  const auto coarse = kernels::build_kernels(kernels::build_tables(kTrap, kBath), grid);
  const auto fine = kernels::build_kernels(
      kernels::build_tables(kTrap, {1.0, 5.0, 5.0, 128, 128}), grid);
  const int mid = grid.size() / 2;
  CHECK(std::abs(fine.phi[0] - coarse.phi[0]) / coarse.phi[0] < 0.005);
  CHECK(std::abs(fine.zeta[mid] - coarse.zeta[mid]) / std::abs(coarse.zeta[mid]) < 0.005);
}

TEST_CASE("trajectory grid mismatch is rejected") {
  const auto tab = kernels::build_tables(kTrap, {1.0, 5.0, 5.0, 16, 16});
  const auto grid = make_time_grid(1.0, 64);
  std::vector<double> x(32, 0.0), e1, z1;
  CHECK_THROWS_AS(kernels::eta1_zeta1_profile(tab, grid, x, e1, z1), GridMismatch);
  CHECK_THROWS_AS(kernels::eval_K(tab, grid, x, 0.1, 0.2), GridMismatch);
}
