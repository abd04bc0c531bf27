#include "bellsim/sweep.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace bellsim;
using Catch::Matchers::WithinAbs;

namespace {

constexpr double kInvSqrt2 = 0.7071067811865476;

SweepGrid grid_of(int n) {
  SweepGrid g;
  g.axis1.n = n;
  g.axis2.n = n;
  return g;
}

}  // namespace

TEST_CASE("grid nodes include both endpoints exactly") {
  const AxisRange ax{"t", 0.0, 1.0, 41};
  CHECK(ax.at(0) == 0.0);
  CHECK(ax.at(40) == 1.0);
  CHECK_THAT(ax.at(28), WithinAbs(0.7, 1e-15));
}

TEST_CASE("a degenerate grid matches pointwise evaluation") {
  const Surface s = sweep_info_gain(grid_of(2), BasisKind::kBell, std::nullopt);
  const MeasurementBasis bell = bell_basis();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double direct = info_gain(
          bell, BeamsplitterParams::from_transmission(s.grid.axis1.at(i), s.grid.axis2.at(j)));
      CHECK(s.value_at(i, j) == direct);
    }
  }
}

TEST_CASE("missing x for the partial basis is a configuration error") {
  CHECK_THROWS_AS(sweep_info_gain(grid_of(3), BasisKind::kPartial, std::nullopt),
                  std::invalid_argument);
}

TEST_CASE("grid validation") {
  SweepGrid g = grid_of(1);
  CHECK_THROWS_AS(sweep_info_gain(g, BasisKind::kBell, std::nullopt), std::invalid_argument);
  g = grid_of(3);
  g.axis1.hi = 1.5;
  CHECK_THROWS_AS(sweep_info_gain(g, BasisKind::kBell, std::nullopt), std::invalid_argument);
}

TEST_CASE("surface values are identical at any worker count") {
  const Surface serial = sweep_info_gain(grid_of(21), BasisKind::kBell, std::nullopt, {1, false});
  const Surface parallel =
      sweep_info_gain(grid_of(21), BasisKind::kBell, std::nullopt, {7, false});
  REQUIRE(serial.values.size() == parallel.values.size());
  for (size_t k = 0; k < serial.values.size(); ++k) {
    CHECK(serial.values[k] == parallel.values[k]);  // bit-exact
  }
  CHECK(serial.argmax.i == parallel.argmax.i);
  CHECK(serial.argmax.j == parallel.argmax.j);
}

TEST_CASE("refining the grid reproduces coarse nodes exactly") {
  const Surface coarse = sweep_info_gain(grid_of(11), BasisKind::kBell, std::nullopt);
  const Surface fine = sweep_info_gain(grid_of(21), BasisKind::kBell, std::nullopt);
  for (int i = 0; i < 11; ++i) {
    for (int j = 0; j < 11; ++j) {
      CHECK(coarse.value_at(i, j) == fine.value_at(2 * i, 2 * j));  // nested nodes, bit-exact
    }
  }
}

TEST_CASE("extrema are consistent with the stored values") {
  const Surface s =
      sweep_info_gain(grid_of(15), BasisKind::kPartial, std::sqrt(0.1), {4, false});
  double vmax = -1.0, vmin = 3.0;
  for (double v : s.values) {
    vmax = std::max(vmax, v);
    vmin = std::min(vmin, v);
  }
  CHECK(s.argmax.value == vmax);
  CHECK(s.argmin.value == vmin);
  CHECK(s.value_at(s.argmax.i, s.argmax.j) == vmax);
  CHECK(s.value_at(s.argmin.i, s.argmin.j) == vmin);
  CHECK(vmax <= 2.0 + 1e-12);
}

TEST_CASE("local refinement can only improve the incumbent") {
  SweepOptions opt;
  opt.refine = true;
  opt.workers = 4;
  const Surface s = sweep_info_gain(grid_of(41), BasisKind::kBell, std::nullopt, opt);
  REQUIRE(s.refined_max.has_value());
  REQUIRE(s.refined_min.has_value());
  CHECK(s.refined_max->value >= s.argmax.value);
  CHECK(s.refined_min->value <= s.argmin.value);
  // with step 0.025/3 the local re-scan lands within ~1.2e-3 of the peak
  // at 1/sqrt2, closer than the incumbent node at 0.7
  CHECK(s.refined_max->value > s.argmax.value);
  CHECK_THAT(s.refined_max->value, WithinAbs(1.5, 1e-3));
}

TEST_CASE("fidelity surface is bounded and symmetric across the diagonal") {
  const Quadrature quad{8, 16};
  const Surface s = sweep_fidelity(grid_of(9), TieBreak::kLowestIndex,
                                   InputMeasure::kPolarUniform, quad, {4, false});
  for (double v : s.values) {
    CHECK(v <= 1.0 + 1e-12);
    CHECK(v >= 0.0);
  }
  for (int i = 0; i < 9; ++i) {
    for (int j = 0; j < i; ++j) {
      CHECK_THAT(s.value_at(i, j) - s.value_at(j, i), WithinAbs(0.0, 1e-9));
    }
  }
}

TEST_CASE("trade-off table endpoints") {
  const std::vector<TradeoffRow> rows = sweep_tradeoff(kInvSqrt2, 1.0, 6, 11, {4, false});
  REQUIRE(rows.size() == 6);
  CHECK_THAT(rows.front().x, WithinAbs(kInvSqrt2, 1e-12));
  CHECK_THAT(rows.front().success_probability, WithinAbs(1.0, 1e-12));
  CHECK_THAT(rows.back().x, WithinAbs(1.0, 1e-12));
  CHECK_THAT(rows.back().success_probability, WithinAbs(0.0, 1e-12));
  // the product basis reads out perfectly at the no-mixing corner node
  CHECK_THAT(rows.back().max_info_gain, WithinAbs(2.0, 1e-9));
  double previous = 1.0 + 1e-12;
  for (const TradeoffRow& r : rows) {
    CHECK(r.success_probability <= previous);
    previous = r.success_probability;
    CHECK(r.max_info_gain >= 0.0);
    CHECK(r.max_info_gain <= 2.0 + 1e-12);
  }
}

TEST_CASE("phase-pair sweeps hold the transmissions fixed") {
  const BeamsplitterParams base = BeamsplitterParams::from_transmission(kInvSqrt2, kInvSqrt2);
  const SweepGrid grid = SweepGrid::for_target(SweepTarget::kPhiPair, 9, base);
  const Surface s = sweep_info_gain(grid, BasisKind::kBell, std::nullopt, {4, false});
  // the middle node is phi = (0, 0), i.e. the plain balanced splitter
  CHECK(s.grid.axis1.at(4) == 0.0);
  CHECK_THAT(s.value_at(4, 4), WithinAbs(1.5, 1e-12));
  for (double v : s.values) {
    CHECK(v >= 0.0);
    CHECK(v <= 2.0 + 1e-12);
  }
  // a node away from the center matches a direct evaluation
  BeamsplitterParams shifted = base;
  shifted.phi_h = s.grid.axis1.at(1);
  shifted.phi_v = s.grid.axis2.at(6);
  CHECK(s.value_at(1, 6) == info_gain(bell_basis(), shifted));
}

TEST_CASE("trade-off range validation") {
  CHECK_THROWS_AS(sweep_tradeoff(0.3, 1.0, 5, 11), std::invalid_argument);
  CHECK_THROWS_AS(sweep_tradeoff(kInvSqrt2, 1.2, 5, 11), std::invalid_argument);
  CHECK_THROWS_AS(sweep_tradeoff(kInvSqrt2, 1.0, 0, 11), std::invalid_argument);
}
