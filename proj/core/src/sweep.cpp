#include "bellsim/sweep.hpp"

#include "bellsim/povm.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace bellsim {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865476;

/// Evaluates fn over all grid nodes into a row-major vector. Rows are
/// interleaved across workers; every node is computed by the same pure
/// call, so the result is independent of the worker count.
std::vector<double> evaluate_grid(const SweepGrid& grid, int workers,
                                  const std::function<double(const BeamsplitterParams&)>& fn) {
  const int n1 = grid.axis1.n;
  const int n2 = grid.axis2.n;
  std::vector<double> values(static_cast<size_t>(n1) * static_cast<size_t>(n2));
  auto run_rows = [&](int first_row, int stride) {
    for (int i = first_row; i < n1; i += stride) {
      for (int j = 0; j < n2; ++j) {
        values[static_cast<size_t>(i) * static_cast<size_t>(n2) + static_cast<size_t>(j)] =
            fn(grid.params_at(i, j));
      }
    }
  };
  const int nthreads = std::clamp(workers, 1, n1);
  if (nthreads <= 1) {
    run_rows(0, 1);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) {
      pool.emplace_back(run_rows, t, nthreads);
    }
    for (std::thread& t : pool) t.join();
  }
  return values;
}

void locate_extrema(Surface& surface) {
  const int n2 = surface.grid.axis2.n;
  int imax = 0, imin = 0;
  for (int k = 1; k < static_cast<int>(surface.values.size()); ++k) {
    if (surface.values[static_cast<size_t>(k)] > surface.values[static_cast<size_t>(imax)]) imax = k;
    if (surface.values[static_cast<size_t>(k)] < surface.values[static_cast<size_t>(imin)]) imin = k;
  }
  surface.argmax = {imax / n2, imax % n2, surface.values[static_cast<size_t>(imax)]};
  surface.argmin = {imin / n2, imin % n2, surface.values[static_cast<size_t>(imin)]};
}

/// Re-scans a 3x finer grid one original cell wide around a node.
RefinedPoint refine_around(const SweepGrid& grid, const GridPoint& seed, bool maximize,
                           const std::function<double(const BeamsplitterParams&)>& fn) {
  const double h1 = (grid.axis1.n > 1) ? (grid.axis1.hi - grid.axis1.lo) / (grid.axis1.n - 1) : 0.0;
  const double h2 = (grid.axis2.n > 1) ? (grid.axis2.hi - grid.axis2.lo) / (grid.axis2.n - 1) : 0.0;
  const double c1 = grid.axis1.at(seed.i);
  const double c2 = grid.axis2.at(seed.j);
  RefinedPoint best{c1, c2, seed.value};
  for (int di = -3; di <= 3; ++di) {
    const double t1 = c1 + di * h1 / 3.0;
    if (t1 < grid.axis1.lo || t1 > grid.axis1.hi) continue;
    for (int dj = -3; dj <= 3; ++dj) {
      const double t2 = c2 + dj * h2 / 3.0;
      if (t2 < grid.axis2.lo || t2 > grid.axis2.hi) continue;
      const double v = fn(grid.params_for(t1, t2));
      if (maximize ? (v > best.value) : (v < best.value)) {
        best = {t1, t2, v};
      }
    }
  }
  return best;
}

Surface run_sweep(const SweepGrid& grid, const SweepOptions& options,
                  const std::function<double(const BeamsplitterParams&)>& fn) {
  grid.validate();
  Surface surface;
  surface.grid = grid;
  surface.values = evaluate_grid(grid, options.workers, fn);
  locate_extrema(surface);
  if (options.refine) {
    surface.refined_max = refine_around(grid, surface.argmax, true, fn);
    surface.refined_min = refine_around(grid, surface.argmin, false, fn);
  }
  return surface;
}

}  // namespace

double AxisRange::at(int i) const {
  if (n < 2) return lo;
  if (i == n - 1) return hi;  // hit the endpoint exactly
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

void SweepGrid::validate() const {
  for (const AxisRange* ax : {&axis1, &axis2}) {
    if (ax->n < 2) {
      throw std::invalid_argument("SweepGrid: each axis needs at least 2 points");
    }
    if (!std::isfinite(ax->lo) || !std::isfinite(ax->hi) || !(ax->lo < ax->hi)) {
      throw std::invalid_argument("SweepGrid: axis range must satisfy lo < hi, finite");
    }
    if (target == SweepTarget::kTransmission && !(ax->lo >= 0.0 && ax->hi <= 1.0)) {
      throw std::invalid_argument("SweepGrid: transmission axes must lie within [0, 1]");
    }
  }
  base.validate();
}

BeamsplitterParams SweepGrid::params_for(double v1, double v2) const {
  BeamsplitterParams p = base;
  switch (target) {
    case SweepTarget::kTransmission:
      p.theta_h = std::acos(v1);
      p.theta_v = std::acos(v2);
      break;
    case SweepTarget::kPhiPair:
      p.phi_h = v1;
      p.phi_v = v2;
      break;
    case SweepTarget::kChiPair:
      p.chi_h = v1;
      p.chi_v = v2;
      break;
  }
  return p;
}

BeamsplitterParams SweepGrid::params_at(int i, int j) const {
  return params_for(axis1.at(i), axis2.at(j));
}

SweepGrid SweepGrid::for_target(SweepTarget target, int n, const BeamsplitterParams& base) {
  SweepGrid g;
  g.target = target;
  g.base = base;
  switch (target) {
    case SweepTarget::kTransmission:
      g.axis1 = {"transmission_h", 0.0, 1.0, n};
      g.axis2 = {"transmission_v", 0.0, 1.0, n};
      break;
    case SweepTarget::kPhiPair:
      g.axis1 = {"phi_h", -std::numbers::pi, std::numbers::pi, n};
      g.axis2 = {"phi_v", -std::numbers::pi, std::numbers::pi, n};
      break;
    case SweepTarget::kChiPair:
      g.axis1 = {"chi_h", -std::numbers::pi, std::numbers::pi, n};
      g.axis2 = {"chi_v", -std::numbers::pi, std::numbers::pi, n};
      break;
  }
  return g;
}

double Surface::value_at(int i, int j) const {
  return values[static_cast<size_t>(i) * static_cast<size_t>(grid.axis2.n) +
                static_cast<size_t>(j)];
}

Surface sweep_info_gain(const SweepGrid& grid, BasisKind kind, std::optional<double> x,
                        const SweepOptions& options) {
  if (kind == BasisKind::kPartial && !x.has_value()) {
    throw std::invalid_argument("sweep_info_gain: partial basis requires x");
  }
  const MeasurementBasis basis =
      (kind == BasisKind::kBell) ? bell_basis() : partial_basis(*x);
  SweepGrid tagged = grid;
  tagged.x = (kind == BasisKind::kPartial) ? x : std::nullopt;
  return run_sweep(tagged, options, [&](const BeamsplitterParams& params) {
    return info_gain(basis, params);
  });
}

Surface sweep_fidelity(const SweepGrid& grid, TieBreak tie_break, InputMeasure measure,
                       const Quadrature& quad, const SweepOptions& options) {
  return run_sweep(grid, options, [&](const BeamsplitterParams& params) {
    return averaged_fidelity(params, tie_break, measure, quad);
  });
}

std::vector<TradeoffRow> sweep_tradeoff(double x_lo, double x_hi, int nx, int grid_n,
                                        const SweepOptions& options) {
  if (!(x_lo >= kInvSqrt2 - 1e-12 && x_hi <= 1.0 + 1e-12 && x_lo <= x_hi)) {
    throw std::invalid_argument("sweep_tradeoff: x range must lie within [1/sqrt(2), 1]");
  }
  if (nx < 1) {
    throw std::invalid_argument("sweep_tradeoff: need at least one x value");
  }
  const SweepGrid grid =
      SweepGrid::for_target(SweepTarget::kTransmission, grid_n, BeamsplitterParams{});
  const PolarizationQubit reference(1.0, 0.0);  // success is input-independent
  std::vector<TradeoffRow> rows;
  rows.reserve(static_cast<size_t>(nx));
  const double x2_lo = x_lo * x_lo;
  const double x2_hi = x_hi * x_hi;
  for (int k = 0; k < nx; ++k) {
    const double x2 = (nx == 1) ? x2_lo
                                : x2_lo + (x2_hi - x2_lo) * static_cast<double>(k) /
                                              static_cast<double>(nx - 1);
    const double x = std::min(std::sqrt(x2), 1.0);
    const Surface surface = sweep_info_gain(grid, BasisKind::kPartial, x, options);
    rows.push_back({x, surface.argmax.value, success_probability(reference, x).total});
  }
  return rows;
}

}  // namespace bellsim
