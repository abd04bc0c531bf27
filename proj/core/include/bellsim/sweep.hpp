#pragma once

#include "bellsim/information.hpp"
#include "bellsim/teleport.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bellsim {

/// One swept parameter range, endpoints included.
struct AxisRange {
  std::string name;
  double lo = 0.0;
  double hi = 1.0;
  int n = 41;

  double at(int i) const;
};

/// What the two grid axes drive. The default maps them onto the
/// transmission coefficients; the phase pairs are the expert mode, with
/// the transmissions held at the base setting.
enum class SweepTarget { kTransmission, kPhiPair, kChiPair };

/// Two swept axes plus the base setting supplying everything the axes do
/// not override.
struct SweepGrid {
  AxisRange axis1{"transmission_h"};
  AxisRange axis2{"transmission_v"};
  SweepTarget target = SweepTarget::kTransmission;
  BeamsplitterParams base;
  std::optional<double> x;  // entanglement parameter, when relevant

  void validate() const;
  BeamsplitterParams params_for(double v1, double v2) const;
  BeamsplitterParams params_at(int i, int j) const;

  /// Axis ranges and names appropriate for the target ([0,1] transmission
  /// grids, [-pi, pi] phase grids).
  static SweepGrid for_target(SweepTarget target, int n, const BeamsplitterParams& base);
};

struct GridPoint {
  int i = 0;
  int j = 0;
  double value = 0.0;
};

/// Extremum re-located on a locally 3x finer grid around a node.
struct RefinedPoint {
  double t1 = 0.0;
  double t2 = 0.0;
  double value = 0.0;
};

/// A scalar field evaluated over the grid, row-major with axis1 outer.
/// argmax/argmin are grid-node extrema (first hit in row-major order).
struct Surface {
  SweepGrid grid;
  std::vector<double> values;
  GridPoint argmax;
  GridPoint argmin;
  std::optional<RefinedPoint> refined_max;
  std::optional<RefinedPoint> refined_min;

  double value_at(int i, int j) const;
};

enum class BasisKind { kBell, kPartial };

struct SweepOptions {
  int workers = 1;
  bool refine = false;
};

/// Information gain at every grid node. The partial basis requires x;
/// throws std::invalid_argument when it is missing.
Surface sweep_info_gain(const SweepGrid& grid, BasisKind kind, std::optional<double> x,
                        const SweepOptions& options = {});

/// Averaged teleportation fidelity at every grid node.
Surface sweep_fidelity(const SweepGrid& grid, TieBreak tie_break = TieBreak::kLowestIndex,
                       InputMeasure measure = InputMeasure::kPolarUniform,
                       const Quadrature& quad = {}, const SweepOptions& options = {});

/// One row of the entanglement-degree trade-off: the best information gain
/// a beamsplitter grid can reach for the partial basis at x, next to the
/// total filtering success probability at the same x. No joint optimality
/// is claimed.
struct TradeoffRow {
  double x = 0.0;
  double max_info_gain = 0.0;
  double success_probability = 0.0;
};

/// Rows for nx values of x equally spaced in x² over [x_lo², x_hi²],
/// x range within [1/√2, 1]; each row sweeps a grid_n × grid_n grid.
std::vector<TradeoffRow> sweep_tradeoff(double x_lo, double x_hi, int nx, int grid_n,
                                        const SweepOptions& options = {});

}  // namespace bellsim
