#pragma once

#include "bellsim/bases.hpp"
#include "bellsim/beamsplitter.hpp"

#include <Eigen/Core>

#include <array>
#include <span>

namespace bellsim {

/// Outcome marginals at or below this value are treated as structurally
/// zero when building look-up tables. Exact zeros survive the transform
/// only as rounding dust many orders of magnitude below this.
inline constexpr double kMarginalFloor = 1e-13;

/// Shannon entropy in bits, 0·log 0 taken as 0. Entries may undershoot
/// zero by at most 1e-12 (clamped); throws std::invalid_argument when the
/// sum deviates from 1 by more than 1e-6.
double shannon_entropy(std::span<const double> p);

/// Bayes bookkeeping for one basis/beamsplitter setting. Rows follow
/// kBasisLabels, columns the canonical outcome order. Posterior columns
/// are defined only where the outcome marginal is positive and are zero
/// elsewhere.
struct ConditionalTable {
  Eigen::Matrix<double, 4, kOutcomeCount> likelihoods;
  Eigen::Matrix<double, 4, kOutcomeCount> joints;
  Eigen::Matrix<double, kOutcomeCount, 1> marginals;
  Eigen::Matrix<double, 4, kOutcomeCount> posteriors;
};

ConditionalTable conditional_table(const MeasurementBasis& basis,
                                   const BeamsplitterParams& params);

/// Information gain ΔS = S_i - S_f in bits: prior entropy of the state
/// label minus its expected posterior entropy over detection outcomes.
/// Lies in [0, 2] for four equiprobable states.
double info_gain(const MeasurementBasis& basis, const BeamsplitterParams& params);

enum class TieBreak {
  /// Posteriors within 1e-9 of the column maximum count as tied; the
  /// lowest basis index wins. Robust against rounding at structural ties.
  kLowestIndex,
  /// Strict floating-point argmax; lowest index on exact ties.
  kPosteriorThenIndex,
};

/// Most-likely-state table: per outcome the argmax posterior index, or -1
/// where the outcome cannot occur (marginal at the floor).
struct LookupTable {
  std::array<int, kOutcomeCount> best{};
  std::array<double, kOutcomeCount> posterior_at_best{};

  bool defined(int outcome) const { return best[static_cast<size_t>(outcome)] >= 0; }
};

LookupTable lookup_table(const ConditionalTable& table,
                         TieBreak tie_break = TieBreak::kLowestIndex);

}  // namespace bellsim
