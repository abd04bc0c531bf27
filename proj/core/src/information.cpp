#include "bellsim/information.hpp"

#include <cmath>
#include <stdexcept>

namespace bellsim {

double shannon_entropy(std::span<const double> p) {
  double sum = 0.0;
  double h = 0.0;
  for (double v : p) {
    if (v < -1e-12) {
      throw std::invalid_argument("shannon_entropy: negative probability");
    }
    if (v > 0.0) {
      sum += v;
      h -= v * std::log2(v);
    }
  }
  if (std::abs(sum - 1.0) > 1e-6) {
    throw std::invalid_argument("shannon_entropy: probabilities do not sum to 1");
  }
  return h;
}

ConditionalTable conditional_table(const MeasurementBasis& basis,
                                   const BeamsplitterParams& params) {
  const ModeTransform u = build_transform(params);
  ConditionalTable t;
  for (int i = 0; i < 4; ++i) {
    const OutcomeDistribution d =
        outcome_distribution(basis.states[static_cast<size_t>(i)], u);
    for (int j = 0; j < kOutcomeCount; ++j) {
      t.likelihoods(i, j) = d[j];
      t.joints(i, j) = basis.priors[static_cast<size_t>(i)] * d[j];
    }
  }
  t.posteriors.setZero();
  for (int j = 0; j < kOutcomeCount; ++j) {
    t.marginals(j) = t.joints.col(j).sum();
    if (t.marginals(j) > 0.0) {
      t.posteriors.col(j) = t.joints.col(j) / t.marginals(j);
    }
  }
  return t;
}

double info_gain(const MeasurementBasis& basis, const BeamsplitterParams& params) {
  const ConditionalTable t = conditional_table(basis, params);
  const double s_initial = shannon_entropy(basis.priors);
  double s_final = 0.0;
  for (int j = 0; j < kOutcomeCount; ++j) {
    if (t.marginals(j) <= 0.0) continue;
    for (int i = 0; i < 4; ++i) {
      const double post = t.posteriors(i, j);
      if (post > 0.0) {
        s_final -= t.joints(i, j) * std::log2(post);
      }
    }
  }
  const double gain = s_initial - s_final;
  // rounding can leave dust just below zero at uninformative settings
  return (gain < 0.0 && gain > -1e-12) ? 0.0 : gain;
}

LookupTable lookup_table(const ConditionalTable& table, TieBreak tie_break) {
  LookupTable lut;
  for (int j = 0; j < kOutcomeCount; ++j) {
    const size_t sj = static_cast<size_t>(j);
    if (table.marginals(j) <= kMarginalFloor) {
      lut.best[sj] = -1;
      lut.posterior_at_best[sj] = 0.0;
      continue;
    }
    int best = 0;
    for (int i = 1; i < 4; ++i) {
      if (table.posteriors(i, j) > table.posteriors(best, j)) best = i;
    }
    if (tie_break == TieBreak::kLowestIndex) {
      for (int i = 0; i < best; ++i) {
        if (table.posteriors(i, j) >= table.posteriors(best, j) - 1e-9) {
          best = i;
          break;
        }
      }
    }
    lut.best[sj] = best;
    lut.posterior_at_best[sj] = table.posteriors(best, j);
  }
  return lut;
}

}  // namespace bellsim
