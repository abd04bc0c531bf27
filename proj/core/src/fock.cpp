#include "bellsim/fock.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace bellsim {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

std::array<DetectionOutcome, kOutcomeCount> make_outcomes() {
  std::array<DetectionOutcome, kOutcomeCount> out{};
  int k = 0;
  for (int m = 0; m < kModeCount; ++m) {
    for (int n = m; n < kModeCount; ++n) {
      out[k++] = DetectionOutcome{static_cast<Mode>(m), static_cast<Mode>(n)};
    }
  }
  return out;
}

}  // namespace

std::string_view mode_label(Mode m) {
  switch (m) {
    case Mode::aH: return "aH";
    case Mode::aV: return "aV";
    case Mode::bH: return "bH";
    case Mode::bV: return "bV";
  }
  throw std::invalid_argument("mode_label: bad Mode value");
}

const std::array<DetectionOutcome, kOutcomeCount>& all_outcomes() {
  static const std::array<DetectionOutcome, kOutcomeCount> table = make_outcomes();
  return table;
}

int outcome_index(Mode m, Mode n) {
  int lo = static_cast<int>(m);
  int hi = static_cast<int>(n);
  if (lo > hi) std::swap(lo, hi);
  // row offsets of the upper-triangular pair enumeration over 4 modes
  static constexpr int offset[kModeCount] = {0, 4, 7, 9};
  return offset[lo] + (hi - lo);
}

std::string outcome_label(int outcome) {
  const DetectionOutcome& o = all_outcomes().at(static_cast<size_t>(outcome));
  return std::string(mode_label(o.lo)) + "+" + std::string(mode_label(o.hi));
}

TwoPhotonState TwoPhotonState::from_operator_pairs(std::span<const OperatorTerm> terms) {
  Amplitudes amps = Amplitudes::Zero();
  for (const OperatorTerm& t : terms) {
    const int idx = outcome_index(t.m, t.n);
    amps(idx) += (t.m == t.n) ? t.coeff * kSqrt2 : t.coeff;
  }
  const double nrm = amps.norm();
  if (nrm == 0.0) {
    throw std::invalid_argument("from_operator_pairs: all coefficients are zero");
  }
  return TwoPhotonState(amps / nrm);
}

TwoPhotonState TwoPhotonState::from_operator_pairs(std::initializer_list<OperatorTerm> terms) {
  return from_operator_pairs(std::span<const OperatorTerm>(terms.begin(), terms.size()));
}

TwoPhotonState TwoPhotonState::from_amplitudes(const Amplitudes& amps) {
  if (std::abs(amps.norm() - 1.0) > 1e-10) {
    throw std::invalid_argument("from_amplitudes: amplitudes are not unit-norm");
  }
  return TwoPhotonState(amps);
}

Complex inner_product(const TwoPhotonState& s1, const TwoPhotonState& s2) {
  return s1.amplitudes().dot(s2.amplitudes());
}

PolarizationQubit::PolarizationQubit(Complex a, Complex b) : alpha(a), beta(b) {
  const double nrm = std::sqrt(std::norm(alpha) + std::norm(beta));
  if (nrm == 0.0) {
    throw std::invalid_argument("PolarizationQubit: zero state");
  }
  alpha /= nrm;
  beta /= nrm;
}

}  // namespace bellsim
