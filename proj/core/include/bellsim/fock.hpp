#pragma once

#include <Eigen/Core>

#include <array>
#include <complex>
#include <span>
#include <string>
#include <string_view>

namespace bellsim {

using Complex = std::complex<double>;

/// The four polarization-resolved modes of the two propagation directions
/// a and b, in canonical order. This order is load-bearing: transform
/// rows/columns, outcome indexing and every table layout follow it.
enum class Mode : int { aH = 0, aV = 1, bH = 2, bV = 3 };

inline constexpr int kModeCount = 4;
inline constexpr int kOutcomeCount = 10;

std::string_view mode_label(Mode m);

/// One of the 10 distinguishable two-photon occupation patterns: an
/// unordered pair of modes, stored sorted.
struct DetectionOutcome {
  Mode lo;
  Mode hi;
};

/// Canonical outcome table, lexicographic over sorted mode pairs:
/// {aH,aH}, {aH,aV}, {aH,bH}, {aH,bV}, {aV,aV}, {aV,bH}, {aV,bV},
/// {bH,bH}, {bH,bV}, {bV,bV}.
const std::array<DetectionOutcome, kOutcomeCount>& all_outcomes();

/// Index of the unordered pair {m, n} in the canonical outcome order.
int outcome_index(Mode m, Mode n);

/// Short tag for an outcome, e.g. "aH+bV".
std::string outcome_label(int outcome);

/// One c * m†n† term of a two-photon creation-operator polynomial.
struct OperatorTerm {
  Mode m;
  Mode n;
  Complex coeff;
};

using Amplitudes = Eigen::Matrix<Complex, kOutcomeCount, 1>;

/// A pure two-photon state of the four modes in the normalized occupation
/// basis: the basis vector for a mixed pair is m†n†|0>, the doubly occupied
/// one is (m†)²|0>/√2. Values are immutable and unit-norm.
class TwoPhotonState {
 public:
  /// Builds Σ c·m†n†|0> and normalizes the result. A repeated mode feeds
  /// c·√2 into its doubly-occupied amplitude before normalization.
  /// Throws std::invalid_argument when every coefficient is zero.
  static TwoPhotonState from_operator_pairs(std::span<const OperatorTerm> terms);
  static TwoPhotonState from_operator_pairs(std::initializer_list<OperatorTerm> terms);

  /// Wraps amplitudes that must already be unit-norm within 1e-10.
  static TwoPhotonState from_amplitudes(const Amplitudes& amps);

  const Amplitudes& amplitudes() const { return amps_; }
  Complex amplitude(int outcome) const { return amps_(outcome); }

 private:
  explicit TwoPhotonState(Amplitudes amps) : amps_(std::move(amps)) {}

  Amplitudes amps_;
};

/// Hermitian inner product <s1|s2>, conjugate-linear in the first argument.
Complex inner_product(const TwoPhotonState& s1, const TwoPhotonState& s2);

/// Single-photon polarization qubit alpha|H> + beta|V>.
struct PolarizationQubit {
  Complex alpha;
  Complex beta;

  /// Normalizes; throws std::invalid_argument on the zero vector.
  PolarizationQubit(Complex a, Complex b);
};

}  // namespace bellsim
