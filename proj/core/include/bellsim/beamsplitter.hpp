#pragma once

#include "bellsim/fock.hpp"

#include <Eigen/Core>

#include <array>

namespace bellsim {

/// Beamsplitter setting: one mixing angle per polarization (cos θ is the
/// transmission coefficient) plus transmitted-beam (φ) and reflected-beam
/// (χ) phases. The H and V blocks never mix.
struct BeamsplitterParams {
  double theta_h = 0.0;
  double theta_v = 0.0;
  double phi_h = 0.0;
  double phi_v = 0.0;
  double chi_h = 0.0;
  double chi_v = 0.0;

  /// Converts transmission coefficients in [0, 1] to angles, zero phases.
  static BeamsplitterParams from_transmission(double t_h, double t_v);

  double transmission_h() const;
  double transmission_v() const;

  /// Throws std::invalid_argument on non-finite entries or θ ∉ [0, π/2].
  void validate() const;
};

/// Unitary 4x4 map on mode creation operators, rows/columns in canonical
/// Mode order.
class ModeTransform {
 public:
  /// Throws std::invalid_argument unless u is unitary within 1e-12.
  explicit ModeTransform(const Eigen::Matrix4cd& u);

  static ModeTransform identity();

  const Eigen::Matrix4cd& matrix() const { return u_; }

 private:
  Eigen::Matrix4cd u_;
};

/// Composition: applying rhs first, then lhs.
ModeTransform operator*(const ModeTransform& lhs, const ModeTransform& rhs);

/// The beamsplitter mode transform. Per polarization block
///
///   [ cosθ e^{iφ}      sinθ e^{iχ}  ]
///   [ -sinθ e^{-iχ}    cosθ e^{-iφ} ]
///
/// which reduces to the plain rotation for zero phases. The conjugate
/// phases on the reflected row keep the block in SU(2); without them the
/// matrix is not unitary once φ ≠ χ.
ModeTransform build_transform(const BeamsplitterParams& params);

/// Probabilities of the 10 photon-counting patterns, assuming ideal
/// photon-number- and polarization-resolving detectors.
struct OutcomeDistribution {
  std::array<double, kOutcomeCount> p{};

  double operator[](int outcome) const { return p[static_cast<size_t>(outcome)]; }
  double sum() const;
};

/// Substitutes every creation operator by its image under the transform
/// (op_i† → Σ_j U(j,i) op_j†), expands the quadratic operator polynomial
/// and re-collects occupation amplitudes. Norm-preserving, and functorial:
/// transmit(transmit(s, U1), U2) == transmit(s, U2*U1).
TwoPhotonState transmit(const TwoPhotonState& state, const ModeTransform& transform);

/// Squared magnitudes of transmit(state, transform).
OutcomeDistribution outcome_distribution(const TwoPhotonState& state,
                                         const ModeTransform& transform);

}  // namespace bellsim
