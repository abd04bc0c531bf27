#pragma once

#include "bellsim/beamsplitter.hpp"
#include "bellsim/information.hpp"

#include <Eigen/Core>

#include <array>

namespace bellsim {

/// Amplitudes of the three-photon state after Alice's beamsplitter,
/// resolved over (her detection outcome) x (Bob's qubit basis H, V).
/// Total squared norm 1.
struct JointState {
  Eigen::Matrix<Complex, kOutcomeCount, 2> amp;
};

/// Pushes τ (photon in direction a) together with Alice's half of the
/// maximally entangled channel (bH†cV† + bV†cH†)/√2 through the
/// beamsplitter; Bob's mode c is untouched.
JointState prepare_joint(const PolarizationQubit& tau, const BeamsplitterParams& params);

/// Bob's unitary per announced basis state, indexed like kBasisLabels.
struct CorrectionSet {
  std::array<Eigen::Matrix2cd, 4> u;
};

/// The Pauli corrections that make an ideal projective measurement in the
/// maximally entangled basis teleport exactly: psi+ → 1, psi- → σz,
/// phi- → σz·σx, phi+ → σx.
CorrectionSet standard_corrections();

/// Teleportation fidelity for one input state:
///   F(τ) = Σ_j p(κ_j) |<τ| U_best(j) |bob_j>|²
/// over outcomes with positive probability; outcomes missing from the
/// look-up table get the identity (they carry no weight for a maximally
/// entangled channel).
double fidelity_for_input(const PolarizationQubit& tau, const BeamsplitterParams& params,
                          const LookupTable& lut, const CorrectionSet& corrections);

/// Probability weight placed on the unknown input states.
enum class InputMeasure {
  /// Uniform in the Bloch polar angle θ_B and azimuth: every latitude is
  /// equally likely. Reproduces the published averaged-fidelity figures.
  kPolarUniform,
  /// Rotation-invariant (Haar) weight, i.e. uniform Bloch-sphere area.
  kHaar,
};

struct Quadrature {
  int polar_nodes = 16;
  int azimuth_nodes = 32;
};

/// Average of fidelity_for_input over the chosen input measure, by
/// deterministic product quadrature (Gauss-Chebyshev in cos θ_B for the
/// polar-uniform weight, Gauss-Legendre for Haar; uniform azimuth nodes).
/// The integrand is a low-degree polynomial in the Bloch coordinates, so
/// the defaults are exact far beyond the stated tolerances. The look-up
/// table is built from the Bell basis at the same parameters.
double averaged_fidelity(const BeamsplitterParams& params,
                         TieBreak tie_break = TieBreak::kLowestIndex,
                         InputMeasure measure = InputMeasure::kPolarUniform,
                         const Quadrature& quad = {});

}  // namespace bellsim
