#pragma once

#include "bellsim/fock.hpp"

#include <array>
#include <string_view>

namespace bellsim {

/// Fixed label order for every four-state basis and all derived tables.
inline constexpr std::array<std::string_view, 4> kBasisLabels = {
    "psi_minus", "psi_plus", "phi_minus", "phi_plus"};

inline constexpr int kPsiMinus = 0;
inline constexpr int kPsiPlus = 1;
inline constexpr int kPhiMinus = 2;
inline constexpr int kPhiPlus = 3;

/// Four orthonormal two-photon measurement states with their priors and
/// the entanglement parameter x that generated them (x = 1/√2 is the
/// maximally entangled case).
struct MeasurementBasis {
  std::array<TwoPhotonState, 4> states;
  double x;
  std::array<double, 4> priors;
};

/// The four maximally entangled states, coefficients ±1/√2:
///   psi∓ = (aH†bV† ∓ aV†bH†)/√2,  phi∓ = (aH†bH† ∓ aV†bV†)/√2.
/// Uniform priors.
MeasurementBasis bell_basis();

/// The partially entangled family, y = √(1-x²):
///   psi-' = x aH†bV† - y aV†bH†,  psi+' = y aH†bV† + x aV†bH†,
///   phi-' = x aH†bH† - y aV†bV†,  phi+' = y aH†bH† + x aV†bV†.
/// Uniform priors. Throws std::domain_error for x outside [0, 1].
MeasurementBasis partial_basis(double x);

}  // namespace bellsim
