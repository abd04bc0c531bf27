#pragma once

#include "bellsim/fock.hpp"

#include <Eigen/Core>

#include <array>

namespace bellsim {

/// The partially entangled two-qubit basis in qubit notation (|0> = H),
/// amplitudes over |00>, |01>, |10>, |11>; restricted to x ≥ y.
struct PartialQubitBasis {
  double x;
  double y;
  std::array<Eigen::Vector4cd, 4> states;  // indexed like kBasisLabels
};

/// Throws std::domain_error for x outside [1/√2, 1].
PartialQubitBasis partial_qubit_basis(double x);

/// One term of the total state resolved in the primed basis of Alice's
/// two qubits: Bob's unnormalized conditional amplitudes and the branch
/// probability (weights sum to 1).
struct Branch {
  int label;
  Eigen::Vector2cd bob;
  double weight;
};

struct BranchDecomposition {
  std::array<Branch, 4> branches;
};

/// Exact change of basis of τ ⊗ (|01>+|10>)/√2 onto the primed basis of
/// qubits 1-2, y = √(1-x²):
///   psi-': (αx, -βy)/√2   psi+': (αy, βx)/√2
///   phi-': (-βy, αx)/√2   phi+': (βx, αy)/√2
BranchDecomposition expand_total_state(const PolarizationQubit& tau, double x);

/// Bob's two-element filtering measurement for one announced outcome. The
/// success Kraus operator M1 = √A1 attenuates the branch amplitude that
/// carries x by y/x, so the post-success state is τ up to the branch's
/// Pauli; it never amplifies. A2 = 1 - A1.
struct FilterPovm {
  Eigen::Matrix2d a1;
  Eigen::Matrix2d a2;
  Eigen::Matrix2d m1;
};

FilterPovm filter_for_outcome(double x, int outcome_label);

struct PovmSuccess {
  /// Joint probability of (Alice announces branch i) and (Bob's filter
  /// succeeds); each equals y²/2 independent of τ.
  std::array<double, 4> per_branch;
  double total;
};

PovmSuccess success_probability(const PolarizationQubit& tau, double x);

}  // namespace bellsim
