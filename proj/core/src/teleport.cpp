#include "bellsim/teleport.hpp"

#include "bellsim/bases.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace bellsim {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865476;

struct Node {
  double u;  // cos θ_B
  double weight;
};

/// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
std::vector<Node> gauss_legendre(int n) {
  std::vector<Node> nodes(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    // Chebyshev-based starting guess
    double x = std::cos(std::numbers::pi * (k + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[static_cast<size_t>(k)] = {x, 2.0 / ((1.0 - x * x) * dp * dp)};
  }
  return nodes;
}

/// Gauss-Chebyshev (first kind): integrates g(u)/√(1-u²) du exactly for
/// polynomial g, i.e. g(cos θ) dθ over [0, π] with uniform θ weight.
std::vector<Node> gauss_chebyshev(int n) {
  std::vector<Node> nodes(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    nodes[static_cast<size_t>(k)] = {
        std::cos((2.0 * k + 1.0) * std::numbers::pi / (2.0 * n)), 1.0 / n};
  }
  return nodes;
}

}  // namespace

JointState prepare_joint(const PolarizationQubit& tau, const BeamsplitterParams& params) {
  const ModeTransform u = build_transform(params);
  // Split by Bob's photon: the cH† sector pairs τ's photon with bV†, the
  // cV† sector with bH†. Each sector is a unit-norm two-photon state and
  // carries overall weight 1/2.
  const TwoPhotonState sector_h = TwoPhotonState::from_operator_pairs(
      {{Mode::aH, Mode::bV, tau.alpha}, {Mode::aV, Mode::bV, tau.beta}});
  const TwoPhotonState sector_v = TwoPhotonState::from_operator_pairs(
      {{Mode::aH, Mode::bH, tau.alpha}, {Mode::aV, Mode::bH, tau.beta}});
  JointState joint;
  joint.amp.col(0) = transmit(sector_h, u).amplitudes() * kInvSqrt2;
  joint.amp.col(1) = transmit(sector_v, u).amplitudes() * kInvSqrt2;
  return joint;
}

CorrectionSet standard_corrections() {
  Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  Eigen::Matrix2cd sx;
  sx << 0, 1, 1, 0;
  Eigen::Matrix2cd sz;
  sz << 1, 0, 0, -1;
  return CorrectionSet{{sz, id, sz * sx, sx}};
}

double fidelity_for_input(const PolarizationQubit& tau, const BeamsplitterParams& params,
                          const LookupTable& lut, const CorrectionSet& corrections) {
  const JointState joint = prepare_joint(tau, params);
  const Eigen::Vector2cd tau_vec(tau.alpha, tau.beta);
  double fidelity = 0.0;
  for (int j = 0; j < kOutcomeCount; ++j) {
    const Eigen::Vector2cd row = joint.amp.row(j).transpose();
    if (row.squaredNorm() == 0.0) continue;
    const int best = lut.best[static_cast<size_t>(j)];
    const Eigen::Vector2cd corrected =
        (best >= 0) ? (corrections.u[static_cast<size_t>(best)] * row).eval() : row;
    // |<τ|U·row>|² = p(κ_j)·|<τ|U|bob_j>|² without normalizing bob_j
    fidelity += std::norm(tau_vec.dot(corrected));
  }
  return fidelity;
}

double averaged_fidelity(const BeamsplitterParams& params, TieBreak tie_break,
                         InputMeasure measure, const Quadrature& quad) {
  if (quad.polar_nodes < 1 || quad.azimuth_nodes < 1) {
    throw std::invalid_argument("averaged_fidelity: quadrature orders must be positive");
  }
  const LookupTable lut = lookup_table(conditional_table(bell_basis(), params), tie_break);
  const CorrectionSet corrections = standard_corrections();

  const std::vector<Node> polar = (measure == InputMeasure::kHaar)
                                      ? gauss_legendre(quad.polar_nodes)
                                      : gauss_chebyshev(quad.polar_nodes);
  const double polar_norm = (measure == InputMeasure::kHaar) ? 0.5 : 1.0;

  double total = 0.0;
  for (const Node& node : polar) {
    const double cos_half = std::sqrt((1.0 + node.u) / 2.0);
    const double sin_half = std::sqrt((1.0 - node.u) / 2.0);
    double ring = 0.0;
    for (int k = 0; k < quad.azimuth_nodes; ++k) {
      const double phi = 2.0 * std::numbers::pi * k / quad.azimuth_nodes;
      const PolarizationQubit tau(cos_half,
                                  std::polar(sin_half, phi));
      ring += fidelity_for_input(tau, params, lut, corrections);
    }
    total += node.weight * polar_norm * ring / quad.azimuth_nodes;
  }
  return total;
}

}  // namespace bellsim
