#include "bellsim/beamsplitter.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bellsim {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kUnitaryTol = 1e-12;

/// Symmetric 4x4 coefficient matrix C of the operator polynomial
/// Σ_{jk} C(j,k) j†k† equivalent to the given occupation amplitudes.
Eigen::Matrix4cd to_coefficients(const Amplitudes& amps) {
  Eigen::Matrix4cd c = Eigen::Matrix4cd::Zero();
  for (int i = 0; i < kOutcomeCount; ++i) {
    const DetectionOutcome& o = all_outcomes()[static_cast<size_t>(i)];
    const int m = static_cast<int>(o.lo);
    const int n = static_cast<int>(o.hi);
    if (m == n) {
      c(m, m) = amps(i) / kSqrt2;
    } else {
      c(m, n) = amps(i) / 2.0;
      c(n, m) = amps(i) / 2.0;
    }
  }
  return c;
}

Amplitudes to_amplitudes(const Eigen::Matrix4cd& c) {
  Amplitudes amps;
  for (int i = 0; i < kOutcomeCount; ++i) {
    const DetectionOutcome& o = all_outcomes()[static_cast<size_t>(i)];
    const int m = static_cast<int>(o.lo);
    const int n = static_cast<int>(o.hi);
    amps(i) = (m == n) ? c(m, m) * kSqrt2 : c(m, n) + c(n, m);
  }
  return amps;
}

}  // namespace

BeamsplitterParams BeamsplitterParams::from_transmission(double t_h, double t_v) {
  if (!(t_h >= 0.0 && t_h <= 1.0) || !(t_v >= 0.0 && t_v <= 1.0)) {
    throw std::invalid_argument("from_transmission: coefficients must lie in [0, 1]");
  }
  BeamsplitterParams p;
  p.theta_h = std::acos(t_h);
  p.theta_v = std::acos(t_v);
  return p;
}

double BeamsplitterParams::transmission_h() const { return std::cos(theta_h); }
double BeamsplitterParams::transmission_v() const { return std::cos(theta_v); }

void BeamsplitterParams::validate() const {
  const double all[] = {theta_h, theta_v, phi_h, phi_v, chi_h, chi_v};
  for (double v : all) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("BeamsplitterParams: non-finite parameter");
    }
  }
  constexpr double half_pi = std::numbers::pi / 2.0;
  constexpr double slack = 1e-12;
  if (theta_h < -slack || theta_h > half_pi + slack ||
      theta_v < -slack || theta_v > half_pi + slack) {
    throw std::invalid_argument("BeamsplitterParams: theta outside [0, pi/2]");
  }
}

ModeTransform::ModeTransform(const Eigen::Matrix4cd& u) : u_(u) {
  const double dev = (u_.adjoint() * u_ - Eigen::Matrix4cd::Identity())
                         .cwiseAbs()
                         .maxCoeff();
  if (dev > kUnitaryTol) {
    throw std::invalid_argument("ModeTransform: matrix is not unitary");
  }
}

ModeTransform ModeTransform::identity() {
  return ModeTransform(Eigen::Matrix4cd::Identity());
}

ModeTransform operator*(const ModeTransform& lhs, const ModeTransform& rhs) {
  return ModeTransform(lhs.matrix() * rhs.matrix());
}

ModeTransform build_transform(const BeamsplitterParams& params) {
  params.validate();
  const Complex i1(0.0, 1.0);
  const double ch = std::cos(params.theta_h);
  const double sh = std::sin(params.theta_h);
  const double cv = std::cos(params.theta_v);
  const double sv = std::sin(params.theta_v);

  Eigen::Matrix4cd u = Eigen::Matrix4cd::Zero();
  u(0, 0) = ch * std::exp(i1 * params.phi_h);
  u(0, 2) = sh * std::exp(i1 * params.chi_h);
  u(1, 1) = cv * std::exp(i1 * params.phi_v);
  u(1, 3) = sv * std::exp(i1 * params.chi_v);
  u(2, 0) = -sh * std::exp(-i1 * params.chi_h);
  u(2, 2) = ch * std::exp(-i1 * params.phi_h);
  u(3, 1) = -sv * std::exp(-i1 * params.chi_v);
  u(3, 3) = cv * std::exp(-i1 * params.phi_v);
  return ModeTransform(u);
}

double OutcomeDistribution::sum() const {
  double s = 0.0;
  for (double v : p) s += v;
  return s;
}

TwoPhotonState transmit(const TwoPhotonState& state, const ModeTransform& transform) {
  const Eigen::Matrix4cd& u = transform.matrix();
  const Eigen::Matrix4cd c = u * to_coefficients(state.amplitudes()) * u.transpose();
  return TwoPhotonState::from_amplitudes(to_amplitudes(c));
}

OutcomeDistribution outcome_distribution(const TwoPhotonState& state,
                                         const ModeTransform& transform) {
  const Amplitudes amps = transmit(state, transform).amplitudes();
  OutcomeDistribution dist;
  for (int i = 0; i < kOutcomeCount; ++i) {
    dist.p[static_cast<size_t>(i)] = std::norm(amps(i));
  }
  if (std::abs(dist.sum() - 1.0) > 1e-10) {
    throw std::logic_error("outcome_distribution: probabilities do not sum to 1");
  }
  return dist;
}

}  // namespace bellsim
