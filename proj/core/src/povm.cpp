#include "bellsim/povm.hpp"

#include <cmath>
#include <stdexcept>

namespace bellsim {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865476;

void check_x(double x) {
  // the left endpoint is the maximally entangled case and must be accepted
  if (!(x >= kInvSqrt2 - 1e-12 && x <= 1.0 + 1e-12)) {
    throw std::domain_error("povm: x must lie in [1/sqrt(2), 1]");
  }
}

/// Slot of Bob's conditional amplitude that carries the factor x.
constexpr int kXSlot[4] = {0, 1, 1, 0};

}  // namespace

PartialQubitBasis partial_qubit_basis(double x) {
  check_x(x);
  const double y = std::sqrt(std::max(0.0, 1.0 - x * x));
  PartialQubitBasis basis;
  basis.x = x;
  basis.y = y;
  basis.states[0] << 0, x, -y, 0;
  basis.states[1] << 0, y, x, 0;
  basis.states[2] << x, 0, 0, -y;
  basis.states[3] << y, 0, 0, x;
  return basis;
}

BranchDecomposition expand_total_state(const PolarizationQubit& tau, double x) {
  check_x(x);
  const double y = std::sqrt(std::max(0.0, 1.0 - x * x));
  const Complex a = tau.alpha;
  const Complex b = tau.beta;
  BranchDecomposition d;
  d.branches[0] = {0, kInvSqrt2 * Eigen::Vector2cd(a * x, -b * y), 0.0};
  d.branches[1] = {1, kInvSqrt2 * Eigen::Vector2cd(a * y, b * x), 0.0};
  d.branches[2] = {2, kInvSqrt2 * Eigen::Vector2cd(-b * y, a * x), 0.0};
  d.branches[3] = {3, kInvSqrt2 * Eigen::Vector2cd(b * x, a * y), 0.0};
  for (Branch& br : d.branches) {
    br.weight = br.bob.squaredNorm();
  }
  return d;
}

FilterPovm filter_for_outcome(double x, int outcome_label) {
  check_x(x);
  if (outcome_label < 0 || outcome_label > 3) {
    throw std::domain_error("filter_for_outcome: label must be in 0..3");
  }
  const double y = std::sqrt(std::max(0.0, 1.0 - x * x));
  const double ratio = y / x;
  Eigen::Vector2d diag(1.0, 1.0);
  diag(kXSlot[outcome_label]) = ratio;
  FilterPovm f;
  f.m1 = diag.asDiagonal();
  f.a1 = f.m1 * f.m1;
  f.a2 = Eigen::Matrix2d::Identity() - f.a1;
  return f;
}

PovmSuccess success_probability(const PolarizationQubit& tau, double x) {
  const BranchDecomposition d = expand_total_state(tau, x);
  PovmSuccess s{};
  s.total = 0.0;
  for (int i = 0; i < 4; ++i) {
    const FilterPovm f = filter_for_outcome(x, i);
    const double p = (f.m1 * d.branches[static_cast<size_t>(i)].bob).squaredNorm();
    s.per_branch[static_cast<size_t>(i)] = p;
    s.total += p;
  }
  return s;
}

}  // namespace bellsim
