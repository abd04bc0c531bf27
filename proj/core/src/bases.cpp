#include "bellsim/bases.hpp"

#include <cmath>
#include <stdexcept>

namespace bellsim {

namespace {
constexpr double kInvSqrt2 = 0.7071067811865476;
}

MeasurementBasis bell_basis() {
  return partial_basis(kInvSqrt2);
}

MeasurementBasis partial_basis(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("partial_basis: x must lie in [0, 1]");
  }
  const double y = std::sqrt(1.0 - x * x);
  using M = Mode;
  return MeasurementBasis{
      {TwoPhotonState::from_operator_pairs({{M::aH, M::bV, x}, {M::aV, M::bH, -y}}),
       TwoPhotonState::from_operator_pairs({{M::aH, M::bV, y}, {M::aV, M::bH, x}}),
       TwoPhotonState::from_operator_pairs({{M::aH, M::bH, x}, {M::aV, M::bV, -y}}),
       TwoPhotonState::from_operator_pairs({{M::aH, M::bH, y}, {M::aV, M::bV, x}})},
      x,
      {0.25, 0.25, 0.25, 0.25}};
}

}  // namespace bellsim
