#include "psphere/jones.hpp"

#include <cmath>
#include <string>

namespace psphere {

namespace {

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument(std::string(what) + ": non-finite parameter");
  }
}

}  // namespace

Mat2c rotator(double theta) {
  require_finite(theta, "rotator");
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return {cplx(c), cplx(-s), cplx(s), cplx(c)};
}

Mat2c phase_shifter(double phi) {
  require_finite(phi, "phase_shifter");
  return Mat2c::diagonal(std::polar(1.0, -phi / 2.0), std::polar(1.0, phi / 2.0));
}

Mat2c squeezer(double eta) {
  require_finite(eta, "squeezer");
  return Mat2c::diagonal(cplx(std::exp(eta / 2.0)), cplx(std::exp(-eta / 2.0)));
}

AttenuationResult attenuator(double eta1, double eta2) {
  require_finite(eta1, "attenuator");
  require_finite(eta2, "attenuator");
  return {std::exp(-(eta1 + eta2) / 2.0), squeezer(eta2 - eta1)};
}

Mat2c compose(std::span<const Mat2c> elements) {
  Mat2c acc = Mat2c::identity();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!is_unimodular(elements[i], kUnimodularTol)) {
      throw std::invalid_argument(
          "compose: element " + std::to_string(i) + " is not unimodular (|det - 1| = " +
          std::to_string(std::abs(elements[i].det() - cplx(1.0))) + ")");
    }
    acc = elements[i] * acc;  // later elements act on the left
  }
  return acc;
}

Mat2c compose(std::initializer_list<Mat2c> elements) {
  return compose(std::span<const Mat2c>(elements.begin(), elements.size()));
}

JonesVector apply_jones(const Mat2c& g, const JonesVector& v) {
  return {g(0, 0) * v.psi1 + g(0, 1) * v.psi2, g(1, 0) * v.psi1 + g(1, 1) * v.psi2};
}

}  // namespace psphere
