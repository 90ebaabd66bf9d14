#pragma once

#include <span>
#include <vector>

#include "psphere/mat2.hpp"

namespace psphere {

/// Per-element unimodularity budget, and the looser budget allowed after
/// composing up to ~100 elements.
inline constexpr double kUnimodularTol = 1e-10;
inline constexpr double kComposedUnimodularTol = 1e-8;

/// Two complex beam amplitudes. Fully coherent two-beam (or two
/// polarization) state.
struct JonesVector {
  cplx psi1;
  cplx psi2;

  JonesVector(cplx p1, cplx p2) : psi1(p1), psi2(p2) {
    if (!is_finite(psi1) || !is_finite(psi2)) {
      throw std::invalid_argument("JonesVector: non-finite component");
    }
  }
};

/// An attenuator splits into an overall amplitude factor, which rescales both
/// beams equally and leaves the degree of polarization alone, and a
/// unimodular relative (squeeze) part that carries the whole polarization
/// effect.
struct AttenuationResult {
  double overall_factor;  // e^{-(eta1+eta2)/2}, > 0
  Mat2c relative;         // squeezer(eta2 - eta1), det = 1
};

/// Beam-mixing rotation: [[cos(theta/2), -sin(theta/2)], [sin(theta/2), cos(theta/2)]].
Mat2c rotator(double theta);

/// Relative phase shift: diag(e^{-i phi/2}, e^{+i phi/2}).
Mat2c phase_shifter(double phi);

/// Relative amplitude squeeze: diag(e^{eta/2}, e^{-eta/2}).
Mat2c squeezer(double eta);

/// Two-rate attenuation diag(e^{-eta1}, e^{-eta2}), returned in factored form.
AttenuationResult attenuator(double eta1, double eta2);

/// Product of SL(2,C) elements in application order: elements[0] acts first,
/// so the result is elements[n-1] * ... * elements[0]. Each input must be
/// unimodular within kUnimodularTol; violations report the offending index.
Mat2c compose(std::span<const Mat2c> elements);
Mat2c compose(std::initializer_list<Mat2c> elements);

JonesVector apply_jones(const Mat2c& g, const JonesVector& v);

}  // namespace psphere
