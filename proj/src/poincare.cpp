#include "psphere/poincare.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "psphere/jones.hpp"

namespace psphere {

namespace {

void require_nonnegative(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument(std::string("BeamState: ") + what + " is not finite");
  }
  if (x < 0.0) {
    throw std::invalid_argument(std::string("BeamState: ") + what + " must be nonnegative");
  }
}

constexpr double kPureStateGap = 1e-12;

}  // namespace

BeamState::BeamState(double a, double b, double ph, double lam, double t)
    : amp_a(a), amp_b(b), phase(ph), lambda_rate(lam), time(t) {
  require_nonnegative(amp_a, "amp_a");
  require_nonnegative(amp_b, "amp_b");
  if (!std::isfinite(phase)) throw std::invalid_argument("BeamState: phase is not finite");
  require_nonnegative(lambda_rate, "lambda_rate");
  require_nonnegative(time, "time");
}

CoherencyMatrix density_matrix(const BeamState& state) {
  const double decay = std::exp(-state.lambda_rate * state.time);
  const cplx off = state.amp_a * state.amp_b * decay * std::polar(1.0, -state.phase);
  return CoherencyMatrix(Mat2c(cplx(state.amp_a * state.amp_a), off, std::conj(off),
                               cplx(state.amp_b * state.amp_b)));
}

SphereGeometry sphere_geometry(const BeamState& state) {
  const double a2 = state.amp_a * state.amp_a;
  const double b2 = state.amp_b * state.amp_b;
  const double decay = std::exp(-state.lambda_rate * state.time);
  const double ab = state.amp_a * state.amp_b;

  SphereGeometry g;
  g.outer_s = (a2 + b2) / 2.0;
  g.rz = (a2 - b2) / 2.0;
  g.rx = ab * std::cos(state.phase) * decay;
  g.ry = ab * std::sin(state.phase) * decay;
  g.inner_r = std::sqrt(g.rz * g.rz + g.rx * g.rx + g.ry * g.ry);
  g.polar = g.inner_r > 0.0 ? std::acos(std::clamp(g.rz / g.inner_r, -1.0, 1.0)) : 0.0;
  g.azimuth = (g.rx != 0.0 || g.ry != 0.0) ? std::atan2(g.ry, g.rx) : 0.0;
  return g;
}

std::array<double, 4> sphere_vector(const SphereGeometry& geom) {
  return {geom.outer_s, geom.rz, geom.rx, geom.ry};
}

StokesVector stokes_from_sphere(const std::array<double, 4>& sphere) {
  return {kSphereToStokes * sphere[0], kSphereToStokes * sphere[1],
          kSphereToStokes * sphere[2], -kSphereToStokes * sphere[3]};
}

MuellerMatrix align_rotation(const SphereGeometry& geom) {
  if (geom.inner_r <= 0.0) return MuellerMatrix::identity();
  return mueller_from_sl2c(rotator(-geom.polar) * phase_shifter(geom.azimuth));
}

CanonicalForm canonical_boost(const SphereGeometry& geom) {
  const double s = geom.outer_s;
  const double r = geom.inner_r;
  if (s <= 0.0 || s - r <= kPureStateGap) {
    throw PureStateNotReducible("pure state not reducible: inner radius reaches the outer "
                                "radius, boost rapidity diverges");
  }
  CanonicalForm form{std::sqrt(std::max(s * s - r * r, 0.0)), std::atanh(r / s),
                     align_rotation(geom)};
  return form;
}

std::pair<CanonicalForm, MuellerMatrix> canonicalize(const BeamState& state) {
  const SphereGeometry geom = sphere_geometry(state);
  CanonicalForm form = canonical_boost(geom);
  // The inverse boost along the aligned axis is squeezer(-eta); apply it
  // after the alignment rotation (leftmost factor acts last).
  const Mat2c total = squeezer(-form.boost_eta) *
                      (geom.inner_r > 0.0 ? rotator(-geom.polar) * phase_shifter(geom.azimuth)
                                          : Mat2c::identity());
  return {std::move(form), mueller_from_sl2c(total)};
}

}  // namespace psphere
