#pragma once

#include <array>
#include <utility>

#include "psphere/stokes.hpp"

namespace psphere {

/// Conversion between the sphere radii convention (s = (A^2+B^2)/2) and the
/// Stokes normalization (S0 = (A^2+B^2)/sqrt(2)): Stokes = sqrt(2) * sphere.
inline constexpr double kSphereToStokes = 1.4142135623730951;

/// Two-beam system with amplitudes A, B, relative phase, and exponential
/// decoherence rate lambda: off-diagonal correlations decay as e^{-lambda t}.
struct BeamState {
  double amp_a;        // A >= 0
  double amp_b;        // B >= 0
  double phase;        // radians
  double lambda_rate;  // decay rate >= 0, inverse time
  double time;         // t >= 0

  BeamState(double a, double b, double ph, double lam, double t);

  BeamState with_time(double t) const { return {amp_a, amp_b, phase, lambda_rate, t}; }
};

/// Two-radius geometry of a decohering state: the outer sphere of radius s
/// (fixed by the intensities) and the inner sphere of radius r (shrinking as
/// coherence decays), plus the polar/azimuth direction of the inner vector.
struct SphereGeometry {
  double outer_s;  // (A^2 + B^2)/2
  double inner_r;  // sqrt(rz^2 + rx^2 + ry^2) <= outer_s
  double polar;    // arccos(rz / r) in [0, pi]; 0 when r = 0
  double azimuth;  // atan2(ry, rx)
  double rz;       // (A^2 - B^2)/2
  double rx;       // A B cos(phase) e^{-lambda t}
  double ry;       // A B sin(phase) e^{-lambda t}
};

/// Requested a canonical (boost-reduced) form of a pure state: r = s there,
/// so the boost rapidity atanh(r/s) diverges and no canonical form exists.
class PureStateNotReducible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Result of reducing a mixed state to a single number: the invariant value
/// sqrt(s^2 - r^2), the boost rapidity that achieves it, and the rotation
/// that first aligns the inner vector with the z axis.
struct CanonicalForm {
  double value;      // sqrt(s^2 - r^2) = AB sqrt(1 - e^{-2 lambda t})
  double boost_eta;  // atanh(r/s)
  MuellerMatrix align_rotation;
};

/// Density matrix [[A^2, AB e^{-i phase} e^{-lambda t}], [conj, B^2]].
/// det = (AB)^2 (1 - e^{-2 lambda t}): zero at t = 0, asymptotically (AB)^2.
CoherencyMatrix density_matrix(const BeamState& state);

SphereGeometry sphere_geometry(const BeamState& state);

/// The sphere-convention four-vector (s, rz, rx, ry).
std::array<double, 4> sphere_vector(const SphereGeometry& geom);

/// Stokes vector of the same state: sqrt(2) times the sphere vector, except
/// that S3 = -sqrt(2) ry (the S3 = (S12 - S21)/(sqrt(2) i) convention points
/// opposite to the geometric y component).
StokesVector stokes_from_sphere(const std::array<double, 4>& sphere);

/// Pure rotation (S0 fixed) taking (s, rz, rx, ry) to (s, r, 0, 0): undo the
/// azimuth with a phase-shifter conjugation, then tilt the polar angle away
/// with a rotator. Identity for the degenerate r = 0 direction.
MuellerMatrix align_rotation(const SphereGeometry& geom);

/// Alignment plus the boost of rapidity atanh(r/s) along the aligned axis,
/// landing on (sqrt(s^2 - r^2), 0, 0, 0). Throws PureStateNotReducible when
/// s - r <= 1e-12.
CanonicalForm canonical_boost(const SphereGeometry& geom);

/// Full reduction of a mixed state to one number. Returns the canonical form
/// and the total transformation (boost composed after rotation) that maps the
/// sphere vector to (value, 0, 0, 0); its minkowski_inverse() restores the
/// original sphere vector.
std::pair<CanonicalForm, MuellerMatrix> canonicalize(const BeamState& state);

}  // namespace psphere
