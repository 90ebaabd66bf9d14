#include "psphere/desitter.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace psphere {

namespace {

const std::array<double, 5> kMetric5 = {1.0, -1.0, -1.0, -1.0, 1.0};

// Index map for the second Minkowskian subspace (u, z, x, y).
constexpr std::array<int, 4> kSecondSubspace = {4, 1, 2, 3};

}  // namespace

FiveVector::FiveVector(double t_, double z_, double x_, double y_, double u_)
    : t(t_), z(z_), x(x_), y(y_), u(u_) {
  for (double c : {t, z, x, y, u}) {
    if (!std::isfinite(c)) throw std::invalid_argument("FiveVector: non-finite component");
  }
}

bool O32Matrix::preserves_metric(double tol) const {
  for (int i = 0; i < 5; ++i) {
    for (int j = i; j < 5; ++j) {
      double acc = 0.0;
      for (int k = 0; k < 5; ++k) acc += (*this)(k, i) * kMetric5[k] * (*this)(k, j);
      const double want = (i == j) ? kMetric5[i] : 0.0;
      if (std::abs(acc - want) > tol) return false;
    }
  }
  return true;
}

FiveVector O32Matrix::apply(const FiveVector& v) const {
  const std::array<double, 5> in = {v.t, v.z, v.x, v.y, v.u};
  std::array<double, 5> out{};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) out[i] += (*this)(i, j) * in[j];
  return {out[0], out[1], out[2], out[3], out[4]};
}

O32Matrix operator*(const O32Matrix& a, const O32Matrix& b) {
  O32Matrix p;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      double acc = 0.0;
      for (int k = 0; k < 5; ++k) acc += a(i, k) * b(k, j);
      p.set(i, j, acc);
    }
  return p;
}

DecoherenceAngle::DecoherenceAngle(double chi) : chi_(chi) {
  if (!std::isfinite(chi_) || chi_ < 0.0 || chi_ > std::numbers::pi / 2.0) {
    throw std::domain_error("DecoherenceAngle: chi must lie in [0, pi/2]");
  }
}

O32Matrix tu_rotation(const DecoherenceAngle& chi) {
  const double c = std::cos(chi.value());
  const double s = std::sin(chi.value());
  O32Matrix m = O32Matrix::identity();
  m.set(0, 0, c);
  m.set(0, 4, s);
  m.set(4, 0, -s);
  m.set(4, 4, c);
  return m;
}

double o32_norm(const FiveVector& v) {
  return v.t * v.t + v.u * v.u - v.z * v.z - v.x * v.x - v.y * v.y;
}

O32Matrix lift_first(const MuellerMatrix& m4) {
  O32Matrix m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m.set(i, j, m4(i, j));
  m.set(4, 4, 1.0);
  return m;
}

O32Matrix lift_second(const MuellerMatrix& m4) {
  O32Matrix m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m.set(kSecondSubspace[i], kSecondSubspace[j], m4(i, j));
  m.set(0, 0, 1.0);
  return m;
}

DecoherenceAngle chi_from_time(double lambda_rate, double time) {
  if (!std::isfinite(lambda_rate) || lambda_rate < 0.0) {
    throw std::invalid_argument("chi_from_time: lambda_rate must be finite and nonnegative");
  }
  if (!std::isfinite(time) || time < 0.0) {
    throw std::invalid_argument("chi_from_time: time must be finite and nonnegative");
  }
  return DecoherenceAngle(std::acos(std::exp(-lambda_rate * time)));
}

namespace {

CoherencyMatrix beam_matrix(double amp_a, double amp_b, double phase, double off_scale,
                            const char* what) {
  if (!std::isfinite(amp_a) || amp_a < 0.0 || !std::isfinite(amp_b) || amp_b < 0.0) {
    throw std::invalid_argument(std::string(what) + ": amplitudes must be finite and nonnegative");
  }
  if (!std::isfinite(phase)) {
    throw std::invalid_argument(std::string(what) + ": phase must be finite");
  }
  const cplx off = amp_a * amp_b * off_scale * std::polar(1.0, -phase);
  return CoherencyMatrix(
      Mat2c(cplx(amp_a * amp_a), off, std::conj(off), cplx(amp_b * amp_b)));
}

}  // namespace

CoherencyMatrix rho_of_chi(double amp_a, double amp_b, double phase,
                           const DecoherenceAngle& chi) {
  return beam_matrix(amp_a, amp_b, phase, std::cos(chi.value()), "rho_of_chi");
}

CoherencyMatrix sigma_of_chi(double amp_a, double amp_b, double phase,
                             const DecoherenceAngle& chi) {
  return beam_matrix(amp_a, amp_b, phase, std::sin(chi.value()), "sigma_of_chi");
}

FiveVector embed_canonical(double value, double m, const DecoherenceAngle& chi) {
  if (!std::isfinite(value) || !std::isfinite(m)) {
    throw std::invalid_argument("embed_canonical: non-finite input");
  }
  const double expected = m * std::sin(chi.value());
  if (std::abs(value - expected) > 1e-9 * std::max(1.0, std::abs(m))) {
    throw std::invalid_argument("embed_canonical: value does not equal m sin(chi)");
  }
  return {value, 0.0, 0.0, 0.0, m * std::cos(chi.value())};
}

DecohereResult decohere_step(const BeamState& state, double dt, DecoherencePath path) {
  if (!std::isfinite(dt) || dt < 0.0) {
    throw std::invalid_argument("decohere_step: dt must be finite and nonnegative");
  }
  const BeamState next = state.with_time(state.time + dt);
  const DecoherenceAngle chi_next = chi_from_time(next.lambda_rate, next.time);
  CoherencyMatrix sigma = sigma_of_chi(next.amp_a, next.amp_b, next.phase, chi_next);

  if (path == DecoherencePath::Direct) {
    return {next, density_matrix(next), std::move(sigma)};
  }

  // O(3,2) route: reduce to the canonical one-number form, ride the (t,u)
  // rotation through the chi increment, then rebuild the four-space state.
  const SphereGeometry geom = sphere_geometry(state);
  const CanonicalForm form = canonical_boost(geom);
  const double m = state.amp_a * state.amp_b;
  const DecoherenceAngle chi_now = chi_from_time(state.lambda_rate, state.time);

  const FiveVector embedded = embed_canonical(form.value, m, chi_now);
  const DecoherenceAngle dchi(chi_next.value() - chi_now.value());
  const FiveVector rotated = tu_rotation(dchi).apply(embedded);

  // The rotated time component is the new canonical value; the new inner
  // radius follows from the invariant s^2 - r^2, and the inner direction
  // keeps its azimuth while the polar angle reopens toward the z axis.
  const double s = geom.outer_s;
  const double value_next = rotated.t;
  const double r_next = std::sqrt(std::max(s * s - value_next * value_next, 0.0));
  const double polar_next =
      r_next > 0.0 ? std::acos(std::clamp(geom.rz / r_next, -1.0, 1.0)) : 0.0;
  const double rx_next = r_next * std::sin(polar_next) * std::cos(geom.azimuth);
  const double ry_next = r_next * std::sin(polar_next) * std::sin(geom.azimuth);

  const cplx off(rx_next, -ry_next);
  CoherencyMatrix rho(Mat2c(cplx(s + geom.rz), off, std::conj(off), cplx(s - geom.rz)));
  return {next, std::move(rho), std::move(sigma)};
}

}  // namespace psphere
