#include "psphere/stokes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace psphere {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

const std::array<double, 4> kMetric = {1.0, -1.0, -1.0, -1.0};

}  // namespace

double minkowski_norm(const StokesVector& s) {
  return s.s0 * s.s0 - s.s1 * s.s1 - s.s2 * s.s2 - s.s3 * s.s3;
}

bool MuellerMatrix::is_lorentz(double tol) const {
  // M^T g M == g, expanded column by column.
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      double acc = 0.0;
      for (int k = 0; k < 4; ++k) acc += (*this)(k, i) * kMetric[k] * (*this)(k, j);
      const double want = (i == j) ? kMetric[i] : 0.0;
      if (std::abs(acc - want) > tol) return false;
    }
  }
  return true;
}

MuellerMatrix MuellerMatrix::minkowski_inverse() const {
  MuellerMatrix inv;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) inv.set(i, j, kMetric[i] * (*this)(j, i) * kMetric[j]);
  return inv;
}

StokesVector MuellerMatrix::apply(const StokesVector& s) const {
  const std::array<double, 4> v = apply(std::array<double, 4>{s.s0, s.s1, s.s2, s.s3});
  return {v[0], v[1], v[2], v[3]};
}

std::array<double, 4> MuellerMatrix::apply(const std::array<double, 4>& v) const {
  std::array<double, 4> out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

MuellerMatrix operator*(const MuellerMatrix& a, const MuellerMatrix& b) {
  MuellerMatrix p;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double acc = 0.0;
      for (int k = 0; k < 4; ++k) acc += a(i, k) * b(k, j);
      p.set(i, j, acc);
    }
  return p;
}

double max_abs_diff(const MuellerMatrix& a, const MuellerMatrix& b) {
  double r = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r = std::max(r, std::abs(a(i, j) - b(i, j)));
  return r;
}

CoherencyMatrix coherency_from_jones(const JonesVector& v) {
  return CoherencyMatrix(Mat2c(v.psi1 * std::conj(v.psi1), v.psi1 * std::conj(v.psi2),
                               v.psi2 * std::conj(v.psi1), v.psi2 * std::conj(v.psi2)));
}

CoherencyMatrix conjugate(const Mat2c& g, const CoherencyMatrix& c) {
  require_unimodular(g, kUnimodularTol, "conjugate");
  return CoherencyMatrix(g * c.matrix() * g.adjoint());
}

StokesVector stokes_from_coherency(const CoherencyMatrix& c) {
  const cplx s12 = c.s12();
  const cplx s21 = c.s21();
  return {(c.s11() + c.s22()) / kSqrt2, (c.s11() - c.s22()) / kSqrt2,
          ((s12 + s21) / kSqrt2).real(), ((s12 - s21) / (kSqrt2 * cplx(0.0, 1.0))).real()};
}

CoherencyMatrix coherency_from_stokes(const StokesVector& s) {
  const cplx s12 = cplx(s.s2, s.s3) / kSqrt2;
  return CoherencyMatrix(Mat2c(cplx((s.s0 + s.s1) / kSqrt2), s12, std::conj(s12),
                               cplx((s.s0 - s.s1) / kSqrt2)));
}

MuellerMatrix mueller_from_sl2c(const Mat2c& g) {
  require_unimodular(g, kUnimodularTol, "mueller_from_sl2c");
  const Mat2c gdag = g.adjoint();
  MuellerMatrix m;
  for (int col = 0; col < 4; ++col) {
    std::array<double, 4> e{};
    e[col] = 1.0;
    const CoherencyMatrix basis = coherency_from_stokes(StokesVector(e[0], e[1], e[2], e[3]));
    const Mat2c image = g * basis.matrix() * gdag;

    // The image is Hermitian up to rounding; the Stokes components' imaginary
    // residues must stay at that level before being discarded.
    const double scale = std::max(1.0, max_abs(image));
    const cplx c0 = (image(0, 0) + image(1, 1)) / kSqrt2;
    const cplx c1 = (image(0, 0) - image(1, 1)) / kSqrt2;
    const cplx c2 = (image(0, 1) + image(1, 0)) / kSqrt2;
    const cplx c3 = (image(0, 1) - image(1, 0)) / (kSqrt2 * cplx(0.0, 1.0));
    for (const cplx& c : {c0, c1, c2, c3}) {
      if (std::abs(c.imag()) > 1e-10 * scale) {
        throw std::runtime_error("mueller_from_sl2c: imaginary residue above budget");
      }
    }
    m.set(0, col, c0.real());
    m.set(1, col, c1.real());
    m.set(2, col, c2.real());
    m.set(3, col, c3.real());
  }
  return m;
}

PolarFactors polar_decompose(const Mat2c& g) {
  require_unimodular(g, kUnimodularTol, "polar_decompose");

  // For det g = 1, H = sqrt(g^dag g) has the closed form
  // (g^dag g + I) / sqrt(tr(g^dag g) + 2)  (Cayley-Hamilton), with det H = 1.
  const Mat2c gram = g.adjoint() * g;
  const double denom = gram.trace().real() + 2.0;
  if (denom <= 1e-12) {
    throw std::runtime_error("polar_decompose: Hermitian factor is singular");
  }
  const double k = std::sqrt(denom);
  const Mat2c h = cplx(1.0 / k) * (gram + Mat2c::identity());
  const Mat2c u = g * h.inverse();

  // U = cos(w/2) I - i sin(w/2) (n . sigma); read off sin(w/2) * n from the
  // entries, take w >= 0, then orient the axis (y, then z, then x) so that
  // rotator(theta) reports +theta.
  const double c = std::clamp(u(0, 0).real(), -1.0, 1.0);
  const double sx = -u(0, 1).imag();
  const double sy = -u(0, 1).real();
  const double sz = -u(0, 0).imag();
  const double s = std::sqrt(sx * sx + sy * sy + sz * sz);
  double angle = 2.0 * std::atan2(s, c);  // in [0, 2*pi)

  constexpr double kAxisEps = 1e-14;
  double primary = sy;
  if (std::abs(primary) <= kAxisEps) primary = sz;
  if (std::abs(primary) <= kAxisEps) primary = sx;
  if (primary < -kAxisEps) angle = -angle;

  if (angle > std::numbers::pi) angle -= 2.0 * std::numbers::pi;
  if (angle <= -std::numbers::pi) angle += 2.0 * std::numbers::pi;

  return {u, h, angle};
}

}  // namespace psphere
