#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace psphere {

using cplx = std::complex<double>;

inline bool is_finite(cplx z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// 2x2 complex matrix, row-major storage. Carrier for the SL(2,C) optical
/// elements and for coherency/density matrices. Construction rejects
/// NaN/Inf entries so downstream arithmetic never sees them.
class Mat2c {
 public:
  Mat2c() : e_{} {}
  Mat2c(cplx a11, cplx a12, cplx a21, cplx a22) : e_{a11, a12, a21, a22} {
    for (const cplx& z : e_) {
      if (!is_finite(z)) throw std::invalid_argument("Mat2c: non-finite entry");
    }
  }

  static Mat2c identity() { return {cplx(1.0), cplx(0.0), cplx(0.0), cplx(1.0)}; }
  static Mat2c diagonal(cplx d1, cplx d2) { return {d1, cplx(0.0), cplx(0.0), d2}; }

  cplx operator()(int i, int j) const { return e_[2 * i + j]; }

  cplx det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }
  cplx trace() const { return e_[0] + e_[3]; }

  /// Conjugate transpose.
  Mat2c adjoint() const {
    return {std::conj(e_[0]), std::conj(e_[2]), std::conj(e_[1]), std::conj(e_[3])};
  }

  Mat2c transpose() const { return {e_[0], e_[2], e_[1], e_[3]}; }

  Mat2c conj() const {
    return {std::conj(e_[0]), std::conj(e_[1]), std::conj(e_[2]), std::conj(e_[3])};
  }

  /// Inverse via the adjugate. Throws for (numerically) singular input.
  Mat2c inverse() const {
    const cplx d = det();
    if (std::abs(d) < 1e-300) throw std::domain_error("Mat2c: singular matrix");
    return {e_[3] / d, -e_[1] / d, -e_[2] / d, e_[0] / d};
  }

  friend Mat2c operator*(const Mat2c& a, const Mat2c& b) {
    return {a.e_[0] * b.e_[0] + a.e_[1] * b.e_[2],
            a.e_[0] * b.e_[1] + a.e_[1] * b.e_[3],
            a.e_[2] * b.e_[0] + a.e_[3] * b.e_[2],
            a.e_[2] * b.e_[1] + a.e_[3] * b.e_[3]};
  }

  friend Mat2c operator+(const Mat2c& a, const Mat2c& b) {
    return {a.e_[0] + b.e_[0], a.e_[1] + b.e_[1], a.e_[2] + b.e_[2], a.e_[3] + b.e_[3]};
  }

  friend Mat2c operator-(const Mat2c& a, const Mat2c& b) {
    return {a.e_[0] - b.e_[0], a.e_[1] - b.e_[1], a.e_[2] - b.e_[2], a.e_[3] - b.e_[3]};
  }

  friend Mat2c operator*(cplx s, const Mat2c& a) {
    return {s * a.e_[0], s * a.e_[1], s * a.e_[2], s * a.e_[3]};
  }

  friend Mat2c operator*(const Mat2c& a, cplx s) { return s * a; }

 private:
  std::array<cplx, 4> e_;
};

inline double max_abs(const Mat2c& m) {
  double r = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r = std::max(r, std::abs(m(i, j)));
  return r;
}

inline double max_abs_diff(const Mat2c& a, const Mat2c& b) { return max_abs(a - b); }

/// |det - 1| test used to tag a matrix as an SL(2,C) element.
inline bool is_unimodular(const Mat2c& m, double tol = 1e-10) {
  return std::abs(m.det() - cplx(1.0)) <= tol;
}

inline void require_unimodular(const Mat2c& m, double tol, const std::string& what) {
  if (!is_unimodular(m, tol)) {
    throw std::invalid_argument(what + ": matrix is not unimodular (|det - 1| = " +
                                std::to_string(std::abs(m.det() - cplx(1.0))) + ")");
  }
}

/// Hermiticity test with a tolerance relative to the matrix scale, so large
/// conjugation products are judged by their own ulp budget.
inline bool is_hermitian(const Mat2c& m, double tol = 1e-12) {
  const double scale = std::max(1.0, max_abs(m));
  return std::abs(m(0, 0).imag()) <= tol * scale &&
         std::abs(m(1, 1).imag()) <= tol * scale &&
         std::abs(m(0, 1) - std::conj(m(1, 0))) <= tol * scale;
}

}  // namespace psphere
