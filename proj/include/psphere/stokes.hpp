#pragma once

#include <array>

#include "psphere/jones.hpp"
#include "psphere/mat2.hpp"

namespace psphere {

/// Hermitian 2x2 matrix of beam self- and cross-correlations. Also serves as
/// the density matrix of the two-beam system. Construction rejects
/// non-Hermitian input (entrywise tolerance 1e-12 relative to the matrix
/// scale); positivity is NOT enforced, it is a queryable property, so
/// unphysical but Hermitian matrices remain representable.
class CoherencyMatrix {
 public:
  explicit CoherencyMatrix(const Mat2c& m) : m_(m) {
    if (!is_hermitian(m_)) {
      throw std::invalid_argument("CoherencyMatrix: matrix is not Hermitian");
    }
  }

  const Mat2c& matrix() const { return m_; }

  double s11() const { return m_(0, 0).real(); }
  double s22() const { return m_(1, 1).real(); }
  cplx s12() const { return m_(0, 1); }
  cplx s21() const { return m_(1, 0); }

  /// det is real for Hermitian input; the rounding-level imaginary residue
  /// is discarded.
  double det() const { return m_.det().real(); }

  /// Positive semidefinite with nonnegative intensities, i.e. realizable as
  /// a statistical mixture of beams.
  bool physical(double tol = 1e-10) const {
    return s11() >= -tol && s22() >= -tol && det() >= -tol;
  }

 private:
  Mat2c m_;
};

/// Real four-vector (S0, S1, S2, S3) in the 1/sqrt(2) normalization, so the
/// Minkowski quadratic form equals twice the coherency-matrix determinant.
struct StokesVector {
  double s0;
  double s1;
  double s2;
  double s3;

  StokesVector(double a, double b, double c, double d) : s0(a), s1(b), s2(c), s3(d) {
    if (!std::isfinite(s0) || !std::isfinite(s1) || !std::isfinite(s2) || !std::isfinite(s3)) {
      throw std::invalid_argument("StokesVector: non-finite component");
    }
  }

  /// Forward-pointing inside (or on) the light cone.
  bool physical(double tol = 1e-10) const {
    return s0 >= -tol && s0 * s0 - s1 * s1 - s2 * s2 - s3 * s3 >= -tol;
  }
};

/// s0^2 - s1^2 - s2^2 - s3^2, the quantity every induced transformation
/// preserves. Equals 2 det(C) for the matching coherency matrix.
double minkowski_norm(const StokesVector& s);

/// Real 4x4 transformation acting on Stokes vectors. Every matrix produced
/// by this library preserves the Minkowski form diag(1,-1,-1,-1) and the
/// direction of time (entry (0,0) >= 1).
class MuellerMatrix {
 public:
  MuellerMatrix() : e_{} {}
  explicit MuellerMatrix(const std::array<double, 16>& entries) : e_(entries) {}

  static MuellerMatrix identity() {
    MuellerMatrix m;
    for (int i = 0; i < 4; ++i) m.set(i, i, 1.0);
    return m;
  }

  double operator()(int i, int j) const { return e_[4 * i + j]; }
  void set(int i, int j, double v) { e_[4 * i + j] = v; }
  const std::array<double, 16>& data() const { return e_; }

  MuellerMatrix transpose() const {
    MuellerMatrix t;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) t.set(i, j, (*this)(j, i));
    return t;
  }

  /// M^T g M = g within tol, g = diag(1,-1,-1,-1).
  bool is_lorentz(double tol = 1e-9) const;

  bool is_orthochronous(double tol = 1e-10) const { return (*this)(0, 0) >= 1.0 - tol; }

  /// Exact inverse for Lorentz matrices: g M^T g.
  MuellerMatrix minkowski_inverse() const;

  StokesVector apply(const StokesVector& s) const;
  std::array<double, 4> apply(const std::array<double, 4>& v) const;

  friend MuellerMatrix operator*(const MuellerMatrix& a, const MuellerMatrix& b);

 private:
  std::array<double, 16> e_;  // row-major
};

double max_abs_diff(const MuellerMatrix& a, const MuellerMatrix& b);

/// Factorization g = rotation_part * boost_part with the rotation unitary
/// (det 1) and the boost Hermitian positive definite (det 1).
struct PolarFactors {
  Mat2c rotation_part;
  Mat2c boost_part;
  double wigner_angle;  // signed rotation angle of rotation_part, in (-pi, pi]
};

/// Pure-state coherency matrix of a Jones vector: S11 = |psi1|^2,
/// S22 = |psi2|^2, S12 = psi1 conj(psi2). With this index convention the
/// matrix is the outer product psi psi^dagger, so a Jones-side map
/// psi -> G psi acts on it exactly as C -> G C G^dagger.
CoherencyMatrix coherency_from_jones(const JonesVector& v);

/// C -> G C G^dagger for unimodular G. Preserves Hermiticity and the
/// determinant.
CoherencyMatrix conjugate(const Mat2c& g, const CoherencyMatrix& c);

/// S0 = (S11+S22)/sqrt(2), S1 = (S11-S22)/sqrt(2), S2 = (S12+S21)/sqrt(2),
/// S3 = (S12-S21)/(sqrt(2) i). Imaginary residues at rounding level are
/// discarded.
StokesVector stokes_from_coherency(const CoherencyMatrix& c);

/// Exact inverse of stokes_from_coherency. Accepts unphysical vectors; the
/// result is Hermitian by construction and merely flagged via physical().
CoherencyMatrix coherency_from_stokes(const StokesVector& s);

/// The unique real 4x4 matrix M with stokes(G C G^dagger) = M stokes(C) for
/// every Hermitian C, computed by pushing the four Hermitian basis matrices
/// through the conjugation and reading off columns.
///
/// Note on sign conventions: with S12 = psi1 conj(psi2) and the S3 definition
/// above, phase_shifter(phi) induces a rotation by -phi in the (S2, S3)
/// block; texts using the transposed correlation convention
/// S12 = conj(psi1) psi2 get +phi. The conjugation action is normative here,
/// and explicit 4x4 arrays found elsewhere should be checked against it
/// before reuse.
MuellerMatrix mueller_from_sl2c(const Mat2c& g);

/// Left polar decomposition g = U H of a unimodular matrix, with the signed
/// rotation angle of U. The angle is measured in the rotator(theta)
/// parameterization (rotator(theta) maps to +theta); for a general unitary
/// factor the axis is canonicalized so that its y component (then z, then x)
/// is positive.
PolarFactors polar_decompose(const Mat2c& g);

}  // namespace psphere
