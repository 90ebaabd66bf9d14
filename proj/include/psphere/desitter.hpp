#pragma once

#include <array>

#include "psphere/poincare.hpp"
#include "psphere/stokes.hpp"

namespace psphere {

/// Point of the (3,2) five-space: two time-like components (t, u) and three
/// space-like ones (z, x, y). The second time-like direction u carries the
/// coherence handed over to the environment as the state decoheres.
struct FiveVector {
  double t;
  double z;
  double x;
  double y;
  double u;

  FiveVector(double t_, double z_, double x_, double y_, double u_);
};

/// Real 5x5 transformation preserving the metric diag(+1,-1,-1,-1,+1).
class O32Matrix {
 public:
  O32Matrix() : e_{} {}

  static O32Matrix identity() {
    O32Matrix m;
    for (int i = 0; i < 5; ++i) m.set(i, i, 1.0);
    return m;
  }

  double operator()(int i, int j) const { return e_[5 * i + j]; }
  void set(int i, int j, double v) { e_[5 * i + j] = v; }

  /// M^T g M = g within tol, g = diag(1,-1,-1,-1,1).
  bool preserves_metric(double tol = 1e-9) const;

  FiveVector apply(const FiveVector& v) const;

  friend O32Matrix operator*(const O32Matrix& a, const O32Matrix& b);

 private:
  std::array<double, 25> e_;  // row-major
};

/// Decoherence parameter chi in [0, pi/2], tied to physical time by
/// cos(chi) = e^{-lambda t}. Out-of-range input is rejected, not wrapped:
/// nonnegative rates and times never leave the interval.
class DecoherenceAngle {
 public:
  explicit DecoherenceAngle(double chi);

  double value() const { return chi_; }

 private:
  double chi_;
};

/// Rotation by chi in the (t, u) plane: t' = t cos(chi) + u sin(chi),
/// u' = -t sin(chi) + u cos(chi), space components fixed. Takes the fresh
/// state (0,0,0,0,m) to (m sin(chi), 0, 0, 0, m cos(chi)).
O32Matrix tu_rotation(const DecoherenceAngle& chi);

/// The invariant t^2 + u^2 - z^2 - x^2 - y^2.
double o32_norm(const FiveVector& v);

/// Embed a Lorentz transformation into the five-space acting on the
/// (t, z, x, y) subspace, leaving u fixed.
O32Matrix lift_first(const MuellerMatrix& m4);

/// Same, acting on the (u, z, x, y) subspace, leaving t fixed.
O32Matrix lift_second(const MuellerMatrix& m4);

/// chi = arccos(e^{-lambda t}), monotone increasing in t from 0 toward pi/2.
DecoherenceAngle chi_from_time(double lambda_rate, double time);

/// Observed-space density matrix [[A^2, AB e^{-i phase} cos(chi)], [conj, B^2]];
/// det = (AB)^2 sin^2(chi). Coincides with density_matrix(state) at
/// chi = chi_from_time(lambda, t).
CoherencyMatrix rho_of_chi(double amp_a, double amp_b, double phase,
                           const DecoherenceAngle& chi);

/// Complementary-space density matrix with sin(chi) off-diagonals;
/// det = (AB)^2 cos^2(chi). det rho + det sigma = (AB)^2 for every chi.
CoherencyMatrix sigma_of_chi(double amp_a, double amp_b, double phase,
                             const DecoherenceAngle& chi);

/// Five-space embedding of a canonicalized state: (value, 0, 0, 0, m cos(chi)).
/// The identification value = m sin(chi) is a checked equality, not an
/// assumption; a mismatch beyond tolerance is rejected.
FiveVector embed_canonical(double value, double m, const DecoherenceAngle& chi);

/// How decohere_step advances the state: Direct recomputes the exponential
/// decay at the new time; DeSitter canonicalizes, rotates the five-space
/// embedding by the chi increment, and maps back. The two agree within 1e-9;
/// DeSitter is undefined exactly at the pure-state boundary t = 0.
enum class DecoherencePath { Direct, DeSitter };

struct DecohereResult {
  BeamState state;
  CoherencyMatrix rho;
  CoherencyMatrix sigma;
};

DecohereResult decohere_step(const BeamState& state, double dt,
                             DecoherencePath path = DecoherencePath::Direct);

}  // namespace psphere
