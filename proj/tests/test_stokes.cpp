#include <cmath>
#include <numbers>

#include "doctest.h"
#include "psphere/jones.hpp"
#include "psphere/poincare.hpp"
#include "psphere/stokes.hpp"
#include "psphere/suites.hpp"

using namespace psphere;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = 1.4142135623730951;

CoherencyMatrix random_hermitian(RandomStream& rng) {
  const cplx off(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
  return CoherencyMatrix(Mat2c(cplx(rng.uniform(-2.0, 2.0)), off, std::conj(off),
                               cplx(rng.uniform(-2.0, 2.0))));
}

}  // namespace

TEST_CASE("coherency from a Jones vector") {
  const CoherencyMatrix basis = coherency_from_jones(JonesVector(cplx(1.0), cplx(0.0)));
  CHECK(basis.s11() == 1.0);
  CHECK(basis.s22() == 0.0);
  CHECK(std::abs(basis.s12()) == 0.0);

  const double h = 0.7071067811865476;
  const CoherencyMatrix diag = coherency_from_jones(JonesVector(cplx(h), cplx(h)));
  CHECK(std::abs(diag.s11() - 0.5) < 1e-15);
  CHECK(std::abs(diag.s22() - 0.5) < 1e-15);
  CHECK(std::abs(diag.s12() - cplx(0.5)) < 1e-15);

  // (A, B e^{i phi}) gives S12 = A B e^{-i phi}.
  const double a = 1.3, b = 0.4, phi = 0.9;
  const CoherencyMatrix c = coherency_from_jones(JonesVector(cplx(a), std::polar(b, phi)));
  CHECK(std::abs(c.s12() - std::polar(a * b, -phi)) < 1e-15);
  CHECK(std::abs(c.det()) < 1e-12);  // pure state
}

TEST_CASE("coherency matrix rejects non-Hermitian input") {
  CHECK_THROWS_AS(CoherencyMatrix(Mat2c(cplx(1.0), cplx(0.5), cplx(0.4), cplx(1.0))),
                  std::invalid_argument);
  CHECK_THROWS_AS(CoherencyMatrix(Mat2c(cplx(1.0, 0.1), cplx(0.0), cplx(0.0), cplx(1.0))),
                  std::invalid_argument);
}

TEST_CASE("conjugation action") {
  RandomStream rng(21);
  const CoherencyMatrix c = random_hermitian(rng);
  CHECK(max_abs_diff(conjugate(Mat2c::identity(), c).matrix(), c.matrix()) == 0.0);

  const CoherencyMatrix stretched =
      conjugate(squeezer(0.8), CoherencyMatrix(Mat2c::identity()));
  CHECK(std::abs(stretched.s11() - std::exp(0.8)) < 1e-12);
  CHECK(std::abs(stretched.s22() - std::exp(-0.8)) < 1e-12);
  CHECK(std::abs(stretched.s12()) == 0.0);

  for (int i = 0; i < 200; ++i) {
    const Mat2c g = random_sl2c(rng);
    const CoherencyMatrix in = random_hermitian(rng);
    const CoherencyMatrix out = conjugate(g, in);
    // Hermiticity is enforced by the return type; determinant is preserved.
    const double scale = std::max(1.0, std::abs(in.det()));
    CHECK(std::abs(out.det() - in.det()) < 1e-10 * scale);
  }

  const Mat2c bad(cplx(2.0), cplx(0.0), cplx(0.0), cplx(1.0));
  CHECK_THROWS_AS(conjugate(bad, c), std::invalid_argument);
}

TEST_CASE("stokes components") {
  const StokesVector flat = stokes_from_coherency(CoherencyMatrix(Mat2c::identity()));
  CHECK(std::abs(flat.s0 - kSqrt2) < 1e-15);
  CHECK(flat.s1 == 0.0);
  CHECK(flat.s2 == 0.0);
  CHECK(flat.s3 == 0.0);

  const StokesVector ones = stokes_from_coherency(
      CoherencyMatrix(Mat2c(cplx(1.0), cplx(1.0), cplx(1.0), cplx(1.0))));
  CHECK(std::abs(ones.s0 - kSqrt2) < 1e-15);
  CHECK(std::abs(ones.s1) == 0.0);
  CHECK(std::abs(ones.s2 - kSqrt2) < 1e-15);
  CHECK(std::abs(ones.s3) == 0.0);

  // Decohering two-beam state: S2 = sqrt(2) A B cos(phi) e^{-lambda t}.
  const BeamState state(1.1, 0.7, 0.4, 0.9, 0.6);
  const StokesVector s = stokes_from_coherency(density_matrix(state));
  const double want = kSqrt2 * 1.1 * 0.7 * std::cos(0.4) * std::exp(-0.9 * 0.6);
  CHECK(std::abs(s.s2 - want) < 1e-14);
}

TEST_CASE("stokes round trip") {
  RandomStream rng(22);
  for (int i = 0; i < 100; ++i) {
    const CoherencyMatrix c = random_hermitian(rng);
    const CoherencyMatrix back = coherency_from_stokes(stokes_from_coherency(c));
    CHECK(max_abs_diff(back.matrix(), c.matrix()) < 1e-12);
  }
  const CoherencyMatrix id = coherency_from_stokes(StokesVector(kSqrt2, 0.0, 0.0, 0.0));
  CHECK(max_abs_diff(id.matrix(), Mat2c::identity()) < 1e-15);

  // Unphysical input is representable, only flagged.
  const StokesVector spacelike(0.1, 2.0, 0.0, 0.0);
  CHECK(!spacelike.physical());
  CHECK(!coherency_from_stokes(spacelike).physical());
}

TEST_CASE("explicit 4x4 forms of the generators") {
  // rotator: rotation in the (S1, S2) block.
  const MuellerMatrix r = mueller_from_sl2c(rotator(0.3));
  const double c03 = 0.955336489125606, s03 = 0.29552020666133955;
  MuellerMatrix r_want = MuellerMatrix::identity();
  r_want.set(1, 1, c03);
  r_want.set(1, 2, -s03);
  r_want.set(2, 1, s03);
  r_want.set(2, 2, c03);
  CHECK(max_abs_diff(r, r_want) < 1e-12);

  // phase shifter: rotation in the (S2, S3) block; the conjugation action
  // fixes the sign so that S2' = cos(phi) S2 + sin(phi) S3.
  const MuellerMatrix p = mueller_from_sl2c(phase_shifter(0.3));
  MuellerMatrix p_want = MuellerMatrix::identity();
  p_want.set(2, 2, c03);
  p_want.set(2, 3, s03);
  p_want.set(3, 2, -s03);
  p_want.set(3, 3, c03);
  CHECK(max_abs_diff(p, p_want) < 1e-12);

  // squeezer: boost in the (S0, S1) block.
  const MuellerMatrix b = mueller_from_sl2c(squeezer(0.5));
  const double ch = 1.1276259652063807, sh = 0.5210953054937474;
  MuellerMatrix b_want = MuellerMatrix::identity();
  b_want.set(0, 0, ch);
  b_want.set(0, 1, sh);
  b_want.set(1, 0, sh);
  b_want.set(1, 1, ch);
  CHECK(max_abs_diff(b, b_want) < 1e-12);

  CHECK(max_abs_diff(mueller_from_sl2c(Mat2c::identity()), MuellerMatrix::identity()) <
        1e-15);
}

TEST_CASE("mueller matrices form a representation") {
  RandomStream rng(23);
  for (int i = 0; i < 100; ++i) {
    const Mat2c g1 = random_sl2c(rng);
    const Mat2c g2 = random_sl2c(rng);
    CHECK(max_abs_diff(mueller_from_sl2c(g1 * g2),
                       mueller_from_sl2c(g1) * mueller_from_sl2c(g2)) < 1e-9);
  }
}

TEST_CASE("mueller matrices are orthochronous Lorentz transformations") {
  RandomStream rng(24);
  for (int i = 0; i < 100; ++i) {
    const MuellerMatrix m = mueller_from_sl2c(random_sl2c(rng));
    CHECK(m.is_lorentz());
    CHECK(m.is_orthochronous());

    const StokesVector v(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0),
                         rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
    CHECK(std::abs(minkowski_norm(m.apply(v)) - minkowski_norm(v)) < 1e-9);

    CHECK(max_abs_diff(m.minkowski_inverse() * m, MuellerMatrix::identity()) < 1e-12);
  }
}

TEST_CASE("kernel sign ambiguity") {
  RandomStream rng(25);
  for (int i = 0; i < 50; ++i) {
    const Mat2c g = random_sl2c(rng);
    const Mat2c neg = cplx(-1.0) * g;
    CHECK(max_abs_diff(mueller_from_sl2c(g), mueller_from_sl2c(neg)) < 1e-12);
  }
  const Mat2c bad(cplx(2.0), cplx(0.0), cplx(0.0), cplx(1.0));
  CHECK_THROWS_AS(mueller_from_sl2c(bad), std::invalid_argument);
}

TEST_CASE("minkowski norm") {
  CHECK(minkowski_norm(StokesVector(1.0, 0.0, 0.0, 0.0)) == 1.0);

  RandomStream rng(26);
  for (int i = 0; i < 50; ++i) {
    const JonesVector v(cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)),
                        cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)));
    const double norm = minkowski_norm(stokes_from_coherency(coherency_from_jones(v)));
    CHECK(std::abs(norm) < 1e-10);  // pure states sit on the light cone
  }

  const BeamState state(1.0, 1.0, 0.0, 1.0, std::log(2.0));
  CHECK(std::abs(minkowski_norm(stokes_from_coherency(density_matrix(state))) - 1.5) < 1e-12);
}

TEST_CASE("determinant bridge") {
  RandomStream rng(27);
  for (int i = 0; i < 200; ++i) {
    const CoherencyMatrix c = random_hermitian(rng);
    CHECK(std::abs(minkowski_norm(stokes_from_coherency(c)) - 2.0 * c.det()) < 1e-10);
  }
}

TEST_CASE("polar decomposition of pure factors") {
  const PolarFactors rot = polar_decompose(rotator(0.7));
  CHECK(max_abs_diff(rot.rotation_part, rotator(0.7)) < 1e-12);
  CHECK(max_abs_diff(rot.boost_part, Mat2c::identity()) < 1e-12);
  CHECK(std::abs(rot.wigner_angle - 0.7) < 1e-12);

  const PolarFactors neg = polar_decompose(rotator(-0.7));
  CHECK(std::abs(neg.wigner_angle + 0.7) < 1e-12);

  const PolarFactors boost = polar_decompose(squeezer(1.3));
  CHECK(max_abs_diff(boost.rotation_part, Mat2c::identity()) < 1e-12);
  CHECK(max_abs_diff(boost.boost_part, squeezer(1.3)) < 1e-12);
  CHECK(boost.wigner_angle == 0.0);
}

TEST_CASE("polar decomposition round trip on random elements") {
  RandomStream rng(28);
  for (int i = 0; i < 200; ++i) {
    const Mat2c g = random_sl2c(rng);
    const PolarFactors f = polar_decompose(g);
    CHECK(max_abs_diff(f.rotation_part * f.boost_part, g) < 1e-9);
    CHECK(max_abs_diff(f.rotation_part.adjoint() * f.rotation_part, Mat2c::identity()) <
          1e-10);
    CHECK(max_abs_diff(f.boost_part, f.boost_part.adjoint()) < 1e-12);
    CHECK(f.wigner_angle > -kPi);
    CHECK(f.wigner_angle <= kPi);
  }
}

TEST_CASE("wigner rotation from three squeezes") {
  const double axis = 2.0 * kPi / 3.0;
  const Mat2c product = compose({squeezer(1.0),
                                 rotator(axis) * squeezer(1.0) * rotator(-axis),
                                 rotator(2.0 * axis) * squeezer(1.0) * rotator(-2.0 * axis)});
  const PolarFactors f = polar_decompose(product);
  CHECK(std::abs(f.wigner_angle - 0.5313445656477234) < 1e-12);
  CHECK(max_abs_diff(f.rotation_part * f.boost_part, product) < 1e-9);
}
