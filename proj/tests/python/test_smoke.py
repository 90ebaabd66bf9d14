import math

import pytest

import psphere


LN2 = math.log(2.0)


def test_version():
    assert psphere.__version__ == "0.1.0"


def test_determinant_law():
    state = psphere.BeamState(1.0, 1.0, 0.0, 1.0, LN2)
    rho = psphere.density_matrix(state)
    assert abs(rho.det() - 0.75) < 1e-12
    assert abs(rho.s12() - 0.5) < 1e-15
    assert rho.physical()


def test_canonicalize():
    state = psphere.BeamState(1.0, 1.0, 0.4, 1.0, LN2)
    form, transform = psphere.canonicalize(state)
    assert abs(form.value - math.sqrt(0.75)) < 1e-12
    assert abs(form.boost_eta - math.atanh(0.5)) < 1e-12
    assert transform.is_lorentz()

    geom = psphere.sphere_geometry(state)
    reduced = transform.apply4(psphere.sphere_vector(geom))
    assert abs(reduced[0] - form.value) < 1e-12
    assert max(abs(c) for c in reduced[1:]) < 1e-12


def test_pure_state_raises():
    state = psphere.BeamState(1.0, 1.0, 0.0, 1.0, 0.0)
    with pytest.raises(psphere.PureStateNotReducible):
        psphere.canonicalize(state)
    with pytest.raises(ValueError):
        psphere.canonicalize(state)


def test_homomorphism():
    g1 = psphere.rotator(0.3) @ psphere.squeezer(0.5)
    g2 = psphere.phase_shifter(-0.7) @ psphere.rotator(1.1)
    lhs = psphere.mueller_from_sl2c(g1 @ g2)
    rhs = psphere.mueller_from_sl2c(g1) @ psphere.mueller_from_sl2c(g2)
    dev = max(
        abs(lhs.entry(i, j) - rhs.entry(i, j)) for i in range(4) for j in range(4)
    )
    assert dev < 1e-12


def test_determinant_bridge():
    v = psphere.JonesVector(1.0, 0.5 + 0.25j)
    c = psphere.coherency_from_jones(v)
    s = psphere.stokes_from_coherency(c)
    assert abs(psphere.minkowski_norm(s) - 2.0 * c.det().real) < 1e-12


def test_complementarity():
    chi = psphere.chi_from_time(0.8, 1.3)
    rho = psphere.rho_of_chi(1.2, 0.7, 0.3, chi)
    sigma = psphere.sigma_of_chi(1.2, 0.7, 0.3, chi)
    ab = 1.2 * 0.7
    assert abs(rho.det() + sigma.det() - ab * ab) < 1e-12


def test_dual_path():
    state = psphere.BeamState(1.1, 0.9, -0.4, 0.7, 0.8)
    direct = psphere.decohere_step(state, 0.5)
    desitter = psphere.decohere_step(state, 0.5, psphere.DecoherencePath.DeSitter)
    dev = max(
        abs(direct.rho.rows()[i][j] - desitter.rho.rows()[i][j])
        for i in range(2)
        for j in range(2)
    )
    assert dev < 1e-9
    assert direct.state.time == desitter.state.time


def test_o32_rotation():
    chi = psphere.DecoherenceAngle(math.pi / 3.0)
    rot = psphere.tu_rotation(chi)
    assert rot.preserves_metric()
    v = psphere.FiveVector(0.3, -0.2, 0.9, 0.1, 1.4)
    assert abs(psphere.o32_norm(rot.apply(v)) - psphere.o32_norm(v)) < 1e-12


def test_wigner_rotation():
    def squeeze_along(eta, alpha):
        return psphere.rotator(alpha) @ psphere.squeezer(eta) @ psphere.rotator(-alpha)

    third = 2.0 * math.pi / 3.0
    product = psphere.compose(
        [squeeze_along(1.0, 0.0), squeeze_along(1.0, third), squeeze_along(1.0, 2 * third)]
    )
    factors = psphere.polar_decompose(product)
    assert abs(factors.wigner_angle - 0.5313445656477234) < 1e-12
