"""Two-beam polarization optics: SL(2,C) elements, Stokes four-vectors,
Poincare-sphere reduction, and O(3,2) decoherence."""

from ._core import (
    AttenuationResult,
    BeamState,
    CanonicalForm,
    CoherencyMatrix,
    DecohereResult,
    DecoherenceAngle,
    DecoherencePath,
    FiveVector,
    JonesVector,
    Mat2c,
    MuellerMatrix,
    O32Matrix,
    PolarFactors,
    PureStateNotReducible,
    SphereGeometry,
    StokesVector,
    align_rotation,
    apply_jones,
    attenuator,
    canonical_boost,
    canonicalize,
    chi_from_time,
    coherency_from_jones,
    coherency_from_stokes,
    compose,
    conjugate,
    decohere_step,
    density_matrix,
    embed_canonical,
    lift_first,
    lift_second,
    minkowski_norm,
    mueller_from_sl2c,
    o32_norm,
    phase_shifter,
    polar_decompose,
    rho_of_chi,
    rotator,
    sigma_of_chi,
    sphere_geometry,
    sphere_vector,
    squeezer,
    stokes_from_coherency,
    stokes_from_sphere,
    tu_rotation,
)

__version__ = "0.1.0"

__all__ = [
    "AttenuationResult",
    "BeamState",
    "CanonicalForm",
    "CoherencyMatrix",
    "DecohereResult",
    "DecoherenceAngle",
    "DecoherencePath",
    "FiveVector",
    "JonesVector",
    "Mat2c",
    "MuellerMatrix",
    "O32Matrix",
    "PolarFactors",
    "PureStateNotReducible",
    "SphereGeometry",
    "StokesVector",
    "align_rotation",
    "apply_jones",
    "attenuator",
    "canonical_boost",
    "canonicalize",
    "chi_from_time",
    "coherency_from_jones",
    "coherency_from_stokes",
    "compose",
    "conjugate",
    "decohere_step",
    "density_matrix",
    "embed_canonical",
    "lift_first",
    "lift_second",
    "minkowski_norm",
    "mueller_from_sl2c",
    "o32_norm",
    "phase_shifter",
    "polar_decompose",
    "rho_of_chi",
    "rotator",
    "sigma_of_chi",
    "sphere_geometry",
    "sphere_vector",
    "squeezer",
    "stokes_from_coherency",
    "stokes_from_sphere",
    "tu_rotation",
]
