"""Toric quantum codes from perfect Lee-sphere tilings of Z_q^n,
with a burst-spreading qubit interleaver and Monte Carlo certification.
"""

from .lattice import (
    LeeSphere,
    canonical_rep,
    centered,
    determinant,
    hypercube_from_lin,
    hypercube_lin_index,
    lee_distance,
    lee_sphere,
    mannheim_weight,
    slot_offset,
)
from .leecode import (
    Codeword,
    GeneratorSet,
    MinDistanceResult,
    PackingReport,
    PerfectLeeCode,
    TileAssignment,
    build_generators,
    check_functional,
    generator_matrix,
    weight_w_vectors,
)
from .toric import (
    FaceIndex,
    StabilizerCheck2D,
    ToricParams,
    code_params,
    face_count,
    face_from_lin,
    face_lin_index,
    kitaev_2d_stabilizers,
    pair_from_rank,
    pair_rank,
)
from .interleave import (
    BURST_MODELS,
    BurstPattern,
    CorrectionReport,
    InterleavedParams,
    InterleavingMap,
    LogicalAddress,
    SimulationStats,
    deinterleave_and_correct,
    interleaved_params,
    make_burst,
    simulate,
    trial_rng,
)
from .checks import CheckResult, run_verification

__version__ = "0.1.0"

__all__ = [
    "BURST_MODELS",
    "BurstPattern",
    "CheckResult",
    "Codeword",
    "CorrectionReport",
    "FaceIndex",
    "GeneratorSet",
    "InterleavedParams",
    "InterleavingMap",
    "LeeSphere",
    "LogicalAddress",
    "MinDistanceResult",
    "PackingReport",
    "PerfectLeeCode",
    "SimulationStats",
    "StabilizerCheck2D",
    "TileAssignment",
    "ToricParams",
    "build_generators",
    "canonical_rep",
    "centered",
    "check_functional",
    "code_params",
    "deinterleave_and_correct",
    "determinant",
    "face_count",
    "face_from_lin",
    "face_lin_index",
    "generator_matrix",
    "hypercube_from_lin",
    "hypercube_lin_index",
    "interleaved_params",
    "kitaev_2d_stabilizers",
    "lee_distance",
    "lee_sphere",
    "make_burst",
    "mannheim_weight",
    "pair_from_rank",
    "pair_rank",
    "run_verification",
    "simulate",
    "slot_offset",
    "trial_rng",
    "weight_w_vectors",
]
