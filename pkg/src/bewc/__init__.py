"""Equivocation analysis for coset codes over the binary erasure wiretap channel."""

from .codes import (
    CodeSpec,
    CodeError,
    GuardError,
    RandomCodeParams,
    enumerate_subspaces,
    from_generator,
    gaussian_binomial,
    hamming_base,
    parse,
    random_base,
    serialize,
    simplex_base,
)
from .coset import Codebook, EncoderMatrices, build_encoder, codebook, decode, encode, encode_random
from .equivocation import (
    EquivocationCurve,
    ErasurePattern,
    GapReport,
    McEstimate,
    Observation,
    RankProfile,
    achievability_gap,
    curve,
    equivocation_bounds,
    exact_equivocation,
    mc_equivocation,
    observation_equivocation_oracle,
    pattern_equivocation,
    rank_profile,
)
from .experiments import (
    ChannelParams,
    EnsembleReport,
    SearchResult,
    bec_transmit,
    ensemble_study,
    exhaustive_search,
    family_sweep,
    simulate_session,
)
from .gf2 import BitMatrix, BitVec

__version__ = "0.1.0"
