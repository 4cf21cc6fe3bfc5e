"""End-to-end channel runs and code-comparison studies.

Covers the erasure-channel transmit path (Alice → Bob noiselessly, Alice →
Eve through BEC(ε)), exhaustive optimality searches over all subspaces of a
given size, random-ensemble comparisons against a reference code, and
achievability-gap sweeps across a code family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import codes, coset, equivocation as eq
from .codes import CodeSpec, GuardError, RandomCodeParams, derive_seed, make_rng
from .equivocation import (
    CI95,
    EquivocationCurve,
    GapReport,
    Observation,
    _PatternEntropy,
)
from .gf2 import BitMatrix, BitVec


@dataclass(frozen=True)
class ChannelParams:
    eps: float
    seed: int = 0

    def __post_init__(self) -> None:
        if not 0.0 <= self.eps <= 1.0:
            raise ValueError(f"eps must be in [0, 1], got {self.eps}")


def bec_transmit(x: BitVec, ch: ChannelParams, rng: np.random.Generator) -> Observation:
    """Erase each bit independently with probability ε."""
    erased = rng.random(x.length) < ch.eps
    return Observation(
        "".join("?" if e else str(x.bit(i)) for i, e in enumerate(erased))
    )


@dataclass(frozen=True)
class SessionReport:
    code_name: str
    eps: float
    trials: int
    bob_success_rate: float
    mean_equivocation: float
    stderr: float
    seed: int


def simulate_session(code: CodeSpec, eps: float, trials: int, seed: int) -> SessionReport:
    """Full pipeline replica: encode random (m, v), Bob syndrome-decodes the
    noiseless copy, Eve's observation is scored by per-pattern entropy."""
    if trials < 1:
        raise ValueError("trials must be positive")
    enc = coset.build_encoder(code)
    ent = _PatternEntropy(code, eps)
    n, k, dim = code.n, code.k, code.dim
    rng = make_rng(seed, "session")
    bob_ok = 0
    s = ss = 0
    for _ in range(trials):
        m = BitVec(k, int.from_bytes(rng.bytes((k + 7) // 8), "little") & ((1 << k) - 1))
        v = BitVec(dim, int.from_bytes(rng.bytes((dim + 7) // 8), "little") & ((1 << dim) - 1))
        x = coset.encode(enc, m, v)
        if coset.decode(enc, x) == m:
            bob_ok += 1
        erased = rng.random(n) < eps
        erased_mask = int.from_bytes(
            np.packbits(erased, bitorder="little").tobytes(), "little"
        )
        h = ent.from_erased_mask(erased_mask)
        s += h
        ss += h * h
    mean = s / trials
    var = (trials * ss - s * s) / (trials * (trials - 1)) if trials > 1 else 0.0
    return SessionReport(
        code_name=code.name,
        eps=eps,
        trials=trials,
        bob_success_rate=bob_ok / trials,
        mean_equivocation=mean,
        stderr=math.sqrt(max(var, 0.0) / trials),
        seed=seed,
    )


@dataclass(frozen=True)
class SearchResult:
    n: int
    dim: int
    grid: tuple[float, ...]
    generators: tuple[BitMatrix, ...]  # canonical RREF, one per subspace
    rates: np.ndarray  # shape (num_codes, len(grid)), equivocation rates
    gaps: np.ndarray  # A_g per code
    argmax_per_eps: tuple[tuple[int, ...], ...]  # code indices, per grid point
    ranking: tuple[int, ...]  # code indices sorted by ascending A_g

    @property
    def count(self) -> int:
        return len(self.generators)


ARGMAX_TIE_TOL = 1e-12


def exhaustive_search(n: int, dim: int, grid: Sequence[float]) -> SearchResult:
    """Exact curves for every dim-dimensional base code in GF(2)^n.

    Each subspace's rank profile costs 2^n rank computations; curve values
    for the whole grid then come from one matrix product.
    """
    grid = tuple(grid)
    k = n - dim
    gens: list[BitMatrix] = []
    coeffs: list[np.ndarray] = []
    for g in codes.enumerate_subspaces(n, dim):
        code = codes.from_generator(g, name="search")
        prof = eq.rank_profile(code)
        gens.append(g)
        coeffs.append(prof.entropy_coefficients())
    a = np.array(coeffs)  # (num_codes, n+1)
    eps_col = np.array(grid + (k / n,))  # gap point appended
    mus = np.arange(n + 1)
    w = eps_col[:, None] ** (n - mus)[None, :] * (1.0 - eps_col[:, None]) ** mus[None, :]
    bits = a @ w.T  # (num_codes, len(grid)+1)
    rates = bits[:, : len(grid)] / n
    gaps = k / n - bits[:, -1] / n
    argmax = []
    for j in range(len(grid)):
        col = rates[:, j]
        top = col.max()
        argmax.append(tuple(np.flatnonzero(col >= top - ARGMAX_TIE_TOL)))
    # Ties in A_g break by the lexicographically smallest canonical generator.
    order = sorted(range(len(gens)), key=lambda i: (gaps[i], gens[i].rows))
    return SearchResult(
        n=n,
        dim=dim,
        grid=grid,
        generators=tuple(gens),
        rates=rates,
        gaps=gaps,
        argmax_per_eps=tuple(argmax),
        ranking=tuple(order),
    )


@dataclass(frozen=True)
class EnsembleReport:
    n: int
    dim: int
    alpha: float
    grid: tuple[float, ...]
    member_curves: tuple[EquivocationCurve, ...]
    mean_rates: np.ndarray
    best_rates: np.ndarray
    worst_rates: np.ndarray
    ci95_halfwidth: np.ndarray  # on the ensemble mean, per grid point
    reference_curve: EquivocationCurve
    seed: int


def ensemble_study(
    n: int,
    dim: int,
    alpha: float,
    num_codes: int,
    grid: Sequence[float],
    trials: int,
    seed: int,
    reference: CodeSpec,
) -> EnsembleReport:
    """Monte Carlo curves for num_codes random bases plus a reference code."""
    if num_codes < 1:
        raise ValueError("num_codes must be positive")
    grid = tuple(grid)
    members = []
    for i in range(num_codes):
        c = codes.random_base(
            RandomCodeParams(n=n, dim=dim, alpha=alpha, seed=derive_seed(seed, "code", i))
        )
        members.append(
            eq.curve(c, grid, method="mc", trials=trials, seed=derive_seed(seed, "mc", i))
        )
    ref_curve = eq.curve(
        reference, grid, method="mc", trials=trials, seed=derive_seed(seed, "ref")
    )
    rates = np.array([cv.rates() for cv in members])  # (num_codes, grid)
    mean = rates.mean(axis=0)
    if num_codes > 1:
        half = CI95 * rates.std(axis=0, ddof=1) / math.sqrt(num_codes)
    else:
        half = np.zeros(len(grid))
    return EnsembleReport(
        n=n,
        dim=dim,
        alpha=alpha,
        grid=grid,
        member_curves=tuple(members),
        mean_rates=mean,
        best_rates=rates.max(axis=0),
        worst_rates=rates.min(axis=0),
        ci95_halfwidth=half,
        reference_curve=ref_curve,
        seed=seed,
    )


FAMILY_BUILDERS = {"hamming": codes.hamming_base, "simplex": codes.simplex_base}
SWEEP_MAX_R = 6


def family_sweep(
    family: str,
    rs: Sequence[int],
    method: str = "auto",
    trials: int = eq.DEFAULT_MC_TRIALS,
    seed: int = 0,
    allow_large: bool = False,
) -> list[GapReport]:
    """Achievability gap per blocklength for a Hamming or simplex family."""
    if family not in FAMILY_BUILDERS:
        raise ValueError(f"unknown family {family!r}")
    build = FAMILY_BUILDERS[family]
    reports = []
    for i, r in enumerate(rs):
        if r > SWEEP_MAX_R and not allow_large:
            raise GuardError(
                f"family sweep caps at r = {SWEEP_MAX_R} (n = 63); "
                "pass allow_large to go further with MC"
            )
        code = build(r)
        m = eq.resolve_method(method, code.n)
        if r > SWEEP_MAX_R and m == "exact":
            raise GuardError("large-r sweeps must use the mc method")
        reports.append(
            eq.achievability_gap(
                code, method=m, trials=trials, seed=derive_seed(seed, "sweep", i)
            )
        )
    return reports
