"""Eavesdropper equivocation over the binary erasure channel.

Per-observation entropy for a coset code depends only on which positions
were erased: with µ positions revealed, it is k − µ + rank(G_µ), where G_µ
is the generator restricted to the revealed columns.  An equivalent dual
form, rank of the parity-check columns at the *erased* positions, is used
in hot loops whenever the parity check has fewer rows than the generator;
the two are checked against each other in the test suite.

Exact equivocation enumerates the 2^n erasure patterns once into a rank
profile N(µ, r) and then evaluates the resulting polynomial in ε.  Beyond
the 2^n budget, an unbiased Monte Carlo estimator samples patterns.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import gf2
from .codes import CodeSpec, GuardError, derive_seed
from .coset import Codebook, codebook

RANK_PROFILE_GUARD_N = 28
ORACLE_GUARD_N = 16
MC_BATCH = 1 << 14
CI95 = 1.96


@dataclass(frozen=True)
class ErasurePattern:
    """Which positions the eavesdropper received unerased."""

    n: int
    revealed: tuple[int, ...]

    def __post_init__(self) -> None:
        prev = -1
        for i in self.revealed:
            if not 0 <= i < self.n:
                raise ValueError(f"position {i} out of range")
            if i <= prev:
                raise ValueError("revealed positions must be strictly increasing")
            prev = i

    @property
    def mu(self) -> int:
        return len(self.revealed)

    @property
    def revealed_mask(self) -> int:
        m = 0
        for i in self.revealed:
            m |= 1 << i
        return m

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "ErasurePattern":
        return cls(n, tuple(i for i in range(n) if (mask >> i) & 1))


@dataclass(frozen=True)
class Observation:
    """A received word over {0, 1, ?}; leftmost symbol is position 0."""

    symbols: str

    def __post_init__(self) -> None:
        if not set(self.symbols) <= {"0", "1", "?"}:
            raise ValueError(f"bad observation alphabet in {self.symbols!r}")

    @property
    def n(self) -> int:
        return len(self.symbols)

    def pattern(self) -> ErasurePattern:
        return ErasurePattern(
            self.n, tuple(i for i, c in enumerate(self.symbols) if c != "?")
        )

    def revealed_mask_and_word(self) -> tuple[int, int]:
        mask = word = 0
        for i, c in enumerate(self.symbols):
            if c != "?":
                mask |= 1 << i
                if c == "1":
                    word |= 1 << i
        return mask, word


def pattern_equivocation(code: CodeSpec, pat: ErasurePattern) -> int:
    """Bits of uncertainty left about the message: k − µ + rank(G_µ)."""
    if pat.n != code.n:
        raise gf2.DimensionError(f"pattern n={pat.n} but code n={code.n}")
    g_mu = gf2.select_columns(code.G, pat.revealed)
    return code.k - pat.mu + gf2.rank(g_mu)


def observation_equivocation_oracle(
    code: CodeSpec, z: Observation, book: Optional[Codebook] = None
) -> float:
    """Entropy of the message posterior by direct coset counting.

    Counts the codewords of every coset consistent with z and takes the
    Shannon entropy of the induced distribution; no rank formula and no
    assumption of within-coset uniformity.
    """
    if z.n != code.n:
        raise gf2.DimensionError(f"observation n={z.n} but code n={code.n}")
    if code.n > ORACLE_GUARD_N:
        raise GuardError(f"coset-counting oracle needs n <= {ORACLE_GUARD_N}")
    if book is None:
        book = codebook(code)
    mask, word = z.revealed_mask_and_word()
    counts = [sum(1 for w in coset if (w & mask) == word) for coset in book.cosets]
    total = sum(counts)
    return -sum((c / total) * math.log2(c / total) for c in counts if c)


@dataclass(frozen=True)
class RankProfile:
    """N(µ, r): revealed-subset counts by size µ and generator-submatrix rank r."""

    code_name: str
    n: int
    dim: int
    counts: dict[tuple[int, int], int]

    @property
    def k(self) -> int:
        return self.n - self.dim

    def entropy_coefficients(self) -> np.ndarray:
        """a[µ] = Σ_r N(µ, r)·(k − µ + r); the equivocation polynomial's
        pattern-entropy mass at each revealed count."""
        a = np.zeros(self.n + 1)
        for (mu, r), c in self.counts.items():
            a[mu] += c * (self.k - mu + r)
        return a


def rank_profile(code: CodeSpec) -> RankProfile:
    """Tally rank(G_µ) over all 2^n revealed-position subsets.

    Works on whichever of G / H has fewer rows: rank(G_S) = µ − k + rank(H_Ē)
    with Ē the erased set, so the smaller matrix always suffices.
    """
    n, k, dim = code.n, code.k, code.dim
    if n > RANK_PROFILE_GUARD_N:
        raise GuardError(f"rank profile needs n <= {RANK_PROFILE_GUARD_N}, got {n}")
    counts: dict[tuple[int, int], int] = {}
    use_g = dim <= k
    cols = gf2.column_ints(code.G if use_g else code.H)
    full = (1 << n) - 1
    for revealed in range(1 << n):
        mu = revealed.bit_count()
        it = revealed if use_g else (full ^ revealed)
        r = 0
        pivots: dict[int, int] = {}
        while it:
            c = cols[(it & -it).bit_length() - 1]
            it &= it - 1
            while c:
                low = (c & -c).bit_length() - 1
                p = pivots.get(low)
                if p is None:
                    pivots[low] = c
                    r += 1
                    break
                c ^= p
        r_g = r if use_g else mu - k + r
        key = (mu, r_g)
        counts[key] = counts.get(key, 0) + 1
    return RankProfile(code_name=code.name, n=n, dim=dim, counts=counts)


def exact_equivocation(profile: RankProfile, eps: float) -> float:
    """H(M|Z) in bits: Σ N(µ, r)·ε^(n−µ)(1−ε)^µ·(k − µ + r)."""
    if not 0.0 <= eps <= 1.0:
        raise ValueError(f"eps must be in [0, 1], got {eps}")
    n = profile.n
    a = profile.entropy_coefficients()
    # Ascending µ keeps the accumulation friendly at small ε.
    total = 0.0
    for mu in range(n + 1):
        if a[mu]:
            total += a[mu] * eps ** (n - mu) * (1.0 - eps) ** mu
    return total


@dataclass(frozen=True)
class McEstimate:
    mean: float
    trials: int
    stddev: float
    stderr: float
    ci95_lo: float
    ci95_hi: float
    seed: int


class _PatternEntropy:
    """Per-pattern entropy from a packed erased-position mask.

    Picks the generator side (work ∝ revealed count) or the parity-check
    side (work ∝ erased count) once, by expected cost at the given ε.
    """

    def __init__(self, code: CodeSpec, eps: float):
        cost_g = (1.0 - eps) * code.dim
        cost_h = eps * code.k
        self.use_g = cost_g <= cost_h
        self.cols = gf2.column_ints(code.G if self.use_g else code.H)
        self.n, self.k = code.n, code.k
        self.full = (1 << code.n) - 1

    def from_erased_mask(self, erased: int) -> int:
        it = (self.full ^ erased) if self.use_g else erased
        r = 0
        pivots: dict[int, int] = {}
        cols = self.cols
        while it:
            c = cols[(it & -it).bit_length() - 1]
            it &= it - 1
            while c:
                low = (c & -c).bit_length() - 1
                p = pivots.get(low)
                if p is None:
                    pivots[low] = c
                    r += 1
                    break
                c ^= p
        if self.use_g:
            mu = self.n - erased.bit_count()
            return self.k - mu + r
        return r


def mc_equivocation(
    code: CodeSpec, eps: float, trials: int, seed: int, batch: int = MC_BATCH
) -> McEstimate:
    """Unbiased Monte Carlo estimate of H(M|Z) at erasure probability ε.

    Each trial samples an erasure pattern (each position erased w.p. ε) and
    scores the integer per-pattern entropy; sums are accumulated in exact
    integer arithmetic, so the result is independent of batching order.
    Batch b draws from its own counter-derived stream, so any worker layout
    reproduces the same estimate bit for bit.
    """
    if trials < 2:
        raise ValueError(f"need at least 2 trials, got {trials}")
    if not 0.0 <= eps <= 1.0:
        raise ValueError(f"eps must be in [0, 1], got {eps}")
    ent = _PatternEntropy(code, eps)
    n = code.n
    s = ss = 0
    done = 0
    bindex = 0
    while done < trials:
        size = min(batch, trials - done)
        rng = np.random.Generator(np.random.Philox(key=derive_seed(seed, bindex)))
        erased = rng.random((size, n)) < eps
        packed = np.packbits(erased, axis=1, bitorder="little")
        for row in packed:
            h = ent.from_erased_mask(int.from_bytes(row.tobytes(), "little"))
            s += h
            ss += h * h
        done += size
        bindex += 1
    mean = s / trials
    var = (trials * ss - s * s) / (trials * (trials - 1))
    stddev = math.sqrt(max(var, 0.0))
    stderr = stddev / math.sqrt(trials)
    return McEstimate(
        mean=mean,
        trials=trials,
        stddev=stddev,
        stderr=stderr,
        ci95_lo=mean - CI95 * stderr,
        ci95_hi=mean + CI95 * stderr,
        seed=seed,
    )


def pattern_entropy_upper(n: int, k: int, mu: int) -> int:
    """Per-pattern ceiling: entropy never exceeds min(k, number of erasures)."""
    return min(k, n - mu)


def equivocation_bounds(n: int, k: int, eps: float) -> tuple[float, float]:
    """(lower, upper) bounds on H(M|Z) in bits: 0 and n·min(ε, k/n)."""
    if not 0.0 <= eps <= 1.0:
        raise ValueError(f"eps must be in [0, 1], got {eps}")
    return 0.0, n * min(eps, k / n)


@dataclass(frozen=True)
class CurvePoint:
    eps: float
    bits: float
    rate: float
    stderr: Optional[float] = None
    ci95_lo: Optional[float] = None
    ci95_hi: Optional[float] = None


@dataclass(frozen=True)
class EquivocationCurve:
    code_name: str
    method: str  # "exact" | "mc"
    points: tuple[CurvePoint, ...]

    def rates(self) -> np.ndarray:
        return np.array([p.rate for p in self.points])


@dataclass(frozen=True)
class GapReport:
    code_name: str
    rate: float  # R = k/n
    equivocation_rate_at_r: float
    gap: float  # A_g = R − equivocation rate at ε = R
    method: str
    estimate: Optional[McEstimate] = None


DEFAULT_GRID = tuple(round(0.01 * i, 2) for i in range(1, 100))
DEFAULT_MC_TRIALS = 10**6
EXACT_GUARD_N = RANK_PROFILE_GUARD_N


def resolve_method(method: str, n: int) -> str:
    if method == "auto":
        return "exact" if n <= EXACT_GUARD_N else "mc"
    if method not in ("exact", "mc"):
        raise ValueError(f"unknown method {method!r}")
    return method


def curve(
    code: CodeSpec,
    grid: Sequence[float],
    method: str = "auto",
    trials: int = DEFAULT_MC_TRIALS,
    seed: int = 0,
    profile: Optional[RankProfile] = None,
) -> EquivocationCurve:
    """Equivocation at each ε of a strictly increasing grid in [0, 1]."""
    grid = list(grid)
    if any(not 0.0 <= e <= 1.0 for e in grid):
        raise ValueError("grid values must lie in [0, 1]")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError("grid must be strictly increasing")
    method = resolve_method(method, code.n)
    n = code.n
    points = []
    if method == "exact":
        if profile is None:
            profile = rank_profile(code)
        for eps in grid:
            bits = exact_equivocation(profile, eps)
            points.append(CurvePoint(eps=eps, bits=bits, rate=bits / n))
    else:
        for i, eps in enumerate(grid):
            est = mc_equivocation(code, eps, trials, derive_seed(seed, "curve", i))
            points.append(
                CurvePoint(
                    eps=eps,
                    bits=est.mean,
                    rate=est.mean / n,
                    stderr=est.stderr,
                    ci95_lo=est.ci95_lo,
                    ci95_hi=est.ci95_hi,
                )
            )
    return EquivocationCurve(code_name=code.name, method=method, points=tuple(points))


def achievability_gap(
    code: CodeSpec,
    method: str = "auto",
    trials: int = DEFAULT_MC_TRIALS,
    seed: int = 0,
    profile: Optional[RankProfile] = None,
) -> GapReport:
    """A_g = R − equivocation rate at ε = R: distance from the asymptotic
    optimum, since secrecy capacity equals ε for this channel."""
    method = resolve_method(method, code.n)
    r = code.rate
    estimate = None
    if method == "exact":
        if profile is None:
            profile = rank_profile(code)
        bits = exact_equivocation(profile, r)
    else:
        estimate = mc_equivocation(code, r, trials, seed)
        bits = estimate.mean
    eq_rate = bits / code.n
    return GapReport(
        code_name=code.name,
        rate=r,
        equivocation_rate_at_r=eq_rate,
        gap=r - eq_rate,
        method=method,
        estimate=estimate,
    )
