"""Coset encoding and syndrome decoding.

The message picks a coset of the base code; a fresh random vector picks the
codeword within it.  With the auxiliary matrix G' chosen so that G'·Hᵀ = I,
the receiver's syndrome y·Hᵀ is exactly the message, so decoding is one
vector-matrix product.  The explicit codebook (all 2^k cosets listed out)
is kept as a small-n ground-truth oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import gf2
from .codes import CodeSpec, GuardError
from .gf2 import BitMatrix, BitVec

CODEBOOK_GUARD_N = 20


@dataclass(frozen=True)
class EncoderMatrices:
    code: CodeSpec
    gprime: BitMatrix  # k×n, rows q_1..q_k with G'·Hᵀ = I_k


def build_encoder(code: CodeSpec) -> EncoderMatrices:
    """Construct G' by solving H·q_iᵀ = e_i with free variables zeroed.

    H is full rank so each system is solvable; zeroing free variables makes
    the result deterministic.  q_i·h_iᵀ = 1 already forces q_i outside the
    base code, so no separate membership check is needed.
    """
    k = code.k
    rows = []
    for i in range(k):
        q = gf2.solve(code.H, BitVec(k, 1 << i))
        assert q is not None  # H full rank
        rows.append(q.word)
    return EncoderMatrices(code=code, gprime=BitMatrix(code.n, tuple(rows)))


def encode(enc: EncoderMatrices, m: BitVec, v: BitVec) -> BitVec:
    """x = m·G' ⊕ v·G; m selects the coset, v the codeword within it."""
    code = enc.code
    if m.length != code.k or v.length != code.dim:
        raise gf2.DimensionError(
            f"need |m|={code.k}, |v|={code.dim}; got {m.length}, {v.length}"
        )
    return gf2.vec_mat_mul(m, enc.gprime) ^ gf2.vec_mat_mul(v, code.G)


def encode_random(enc: EncoderMatrices, m: BitVec, rng: np.random.Generator) -> BitVec:
    """Encode m with v drawn uniformly from {0,1}^(n−k)."""
    nk = enc.code.dim
    raw = rng.bytes((nk + 7) // 8)
    v = BitVec(nk, int.from_bytes(raw, "little") & ((1 << nk) - 1))
    return encode(enc, m, v)


def decode(enc: EncoderMatrices, y: BitVec) -> BitVec:
    """Syndrome decoding: m = y·Hᵀ.  Assumes y arrived erasure-free."""
    code = enc.code
    if y.length != code.n:
        raise gf2.DimensionError(f"need |y|={code.n}, got {y.length}")
    return syndrome(code, y.word)


def syndrome(code: CodeSpec, word: int) -> BitVec:
    s = 0
    for i, h in enumerate(code.H.rows):
        if (word & h).bit_count() & 1:
            s |= 1 << i
    return BitVec(code.k, s)


@dataclass(frozen=True)
class Codebook:
    """All 2^k cosets listed explicitly; coset index = syndrome of any member."""

    code: CodeSpec
    cosets: tuple[tuple[int, ...], ...]

    def coset_of(self, word: int) -> int:
        return syndrome(self.code, word).word

    def format_table(self) -> str:
        """Message-by-codewords table (one row per coset)."""
        n = self.code.n
        lines = ["m | codewords"]
        for m, coset in enumerate(self.cosets):
            words = " ".join(format(w, f"0{n}b")[::-1] for w in coset)
            lines.append(f"{m} | {words}")
        return "\n".join(lines)


def codebook(code: CodeSpec) -> Codebook:
    if code.n > CODEBOOK_GUARD_N:
        raise GuardError(
            f"explicit codebook needs n <= {CODEBOOK_GUARD_N}, got n={code.n}"
        )
    cosets: list[list[int]] = [[] for _ in range(1 << code.k)]
    for w in range(1 << code.n):
        cosets[syndrome(code, w).word].append(w)
    return Codebook(code=code, cosets=tuple(tuple(c) for c in cosets))
