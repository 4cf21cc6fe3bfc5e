import pytest

import bewc
from bewc import codes, gf2
from bewc.codes import CodeError, RandomCodeParams
from bewc.gf2 import BitMatrix

from conftest import random_code


def assert_valid(code):
    assert gf2.rank(code.G) == code.dim
    assert gf2.rank(code.H) == code.k
    assert gf2.is_zero(gf2.mul_transpose(code.G, code.H))
    assert code.k == code.n - code.dim


# ---------------------------------------------------------------- families

@pytest.mark.parametrize("r,n,k", [(3, 7, 3), (4, 15, 4), (6, 63, 6)])
def test_hamming_base_parameters(r, n, k):
    c = bewc.hamming_base(r)
    assert (c.n, c.k, c.dim) == (n, k, n - k)
    assert c.rate == pytest.approx(k / n)
    assert_valid(c)


def test_hamming_rates_match_table():
    assert bewc.hamming_base(3).rate == pytest.approx(0.4286, abs=5e-5)
    assert bewc.hamming_base(4).rate == pytest.approx(0.2667, abs=5e-5)
    assert bewc.hamming_base(6).rate == pytest.approx(0.0952, abs=5e-5)


@pytest.mark.parametrize("r,n,k", [(3, 7, 4), (5, 31, 26)])
def test_simplex_base_parameters(r, n, k):
    c = bewc.simplex_base(r)
    assert (c.n, c.k, c.dim) == (n, k, r)
    assert_valid(c)


def test_simplex_rates_match_table():
    assert bewc.simplex_base(3).rate == pytest.approx(0.5714, abs=5e-5)
    assert bewc.simplex_base(5).rate == pytest.approx(0.8387, abs=5e-5)


@pytest.mark.parametrize("r", [2, 3, 4, 5, 6])
def test_hamming_simplex_duality(r):
    h = bewc.hamming_base(r)
    s = bewc.simplex_base(r)
    # Each generator annihilates the other's rows.
    assert gf2.is_zero(gf2.mul_transpose(h.G, s.G))
    assert s.G == h.H


@pytest.mark.parametrize("r", [1, 9])
def test_family_r_out_of_range(r):
    with pytest.raises(CodeError):
        bewc.hamming_base(r)
    with pytest.raises(CodeError):
        bewc.simplex_base(r)


# ---------------------------------------------------------------- random codes

def test_random_base_full_rank_and_valid():
    c = random_code(31, 26, seed=1)
    assert (c.n, c.dim) == (31, 26)
    assert_valid(c)


def test_random_base_deterministic():
    a = random_code(4, 2, seed=99)
    b = random_code(4, 2, seed=99)
    assert a == b
    c = random_code(4, 2, seed=100)
    assert a != c


def test_random_base_alpha_too_extreme():
    with pytest.raises(CodeError):
        bewc.random_base(RandomCodeParams(n=4, dim=2, alpha=1e-9, seed=5))


def test_random_params_alpha_range():
    with pytest.raises(CodeError):
        RandomCodeParams(n=4, dim=2, alpha=0.0, seed=1)


# ---------------------------------------------------------------- explicit

def test_from_generator_example_code(ex1):
    cb_words = set()
    for v in range(4):
        cb_words.add(gf2.vec_mat_mul(gf2.BitVec(2, v), ex1.G).word)
    assert cb_words == {0b0000, 0b0110, 0b1001, 0b1111}


def test_from_generator_rejects_rank_deficient():
    with pytest.raises(CodeError):
        bewc.from_generator(BitMatrix.from_strings(["1010", "1010"]))


def test_from_generator_rejects_full_dimension():
    with pytest.raises(CodeError):
        bewc.from_generator(BitMatrix.identity(4))


def test_from_generator_single_row():
    c = bewc.from_generator(BitMatrix.from_strings(["1111"]))
    assert (c.n, c.dim, c.k) == (4, 1, 3)
    assert_valid(c)


# ---------------------------------------------------------------- enumeration

def test_gaussian_binomial_7_choose_4():
    assert codes.gaussian_binomial(7, 4) == 11811
    assert codes.gaussian_binomial(7, 3) == 11811


def test_enumerate_2_1():
    subs = [m.row_strings() for m in codes.enumerate_subspaces(2, 1)]
    assert sorted(tuple(s) for s in subs) == [("01",), ("10",), ("11",)]


@pytest.mark.parametrize("n,dim", [(4, 1), (4, 2), (4, 3), (5, 2), (6, 3)])
def test_enumerate_counts_and_distinct_row_spaces(n, dim):
    spaces = set()
    count = 0
    for m in codes.enumerate_subspaces(n, dim):
        count += 1
        span = frozenset(_row_space(m))
        assert span not in spaces
        spaces.add(span)
        assert gf2.rank(m) == dim
        assert codes.canonical_generator(m) == m
    assert count == codes.gaussian_binomial(n, dim)


def _row_space(m):
    span = {0}
    for r in m.rows:
        span |= {x ^ r for x in span}
    return span


def test_enumerate_guard():
    with pytest.raises(codes.GuardError):
        next(codes.enumerate_subspaces(40, 20))


# ---------------------------------------------------------------- serialization

def test_serialize_round_trip(ex1):
    doc = codes.serialize(ex1)
    back = codes.parse(doc)
    assert back.G == ex1.G and back.name == ex1.name
    assert codes.serialize(back) == doc


def test_serialize_example_rows(ex1):
    assert '"generator_rows"' in codes.serialize(ex1)
    assert codes.parse(codes.serialize(ex1)).G.row_strings() == ["1001", "0110"]


def test_parse_rejects_rank_deficient_document():
    bad = '{"name": "x", "n": 4, "dim": 2, "generator_rows": ["1010", "1010"]}'
    with pytest.raises(CodeError):
        codes.parse(bad)


def test_parse_rejects_malformed():
    with pytest.raises(CodeError):
        codes.parse("not json")
    with pytest.raises(CodeError):
        codes.parse('{"name": "x"}')
    with pytest.raises(CodeError):
        codes.parse('{"name": "x", "n": 4, "dim": 1, "generator_rows": ["111"]}')
