import warnings

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mechlearn.canon import (canonical_min_dnf, canonicalize, cube_key, minimize,
                             prime_implicants)
from mechlearn.errors import NonCertifiedMinimalWarning
from mechlearn.xform import (ONE, ZERO, And, Not, Or, TruthTable, Var, parse_xform,
                             random_xform, to_text, truth_table)
from oracles import brute_min_dnf_size, brute_prime_implicants


def tt(text):
    return TruthTable.parse(text)


def all_tables(width):
    n = 1 << width
    return [TruthTable.from_bits(width, b) for b in range(1 << n)]


def _cube_as_tuple(cube, width):
    care, value = cube
    out = []
    for i in range(1, width + 1):
        bit = 1 << (width - i)
        out.append(None if not care & bit else (1 if value & bit else 0))
    return tuple(out)


def test_examples():
    assert canonical_min_dnf(tt("0000")) == ZERO
    assert canonical_min_dnf(tt("1111")) == ONE
    assert canonical_min_dnf(tt("0001")) == And((Var(1), Var(2)))
    xor = canonical_min_dnf(tt("0110"))
    assert xor == Or((And((Var(1), Not(Var(2)))), And((Not(Var(1)), Var(2)))))
    assert to_text(xor) == "b1 & !b2 | !b1 & b2"


def test_and_minimality_by_brute_force():
    # a single implicant suffices for AND, none for XOR
    assert brute_min_dnf_size(tt("0001").outputs, 2) == 1
    assert brute_min_dnf_size(tt("0110").outputs, 2) == 2


def test_single_implicant_not_wrapped():
    assert canonical_min_dnf(tt("0011")) == Var(1)
    assert canonical_min_dnf(tt("1100")) == Not(Var(1))
    assert canonical_min_dnf(tt("0111")) == Or((Var(1), Var(2)))


@pytest.mark.parametrize("width", [1, 2, 3])
def test_prime_implicants_match_brute_force(width):
    for t in all_tables(width):
        got = {_cube_as_tuple(c, width) for c in prime_implicants(t.on_set, width)}
        assert got == brute_prime_implicants(t.outputs, width), str(t)


def test_prime_implicants_width4_sample():
    for b in range(0, 1 << 16, 251):
        t = TruthTable.from_bits(4, b)
        got = {_cube_as_tuple(c, 4) for c in prime_implicants(t.on_set, 4)}
        assert got == brute_prime_implicants(t.outputs, 4)


@pytest.mark.parametrize("width", [1, 2, 3])
def test_soundness_and_minimality_exhaustive(width):
    for t in all_tables(width):
        m = minimize(t)
        assert truth_table(m.xform, width) == t
        expected = brute_min_dnf_size(t.outputs, width)
        # ONE is a single (empty) implicant
        assert len(m.cubes) == expected, str(t)
        assert m.certified


def test_lexicographic_tie_break():
    # b1&b2 | !b1&b3 | b2&b3 has a redundant consensus term; the cover must
    # pick the two essentials
    t = truth_table(parse_xform("b1&b2 | !b1&b3", 3), 3)
    assert to_text(canonical_min_dnf(t)) == "b1 & b2 | !b1 & b3"
    # cyclic function with two minimum covers: the key-smaller one is chosen
    cyc = truth_table(parse_xform("!b1&b2 | b1&!b3 | !b2&b3 | b1&!b2 | b2&!b3 | !b1&b3", 3), 3)
    m = minimize(cyc)
    assert len(m.cubes) == 3
    keys = sorted(cube_key(c, 3) for c in m.cubes)
    alt = [(0, 1, 2), (1, 2, 0), (2, 0, 1)]  # b1&!b2, !b1&b3, b2&!b3
    assert keys == sorted(alt)
    assert to_text(m.xform) == "b1 & !b2 | !b1 & b3 | b2 & !b3"


@given(st.integers(0, 10**9), st.integers(0, 10**9))
def test_uniqueness_across_equivalent_forms(s1, s2):
    f = random_xform(3, 5, s1)
    g = Or((And((f, random_xform(3, 3, s2))), f))  # absorption: g == f
    assert canonicalize(f, 3) == canonicalize(g, 3)


@pytest.mark.parametrize("width", [2, 3])
def test_idempotent(width):
    for t in all_tables(width):
        c = canonical_min_dnf(t)
        assert canonical_min_dnf(truth_table(c, width)) == c


def test_width4_spot_checks():
    for b in range(0, 1 << 16, 997):
        t = TruthTable.from_bits(4, b)
        c = canonical_min_dnf(t)
        assert truth_table(c, 4) == t
        assert canonical_min_dnf(truth_table(c, 4)) == c


def test_greedy_fallback_warns_above_width4():
    f = parse_xform("b1 & b2 | b3 & b4 | !b5", 5)
    with pytest.warns(NonCertifiedMinimalWarning):
        c = canonical_min_dnf(truth_table(f, 5))
    assert truth_table(c, 5) == truth_table(f, 5)
    assert not minimize(truth_table(f, 5)).certified
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        canonical_min_dnf(tt("0110"))
