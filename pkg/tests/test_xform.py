import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mechlearn.errors import VariableOutOfRange, XFormSyntaxError
from mechlearn.patterns import enumerate_patterns, parse_pattern
from mechlearn.xform import (ONE, ZERO, And, Const, Not, Or, TruthTable, Var, depth,
                             equivalent, evaluate, normalize, parse_xform, random_xform,
                             size, structurally_identical, to_text, truth_table)
from oracles import oracle_eval, oracle_table

XOR = "(b1&!b2)|(!b1&b2)"


def x(text, width=2):
    return parse_xform(text, width)


def test_parse_examples():
    assert x("b1 & b2") == And((Var(1), Var(2)))
    assert x("!b1 | b1") == Or((Not(Var(1)), Var(1)))
    with pytest.raises(VariableOutOfRange) as exc:
        x("b3")
    assert exc.value.index == 3


def test_parse_precedence_and_grouping():
    assert x("b1 | b2 & !b1") == Or((Var(1), And((Var(2), Not(Var(1))))))
    assert x("(b1 | b2) & b1") == And((Or((Var(1), Var(2))), Var(1)))
    assert x("b1 & b2 & b1") == And((Var(1), Var(2), Var(1)))
    assert x("!!b1") == Not(Not(Var(1)))
    assert x("  0|1 ") == Or((ZERO, ONE))
    assert x("b01") == Var(1)


@pytest.mark.parametrize("text, pos", [
    ("b1&&", 4),
    ("", 1),
    ("b1 b2", 4),
    ("(b1", 4),
    ("b", 2),
    ("b1 | )", 6),
    ("01", 2),
    ("c1", 1),
])
def test_parse_syntax_errors(text, pos):
    with pytest.raises(XFormSyntaxError) as exc:
        x(text)
    assert exc.value.position == pos


def test_parse_b0_out_of_range():
    with pytest.raises(VariableOutOfRange):
        x("b0")


def test_evaluate_examples():
    assert evaluate(x("b1 & b2"), parse_pattern("11")) is True
    assert evaluate(x("b1 & b2"), parse_pattern("10")) is False
    xor = x(XOR)
    assert evaluate(xor, parse_pattern("01")) is True
    # cross-check the derived example against the oracle on the whole space
    for p in enumerate_patterns(2):
        assert evaluate(xor, p) == oracle_eval(xor, p.bits)


def test_evaluate_out_of_range():
    with pytest.raises(VariableOutOfRange):
        evaluate(Var(3), parse_pattern("11"))
    with pytest.raises(VariableOutOfRange):
        evaluate(Or((ONE, Var(3))), parse_pattern("11"))


def test_truth_table_examples():
    assert str(truth_table(x("b1 | !b1", 1), 1)) == "11"
    assert str(truth_table(ZERO, 2)) == "0000"
    and_tt = truth_table(x("b1 & b2"), 2)
    assert str(and_tt) == "0001"
    assert and_tt.outputs == tuple(evaluate(x("b1 & b2"), p) for p in enumerate_patterns(2))


def test_truth_table_type():
    t = TruthTable.parse("0110")
    assert t.width == 2 and t.bits == 0b0110 and t.on_set == [1, 2]
    assert TruthTable.from_bits(2, 6) == t
    with pytest.raises(ValueError):
        TruthTable(2, (True,) * 3)
    with pytest.raises(ValueError):
        TruthTable.parse("011")
    with pytest.raises(VariableOutOfRange):
        truth_table(Var(3), 2)


def test_equivalent_examples():
    assert equivalent(x("b1&b2"), x("b2&b1"), 2)
    assert equivalent(x("b1"), x("b1|0"), 2)
    assert not equivalent(x("b1&b2"), x("b1|b2"), 2)
    a, o = truth_table(x("b1&b2"), 2), truth_table(x("b1|b2"), 2)
    assert [k for k in range(4) if a[k] != o[k]][0] == 1  # first difference at "01"


def test_size_examples():
    assert size(ONE) == 1
    assert size(x("b1 & b2")) == 3
    assert size(x(XOR)) == 9


def test_printer_minimal_parentheses():
    assert to_text(x(XOR)) == "b1 & !b2 | !b1 & b2"
    assert to_text(x("!(b1 & b2)")) == "!(b1 & b2)"
    assert to_text(x("(b1 | b2) & !b1")) == "(b1 | b2) & !b1"
    assert to_text(And((Var(1), And((Var(2), Var(1)))))) == "b1 & (b2 & b1)"
    assert to_text(Or((Var(1), Or((Var(2), ZERO))))) == "b1 | (b2 | 0)"
    assert to_text(Not(Not(Var(2)))) == "!!b2"


@settings(max_examples=300)
@given(st.integers(1, 4), st.integers(1, 6), st.integers(0, 10**9))
def test_print_parse_roundtrip(width, d, seed):
    f = random_xform(width, d, seed)
    assert parse_xform(to_text(f), width) == f


def test_random_xform_contract():
    assert random_xform(3, 5, 42) == random_xform(3, 5, 42)
    for seed in range(50):
        assert isinstance(random_xform(3, 1, seed), (Var, Const))
    for seed in range(1000):
        f = random_xform(3, 5, seed)
        assert depth(f) <= 5
        _check_invariants(f, 3)


def _check_invariants(f, width):
    if isinstance(f, Var):
        assert 1 <= f.index <= width
    elif isinstance(f, Not):
        _check_invariants(f.child, width)
    elif isinstance(f, (And, Or)):
        assert len(f.children) >= 2
        for c in f.children:
            _check_invariants(c, width)


def test_arity_invariant_enforced():
    with pytest.raises(ValueError):
        And((Var(1),))
    with pytest.raises(ValueError):
        Or(())
    with pytest.raises(ValueError):
        Const(2)


@pytest.mark.parametrize("width", [1, 2, 3, 4])
def test_oracle_equivalence_exhaustive(width):
    for seed in range(200):
        f = random_xform(width, 5, seed)
        tt = truth_table(f, width)
        assert tt.outputs == oracle_table(f, width)
        for p in enumerate_patterns(width):
            assert evaluate(f, p) == oracle_eval(f, p.bits)


@given(st.integers(0, 10**9), st.integers(0, 10**9))
def test_de_morgan(s1, s2):
    f, g = random_xform(3, 4, s1), random_xform(3, 4, s2)
    assert equivalent(Not(And((f, g))), Or((Not(f), Not(g))), 3)
    assert equivalent(Not(Or((f, g))), And((Not(f), Not(g))), 3)


@given(st.integers(0, 10**9), st.integers(0, 10**9))
def test_boolean_laws(s1, s2):
    f, g = random_xform(3, 4, s1), random_xform(3, 4, s2)
    assert equivalent(And((f, g)), And((g, f)), 3)
    assert equivalent(Or((f, And((f, g)))), f, 3)       # absorption
    assert equivalent(Or((f, Not(f))), ONE, 3)
    assert equivalent(Not(Not(f)), f, 3)


def test_normalize():
    a = x("b2 & b1 | !b1")
    b = x("!b1 | b1 & b2")
    assert a != b
    assert structurally_identical(a, b)
    assert normalize(normalize(a)) == normalize(a)
    assert not structurally_identical(x("b1 & b2"), x("b1 | b2"))
