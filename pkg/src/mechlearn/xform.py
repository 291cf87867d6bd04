"""X-form expression trees.

Leaves are base variables ``b1..bN`` and the constants ``0``/``1``; internal
nodes are ``!``, ``&`` and ``|``. Text grammar::

    expr   := term ('|' term)*
    term   := factor ('&' factor)*
    factor := '!' factor | '(' expr ')' | atom
    atom   := 'b' DIGITS | '0' | '1'
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Union

from .errors import VariableOutOfRange, XFormSyntaxError
from .patterns import Pattern, check_width, full_mask, pattern_bit


@dataclass(frozen=True)
class Var:
    index: int

    def __str__(self):
        return to_text(self)


@dataclass(frozen=True)
class Const:
    value: int

    def __post_init__(self):
        if self.value not in (0, 1):
            raise ValueError("constant must be 0 or 1")
        object.__setattr__(self, "value", int(self.value))

    def __str__(self):
        return to_text(self)


@dataclass(frozen=True)
class Not:
    child: XForm

    def __str__(self):
        return to_text(self)


@dataclass(frozen=True)
class And:
    children: tuple[XForm, ...]

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        if len(self.children) < 2:
            raise ValueError("And needs at least 2 children")

    def __str__(self):
        return to_text(self)


@dataclass(frozen=True)
class Or:
    children: tuple[XForm, ...]

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        if len(self.children) < 2:
            raise ValueError("Or needs at least 2 children")

    def __str__(self):
        return to_text(self)


XForm = Union[Var, Const, Not, And, Or]

ZERO = Const(0)
ONE = Const(1)


@dataclass(frozen=True)
class TruthTable:
    """Outputs of a boolean function over all patterns, in enumeration order."""

    width: int
    outputs: tuple[bool, ...]

    def __post_init__(self):
        check_width(self.width)
        outputs = tuple(bool(x) for x in self.outputs)
        if len(outputs) != 1 << self.width:
            raise ValueError(
                f"table of width {self.width} needs {1 << self.width} outputs, got {len(outputs)}")
        object.__setattr__(self, "outputs", outputs)

    def __str__(self):
        return "".join("1" if x else "0" for x in self.outputs)

    def __getitem__(self, k: int) -> bool:
        return self.outputs[k]

    @property
    def bits(self) -> int:
        """Packed form; see :mod:`mechlearn.patterns`."""
        return int(str(self), 2)

    @classmethod
    def from_bits(cls, width: int, bits: int) -> TruthTable:
        n = 1 << width
        if not 0 <= bits < (1 << n):
            raise ValueError("packed table out of range")
        return cls(width, tuple(c == "1" for c in format(bits, f"0{n}b")))

    @classmethod
    def parse(cls, text: str) -> TruthTable:
        n = len(text)
        width = n.bit_length() - 1
        if n == 0 or (1 << width) != n or set(text) - {"0", "1"}:
            raise ValueError(f"{text!r} is not a truth table string")
        return cls(width, tuple(c == "1" for c in text))

    @property
    def on_set(self) -> list[int]:
        return [k for k, v in enumerate(self.outputs) if v]


# -- printing --------------------------------------------------------------

def _prec(f: XForm) -> int:
    if isinstance(f, Or):
        return 1
    if isinstance(f, And):
        return 2
    if isinstance(f, Not):
        return 3
    return 4


def to_text(f: XForm) -> str:
    """Render with the fewest parentheses that still round-trip the tree.

    Same-operator nesting is parenthesized because the parser builds n-ary
    nodes, so ``a & (b & c)`` and ``a & b & c`` are different trees.
    """
    match f:
        case Var(index=i):
            return f"b{i}"
        case Const(value=v):
            return str(v)
        case Not(child=c):
            inner = to_text(c)
            return "!" + (f"({inner})" if _prec(c) < 3 else inner)
        case And(children=cs):
            return " & ".join(f"({to_text(c)})" if _prec(c) <= 2 else to_text(c) for c in cs)
        case Or(children=cs):
            return " | ".join(f"({to_text(c)})" if _prec(c) <= 1 else to_text(c) for c in cs)
    raise TypeError(f"not an X-form: {f!r}")


# -- parsing ---------------------------------------------------------------

class _Parser:

    def __init__(self, text: str, width: int):
        self.text = text
        self.width = width
        self.pos = 0

    def error(self, message: str, pos: int | None = None):
        raise XFormSyntaxError((self.pos if pos is None else pos) + 1, message)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> XForm:
        f = self.expr()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return f

    def expr(self) -> XForm:
        terms = [self.term()]
        while self.peek() == "|":
            self.pos += 1
            terms.append(self.term())
        return terms[0] if len(terms) == 1 else Or(tuple(terms))

    def term(self) -> XForm:
        factors = [self.factor()]
        while self.peek() == "&":
            self.pos += 1
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else And(tuple(factors))

    def factor(self) -> XForm:
        ch = self.peek()
        if ch == "!":
            self.pos += 1
            return Not(self.factor())
        if ch == "(":
            self.pos += 1
            f = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return f
        return self.atom()

    def atom(self) -> XForm:
        ch = self.peek()
        if ch in ("0", "1"):
            self.pos += 1
            return Const(int(ch))
        if ch == "b":
            self.pos += 1
            end = self.pos
            while end < len(self.text) and self.text[end].isdigit():
                end += 1
            if end == self.pos:
                self.error("expected digits after 'b'")
            index = int(self.text[self.pos:end])
            self.pos = end
            if not 1 <= index <= self.width:
                raise VariableOutOfRange(index, self.width)
            return Var(index)
        self.error("unexpected end of input" if not ch else f"unexpected {ch!r}")


def parse_xform(text: str, width: int) -> XForm:
    check_width(width)
    return _Parser(text, width).parse()


# -- semantics -------------------------------------------------------------

def max_var(f: XForm) -> int:
    """Largest base-variable index used, 0 if none."""
    match f:
        case Var(index=i):
            return i
        case Const():
            return 0
        case Not(child=c):
            return max_var(c)
        case And(children=cs) | Or(children=cs):
            return max(max_var(c) for c in cs)
    raise TypeError(f"not an X-form: {f!r}")


def check_vars(f: XForm, width: int) -> None:
    m = max_var(f)
    if m > width:
        raise VariableOutOfRange(m, width)
    _check_min_index(f, width)


def _check_min_index(f: XForm, width: int) -> None:
    match f:
        case Var(index=i) if i < 1:
            raise VariableOutOfRange(i, width)
        case Not(child=c):
            _check_min_index(c, width)
        case And(children=cs) | Or(children=cs):
            for c in cs:
                _check_min_index(c, width)


def evaluate(f: XForm, p: Pattern) -> bool:
    match f:
        case Var(index=i):
            if not 1 <= i <= p.width:
                raise VariableOutOfRange(i, p.width)
            return p.bits[i - 1] == 1
        case Const(value=v):
            return v == 1
        case Not(child=c):
            return not evaluate(c, p)
        case And(children=cs):
            # evaluate every child so out-of-range errors are not masked
            vals = [evaluate(c, p) for c in cs]
            return all(vals)
        case Or(children=cs):
            vals = [evaluate(c, p) for c in cs]
            return any(vals)
    raise TypeError(f"not an X-form: {f!r}")


def var_mask(i: int, width: int) -> int:
    """Packed table of ``b<i>``."""
    m = 0
    for k in range(1 << width):
        if (k >> (width - i)) & 1:
            m |= pattern_bit(k, width)
    return m


def table_bits(f: XForm, width: int) -> int:
    """Packed truth table, computed with whole-table bitwise operations."""
    check_width(width)
    check_vars(f, width)
    full = full_mask(width)
    masks = {}

    def go(g):
        match g:
            case Var(index=i):
                if i not in masks:
                    masks[i] = var_mask(i, width)
                return masks[i]
            case Const(value=v):
                return full if v else 0
            case Not(child=c):
                return full & ~go(c)
            case And(children=cs):
                acc = full
                for c in cs:
                    acc &= go(c)
                return acc
            case Or(children=cs):
                acc = 0
                for c in cs:
                    acc |= go(c)
                return acc
        raise TypeError(f"not an X-form: {g!r}")

    return go(f)


def truth_table(f: XForm, width: int) -> TruthTable:
    return TruthTable.from_bits(width, table_bits(f, width))


def equivalent(f: XForm, g: XForm, width: int) -> bool:
    return table_bits(f, width) == table_bits(g, width)


def size(f: XForm) -> int:
    match f:
        case Var() | Const():
            return 1
        case Not(child=c):
            return 1 + size(c)
        case And(children=cs) | Or(children=cs):
            return 1 + sum(size(c) for c in cs)
    raise TypeError(f"not an X-form: {f!r}")


def depth(f: XForm) -> int:
    match f:
        case Var() | Const():
            return 1
        case Not(child=c):
            return 1 + depth(c)
        case And(children=cs) | Or(children=cs):
            return 1 + max(depth(c) for c in cs)
    raise TypeError(f"not an X-form: {f!r}")


def normalize(f: XForm) -> XForm:
    """Recursively sort And/Or children by their rendered text."""
    match f:
        case Not(child=c):
            return Not(normalize(c))
        case And(children=cs):
            return And(tuple(sorted((normalize(c) for c in cs), key=to_text)))
        case Or(children=cs):
            return Or(tuple(sorted((normalize(c) for c in cs), key=to_text)))
    return f


def structurally_identical(f: XForm, g: XForm) -> bool:
    return normalize(f) == normalize(g)


def random_xform(width: int, max_depth: int, seed: int) -> XForm:
    """Seeded random tree with ``depth(result) <= max_depth``."""
    if width < 1 or max_depth < 1:
        raise ValueError("width and max_depth must be >= 1")
    rng = random.Random(seed)

    def leaf():
        if rng.random() < 0.85:
            return Var(rng.randint(1, width))
        return Const(rng.randint(0, 1))

    def gen(budget):
        if budget == 1 or rng.random() < 0.25:
            return leaf()
        op = rng.choice(("not", "and", "or"))
        if op == "not":
            return Not(gen(budget - 1))
        kids = tuple(gen(budget - 1) for _ in range(rng.randint(2, 3)))
        return And(kids) if op == "and" else Or(kids)

    return gen(max_depth)
