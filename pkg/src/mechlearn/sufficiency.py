"""Hypothesis classes, exact consistent-hypothesis counting and sufficiency.

Hypotheses are handled extensionally, as packed truth tables (see
:mod:`mechlearn.patterns`), so equivalent X-forms in a class count once and
table order coincides with integer order.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

import numpy as np

from .canon import canonical_min_dnf
from .errors import (ClassTooLarge, InvalidClass, NonCertifiedMinimalWarning,
                     NotSufficientInput, SubsetSearchTooLarge, WidthMismatch)
from .patterns import Dataset, check_width
from .xform import TruthTable, XForm, check_vars, parse_xform, table_bits, to_text

ALL_FUNCTIONS_MAX_WIDTH = 4
MAX_ENUMERATED = 10**6
EXHAUSTIVE_SUBSET_LIMIT = 12
DEFAULT_WITNESS_LIMIT = 8


@dataclass(frozen=True)
class HypothesisClass:
    width: int
    kind: str  # "all" | "dnf" | "list"
    k: int | None = None
    members: tuple[XForm, ...] = ()

    def __post_init__(self):
        check_width(self.width)
        if self.kind == "all":
            if self.width > ALL_FUNCTIONS_MAX_WIDTH:
                raise ClassTooLarge(
                    f"AllFunctions needs width <= {ALL_FUNCTIONS_MAX_WIDTH}, got {self.width}")
        elif self.kind == "dnf":
            if self.k is None or self.k < 1:
                raise InvalidClass("BoundedDnf needs k >= 1")
        elif self.kind == "list":
            object.__setattr__(self, "members", tuple(self.members))
            if not self.members:
                raise InvalidClass("ExplicitList must be non-empty")
            for f in self.members:
                check_vars(f, self.width)
        else:
            raise InvalidClass(f"unknown class kind {self.kind!r}")

    def __str__(self):
        if self.kind == "all":
            return "all"
        if self.kind == "dnf":
            return f"dnf:{self.k}"
        return "list:" + ";".join(to_text(f) for f in self.members)

    def tables(self) -> np.ndarray:
        """Distinct member tables, ascending (= lexicographic table order)."""
        return _class_tables(self)


def AllFunctions(width: int) -> HypothesisClass:
    return HypothesisClass(width, "all")


def BoundedDnf(width: int, k: int) -> HypothesisClass:
    return HypothesisClass(width, "dnf", k=k)


def ExplicitList(width: int, members) -> HypothesisClass:
    return HypothesisClass(width, "list", members=tuple(members))


def _all_cube_tables(width: int) -> list[int]:
    # every cube over `width` variables, as a packed table
    n = 1 << width
    tables = []
    for code in range(3 ** width):
        care = value = 0
        c = code
        for i in range(width):
            digit = c % 3
            c //= 3
            bit = 1 << i
            if digit < 2:
                care |= bit
                value |= bit if digit == 0 else 0
        t = 0
        for k in range(n):
            if k & care == value:
                t |= 1 << (n - 1 - k)
        tables.append(t)
    return tables


@lru_cache(maxsize=64)
def _class_tables(cls: HypothesisClass) -> np.ndarray:
    if cls.kind == "all":
        return np.arange(1 << (1 << cls.width), dtype=np.uint64)

    if cls.kind == "list":
        found = {table_bits(f, cls.width) for f in cls.members}
    else:
        if 3 ** cls.width > MAX_ENUMERATED:
            raise ClassTooLarge(f"too many cubes at width {cls.width}")
        cubes = set(_all_cube_tables(cls.width))
        # zero implicants (the empty disjunction) is included
        found = {0}
        frontier = {0}
        for _ in range(cls.k):
            nxt = {t | c for t in frontier for c in cubes} - found
            found |= nxt
            frontier = nxt
            if len(found) > MAX_ENUMERATED:
                raise ClassTooLarge(f"dnf:{cls.k} at width {cls.width} exceeds "
                                    f"{MAX_ENUMERATED} distinct functions")
            if not nxt:
                break
    ordered = sorted(found)
    if (1 << cls.width) <= 64:
        return np.array(ordered, dtype=np.uint64)
    return np.array(ordered, dtype=object)


def _consistent_tables(cls: HypothesisClass, d: Dataset) -> np.ndarray:
    if d.width != cls.width:
        raise WidthMismatch(cls.width, d.width)
    tables = cls.tables()
    pos, neg = d.masks()
    if tables.dtype == object:
        keep = [t for t in tables if t & pos == pos and t & neg == 0]
        return np.array(keep, dtype=object)
    p, q = np.uint64(pos), np.uint64(neg)
    ok = ((tables & p) == p) & ((tables & q) == 0)
    return tables[ok]


@dataclass(frozen=True)
class SufficiencyReport:
    consistent_count: int
    witnesses: tuple[XForm, ...] = ()
    target_consistent: bool | None = None
    sufficient: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(
            self, "sufficient", self.consistent_count == 1 and self.target_consistent is True)

    def to_record(self) -> dict:
        return {
            "consistent_count": self.consistent_count,
            "sufficient": self.sufficient,
            "target_consistent": self.target_consistent,
            "witnesses": [to_text(w) for w in self.witnesses],
        }


def consistent(f: XForm, d: Dataset) -> bool:
    check_vars(f, d.width)
    pos, neg = d.masks()
    t = table_bits(f, d.width)
    return t & pos == pos and t & neg == 0


def _witnesses(tables, width, limit) -> tuple[XForm, ...]:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NonCertifiedMinimalWarning)
        return tuple(canonical_min_dnf(TruthTable.from_bits(width, int(t)))
                     for t in tables[:limit])


def consistent_count(c: HypothesisClass, d: Dataset,
                     witness_limit: int = DEFAULT_WITNESS_LIMIT) -> SufficiencyReport:
    hits = _consistent_tables(c, d)
    return SufficiencyReport(int(len(hits)), _witnesses(hits, c.width, witness_limit))


def is_sufficient(c: HypothesisClass, d: Dataset, target: XForm,
                  witness_limit: int = DEFAULT_WITNESS_LIMIT) -> SufficiencyReport:
    if d.width != c.width:
        raise WidthMismatch(c.width, d.width)
    check_vars(target, c.width)
    hits = _consistent_tables(c, d)
    return SufficiencyReport(int(len(hits)), _witnesses(hits, c.width, witness_limit),
                             target_consistent=consistent(target, d))


def _sufficient(c, d, target) -> bool:
    # cheap path: no witnesses
    return consistent(target, d) and len(_consistent_tables(c, d)) == 1


def minimal_sufficient_subset(c: HypothesisClass, d: Dataset, target: XForm,
                              mode: str = "auto") -> Dataset:
    """Smallest sub-dataset of ``d`` that still suffices for ``target``.

    ``mode`` is ``"exhaustive"`` (increasing size, lexicographic ties; at most
    12 samples), ``"greedy"`` (backward elimination in lexicographic order,
    warns that the result is not certified minimal) or ``"auto"``.
    """
    if mode not in ("auto", "exhaustive", "greedy"):
        raise ValueError(f"unknown mode {mode!r}")
    if not _sufficient(c, d, target):
        raise NotSufficientInput("input dataset is not sufficient for the target")
    ordered = d.sorted_samples()
    if mode == "auto":
        mode = "exhaustive" if len(ordered) <= EXHAUSTIVE_SUBSET_LIMIT else "greedy"

    if mode == "exhaustive":
        if len(ordered) > EXHAUSTIVE_SUBSET_LIMIT:
            raise SubsetSearchTooLarge(
                f"exhaustive search capped at {EXHAUSTIVE_SUBSET_LIMIT} samples, got {len(ordered)}")
        for r in range(len(ordered) + 1):
            for combo in combinations(ordered, r):
                sub = d.subset(combo)
                if _sufficient(c, sub, target):
                    return sub
        raise AssertionError("full dataset was sufficient")

    keep = list(ordered)
    for s in ordered:
        trial = [x for x in keep if x != s]
        if _sufficient(c, d.subset(trial), target):
            keep = trial
    warnings.warn("greedy subset is not certified minimal", NonCertifiedMinimalWarning,
                  stacklevel=2)
    return d.subset(keep)


def parse_class_spec(spec: str, width: int) -> HypothesisClass:
    """``all`` | ``dnf:K`` | ``list:F1;F2;...``"""
    if spec == "all":
        return AllFunctions(width)
    if spec.startswith("dnf:"):
        try:
            k = int(spec[4:])
        except ValueError:
            raise InvalidClass(f"bad dnf bound in {spec!r}") from None
        return BoundedDnf(width, k)
    if spec.startswith("list:"):
        parts = [p for p in spec[5:].split(";") if p.strip()]
        return ExplicitList(width, [parse_xform(p, width) for p in parts])
    raise InvalidClass(f"unknown class spec {spec!r}")
