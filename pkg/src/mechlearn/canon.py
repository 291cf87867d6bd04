"""Canonical minimal-DNF X-forms.

A cube is a pair ``(care, value)`` of N-bit ints in pattern-index bit order
(bit ``N - i`` holds variable ``b<i>``); pattern ``k`` lies in the cube iff
``k & care == value``.

The canonical form of a table is a minimum-cardinality cover of its on-set by
prime implicants. Among minimum covers the one whose sorted cube-key list is
lexicographically smallest wins. A cube's key lists, per variable
``b1..bN``, 0 for a positive literal, 1 for a negated one and 2 for an absent
one, which is also the order in which implicants are printed.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache

from .errors import NonCertifiedMinimalWarning
from .xform import ONE, ZERO, And, Not, Or, TruthTable, Var, XForm, truth_table

Cube = tuple[int, int]

EXACT_WIDTH_LIMIT = 4


def cube_contains(cube: Cube, k: int) -> bool:
    care, value = cube
    return k & care == value


def cube_key(cube: Cube, width: int) -> tuple[int, ...]:
    care, value = cube
    key = []
    for i in range(1, width + 1):
        bit = 1 << (width - i)
        if not care & bit:
            key.append(2)
        else:
            key.append(0 if value & bit else 1)
    return tuple(key)


def cube_to_xform(cube: Cube, width: int) -> XForm:
    care, value = cube
    lits = []
    for i in range(1, width + 1):
        bit = 1 << (width - i)
        if care & bit:
            lits.append(Var(i) if value & bit else Not(Var(i)))
    if not lits:
        return ONE
    return lits[0] if len(lits) == 1 else And(tuple(lits))


def prime_implicants(on_set, width: int) -> list[Cube]:
    """Quine–McCluskey merging; result sorted by :func:`cube_key`."""
    full = (1 << width) - 1
    current = {(full, k) for k in on_set}
    primes: set[Cube] = set()
    while current:
        merged: set[Cube] = set()
        used: set[Cube] = set()
        by_care: dict[int, list[Cube]] = {}
        for c in current:
            by_care.setdefault(c[0], []).append(c)
        for care, group in by_care.items():
            values = {v for _, v in group}
            for v in values:
                rest = care
                while rest:
                    bit = rest & -rest
                    rest ^= bit
                    if v & bit or (v | bit) not in values:
                        continue
                    merged.add((care & ~bit, v))
                    used.add((care, v))
                    used.add((care, v | bit))
        primes |= current - used
        current = merged
    return sorted(primes, key=lambda c: cube_key(c, width))


def _cover_masks(primes, on_set) -> list[int]:
    index = {k: j for j, k in enumerate(on_set)}
    masks = []
    for p in primes:
        m = 0
        for k, j in index.items():
            if cube_contains(p, k):
                m |= 1 << j
        masks.append(m)
    return masks


def exact_cover(primes: list[Cube], on_set) -> list[Cube]:
    """Smallest cover; among those, the first in lexicographic order of
    ``primes`` index tuples (``primes`` must already be sorted by key)."""
    on_set = list(on_set)
    if not on_set:
        return []
    masks = _cover_masks(primes, on_set)
    target = (1 << len(on_set)) - 1
    n = len(primes)
    # suffix_union[j]: everything primes[j:] can still cover
    suffix_union = [0] * (n + 1)
    for j in range(n - 1, -1, -1):
        suffix_union[j] = suffix_union[j + 1] | masks[j]
    best_single = max(bin(m).count("1") for m in masks)

    def search(start, covered, slots, chosen):
        if covered == target:
            return list(chosen)
        if slots == 0:
            return None
        missing = target & ~covered
        if suffix_union[start] & missing != missing:
            return None
        if bin(missing).count("1") > slots * best_single:
            return None
        for j in range(start, n):
            if suffix_union[j] & missing != missing:
                break
            if not masks[j] & missing:
                continue
            chosen.append(j)
            found = search(j + 1, covered | masks[j], slots - 1, chosen)
            chosen.pop()
            if found is not None:
                return found
        return None

    for k in range(1, n + 1):
        found = search(0, 0, k, [])
        if found is not None:
            return [primes[j] for j in found]
    raise AssertionError("prime implicants failed to cover the on-set")


def greedy_cover(primes: list[Cube], on_set) -> list[Cube]:
    """Essential primes first, then largest-gain primes (ties by key order)."""
    on_set = list(on_set)
    if not on_set:
        return []
    masks = _cover_masks(primes, on_set)
    target = (1 << len(on_set)) - 1
    chosen: set[int] = set()
    for j in range(len(on_set)):
        holders = [i for i, m in enumerate(masks) if m >> j & 1]
        if len(holders) == 1:
            chosen.add(holders[0])
    covered = 0
    for i in chosen:
        covered |= masks[i]
    while covered != target:
        gains = [bin(m & ~covered).count("1") for m in masks]
        i = max(range(len(masks)), key=lambda i: (gains[i], -i))
        chosen.add(i)
        covered |= masks[i]
    return [primes[i] for i in sorted(chosen)]


@dataclass(frozen=True)
class Minimized:
    xform: XForm
    cubes: tuple[Cube, ...]
    certified: bool


@lru_cache(maxsize=1 << 17)
def _minimize(width: int, bits: int) -> Minimized:
    table = TruthTable.from_bits(width, bits)
    on_set = table.on_set
    if not on_set:
        return Minimized(ZERO, (), True)
    if len(on_set) == 1 << width:
        return Minimized(ONE, ((0, 0),), True)
    primes = prime_implicants(on_set, width)
    certified = width <= EXACT_WIDTH_LIMIT
    cover = exact_cover(primes, on_set) if certified else greedy_cover(primes, on_set)
    cover.sort(key=lambda c: cube_key(c, width))
    terms = [cube_to_xform(c, width) for c in cover]
    xf = terms[0] if len(terms) == 1 else Or(tuple(terms))
    return Minimized(xf, tuple(cover), certified)


def minimize(t: TruthTable) -> Minimized:
    return _minimize(t.width, t.bits)


def canonical_min_dnf(t: TruthTable) -> XForm:
    """Canonical minimal DNF of ``t``.

    Above width 4 a greedy cover is used and a
    :class:`NonCertifiedMinimalWarning` is emitted.
    """
    m = minimize(t)
    if not m.certified:
        warnings.warn(f"width-{t.width} cover is greedy, not certified minimal",
                      NonCertifiedMinimalWarning, stacklevel=2)
    return m.xform


def canonicalize(f: XForm, width: int) -> XForm:
    return canonical_min_dnf(truth_table(f, width))
