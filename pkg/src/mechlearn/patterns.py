"""Patterns, pattern spaces and labeled datasets.

A pattern of width N is an N-bit tuple; bit 1 is the leftmost character of
its text form. Patterns of one width are enumerated in lexicographic order of
their text, so the k-th pattern is the binary expansion of k with bit 1 as
the most significant bit.

Truth tables and datasets are packed into Python ints with the output for
pattern k stored at bit ``2**N - 1 - k``. Under that packing the integer order
of two tables equals the lexicographic order of their 0/1 strings.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, TextIO

from .errors import (Conflicts, EmptyPattern, MalformedRecord, MixedWidths,
                     NonBinaryCharacter, WidthExceeded)

MAX_WIDTH = 16


def check_width(width: int, limit: int = MAX_WIDTH) -> int:
    if not isinstance(width, int) or width < 1 or width > limit:
        raise WidthExceeded(width, limit)
    return width


@dataclass(frozen=True, order=True)
class Pattern:
    width: int
    bits: tuple[int, ...]

    def __post_init__(self):
        check_width(self.width)
        bits = tuple(self.bits)
        if len(bits) != self.width or any(b not in (0, 1) for b in bits):
            raise ValueError(f"bits {bits!r} do not form a width-{self.width} pattern")
        object.__setattr__(self, "bits", tuple(int(b) for b in bits))

    def __str__(self) -> str:
        return "".join(map(str, self.bits))

    def __getitem__(self, i: int) -> int:
        """Bit ``i`` using 1-based indexing."""
        if not 1 <= i <= self.width:
            raise IndexError(i)
        return self.bits[i - 1]

    @property
    def index(self) -> int:
        """Position of this pattern in :func:`enumerate_patterns` order."""
        k = 0
        for b in self.bits:
            k = (k << 1) | b
        return k

    @classmethod
    def from_index(cls, k: int, width: int) -> Pattern:
        check_width(width)
        if not 0 <= k < (1 << width):
            raise ValueError(f"index {k} outside pattern space of width {width}")
        return cls(width, tuple((k >> (width - i)) & 1 for i in range(1, width + 1)))


@dataclass(frozen=True)
class LabeledSample:
    pattern: Pattern
    label: bool

    def __post_init__(self):
        object.__setattr__(self, "label", bool(self.label))

    @property
    def width(self) -> int:
        return self.pattern.width


def parse_pattern(text: str) -> Pattern:
    if not text:
        raise EmptyPattern()
    for pos, ch in enumerate(text, start=1):
        if ch not in "01":
            raise NonBinaryCharacter(pos, ch)
    if len(text) > MAX_WIDTH:
        raise WidthExceeded(len(text), MAX_WIDTH)
    return Pattern(len(text), tuple(int(ch) for ch in text))


def sample(text: str, label) -> LabeledSample:
    """Shorthand: ``sample("11", 1)``."""
    return LabeledSample(parse_pattern(text), bool(label))


def enumerate_patterns(width: int) -> list[Pattern]:
    check_width(width)
    return [Pattern.from_index(k, width) for k in range(1 << width)]


def pattern_bit(k: int, width: int) -> int:
    """Single-bit mask selecting pattern ``k`` inside a packed table."""
    return 1 << ((1 << width) - 1 - k)


def full_mask(width: int) -> int:
    return (1 << (1 << width)) - 1


class Dataset:
    """Conflict-free set of labeled samples of one width.

    Samples are keyed by pattern. Iteration yields them in first-seen order;
    equality ignores order.
    """

    __slots__ = ("width", "_labels")

    def __init__(self, width: int, labels: Mapping[Pattern, bool] | None = None):
        check_width(width)
        self.width = width
        self._labels: dict[Pattern, bool] = {}
        for p, lab in (labels or {}).items():
            if p.width != width:
                raise MixedWidths([width, p.width])
            self._labels[p] = bool(lab)

    def __len__(self) -> int:
        return len(self._labels)

    def __iter__(self) -> Iterator[LabeledSample]:
        return (LabeledSample(p, lab) for p, lab in self._labels.items())

    def __contains__(self, pattern: Pattern) -> bool:
        return pattern in self._labels

    def __eq__(self, other) -> bool:
        if not isinstance(other, Dataset):
            return NotImplemented
        return self.width == other.width and self._labels == other._labels

    def __hash__(self):
        return hash((self.width, frozenset(self._labels.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"{p}:{int(lab)}" for p, lab in self._labels.items())
        return f"Dataset(width={self.width}, {{{body}}})"

    def label_of(self, pattern: Pattern) -> bool | None:
        return self._labels.get(pattern)

    @property
    def samples(self) -> tuple[LabeledSample, ...]:
        return tuple(self)

    def sorted_samples(self) -> list[LabeledSample]:
        return sorted(self, key=lambda s: s.pattern.index)

    def masks(self) -> tuple[int, int]:
        """Packed (positive, negative) pattern masks."""
        pos = neg = 0
        for p, lab in self._labels.items():
            bit = pattern_bit(p.index, self.width)
            if lab:
                pos |= bit
            else:
                neg |= bit
        return pos, neg

    def subset(self, samples: Iterable[LabeledSample]) -> Dataset:
        return Dataset(self.width, {s.pattern: s.label for s in samples})


def validate_dataset(samples: Iterable[LabeledSample], width: int | None = None) -> Dataset:
    """Collapse duplicates and reject conflicts.

    ``width`` is only needed when ``samples`` is empty; otherwise it must
    agree with the samples.
    """
    if isinstance(samples, Dataset):
        width = samples.width if width is None else width
    samples = list(samples)
    widths = {s.width for s in samples}
    if width is not None:
        widths.add(width)
    if len(widths) > 1:
        raise MixedWidths(widths)
    if not widths:
        raise ValueError("width is required for an empty dataset")
    (w,) = widths

    labels: dict[Pattern, bool] = {}
    conflicts: dict[Pattern, None] = {}
    for s in samples:
        seen = labels.setdefault(s.pattern, s.label)
        if seen != s.label:
            conflicts[s.pattern] = None
    if conflicts:
        raise Conflicts(sorted(conflicts, key=lambda p: p.index))
    return Dataset(w, labels)


_RECORD_KEYS = {"pattern", "label"}


def _parse_record(line: str, lineno: int) -> LabeledSample:
    try:
        rec = json.loads(line)
    except json.JSONDecodeError as exc:
        raise MalformedRecord(lineno, f"invalid JSON ({exc.msg})") from None
    if not isinstance(rec, dict):
        raise MalformedRecord(lineno, "record is not an object")
    keys = set(rec)
    if keys - _RECORD_KEYS:
        raise MalformedRecord(lineno, f"unknown keys {sorted(keys - _RECORD_KEYS)}")
    if _RECORD_KEYS - keys:
        raise MalformedRecord(lineno, f"missing keys {sorted(_RECORD_KEYS - keys)}")
    text, label = rec["pattern"], rec["label"]
    if not isinstance(text, str):
        raise MalformedRecord(lineno, "pattern must be a string")
    # bool is an int subclass; only literal 0/1 are accepted
    if type(label) is not int or label not in (0, 1):
        raise MalformedRecord(lineno, "label must be 0 or 1")
    try:
        return LabeledSample(parse_pattern(text), bool(label))
    except (EmptyPattern, NonBinaryCharacter, WidthExceeded) as exc:
        raise MalformedRecord(lineno, str(exc)) from None


def load_dataset(stream: TextIO | Iterable[str] | str, width: int | None = None) -> Dataset:
    """Read line-delimited ``{"pattern": ..., "label": ...}`` records.

    Blank lines are skipped. ``width`` is required only for an empty stream.
    """
    if isinstance(stream, str):
        stream = stream.splitlines()
    samples = []
    for lineno, line in enumerate(stream, start=1):
        if not line.strip():
            continue
        samples.append(_parse_record(line, lineno))
    if not samples and width is None:
        raise ValueError("width is required for an empty stream")
    return validate_dataset(samples, width)


def dump_dataset(d: Dataset) -> str:
    return "".join(
        json.dumps({"pattern": str(s.pattern), "label": int(s.label)}) + "\n" for s in d)
