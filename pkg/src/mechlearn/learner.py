"""Incremental interval learner.

The machine keeps the tightest pair of hypotheses bracketing everything
consistent with what it has seen: ``lower`` is on exactly at observed
positives, ``upper`` is off exactly at observed negatives. Both are stored in
canonical minimal-DNF form, so each fed sample moves the pair through X-form
space in a reproducible way.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .canon import canonical_min_dnf
from .errors import ClassTooLarge, ConflictingSample, WidthMismatch
from .patterns import Dataset, LabeledSample, Pattern, full_mask, pattern_bit
from .sufficiency import HypothesisClass, consistent_count
from .xform import ONE, ZERO, TruthTable, XForm, to_text

CONVERGED = "Converged"
NOT_CONVERGED = "NotConvergedStreamExhausted"


@dataclass(frozen=True)
class TraceEvent:
    step: int
    sample: LabeledSample
    lower_after: XForm
    upper_after: XForm
    gap: int
    consistent_remaining: int | None = None

    def to_record(self) -> dict:
        return {
            "step": self.step,
            "pattern": str(self.sample.pattern),
            "label": int(self.sample.label),
            "lower": to_text(self.lower_after),
            "upper": to_text(self.upper_after),
            "gap": self.gap,
        }


@dataclass
class LearningMachine:
    width: int
    hclass: HypothesisClass
    observed: Dataset = field(init=False)
    lower: XForm = field(default=ZERO, init=False)
    upper: XForm = field(default=ONE, init=False)
    trace: list[TraceEvent] = field(default_factory=list, init=False)
    _pos: int = field(default=0, init=False, repr=False)
    _neg: int = field(default=0, init=False, repr=False)

    def __post_init__(self):
        if self.hclass.width != self.width:
            raise WidthMismatch(self.width, self.hclass.width)
        self.observed = Dataset(self.width)

    @property
    def lower_bits(self) -> int:
        return self._pos

    @property
    def upper_bits(self) -> int:
        return full_mask(self.width) & ~self._neg

    @property
    def gap(self) -> int:
        return (1 << self.width) - len(self.observed)

    @property
    def hypothesis(self) -> XForm:
        """Current best guess for downstream consumers: the lower form."""
        return self.lower

    def consistent_remaining(self) -> int | None:
        """Exact count of class members consistent with ``observed``, or
        ``None`` when the class is too large to enumerate."""
        try:
            return consistent_count(self.hclass, self.observed, witness_limit=0).consistent_count
        except ClassTooLarge:
            return None

    def converged(self) -> bool:
        if self.hclass.kind == "all":
            return self.gap == 0
        remaining = self.consistent_remaining()
        if remaining is None:
            return self.gap == 0
        return remaining == 1

    def feed(self, s: LabeledSample) -> LearningMachine:
        """Absorb one sample in place; returns ``self`` for chaining."""
        if s.pattern.width != self.width:
            raise WidthMismatch(self.width, s.pattern.width)
        seen = self.observed.label_of(s.pattern)
        if seen is not None:
            if seen != s.label:
                raise ConflictingSample(s.pattern, s.label)
            return self

        bit = pattern_bit(s.pattern.index, self.width)
        if s.label:
            self._pos |= bit
        else:
            self._neg |= bit
        self.observed = self.observed.subset([*self.observed, s])
        self.lower = canonical_min_dnf(TruthTable.from_bits(self.width, self.lower_bits))
        self.upper = canonical_min_dnf(TruthTable.from_bits(self.width, self.upper_bits))
        self.trace.append(TraceEvent(
            step=len(self.trace) + 1,
            sample=s,
            lower_after=self.lower,
            upper_after=self.upper,
            gap=self.gap,
            consistent_remaining=self.consistent_remaining(),
        ))
        return self


def new_machine(width: int, hclass: HypothesisClass) -> LearningMachine:
    return LearningMachine(width, hclass)


def feed(m: LearningMachine, s: LabeledSample) -> LearningMachine:
    return m.feed(s)


def converged(m: LearningMachine) -> bool:
    return m.converged()


@dataclass(frozen=True)
class RunResult:
    machine: LearningMachine
    trace: list[TraceEvent]
    status: str

    @property
    def converged(self) -> bool:
        return self.status == CONVERGED


def run_to_convergence(m: LearningMachine, samples: Iterable[LabeledSample]) -> RunResult:
    """Feed ``samples`` in order, stopping as soon as the machine converges."""
    for s in samples:
        if m.converged():
            break
        m.feed(s)
    status = CONVERGED if m.converged() else NOT_CONVERGED
    return RunResult(m, list(m.trace), status)


def on_set(bits: int, width: int) -> set[Pattern]:
    """Patterns switched on in a packed table."""
    return {Pattern.from_index(k, width) for k in range(1 << width)
            if bits & pattern_bit(k, width)}
