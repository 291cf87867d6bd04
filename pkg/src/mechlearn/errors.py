"""Exception hierarchy.

Every error raised on bad *domain* input derives from :class:`MechLearnError`;
the CLI maps those to exit code 1.
"""


class MechLearnError(Exception):
    """Base class for domain errors."""


# -- patterns / datasets ---------------------------------------------------

class EmptyPattern(MechLearnError):
    def __init__(self):
        super().__init__("pattern text is empty")


class NonBinaryCharacter(MechLearnError):
    def __init__(self, position: int, char: str = ""):
        self.position = position
        super().__init__(f"non-binary character {char!r} at position {position}")


class WidthExceeded(MechLearnError):
    def __init__(self, width: int, limit: int):
        self.width = width
        self.limit = limit
        super().__init__(f"width {width} outside 1..{limit}")


class MixedWidths(MechLearnError):
    def __init__(self, widths):
        self.widths = sorted(set(widths))
        super().__init__(f"samples have mixed widths {self.widths}")


class Conflicts(MechLearnError):
    def __init__(self, patterns):
        self.patterns = list(patterns)
        shown = ", ".join(str(p) for p in self.patterns)
        super().__init__(f"patterns carry both labels: {shown}")


class MalformedRecord(MechLearnError):
    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class WidthMismatch(MechLearnError):
    def __init__(self, expected: int, got: int):
        self.expected = expected
        self.got = got
        super().__init__(f"width mismatch: expected {expected}, got {got}")


# -- x-forms ---------------------------------------------------------------

class XFormSyntaxError(MechLearnError):
    def __init__(self, position: int, message: str):
        self.position = position
        super().__init__(f"syntax error at position {position}: {message}")


class VariableOutOfRange(MechLearnError):
    def __init__(self, index: int, width: int):
        self.index = index
        self.width = width
        super().__init__(f"variable b{index} out of range for width {width}")


# -- sufficiency -----------------------------------------------------------

class InvalidClass(MechLearnError):
    pass


class ClassTooLarge(MechLearnError):
    pass


class NotSufficientInput(MechLearnError):
    pass


class SubsetSearchTooLarge(MechLearnError):
    pass


# -- learner ---------------------------------------------------------------

class ConflictingSample(MechLearnError):
    def __init__(self, pattern, label):
        self.pattern = pattern
        self.label = label
        super().__init__(
            f"pattern {pattern} already observed with label {int(not label)}")


# -- nets ------------------------------------------------------------------

class BadShape(MechLearnError):
    pass


class WidthTooLargeForExtraction(MechLearnError):
    def __init__(self, width: int, limit: int = 4):
        self.width = width
        super().__init__(f"extraction needs input width <= {limit}, got {width}")


class NonCertifiedMinimalWarning(UserWarning):
    """Result came from a greedy fallback and is not proven minimal."""
