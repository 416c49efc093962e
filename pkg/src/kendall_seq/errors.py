"""Exceptions raised when a distance is undefined for its inputs."""

from __future__ import annotations


class DistanceError(ValueError):
    """Base class: the requested distance is undefined for the given inputs."""


class LengthMismatch(DistanceError):
    def __init__(self, len1: int, len2: int):
        self.len1 = len1
        self.len2 = len2
        super().__init__(f"unequal length sequences: {len1} != {len2}")


class ElementNotShared(DistanceError):
    def __init__(self, element):
        self.element = element
        super().__init__(f"sequences contain different elements: {element!r} "
                         "appears in the second sequence only")


class CountMismatch(DistanceError):
    def __init__(self, element, count1: int, count2: int):
        self.element = element
        self.count1 = count1
        self.count2 = count2
        super().__init__(
            f"sequences contain different number of copies of {element!r}: "
            f"{count1} != {count2}")


class TiesNotAllowed(DistanceError):
    """A total ranking was required but a rank value repeats."""

    def __init__(self, which: str):
        self.which = which
        super().__init__(f"{which} contains tied ranks; this metric requires "
                         "total rankings (permutations)")


class PenaltyOutOfRange(DistanceError):
    def __init__(self, p: float):
        self.p = p
        super().__init__(f"penalty parameter p={p} outside [0, 1]")


class SizeLimitExceeded(DistanceError):
    def __init__(self, n: int, limit: int):
        self.n = n
        self.limit = limit
        super().__init__(f"sequence length {n} exceeds search limit {limit}")
