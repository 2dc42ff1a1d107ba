"""Finite totally preordered spaces, stored as their ordered quotient.

A total preorder on a finite set is determined by the ordered list of its
equivalence classes, from the class of the smallest elements up to the class
of the largest.  Storing the quotient directly makes every order query an
integer comparison of class indices.

Index ``-1`` addresses a virtual position strictly below the bottom class:
the point where every cumulative value is zero.  It is not an element of the
space -- events never contain it -- but interval bookkeeping uses it as the
open left endpoint of runs anchored at the bottom.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

Label = str

#: Index of the virtual position below the bottom class.
SENTINEL = -1


class Chain:
    """Ordered quotient of a finite totally preordered space.

    ``classes[0]`` holds the smallest elements, ``classes[m - 1]`` the
    largest.  Elements sharing a class are order-equivalent.

    >>> chain = Chain([["a"], ["b"], ["c"]])
    >>> chain.m
    3
    >>> chain.compare("a", "c")
    -1
    >>> tied = Chain([["low", "also_low"], ["high"]])
    >>> tied.compare("low", "also_low")
    0
    """

    __slots__ = ("classes", "_index")

    def __init__(self, classes: Iterable[Iterable[Label]]):
        normalized = tuple(frozenset(cls) for cls in classes)
        if not normalized:
            raise ValueError("a chain needs at least one class")
        index: dict[Label, int] = {}
        for i, cls in enumerate(normalized):
            if not cls:
                raise ValueError(f"class {i} is empty")
            for label in cls:
                if label in index:
                    raise ValueError(f"label {label!r} appears in more than one class")
                index[label] = i
        self.classes = normalized
        self._index = index

    # ------------------------------------------------------------ queries

    @property
    def m(self) -> int:
        """Number of equivalence classes."""
        return len(self.classes)

    @property
    def labels(self) -> frozenset[Label]:
        return frozenset(self._index)

    def index_of(self, label: Label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ValueError(f"unknown label {label!r}") from None

    def compare(self, x: Label, y: Label) -> int:
        """Trichotomous order query.

        Returns ``-1`` if ``x`` lies strictly below ``y``, ``0`` if the two
        are equivalent, and ``1`` if ``x`` lies strictly above ``y``.
        """
        ix, iy = self.index_of(x), self.index_of(y)
        return (ix > iy) - (ix < iy)

    # ------------------------------------------------------------- events

    def event(self, labels: Iterable[Label]) -> frozenset[Label]:
        """Normalize an event, rejecting labels outside the space."""
        ev = frozenset(labels)
        for label in ev:
            if label not in self._index:
                raise ValueError(f"unknown label {label!r}")
        return ev

    def complement(self, labels: Iterable[Label]) -> frozenset[Label]:
        return self.labels - self.event(labels)

    def classes_hit(self, labels: Iterable[Label]) -> tuple[int, ...]:
        """Sorted indices of the classes an event intersects."""
        return tuple(sorted({self.index_of(label) for label in set(labels)}))

    def class_range_labels(self, lo: int, hi: int) -> frozenset[Label]:
        """Union of the classes with index in ``lo..hi`` (empty if lo > hi)."""
        out: set[Label] = set()
        for i in range(max(lo, 0), min(hi, self.m - 1) + 1):
            out |= self.classes[i]
        return frozenset(out)

    def minimal_cover(self, labels: Iterable[Label]) -> "IntervalUnion":
        """Smallest canonical union of class runs containing an event.

        Each maximal run of consecutive intersected classes ``i..j`` becomes
        the half-open run ``(i - 1, j]``.  No strictly smaller union of runs
        contains the event, and events intersecting the same classes share
        the same cover.

        >>> chain = Chain([["a"], ["b"], ["c"]])
        >>> chain.minimal_cover({"a", "c"}).runs
        ((-1, 0), (1, 2))
        >>> chain.minimal_cover([]).is_empty
        True
        """
        return IntervalUnion.from_class_indices(self.m, self.classes_hit(labels))

    # ----------------------------------------------------------- protocol

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Chain) and self.classes == other.classes

    def __hash__(self) -> int:
        return hash(self.classes)

    def __repr__(self) -> str:
        body = ", ".join("{" + ", ".join(sorted(cls)) + "}" for cls in self.classes)
        return f"Chain({body})"


def build_chain(classes: Iterable[Iterable[Label]]) -> Chain:
    """Build a :class:`Chain` from equivalence classes listed bottom-up."""
    return Chain(classes)


@dataclass(frozen=True)
class IntervalUnion:
    """Canonical finite union of half-open runs of consecutive classes.

    A pair ``(l, r)`` covers the classes ``l + 1 .. r``; ``l`` may be the
    sentinel ``-1``.  Runs are strictly ordered and separated by at least one
    uncovered class, so each set of covered classes has exactly one
    representation.
    """

    m: int
    runs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError("chain size must be at least 1")
        prev_right: int | None = None
        for left, right in self.runs:
            if not (SENTINEL <= left < right <= self.m - 1):
                raise ValueError(f"run ({left}, {right}] out of range for m={self.m}")
            if prev_right is not None and left <= prev_right:
                raise ValueError("runs must be sorted and separated by at least one class")
            prev_right = right

    @property
    def is_empty(self) -> bool:
        return not self.runs

    def class_indices(self) -> Iterator[int]:
        """Covered class indices, ascending."""
        for left, right in self.runs:
            yield from range(left + 1, right + 1)

    def as_event(self, chain: Chain) -> frozenset[Label]:
        """The union of the covered classes, as an event of ``chain``."""
        if chain.m != self.m:
            raise ValueError("interval union built for a different chain size")
        out: set[Label] = set()
        for i in self.class_indices():
            out |= chain.classes[i]
        return frozenset(out)

    @classmethod
    def from_class_indices(cls, m: int, indices: Iterable[int]) -> "IntervalUnion":
        """Canonical union covering exactly the given class indices.

        >>> IntervalUnion.from_class_indices(4, [0, 1, 3]).runs
        ((-1, 1), (2, 3))
        """
        seen = sorted(set(indices))
        runs: list[tuple[int, int]] = []
        start: int | None = None
        prev: int | None = None
        for i in seen:
            if not 0 <= i < m:
                raise ValueError(f"class index {i} out of range for m={m}")
            if prev is None or i > prev + 1:
                if start is not None and prev is not None:
                    runs.append((start - 1, prev))
                start = i
            prev = i
        if start is not None and prev is not None:
            runs.append((start - 1, prev))
        return cls(m, tuple(runs))
