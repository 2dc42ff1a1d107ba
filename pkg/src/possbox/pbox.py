"""Probability boxes on a chain, with exact natural-extension values.

A probability box is a pair of non-decreasing cumulative vectors over the
quotient classes: a lower and an upper envelope for an unknown cumulative
distribution function.  Interpreting the two vectors as bounds on the
probabilities of the down-sets ``[bottom, x]`` and up-sets ``(y, top]``
determines a coherent upper probability on *all* events; this module
computes that value in closed form via minimal covers by class runs.  The
companion :mod:`possbox.oracle` recovers the same numbers by direct
optimization over the credal set, so every formula here is cross-checkable
against an independent route.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from possbox.chain import SENTINEL, Chain, IntervalUnion, Label
from possbox.rationals import ONE, ZERO, exact


class PBox:
    """A probability box: exact cumulative bounds on a chain.

    ``lower[i]`` and ``upper[i]`` bound the cumulative probability of the
    classes ``0..i``.  Both vectors are non-decreasing, sit inside
    ``[0, 1]``, satisfy ``lower <= upper`` pointwise, and reach ``1`` at the
    top class.

    >>> chain = Chain([["a"], ["b"], ["c"]])
    >>> box = PBox(chain, ["0", "0", "1"], ["1/2", "0.8", "1"])
    >>> box.upper({"a", "c"})
    Fraction(1, 1)
    >>> box.lower({"c"})
    Fraction(1, 5)
    """

    __slots__ = ("chain", "lower_cdf", "upper_cdf")

    def __init__(
        self,
        chain: Chain,
        lower: Iterable[object],
        upper: Iterable[object],
    ):
        lo = tuple(exact(v) for v in lower)
        up = tuple(exact(v) for v in upper)
        m = chain.m
        if len(lo) != m or len(up) != m:
            raise ValueError(
                f"cumulative vectors must have one entry per class (expected {m}, "
                f"got {len(lo)} lower / {len(up)} upper)"
            )
        for name, vec in (("lower", lo), ("upper", up)):
            for i, v in enumerate(vec):
                if not (ZERO <= v <= ONE):
                    raise ValueError(f"{name}[{i}] = {v} outside [0, 1]")
            for i in range(1, m):
                if vec[i] < vec[i - 1]:
                    raise ValueError(f"{name} cumulative vector must be non-decreasing")
        for i in range(m):
            if lo[i] > up[i]:
                raise ValueError(f"lower[{i}] = {lo[i]} exceeds upper[{i}] = {up[i]}")
        if lo[m - 1] != ONE or up[m - 1] != ONE:
            raise ValueError("both cumulative vectors must equal 1 at the top class")
        self.chain = chain
        self.lower_cdf = lo
        self.upper_cdf = up

    # ------------------------------------------------------------ basics

    @property
    def m(self) -> int:
        return self.chain.m

    def lower_at(self, i: int) -> Fraction:
        """Lower cumulative value at class ``i``; the sentinel ``-1`` gives 0."""
        return ZERO if i == SENTINEL else self.lower_cdf[i]

    def upper_at(self, i: int) -> Fraction:
        """Upper cumulative value at class ``i``; the sentinel ``-1`` gives 0."""
        return ZERO if i == SENTINEL else self.upper_cdf[i]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PBox)
            and self.chain == other.chain
            and self.lower_cdf == other.lower_cdf
            and self.upper_cdf == other.upper_cdf
        )

    def __hash__(self) -> int:
        return hash((self.chain, self.lower_cdf, self.upper_cdf))

    def __repr__(self) -> str:
        lo = ", ".join(str(v) for v in self.lower_cdf)
        up = ", ".join(str(v) for v in self.upper_cdf)
        return f"PBox({self.chain!r}, lower=({lo}), upper=({up}))"

    # ------------------------------------------------ natural extension

    def upper_on_union(self, union: IntervalUnion) -> Fraction:
        """Upper probability of a canonical union of class runs.

        One minus the probability mass that the cumulative bounds force into
        the gaps between the runs: for each gap the forced mass is
        ``max(0, lower(left end of next run) - upper(right end of previous
        run))``, with the sentinel before the first run and the top class
        closing the last gap.

        >>> chain = Chain([["a"], ["b"], ["c"]])
        >>> box = PBox(chain, ["0", "0", "1"], ["1/2", "4/5", "1"])
        >>> box.upper_on_union(IntervalUnion(3, ((0, 1),)))
        Fraction(4, 5)
        """
        if union.m != self.m:
            raise ValueError("interval union built for a different chain size")
        forced = ZERO
        prev_right = SENTINEL
        for left, right in union.runs:
            gap = self.lower_at(left) - self.upper_at(prev_right)
            if gap > 0:
                forced += gap
            prev_right = right
        gap = self.lower_at(self.m - 1) - self.upper_at(prev_right)
        if gap > 0:
            forced += gap
        return ONE - forced

    def upper(self, event: Iterable[Label]) -> Fraction:
        """Natural-extension upper probability of an arbitrary event.

        Computed on the minimal cover of the event: mass within a class is
        free to sit on any element, so an event is upper-indistinguishable
        from the union of the classes it intersects.  The empty event
        returns 0.
        """
        return self.upper_on_union(self.chain.minimal_cover(event))

    def upper_of_classes(self, indices: Iterable[int]) -> Fraction:
        """Upper probability of a union of classes given by index.

        Fast path used by the exhaustive sweeps; equivalent to :meth:`upper`
        on the corresponding event.
        """
        return self.upper_on_union(IntervalUnion.from_class_indices(self.m, indices))

    def lower(self, event: Iterable[Label]) -> Fraction:
        """Natural-extension lower probability, by conjugacy.

        ``lower(A) = 1 - upper(complement of A)``.
        """
        return ONE - self.upper(self.chain.complement(event))

    # ----------------------------------------------------- interval forms

    def interval_upper(
        self,
        x: Label,
        y: Label,
        *,
        closed_left: bool = False,
        closed_right: bool = True,
    ) -> Fraction:
        """Upper probability of an order interval between ``x`` and ``y``.

        The four combinations of the two flags give ``(x, y]``, ``[x, y]``,
        ``(x, y)`` and ``[x, y)``.  Requires ``x`` strictly below ``y``.
        Equals :meth:`upper` of the same event; in particular an open
        interval between adjacent elements is empty and yields 0, which is
        why the closed-form difference of cumulative values is guarded here.

        >>> chain = Chain([["a"], ["b"], ["c"]])
        >>> box = PBox(chain, ["0", "0", "1"], ["1/2", "4/5", "1"])
        >>> box.interval_upper("a", "b")
        Fraction(4, 5)
        >>> box.interval_upper("a", "b", closed_right=False)
        Fraction(0, 1)
        """
        ix, iy = self.chain.index_of(x), self.chain.index_of(y)
        if ix >= iy:
            raise ValueError(f"{x!r} must lie strictly below {y!r}")
        left = ix - 1 if closed_left else ix
        right = iy if closed_right else iy - 1
        if left >= right:
            return ZERO
        return self.upper_at(right) - self.lower_at(left)

    def singleton_upper(self, x: Label) -> Fraction:
        """Upper probability of ``{x}``: the cumulative jump room at its class."""
        i = self.chain.index_of(x)
        return self.upper_at(i) - self.lower_at(i - 1)
