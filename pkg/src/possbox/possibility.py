"""Possibility distributions and their exchange with probability boxes.

A (normalized) possibility distribution assigns each element a degree in
``[0, 1]`` with maximum 1; the induced measure of an event is the maximum
degree over its elements.  A probability box whose upper probability is
maxitive *is* such a measure, with distribution given by the singleton upper
probabilities; conversely every finite possibility distribution arises from
a degenerate-lower probability box on the preorder its own values induce.
This module implements both directions, the two-sided 0-1 special case, and
the decomposition of an arbitrary probability box as a conjunction of two
possibility measures.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Hashable, Iterable, Mapping

from possbox.chain import Chain, Label
from possbox.maxitive import is_maxitive, zero_one_profile
from possbox.pbox import PBox
from possbox.rationals import ONE, ZERO, exact


class PossibilityDistribution:
    """Exact possibility distribution over a finite set of labels.

    Values may be given as ints, fractions, or exact strings.  The maximum
    must be 1 (normalization); the induced measure of an event is the
    maximum value over the event, with the empty event measuring 0.

    >>> pi = PossibilityDistribution({"a": "1/2", "b": "0.8", "c": 1})
    >>> pi.measure({"a", "b"})
    Fraction(4, 5)
    >>> pi.measure([])
    Fraction(0, 1)
    """

    __slots__ = ("_values",)

    def __init__(self, values: Mapping[Hashable, object]):
        if not values:
            raise ValueError("a possibility distribution needs a non-empty domain")
        converted: dict[Hashable, Fraction] = {}
        top = ZERO
        for label, raw in values.items():
            q = exact(raw)
            if not (ZERO <= q <= ONE):
                raise ValueError(f"value {q} for {label!r} outside [0, 1]")
            converted[label] = q
            if q > top:
                top = q
        if top != ONE:
            raise ValueError("a possibility distribution must attain the value 1")
        self._values = converted

    def __getitem__(self, label: Hashable) -> Fraction:
        try:
            return self._values[label]
        except KeyError:
            raise ValueError(f"unknown label {label!r}") from None

    def __iter__(self):
        return iter(self._values)

    def __len__(self) -> int:
        return len(self._values)

    def __contains__(self, label: Hashable) -> bool:
        return label in self._values

    @property
    def labels(self) -> frozenset:
        return frozenset(self._values)

    def items(self):
        return self._values.items()

    def measure(self, event: Iterable[Hashable]) -> Fraction:
        """Possibility of an event: the maximum value over its elements."""
        best = ZERO
        for label in set(event):
            v = self[label]
            if v > best:
                best = v
        return best

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PossibilityDistribution) and self._values == other._values

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        body = ", ".join(f"{label!r}: {v}" for label, v in self._values.items())
        return f"PossibilityDistribution({{{body}}})"


def pbox_to_possibility(box: PBox, *, verify: bool = True) -> PossibilityDistribution | None:
    """Express a probability box's upper probability as a possibility measure.

    Succeeds exactly when the box is maxitive (see
    :func:`possbox.maxitive.is_maxitive`); returns ``None`` otherwise, never
    a partial distribution.  The distribution assigns each element its
    singleton upper probability.

    With ``verify`` (the default) the max-decomposition identity
    ``upper(A) == max over x in A of upper({x})`` is re-checked on every
    union of classes before returning -- exponential in the number of
    classes, intended for desk-scale models.  A verification failure would
    mean the library contradicts itself and raises :class:`RuntimeError`.
    """
    if not is_maxitive(box):
        return None
    chain = box.chain
    class_value = [box.upper_at(i) - box.lower_at(i - 1) for i in range(chain.m)]
    values = {label: class_value[i] for i, cls in enumerate(chain.classes) for label in cls}
    pi = PossibilityDistribution(values)
    if verify:
        for size in range(1, chain.m + 1):
            for subset in combinations(range(chain.m), size):
                direct = box.upper_of_classes(subset)
                by_max = max(class_value[i] for i in subset)
                if direct != by_max:
                    raise RuntimeError(
                        "internal inconsistency: maxitive box failed the "
                        f"max-decomposition identity on classes {subset}"
                    )
    return pi


def possibility_to_pbox(pi: PossibilityDistribution) -> tuple[Chain, PBox]:
    """Represent a possibility distribution as a probability box.

    The chain orders elements by increasing possibility value (level sets
    become classes); the upper cumulative vector lists those values and the
    lower one is the indicator of the top class.  The box's upper
    probability then reproduces ``pi.measure`` on every event.

    >>> chain, box = possibility_to_pbox(PossibilityDistribution({"x1": "1/2", "x2": 1}))
    >>> [sorted(cls) for cls in chain.classes]
    [['x1'], ['x2']]
    >>> box.upper_cdf
    (Fraction(1, 2), Fraction(1, 1))
    """
    levels: dict[Fraction, list] = {}
    for label, v in pi.items():
        levels.setdefault(v, []).append(label)
    ordered = sorted(levels)
    chain = Chain([sorted(levels[v], key=repr) for v in ordered])
    m = len(ordered)
    lower = [ZERO] * (m - 1) + [ONE]
    box = PBox(chain, lower, ordered)
    return chain, box


def zero_one_possibility(box: PBox) -> PossibilityDistribution:
    """Possibility distribution of a box whose two vectors are both 0-1.

    The distribution is the indicator of the classes strictly between the
    last zero of the upper vector and the first positive of the lower
    vector (inclusive); on finite chains this window is never empty.
    Agrees with :func:`pbox_to_possibility` wherever both apply.
    """
    profile = zero_one_profile(box)
    if not (profile.lower_is_01 and profile.upper_is_01):
        raise ValueError("both cumulative vectors must be 0-1-valued")
    lo = profile.first_upper_positive
    hi = profile.first_lower_positive
    values = {
        label: ONE if lo <= i <= hi else ZERO
        for i, cls in enumerate(box.chain.classes)
        for label in cls
    }
    return PossibilityDistribution(values)


def conjunction_decompose(box: PBox) -> tuple[PossibilityDistribution, PossibilityDistribution]:
    """Split a probability box into two possibility distributions.

    The first encodes only the lower cumulative vector (``1 - lower`` just
    below each class), the second only the upper one.  The box's credal set
    is exactly the intersection of the two distributions' credal sets --
    :func:`possbox.oracle.credal_intersection_equal` checks that identity by
    optimization.

    >>> from possbox.chain import Chain
    >>> box = PBox(Chain([["a"], ["b"], ["c"]]), ["1/5", "2/5", "1"], ["1/2", "4/5", "1"])
    >>> pi_lower, pi_upper = conjunction_decompose(box)
    >>> [str(pi_lower[x]) for x in ("a", "b", "c")]
    ['1', '4/5', '3/5']
    >>> [str(pi_upper[x]) for x in ("a", "b", "c")]
    ['1/2', '4/5', '1']
    """
    chain = box.chain
    from_lower = {
        label: ONE - box.lower_at(i - 1) for i, cls in enumerate(chain.classes) for label in cls
    }
    from_upper = {
        label: box.upper_at(i) for i, cls in enumerate(chain.classes) for label in cls
    }
    return PossibilityDistribution(from_lower), PossibilityDistribution(from_upper)


def conjunction_bounds(box: PBox, event: Iterable[Label]) -> tuple[Fraction, Fraction]:
    """Sandwich an event's exact probability bounds between possibility ones.

    Returns ``(approx_lower, approx_upper)`` computed from the conjunction
    decomposition: the approximate upper value is the smaller of the two
    possibility measures, the approximate lower value the larger of their
    conjugates.  They always enclose the exact natural-extension interval;
    the slack of the upper one on an interval ``(x, y]`` is
    ``min(lower(x), 1 - upper(y))``.
    """
    ev = box.chain.event(event)
    comp = box.chain.complement(ev)
    pi_lower, pi_upper = conjunction_decompose(box)
    approx_upper = min(pi_lower.measure(ev), pi_upper.measure(ev))
    approx_lower = max(ONE - pi_lower.measure(comp), ONE - pi_upper.measure(comp))
    return approx_lower, approx_upper
