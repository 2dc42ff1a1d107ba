"""Independent ground truth: exact optimization over credal sets.

Everything in this module deliberately avoids the closed-form machinery of
:mod:`possbox.pbox`.  A probability box is read as nothing more than a list
of linear constraints on a probability mass function, and event bounds are
obtained by maximizing with an exact rational simplex (Bland's rule, no
floating point anywhere).  The verification suites compare these optima
against the formula route; a disagreement means one side is wrong.

Masses live on quotient classes: within a class, mass can sit on any
element, so a class intersecting the target event contributes in full.  The
reduction is itself cross-checked against an element-level program by
:func:`credal_upper_elements`.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Sequence

from possbox.chain import Label
from possbox.pbox import PBox
from possbox.possibility import PossibilityDistribution
from possbox.rationals import ONE, ZERO

Row = tuple[Sequence[Fraction], str, Fraction]


class Infeasible(Exception):
    """The linear system has no feasible point."""


def simplex_max(num_vars: int, constraints: Iterable[Row], objective: Sequence[object]) -> Fraction:
    """Maximize ``objective . x`` over ``x >= 0`` subject to ``constraints``.

    ``constraints`` are ``(coefficients, sense, rhs)`` with sense one of
    ``"<="``, ``">="``, ``"=="``.  Exact rational two-phase simplex with
    Bland's anti-cycling rule.  Assumes a bounded optimum (every system in
    this module lives inside the probability simplex).
    """
    rows: list[tuple[list[Fraction], str, Fraction]] = []
    for coeffs, sense, rhs in constraints:
        row = [Fraction(c) for c in coeffs]
        rhs = Fraction(rhs)
        if len(row) != num_vars:
            raise ValueError("constraint width does not match the variable count")
        if rhs < 0:
            row = [-c for c in row]
            rhs = -rhs
            sense = {"<=": ">=", ">=": "<=", "==": "=="}[sense]
        rows.append((row, sense, rhs))

    n_slack = sum(1 for _, sense, _ in rows if sense != "==")
    n_art = sum(1 for _, sense, _ in rows if sense in (">=", "=="))
    art_start = num_vars + n_slack
    width = art_start + n_art

    tableau: list[list[Fraction]] = []
    basis: list[int] = []
    slack_i = num_vars
    art_i = art_start
    for coeffs, sense, rhs in rows:
        row = coeffs + [ZERO] * (n_slack + n_art) + [rhs]
        if sense == "<=":
            row[slack_i] = ONE
            basis.append(slack_i)
            slack_i += 1
        elif sense == ">=":
            row[slack_i] = -ONE
            slack_i += 1
            row[art_i] = ONE
            basis.append(art_i)
            art_i += 1
        else:
            row[art_i] = ONE
            basis.append(art_i)
            art_i += 1
        tableau.append(row)

    if n_art:
        cost = [ZERO] * width
        for j in range(art_start, width):
            cost[j] = -ONE
        _bland(tableau, basis, cost, width)
        if sum(cost[basis[i]] * tableau[i][-1] for i in range(len(tableau))) != 0:
            raise Infeasible
        i = 0
        while i < len(tableau):
            if basis[i] >= art_start:
                for j in range(art_start):
                    if tableau[i][j] != 0:
                        _pivot(tableau, basis, i, j)
                        break
                else:
                    del tableau[i]
                    del basis[i]
                    continue
            i += 1
        tableau = [row[:art_start] + [row[-1]] for row in tableau]
        width = art_start

    cost = [ZERO] * width
    for j, c in enumerate(objective):
        cost[j] = Fraction(c)
    _bland(tableau, basis, cost, width)
    return sum((cost[basis[i]] * tableau[i][-1] for i in range(len(tableau))), ZERO)


def _bland(tableau: list[list[Fraction]], basis: list[int], cost: list[Fraction], width: int) -> None:
    n_rows = len(tableau)
    while True:
        y = [cost[b] for b in basis]
        enter = -1
        for j in range(width):
            reduced = cost[j]
            for i in range(n_rows):
                yi = y[i]
                if yi:
                    reduced -= yi * tableau[i][j]
            if reduced > 0:
                enter = j
                break
        if enter < 0:
            return
        leave = -1
        best: Fraction | None = None
        for i in range(n_rows):
            a = tableau[i][enter]
            if a > 0:
                ratio = tableau[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            raise ArithmeticError("unbounded objective in a credal program")
        _pivot(tableau, basis, leave, enter)


def _pivot(tableau: list[list[Fraction]], basis: list[int], pivot_row: int, pivot_col: int) -> None:
    row = tableau[pivot_row]
    factor = row[pivot_col]
    if factor != 1:
        row = [v / factor for v in row]
        tableau[pivot_row] = row
    for i, other in enumerate(tableau):
        if i != pivot_row and other[pivot_col]:
            f = other[pivot_col]
            tableau[i] = [a - f * b for a, b in zip(other, row)]
    basis[pivot_row] = pivot_col


# --------------------------------------------------------------- credal LPs


def _class_rows(box: PBox) -> list[Row]:
    """Cumulative constraints on per-class masses.

    Rows that cannot bind are dropped: a lower bound of 0 is implied by
    nonnegativity and an upper bound of 1 below the top by the total mass.
    The top class carries the total-mass equality.
    """
    m = box.m
    rows: list[Row] = []
    for i in range(m - 1):
        prefix = [ONE] * (i + 1) + [ZERO] * (m - i - 1)
        if box.upper_cdf[i] != ONE:
            rows.append((prefix, "<=", box.upper_cdf[i]))
        if box.lower_cdf[i] != ZERO:
            rows.append((prefix, ">=", box.lower_cdf[i]))
    rows.append(([ONE] * m, "==", ONE))
    return rows


def credal_upper_classes(box: PBox, indices: Iterable[int]) -> Fraction:
    """LP optimum for a union of classes given by index."""
    hit = sorted(set(indices))
    if not hit:
        return ZERO
    m = box.m
    for i in hit:
        if not 0 <= i < m:
            raise ValueError(f"class index {i} out of range")
    objective = [ZERO] * m
    for i in hit:
        objective[i] = ONE
    try:
        return simplex_max(m, _class_rows(box), objective)
    except Infeasible:  # pragma: no cover - valid boxes always admit a distribution
        raise RuntimeError("credal set of a valid probability box came up empty") from None


def credal_upper(box: PBox, event: Iterable[Label]) -> Fraction:
    """Maximum probability of an event over the box's credal set.

    The credal set is cut out by the cumulative constraints alone; no
    formula from :mod:`possbox.pbox` is consulted.

    >>> from possbox.chain import Chain
    >>> box = PBox(Chain([["a"], ["b"], ["c"]]), ["0", "0", "1"], ["1/2", "4/5", "1"])
    >>> credal_upper(box, {"a", "c"})
    Fraction(1, 1)
    """
    return credal_upper_classes(box, box.chain.classes_hit(event))


def credal_lower(box: PBox, event: Iterable[Label]) -> Fraction:
    """Minimum probability of an event over the credal set, by conjugacy."""
    return ONE - credal_upper(box, box.chain.complement(event))


def credal_upper_elements(box: PBox, event: Iterable[Label]) -> Fraction:
    """Element-level variant of :func:`credal_upper`.

    One mass variable per element instead of per class; used to validate
    the mass-on-classes reduction on chains with non-singleton classes.
    """
    chain = box.chain
    elements = sorted(chain.labels)
    position = {label: k for k, label in enumerate(elements)}
    n = len(elements)
    rows: list[Row] = []
    for i in range(chain.m - 1):
        prefix = [ZERO] * n
        for label in chain.class_range_labels(0, i):
            prefix[position[label]] = ONE
        if box.upper_cdf[i] != ONE:
            rows.append((prefix, "<=", box.upper_cdf[i]))
        if box.lower_cdf[i] != ZERO:
            rows.append((prefix, ">=", box.lower_cdf[i]))
    rows.append(([ONE] * n, "==", ONE))
    objective = [ZERO] * n
    for label in chain.event(event):
        objective[position[label]] = ONE
    return simplex_max(n, rows, objective)


# ------------------------------------------------------------ whole-model checks


def check_coherence(box: PBox) -> bool:
    """Does the LP reproduce the box's own cumulative bounds?

    For every class ``x`` the optimum over ``[bottom, x]`` must equal the
    upper vector there, and the optimum over ``(x, top]`` must equal one
    minus the lower vector.  A failure would mean the cumulative vectors
    are not coherent as stated, i.e. a modelling tripwire.
    """
    m = box.m
    for i in range(m):
        if credal_upper_classes(box, range(i + 1)) != box.upper_cdf[i]:
            return False
        if credal_upper_classes(box, range(i + 1, m)) != ONE - box.lower_cdf[i]:
            return False
    return True


def exhaustive_max_preserving(
    box: PBox,
    upper: Callable[[PBox, tuple[int, ...]], Fraction] | None = None,
    *,
    max_classes: int = 10,
) -> bool:
    """Semantic maxitivity check: ``upper(A or B) == max(upper(A), upper(B))``.

    Enumerates every pair of class unions (events intersecting the same
    classes share their upper probability, so this covers all event pairs).
    ``upper`` defaults to the LP oracle; pass
    ``lambda box, subset: box.upper_of_classes(subset)`` to check the
    closed-form route instead.
    """
    m = box.m
    if m > max_classes:
        raise ValueError(f"chain has {m} classes; refusing to enumerate beyond {max_classes}")
    if upper is None:
        upper = credal_upper_classes
    subsets: list[tuple[int, ...]] = []
    for size in range(m + 1):
        subsets.extend(combinations(range(m), size))
    value = {s: upper(box, s) for s in subsets}
    for a in subsets:
        sa = set(a)
        for b in subsets:
            union = tuple(sorted(sa | set(b)))
            if value[union] != max(value[a], value[b]):
                return False
    return True


def credal_intersection_equal(
    box: PBox,
    pi_one: PossibilityDistribution,
    pi_two: PossibilityDistribution,
    *,
    max_elements: int = 8,
) -> bool:
    """Does the box's credal set equal the two distributions' joint credal set?

    Builds both constraint systems at element level -- the box's cumulative
    rows on one side, every event constraint ``P(A) <= Pi_k(A)`` of both
    possibility measures on the other (all ``2^|domain|`` of them,
    redundant but unambiguous) -- and compares the LP optima on every
    event.  Equality of all upper values is equality of the credal sets.
    """
    chain = box.chain
    if pi_one.labels != chain.labels or pi_two.labels != chain.labels:
        raise ValueError("distributions must share the box's element set")
    elements = sorted(chain.labels)
    n = len(elements)
    if n > max_elements:
        raise ValueError(f"space has {n} elements; refusing to enumerate beyond {max_elements}")
    position = {label: k for k, label in enumerate(elements)}

    box_rows: list[Row] = []
    for i in range(chain.m - 1):
        prefix = [ZERO] * n
        for label in chain.class_range_labels(0, i):
            prefix[position[label]] = ONE
        if box.upper_cdf[i] != ONE:
            box_rows.append((prefix, "<=", box.upper_cdf[i]))
        if box.lower_cdf[i] != ZERO:
            box_rows.append((prefix, ">=", box.lower_cdf[i]))
    box_rows.append(([ONE] * n, "==", ONE))

    poss_rows: list[Row] = [([ONE] * n, "==", ONE)]
    events: list[tuple[int, ...]] = []
    for mask in range(1, 1 << n):
        members = tuple(k for k in range(n) if mask >> k & 1)
        events.append(members)
        indicator = [ONE if k in members else ZERO for k in range(n)]
        for pi in (pi_one, pi_two):
            bound = pi.measure(elements[k] for k in members)
            if bound != ONE:
                poss_rows.append((indicator, "<=", bound))

    for members in events:
        objective = [ONE if k in members else ZERO for k in range(n)]
        if simplex_max(n, box_rows, objective) != simplex_max(n, poss_rows, objective):
            return False
    return True
