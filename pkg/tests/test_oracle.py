from fractions import Fraction
from itertools import combinations

import pytest

from possbox import (
    Chain,
    PBox,
    PossibilityDistribution,
    check_coherence,
    conjunction_decompose,
    credal_intersection_equal,
    credal_lower,
    credal_upper,
    credal_upper_elements,
    exhaustive_max_preserving,
)
from possbox.oracle import Infeasible, simplex_max
from possbox.verify import iter_grid_pboxes


def test_simplex_small_known_optima():
    # max x + y with x <= 1, y <= 2
    assert simplex_max(2, [([1, 0], "<=", 1), ([0, 1], "<=", 2)], [1, 1]) == 3
    # equality and a >= row force phase one to do real work
    rows = [([1, 1], "==", 1), ([1, 0], ">=", Fraction(1, 3))]
    assert simplex_max(2, rows, [0, 1]) == Fraction(2, 3)
    assert simplex_max(2, rows, [1, 0]) == 1
    # degenerate single-point system
    assert simplex_max(1, [([1], "==", Fraction(2, 7))], [5]) == Fraction(10, 7)


def test_simplex_handles_negative_rhs():
    # -x <= -1/2 is x >= 1/2 in disguise
    rows = [([-1], "<=", Fraction(-1, 2)), ([1], "<=", 1)]
    assert simplex_max(1, rows, [-1]) == Fraction(-1, 2)


def test_simplex_detects_infeasibility():
    rows = [([1], "<=", Fraction(1, 3)), ([1], ">=", Fraction(1, 2))]
    with pytest.raises(Infeasible):
        simplex_max(1, rows, [1])


def test_simplex_redundant_equalities():
    rows = [([1, 1], "==", 1), ([2, 2], "==", 2)]
    assert simplex_max(2, rows, [1, 0]) == 1


def test_simplex_rejects_wrong_width():
    with pytest.raises(ValueError):
        simplex_max(2, [([1], "<=", 1)], [1, 0])


def test_credal_frozen_values(p1):
    assert credal_upper(p1, {"a"}) == Fraction(1, 2)
    assert credal_upper(p1, {"b"}) == Fraction(4, 5)
    assert credal_upper(p1, {"a", "c"}) == 1
    assert credal_upper(p1, {"a", "b", "c"}) == 1
    assert credal_upper(p1, frozenset()) == 0
    assert credal_lower(p1, {"a"}) == 0
    assert credal_lower(p1, {"c"}) == Fraction(1, 5)


def test_credal_matches_formula_on_fixtures(p1, p2, q, r, precise):
    for box in (p1, p2, q, r, precise):
        labels = sorted(box.chain.labels)
        for k in range(len(labels) + 1):
            for combo in combinations(labels, k):
                event = frozenset(combo)
                assert credal_upper(box, event) == box.upper(event)
                assert credal_lower(box, event) == box.lower(event)


def test_adding_constraints_never_raises_optimum(p2):
    # Shrinking the feasible set can only lower a maximum.
    from possbox.oracle import _class_rows

    rows = _class_rows(p2)
    base = simplex_max(3, rows, [0, 1, 0])
    capped = simplex_max(3, rows + [([0, 1, 0], "<=", Fraction(1, 10))], [0, 1, 0])
    assert capped <= base
    assert capped == Fraction(1, 10)


def test_element_level_program_agrees_with_class_level():
    chains = [
        Chain([["a", "b"], ["c"]]),
        Chain([["a"], ["b", "c", "d"]]),
        Chain([["a", "b"], ["c"], ["d", "e"]]),
    ]
    vectors = {
        2: (["1/4", "1"], ["3/4", "1"]),
        3: (["0", "1/2", "1"], ["1/4", "3/4", "1"]),
    }
    for chain in chains:
        lower, upper = vectors[chain.m]
        box = PBox(chain, lower, upper)
        labels = sorted(chain.labels)
        for k in range(len(labels) + 1):
            for combo in combinations(labels, k):
                event = frozenset(combo)
                assert credal_upper_elements(box, event) == credal_upper(box, event)


def test_check_coherence_on_fixtures(p1, p2, q, r, precise):
    for box in (p1, p2, q, r, precise):
        assert check_coherence(box)


def test_every_small_grid_box_is_coherent():
    for m in range(1, 3):
        for box in iter_grid_pboxes(m, 2):
            assert check_coherence(box)


def test_exhaustive_max_preserving(p1, p2):
    assert exhaustive_max_preserving(p1)
    assert not exhaustive_max_preserving(p2)
    # the closed-form route reaches the same verdicts
    formula = lambda box, subset: box.upper_of_classes(subset)
    assert exhaustive_max_preserving(p1, formula)
    assert not exhaustive_max_preserving(p2, formula)


def test_exhaustive_max_preserving_guard(p1):
    with pytest.raises(ValueError):
        exhaustive_max_preserving(p1, max_classes=2)


def test_intersection_holds_for_decomposition(p1, p2, q):
    for box in (p1, p2, q):
        pi_one, pi_two = conjunction_decompose(box)
        assert credal_intersection_equal(box, pi_one, pi_two)


def test_intersection_fails_with_vacuous_component(p1):
    # Dropping the upper-vector component enlarges the intersection: the
    # event {a} then reaches probability 1 instead of 1/2.
    pi_one, _ = conjunction_decompose(p1)
    vacuous = PossibilityDistribution({x: 1 for x in "abc"})
    assert not credal_intersection_equal(p1, pi_one, vacuous)


def test_intersection_guards(p1):
    good = PossibilityDistribution({x: 1 for x in "abc"})
    bad = PossibilityDistribution({"a": 1, "b": 1})
    with pytest.raises(ValueError):
        credal_intersection_equal(p1, good, bad)
    with pytest.raises(ValueError):
        credal_intersection_equal(p1, good, good, max_elements=2)
