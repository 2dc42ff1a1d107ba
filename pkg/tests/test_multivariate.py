from fractions import Fraction
from itertools import product

import pytest

from possbox import (
    MarginalFamily,
    PossibilityDistribution,
    combine_rectangle,
    joint_frechet,
    joint_independent,
    joint_rsi_outer,
    least_conservative_check,
)


@pytest.fixture
def family_2x2():
    return MarginalFamily(
        [
            PossibilityDistribution({"u": "1/2", "v": "1"}),
            PossibilityDistribution({"s": "3/10", "t": "1"}),
        ]
    )


def test_family_points_and_scores(family_2x2):
    points = list(family_2x2.points())
    assert ("u", "s") in points and len(points) == 4
    assert family_2x2.z_value(("u", "s")) == Fraction(1, 2)
    assert family_2x2.z_value(("u", "t")) == 1
    assert family_2x2.z_value(("v", "s")) == 1


def test_joint_frozen_values(family_2x2):
    frechet = joint_frechet(family_2x2)
    independent = joint_independent(family_2x2)
    rsi = joint_rsi_outer(family_2x2)
    assert frechet[("u", "s")] == Fraction(1, 2)
    assert independent[("u", "s")] == Fraction(1, 4)
    assert rsi[("u", "s")] == Fraction(51, 100)
    for point in family_2x2.points():
        assert frechet[point] == family_2x2.z_value(point)


def test_joints_are_normalized(family_2x2):
    for build in (joint_frechet, joint_independent, joint_rsi_outer):
        joint = build(family_2x2)
        assert max(joint[point] for point in family_2x2.points()) == 1


def test_independent_never_exceeds_frechet(family_2x2):
    frechet = joint_frechet(family_2x2)
    independent = joint_independent(family_2x2)
    for point in family_2x2.points():
        assert independent[point] <= frechet[point]


def test_combine_rectangle_frozen(family_2x2):
    rect = ({"u"}, {"s"})
    assert combine_rectangle(family_2x2, rect, "frechet") == Fraction(3, 10)
    assert combine_rectangle(family_2x2, rect, "independent") == Fraction(3, 20)
    full = ({"u", "v"}, {"s", "t"})
    assert combine_rectangle(family_2x2, full, "frechet") == 1
    assert combine_rectangle(family_2x2, full, "independent") == 1
    assert combine_rectangle(family_2x2, (set(), {"s"}), "frechet") == 0


def test_combine_rectangle_rejects_unknown_rule(family_2x2):
    with pytest.raises(ValueError):
        combine_rectangle(family_2x2, ({"u"}, {"s"}), "comonotone")


def test_least_conservative_check(family_2x2):
    frechet = joint_frechet(family_2x2)
    independent = joint_independent(family_2x2)
    assert least_conservative_check(family_2x2, frechet, "frechet")
    assert least_conservative_check(family_2x2, independent, "independent")
    # The minimum rule's joint dominates rectangles priced by the product
    # rule, but it is not the least conservative one doing so.
    assert not least_conservative_check(family_2x2, frechet, "independent")
    assert not least_conservative_check(family_2x2, independent, "frechet")


def test_least_conservative_check_rejects_mismatched_space(family_2x2):
    other = MarginalFamily(
        [
            PossibilityDistribution({"u": "1/2", "v": "1"}),
            PossibilityDistribution({"s": "3/10", "t": "1"}),
            PossibilityDistribution({"w": "1"}),
        ]
    )
    joint = joint_frechet(other)
    with pytest.raises(ValueError):
        least_conservative_check(family_2x2, joint, "frechet")


def test_rsi_between_the_two_regimes():
    # Below one half on every coordinate the product joint sits strictly
    # below the outer bound ...
    low = MarginalFamily(
        [
            PossibilityDistribution({"u": "2/5", "v": "1"}),
            PossibilityDistribution({"s": "2/5", "t": "1"}),
        ]
    )
    independent = joint_independent(low)
    rsi = joint_rsi_outer(low)
    assert independent[("u", "s")] == Fraction(4, 25)
    assert rsi[("u", "s")] == Fraction(16, 25)
    assert independent[("u", "s")] < rsi[("u", "s")]
    # ... while at a point with some coordinate at one the order flips.
    for point in (("u", "t"), ("v", "s"), ("v", "t")):
        assert rsi[point] <= independent[point]


def test_rsi_projection_is_outer_bound():
    # Projecting the outer joint back onto a coordinate inflates every
    # value strictly inside (0, 1); the bound is not tight marginally.
    family = MarginalFamily(
        [
            PossibilityDistribution({"u": "2/5", "v": "1"}),
            PossibilityDistribution({"s": "2/5", "t": "1"}),
        ]
    )
    rsi = joint_rsi_outer(family)
    for i, domain in enumerate(family.domains):
        for label in domain:
            marginal_value = family.marginals[i][label]
            projected = max(
                rsi[point] for point in family.points() if point[i] == label
            )
            assert projected >= marginal_value
            if 0 < marginal_value < 1:
                assert projected > marginal_value


def test_single_marginal_family_keeps_values():
    family = MarginalFamily([PossibilityDistribution({"a": "1/3", "b": "1"})])
    frechet = joint_frechet(family)
    independent = joint_independent(family)
    rsi = joint_rsi_outer(family)
    for point in family.points():
        value = family.marginals[0][point[0]]
        assert frechet[point] == value
        assert independent[point] == value
        assert rsi[point] == value


def test_three_marginal_frozen_point():
    family = MarginalFamily(
        [
            PossibilityDistribution({"u": "1/2", "v": "1"}),
            PossibilityDistribution({"s": "3/10", "t": "1"}),
            PossibilityDistribution({"w": "1/4", "x": "1"}),
        ]
    )
    point = ("u", "s", "w")
    assert joint_frechet(family)[point] == Fraction(1, 2)
    assert joint_independent(family)[point] == Fraction(1, 8)
    assert joint_rsi_outer(family)[point] == 1 - Fraction(27, 64)


def test_rectangles_are_dominated_by_joint_measures():
    family = MarginalFamily(
        [
            PossibilityDistribution({"u": "1/2", "v": "1"}),
            PossibilityDistribution({"s": "3/10", "t": "1"}),
        ]
    )
    frechet = joint_frechet(family)
    independent = joint_independent(family)
    domains = [list(d) for d in family.domains]
    subsets = []
    for bits in range(1, 2 ** len(domains[0])):
        subsets.append([x for k, x in enumerate(domains[0]) if bits >> k & 1])
    for first in subsets:
        for bits in range(1, 2 ** len(domains[1])):
            second = [x for k, x in enumerate(domains[1]) if bits >> k & 1]
            rect_points = list(product(first, second))
            for joint, rule in ((frechet, "frechet"), (independent, "independent")):
                measure = max(joint[p] for p in rect_points)
                assert measure >= combine_rectangle(family, (first, second), rule)
