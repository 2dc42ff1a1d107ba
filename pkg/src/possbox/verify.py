"""Deterministic verification sweeps.

Each suite enumerates a family of small instances exhaustively (or, for the
round-trip suite, from a fixed random seed), computes every quantity along
two independent routes, and reports the first disagreement in replayable
form.  The suites back both the command line's ``verify`` command and the
acceptance tests; all comparisons are exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, product
from typing import Iterator, Sequence

from possbox.chain import Chain
from possbox.maxitive import (
    is_maxitive,
    upper_01_both,
    upper_01_lower,
    upper_01_upper,
    zero_one_profile,
)
from possbox.multivariate import (
    MarginalFamily,
    combine_rectangle,
    joint_frechet,
    joint_independent,
    joint_rsi_outer,
    least_conservative_check,
)
from possbox.oracle import (
    credal_intersection_equal,
    credal_upper_classes,
    exhaustive_max_preserving,
)
from possbox.pbox import PBox
from possbox.possibility import (
    PossibilityDistribution,
    conjunction_bounds,
    conjunction_decompose,
    pbox_to_possibility,
    possibility_to_pbox,
    zero_one_possibility,
)
from possbox.rationals import ONE, ZERO, fmt


@dataclass
class SuiteReport:
    """Outcome of one verification suite."""

    suite: str
    cases: int = 0
    checks: int = 0
    counterexample: dict | None = field(default=None)

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def summary(self) -> str:
        state = "ok" if self.ok else "FAILED"
        return f"suite {self.suite}: {state} ({self.cases} cases, {self.checks} checks)"


# ------------------------------------------------------------- enumerations


def grid_values(den: int) -> tuple[Fraction, ...]:
    """The grid ``0, 1/den, .., 1``."""
    if den < 1:
        raise ValueError("grid denominator must be at least 1")
    return tuple(Fraction(k, den) for k in range(den + 1))


def default_chain(m: int) -> Chain:
    """Canonical chain with singleton classes ``x0 < x1 < ..``."""
    return Chain([[f"x{i}"] for i in range(m)])


def iter_cdf_vectors(m: int, values: Sequence[Fraction]) -> Iterator[tuple[Fraction, ...]]:
    """All non-decreasing length-``m`` vectors over ``values`` ending at 1."""
    for vec in combinations_with_replacement(sorted(values), m):
        if vec[-1] == ONE:
            yield vec


def iter_grid_pboxes(m: int, grid_den: int) -> Iterator[PBox]:
    """Every probability box on the canonical ``m``-chain with grid values."""
    chain = default_chain(m)
    vectors = list(iter_cdf_vectors(m, grid_values(grid_den)))
    for upper in vectors:
        for lower in vectors:
            if all(lo <= up for lo, up in zip(lower, upper)):
                yield PBox(chain, lower, upper)


def class_subsets(m: int) -> list[tuple[int, ...]]:
    """All subsets of class indices, in bitmask order (empty set first)."""
    return [tuple(i for i in range(m) if mask >> i & 1) for mask in range(1 << m)]


def pbox_document(box: PBox) -> dict:
    """Replayable JSON form of a probability box."""
    return {
        "classes": [sorted(cls) for cls in box.chain.classes],
        "lower": [fmt(v) for v in box.lower_cdf],
        "upper": [fmt(v) for v in box.upper_cdf],
    }


def _event_labels(subset: tuple[int, ...]) -> list[str]:
    return [f"x{i}" for i in subset]


# ------------------------------------------------------------------ suites


def suite_oracle(max_classes: int = 5, grid_den: int = 4) -> SuiteReport:
    """Closed-form upper values against the credal LP, plus coherence.

    For every chain size, every grid probability box, and every union of
    classes: the formula value must equal the LP optimum.  Where the union
    is a down-set ``[bottom, x]`` or up-set ``(x, top]`` the optimum must
    also reproduce the cumulative bound itself.
    """
    report = SuiteReport("oracle")
    for m in range(1, max_classes + 1):
        subsets = class_subsets(m)
        prefixes = {tuple(range(i + 1)): i for i in range(m)}
        suffixes = {tuple(range(i + 1, m)): i for i in range(m)}
        for box in iter_grid_pboxes(m, grid_den):
            report.cases += 1
            for subset in subsets:
                formula = box.upper_of_classes(subset)
                optimum = credal_upper_classes(box, subset)
                report.checks += 1
                if formula != optimum:
                    report.counterexample = {
                        "document": pbox_document(box),
                        "event": _event_labels(subset),
                        "closed_form": fmt(formula),
                        "credal_optimum": fmt(optimum),
                    }
                    return report
                expected = None
                if subset in prefixes:
                    expected = box.upper_cdf[prefixes[subset]]
                elif subset in suffixes:
                    expected = ONE - box.lower_cdf[suffixes[subset]]
                if expected is not None:
                    report.checks += 1
                    if optimum != expected:
                        report.counterexample = {
                            "document": pbox_document(box),
                            "event": _event_labels(subset),
                            "credal_optimum": fmt(optimum),
                            "cumulative_bound": fmt(expected),
                        }
                        return report
    return report


def suite_maxitive(max_classes: int = 4, grid_den: int = 4) -> SuiteReport:
    """Maxitivity decision and the specialized 0-1 formulas.

    The 0-1 characterization must agree with the exhaustive LP-backed
    max-preservation check, and each specialized closed form must equal the
    general one on every event where its precondition holds.
    """
    report = SuiteReport("maxitive")
    for m in range(1, max_classes + 1):
        subsets = class_subsets(m)
        events = [_event_labels(s) for s in subsets]
        for box in iter_grid_pboxes(m, grid_den):
            report.cases += 1
            decided = is_maxitive(box)
            semantic = exhaustive_max_preserving(box)
            report.checks += 1
            if decided != semantic:
                report.counterexample = {
                    "document": pbox_document(box),
                    "is_maxitive": decided,
                    "max_preserving": semantic,
                }
                return report
            profile = zero_one_profile(box)
            forms = []
            if profile.lower_is_01:
                forms.append(("upper_01_lower", upper_01_lower))
            if profile.upper_is_01:
                forms.append(("upper_01_upper", upper_01_upper))
            if profile.lower_is_01 and profile.upper_is_01:
                forms.append(("upper_01_both", upper_01_both))
            for subset, event in zip(subsets, events):
                general = box.upper_of_classes(subset)
                for name, form in forms:
                    report.checks += 1
                    special = form(box, event)
                    if special != general:
                        report.counterexample = {
                            "document": pbox_document(box),
                            "event": event,
                            "formula": name,
                            "specialized": fmt(special),
                            "general": fmt(general),
                        }
                        return report
    return report


def _random_distribution(rng: random.Random, max_domain: int, grid_den: int) -> PossibilityDistribution:
    size = rng.randint(1, max_domain)
    values = [Fraction(rng.randint(0, grid_den), grid_den) for _ in range(size)]
    values[rng.randrange(size)] = ONE
    return PossibilityDistribution({f"e{j}": v for j, v in enumerate(values)})


def suite_roundtrip(
    samples: int = 1000, max_domain: int = 6, grid_den: int = 8, seed: int = 0
) -> SuiteReport:
    """Possibility <-> probability-box round trips.

    A fixed two-element distribution is rebuilt from boxes on both possible
    orderings of its carrier; then seeded random distributions are pushed
    through ``possibility_to_pbox`` and the box's upper probability must
    reproduce the possibility measure on every event.  Finally, small grid
    boxes go the other way: conversion succeeds exactly on the maxitive
    ones and reproduces the upper probability (with the two-sided 0-1 case
    cross-checked against its indicator form).
    """
    report = SuiteReport("roundtrip")

    target = PossibilityDistribution({"x1": Fraction(1, 2), "x2": ONE})
    readings = [
        PBox(Chain([["x1"], ["x2"]]), [ZERO, ONE], [Fraction(1, 2), ONE]),
        PBox(Chain([["x2"], ["x1"]]), [Fraction(1, 2), ONE], [ONE, ONE]),
    ]
    for box in readings:
        report.cases += 1
        report.checks += 1
        pi = pbox_to_possibility(box)
        if pi != target:
            report.counterexample = {
                "document": pbox_document(box),
                "expected_pi": {k: fmt(v) for k, v in target.items()},
                "computed_pi": None if pi is None else {k: fmt(v) for k, v in pi.items()},
            }
            return report

    rng = random.Random(seed)
    for _ in range(samples):
        pi = _random_distribution(rng, max_domain, grid_den)
        report.cases += 1
        _, box = possibility_to_pbox(pi)
        labels = sorted(pi.labels)
        for mask in range(1 << len(labels)):
            event = [labels[j] for j in range(len(labels)) if mask >> j & 1]
            report.checks += 1
            if box.upper(event) != pi.measure(event):
                report.counterexample = {
                    "pi": {k: fmt(v) for k, v in pi.items()},
                    "event": event,
                    "pbox_upper": fmt(box.upper(event)),
                    "possibility": fmt(pi.measure(event)),
                }
                return report

    for m in range(1, 4):
        subsets = class_subsets(m)
        for box in iter_grid_pboxes(m, grid_den=4):
            report.cases += 1
            pi = pbox_to_possibility(box)
            report.checks += 1
            if (pi is not None) != is_maxitive(box):
                report.counterexample = {
                    "document": pbox_document(box),
                    "is_maxitive": is_maxitive(box),
                    "converted": pi is not None,
                }
                return report
            if pi is None:
                continue
            for subset in subsets:
                report.checks += 1
                if pi.measure(_event_labels(subset)) != box.upper_of_classes(subset):
                    report.counterexample = {
                        "document": pbox_document(box),
                        "event": _event_labels(subset),
                        "possibility": fmt(pi.measure(_event_labels(subset))),
                        "pbox_upper": fmt(box.upper_of_classes(subset)),
                    }
                    return report
            profile = zero_one_profile(box)
            if profile.lower_is_01 and profile.upper_is_01:
                report.checks += 1
                if zero_one_possibility(box) != pi:
                    report.counterexample = {
                        "document": pbox_document(box),
                        "detail": "zero_one_possibility disagrees with pbox_to_possibility",
                    }
                    return report
    return report


def suite_conjunction(max_classes: int = 3, grid_den: int = 4) -> SuiteReport:
    """Conjunction decomposition: credal identity, sandwich, and exact slack.

    For every grid box the credal set must equal the intersection of the
    two decomposed possibility measures' credal sets (checked by LP); the
    approximate bounds must sandwich the exact ones on every event; and on
    every interval ``(x, y]`` the upper slack must equal
    ``min(lower(x), 1 - upper(y))``.
    """
    report = SuiteReport("conjunction")
    for m in range(1, max_classes + 1):
        subsets = class_subsets(m)
        for box in iter_grid_pboxes(m, grid_den):
            report.cases += 1
            pi_lower, pi_upper = conjunction_decompose(box)
            report.checks += 1
            if not credal_intersection_equal(box, pi_lower, pi_upper):
                report.counterexample = {
                    "document": pbox_document(box),
                    "detail": "credal set differs from the intersection of the decomposition",
                }
                return report
            for subset in subsets:
                event = _event_labels(subset)
                approx_lo, approx_up = conjunction_bounds(box, event)
                exact_up = box.upper_of_classes(subset)
                exact_lo = ONE - box.upper_of_classes(tuple(i for i in range(m) if i not in subset))
                report.checks += 1
                if not (approx_lo <= exact_lo <= exact_up <= approx_up):
                    report.counterexample = {
                        "document": pbox_document(box),
                        "event": event,
                        "approx": [fmt(approx_lo), fmt(approx_up)],
                        "exact": [fmt(exact_lo), fmt(exact_up)],
                    }
                    return report
            for ix in range(m - 1):
                for iy in range(ix + 1, m):
                    subset = tuple(range(ix + 1, iy + 1))
                    event = _event_labels(subset)
                    _, approx_up = conjunction_bounds(box, event)
                    slack = approx_up - box.upper_of_classes(subset)
                    expected = min(box.lower_cdf[ix], ONE - box.upper_cdf[iy])
                    report.checks += 1
                    if slack != expected:
                        report.counterexample = {
                            "document": pbox_document(box),
                            "event": event,
                            "slack": fmt(slack),
                            "expected_slack": fmt(expected),
                        }
                        return report
    return report


def _canonical_marginals(max_size: int, grid_den: int) -> list[PossibilityDistribution]:
    """One representative marginal per value multiset (labels are positional)."""
    pool: list[PossibilityDistribution] = []
    values = grid_values(grid_den)
    for size in range(1, max_size + 1):
        labels = [f"e{j}" for j in range(size)]
        for vec in combinations_with_replacement(values, size):
            if vec[-1] != ONE:
                continue
            pool.append(PossibilityDistribution(dict(zip(labels, vec))))
    return pool


def suite_multivariate(
    max_size: int = 3, grid_den: int = 4, marginal_counts: Sequence[int] = (2, 3)
) -> SuiteReport:
    """Joint constructions from marginals.

    Enumerates families of 2 and 3 marginals over grid values (one
    representative per value multiset; every check is invariant under
    relabelling within a marginal).  Verifies the pointwise forms and
    ordering of the three joints, the least-conservative property of the
    Fréchet and independent joints for their own rules, rectangle dominance
    of the random-set outer bound over independent products, and the
    regime comparisons between the independent and random-set bounds.
    """
    report = SuiteReport("multivariate")
    pool = _canonical_marginals(max_size, grid_den)
    half = Fraction(1, 2)
    for n in marginal_counts:
        for chosen in product(pool, repeat=n):
            family = MarginalFamily(chosen)
            report.cases += 1
            frechet = joint_frechet(family)
            independent = joint_independent(family)
            rsi = joint_rsi_outer(family)

            def fail(detail: str, **extra) -> SuiteReport:
                report.counterexample = {
                    "marginals": [
                        {label: fmt(m[label]) for label in domain}
                        for m, domain in zip(family.marginals, family.domains)
                    ],
                    "detail": detail,
                    **extra,
                }
                return report

            for point in family.points():
                values = family.coordinate_values(point)
                z = max(values)
                w = min(values)
                report.checks += 4
                if frechet[point] != z:
                    return fail("frechet joint is not the pointwise score", point=list(point))
                if independent[point] != z**n:
                    return fail("independent joint is not score ** n", point=list(point))
                if rsi[point] != ONE - (ONE - w) ** n:
                    return fail("random-set outer bound has the wrong pointwise form", point=list(point))
                if independent[point] > frechet[point]:
                    return fail("independent joint exceeds the Fréchet joint", point=list(point))
                if any(v == ONE for v in values):
                    report.checks += 1
                    if rsi[point] > independent[point]:
                        return fail(
                            "random-set bound looser than independent at a value-1 point",
                            point=list(point),
                        )
                # The "below one half" regime is only claimed here for a level
                # point: with very unequal coordinates (say 1/12 and 5/12) the
                # product-form bound can lose even though all values are small.
                if ZERO < w and z < half and w == z:
                    report.checks += 1
                    if not independent[point] < rsi[point]:
                        return fail(
                            "independent bound not strictly tighter below 1/2",
                            point=list(point),
                        )

            report.checks += 2
            if not least_conservative_check(family, frechet, "frechet"):
                return fail("Fréchet joint fails its least-conservative check")
            if not least_conservative_check(family, independent, "independent"):
                return fail("independent joint fails its least-conservative check")

            domains = family.domains
            component_subsets = [
                [
                    tuple(domain[i] for i in range(len(domain)) if mask >> i & 1)
                    for mask in range(1, 1 << len(domain))
                ]
                for domain in domains
            ]
            measure_tables = [
                {subset: m.measure(subset) for subset in subsets}
                for m, subsets in zip(family.marginals, component_subsets)
            ]
            for rect in product(*component_subsets):
                values = [table[c] for table, c in zip(measure_tables, rect)]
                rsi_measure = ONE - (ONE - min(values)) ** n
                prod_bound = ONE
                for v in values:
                    prod_bound *= v
                report.checks += 1
                if rsi_measure < prod_bound:
                    return fail(
                        "random-set outer bound fails rectangle dominance",
                        rectangle=[list(c) for c in rect],
                    )
    return report


SUITES = {
    "oracle": suite_oracle,
    "maxitive": suite_maxitive,
    "roundtrip": suite_roundtrip,
    "conjunction": suite_conjunction,
    "multivariate": suite_multivariate,
}


def run_suite(name: str, max_classes: int | None = None, grid_den: int | None = None) -> SuiteReport:
    """Run one named suite, mapping the generic size knobs onto its parameters.

    ``max_classes`` bounds the structural size (chain classes, sample domain
    size, or marginal domain size, depending on the suite) and ``grid_den``
    the value grid.
    """
    if name == "oracle":
        return suite_oracle(max_classes or 5, grid_den or 4)
    if name == "maxitive":
        return suite_maxitive(max_classes or 4, grid_den or 4)
    if name == "roundtrip":
        return suite_roundtrip(max_domain=max_classes or 6, grid_den=grid_den or 8)
    if name == "conjunction":
        return suite_conjunction(max_classes or 3, grid_den or 4)
    if name == "multivariate":
        return suite_multivariate(max_size=max_classes or 3, grid_den=grid_den or 4)
    raise ValueError(f"unknown suite {name!r} (expected one of {sorted(SUITES)})")
