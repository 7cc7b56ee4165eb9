"""Worked examples embedded as a self-check suite.

Each fixture rebuilds one worked example from scratch and compares the
computed data against the expected values.  The CLI `fixtures` subcommand
and the acceptance tests both run this table.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .algebra import check_flat_intersection, check_flat_two_gen, check_flat_root, make_pair
from .classify import CI, NOT_CI, UNKNOWN, classify
from .rectangle import det_and_adjugate, find_rectangles, triangular_permutation
from .semigroup import NumericalSemigroup, free_exponents, glue


@dataclass(frozen=True)
class Fixture:
    name: str
    check: Callable[[], str | None]  # None = pass, otherwise failure detail


@dataclass(frozen=True)
class FixtureResult:
    name: str
    passed: bool
    detail: str


def _expect(actual, expected, what: str) -> str | None:
    if actual != expected:
        return f"{what}: expected {expected!r}, got {actual!r}"
    return None


def _apery_3_5_over_6() -> str | None:
    pair = make_pair([6], [3, 5])
    return _expect(pair.apery_set.exponents, (0, 3, 5, 8, 10, 13), "Apery")


def _apery_3_5_over_6_8() -> str | None:
    pair = make_pair([6, 8], [3, 5])
    return _expect(pair.apery_set.exponents, (0, 3, 5, 10), "Apery")


def _flat_2_3_over_2() -> str | None:
    pair = make_pair([2], [2, 3])
    return _expect(
        (pair.is_flat, pair.apery_set.exponents), (True, (0, 3)), "flat/Apery"
    )


def _flat_glued_12_14_16_35() -> str | None:
    pair = make_pair([12, 16], [12, 14, 16, 35])
    return _expect(
        (pair.is_flat, pair.apery_set.exponents),
        (True, (0, 14, 35, 49)),
        "flat/Apery",
    )


def _flat_rescaled_4_9() -> str | None:
    # coefficient variable u = v**6
    pair = make_pair([2, 3], [4, 9], 6)
    return _expect(
        (pair.is_flat, pair.d, pair.d_prime, pair.apery_set.exponents),
        (True, 6, 1, (0, 4, 8, 9, 13, 17)),
        "flat/d/d'/Apery",
    )


def _nonflat_power_series_over_2_3() -> str | None:
    pair = make_pair([2, 3], [1])
    err = _expect(pair.is_flat, False, "flat")
    if err:
        return err
    err = _expect(pair.flatness.witness.exponent, 3, "witness exponent")
    if err:
        return err
    return _expect(pair.representations(3), [(2, 1), (3, 0)], "representations(3)")


def _nonflat_5_8_9_over_9_15_21() -> str | None:
    pair = make_pair([9, 15, 21], [5, 8, 9])
    err = _expect(pair.is_flat, False, "flat")
    if err:
        return err
    err = _expect(pair.flatness.witness.exponent, 23, "witness exponent")
    if err:
        return err
    reps = pair.representations(23)
    if (15, 8) not in reps or (18, 5) not in reps:
        return f"representations(23) missing the two expected splittings: {reps}"
    return _expect(
        check_flat_intersection(pair), True, "intersection condition"
    )


def _nonflat_3_4_over_9_12() -> str | None:
    pair = make_pair([9, 12], [3, 4])
    err = _expect(
        (pair.is_flat, pair.apery_set.exponents),
        (False, (0, 3, 4, 6, 7, 8, 10, 11, 14)),
        "flat/Apery",
    )
    if err:
        return err
    return _expect(check_flat_two_gen([9, 12], 3, 4), False, "two-generator test")


def _nonflat_14_21_22_33_over_14_22() -> str | None:
    pair = make_pair([14, 22], [14, 21, 22, 33])
    err = _expect(pair.is_flat, False, "flat")
    if err:
        return err
    reps = pair.representations(231)
    if (210, 21) not in reps or (198, 33) not in reps:
        return f"witness 231 lacks the two expected splittings: {reps}"
    return _expect(
        [r.sizes for r in find_rectangles(pair)], [(2, 2)], "rectangle sizes"
    )


def _flat_root_2_3() -> str | None:
    err = _expect(check_flat_root(NumericalSemigroup([2, 3]), 3, 2), True, "root test")
    if err:
        return err
    pair = make_pair([2, 3], [2, 3, "3/2"])
    return _expect(pair.is_flat, True, "flatness of the joined root")


def _nonflat_joined_roots_3_5_7() -> str | None:
    # square roots of u^5, u^7 and the 4th root of u^6 joined to <5,6,7>
    pair = make_pair([5, 6, 7], [3, 5, 7], 2)
    err = _expect(pair.minimal_monomials, (3, 5, 7), "minimal monomials")
    if err:
        return err
    if len(pair.apery_set) <= 2:
        return f"expected more than two Apery monomials, got {len(pair.apery_set)}"
    return _expect(pair.is_flat, False, "flat")


def _rectangles_2_3_over_12() -> str | None:
    pair = make_pair([12], [2, 3])
    sizes = [r.sizes for r in find_rectangles(pair)]
    # the 4x3 and 2x6 boxes, sizes taken along minimal monomials (2, 3)
    return _expect(sizes, [(3, 4), (6, 2)], "rectangle sizes")


def _nonrectangular_14_21_22_33_over_22() -> str | None:
    pair = make_pair([22], [14, 21, 22, 33])
    err = _expect(pair.is_flat, True, "flat")
    if err:
        return err
    err = _expect(len(pair.apery_set), 22, "Apery count")
    if err:
        return err
    return _expect(find_rectangles(pair), [], "rectangles")


def _rectangle_5_6_9_over_6() -> str | None:
    pair = make_pair([6], [5, 6, 9])
    rects = find_rectangles(pair)
    return _expect(
        [(r.minimal_monomials, r.sizes) for r in rects],
        [((5, 9), (3, 2))],
        "rectangle",
    )


def _rectangle_3_5_7_over_17_19() -> str | None:
    pair = make_pair([17, 19], [3, 5, 7])
    err = _expect(pair.is_flat, False, "flat")
    if err:
        return err
    return _expect(
        [r.sizes for r in find_rectangles(pair)], [(4, 2, 2)], "rectangle sizes"
    )


def _nonrectangular_2_3_over_5() -> str | None:
    pair = make_pair([5], [2, 3])
    return _expect(find_rectangles(pair), [], "rectangles")


def _rectangular_2_3_over_3() -> str | None:
    pair = make_pair([3], [2, 3])
    return _expect(
        [r.sizes for r in find_rectangles(pair)], [(3,)], "rectangle sizes"
    )


def _matrix_32_35_38_44_48_56() -> str | None:
    report = classify(make_pair([32, 48], [32, 35, 38, 44, 48, 56]))
    err = _expect(report.minimal_monomials, (35, 38, 44, 56), "minimal monomials")
    if err:
        return err
    err = _expect([a.rectangle.sizes for a in report.rectangles], [(2, 2, 2, 2)], "sizes")
    if err:
        return err
    m = report.rectangles[0].matrix
    expected = ((2, -1, 0, 0), (0, 2, -1, 0), (0, 0, 2, -1), (0, 0, 0, 2))
    err = _expect(m.matrix, expected, "matrix")
    if err:
        return err
    return _expect(m.t, (32, 32, 32, 112), "t-vector")


def _matrix_triangular_16_24_31_46_44() -> str | None:
    report = classify(make_pair([16, 24], [16, 24, 31, 46, 44]))
    err = _expect(report.minimal_monomials, (31, 44, 46), "minimal monomials")
    if err:
        return err
    err = _expect([a.rectangle.sizes for a in report.rectangles], [(2, 2, 2)], "sizes")
    if err:
        return err
    m = report.rectangles[0].matrix
    # t-entries compared per monomial: rows here ascend as (31, 44, 46)
    by_monomial = dict(zip(report.minimal_monomials, m.t))
    err = _expect(by_monomial, {31: 16, 46: 48, 44: 88}, "t per monomial")
    if err:
        return err
    err = _expect(m.det, 8, "det")
    if err:
        return err
    if m.triangular_permutation is None:
        return "matrix not triangularizable"
    return _expect((report.ci, report.justification[0]), (CI, "THM_MAIN"), "verdict")


def _matrix_power_family_8_9_10_12() -> str | None:
    report = classify(make_pair([8], [8, 9, 10, 12]))
    err = _expect(report.ci, CI, "verdict")
    if err:
        return err
    m = report.rectangles[0].matrix
    err = _expect(m.matrix, ((2, -1, 0), (0, 2, -1), (0, 0, 2)), "matrix")
    if err:
        return err
    return _expect(m.t, (8, 8, 24), "t-vector")


def _free_arrangement_power_family() -> str | None:
    phi, free = free_exponents([8, 12, 10, 9])
    return _expect((phi, free), ((2, 2, 2), True), "phi/free")


def _glued_7s_5t() -> str | None:
    S = NumericalSemigroup([2, 3])
    T = NumericalSemigroup([3, 4])
    glued = glue(S, T, 7, 5)
    return _expect(glued.minimal_generators, (14, 15, 20, 21), "minimal generators")


def _glued_7s_5t_never_rectangular() -> str | None:
    glued = NumericalSemigroup([14, 15, 20, 21])
    ext = glued.int_generators
    bound = glued.conductor + 420  # 420 = lcm of the generators
    for r in glued.members_below(bound):
        if r == 0:
            continue
        rects = find_rectangles(make_pair([r], ext))
        if rects:
            return f"rectangle {rects[0].sizes} found over coefficient <{r}>"
    return None


def _classify_nonflat_is_not_ci() -> str | None:
    report = classify(make_pair([2, 3], [1]))
    return _expect(
        (report.ci, report.justification), (NOT_CI, ("NOT_FLAT",)), "verdict"
    )


def _classify_flat_nonrectangular_unknown() -> str | None:
    report = classify(make_pair([22], [14, 21, 22, 33]))
    return _expect(
        (report.ci, report.flat.is_flat, report.rectangular),
        (UNKNOWN, True, False),
        "verdict",
    )


def _singular_matrix_example() -> str | None:
    m = ((4, -1, -1), (-1, 2, -1), (-3, -1, 2))
    det, _ = det_and_adjugate(m)
    err = _expect(det, 0, "det")
    if err:
        return err
    return _expect(triangular_permutation(m), None, "triangular permutation")


FIXTURES: tuple[Fixture, ...] = (
    Fixture("apery-3-5-over-6", _apery_3_5_over_6),
    Fixture("apery-3-5-over-6-8", _apery_3_5_over_6_8),
    Fixture("flat-2-3-over-2", _flat_2_3_over_2),
    Fixture("flat-glued-12-14-16-35-over-12-16", _flat_glued_12_14_16_35),
    Fixture("flat-rescaled-4-9-over-2-3", _flat_rescaled_4_9),
    Fixture("flat-root-2-3-join-3-halves", _flat_root_2_3),
    Fixture("nonflat-power-series-over-2-3", _nonflat_power_series_over_2_3),
    Fixture("nonflat-5-8-9-over-9-15-21", _nonflat_5_8_9_over_9_15_21),
    Fixture("nonflat-3-4-over-9-12", _nonflat_3_4_over_9_12),
    Fixture("nonflat-14-21-22-33-over-14-22", _nonflat_14_21_22_33_over_14_22),
    Fixture("nonflat-joined-roots-3-5-7", _nonflat_joined_roots_3_5_7),
    Fixture("rectangles-2-3-over-12", _rectangles_2_3_over_12),
    Fixture("nonrectangular-14-21-22-33-over-22", _nonrectangular_14_21_22_33_over_22),
    Fixture("rectangle-5-6-9-over-6", _rectangle_5_6_9_over_6),
    Fixture("rectangle-3-5-7-over-17-19", _rectangle_3_5_7_over_17_19),
    Fixture("nonrectangular-2-3-over-5", _nonrectangular_2_3_over_5),
    Fixture("rectangular-2-3-over-3", _rectangular_2_3_over_3),
    Fixture("matrix-32-35-38-44-48-56-over-32-48", _matrix_32_35_38_44_48_56),
    Fixture("matrix-triangular-16-24-31-46-44-over-16-24", _matrix_triangular_16_24_31_46_44),
    Fixture("matrix-power-family-8-9-10-12-over-8", _matrix_power_family_8_9_10_12),
    Fixture("free-arrangement-power-family", _free_arrangement_power_family),
    Fixture("glued-7s-5t-generators", _glued_7s_5t),
    Fixture("glued-7s-5t-never-rectangular", _glued_7s_5t_never_rectangular),
    Fixture("classify-nonflat-not-ci", _classify_nonflat_is_not_ci),
    Fixture("classify-flat-nonrectangular-unknown", _classify_flat_nonrectangular_unknown),
    Fixture("singular-3x3-matrix", _singular_matrix_example),
)


def run_fixtures(name_filter: str = "") -> list[FixtureResult]:
    """Run all fixtures whose name contains the filter substring."""
    results = []
    for fixture in FIXTURES:
        if name_filter and name_filter not in fixture.name:
            continue
        try:
            detail = fixture.check()
        except Exception as exc:  # a crash is a failure, not an abort
            detail = f"raised {type(exc).__name__}: {exc}"
        results.append(
            FixtureResult(fixture.name, detail is None, detail or "ok")
        )
    return results
