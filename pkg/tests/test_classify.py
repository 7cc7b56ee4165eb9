import pytest

from nsalg.algebra import make_pair
from nsalg.classify import (
    CI,
    NOT_CI,
    UNKNOWN,
    bresinsky_c,
    bresinsky_relation_search,
    classify,
    gluing_apery_product_check,
    gorenstein_indicator,
)
from nsalg.errors import GluingInvalid
from nsalg.semigroup import NumericalSemigroup


class TestClassify:
    def test_triangular_matrix_gives_ci(self):
        report = classify(make_pair([16, 24], [16, 24, 31, 46, 44]))
        assert report.ci == CI
        assert report.justification[0] == "THM_MAIN"
        assert "THM_3MIN" in report.justification

    def test_power_family(self):
        report = classify(make_pair([8], [8, 9, 10, 12]))
        assert report.ci == CI
        m = report.rectangles[0].matrix
        assert m.matrix == ((2, -1, 0), (0, 2, -1), (0, 0, 2))
        assert m.t == (8, 8, 24)

    def test_not_flat_is_not_ci(self):
        report = classify(make_pair([2, 3], [1]))
        assert report.ci == NOT_CI
        assert report.justification == ("NOT_FLAT",)
        assert not report.flat.is_flat

    def test_flat_without_rectangle_is_unknown(self):
        report = classify(make_pair([22], [14, 21, 22, 33]))
        assert report.ci == UNKNOWN
        assert report.flat.is_flat
        assert not report.rectangular
        assert report.justification == ("NO_RECTANGLE",)
        assert report.unknown_reason

    def test_nonflat_rectangles_have_no_matrix(self):
        report = classify(make_pair([17, 19], [3, 5, 7]))
        assert report.ci == NOT_CI
        assert report.rectangular
        assert all(a.matrix is None for a in report.rectangles)

    def test_degenerate_equal_pair(self):
        report = classify(make_pair([2, 3], [2, 3]))
        assert report.ci == CI
        assert report.rectangles[0].rectangle.sizes == ()

    def test_two_generator_rule_fires(self):
        report = classify(make_pair([12], [2, 3]))
        assert report.ci == CI
        assert "N2_TRIANGULAR" in report.justification

    def test_single_monomial_rule_fires(self):
        report = classify(make_pair([3], [2, 3]))
        assert report.ci == CI
        assert "N1_TRIVIAL" in report.justification

    def test_deterministic(self):
        from nsalg.cli import report_to_dict

        a = report_to_dict(classify(make_pair([16, 24], [16, 24, 31, 46, 44])))
        b = report_to_dict(classify(make_pair([16, 24], [16, 24, 31, 46, 44])))
        assert a == b

    def test_verdict_flat_consistency(self, corpus_pairs):
        for pair in corpus_pairs[:150]:
            report = classify(pair)
            if report.ci == CI:
                assert report.flat.is_flat and report.justification
            if report.ci == NOT_CI:
                assert not report.flat.is_flat


class TestPowerFamilySweep:
    @pytest.mark.parametrize("n", [2, 3, 4])
    @pytest.mark.parametrize("a", [1, 3, 5])
    def test_bidiagonal_family_is_ci(self, n, a):
        base = 2**n
        tail = [base + (2**i) * a for i in range(n)]
        report = classify(make_pair([base], [base] + tail))
        assert report.minimal_monomials == tuple(tail)
        assert report.ci == CI
        m = report.rectangles[0].matrix
        expected_rows = tuple(
            tuple(
                2 if j == i else -1 if j == i + 1 else 0 for j in range(n)
            )
            for i in range(n)
        )
        assert m.matrix == expected_rows
        assert m.t == tuple([base] * (n - 1) + [base * (a + 2)])


class TestGorenstein:
    def test_unique_maximum(self):
        assert gorenstein_indicator(make_pair([6], [3, 5]))

    def test_two_maxima(self):
        # Apery {0, 4, 5}: neither 4 nor 5 divides the other in <3,4,5>
        assert not gorenstein_indicator(make_pair([3], [3, 4, 5]))

    def test_trivial_apery(self):
        assert gorenstein_indicator(make_pair([2, 3], [2, 3]))


class TestBresinsky:
    def test_glued_generator_values(self):
        assert bresinsky_c([14, 21, 15, 20]) == (3, 2, 4, 3)

    def test_small_case(self):
        assert bresinsky_c([1, 2, 3, 4])[0] == 2  # 2*1 = 2

    def test_scan_values(self):
        assert bresinsky_c([4, 6, 9, 23]) == (3, 2, 2, 1)

    def test_relation_found_for_glued_semigroup(self):
        data = bresinsky_relation_search([14, 21, 15, 20])
        assert data.relation is not None
        pairing, alphas = data.relation
        assert alphas == (1, 1, 1, 1)
        (i, k), (j, l) = pairing
        gens = [14, 21, 15, 20]
        assert (
            alphas[i] * gens[i] + alphas[k] * gens[k]
            == alphas[j] * gens[j] + alphas[l] * gens[l]
        )
        assert data.symmetric and not data.degenerate

    def test_no_relation_for_complete_intersection(self):
        data = bresinsky_relation_search([8, 9, 10, 12])
        assert data.relation is None
        assert data.symmetric

    def test_degenerate_flagged(self):
        data = bresinsky_relation_search([1, 2, 3, 4])
        assert data.degenerate

    def test_relation_exponents_in_range(self):
        data = bresinsky_relation_search([14, 21, 15, 20])
        _, alphas = data.relation
        assert all(0 < a < c for a, c in zip(alphas, data.c))

    def test_input_validation(self):
        with pytest.raises(ValueError):
            bresinsky_c([1, 2, 3])


class TestGluingAperyProduct:
    def test_canonical_instance(self):
        S = NumericalSemigroup([2, 3])
        T = NumericalSemigroup([3, 4])
        # 5 in S, 6 in T, coprime, neither minimal on its side
        assert gluing_apery_product_check(S, T, 5, 6)

    def test_same_semigroup_twice(self):
        S = NumericalSemigroup([2, 3])
        assert gluing_apery_product_check(S, S, 5, 4)

    def test_full_monoid_side(self):
        # Apery of N over <p> is {0..p-1}; the formula reduces to a box
        assert gluing_apery_product_check(
            NumericalSemigroup([1]), NumericalSemigroup([2, 3]), 4, 5
        )

    def test_invalid_gluing_propagates(self):
        S = NumericalSemigroup([2, 3])
        T = NumericalSemigroup([3, 4])
        with pytest.raises(GluingInvalid) as exc:
            gluing_apery_product_check(S, T, 2, 7)  # p = 2 is minimal in S
        assert "minimal generator" in str(exc.value)
