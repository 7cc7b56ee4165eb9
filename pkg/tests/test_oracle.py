import pytest

from nsalg.algebra import make_pair
from nsalg.errors import BoundTooSmall, NotMember, TooLarge
from nsalg.oracle import (
    all_factorizations,
    apery_by_definition,
    rectangle_by_exhaustion,
    unique_representation_scan,
)
from nsalg.rectangle import find_rectangles


class TestAperyByDefinition:
    def test_principal_coefficient(self):
        pair = make_pair([6], [3, 5])
        assert apery_by_definition(pair, 20) == [0, 3, 5, 8, 10, 13]

    def test_equal_pair(self):
        assert apery_by_definition(make_pair([2, 3], [2, 3]), 10) == [0]

    def test_rescaled_example_on_common_scale(self):
        pair = make_pair([12, 18], [4, 9])
        assert apery_by_definition(pair, 40) == [0, 4, 8, 9, 13, 17]

    def test_bound_too_small(self):
        pair = make_pair([6], [3, 5])
        with pytest.raises(BoundTooSmall):
            apery_by_definition(pair, 10)


class TestAllFactorizations:
    def test_coefficient_and_monomial_paths(self):
        facts = all_factorizations(make_pair([12], [2, 3]), 12)
        assert facts == [(0, (0, 4)), (0, (3, 2)), (0, (6, 0)), (12, (0, 0))]

    def test_zero(self):
        assert all_factorizations(make_pair([12], [2, 3]), 0) == [(0, (0, 0))]

    def test_two_splittings_at_231(self):
        pair = make_pair([14, 22], [14, 21, 22, 33])
        facts = all_factorizations(pair, 231)
        # (u^14)^15 * u^21 and (u^22)^9 * u^33, over minimal monomials (21, 33)
        assert (210, (1, 0)) in facts
        assert (198, (0, 1)) in facts

    def test_not_member(self):
        with pytest.raises(NotMember):
            all_factorizations(make_pair([12], [2, 3]), 1)

    def test_projection_recovers_representations(self, corpus_pairs):
        for pair in corpus_pairs[:25]:
            monomials = pair.minimal_monomials
            apery = set(pair.apery_set.exponents)
            members = pair.E.members_below(
                min(pair.apery_set.bound_used, 60)
            )
            for s in members[:8]:
                facts = all_factorizations(pair, s)
                projected = {
                    (s0, sum(a * m for a, m in zip(vec, monomials)))
                    for s0, vec in facts
                    if sum(a * m for a, m in zip(vec, monomials)) in apery
                }
                assert projected == set(pair.representations(s))


class TestUniqueRepresentationScan:
    def test_witness_for_power_series(self):
        assert unique_representation_scan(make_pair([2, 3], [1])) == 3

    def test_absent_for_flat(self):
        assert unique_representation_scan(make_pair([2], [2, 3])) is None

    def test_witness_at_23(self):
        assert unique_representation_scan(make_pair([9, 15, 21], [5, 8, 9])) == 23

    def test_smallest_witness_is_77(self):
        # 231 also has two splittings; the smallest such exponent is 77
        pair = make_pair([14, 22], [14, 21, 22, 33])
        assert unique_representation_scan(pair) == 77
        assert pair.representations(77) == [(44, 33), (56, 21)]


class TestRectangleByExhaustion:
    def test_two_box_sizes(self):
        assert rectangle_by_exhaustion(make_pair([12], [2, 3])) == [(3, 4), (6, 2)]

    def test_nonrectangular(self):
        assert rectangle_by_exhaustion(make_pair([22], [14, 21, 22, 33])) == []

    def test_trivial(self):
        assert rectangle_by_exhaustion(make_pair([2, 3], [2, 3])) == [()]

    def test_too_large(self):
        pair = make_pair([100001], [1])
        with pytest.raises(TooLarge):
            rectangle_by_exhaustion(pair)

    def test_matches_fast_path_on_fixture_pairs(self):
        for coeff, ext in (
            ([12], [2, 3]),
            ([22], [14, 21, 22, 33]),
            ([17, 19], [3, 5, 7]),
            ([6], [5, 6, 9]),
            ([5], [2, 3]),
        ):
            pair = make_pair(coeff, ext)
            assert rectangle_by_exhaustion(pair) == [
                r.sizes for r in find_rectangles(pair)
            ]
