from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from nsalg.errors import EmptyGenerators, GluingInvalid, NonPositive, NotMember
from nsalg.semigroup import NumericalSemigroup, free_exponents, glue, normalize


class TestNormalize:
    def test_integers_pass_through(self):
        S = normalize([2, 3])
        assert S.int_generators == (2, 3)
        assert S.scale == 1
        assert S.content == 1
        assert S.conductor == 2

    def test_denominators_are_cleared(self):
        S = normalize([Fraction(3, 2), 2])
        assert S.scale == 2
        assert S.int_generators == (3, 4)
        assert S.content == 1

    def test_redundant_generator_dropped_from_minimal(self):
        # 10 = 4 + 6, brute-force scan confirms {4, 6, 9} minimal
        S = normalize([4, 6, 9, 10])
        assert S.minimal_generators == (4, 6, 9)

    def test_string_and_duplicate_input(self):
        S = normalize(["3/2", "2", "2"])
        assert S.int_generators == (3, 4)

    def test_empty_rejected(self):
        with pytest.raises(EmptyGenerators):
            normalize([])

    @pytest.mark.parametrize("bad", [0, -1, Fraction(-1, 2), "0"])
    def test_nonpositive_rejected(self, bad):
        with pytest.raises(NonPositive):
            normalize([2, bad])


class TestContains:
    def test_below_multiplicity(self):
        assert not NumericalSemigroup([2, 3]).contains(1)

    def test_composite_membership(self):
        assert NumericalSemigroup([5, 8, 9]).contains(23)  # 23 = 18 + 5

    def test_dp_table_negative_case(self):
        assert not NumericalSemigroup([9, 15, 21]).contains(23)

    def test_rational_membership(self):
        S = NumericalSemigroup([Fraction(3, 2), 2])
        assert S.contains(Fraction(3, 2))
        assert S.contains(Fraction(7, 2))  # 3/2 + 2
        assert not S.contains(Fraction(1, 2))
        assert not S.contains(Fraction(1, 3))  # not on the scale at all

    def test_int_model_membership(self):
        S = NumericalSemigroup([2, 3])
        assert S.contains_int(0)
        assert not S.contains_int(-2)


class TestConductor:
    @pytest.mark.parametrize(
        "gens,expected",
        [([1], 0), ([2, 3], 2), ([3, 5], 8), ([2], 0), ([4, 6], 3)],
    )
    def test_examples(self, gens, expected):
        assert NumericalSemigroup(gens).conductor == expected

    @given(
        st.lists(st.integers(min_value=2, max_value=40), min_size=1, max_size=4)
    )
    @settings(deadline=None)
    def test_conductor_is_minimal_and_sufficient(self, gens):
        S = NumericalSemigroup(gens)
        for x in range(S.conductor, S.conductor + 2 * max(S.int_generators)):
            if x % S.content == 0:
                assert S.contains_int(x)
        if S.conductor > 0:
            # the largest excluded multiple of the content sits right below
            assert (S.conductor - 1) % S.content == 0
            assert not S.contains_int(S.conductor - 1)


class TestMinimalGenerators:
    def test_already_minimal(self):
        assert NumericalSemigroup([2, 3]).minimal_generators == (2, 3)

    def test_scaled_sum_minimal_generators(self):
        S = NumericalSemigroup([14, 21, 15, 20])
        assert S.minimal_generators == (14, 15, 20, 21)

    def test_sum_excluded(self):
        assert NumericalSemigroup([4, 6, 10]).minimal_generators == (4, 6)

    @given(
        st.lists(st.integers(min_value=2, max_value=40), min_size=1, max_size=4)
    )
    @settings(deadline=None)
    def test_minimal_generators_regenerate(self, gens):
        S = NumericalSemigroup(gens)
        R = NumericalSemigroup(S.minimal_generators)
        for x in range(S.conductor + max(S.int_generators) + 1):
            assert S.contains_int(x) == R.contains_int(x)


class TestDivisors:
    def test_trivial_and_self_only(self):
        assert NumericalSemigroup([2, 3]).divisors_in(2) == [0, 2]

    def test_membership_scan(self):
        assert NumericalSemigroup([2, 3]).divisors_in(7) == [0, 2, 3, 4, 5, 7]

    def test_sparse_semigroup(self):
        assert NumericalSemigroup([21, 33]).divisors_in(54) == [0, 21, 33, 54]

    def test_not_member(self):
        with pytest.raises(NotMember):
            NumericalSemigroup([2, 3]).divisors_in(1)

    @given(
        st.lists(st.integers(min_value=2, max_value=30), min_size=1, max_size=3),
        st.integers(min_value=0, max_value=6),
    )
    @settings(deadline=None)
    def test_divisors_closed_under_complement(self, gens, pick):
        S = NumericalSemigroup(gens)
        members = S.members_below(S.conductor + 2 * max(S.int_generators))
        s = members[min(pick, len(members) - 1)]
        divisors = S.divisors_in(s)
        assert sorted(s - t for t in divisors) == divisors


class TestSymmetry:
    @pytest.mark.parametrize(
        "gens,expected", [([2, 3], True), ([3, 4, 5], False), ([3, 5], True)]
    )
    def test_examples(self, gens, expected):
        assert NumericalSemigroup(gens).is_symmetric() is expected

    @given(
        st.integers(min_value=2, max_value=30), st.integers(min_value=2, max_value=30)
    )
    @settings(deadline=None)
    def test_two_generator_semigroups_are_symmetric(self, a, b):
        # classical fact for coprime generator pairs
        if gcd(a, b) == 1 and a != b:
            assert NumericalSemigroup([a, b]).is_symmetric()

    def test_content_divided_out(self):
        assert NumericalSemigroup([4, 6]).is_symmetric()  # <2,3> scaled by 2


class TestGlue:
    def test_scaled_sum_of_two_semigroups(self):
        S = NumericalSemigroup([2, 3])
        T = NumericalSemigroup([3, 4])
        # 7 in T, 5 in S, neither minimal on its side, gcd(7,5)=1
        glued = glue(S, T, 7, 5)
        assert glued.minimal_generators == (14, 15, 20, 21)

    def test_coinciding_images_need_relaxed_mode(self):
        S, T = NumericalSemigroup([3]), NumericalSemigroup([4])
        with pytest.raises(GluingInvalid):
            glue(S, T, 4, 3)  # p = 4 is the minimal generator of T
        assert glue(S, T, 4, 3, relaxed=True).minimal_generators == (12,)

    def test_minimal_generator_violation(self):
        with pytest.raises(GluingInvalid) as exc:
            glue(NumericalSemigroup([2, 3]), NumericalSemigroup([3, 4]), 3, 2)
        assert "minimal generator" in str(exc.value)

    def test_membership_violation(self):
        with pytest.raises(GluingInvalid):
            glue(NumericalSemigroup([2, 3]), NumericalSemigroup([3, 4]), 5, 5)

    def test_coprimality_violation(self):
        with pytest.raises(GluingInvalid):
            glue(NumericalSemigroup([2, 3]), NumericalSemigroup([3, 4]), 6, 4)

    def test_rational_semigroups_rejected(self):
        with pytest.raises(GluingInvalid):
            glue(NumericalSemigroup(["3/2"]), NumericalSemigroup([4]), 4, 3)

    def test_content_of_gluing(self):
        from nsalg.corpus import random_gluings

        for S, T, p, q in random_gluings(10):
            glued = glue(S, T, q, p)
            assert glued.content == gcd(q * S.content, p * T.content)


class TestFreeExponents:
    def test_power_family_arrangement(self):
        assert free_exponents([8, 12, 10, 9]) == ((2, 2, 2), True)

    def test_arrangement_that_fails(self):
        # phi_1 = min{h : 5h in <6>} = 6, phi_2 = min{h : 9h in <6,5>} = 2,
        # product 12 != 6 Apery numbers of <5,6,9> w.r.t. 6
        assert free_exponents([6, 5, 9]) == ((6, 2), False)

    def test_two_generators(self):
        assert free_exponents([4, 6]) == ((2,), True)

    def test_order_dependence(self):
        # same semigroup as the power family, ascending arrangement
        assert free_exponents([8, 9, 10, 12]) == ((8, 4, 2), False)

    def test_single_generator(self):
        assert free_exponents([7]) == ((), True)

    def test_empty_rejected(self):
        with pytest.raises(EmptyGenerators):
            free_exponents([])
