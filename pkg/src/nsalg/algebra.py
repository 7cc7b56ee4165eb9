"""Relative algebra pairs: Apery sets, representations and flatness.

A pair places a coefficient semigroup inside an extension semigroup on one
common integer scale (the coefficient is first multiplied by the variable
change t).  Everything downstream -- Apery exponents, representations, the
flatness verdict -- lives on that common scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm

from .errors import (
    InternalInconsistency,
    NonPositive,
    NotMember,
    NotSubalgebra,
    PreconditionFailed,
)
from .semigroup import NumericalSemigroup, RatLike, _as_fraction


@dataclass(frozen=True)
class AperySet:
    """Sorted exponents not divisible by any nonzero coefficient exponent."""

    exponents: tuple[int, ...]
    bound_used: int

    def __len__(self) -> int:
        return len(self.exponents)

    def __iter__(self):
        return iter(self.exponents)

    def __contains__(self, x: int) -> bool:
        return x in set(self.exponents)


@dataclass(frozen=True)
class DeltaSet:
    """All non-negative pairwise differences of Apery exponents."""

    differences: tuple[int, ...]

    def __iter__(self):
        return iter(self.differences)


@dataclass(frozen=True)
class DoubleRepresentation:
    """One exponent with two distinct (coefficient, Apery) splittings."""

    exponent: int
    first: tuple[int, int]
    second: tuple[int, int]


@dataclass(frozen=True)
class FlatnessVerdict:
    is_flat: bool
    apery_count: int
    expected_count: int
    witness: DoubleRepresentation | None


class AlgebraPair:
    """Extension semigroup over a coefficient semigroup, u = v**t.

    Attributes:
        coefficient / extension: the semigroups as given (their own scales).
        scale_t: the variable change t with t * coefficient inside extension.
        common_scale: sigma mapping both sides to one integer model; an
            integer exponent x corresponds to the rational exponent x / sigma.
        C / E: integer models of t * coefficient and of the extension.
        d / d_prime: contents of C and E.
    """

    def __init__(
        self,
        coefficient_gens: list[RatLike] | tuple[RatLike, ...],
        extension_gens: list[RatLike] | tuple[RatLike, ...],
        scale_t: RatLike = 1,
    ):
        t = _as_fraction(scale_t)
        if t <= 0:
            raise NonPositive(f"scale t={t} is not positive")
        self.coefficient = NumericalSemigroup(coefficient_gens)
        self.extension = NumericalSemigroup(extension_gens)
        self.scale_t = t

        scaled_coeff = [t * g for g in self.coefficient.given_generators]
        ext = self.extension.given_generators
        sigma = lcm(*(g.denominator for g in scaled_coeff + list(ext)))
        self.common_scale = Fraction(sigma)
        self.C = NumericalSemigroup([int(g * sigma) for g in scaled_coeff])
        self.E = NumericalSemigroup([int(g * sigma) for g in ext])

        for g in self.C.minimal_generators:
            if not self.E.contains_int(g):
                raise NotSubalgebra(
                    f"coefficient exponent {Fraction(g, sigma)} "
                    f"(scaled {g}) is not in the extension {self.E}"
                )
        self.d = self.C.content
        self.d_prime = self.E.content
        if self.d % self.d_prime:
            raise InternalInconsistency("content of C not divisible by content of E")

    # -- Apery data --------------------------------------------------------

    @cached_property
    def apery_set(self) -> AperySet:
        """Exponents s in E with s - m outside E for every nonzero m in C.

        Testing the minimal generators of C suffices: if s - m is in E for a
        composite m = g + c, then s - g = (s - m) + c is in E as well, since
        C is contained in E.  Every s >= conductor(E) + multiplicity(C) has
        s - multiplicity(C) in E, so the enumeration below is complete.
        """
        bound = self.E.conductor + self.C.multiplicity
        coeff_gens = self.C.minimal_generators
        exps = tuple(
            s
            for s in self.E.members_below(bound)
            if not any(self.E.contains_int(s - g) for g in coeff_gens if g <= s)
        )
        if not exps or exps[0] != 0:
            raise InternalInconsistency("0 must be an Apery exponent")
        if len(exps) < self.d // self.d_prime:
            raise InternalInconsistency("fewer Apery exponents than d/d'")
        return AperySet(exps, bound)

    @cached_property
    def minimal_monomials(self) -> tuple[int, ...]:
        """Nonzero Apery exponents that are no sum of two nonzero E-members.

        A member is such a sum exactly when it is not a minimal generator
        of E, so the scan reduces to a set intersection.
        """
        gens = set(self.E.minimal_generators)
        return tuple(s for s in self.apery_set.exponents if s and s in gens)

    def representations(self, s: int) -> list[tuple[int, int]]:
        """All splittings s = s0 + w with s0 in C and w Apery, by s0."""
        if not self.E.contains_int(s):
            raise NotMember(f"{s} is not in the extension {self.E}")
        reps = sorted(
            (s - w, w)
            for w in self.apery_set.exponents
            if w <= s and self.C.contains_int(s - w)
        )
        if not reps:
            raise InternalInconsistency(f"no representation found for {s}")
        return reps

    @cached_property
    def delta_set(self) -> DeltaSet:
        exps = self.apery_set.exponents
        return DeltaSet(
            tuple(sorted({a - b for a in exps for b in exps if a >= b}))
        )

    # -- flatness ----------------------------------------------------------

    @cached_property
    def flatness(self) -> FlatnessVerdict:
        """Flat iff the Apery count equals d/d'.

        The count criterion and the difference-set criterion (every Apery
        difference divisible by d lies in C) are both evaluated and must
        agree; a mismatch is a bug.  For a non-flat pair the witness exponent
        is built from the lexicographically smallest congruent pair of Apery
        exponents and the smallest shift available in C.
        """
        exps = self.apery_set.exponents
        expected = self.d // self.d_prime
        flat_by_count = len(exps) == expected
        flat_by_delta = all(
            self.C.contains_int(delta)
            for delta in self.delta_set.differences
            if delta % self.d == 0
        )
        if flat_by_count != flat_by_delta:
            raise InternalInconsistency(
                "count and difference-set flatness criteria disagree"
            )
        witness = None if flat_by_count else self._double_representation()
        return FlatnessVerdict(flat_by_count, len(exps), expected, witness)

    @property
    def is_flat(self) -> bool:
        return self.flatness.is_flat

    def _double_representation(self) -> DoubleRepresentation:
        exps = self.apery_set.exponents
        pair = next(
            (
                (w2, w1)
                for w2 in exps
                for w1 in exps
                if w2 < w1 and (w1 - w2) % self.d == 0
            ),
            None,
        )
        if pair is None:
            raise InternalInconsistency("non-flat pair without congruent exponents")
        w2, w1 = pair
        delta = w1 - w2
        # Some member at or just above the conductor of C admits the shift,
        # so the bounded search below always succeeds.
        shift = next(
            c
            for c in self.C.members_below(self.C.conductor + self.d + 1)
            if self.C.contains_int(c + delta)
        )
        witness = DoubleRepresentation(
            exponent=shift + w1,
            first=(shift, w1),
            second=(shift + delta, w2),
        )
        if witness.first[0] + witness.first[1] != witness.second[0] + witness.second[1]:
            raise InternalInconsistency("witness representations do not agree")
        return witness


def make_pair(
    coefficient_gens: list[RatLike] | tuple[RatLike, ...],
    extension_gens: list[RatLike] | tuple[RatLike, ...],
    scale_t: RatLike = 1,
) -> AlgebraPair:
    """Build and validate an algebra pair from rational generators."""
    return AlgebraPair(coefficient_gens, extension_gens, scale_t)


def check_flat_intersection(pair: AlgebraPair) -> bool:
    """Whether C equals E intersected with the multiples of d.

    A necessary condition for flatness.  Any multiple of d at or above the
    conductor of C lies in C, so only exponents below that conductor are
    scanned.
    """
    return all(
        pair.C.contains_int(x)
        for x in range(0, pair.C.conductor, pair.d)
        if pair.E.contains_int(x)
    )


def common_divisor_condition(pair: AlgebraPair) -> bool:
    """Minimal coefficient generators inside T share only the divisor 0.

    T is the semigroup generated by the minimal monomials.  Failure implies
    the pair is not flat; success decides nothing.
    """
    monomials = pair.minimal_monomials
    if not monomials:
        return True
    T = NumericalSemigroup(monomials)
    inside = [g for g in pair.C.minimal_generators if T.contains_int(g)]
    for i, a in enumerate(inside):
        for b in inside[i + 1 :]:
            common = set(T.divisors_in(a)) & set(T.divisors_in(b))
            if common != {0}:
                return False
    return True


def check_flat_root(R: NumericalSemigroup, s: int, m: int) -> bool:
    """Flatness of the algebra joining one m-th root of u**s to R.

    Requires R integer-generated with content 1 and gcd(s, m) = 1; the
    answer is then simply membership of s in R.
    """
    if R.scale != 1 or R.content != 1:
        raise PreconditionFailed("R must be integer-generated with content 1")
    if s <= 0 or m <= 0 or gcd(s, m) != 1:
        raise PreconditionFailed(f"s={s}, m={m} must be positive and coprime")
    return R.contains_int(s)


def check_flat_two_gen(
    R_gens: list[int] | tuple[int, ...], s1: int, s2: int
) -> bool:
    """Flatness test for a two-monomial extension of R.

    With gcd(s1, s2) = 1 and the integer model of R inside <s1, s2>, the
    algebra is flat iff R is principal or R = <a1*s1, a2*s2> with a1 | s2
    and a2 | s1.
    """
    if gcd(s1, s2) != 1:
        raise PreconditionFailed(f"gcd({s1},{s2}) != 1")
    R = NumericalSemigroup(R_gens)
    if R.scale != 1:
        raise PreconditionFailed("R must be integer-generated")
    span = NumericalSemigroup([s1, s2])
    for g in R.minimal_generators:
        if not span.contains_int(g):
            raise PreconditionFailed(f"{g} is not in <{s1},{s2}>")
    mg = R.minimal_generators
    if len(mg) == 1:
        return True
    if len(mg) != 2:
        return False
    g1, g2 = mg
    for x1, x2 in ((s1, s2), (s2, s1)):
        if g1 % x1 == 0 and g2 % x2 == 0:
            a1, a2 = g1 // x1, g2 // x2
            if x2 % a1 == 0 and x1 % a2 == 0:
                return True
    return False
