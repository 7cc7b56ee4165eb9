"""Numerical semigroups generated by finitely many positive rationals.

A semigroup is normalized once at construction: the scale ``sigma`` (lcm of
the generator denominators) maps the rational generators onto an integer
model, on which membership is decided by a dynamic-programming table.  All
arithmetic is exact; values are immutable after construction and safe to
share across threads.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .errors import EmptyGenerators, GluingInvalid, NonPositive, NotMember

RatLike = Fraction | int | str


def _as_fraction(value: RatLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


class NumericalSemigroup:
    """Monoid generated by finitely many positive rationals.

    Attributes:
        given_generators: the generators as passed in, reduced Fractions.
        scale: sigma, the lcm of generator denominators; ``sigma * g`` is an
            integer for every generator.
        int_generators: sorted distinct integer generators ``sigma * g``.
        content: gcd of the integer generators.
        minimal_generators: integer generators reachable by no sum of two
            nonzero members.
        conductor: smallest c >= 0 such that every x >= c with content | x
            belongs to the integer model.
    """

    def __init__(self, generators: list[RatLike] | tuple[RatLike, ...]):
        gens = [_as_fraction(g) for g in generators]
        if not gens:
            raise EmptyGenerators("need at least one generator")
        for g in gens:
            if g <= 0:
                raise NonPositive(f"generator {g} is not positive")
        self.given_generators: tuple[Fraction, ...] = tuple(gens)
        sigma = lcm(*(g.denominator for g in gens))
        self.scale: Fraction = Fraction(sigma)
        self.int_generators: tuple[int, ...] = tuple(
            sorted({int(g * sigma) for g in gens})
        )
        self.content: int = gcd(*self.int_generators)

        # Membership table for the content-divided copy (gcd 1), plus the
        # index from which every integer in the copy is a member.
        self._reduced_gens = tuple(g // self.content for g in self.int_generators)
        self._table, self._all_from = _membership_table(self._reduced_gens)

        if self._all_from == 0:
            self.conductor: int = 0
        else:
            self.conductor = self.content * (self._all_from - 1) + 1

        self.multiplicity: int = self.int_generators[0]
        self.minimal_generators: tuple[int, ...] = tuple(
            g for g in self.int_generators if not self._is_sum_of_two(g)
        )

    # -- membership ------------------------------------------------------

    def contains_int(self, x: int) -> bool:
        """Membership of ``x`` in the integer model."""
        if x < 0 or x % self.content:
            return False
        q = x // self.content
        if q >= self._all_from:
            return True
        return bool(self._table[q])

    def contains(self, x: RatLike) -> bool:
        """Membership of the rational ``x`` in the semigroup itself."""
        v = _as_fraction(x) * self.scale
        if v.denominator != 1:
            return False
        return self.contains_int(v.numerator)

    def members_below(self, bound: int) -> list[int]:
        """All integer-model members in ``[0, bound)``, ascending."""
        return [
            x
            for x in range(0, max(bound, 0), self.content)
            if self.contains_int(x)
        ]

    # -- derived data ----------------------------------------------------

    def _is_sum_of_two(self, g: int) -> bool:
        # g = a + b with a, b nonzero members; both are multiples of content.
        q = g // self.content
        return any(
            self._member_reduced(a) and self._member_reduced(q - a)
            for a in range(1, q)
        )

    def _member_reduced(self, q: int) -> bool:
        if q < 0:
            return False
        if q >= self._all_from:
            return True
        return bool(self._table[q])

    def divisors_in(self, s: int) -> list[int]:
        """All t with t and s - t both in the integer model.

        Contains 0 (the trivial divisor) and s itself.
        """
        if not self.contains_int(s):
            raise NotMember(f"{s} is not in {self}")
        step = self.content
        return [
            t
            for t in range(0, s + 1, step)
            if self.contains_int(t) and self.contains_int(s - t)
        ]

    def is_symmetric(self) -> bool:
        """Symmetry of the content-divided copy.

        True iff exactly one of x, F - x is a member for every
        0 <= x <= F, where F is the Frobenius number of the divided copy.
        """
        frobenius = self._all_from - 1
        return all(
            self._member_reduced(x) != self._member_reduced(frobenius - x)
            for x in range(0, frobenius + 1)
        )

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return (
            self.scale == other.scale
            and self.minimal_generators == other.minimal_generators
        )

    def __hash__(self) -> int:
        return hash((self.scale, self.minimal_generators))

    def __repr__(self) -> str:
        gens = ",".join(str(Fraction(g, int(self.scale))) for g in self.minimal_generators)
        return f"<{gens}>"


def normalize(generators: list[RatLike] | tuple[RatLike, ...]) -> NumericalSemigroup:
    """Build a semigroup from positive rational generators."""
    return NumericalSemigroup(generators)


def _membership_table(gens: tuple[int, ...]) -> tuple[bytearray, int]:
    """DP membership table for integer generators with gcd 1.

    Returns (table, all_from) where table[q] decides membership for
    q < all_from and every q >= all_from is a member.
    """
    mult = gens[0]
    if mult == 1:
        return bytearray(b"\x01"), 0
    bound = 2 * gens[-1] + 2
    while True:
        table = bytearray(bound)
        table[0] = 1
        for x in range(mult, bound):
            for g in gens:
                if g > x:
                    break
                if table[x - g]:
                    table[x] = 1
                    break
        run_start = _run_of_members(table, mult)
        if run_start is not None:
            all_from = _first_gapless_index(table, run_start)
            return table[:all_from], all_from
        bound *= 2


def _run_of_members(table: bytearray, length: int) -> int | None:
    run = 0
    for x, member in enumerate(table):
        run = run + 1 if member else 0
        if run == length:
            return x - length + 1
    return None


def _first_gapless_index(table: bytearray, run_start: int) -> int:
    # Smallest index from which the table holds no further gap; a run of
    # ``multiplicity`` members guarantees everything past run_start is in.
    x = run_start
    while x > 0 and table[x - 1]:
        x -= 1
    return x


def glue(
    S: NumericalSemigroup,
    T: NumericalSemigroup,
    p: int,
    q: int,
    relaxed: bool = False,
) -> NumericalSemigroup:
    """The semigroup p*S + q*T.

    Strict mode enforces the gluing preconditions: S, T integer-generated,
    q in S, p in T, gcd(p, q) = 1, p not a minimal generator of T and q not
    a minimal generator of S.  Relaxed mode drops the two minimal-generator
    conditions and returns the plain sum.
    """
    if S.scale != 1 or T.scale != 1:
        raise GluingInvalid("both semigroups must be integer-generated")
    if p <= 0 or q <= 0:
        raise GluingInvalid("p and q must be positive")
    if gcd(p, q) != 1:
        raise GluingInvalid(f"gcd({p},{q}) != 1")
    if not S.contains_int(q):
        raise GluingInvalid(f"q={q} is not in S={S}")
    if not T.contains_int(p):
        raise GluingInvalid(f"p={p} is not in T={T}")
    if not relaxed:
        if p in T.minimal_generators:
            raise GluingInvalid(f"p={p} is a minimal generator of T={T}")
        if q in S.minimal_generators:
            raise GluingInvalid(f"q={q} is a minimal generator of S={S}")
    return NumericalSemigroup(
        [p * g for g in S.int_generators] + [q * g for g in T.int_generators]
    )


def free_exponents(ordered_gens: list[int] | tuple[int, ...]) -> tuple[tuple[int, ...], bool]:
    """Stepwise exponents of a generator arrangement, plus freeness.

    phi_i is the least h >= 1 with h * s_i in the semigroup generated by the
    earlier generators s_0, ..., s_{i-1}.  The arrangement is free when the
    count of Apery numbers of the full semigroup with respect to s_0 equals
    the product of the phi_i.  The result depends on the arrangement.
    """
    gens = list(ordered_gens)
    if not gens:
        raise EmptyGenerators("need at least one generator")
    phi = []
    for i in range(1, len(gens)):
        prefix = NumericalSemigroup(gens[:i])
        h = 1
        while not prefix.contains_int(h * gens[i]):
            h += 1
        phi.append(h)

    total = NumericalSemigroup(gens)
    s0 = gens[0]
    count = sum(
        1
        for s in total.members_below(total.conductor + s0)
        if not total.contains_int(s - s0)
    )
    product = 1
    for f in phi:
        product *= f
    return tuple(phi), count == product
