"""Brute-force reference implementations.

These exist to cross-check the optimized paths in tests and in the `oracle`
CLI subcommand.  They share nothing with the main path beyond raw semigroup
membership, stay as close to the definitions as possible, and are allowed
to be slow.
"""

from __future__ import annotations

from itertools import product

from .algebra import AlgebraPair
from .errors import BoundTooSmall, NotMember, TooLarge


def apery_by_definition(pair: AlgebraPair, bound: int) -> list[int]:
    """Apery exponents by the raw definition: a double loop over s and m."""
    minimum = pair.E.conductor + pair.C.multiplicity
    if bound < minimum:
        raise BoundTooSmall(f"bound {bound} below the complete bound {minimum}")
    coeff_members = [m for m in range(1, bound) if pair.C.contains_int(m)]
    out = []
    for s in range(bound):
        if not pair.E.contains_int(s):
            continue
        divisible = False
        for m in coeff_members:
            if m > s:
                break
            if pair.E.contains_int(s - m):
                divisible = True
                break
        if not divisible:
            out.append(s)
    return out


def _own_apery(pair: AlgebraPair) -> list[int]:
    return apery_by_definition(pair, pair.E.conductor + pair.C.multiplicity)


def _own_minimal_monomials(pair: AlgebraPair) -> list[int]:
    apery = _own_apery(pair)
    out = []
    for s in apery:
        if s == 0:
            continue
        decomposable = any(
            pair.E.contains_int(a) and pair.E.contains_int(s - a)
            for a in range(1, s)
        )
        if not decomposable:
            out.append(s)
    return out


def all_factorizations(pair: AlgebraPair, s: int) -> list[tuple[int, tuple[int, ...]]]:
    """Every way to write s as a coefficient exponent plus a sum of minimal
    monomials, as (s0, multiplicities)."""
    if not pair.E.contains_int(s):
        raise NotMember(f"{s} is not in the extension")
    monomials = _own_minimal_monomials(pair)
    out = []

    def rec(idx: int, remaining: int, partial: list[int]) -> None:
        if idx == len(monomials):
            if pair.C.contains_int(remaining):
                out.append((remaining, tuple(partial)))
            return
        step = monomials[idx]
        for a in range(remaining // step + 1):
            rec(idx + 1, remaining - a * step, partial + [a])

    rec(0, s, [])
    return sorted(out)


def unique_representation_scan(pair: AlgebraPair) -> int | None:
    """Smallest exponent with two or more representations, if any.

    Counts representations for every exponent up to
    conductor(C) + d + max(Apery); if a double representation exists at all,
    one exists below that bound, so None certifies uniqueness everywhere.
    """
    apery = _own_apery(pair)
    bound = pair.C.conductor + pair.C.content + max(apery) + 1
    counts = [0] * bound
    coeff_members = [m for m in range(bound) if pair.C.contains_int(m)]
    for w in apery:
        for m in coeff_members:
            if w + m >= bound:
                break
            counts[w + m] += 1
    for s, k in enumerate(counts):
        if k >= 2:
            return s
    return None


def rectangle_by_exhaustion(pair: AlgebraPair) -> list[tuple[int, ...]]:
    """All rectangle sizes by trying every ordered factorization, no pruning."""
    apery = set(_own_apery(pair))
    if len(apery) > 10**5:
        raise TooLarge(f"Apery set of size {len(apery)}")
    monomials = _own_minimal_monomials(pair)
    if not monomials:
        return [()]
    out = []
    for sizes in _tuples_with_product(len(apery), len(monomials)):
        box = [
            sum(l * s for l, s in zip(vec, monomials))
            for vec in product(*(range(b) for b in sizes))
        ]
        if len(set(box)) == len(apery) and set(box) == apery:
            out.append(sizes)
    return sorted(out)


def _tuples_with_product(m: int, n: int):
    if n == 0:
        if m == 1:
            yield ()
        return
    for f in range(2, m + 1):
        if m % f == 0:
            for rest in _tuples_with_product(m // f, n - 1):
                yield (f, *rest)
