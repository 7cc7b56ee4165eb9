"""Theorem-driven classification of algebra pairs.

The decision chain is deliberately conservative: a verdict of "unknown" is
kept for flat rectangular pairs whose rectangles are all singular and which
no side theorem covers.  Justifications carry stable rule identifiers so
callers can assert which theorem fired.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgebraPair, AperySet, FlatnessVerdict, make_pair
from .errors import InternalInconsistency
from .rectangle import BetaMatrix, Rectangle, beta_matrix, find_rectangles
from .semigroup import NumericalSemigroup, glue

CI = "ci"
NOT_CI = "not_ci"
UNKNOWN = "unknown"

# rule identifiers for justification chains
NOT_FLAT = "NOT_FLAT"
NO_RECTANGLE = "NO_RECTANGLE"
THM_MAIN = "THM_MAIN"
N1_TRIVIAL = "N1_TRIVIAL"
N2_TRIANGULAR = "N2_TRIANGULAR"
THM_3MIN = "THM_3MIN"
N4_PRINCIPAL = "N4_PRINCIPAL"
ALL_SINGULAR_OPEN = "ALL_SINGULAR_OPEN"


@dataclass(frozen=True)
class RectangleAnalysis:
    rectangle: Rectangle
    matrix: BetaMatrix | None  # None when the pair is not flat


@dataclass(frozen=True)
class ClassificationReport:
    pair: AlgebraPair
    apery: AperySet
    minimal_monomials: tuple[int, ...]
    flat: FlatnessVerdict
    rectangles: tuple[RectangleAnalysis, ...]
    gorenstein_indicator: bool
    ci: str
    justification: tuple[str, ...]
    unknown_reason: str | None

    @property
    def rectangular(self) -> bool:
        return bool(self.rectangles)


def classify(pair: AlgebraPair) -> ClassificationReport:
    """Flatness, rectangles, matrices and the complete-intersection verdict.

    Chain: not flat -> not_ci; flat without rectangle -> unknown; any
    non-singular rectangle -> ci; n <= 3 must already be covered by the
    previous rule (asserted); n = 4 with principal coefficient generated
    inside the minimal monomials -> ci; otherwise unknown.
    """
    flat = pair.flatness
    rects = find_rectangles(pair)
    analyses = tuple(
        RectangleAnalysis(r, beta_matrix(pair, r) if flat.is_flat else None)
        for r in rects
    )
    gorenstein = gorenstein_indicator(pair)
    monomials = pair.minimal_monomials
    n = len(monomials)

    unknown_reason = None
    if not flat.is_flat:
        ci, justification = NOT_CI, [NOT_FLAT]
    elif not rects:
        ci, justification = UNKNOWN, [NO_RECTANGLE]
        unknown_reason = "flat, but the Apery set admits no rectangle"
    else:
        justification = []
        if any(a.matrix.nonsingular for a in analyses):
            ci = CI
            justification.append(THM_MAIN)
        else:
            ci = None
        if n <= 3:
            # small-rectangle theorems; their failure means a bug, not input
            if ci is None:
                raise InternalInconsistency(
                    f"flat rectangular pair with n={n} but only singular rectangles"
                )
            for a in analyses:
                if a.matrix.triangular_permutation is None:
                    raise InternalInconsistency(
                        f"flat rectangular pair with n={n} and a "
                        "non-triangularizable matrix"
                    )
            justification.append(
                N1_TRIVIAL if n <= 1 else N2_TRIANGULAR if n == 2 else THM_3MIN
            )
        if ci is None:
            if n == 4 and _principal_coefficient_inside(pair):
                ci = CI
                justification.append(N4_PRINCIPAL)
            else:
                ci = UNKNOWN
                justification.append(ALL_SINGULAR_OPEN)
                unknown_reason = (
                    "flat and rectangular, but every rectangle is singular "
                    "and no side theorem applies"
                )

    if ci == CI and (not flat.is_flat or not justification):
        raise InternalInconsistency("ci verdict without flatness or a rule")
    if ci == NOT_CI and flat.is_flat:
        raise InternalInconsistency("not_ci verdict on a flat pair")
    return ClassificationReport(
        pair=pair,
        apery=pair.apery_set,
        minimal_monomials=monomials,
        flat=flat,
        rectangles=analyses,
        gorenstein_indicator=gorenstein,
        ci=ci,
        justification=tuple(justification),
        unknown_reason=unknown_reason,
    )


def _principal_coefficient_inside(pair: AlgebraPair) -> bool:
    if len(pair.C.minimal_generators) != 1:
        return False
    span = NumericalSemigroup(pair.minimal_monomials)
    return span.contains_int(pair.C.minimal_generators[0])


def gorenstein_indicator(pair: AlgebraPair) -> bool:
    """Unique maximal Apery exponent under the division order w <= w' iff
    w' - w in E."""
    exps = pair.apery_set.exponents
    maximal = [
        w
        for w in exps
        if not any(w2 != w and pair.E.contains_int(w2 - w) for w2 in exps)
    ]
    return len(maximal) == 1


def bresinsky_c(gens4: list[int] | tuple[int, ...]) -> tuple[int, ...]:
    """For each generator, the least multiple landing in the span of the
    other three."""
    gens = list(gens4)
    if len(gens) != 4 or any(g <= 0 for g in gens):
        raise ValueError("need 4 positive integers")
    out = []
    for i, s in enumerate(gens):
        others = NumericalSemigroup([g for j, g in enumerate(gens) if j != i])
        n = 1
        while not others.contains_int(n * s):
            n += 1
        out.append(n)
    return tuple(out)


@dataclass(frozen=True)
class BresinskyData:
    c: tuple[int, ...]
    relation: tuple[tuple[tuple[int, int], tuple[int, int]], tuple[int, ...]] | None
    symmetric: bool
    degenerate: bool  # fewer than 4 minimal generators

    def __post_init__(self):
        if self.relation is not None:
            (_, alphas) = self.relation
            if any(not 0 < a < c for a, c in zip(alphas, self.c)):
                raise InternalInconsistency("relation exponent out of (0, c_i)")


def bresinsky_relation_search(gens4: list[int] | tuple[int, ...]) -> BresinskyData:
    """Exhaustive search for a balanced two-against-two monomial relation.

    All three complementary pairings are searched with exponents alpha_i in
    (0, c_i).  For a symmetric four-generator semigroup, absence of such a
    relation supports the complete-intersection property.
    """
    gens = list(gens4)
    c = bresinsky_c(gens)
    S = NumericalSemigroup(gens)
    symmetric = S.is_symmetric()
    degenerate = len(S.minimal_generators) != 4
    pairings = (((0, 2), (1, 3)), ((0, 1), (2, 3)), ((0, 3), (1, 2)))
    for (i, k), (j, l) in pairings:
        left = {}
        for ai in range(1, c[i]):
            for ak in range(1, c[k]):
                left.setdefault(ai * gens[i] + ak * gens[k], (ai, ak))
        for aj in range(1, c[j]):
            for al in range(1, c[l]):
                hit = left.get(aj * gens[j] + al * gens[l])
                if hit is not None:
                    alphas = [0, 0, 0, 0]
                    alphas[i], alphas[k] = hit
                    alphas[j], alphas[l] = aj, al
                    return BresinskyData(
                        c, (((i, k), (j, l)), tuple(alphas)), symmetric, degenerate
                    )
    return BresinskyData(c, None, symmetric, degenerate)


def gluing_apery_product_check(
    S: NumericalSemigroup, T: NumericalSemigroup, p: int, q: int
) -> bool:
    """Apery exponents of a gluing factor as a product of the two sides.

    With coprime p in S and q in T, compares the Apery set of q*S + p*T over
    the principal coefficient p*q against {q*w1 + p*w2} for w1, w2 ranging
    over the Apery exponents of S over p and of T over q.  Both sides are
    enumerated independently.
    """
    glued = glue(S, T, q, p)  # q*S + p*T; propagates GluingInvalid
    left = make_pair([p], S.int_generators, 1)
    right = make_pair([q], T.int_generators, 1)
    combined = sorted(
        {
            q * w1 + p * w2
            for w1 in left.apery_set.exponents
            for w2 in right.apery_set.exponents
        }
    )
    whole = make_pair([p * q], glued.int_generators, 1)
    return tuple(combined) == whole.apery_set.exponents and len(combined) == len(
        left.apery_set.exponents
    ) * len(right.apery_set.exponents)
