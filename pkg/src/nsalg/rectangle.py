"""Rectangle structures on Apery sets and their integer matrices.

A rectangle presents the Apery set as a box of multi-exponents over the
minimal monomials; for flat pairs the box yields an integer matrix whose
determinant decides non-singularity.  Everything here is exact integer
arithmetic; no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .algebra import AlgebraPair
from .errors import InternalInconsistency, NotFlat, PreconditionFailed

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Rectangle:
    """Box of size beta_1 x ... x beta_n over the minimal monomials.

    The map l -> sum(l_i * s_i) is a bijection from the box onto the Apery
    set; the sizes refer to the minimal monomials in ascending order.
    """

    minimal_monomials: tuple[int, ...]
    sizes: tuple[int, ...]

    @cached_property
    def _decomposition(self) -> dict[int, tuple[int, ...]]:
        box = {}
        for vec in product(*(range(b) for b in self.sizes)):
            box[sum(l * s for l, s in zip(vec, self.minimal_monomials))] = vec
        return box

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(sorted(self._decomposition))

    def decompose(self, exponent: int) -> tuple[int, ...]:
        """Box coordinates of an Apery exponent."""
        try:
            return self._decomposition[exponent]
        except KeyError:
            raise InternalInconsistency(
                f"{exponent} is not a box element of {self.sizes}"
            ) from None


@dataclass(frozen=True)
class BetaMatrix:
    """Matrix with diagonal beta_i and off-diagonal -beta_ij, plus t-vector.

    Row i records the unique factorization of beta_i * s_i as a coefficient
    exponent t_i plus a box element; the exact relation M . s = t holds.
    """

    n: int
    matrix: Matrix
    t: tuple[int, ...]
    det: int
    adjugate: Matrix

    @property
    def nonsingular(self) -> bool:
        return self.det != 0

    @cached_property
    def triangular_permutation(self) -> tuple[int, ...] | None:
        return triangular_permutation(self.matrix)


def find_rectangles(pair: AlgebraPair) -> list[Rectangle]:
    """All rectangles on the Apery set, in ascending size order.

    Candidate size vectors are the ordered factorizations of the Apery count
    into factors >= 2 (one per minimal monomial), pruned by requiring every
    pure power l * s_i in the box to be Apery; survivors are verified by
    recomputing the whole box.  An empty list means not rectangular; the
    trivial rectangle is returned when the Apery set is just {0}.
    """
    apery = set(pair.apery_set.exponents)
    monomials = pair.minimal_monomials
    if not monomials:
        if apery != {0}:
            raise InternalInconsistency("no minimal monomials but Apery set > {0}")
        return [Rectangle((), ())]
    found = []
    for sizes in _ordered_factorizations(len(apery), len(monomials)):
        if any(
            l * s not in apery
            for s, b in zip(monomials, sizes)
            for l in range(b)
        ):
            continue
        seen = set()
        for vec in product(*(range(b) for b in sizes)):
            e = sum(l * s for l, s in zip(vec, monomials))
            if e not in apery or e in seen:
                break
            seen.add(e)
        else:
            if len(seen) == len(apery):
                found.append(Rectangle(monomials, sizes))
    return sorted(found, key=lambda r: r.sizes)


def _ordered_factorizations(m: int, n: int):
    """Ordered n-tuples of integers >= 2 with product m."""
    if n == 0:
        if m == 1:
            yield ()
        return
    f = 2
    while f * 2 ** (n - 1) <= m:
        if m % f == 0:
            for rest in _ordered_factorizations(m // f, n - 1):
                yield (f, *rest)
        f += 1


def beta_matrix(pair: AlgebraPair, rect: Rectangle) -> BetaMatrix:
    """Matrix of a rectangle of a flat pair.

    Row i comes from the unique representation of beta_i * s_i: its Apery
    part is box-decomposed into the off-diagonal entries and the coefficient
    part becomes t_i.  A nonzero diagonal box coordinate, a non-unique
    representation, or a broken relation M . s = t all signal bugs.
    """
    if not pair.is_flat:
        raise NotFlat("the matrix is defined only for flat rectangular pairs")
    monomials = rect.minimal_monomials
    sizes = rect.sizes
    n = len(monomials)
    rows = []
    t_vec = []
    for i in range(n):
        reps = pair.representations(sizes[i] * monomials[i])
        if len(reps) != 1:
            raise InternalInconsistency(
                f"flat pair with {len(reps)} representations of "
                f"{sizes[i] * monomials[i]}"
            )
        t_i, w = reps[0]
        coords = rect.decompose(w)
        if coords[i] != 0:
            raise InternalInconsistency(f"beta_{i}{i} != 0 in row {i}")
        rows.append(
            tuple(
                sizes[j] if j == i else -coords[j]
                for j in range(n)
            )
        )
        t_vec.append(t_i)
    matrix = tuple(rows)
    for i in range(n):
        if sum(matrix[i][j] * monomials[j] for j in range(n)) != t_vec[i]:
            raise InternalInconsistency(f"relation M.s = t fails in row {i}")
        if not pair.C.contains_int(t_vec[i]):
            raise InternalInconsistency(f"t_{i} = {t_vec[i]} is not in C")
    det, adj = det_and_adjugate(matrix)
    if det < 0 or any(x < 0 for row in adj for x in row):
        raise InternalInconsistency("negative determinant or adjugate entry")
    return BetaMatrix(n, matrix, tuple(t_vec), det, adj)


def det_and_adjugate(matrix) -> tuple[int, Matrix]:
    """Exact determinant and adjugate of a square integer matrix.

    The determinant uses fraction-free Bareiss elimination; adjugate entries
    are signed minors.  The identity M . adj = det . I is re-verified before
    returning.
    """
    rows = [list(map(int, row)) for row in matrix]
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise PreconditionFailed("matrix is not square")
    det = _bareiss_det(rows)
    adj = tuple(
        tuple(
            (-1) ** (i + j) * _bareiss_det(_minor(rows, j, i))
            for j in range(n)
        )
        for i in range(n)
    )
    for i in range(n):
        for j in range(n):
            acc = sum(rows[i][k] * adj[k][j] for k in range(n))
            if acc != (det if i == j else 0):
                raise InternalInconsistency("M . adj != det . I")
    return det, adj


def _minor(rows: list[list[int]], i: int, j: int) -> list[list[int]]:
    return [
        [x for cj, x in enumerate(row) if cj != j]
        for ci, row in enumerate(rows)
        if ci != i
    ]


def _bareiss_det(rows: list[list[int]]) -> int:
    n = len(rows)
    if n == 0:
        return 1
    m = [row[:] for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def is_nonsingular(b: BetaMatrix) -> bool:
    return b.det != 0


def lemma_matrix_check(matrix, s) -> bool:
    """Test harness for the positivity lemma.

    Hypotheses: positive diagonal, off-diagonal entries -beta_ij with
    0 <= beta_ij < beta_j, positive s with M . s >= 0 componentwise.
    Returns whether det >= 0 and every adjugate entry is >= 0 (the lemma
    asserts this always holds).
    """
    rows = [list(map(int, row)) for row in matrix]
    n = len(rows)
    svec = list(map(int, s))
    if len(svec) != n:
        raise PreconditionFailed("s has wrong length")
    if any(x <= 0 for x in svec):
        raise PreconditionFailed("s must be positive")
    for i in range(n):
        if len(rows[i]) != n:
            raise PreconditionFailed("matrix is not square")
        if rows[i][i] <= 0:
            raise PreconditionFailed(f"diagonal entry {i} not positive")
        for j in range(n):
            if i != j and not (0 <= -rows[i][j] < rows[j][j]):
                raise PreconditionFailed(
                    f"entry ({i},{j}) violates 0 <= beta_ij < beta_j"
                )
        if sum(rows[i][j] * svec[j] for j in range(n)) < 0:
            raise PreconditionFailed(f"(M . s)_{i} < 0")
    det, adj = det_and_adjugate(rows)
    return det >= 0 and all(x >= 0 for row in adj for x in row)


def triangular_permutation(matrix) -> tuple[int, ...] | None:
    """Index order making the matrix upper triangular, or None.

    A nonzero entry (i, j) forces i before j, so the orders are exactly the
    topological orders of that digraph; the smallest available index is
    taken first, making the result deterministic.  Equivalent to searching
    all permutations, without the factorial cost.
    """
    rows = [list(row) for row in matrix]
    n = len(rows)
    indegree = [0] * n
    for i in range(n):
        for j in range(n):
            if i != j and rows[i][j] != 0:
                indegree[j] += 1
    order = []
    placed = [False] * n
    for _ in range(n):
        pick = next(
            (j for j in range(n) if not placed[j] and indegree[j] == 0), None
        )
        if pick is None:
            return None
        placed[pick] = True
        order.append(pick)
        for j in range(n):
            if j != pick and not placed[j] and rows[pick][j] != 0:
                indegree[j] -= 1
    for a in range(n):
        for b in range(a):
            if rows[order[a]][order[b]] != 0:
                raise InternalInconsistency("permuted matrix is not triangular")
    return tuple(order)


def triangularizable(b: BetaMatrix) -> tuple[int, ...] | None:
    return b.triangular_permutation
