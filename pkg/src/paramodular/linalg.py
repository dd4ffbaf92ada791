"""Exact linear algebra over the rationals.

Matrices are lists of rows, vectors are tuples of ``Fraction``. A subspace
is stored as a tuple of basis vectors in reduced row echelon form, so two
equal subspaces of the same ambient space compare equal.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple
Matrix = list


def as_matrix(rows: Iterable[Iterable]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def zeros(n: int, m: int | None = None) -> Matrix:
    m = n if m is None else m
    return [[Fraction(0)] * m for _ in range(n)]


def identity(n: int) -> Matrix:
    out = zeros(n)
    for i in range(n):
        out[i][i] = Fraction(1)
    return out


def transpose(a: Matrix) -> Matrix:
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return [[Fraction(sum(x * y for x, y in zip(row, col) if x and y)) for col in bt] for row in a]


def matvec(a: Matrix, v: Sequence) -> Vector:
    return tuple(Fraction(sum(x * y for x, y in zip(row, v) if x and y)) for row in a)


def matpow(a: Matrix, e: int) -> Matrix:
    out = identity(len(a))
    for _ in range(e):
        out = matmul(out, a)
    return out


def is_zero_matrix(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)


def rref(rows: Iterable[Sequence]) -> tuple[Vector, ...]:
    """Nonzero rows of the reduced row echelon form."""
    work = [[x if type(x) is Fraction else Fraction(x) for x in r] for r in rows]
    if not work:
        return ()
    ncols = len(work[0])
    pivot_row = 0
    for col in range(ncols):
        pr = next((r for r in range(pivot_row, len(work)) if work[r][col] != 0), None)
        if pr is None:
            continue
        work[pivot_row], work[pr] = work[pr], work[pivot_row]
        piv = work[pivot_row][col]
        if piv != 1:
            work[pivot_row] = [x / piv for x in work[pivot_row]]
        for r in range(len(work)):
            if r != pivot_row and work[r][col] != 0:
                f = work[r][col]
                work[r] = [x - f * y if y else x for x, y in zip(work[r], work[pivot_row])]
        pivot_row += 1
        if pivot_row == len(work):
            break
    return tuple(tuple(r) for r in work[:pivot_row])


def rank(a: Matrix) -> int:
    return len(rref(a))


def span(vectors: Iterable[Sequence], dim: int) -> tuple[Vector, ...]:
    vecs = [v for v in vectors]
    if not vecs:
        return ()
    assert all(len(v) == dim for v in vecs)
    return rref(vecs)


def image(a: Matrix) -> tuple[Vector, ...]:
    """Column space of ``a``."""
    return rref(transpose(a))


def kernel(a: Matrix, ncols: int | None = None) -> tuple[Vector, ...]:
    """Basis of the null space {v : a v = 0}, returned in rref."""
    n = ncols if ncols is not None else (len(a[0]) if a else 0)
    red = rref(a) if a else ()
    pivots = []
    for row in red:
        pivots.append(next(i for i, x in enumerate(row) if x != 0))
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return rref(basis) if basis else ()


def subspace_sum(u: Sequence[Vector], w: Sequence[Vector], dim: int) -> tuple[Vector, ...]:
    return span(list(u) + list(w), dim)


def intersect(u: Sequence[Vector], w: Sequence[Vector], dim: int) -> tuple[Vector, ...]:
    if not u or not w:
        return ()
    # solve sum a_i u_i = sum b_j w_j
    cols = [list(x) for x in u] + [[-y for y in x] for x in w]
    system = transpose(cols)
    sol = kernel(system, len(cols))
    k = len(u)
    vecs = []
    for s in sol:
        v = [Fraction(0)] * dim
        for coeff, basis_vec in zip(s[:k], u):
            if coeff:
                v = [a + coeff * b for a, b in zip(v, basis_vec)]
        vecs.append(v)
    return span(vecs, dim)


def contains(big: Sequence[Vector], small: Sequence[Vector]) -> bool:
    if not small:
        return True
    return len(rref(list(big) + list(small))) == len(big)


def apply(a: Matrix, subspace: Sequence[Vector], dim: int) -> tuple[Vector, ...]:
    """Image of a subspace under ``a``."""
    return span([matvec(a, v) for v in subspace], dim)


def preimage(a: Matrix, subspace: Sequence[Vector], dim: int) -> tuple[Vector, ...]:
    """{v : a v in subspace}."""
    # v is in the preimage iff (a v) has zero component off the subspace:
    # kernel of [a | -S^T] projected onto the first block.
    s = list(subspace)
    cols = transpose(a) + [[-x for x in b] for b in s]
    system = transpose(cols)
    sol = kernel(system, dim + len(s))
    return span([v[:dim] for v in sol], dim) if sol else ()
