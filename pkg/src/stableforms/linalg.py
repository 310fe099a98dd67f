"""Exact linear algebra over Fraction / QuadExt / Poly matrices.

Matrices are plain lists of lists.  Field operations (rref, nullspace,
det, invert) require invertible scalars, so they work over Fraction and
QuadExt entries.  Polynomial matrices go through fraction-free
elimination (Bareiss) and Cramer-style nullspace extraction; the
polynomial nullspace result carries a symbolic certificate that is
verified by multiplication before it is returned.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .scalars import Poly, QuadExt, as_scalar, scalar_is_zero


def _inv(c):
    c = as_scalar(c)
    if isinstance(c, QuadExt):
        return c.inverse()
    return Fraction(1) / c


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = Fraction(0)
            for t in range(k):
                acc = acc + a[i][t] * b[t][j]
            row.append(as_scalar(acc))
        out.append(row)
    return out


def mat_vec(a: Sequence[Sequence], v: Sequence) -> list:
    out = []
    for row in a:
        acc = Fraction(0)
        for c, x in zip(row, v):
            acc = acc + c * x
        out.append(as_scalar(acc))
    return out


def identity(n: int) -> list[list]:
    return [[Fraction(1) if i == j else Fraction(0) for j in range(n)]
            for i in range(n)]


def mat_scale(a: Sequence[Sequence], s) -> list[list]:
    return [[as_scalar(c * s) for c in row] for row in a]


def mat_add(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    return [[as_scalar(x + y) for x, y in zip(ra, rb)]
            for ra, rb in zip(a, b)]


def mat_eq(a: Sequence[Sequence], b: Sequence[Sequence]) -> bool:
    if len(a) != len(b):
        return False
    for ra, rb in zip(a, b):
        if len(ra) != len(rb):
            return False
        for x, y in zip(ra, rb):
            if not scalar_is_zero(as_scalar(x - y)):
                return False
    return True


def rref(matrix: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form over an exact field.

    Returns (R, pivot_columns).  Deterministic: scans columns left to
    right and picks the first nonzero entry as pivot.
    """
    m = [[as_scalar(c) for c in row] for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = None
        for i in range(r, rows):
            if not scalar_is_zero(m[i][c]):
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = _inv(m[r][c])
        m[r] = [as_scalar(x * inv) for x in m[r]]
        for i in range(rows):
            if i != r and not scalar_is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [as_scalar(x - f * y) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(matrix: Sequence[Sequence]) -> int:
    _, pivots = rref(matrix)
    return len(pivots)


def nullspace(matrix: Sequence[Sequence]) -> list[list]:
    """Basis of the right kernel over an exact field.

    One vector per free column, with 1 in the free slot; deterministic.
    """
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    if rows == 0:
        return [[Fraction(1) if i == j else Fraction(0) for i in range(cols)]
                for j in range(cols)]
    r, pivots = rref(matrix)
    pivset = set(pivots)
    free = [c for c in range(cols) if c not in pivset]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = as_scalar(-r[i][f])
        basis.append(v)
    return basis


def det(matrix: Sequence[Sequence]):
    """Determinant over an exact field by Gaussian elimination."""
    m = [[as_scalar(c) for c in row] for row in matrix]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant needs a square matrix")
    sign = 1
    acc = Fraction(1)
    for c in range(n):
        pivot = None
        for i in range(c, n):
            if not scalar_is_zero(m[i][c]):
                pivot = i
                break
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            sign = -sign
        acc = acc * m[c][c]
        inv = _inv(m[c][c])
        for i in range(c + 1, n):
            if not scalar_is_zero(m[i][c]):
                f = as_scalar(m[i][c] * inv)
                m[i] = [as_scalar(x - f * y) for x, y in zip(m[i], m[c])]
    return as_scalar(sign * acc)


def invert(matrix: Sequence[Sequence]) -> list[list]:
    """Inverse of a square matrix over an exact field."""
    n = len(matrix)
    aug = [[as_scalar(c) for c in row] + [Fraction(1) if i == j else Fraction(0)
                                          for j in range(n)]
           for i, row in enumerate(matrix)]
    r, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in r]


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> list | None:
    """One solution of A x = b over an exact field, or None."""
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    aug = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    r, pivots = rref(aug)
    if cols in pivots:
        return None
    x = [Fraction(0)] * cols
    for i, p in enumerate(pivots):
        x[p] = r[i][cols]
    return x


# ---------------------------------------------------------------------------
# Polynomial matrices
# ---------------------------------------------------------------------------


def _as_poly(c) -> Poly:
    if isinstance(c, Poly):
        return c
    return Poly.constant(as_scalar(c))


def poly_det(matrix: Sequence[Sequence]) -> Poly:
    """Determinant of a polynomial matrix, fraction-free (Bareiss).

    Intermediate entries stay polynomial because every division in the
    Bareiss recurrence is exact.
    """
    m = [[_as_poly(c) for c in row] for row in matrix]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return Poly.constant(1)
    sign = 1
    prev = Poly.constant(1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            pivot = None
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    pivot = i
                    break
            if pivot is None:
                return Poly.constant(0)
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num.exact_div(prev)
            m[i][k] = Poly.constant(0)
        prev = m[k][k]
    d = m[n - 1][n - 1]
    return d if sign == 1 else -d


def poly_mat_vec(matrix: Sequence[Sequence], v: Sequence) -> list[Poly]:
    out = []
    for row in matrix:
        acc = Poly.constant(0)
        for c, x in zip(row, v):
            acc = acc + _as_poly(c) * _as_poly(x)
        out.append(acc)
    return out


def poly_nullspace(matrix: Sequence[Sequence],
                   pivot_rows: Sequence[int],
                   pivot_cols: Sequence[int]) -> tuple[Poly, list[list[Poly]]]:
    """Certified kernel of a polynomial matrix with known generic pivots.

    The caller supplies r pivot rows and columns (found, e.g., by
    numeric probing).  Let D be the determinant of the pivot submatrix.
    For each non-pivot column f this produces the Cramer vector with
    D in slot f, which solves the pivot-row system exactly.  Before
    returning, two facts are verified symbolically:

      * D is not the zero polynomial, and
      * every returned vector is annihilated by the FULL matrix,
        not just the pivot rows.

    On success returns (D, vectors).  Raises ArithmeticError when the
    certificate fails, so a bad pivot guess can never produce a wrong
    answer silently.
    """
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    r = len(pivot_rows)
    if len(pivot_cols) != r:
        raise ValueError("pivot rows and columns must match in number")
    sub = [[_as_poly(matrix[i][j]) for j in pivot_cols] for i in pivot_rows]
    d = poly_det(sub)
    if d.is_zero():
        raise ArithmeticError("pivot submatrix is singular as a polynomial")
    free = [c for c in range(cols) if c not in set(pivot_cols)]
    vectors: list[list[Poly]] = []
    for f in free:
        # Solve sub * x = -column_f on the pivot rows by Cramer.
        rhs = [-_as_poly(matrix[i][f]) for i in pivot_rows]
        vec = [Poly.constant(0)] * cols
        vec[f] = d
        for t, pc in enumerate(pivot_cols):
            m2 = [[rhs[a] if b == t else sub[a][b] for b in range(r)]
                  for a in range(r)]
            vec[pc] = poly_det(m2)
        # Certificate: the full matrix must annihilate vec identically.
        img = poly_mat_vec(matrix, vec)
        for entry in img:
            if not entry.is_zero():
                raise ArithmeticError(
                    "nullspace certificate failed: matrix * vector != 0"
                )
        vectors.append(vec)
    return d, vectors


def gram_positive_definite(gram: Sequence[Sequence]) -> bool:
    """Exact positive-definiteness via leading principal minors.

    Works for Fraction and QuadExt entries (exact sign tests)."""
    from .scalars import scalar_sign

    n = len(gram)
    for k in range(1, n + 1):
        minor = [row[:k] for row in gram[:k]]
        if scalar_sign(det(minor)) <= 0:
            return False
    return True
