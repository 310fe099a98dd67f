"""Sparse exterior algebra over an n-dimensional vector space.

A Form of degree k stores a dict mapping strictly increasing index
tuples (1-based) to exact coefficients.  Wedge products, interior
products and linear substitutions are all exact; coefficients may be
Fraction, QuadExt or Poly and are mixed freely through the scalar
tower in scalars.py.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .scalars import Poly, QuadExt, as_scalar, scalar_is_zero, scalar_str


def sort_with_sign(indices: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Sort indices, returning (sorted tuple, permutation sign).

    Sign is 0 when an index repeats.  Insertion sort keeps the parity
    bookkeeping obvious; tuples here have length at most 7.
    """
    idx = list(indices)
    sign = 1
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(idx, idx[1:]):
        if a == b:
            return tuple(idx), 0
    return tuple(idx), sign


class Form:
    """Exterior form of a single degree on an n-dimensional space."""

    __slots__ = ("dim", "degree", "terms")

    def __init__(self, dim: int, degree: int, terms: Mapping[tuple, object]):
        clean: dict[tuple, object] = {}
        for idx, c in terms.items():
            idx = tuple(idx)
            if len(idx) != degree:
                raise ValueError(
                    f"index {idx} has length {len(idx)}, expected {degree}"
                )
            if any(not (1 <= i <= dim) for i in idx):
                raise ValueError(f"index {idx} out of range for dim {dim}")
            if any(a >= b for a, b in zip(idx, idx[1:])):
                raise ValueError(f"index {idx} is not strictly increasing")
            c = as_scalar(c)
            if not scalar_is_zero(c):
                clean[idx] = c
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Form is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, dim: int, degree: int) -> "Form":
        return cls(dim, degree, {})

    @classmethod
    def monomial(cls, dim: int, indices: Sequence[int], coeff=1) -> "Form":
        idx, sign = sort_with_sign(indices)
        if sign == 0:
            return cls.zero(dim, len(indices))
        return cls(dim, len(indices), {idx: sign * Fraction(1) * coeff})

    @classmethod
    def from_terms(cls, dim: int, degree: int,
                   pairs: Iterable[tuple[Sequence[int], object]]) -> "Form":
        acc: dict[tuple, object] = {}
        for indices, c in pairs:
            idx, sign = sort_with_sign(indices)
            if sign == 0:
                continue
            cur = acc.get(idx, 0)
            acc[idx] = cur + sign * c
        return cls(dim, degree, acc)

    # -- basics --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, indices: Sequence[int]):
        idx, sign = sort_with_sign(indices)
        if sign == 0:
            return Fraction(0)
        c = self.terms.get(idx)
        if c is None:
            return Fraction(0)
        return sign * c

    def __eq__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        return (self.dim == other.dim and self.degree == other.degree
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.dim, self.degree,
                     frozenset(self.terms.items())))

    # -- linear structure -----------------------------------------------

    def _check_compat(self, other: "Form"):
        if self.dim != other.dim:
            raise ValueError("forms live on spaces of different dimension")
        if self.degree != other.degree:
            raise ValueError(
                f"cannot add a {self.degree}-form and a {other.degree}-form"
            )

    def __add__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        self._check_compat(other)
        terms = dict(self.terms)
        for idx, c in other.terms.items():
            acc = terms.get(idx, 0) + c
            if scalar_is_zero(as_scalar(acc)):
                terms.pop(idx, None)
            else:
                terms[idx] = acc
        return Form(self.dim, self.degree, terms)

    def __sub__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Form(self.dim, self.degree,
                    {idx: -c for idx, c in self.terms.items()})

    def __mul__(self, scalar):
        if isinstance(scalar, Form):
            return NotImplemented
        return Form(self.dim, self.degree,
                    {idx: c * scalar for idx, c in self.terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if isinstance(scalar, Form):
            return NotImplemented
        return Form(self.dim, self.degree,
                    {idx: c / scalar for idx, c in self.terms.items()})

    # -- multiplicative structure ----------------------------------------

    def wedge(self, other: "Form") -> "Form":
        if self.dim != other.dim:
            raise ValueError("forms live on spaces of different dimension")
        deg = self.degree + other.degree
        if deg > self.dim:
            return _zero_over(self.dim, deg)
        terms: dict[tuple, object] = {}
        for i1, c1 in self.terms.items():
            for i2, c2 in other.terms.items():
                idx, sign = sort_with_sign(i1 + i2)
                if sign == 0:
                    continue
                acc = terms.get(idx, 0) + sign * c1 * c2
                if scalar_is_zero(as_scalar(acc)):
                    terms.pop(idx, None)
                else:
                    terms[idx] = acc
        return Form(self.dim, deg, terms)

    def __xor__(self, other):
        """a ^ b is the wedge product; mirrors the notation on paper."""
        if isinstance(other, Form):
            return self.wedge(other)
        return NotImplemented

    def contract(self, vector: Sequence) -> "Form":
        """Interior product with a vector given by coordinates.

        The vector is a length-dim sequence of exact scalars in the
        frame dual to the coframe the form is written in.
        """
        if len(vector) != self.dim:
            raise ValueError("vector length does not match dimension")
        if self.degree == 0:
            return Form.zero(self.dim, 0)
        terms: dict[tuple, object] = {}
        for idx, c in self.terms.items():
            for pos, i in enumerate(idx):
                v = vector[i - 1]
                v = as_scalar(v)
                if scalar_is_zero(v):
                    continue
                rest = idx[:pos] + idx[pos + 1:]
                sign = -1 if pos % 2 else 1
                acc = terms.get(rest, 0) + sign * v * c
                if scalar_is_zero(as_scalar(acc)):
                    terms.pop(rest, None)
                else:
                    terms[rest] = acc
        return Form(self.dim, self.degree - 1, terms)

    def contract_basis(self, i: int) -> "Form":
        """Interior product with the i-th frame vector (1-based)."""
        vec = [0] * self.dim
        vec[i - 1] = 1
        return self.contract(vec)

    def evaluate2(self, x: Sequence, y: Sequence):
        """Evaluate a 2-form on a pair of vectors."""
        if self.degree != 2:
            raise ValueError("evaluate2 needs a 2-form")
        return as_scalar(self.contract(x).contract(y).coefficient(()))

    def top_coefficient(self, nu: "Form"):
        """Write a top-degree form as c * nu and return c.

        nu must be a nonzero top-degree monomialish reference volume,
        i.e. a single-term top form.
        """
        if self.degree != self.dim or nu.degree != nu.dim:
            raise ValueError("top_coefficient needs top-degree forms")
        if len(nu.terms) != 1:
            raise ValueError("reference volume must have a single term")
        ((idx, c0),) = nu.terms.items()
        c = self.terms.get(idx, Fraction(0))
        return as_scalar(c / c0 if not isinstance(c0, QuadExt) else c * c0.inverse())

    # -- substitutions ----------------------------------------------------

    def apply_linear(self, rows: Sequence[Sequence]) -> "Form":
        """Substitute e^i -> sum_j rows[i-1][j-1] e^j in every term.

        rows is a dim x dim matrix of exact scalars: row i gives the
        image of the i-th coframe element.
        """
        n = self.dim
        images = []
        for r in rows:
            if len(r) != n:
                raise ValueError("substitution matrix has wrong shape")
            images.append(Form(n, 1, {(j + 1,): as_scalar(r[j])
                                      for j in range(n)
                                      if not scalar_is_zero(as_scalar(r[j]))}))
        out = _zero_over(n, self.degree)
        for idx, c in self.terms.items():
            prod = Form(n, 0, {(): Fraction(1)})
            for i in idx:
                prod = prod.wedge(images[i - 1])
            out = out + prod * c
        return out

    def map_coefficients(self, fn: Callable) -> "Form":
        return Form(self.dim, self.degree,
                    {idx: fn(c) for idx, c in self.terms.items()})

    def lift(self, dim: int) -> "Form":
        """Reinterpret on a larger space (same index meaning)."""
        if dim < self.dim:
            raise ValueError("cannot lift to a smaller space")
        return Form(dim, self.degree, dict(self.terms))

    def variables(self) -> set[str]:
        out: set[str] = set()
        for c in self.terms.values():
            if isinstance(c, Poly):
                out |= c.variables()
        return out

    def substitute(self, values: Mapping[str, object]) -> "Form":
        def sub(c):
            if isinstance(c, Poly):
                return c.substitute(values)
            return c
        return self.map_coefficients(sub)

    # -- rendering --------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for idx in sorted(self.terms):
            c = as_scalar(self.terms[idx])
            body = "e" + "".join(str(i) for i in idx) if idx else "1"
            if isinstance(c, Poly) or isinstance(c, QuadExt):
                cs = scalar_str(c)
                pieces.append(f"({cs})*{body}" if idx else f"({cs})")
            elif c == 1 and idx:
                pieces.append(body)
            elif c == -1 and idx:
                pieces.append("-" + body)
            else:
                cs = scalar_str(c)
                pieces.append(f"{cs}*{body}" if idx else cs)
        out = ""
        for p in pieces:
            if not out:
                out = p
            elif p.startswith("-"):
                out += " - " + p[1:]
            else:
                out += " + " + p
        return out

    def __repr__(self):
        return f"Form({self.dim}, {self.degree}, {self!s})"


def _zero_over(dim: int, degree: int) -> Form:
    """Zero form of any degree, including degrees above dim."""
    z = Form.__new__(Form)
    object.__setattr__(z, "dim", dim)
    object.__setattr__(z, "degree", degree)
    object.__setattr__(z, "terms", {})
    return z


def standard_volume(dim: int) -> Form:
    """The coordinate volume form e^{1...dim}."""
    return Form(dim, dim, {tuple(range(1, dim + 1)): Fraction(1)})


def basis_monomials(dim: int, degree: int) -> list[tuple[int, ...]]:
    """All strictly increasing index tuples, lexicographically."""
    from itertools import combinations

    return [tuple(c) for c in combinations(range(1, dim + 1), degree)]
