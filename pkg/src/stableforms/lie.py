"""Lie algebras presented by coframe structure equations.

An n-dimensional algebra is stored as the tuple (d e^1, ..., d e^n) of
2-forms.  The differential extends to all degrees by the graded Leibniz
rule, the bracket is recovered from d e^k (e_i, e_j) = -e^k([e_i, e_j]),
and d^2 = 0 on generators is exactly the Jacobi identity.

Sign convention pinned by a regression test: d e^2 = -e^13 corresponds
to [e_1, e_3] = e_2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .forms import Form, basis_monomials
from .linalg import nullspace, rank, invert
from .scalars import Poly, as_scalar, scalar_is_zero


@dataclass(frozen=True)
class JacobiReport:
    """Result of checking d^2 = 0 on every coframe generator."""

    ok: bool
    failures: tuple[tuple[int, Form], ...] = ()

    def __str__(self) -> str:
        if self.ok:
            return "jacobi: ok"
        items = ", ".join(f"d2(e{k}) = {f}" for k, f in self.failures)
        return f"jacobi: FAILED ({items})"


@dataclass(frozen=True)
class ClosedFormBasis:
    """Basis of the closed k-forms of an algebra, in a fixed order."""

    dim: int
    degree: int
    forms: tuple[Form, ...]

    def __len__(self) -> int:
        return len(self.forms)

    def __iter__(self):
        return iter(self.forms)

    def __getitem__(self, i: int) -> Form:
        return self.forms[i]

    def generic(self, prefix: str) -> Form:
        """Linear combination with fresh polynomial coefficients.

        Coefficient names are prefix1, prefix2, ... in basis order.
        """
        total = Form.zero(self.dim, self.degree)
        for i, f in enumerate(self.forms, start=1):
            total = total + f * Poly.variable(f"{prefix}{i}")
        return total

    def coefficient_names(self, prefix: str) -> list[str]:
        return [f"{prefix}{i}" for i in range(1, len(self.forms) + 1)]

    def _matrix(self) -> list[list]:
        monos = basis_monomials(self.dim, self.degree)
        return [[f.coefficient(m) for m in monos] for f in self.forms]

    def contains(self, form: Form) -> bool:
        if form.degree != self.degree or form.dim != self.dim:
            return False
        monos = basis_monomials(self.dim, self.degree)
        mat = self._matrix()
        vec = [form.coefficient(m) for m in monos]
        return rank(mat) == rank(mat + [vec])

    def span_equals(self, other: "ClosedFormBasis") -> bool:
        if (self.dim, self.degree) != (other.dim, other.degree):
            return False
        a, b = self._matrix(), other._matrix()
        ra, rb = rank(a), rank(b)
        return ra == rb == rank(a + b)


@dataclass(frozen=True)
class LieAlgebra:
    """A Lie algebra given by the differentials of its coframe."""

    differentials: tuple[Form, ...]
    name: str | None = None
    params: tuple[str, ...] = ()

    def __post_init__(self):
        n = len(self.differentials)
        for k, f in enumerate(self.differentials, start=1):
            if f.dim != n or f.degree != 2:
                raise ValueError(
                    f"d e^{k} must be a 2-form on R^{n}, got "
                    f"degree {f.degree} on R^{f.dim}"
                )

    @property
    def dim(self) -> int:
        return len(self.differentials)

    def is_numeric(self) -> bool:
        return all(not f.variables() for f in self.differentials)

    def _require_numeric(self, what: str):
        if not self.is_numeric():
            raise ValueError(
                f"{what} requires a fully numeric algebra; substitute "
                f"parameters first"
            )

    def differential(self, form: Form) -> Form:
        """Chevalley-Eilenberg differential by the graded Leibniz rule."""
        if form.dim != self.dim:
            raise ValueError("form lives on a different dimension")
        out = Form.zero(self.dim, form.degree + 1)
        for idx, coeff in form.terms.items():
            for p, i in enumerate(idx):
                left = Form.monomial(self.dim, idx[:p], coeff)
                if p % 2:
                    left = -left
                right = Form.monomial(self.dim, idx[p + 1:])
                out = out + left.wedge(self.differentials[i - 1]).wedge(right)
        return out

    def jacobi_report(self) -> JacobiReport:
        failures = []
        for k in range(1, self.dim + 1):
            dd = self.differential(self.differentials[k - 1])
            if not dd.is_zero():
                failures.append((k, dd))
        return JacobiReport(not failures, tuple(failures))

    def bracket(self, i: int, j: int) -> list:
        """Coordinates of [e_i, e_j] in the frame."""
        if i == j:
            return [Fraction(0)] * self.dim
        out = []
        for k in range(1, self.dim + 1):
            c = self.differentials[k - 1].coefficient((i, j))
            out.append(as_scalar(-c))
        return out

    def is_unimodular(self) -> bool:
        """tr(ad_X) = 0 for every X, checked on the frame."""
        for j in range(1, self.dim + 1):
            tr = Fraction(0)
            for k in range(1, self.dim + 1):
                tr = tr + self.bracket(j, k)[k - 1]
            if not scalar_is_zero(as_scalar(tr)):
                return False
        return True

    def closed_forms(self, degree: int) -> ClosedFormBasis:
        """Kernel of d on degree-k forms, in a deterministic basis order."""
        self._require_numeric("closed_forms")
        monos = basis_monomials(self.dim, degree)
        target = basis_monomials(self.dim, degree + 1)
        columns = []
        for m in monos:
            columns.append(self.differential(Form.monomial(self.dim, m)))
        matrix = [[col.coefficient(t) for col in columns] for t in target]
        if not matrix:
            matrix = [[Fraction(0)] * len(monos)]
        kernel = nullspace(matrix)
        forms = []
        for vec in kernel:
            terms = {m: c for m, c in zip(monos, vec)
                     if not scalar_is_zero(as_scalar(c))}
            forms.append(Form(self.dim, degree, terms))
        return ClosedFormBasis(self.dim, degree, tuple(forms))

    def substitute(self, values: dict) -> "LieAlgebra":
        """Numeric (or partial) instantiation of the parameters."""
        diffs = tuple(f.substitute(values) for f in self.differentials)
        remaining = tuple(p for p in self.params if p not in values)
        return LieAlgebra(diffs, name=self.name, params=remaining)

    def extend_by_line(self) -> "LieAlgebra":
        """Direct sum with a 1-dimensional abelian factor."""
        n = self.dim
        diffs = [f.lift(n + 1) for f in self.differentials]
        diffs.append(Form.zero(n + 1, 2))
        new_name = f"{self.name}+R" if self.name else None
        return LieAlgebra(tuple(diffs), name=new_name, params=self.params)

    def change_basis(self, matrix) -> "LieAlgebra":
        """Structure equations in the new coframe f^i = sum_j M[i][j] e^j.

        M must be an invertible numeric matrix.  Returns the algebra
        presented by (d f^1, ..., d f^n) rewritten in the f-coframe.
        """
        n = self.dim
        inv = invert(matrix)
        new_diffs = []
        for i in range(n):
            df = Form.zero(n, 2)
            for j in range(n):
                c = matrix[i][j]
                if not scalar_is_zero(as_scalar(c)):
                    df = df + self.differentials[j] * c
            new_diffs.append(df.apply_linear(inv))
        return LieAlgebra(tuple(new_diffs), name=self.name,
                          params=self.params)


def direct_sum(g1: LieAlgebra, g2: LieAlgebra,
               name: str | None = None) -> LieAlgebra:
    """Direct sum; the second factor's frame indices are shifted up."""
    n1, n2 = g1.dim, g2.dim
    n = n1 + n2
    diffs = [f.lift(n) for f in g1.differentials]
    for f in g2.differentials:
        terms = {tuple(i + n1 for i in idx): c for idx, c in f.terms.items()}
        diffs.append(Form(n, 2, terms))
    return LieAlgebra(tuple(diffs), name=name,
                      params=tuple(g1.params) + tuple(g2.params))
