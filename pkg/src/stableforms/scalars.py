"""Exact scalar arithmetic: rationals, real quadratic extensions, polynomials.

Every computation in the package is exact.  The scalar tower has three
levels, each absorbing the one below it through the usual operator
protocol (int / Fraction -> QuadExt -> Poly):

  * ``Fraction`` from the stdlib for plain rational arithmetic,
  * ``QuadExt`` for numbers p + q*sqrt(d) with p, q rational and d a
    squarefree integer >= 2 (comparisons and sign tests are exact),
  * ``Poly`` for sparse multivariate polynomials whose coefficients are
    rationals or QuadExt values, used when parameters are left symbolic.

Only one radical is ever live at a time; mixing sqrt(2) with sqrt(3)
raises ScalarContextError rather than silently producing garbage.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union


class ScalarContextError(TypeError):
    """Raised when two exact scalars cannot live in a common field."""


Rational = Union[int, Fraction]


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not a rational value: {x!r}")


def exact_sqrt(x: Rational):
    """Return the exact rational square root of x, or None.

    Only nonnegative rationals can succeed.  ``exact_sqrt(Fraction(9,4))``
    gives ``Fraction(3,2)``; ``exact_sqrt(2)`` gives None.
    """
    x = _as_fraction(x)
    if x < 0:
        return None
    if x == 0:
        return Fraction(0)
    num = _isqrt_exact(x.numerator)
    if num is None:
        return None
    den = _isqrt_exact(x.denominator)
    if den is None:
        return None
    return Fraction(num, den)


def _isqrt_exact(n: int):
    import math

    r = math.isqrt(n)
    return r if r * r == n else None


def squarefree_split(n: int) -> tuple[int, int]:
    """Write a positive integer n as m^2 * d with d squarefree.

    Returns (m, d).  Trial division is fine at the sizes that occur here.
    """
    if n <= 0:
        raise ValueError("need a positive integer")
    m, d = 1, 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            m *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    d *= n
    return m, d


def sqrt_decomposition(x: Rational) -> tuple[Fraction, int]:
    """Write sqrt(x) for a positive rational x as m*sqrt(d).

    Returns (m, d) with m a positive rational and d a squarefree integer
    (d == 1 when x is a perfect square).
    """
    x = _as_fraction(x)
    if x <= 0:
        raise ValueError("need a positive rational")
    # sqrt(a/b) = sqrt(a*b)/b
    mn, dn = squarefree_split(x.numerator * x.denominator)
    return Fraction(mn, x.denominator), dn


class QuadExt:
    """An element p + q*sqrt(d) of the real quadratic field Q(sqrt(d)).

    d is a fixed squarefree integer >= 2.  Arithmetic between two QuadExt
    values with different d raises ScalarContextError.  Comparisons use
    the real embedding with sqrt(d) > 0, decided exactly by comparing
    p^2 against d*q^2.
    """

    __slots__ = ("p", "q", "d")

    def __init__(self, p: Rational, q: Rational, d: int):
        if not isinstance(d, int) or d < 2:
            raise ValueError("d must be an integer >= 2")
        object.__setattr__(self, "p", _as_fraction(p))
        object.__setattr__(self, "q", _as_fraction(q))
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt is immutable")

    # -- helpers ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise ScalarContextError(
                    f"cannot mix sqrt({self.d}) with sqrt({other.d})"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(other, 0, self.d)
        return None

    def is_rational(self) -> bool:
        return self.q == 0

    def rational_value(self) -> Fraction:
        if self.q != 0:
            raise ValueError(f"{self} is irrational")
        return self.p

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.p + o.p, self.q + o.q, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.p - o.p, self.q - o.q, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(o.p - self.p, o.q - self.q, self.d)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(
            self.p * o.p + self.d * self.q * o.q,
            self.p * o.q + self.q * o.p,
            self.d,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return QuadExt(-self.p, -self.q, self.d)

    def __pos__(self):
        return self

    def inverse(self) -> "QuadExt":
        n = self.p * self.p - self.d * self.q * self.q
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt(d))")
        return QuadExt(self.p / n, -self.q / n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = QuadExt(1, 0, self.d)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparisons --------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.q == 0 and self.p == other
        if isinstance(other, QuadExt):
            if other.d != self.d:
                return self.q == 0 and other.q == 0 and self.p == other.p
            return self.p == other.p and self.q == other.q
        return NotImplemented

    def __hash__(self):
        if self.q == 0:
            return hash(self.p)
        return hash((self.p, self.q, self.d))

    def sign(self) -> int:
        """Exact sign of p + q*sqrt(d) in the real embedding."""
        p, q = self.p, self.q
        if q == 0:
            return (p > 0) - (p < 0)
        if p == 0:
            return 1 if q > 0 else -1
        if p > 0 and q > 0:
            return 1
        if p < 0 and q < 0:
            return -1
        # Opposite signs: compare p^2 with d*q^2.
        lhs, rhs = p * p, self.d * q * q
        if p > 0:  # q < 0
            if lhs == rhs:
                return 0
            return 1 if lhs > rhs else -1
        # p < 0, q > 0
        if lhs == rhs:
            return 0
        return -1 if lhs > rhs else 1

    def _cmp(self, other) -> int:
        o = self._coerce(other)
        if o is None:
            raise TypeError(f"cannot compare QuadExt with {type(other)!r}")
        return (self - o).sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __bool__(self):
        return self.p != 0 or self.q != 0

    def __float__(self):
        return float(self.p) + float(self.q) * self.d ** 0.5

    def __repr__(self):
        return f"QuadExt({self.p!r}, {self.q!r}, {self.d})"

    def __str__(self):
        return scalar_str(self)


def quad_sqrt(x: Rational) -> Union[Fraction, QuadExt]:
    """Exact square root of a positive rational, as Fraction or QuadExt."""
    r = exact_sqrt(x)
    if r is not None:
        return r
    m, d = sqrt_decomposition(x)
    return QuadExt(0, m, d)


# ---------------------------------------------------------------------------
# Sparse multivariate polynomials
# ---------------------------------------------------------------------------

Mono = tuple  # tuple of (name, exponent) pairs, sorted by name


def _mono_mul(a: Mono, b: Mono) -> Mono:
    merged: dict[str, int] = {}
    for name, e in a:
        merged[name] = merged.get(name, 0) + e
    for name, e in b:
        merged[name] = merged.get(name, 0) + e
    return tuple(sorted((n, e) for n, e in merged.items() if e))


def _mono_deg(m: Mono) -> int:
    return sum(e for _, e in m)


def _mono_key(m: Mono):
    # Graded lexicographic order, largest first when sorting descending.
    return (_mono_deg(m), tuple((n, e) for n, e in m))


def _mono_divides(a: Mono, b: Mono) -> bool:
    db = dict(b)
    return all(db.get(n, 0) >= e for n, e in a)


def _mono_div(a: Mono, b: Mono) -> Mono:
    """a / b assuming b divides a."""
    db = dict(a)
    for n, e in b:
        db[n] = db.get(n, 0) - e
    return tuple(sorted((n, e) for n, e in db.items() if e))


def _is_plain(x) -> bool:
    return isinstance(x, (int, Fraction, QuadExt))


class Poly:
    """Sparse multivariate polynomial over Q or Q(sqrt(d)).

    Terms live in a dict mapping monomials (sorted tuples of
    (name, exponent) pairs) to nonzero coefficients.  Construction from
    a raw dict drops zeros; all arithmetic is exact.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Mono, object]):
        clean = {}
        for m, c in terms.items():
            if isinstance(c, int):
                c = Fraction(c)
            if c:
                clean[m] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def variable(cls, name: str) -> "Poly":
        return cls({((name, 1),): Fraction(1)})

    @classmethod
    def constant(cls, c) -> "Poly":
        if isinstance(c, Poly):
            return c
        return cls({(): c})

    # -- inspection ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(m == () for m in self.terms)

    def constant_value(self):
        """The value of a constant polynomial, as Fraction or QuadExt."""
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError(f"not a constant polynomial: {self}")
        return self.terms[()]

    def variables(self) -> set[str]:
        out: set[str] = set()
        for m in self.terms:
            for n, _ in m:
                out.add(n)
        return out

    def degree(self) -> int:
        if not self.terms:
            return 0
        return max(_mono_deg(m) for m in self.terms)

    def leading(self) -> tuple[Mono, object]:
        """Leading (monomial, coefficient) in graded-lex order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=_mono_key)
        return m, self.terms[m]

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if _is_plain(other):
            return Poly.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for m, c in o.terms.items():
            acc = terms.get(m, 0) + c
            if acc:
                terms[m] = acc
            else:
                terms.pop(m, None)
        return Poly(terms)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __pos__(self):
        return self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms: dict[Mono, object] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = _mono_mul(m1, m2)
                acc = terms.get(m, 0) + c1 * c2
                if acc:
                    terms[m] = acc
                else:
                    terms.pop(m, None)
        return Poly(terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = Poly.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __truediv__(self, other):
        """Division by a nonzero scalar only."""
        if _is_plain(other):
            if isinstance(other, QuadExt):
                inv = other.inverse()
            else:
                if other == 0:
                    raise ZeroDivisionError("polynomial divided by zero")
                inv = Fraction(1) / Fraction(other)
            return self * inv
        if isinstance(other, Poly) and other.is_constant():
            return self / other.constant_value()
        return NotImplemented

    def exact_div(self, other: "Poly") -> "Poly":
        """Exact polynomial division; raises if the remainder is nonzero.

        Used by fraction-free elimination, where divisibility is
        guaranteed by the algorithm.
        """
        if _is_plain(other):
            return self / other
        if other.is_zero():
            raise ZeroDivisionError("polynomial divided by zero polynomial")
        if other.is_constant():
            return self / other.constant_value()
        rem = self
        quot: dict[Mono, object] = {}
        lm, lc = other.leading()
        while not rem.is_zero():
            rm, rc = rem.leading()
            if not _mono_divides(lm, rm):
                raise ArithmeticError("exact_div: division is not exact")
            m = _mono_div(rm, lm)
            c = rc / lc if not isinstance(lc, QuadExt) else rc * lc.inverse()
            quot[m] = quot.get(m, 0) + c
            rem = rem - Poly({m: c}) * other
        return Poly(quot)

    # -- comparisons --------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms
        if _is_plain(other):
            if other == 0:
                return not self.terms
            return self.is_constant() and self.terms.get(()) == other
        return NotImplemented

    def __hash__(self):
        return hash(frozenset((m, c) for m, c in self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- evaluation / structure ----------------------------------------

    def substitute(self, values: Mapping[str, object]):
        """Substitute values (scalars or Poly) for some variables.

        Returns a Poly when variables remain, otherwise the plain scalar.
        """
        out = Poly.constant(0)
        for m, c in self.terms.items():
            term = Poly.constant(c)
            for name, e in m:
                if name in values:
                    v = values[name]
                    v = v if isinstance(v, Poly) else Poly.constant(v)
                    term = term * v ** e
                else:
                    term = term * Poly.variable(name) ** e
            out = out + term
        if out.is_constant():
            return out.constant_value()
        return out

    def split_linear(self) -> tuple[dict[str, object], object]:
        """Decompose an affine polynomial as (coefficients, constant).

        Raises ValueError when any term has total degree above one.
        """
        coeffs: dict[str, object] = {}
        const = Fraction(0)
        for m, c in self.terms.items():
            if _mono_deg(m) == 0:
                const = const + c
            elif _mono_deg(m) == 1:
                name = m[0][0]
                coeffs[name] = coeffs.get(name, Fraction(0)) + c
            else:
                raise ValueError(f"not affine: {self}")
        return coeffs, const

    def coefficient_of(self, name: str, power: int = 1) -> "Poly":
        """Coefficient of name**power, as a polynomial in the rest."""
        terms: dict[Mono, object] = {}
        for m, c in self.terms.items():
            dm = dict(m)
            if dm.get(name, 0) == power:
                dm.pop(name, None)
                mm = tuple(sorted(dm.items()))
                terms[mm] = terms.get(mm, 0) + c
        return Poly(terms)

    def __repr__(self):
        return f"Poly({scalar_str(self)})"

    def __str__(self):
        return scalar_str(self)


def as_scalar(x):
    """Normalize ints to Fraction, collapse constant Poly, pass the rest."""
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Poly) and x.is_constant():
        return x.constant_value()
    if isinstance(x, QuadExt) and x.is_rational():
        return x.p
    return x


def scalar_is_zero(x) -> bool:
    if isinstance(x, Poly):
        return x.is_zero()
    return x == 0


def scalar_sign(x) -> int:
    """Exact sign of a rational or QuadExt (not defined for Poly)."""
    x = as_scalar(x)
    if isinstance(x, QuadExt):
        return x.sign()
    if isinstance(x, Fraction):
        return (x > 0) - (x < 0)
    raise TypeError(f"sign undefined for {type(x)!r}")


def _frac_str(c: Fraction) -> str:
    return str(c)


def scalar_str(x) -> str:
    """Readable exact rendering: 3/2, 1+2*sqrt3, a*b^2 - 1, ..."""
    x = as_scalar(x)
    if isinstance(x, Fraction):
        return _frac_str(x)
    if isinstance(x, QuadExt):
        parts = []
        if x.p:
            parts.append(_frac_str(x.p))
        if x.q:
            if x.q == 1:
                qs = f"sqrt{x.d}"
            elif x.q == -1:
                qs = f"-sqrt{x.d}"
            else:
                qs = f"{_frac_str(x.q)}*sqrt{x.d}"
            if parts and not qs.startswith("-"):
                parts.append("+" + qs)
            else:
                parts.append(qs)
        if not parts:
            return "0"
        return "".join(parts)
    if isinstance(x, Poly):
        if not x.terms:
            return "0"
        monos = sorted(x.terms, key=_mono_key, reverse=True)
        out = ""
        for m in monos:
            c = as_scalar(x.terms[m])
            body = "*".join(
                name if e == 1 else f"{name}^{e}" for name, e in m
            )
            if isinstance(c, QuadExt) or (
                isinstance(c, Fraction) and c < 0
            ):
                cs = scalar_str(c)
                if isinstance(c, QuadExt) and (c.p and c.q):
                    cs = f"({cs})"
                piece = cs if not body else (
                    body if cs == "1" else f"{cs}*{body}"
                )
                if out and not piece.startswith("-"):
                    out += " + " + piece
                elif out:
                    out += " - " + piece[1:]
                else:
                    out += piece
            else:
                if not body:
                    piece = scalar_str(c)
                elif c == 1:
                    piece = body
                else:
                    piece = f"{scalar_str(c)}*{body}"
                out += (" + " + piece) if out else piece
        return out
    return str(x)


def scalar_to_json(x):
    """JSON-friendly exact rendering used by the CLI."""
    x = as_scalar(x)
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return int(x)
        return str(x)
    return scalar_str(x)
