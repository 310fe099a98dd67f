"""Text syntax for forms, vectors, scalars and structure equations.

Grammar (whitespace-insensitive):

  * integers, fractions via '/', parameters by name (must be declared),
    'sqrtN' for an exact square root of a positive integer,
  * basis monomials 'e135' (1-based single-digit indices, any order,
    repeated index is an error),
  * '+', '-', '*', '/', parentheses; '*' may be omitted (juxtaposition):
    '2e16', 'a/2*e16', '(1-a)*e36', '(2+sqrt3)*e5'.

A product may involve at most one basis monomial; wedge products are
not part of the text syntax.  Structure equations are a parenthesized
comma-separated tuple, one 2-form (or 0) per coframe element:
'(e26,e36,0,e46,-e56,0)'.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from .forms import Form, sort_with_sign
from .scalars import Poly, QuadExt, as_scalar, scalar_is_zero, squarefree_split


class ParseError(ValueError):
    """Input text that does not match the form/scalar grammar."""


_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<word>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/(),]))"
)
_BASIS = re.compile(r"^e(\d+)$")
_SQRT = re.compile(r"^sqrt(\d+)$")


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"unexpected character {text[pos]!r} at {pos}")
        pos = m.end()
        if m.group("int"):
            tokens.append(("int", int(m.group("int")), m.start()))
        elif m.group("word"):
            w = m.group("word")
            bm = _BASIS.match(w)
            sm = _SQRT.match(w)
            if bm:
                tokens.append(("basis", bm.group(1), m.start()))
            elif sm:
                tokens.append(("sqrt", int(sm.group(1)), m.start()))
            else:
                tokens.append(("name", w, m.start()))
        else:
            tokens.append(("op", m.group("op"), m.start()))
    return tokens


# A parse value is a dict mapping index tuples (possibly ()) to scalars;
# () holds the pure-scalar part.


def _vadd(u: dict, v: dict) -> dict:
    out = dict(u)
    for k, c in v.items():
        acc = out.get(k, 0) + c
        if scalar_is_zero(as_scalar(acc)):
            out.pop(k, None)
        else:
            out[k] = acc
    return out


def _vneg(u: dict) -> dict:
    return {k: -c for k, c in u.items()}


def _scalar_of(u: dict, pos: int):
    for k in u:
        if k != ():
            raise ParseError(
                f"expected a scalar, found basis term near position {pos}"
            )
    return u.get((), Fraction(0))


def _vmul(u: dict, v: dict, pos: int) -> dict:
    u_has = any(k != () for k in u)
    v_has = any(k != () for k in v)
    if u_has and v_has:
        raise ParseError(
            f"a product may contain at most one basis monomial (position {pos})"
        )
    if u_has:
        u, v = v, u
    s = u.get((), Fraction(0))
    return {k: s * c for k, c in v.items()}


def _vdiv(u: dict, v: dict, pos: int) -> dict:
    s = _scalar_of(v, pos)
    s = as_scalar(s)
    if scalar_is_zero(s):
        raise ParseError(f"division by zero near position {pos}")
    if isinstance(s, Poly):
        raise ParseError(
            f"division by a parameter expression is not supported (position {pos})"
        )
    out = {}
    for k, c in u.items():
        if isinstance(s, QuadExt):
            out[k] = c * s.inverse()
        else:
            out[k] = c / s
    return out


class _Parser:
    def __init__(self, text: str, params: Sequence[str]):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.params = set(params)

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def next(self):
        t = self.peek()
        if t is None:
            raise ParseError(f"unexpected end of input in {self.text!r}")
        self.i += 1
        return t

    def expr(self) -> dict:
        sign = 1
        t = self.peek()
        if t and t[0] == "op" and t[1] in "+-":
            self.next()
            sign = -1 if t[1] == "-" else 1
        val = self.term()
        if sign < 0:
            val = _vneg(val)
        while True:
            t = self.peek()
            if t is None or t[0] != "op" or t[1] not in "+-":
                break
            self.next()
            rhs = self.term()
            val = _vadd(val, rhs if t[1] == "+" else _vneg(rhs))
        return val

    def term(self) -> dict:
        val = self.factor()
        while True:
            t = self.peek()
            if t is None:
                break
            if t[0] == "op" and t[1] in "*/":
                self.next()
                rhs = self.factor()
                if t[1] == "*":
                    val = _vmul(val, rhs, t[2])
                else:
                    val = _vdiv(val, rhs, t[2])
            elif t[0] in ("int", "name", "sqrt", "basis") or (
                t[0] == "op" and t[1] == "("
            ):
                pos = t[2]
                rhs = self.factor()
                val = _vmul(val, rhs, pos)
            else:
                break
        return val

    def factor(self) -> dict:
        t = self.peek()
        if t and t[0] == "op" and t[1] in "+-":
            self.next()
            inner = self.factor()
            return _vneg(inner) if t[1] == "-" else inner
        return self.atom()

    def atom(self) -> dict:
        t = self.next()
        kind, value, pos = t
        if kind == "int":
            return {(): Fraction(value)}
        if kind == "name":
            if value not in self.params:
                raise ParseError(
                    f"unknown parameter {value!r} at position {pos}"
                )
            return {(): Poly.variable(value)}
        if kind == "sqrt":
            if value <= 0:
                raise ParseError(f"sqrt of nonpositive integer at {pos}")
            m, d = squarefree_split(value)
            if d == 1:
                return {(): Fraction(m)}
            return {(): QuadExt(0, m, d)}
        if kind == "basis":
            digits = value
            if "0" in digits:
                raise ParseError(f"basis index 0 at position {pos}")
            indices = tuple(int(ch) for ch in digits)
            idx, sign = sort_with_sign(indices)
            if sign == 0:
                raise ParseError(
                    f"repeated basis index in e{digits} at position {pos}"
                )
            return {idx: Fraction(sign)}
        if kind == "op" and value == "(":
            inner = self.expr()
            t2 = self.next()
            if t2[0] != "op" or t2[1] != ")":
                raise ParseError(f"expected ')' at position {t2[2]}")
            return inner
        raise ParseError(f"unexpected token {value!r} at position {pos}")

    def finish(self, val: dict) -> dict:
        if self.peek() is not None:
            t = self.peek()
            raise ParseError(f"trailing input {t[1]!r} at position {t[2]}")
        return val


def _parse_value(text: str, params: Sequence[str]) -> dict:
    p = _Parser(text, params)
    return p.finish(p.expr())


def parse_scalar(text: str, params: Sequence[str] = ()):
    """Parse a pure scalar expression (no basis monomials)."""
    val = _parse_value(text, params)
    return as_scalar(_scalar_of(val, 0))


def parse_form(text: str, dim: int, degree: int,
               params: Sequence[str] = ()) -> Form:
    """Parse a homogeneous form of the given degree on R^dim."""
    text = text.strip()
    if text == "0":
        return Form.zero(dim, degree)
    val = _parse_value(text, params)
    terms = {}
    for idx, c in val.items():
        if idx == ():
            if not scalar_is_zero(as_scalar(c)):
                raise ParseError(
                    f"scalar term {c!s} in a degree-{degree} form: {text!r}"
                )
            continue
        if len(idx) != degree:
            raise ParseError(
                f"degree-{len(idx)} term e{''.join(map(str, idx))} in a "
                f"degree-{degree} form: {text!r}"
            )
        if any(i > dim for i in idx):
            raise ParseError(
                f"basis index beyond dimension {dim} in {text!r}"
            )
        terms[idx] = c
    return Form(dim, degree, terms)


def parse_vector(text: str, dim: int, params: Sequence[str] = ()) -> list:
    """Parse a vector written in frame notation, e.g. '(2+sqrt3)*e5+e6'."""
    val = _parse_value(text, params)
    coords = [Fraction(0)] * dim
    for idx, c in val.items():
        if idx == ():
            if not scalar_is_zero(as_scalar(c)):
                raise ParseError(f"scalar term in vector: {text!r}")
            continue
        if len(idx) != 1:
            raise ParseError(
                f"vector entries must be single frame elements: {text!r}"
            )
        if idx[0] > dim:
            raise ParseError(f"frame index beyond dimension {dim}: {text!r}")
        coords[idx[0] - 1] = as_scalar(coords[idx[0] - 1] + c)
    return coords


def split_tuple(text: str) -> list[str]:
    """Split a parenthesized comma tuple at top level."""
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ParseError("structure equations must be a parenthesized tuple")
    inner = text[1:-1]
    parts = []
    depth = 0
    cur = []
    for ch in inner:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced parentheses in tuple")
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth != 0:
        raise ParseError("unbalanced parentheses in tuple")
    parts.append("".join(cur))
    return [p.strip() for p in parts]


def parse_structure_equations(text: str, params: Sequence[str] = (),
                              name: str | None = None):
    """Parse '(e26,e36,0,e46,-e56,0)' into a LieAlgebra.

    Entry k is the differential of the k-th coframe element; the number
    of entries fixes the dimension (at most 9, single-digit indices).
    """
    from .lie import LieAlgebra

    parts = split_tuple(text)
    dim = len(parts)
    if dim < 1 or dim > 9:
        raise ParseError(f"dimension {dim} out of supported range 1..9")
    differentials = []
    for k, part in enumerate(parts, start=1):
        if part == "" or part == "0":
            differentials.append(Form.zero(dim, 2))
            continue
        try:
            differentials.append(parse_form(part, dim, 2, params))
        except ParseError as e:
            raise ParseError(f"entry {k} ({part!r}): {e}") from None
    return LieAlgebra(tuple(differentials), name=name,
                      params=tuple(params))
