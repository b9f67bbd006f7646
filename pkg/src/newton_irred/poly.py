"""Dense integer polynomials with arbitrary-precision coefficients."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence


class PolyParseError(ValueError):
    """Raised when polynomial text cannot be parsed.

    ``position`` is the 0-based character offset of the offending token.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class IntPoly:
    """Polynomial ``a_0 + a_1 x + ... + a_n x^n`` over the integers.

    Coefficients are stored lowest degree first and normalized on
    construction: trailing (leading-degree) zeros are stripped, and the
    zero polynomial is ``(0,)``.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        cs = [int(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [0]
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def constant(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, c: int, k: int) -> IntPoly:
        return cls([0] * k + [c])

    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial."""
        return None if self.is_zero() else len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other: IntPoly) -> IntPoly:
        n = max(len(self), len(other))
        return IntPoly(self[i] + other[i] for i in range(n))

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        return mul(self, other)

    __rmul__ = __mul__

    def __call__(self, t: int) -> int:
        return evaluate(self, t)

    def __str__(self) -> str:
        return format_coeffs(self)

    def __repr__(self) -> str:
        return f"IntPoly({format_coeffs(self)!r})"

    def to_expr(self, var: str = "x") -> str:
        return format_expr(self, var)


PolyLike = IntPoly | str | Sequence[int]


def as_poly(obj: PolyLike) -> IntPoly:
    if isinstance(obj, IntPoly):
        return obj
    if isinstance(obj, str):
        return parse_poly(obj)
    return IntPoly(obj)


def mul(f: IntPoly, g: IntPoly) -> IntPoly:
    if f.is_zero() or g.is_zero():
        return IntPoly((0,))
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f.coeffs):
        if a:
            for j, b in enumerate(g.coeffs):
                out[i + j] += a * b
    return IntPoly(out)


def evaluate(f: IntPoly, t: int) -> int:
    acc = 0
    for c in reversed(f.coeffs):
        acc = acc * t + c
    return acc


def content_and_primitive(f: IntPoly) -> tuple[int, IntPoly]:
    """Split ``f`` into a positive content and a primitive part.

    The primitive part has positive leading coefficient, so
    ``content * primitive`` equals ``f`` up to sign.
    """
    if f.is_zero():
        raise ValueError("zero polynomial has no content")
    g = reduce(math.gcd, (abs(c) for c in f.coeffs))
    s = g if f.leading > 0 else -g
    return g, IntPoly(c // s for c in f.coeffs)


def reciprocal(f: IntPoly) -> IntPoly:
    """``x^deg(f) * f(1/x)``: coefficients reversed."""
    if f.is_zero():
        raise ValueError("reciprocal of the zero polynomial")
    return IntPoly(reversed(f.coeffs))


def factor_out_x(f: IntPoly) -> tuple[int, IntPoly]:
    """Return ``(k, g)`` with ``f = x^k * g`` and ``g(0) != 0``."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    k = 0
    while f.coeffs[k] == 0:
        k += 1
    return k, IntPoly(f.coeffs[k:])


def divmod_exact(f: IntPoly, g: IntPoly) -> IntPoly | None:
    """Quotient ``f / g`` if ``g`` divides ``f`` over the integers, else ``None``."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return f
    rem = list(f.coeffs)
    dg = len(g) - 1
    lc = g.leading
    q = [0] * max(len(rem) - dg, 1)
    for k in range(len(rem) - 1 - dg, -1, -1):
        c = rem[k + dg]
        if c == 0:
            continue
        if c % lc:
            return None
        c //= lc
        q[k] = c
        for j, b in enumerate(g.coeffs):
            rem[k + j] -= c * b
    if any(rem):
        return None
    return IntPoly(q)


# --- text I/O ---------------------------------------------------------------

_LIST_RE = re.compile(r"^\s*[+-]?\d+\s*$")
_INT_RE = re.compile(r"^[+-]?\d+$")
_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<sign>[+\-])
  | (?P<num>\d+)
  | (?P<star>\*(?!\*))
  | (?P<pow>\^|\*\*)
  | (?P<var>[xX])
    """,
    re.VERBOSE,
)


def parse_poly(text: str) -> IntPoly:
    """Parse ``"c0,c1,...,cn"`` or a sum of terms like ``3*x^2 - x + 7``.

    >>> parse_poly("4,6,4,1") == parse_poly("x^3 + 4x^2 + 6*x + 4")
    True
    """
    text = text.replace("−", "-")
    if not text.strip():
        raise PolyParseError("empty input", 0)
    if "," in text or _LIST_RE.match(text):
        return _parse_list(text)
    return _parse_expr(text)


def _parse_list(text: str) -> IntPoly:
    coeffs = []
    offset = 0
    for field in text.split(","):
        body = field.strip()
        if not _INT_RE.match(body):
            pos = offset + (len(field) - len(field.lstrip()) if body else 0)
            raise PolyParseError(f"malformed coefficient {body!r}", pos)
        coeffs.append(int(body))
        offset += len(field) + 1
    return IntPoly(coeffs)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise PolyParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            tokens.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def _parse_expr(text: str) -> IntPoly:
    tokens = _tokenize(text)
    terms: dict[int, int] = {}
    i = 0

    def expect(kind: str) -> tuple[str, str, int]:
        nonlocal i
        tok = tokens[i]
        if tok[0] != kind:
            what = tok[1] or "end of input"
            raise PolyParseError(f"expected {kind}, got {what!r}", tok[2])
        i += 1
        return tok

    first = True
    while True:
        kind, _, pos = tokens[i]
        sign = 1
        if kind == "sign":
            sign = -1 if tokens[i][1] == "-" else 1
            i += 1
        elif not first:
            if kind == "end":
                break
            raise PolyParseError("expected '+' or '-' between terms", pos)
        elif kind == "end":
            raise PolyParseError("empty input", pos)
        first = False

        coef = None
        if tokens[i][0] == "num":
            coef = int(tokens[i][1])
            i += 1
            if tokens[i][0] == "star":
                i += 1
                if tokens[i][0] != "var":
                    expect("var")
        exp = 0
        if tokens[i][0] == "var":
            i += 1
            exp = 1
            if tokens[i][0] == "pow":
                i += 1
                exp = int(expect("num")[1])
        elif coef is None:
            tok = tokens[i]
            raise PolyParseError(f"expected a term, got {tok[1] or 'end of input'!r}", tok[2])
        terms[exp] = terms.get(exp, 0) + sign * (1 if coef is None else coef)
        if tokens[i][0] == "end":
            break
    n = max(terms)
    return IntPoly(terms.get(k, 0) for k in range(n + 1))


def format_coeffs(f: IntPoly) -> str:
    """Canonical ``c0,c1,...,cn`` serialization."""
    return ",".join(str(c) for c in f.coeffs)


def format_expr(f: IntPoly, var: str = "x") -> str:
    """Human-readable form, highest degree first, e.g. ``x^2+2x+2``."""
    if f.is_zero():
        return "0"
    parts = []
    for k in range(len(f) - 1, -1, -1):
        c = f.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{a}{mono}"
        parts.append((sign, body))
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        out += sign + body
    return out
