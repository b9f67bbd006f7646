"""Independent ground truth for the polygon criteria.

Two checks live here. ``merge_polygons`` predicts the polygon of a product
from the polygons of its factors, and ``kronecker_factorize`` is an
exhaustive factor search over the integers that shares no code with the
polygon machinery.
"""

from __future__ import annotations

import enum
import math
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .poly import IntPoly, content_and_primitive, divmod_exact, evaluate, factor_out_x
from .polygon import NewtonPolygon
from .valuation import is_prime, primes_up_to


def merge_polygons(a: NewtonPolygon, b: NewtonPolygon) -> NewtonPolygon:
    """Polygon whose segment system is the slope-sorted union of both inputs'."""
    if a.prime != b.prime:
        raise ValueError(f"prime mismatch: {a.prime} vs {b.prime}")
    origin = a.vertices[0][1] + b.vertices[0][1]
    return NewtonPolygon.from_segments(a.prime, origin, a.segments + b.segments)


# --- integer helpers -----------------------------------------------------------

_SMALL_PRIMES = primes_up_to(1000)


def _pollard_brent(n: int, rng: random.Random) -> int:
    if n % 2 == 0:
        return 2
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorint(m: int) -> Counter:
    """Prime factorization of ``|m|`` (``m != 0``)."""
    m = abs(m)
    if m == 0:
        raise ValueError("cannot factor zero")
    out: Counter = Counter()
    for p in _SMALL_PRIMES:
        if p * p > m:
            break
        while m % p == 0:
            out[p] += 1
            m //= p
    stack = [m] if m > 1 else []
    rng = random.Random(m)
    while stack:
        n = stack.pop()
        if is_prime(n):
            out[n] += 1
            continue
        r = math.isqrt(n)
        if r * r == n:
            stack += [r, r]
            continue
        d = _pollard_brent(n, rng)
        stack += [d, n // d]
    return out


def _count_divisors(m: int) -> int:
    return math.prod(e + 1 for e in factorint(m).values())


def integer_divisors(m: int) -> list[int]:
    """All divisors of ``m`` with both signs, ordered by absolute value."""
    if m == 0:
        raise ValueError("zero has infinitely many divisors")
    divs = [1]
    for p, e in factorint(m).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return [s * d for d in sorted(divs) for s in (1, -1)]


def exact_interpolate(points: Sequence[tuple[int, int]]) -> IntPoly | None:
    """Unique polynomial of degree < len(points) through ``points``.

    Returns ``None`` when some coefficient is not an integer.
    """
    xs = [x for x, _ in points]
    if not points:
        raise ValueError("need at least one point")
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate abscissae")
    # Newton divided differences over the rationals.
    coef = [Fraction(y) for _, y in points]
    n = len(points)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)] * n
    for k in range(n - 1, -1, -1):
        # poly = poly * (x - xs[k]) + coef[k]
        nxt = [Fraction(0)] * n
        for i in range(n - 1):
            nxt[i + 1] += poly[i]
        for i in range(n):
            nxt[i] -= xs[k] * poly[i]
        nxt[0] += coef[k]
        poly = nxt
    if any(c.denominator != 1 for c in poly):
        return None
    return IntPoly(int(c) for c in poly)


# --- Kronecker factorization ------------------------------------------------------


class Status(str, enum.Enum):
    FACTORED = "Factored"
    IRREDUCIBLE = "Irreducible"
    LIMIT_EXCEEDED = "LimitExceeded"


@dataclass(frozen=True)
class Factorization:
    """``content * prod(f**m for f, m in factors)`` reproduces the input.

    For ``IRREDUCIBLE`` the single factor is the primitive part itself;
    for ``LIMIT_EXCEEDED`` ``factors`` is empty and ``limit`` names the
    limit that tripped.
    """

    status: Status
    content: int
    factors: tuple[tuple[IntPoly, int], ...] = ()
    limit: str | None = None

    @property
    def is_irreducible(self) -> bool:
        return self.status is Status.IRREDUCIBLE

    def expand(self) -> IntPoly:
        out = IntPoly((self.content,))
        for f, m in self.factors:
            for _ in range(m):
                out = out * f
        return out

    def __str__(self) -> str:
        if self.status is Status.LIMIT_EXCEEDED:
            return f"LimitExceeded ({self.limit})"
        if self.status is Status.IRREDUCIBLE:
            return "Irreducible"
        parts = [] if self.content == 1 else ["-" if self.content == -1 else str(self.content)]
        for f, m in self.factors:
            parts.append(f"({f.to_expr()})" + (f"^{m}" if m > 1 else ""))
        return "".join(parts) or "1"


class LimitExceeded(Exception):
    pass


def _sort_key(f: IntPoly):
    return (f.degree, f.coeffs)


def _evaluation_pool(f: IntPoly, size: int) -> tuple[list[int], list[int]]:
    """First ``size`` non-root integers in the order 0, 1, -1, 2, -2, ...

    Also returns the integer roots met along the way.
    """
    pool, roots = [], []
    t = 0
    while len(pool) < size:
        for s in ((t,) if t == 0 else (t, -t)):
            if evaluate(f, s) == 0:
                roots.append(s)
            else:
                pool.append(s)
        t += 1
    return pool[:size], roots


def _search_degree(f: IntPoly, d: int, pool: list[int], counts: dict[int, int], budget: int) -> IntPoly | None:
    """Look for a factor of exact degree ``d`` (``f`` primitive, ``f(0) != 0``)."""
    # nodes whose values have the fewest divisors keep the search small
    nodes = sorted(pool, key=lambda t: (counts[t], abs(t)))[: d + 1]
    if math.prod(2 * counts[t] for t in nodes) // 2 > budget:
        raise LimitExceeded(f"max_divisor_candidates={budget} at degree {d}")
    values = [evaluate(f, t) for t in nodes]
    choices = [integer_divisors(v) for v in values]
    choices[0] = [c for c in choices[0] if c > 0]  # h and -h are interchangeable
    lc = f.leading

    # rows[k][j] = divided difference over nodes j..k; an integer-coefficient
    # candidate keeps every entry integral, which prunes most tuples early.
    rows: list[list[int]] = []
    chosen: list[int] = []

    def extend(k: int) -> IntPoly | None:
        for y in choices[k]:
            row = [0] * (k + 1)
            row[k] = y
            ok = True
            for j in range(k - 1, -1, -1):
                num = row[j + 1] - rows[k - 1][j]
                den = nodes[k] - nodes[j]
                if num % den:
                    ok = False
                    break
                row[j] = num // den
            if not ok:
                continue
            if k == d:
                top = row[0]
                if top == 0 or lc % top:
                    continue
                h = exact_interpolate(list(zip(nodes, chosen + [y])))
                if h is None or h.degree != d:
                    continue
                if divmod_exact(f, h) is not None:
                    return h
                continue
            rows.append(row)
            chosen.append(y)
            found = extend(k + 1)
            rows.pop()
            chosen.pop()
            if found is not None:
                return found
        return None

    return extend(0)


def _split(f: IntPoly, start: int, pool_size: int, budget: int) -> list[IntPoly]:
    """Irreducible factors of a primitive ``f`` with ``f(0) != 0``, none of degree < ``start``."""
    n = f.degree
    if n <= 1:
        return [f] if n == 1 else []
    pool, roots = _evaluation_pool(f, pool_size)
    if roots:
        h = IntPoly((-roots[0], 1))
        return [h] + _split(divmod_exact(f, h), 1, pool_size, budget)
    counts = {t: _count_divisors(evaluate(f, t)) for t in pool}
    for d in range(max(start, 1), n // 2 + 1):
        h = _search_degree(f, d, pool, counts, budget)
        if h is not None:
            if h.leading < 0:
                h = -h
            return [h] + _split(divmod_exact(f, h), d, pool_size, budget)
    return [f]


def kronecker_factorize(
    f: IntPoly,
    max_degree: int = 8,
    max_divisor_candidates: int = 10**7,
) -> Factorization:
    """Factor ``f`` over the integers by Kronecker's method.

    For each degree ``d`` up to half the degree, ``d + 1`` evaluation
    points are picked from 0, 1, -1, 2, -2, ... (integer roots are split
    off as linear factors first), every sign/divisor tuple of the values
    is interpolated exactly, and integral candidates of degree ``d`` are
    trial-divided. The smallest-degree factor found is irreducible, and
    the search recurses on the cofactor.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    content, prim = content_and_primitive(f)
    sign = 1 if f.leading > 0 else -1
    content *= sign
    if prim.degree == 0:
        return Factorization(Status.FACTORED, content)
    if prim.degree > max_degree:
        return Factorization(Status.LIMIT_EXCEEDED, content, limit=f"max_degree={max_degree}")
    k, core = factor_out_x(prim)
    try:
        found = [IntPoly((0, 1))] * k + _split(core, 1, max(2 * core.degree + 8, 24), max_divisor_candidates)
    except LimitExceeded as exc:
        return Factorization(Status.LIMIT_EXCEEDED, content, limit=str(exc))
    found = [h if h.leading > 0 else -h for h in found]
    grouped = sorted(Counter(found).items(), key=lambda fm: _sort_key(fm[0]))
    if len(grouped) == 1 and grouped[0][1] == 1:
        return Factorization(Status.IRREDUCIBLE, content, tuple(grouped))
    return Factorization(Status.FACTORED, content, tuple(grouped))
