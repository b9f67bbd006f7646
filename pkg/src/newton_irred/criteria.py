"""Irreducibility tests driven by Newton polygons at one or more primes.

The two engines are the subset-sum test (every proper factor's smaller
degree must be a sum of segment widths at each prime) and the width-gcd
test (every factor degree is a multiple of the lcm of the per-prime width
gcds). Eisenstein and Dumas are kept as named single-prime special cases
so certificates can cite the most classical rule that applies.
"""

from __future__ import annotations

import enum
import json
import logging
import math
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Sequence

from .poly import IntPoly, content_and_primitive, factor_out_x, format_coeffs, parse_poly, reciprocal
from .polygon import NewtonPolygon, build_polygon, verify_vertex_conditions
from .valuation import INF, candidate_primes, is_prime, nu_p

log = logging.getLogger(__name__)


class Verdict(str, enum.Enum):
    IRREDUCIBLE = "Irreducible"
    INCONCLUSIVE = "Inconclusive"


class Rule(str, enum.Enum):
    EISENSTEIN = "Eisenstein"
    DUMAS = "DumasSinglePrime"
    THEOREM_B = "TheoremB"
    THEOREM_A = "TheoremA"
    LINEAR = "Linear"


@dataclass(frozen=True)
class DegreeSet:
    """Subset of ``{1, ..., n}``."""

    n: int
    members: frozenset[int] = frozenset()

    def __post_init__(self):
        if any(not 1 <= d <= self.n for d in self.members):
            raise ValueError(f"members must lie in 1..{self.n}")

    @classmethod
    def full(cls, n: int, cap: int | None = None) -> DegreeSet:
        return cls(n, frozenset(range(1, (n if cap is None else cap) + 1)))

    def __contains__(self, d: int) -> bool:
        return d in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __bool__(self) -> bool:
        return bool(self.members)

    def __and__(self, other: DegreeSet) -> DegreeSet:
        return DegreeSet(self.n, self.members & other.members)

    def __le__(self, other: DegreeSet) -> bool:
        return self.members <= other.members

    def sorted(self) -> list[int]:
        return sorted(self.members)


def subset_sum_degrees(widths: Iterable[int], cap: int, n: int | None = None) -> DegreeSet:
    """All sub-multiset sums of ``widths`` in ``[1, cap]``.

    Forward DP with the reachable sums packed into an int bitmask.
    """
    widths = list(widths)
    if cap < 1:
        raise ValueError("cap must be positive")
    if n is None:
        n = max(cap, sum(widths))
    mask = (1 << (cap + 1)) - 1
    reach = 1
    for w in widths:
        reach = (reach | (reach << w)) & mask
    return DegreeSet(n, frozenset(d for d in range(1, cap + 1) if reach >> d & 1))


def _check_core(f: IntPoly, min_degree: int = 1) -> int:
    n = f.degree
    if n is None or f.coeffs[0] == 0:
        raise ValueError("polynomial must have nonzero constant and leading terms")
    if n < min_degree:
        raise ValueError(f"degree must be at least {min_degree}")
    return n


def _check_primes(primes: Sequence[int]) -> list[int]:
    primes = list(primes)
    if len(set(primes)) != len(primes):
        raise ValueError(f"duplicate primes in {primes}")
    for p in primes:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
    return primes


def s_p(f: IntPoly, p: int) -> DegreeSet:
    n = _check_core(f, 2)
    return subset_sum_degrees(build_polygon(f, p).segment_widths(), n // 2, n)


def theorem_a_verdict(f: IntPoly, primes: Sequence[int]) -> tuple[Verdict, DegreeSet]:
    """Intersect the per-prime achievable-degree sets.

    The residual lists every degree ``<= n // 2`` that a proper factor
    could still have; an empty residual certifies irreducibility.
    """
    n = _check_core(f, 2)
    primes = _check_primes(primes)
    if not primes:
        raise ValueError("need at least one prime")
    residual = reduce(lambda a, b: a & b, (s_p(f, p) for p in primes))
    return (Verdict.INCONCLUSIVE if residual else Verdict.IRREDUCIBLE), residual


def d_p(f: IntPoly, p: int) -> int:
    _check_core(f)
    return math.gcd(*build_polygon(f, p).segment_widths())


def _lcm_and_quotient_form(n: int, ds: Sequence[int]) -> int:
    by_lcm = math.lcm(*ds) if ds else 1
    by_gcd = n // math.gcd(*(n // d for d in ds)) if ds else 1
    if by_lcm != by_gcd:
        raise AssertionError(f"lcm{tuple(ds)}={by_lcm} but n/gcd(n/d)={by_gcd} for n={n}")
    return by_lcm


def factor_degree_multiple(f: IntPoly, primes: Sequence[int]) -> int:
    """Integer dividing the degree of every factor of ``f``.

    Computed both as ``n / gcd(n/d_p, ...)`` and as ``lcm(d_p, ...)``;
    the two must agree.
    """
    n = _check_core(f)
    primes = _check_primes(primes)
    return _lcm_and_quotient_form(n, [d_p(f, p) for p in primes])


def theorem_b_verdict(f: IntPoly, primes: Sequence[int]) -> Verdict:
    n = _check_core(f)
    if factor_degree_multiple(f, primes) == n:
        return Verdict.IRREDUCIBLE
    return Verdict.INCONCLUSIVE


def _dumas_literal(f: IntPoly, p: int) -> bool:
    n = f.degree
    v = [nu_p(a, p) for a in f.coeffs]
    if v[0] != 0 or math.gcd(v[n], n) != 1:
        return False
    # nu(a_i)/i > nu(a_n)/n, denominators cleared
    return all(v[i] == INF or v[i] * n > i * v[n] for i in range(1, n))


def dumas_single_prime(f: IntPoly, p: int) -> bool:
    """Dumas' criterion applied to ``f`` or to its reciprocal."""
    _check_core(f)
    return _dumas_literal(f, p) or _dumas_literal(reciprocal(f), p)


def eisenstein(f: IntPoly, p: int) -> bool:
    n = f.degree
    if n is None or n < 1:
        return False
    a = f.coeffs
    return a[n] % p != 0 and all(c % p == 0 for c in a[:n]) and a[0] % (p * p) != 0


# --- certificates --------------------------------------------------------------


@dataclass(frozen=True)
class PrimeEvidence:
    prime: int
    polygon: NewtonPolygon
    d_p: int
    s_p: DegreeSet

    @property
    def informative(self) -> bool:
        return not self.polygon.is_flat()

    def to_dict(self) -> dict:
        return {
            "prime": self.prime,
            "vertices": [list(v) for v in self.polygon.vertices],
            "segment_widths": self.polygon.segment_widths(),
            "d_p": self.d_p,
            "s_p": self.s_p.sorted(),
        }


@dataclass(frozen=True)
class Certificate:
    """Verdict plus the evidence needed to re-check it.

    ``polynomial`` is the analysed core: the input divided by its content
    and by ``x^x_power``.
    """

    polynomial: IntPoly
    content: int
    x_power: int
    primes: tuple[int, ...]
    per_prime: tuple[PrimeEvidence, ...]
    verdict: Verdict
    fired_rule: Rule | None
    factor_degree_multiple: int
    residual_degrees: DegreeSet
    notes: tuple[str, ...] = field(default=(), compare=False)

    @property
    def degree(self) -> int:
        return self.polynomial.degree or 0

    def to_dict(self) -> dict:
        return {
            "polynomial": format_coeffs(self.polynomial),
            "degree": self.degree,
            "content": self.content,
            "x_power": self.x_power,
            "primes": list(self.primes),
            "per_prime": [e.to_dict() for e in self.per_prime],
            "verdict": self.verdict.value,
            "fired_rule": None if self.fired_rule is None else self.fired_rule.value,
            "factor_degree_multiple": self.factor_degree_multiple,
            "residual_degrees": self.residual_degrees.sorted(),
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def auto_check(
    f: IntPoly,
    primes: Sequence[int] | None = None,
    *,
    auto_primes: bool | None = None,
    bound: int = 10000,
    mode: str = "endpoints",
) -> Certificate:
    """Run every criterion on ``f`` and assemble a certificate.

    Primes are the given ones, plus discovered ones when ``auto_primes``
    is true (the default when no primes are given). Rules are tried in
    the order Eisenstein, Dumas, width-gcd, subset-sum; the first that
    fires is recorded.
    """
    if f.is_zero():
        return Certificate(f, 0, 0, (), (), Verdict.INCONCLUSIVE, None, 1, DegreeSet(0), ("zero polynomial",))
    content, prim = content_and_primitive(f)
    k, g = factor_out_x(prim)
    n = g.degree
    notes = []

    if auto_primes is None:
        auto_primes = primes is None
    chosen = set(_check_primes(primes or []))
    if auto_primes and n >= 1:
        chosen.update(candidate_primes(g, bound, mode))
    chosen = tuple(sorted(chosen))

    def trivial(verdict: Verdict, rule: Rule | None, note: str) -> Certificate:
        return Certificate(g, content, k, chosen, (), verdict, rule, max(n, 1), DegreeSet(n), (note,))

    if n == 0:
        if k == 1:
            return trivial(Verdict.IRREDUCIBLE, Rule.LINEAR, "constant multiple of x")
        return trivial(Verdict.INCONCLUSIVE, None, "constant" if k == 0 else f"x^{k}")
    if n == 1 and k == 0:
        return trivial(Verdict.IRREDUCIBLE, Rule.LINEAR, "degree 1")

    evidence = []
    for p in chosen:
        poly = build_polygon(g, p)
        widths = poly.segment_widths()
        ev = PrimeEvidence(p, poly, math.gcd(*widths), subset_sum_degrees(widths, n // 2, n))
        if not ev.informative:
            log.warning("prime %d divides no coefficient of %s; its polygon is flat", p, g)
            notes.append(f"prime {p} non-informative (flat polygon)")
        evidence.append(ev)

    fdm = _lcm_and_quotient_form(n, [e.d_p for e in evidence])
    residual = reduce(lambda a, b: a & b, (e.s_p for e in evidence), DegreeSet.full(n, n // 2))

    rule = None
    if any(eisenstein(g, p) for p in chosen):
        rule = Rule.EISENSTEIN
    elif any(dumas_single_prime(g, p) for p in chosen):
        rule = Rule.DUMAS
    elif chosen and fdm == n:
        rule = Rule.THEOREM_B
    elif chosen and not residual:
        rule = Rule.THEOREM_A

    verdict = Verdict.IRREDUCIBLE if rule is not None else Verdict.INCONCLUSIVE
    if k > 0:
        notes.append(f"x^{k} divides the input")
        verdict, rule = Verdict.INCONCLUSIVE, None
    return Certificate(g, content, k, chosen, tuple(evidence), verdict, rule, fdm, residual, tuple(notes))


def check_certificate(cert: dict) -> bool:
    """Re-verify a serialized certificate without rebuilding any hull.

    Claimed vertices are audited with the chord/slope conditions; widths,
    degree sets, gcds and the verdict are then recomputed from them.
    """
    g = parse_poly(cert["polynomial"])
    n = g.degree
    if n != cert["degree"]:
        return False
    verdict = Verdict(cert["verdict"])
    rule = cert["fired_rule"]
    if n is None or n < 2:
        return verdict is Verdict.INCONCLUSIVE or (rule == Rule.LINEAR.value and cert["x_power"] + n == 1)
    if g.coeffs[0] == 0:
        return False

    ds, sets = [], []
    for entry in cert["per_prime"]:
        p = entry["prime"]
        verts = [tuple(v) for v in entry["vertices"]]
        if any(nu_p(g.coeffs[i], p) != v for i, v in verts if 0 <= i <= n):
            return False
        if not verify_vertex_conditions([i for i, _ in verts], g, p):
            return False
        widths = []
        for (i0, v0), (i1, v1) in zip(verts, verts[1:]):
            m = math.gcd(abs(v1 - v0), i1 - i0)
            widths += [(i1 - i0) // m] * m
        if sorted(widths) != sorted(entry["segment_widths"]):
            return False
        d = math.gcd(*widths)
        s = subset_sum_degrees(widths, n // 2, n)
        if d != entry["d_p"] or s.sorted() != entry["s_p"]:
            return False
        ds.append(d)
        sets.append(s)
    if [e["prime"] for e in cert["per_prime"]] != cert["primes"]:
        return False

    fdm = _lcm_and_quotient_form(n, ds)
    residual = reduce(lambda a, b: a & b, sets, DegreeSet.full(n, n // 2))
    if fdm != cert["factor_degree_multiple"] or residual.sorted() != cert["residual_degrees"]:
        return False
    if verdict is Verdict.IRREDUCIBLE:
        if cert["x_power"] != 0:
            return False
        primes = cert["primes"]
        if rule == Rule.EISENSTEIN.value:
            return any(eisenstein(g, p) for p in primes)
        if rule == Rule.DUMAS.value:
            return any(dumas_single_prime(g, p) for p in primes)
        if rule == Rule.THEOREM_B.value:
            return bool(primes) and fdm == n
        if rule == Rule.THEOREM_A.value:
            return bool(primes) and not residual
        return False
    return True
