"""Acceptance checks shared by ``newton-irred selftest`` and the test suite."""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import families
from .criteria import (
    Verdict,
    auto_check,
    dumas_single_prime,
    eisenstein,
    factor_degree_multiple,
    s_p,
    theorem_a_verdict,
    theorem_b_verdict,
)
from .oracle import Status, kronecker_factorize, merge_polygons
from .poly import IntPoly, mul, parse_poly
from .polygon import build_polygon, verify_vertex_conditions
from .valuation import candidate_primes, nu_p

DEFAULT_SEED = 20240917

SAMPLE11 = "16 + 4*x - 4*x^2 + 2*x^3 - 2*x^4 + x^5 + 2*x^6 - x^7 - x^8 + 16*x^9 + 4*x^10 + 32*x^11"
SAMPLE11_VERTICES = ((0, 4), (1, 2), (5, 0), (8, 0), (10, 2), (11, 5))
SAMPLE11_WIDTHS = [1, 1, 1, 1, 1, 1, 1, 2, 2]


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        flag = "PASS" if self.passed else "FAIL"
        return f"{flag} [{self.number}] {self.name}: {self.detail} ({self.seconds:.2f}s)"


def random_poly(rng: random.Random, degree: int, bound: int) -> IntPoly:
    """Degree-``degree`` polynomial with nonzero constant and leading terms."""
    cs = [rng.randint(-bound, bound) for _ in range(degree + 1)]
    for i in (0, degree):
        while cs[i] == 0:
            cs[i] = rng.randint(-bound, bound)
    return IntPoly(cs)


def envelope_vertices(points: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Brute-force lower-hull corners.

    The lower convex envelope at each abscissa is the minimum over every
    bracketing pair of points of their chord; corners are the abscissae
    where that envelope bends. Quadratic-cubic in the point count, no
    stack-based hull involved.
    """
    xs = [x for x, _ in points]
    env = {}
    for x in range(xs[0], xs[-1] + 1):
        best = None
        for (x0, y0), (x1, y1) in itertools.product(points, repeat=2):
            if x0 <= x <= x1 and (x0 < x1 or x0 == x):
                y = Fraction(y0) if x0 == x1 else y0 + Fraction((y1 - y0) * (x - x0), x1 - x0)
                best = y if best is None or y < best else best
        env[x] = best
    corners = [xs[0]]
    for x in range(xs[0] + 1, xs[-1]):
        if env[x - 1] + env[x + 1] != 2 * env[x]:
            corners.append(x)
    corners.append(xs[-1])
    return [(x, int(env[x])) for x in corners]


def _timed(number: int, name: str, limit: float | None, body: Callable[[], tuple[bool, str]]) -> CheckResult:
    t0 = time.perf_counter()
    ok, detail = body()
    dt = time.perf_counter() - t0
    if limit is not None and dt >= limit:
        ok, detail = False, f"{detail}; exceeded {limit:g}s"
    return CheckResult(number, name, ok, detail, dt)


def check_families() -> tuple[bool, str]:
    from .cli import main

    bad = []
    total = 0
    for index, p, q, m, f in families.instances():
        total += 1
        code = main(["check", "--poly", str(f), "--primes", f"{p},{q}", "--quiet"])
        if code != 0:
            bad.append((index, p, q, m))
    return not bad, f"{total - len(bad)}/{total} certified" + (f", failures {bad}" if bad else "")


def check_family_oracle() -> tuple[bool, str]:
    disagree, confirmed, skipped = [], 0, 0
    for index, p, q, m, f in families.instances():
        res = kronecker_factorize(f)
        if res.status is Status.LIMIT_EXCEEDED:
            skipped += 1
        elif res.is_irreducible:
            confirmed += 1
        else:
            disagree.append((index, p, q, m, str(res)))
    detail = f"{confirmed} confirmed, {skipped} over budget, {len(disagree)} disagreements"
    return not disagree and confirmed > 0, detail + (f" {disagree}" if disagree else "")


def check_sample_polygon() -> tuple[bool, str]:
    f = parse_poly(SAMPLE11)
    poly = build_polygon(f, 2)
    pts = [(i, nu_p(a, 2)) for i, a in enumerate(f.coeffs) if a]
    brute = tuple(envelope_vertices(pts))
    inner = [i for i, _ in pts[1:-1]]
    passing = [
        (0, *sub, 11)
        for r in range(len(inner) + 1)
        for sub in itertools.combinations(inner, r)
        if verify_vertex_conditions((0, *sub, 11), f, 2)
    ]
    ok = (
        poly.vertices == SAMPLE11_VERTICES
        and brute == SAMPLE11_VERTICES
        and passing == [tuple(x for x, _ in SAMPLE11_VERTICES)]
        and sorted(poly.segment_widths()) == SAMPLE11_WIDTHS
    )
    return ok, f"vertices {list(poly.vertices)}, widths {sorted(poly.segment_widths())}"


def check_merge_law(rng: random.Random, trials: int = 1000) -> tuple[bool, str]:
    failures = []
    for _ in range(trials):
        g = random_poly(rng, rng.randint(1, 6), 100)
        h = random_poly(rng, rng.randint(1, 6), 100)
        p = rng.choice((2, 3, 5, 7))
        direct = build_polygon(mul(g, h), p)
        merged = merge_polygons(build_polygon(g, p), build_polygon(h, p))
        if direct != merged or sorted(direct.segments) != sorted(merged.segments):
            failures.append((str(g), str(h), p))
    return not failures, f"{trials} trials, {len(failures)} failures" + (f" e.g. {failures[0]}" if failures else "")


def check_soundness(rng: random.Random, trials: int = 10000) -> tuple[bool, str]:
    certified, counterexamples = 0, []
    for _ in range(trials):
        f = random_poly(rng, rng.randint(1, 8), 50)
        cert = auto_check(f)
        if cert.verdict is not Verdict.IRREDUCIBLE:
            continue
        certified += 1
        res = kronecker_factorize(f)
        if not res.is_irreducible:
            counterexamples.append((str(f), str(res)))
    detail = f"{trials} polynomials, {certified} certified, {len(counterexamples)} counterexamples"
    return not counterexamples, detail + (f" e.g. {counterexamples[0]}" if counterexamples else "")


def check_factor_degree_law(rng: random.Random, trials: int = 1000) -> tuple[bool, str]:
    failures, checks = [], 0
    for _ in range(trials):
        g = random_poly(rng, rng.randint(1, 4), 30)
        h = random_poly(rng, rng.randint(1, 4), 30)
        f = mul(g, h)
        n = f.degree
        primes = candidate_primes(f, 1000, "all_coeffs")
        if n < 2:
            continue
        low = min(g.degree, h.degree)
        for p in primes:
            checks += 1
            if low <= n // 2 and low not in s_p(f, p):
                failures.append(("S_p", str(g), str(h), p))
        subsets = [()]
        for r in range(1, len(primes) + 1):
            subsets += list(itertools.combinations(primes, r))
        if len(subsets) > 16:
            subsets = rng.sample(subsets, 16)
        for sub in subsets:
            checks += 1
            if g.degree % factor_degree_multiple(f, sub) or h.degree % factor_degree_multiple(f, sub):
                failures.append(("multiple", str(g), str(h), sub))
    return not failures, f"{trials} products, {checks} checks, {len(failures)} failures" + (
        f" e.g. {failures[0]}" if failures else ""
    )


def check_lcm_identity() -> tuple[bool, str]:
    count, bad = 0, []
    for n in range(1, 61):
        divs = [d for d in range(1, n + 1) if n % d == 0]
        for k in (1, 2, 3):
            for ds in itertools.product(divs, repeat=k):
                count += 1
                if math.lcm(*ds) != n // math.gcd(*(n // d for d in ds)):
                    bad.append((n, ds))
    return not bad, f"{count} tuples, {len(bad)} mismatches"


def random_eisenstein(rng: random.Random) -> tuple[IntPoly, int]:
    p = rng.choice((2, 3, 5, 7, 11, 13))
    n = rng.randint(2, 8)

    def unit() -> int:
        while True:
            c = rng.randint(-60, 60)
            if c % p:
                return c

    cs = [p * unit()] + [p * rng.randint(-20, 20) for _ in range(n - 1)] + [unit()]
    return IntPoly(cs), p


def check_specialization(rng: random.Random, trials: int = 200) -> tuple[bool, str]:
    broken = []
    for _ in range(trials):
        f, p = random_eisenstein(rng)
        chain = (
            eisenstein(f, p),
            dumas_single_prime(f, p),
            theorem_b_verdict(f, [p]) is Verdict.IRREDUCIBLE,
            theorem_a_verdict(f, [p])[0] is Verdict.IRREDUCIBLE,
        )
        if not all(chain):
            broken.append((str(f), p, chain))
    return not broken, f"{trials} Eisenstein polynomials, {len(broken)} broken chains"


def check_negative_controls() -> tuple[bool, str]:
    expected = {
        "x^4+4": ["x^2-2x+2", "x^2+2x+2"],
        "x^2-1": ["x-1", "x+1"],
    }
    problems = []
    for text, factors in expected.items():
        f = parse_poly(text)
        primes = sorted(set(candidate_primes(f, 100, "all_coeffs")) | {2, 3, 5, 7})
        cert = auto_check(f, primes)
        if cert.verdict is not Verdict.INCONCLUSIVE:
            problems.append(f"{text}: auto_check {cert.verdict.value}")
        for p in primes:
            if eisenstein(f, p) or dumas_single_prime(f, p):
                problems.append(f"{text}: single-prime rule fired at {p}")
        if theorem_a_verdict(f, primes)[0] is not Verdict.INCONCLUSIVE:
            problems.append(f"{text}: subset-sum fired")
        if theorem_b_verdict(f, primes) is not Verdict.INCONCLUSIVE:
            problems.append(f"{text}: width-gcd fired")
        res = kronecker_factorize(f)
        got = sorted(g.to_expr() for g, _ in res.factors)
        if res.status is not Status.FACTORED or got != sorted(factors) or res.expand() != f:
            problems.append(f"{text}: oracle gave {res}")
    return not problems, "; ".join(problems) or "both inconclusive, oracle factors correct"


def run_all(seed: int = DEFAULT_SEED) -> list[CheckResult]:
    rng = random.Random(seed)
    return [
        _timed(1, "two-prime families certified", 1.0, check_families),
        _timed(2, "oracle agrees on families", None, check_family_oracle),
        _timed(3, "degree-11 sample polygon", None, check_sample_polygon),
        _timed(4, "merge law", 10.0, lambda: check_merge_law(rng)),
        _timed(5, "soundness sweep", 300.0, lambda: check_soundness(rng)),
        _timed(6, "factor-degree law", None, lambda: check_factor_degree_law(rng)),
        _timed(7, "lcm/gcd identity", None, check_lcm_identity),
        _timed(8, "classical specialization", None, lambda: check_specialization(rng)),
        _timed(9, "negative controls", None, check_negative_controls),
    ]
