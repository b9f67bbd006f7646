"""Eight two-prime families of degree-6 polynomials that the polygon
criteria certify irreducible although neither Eisenstein nor Dumas
applies directly."""

from __future__ import annotations

from .poly import IntPoly
from .valuation import is_prime

# Families 3 and 4 take an extra exponent m >= 0.
FAMILIES_WITH_M = (3, 4)


def family(index: int, p: int, q: int, m: int = 0) -> IntPoly:
    if not (is_prime(p) and is_prime(q)):
        raise ValueError(f"p={p} and q={q} must both be prime")
    if p == q:
        raise ValueError("p and q must be distinct")
    if m < 0:
        raise ValueError("m must be non-negative")
    pq, pq2, p2q3, q2 = p * q, p * q * q, p * p * q**3, q * q
    table = {
        1: [q**3, p2q3, p2q3, p2q3, p2q3, p2q3, p * p],
        2: [p, pq2, pq2, pq2, q2, pq2, pq2],
        3: [p**m, q2, pq2, pq2, pq2, pq2, pq2],
        4: [p, pq2, pq2, pq2, pq2, q2, p**m * q2],
        5: [1, q2, q2, pq2, pq2, pq2, pq2],
        6: [p, pq2, pq2, pq2, q2, q2, q2],
        7: [pq, pq, pq, q, p, pq, pq],
        8: [q, q, q, p, pq, pq, pq],
    }
    if index not in table:
        raise ValueError(f"family must be 1..8, got {index}")
    return IntPoly(table[index])


def instances(pairs=((2, 3), (3, 2), (2, 5), (5, 7)), ms=(0, 1, 2, 5)):
    """Yield ``(index, p, q, m, poly)`` over the standard sweep."""
    for index in range(1, 9):
        for p, q in pairs:
            for m in ms if index in FAMILIES_WITH_M else (0,):
                yield index, p, q, m, family(index, p, q, m)
