"""p-adic valuations, primality, and discovery of primes worth trying."""

from __future__ import annotations

import math
from functools import lru_cache

from .poly import IntPoly

INF = math.inf

# Deterministic for n < 3.3e24, which covers every 64-bit input.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def nu_p(a: int, p: int) -> int | float:
    """Exponent of ``p`` in ``a``; ``INF`` when ``a == 0``."""
    if a == 0:
        return INF
    a = abs(a)
    v = 0
    while a % p == 0:
        a //= p
        v += 1
    return v


def is_prime(m: int) -> bool:
    """Deterministic Miller-Rabin for the machine-word range and well beyond."""
    if m < 2:
        return False
    for b in _MR_BASES:
        if m % b == 0:
            return m == b
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for b in _MR_BASES:
        x = pow(b, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=16)
def primes_up_to(bound: int) -> tuple[int, ...]:
    if bound < 2:
        return ()
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, bound + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def candidate_primes(f: IntPoly, bound: int = 10000, mode: str = "endpoints") -> list[int]:
    """Primes ``<= bound`` dividing the coefficients scanned by ``mode``.

    ``mode="endpoints"`` scans ``a_0`` and ``a_n``; ``mode="all_coeffs"``
    (alias ``"all"``) scans every coefficient.
    """
    if f.is_zero():
        raise ValueError("zero polynomial")
    if f.coeffs[0] == 0:
        raise ValueError("constant term is zero; factor out x first")
    if mode == "endpoints":
        scanned = {abs(f.coeffs[0]), abs(f.leading)}
    elif mode in ("all_coeffs", "all"):
        scanned = {abs(c) for c in f.coeffs if c}
    else:
        raise ValueError(f"unknown discovery mode {mode!r}")
    scanned.discard(1)
    return [p for p in primes_up_to(bound) if any(c % p == 0 for c in scanned)]
