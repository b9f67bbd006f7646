"""Input validation shared by the estimator wrappers and the CLI."""

from __future__ import annotations

import numbers
from typing import Iterable

import numpy as np

from .poly import IntPoly, parse_poly
from .valuation import is_prime


def check_poly(obj) -> IntPoly:
    """Coerce an ``IntPoly``, text, or integer sequence (lowest degree first)."""
    if isinstance(obj, IntPoly):
        return obj
    if isinstance(obj, str):
        return parse_poly(obj)
    if isinstance(obj, np.ndarray):
        obj = obj.tolist()
    try:
        seq = list(obj)
    except TypeError:
        raise TypeError(f"cannot interpret {type(obj).__name__} as a polynomial") from None
    coeffs = []
    for c in seq:
        if isinstance(c, (bool, np.bool_)):
            raise ValueError(f"coefficient {c!r} is a boolean")
        if not isinstance(c, numbers.Integral):
            if isinstance(c, numbers.Real) and float(c).is_integer():
                c = int(c)
            else:
                raise ValueError(f"coefficient {c!r} is not an integer")
        coeffs.append(int(c))
    if not coeffs:
        raise ValueError("empty coefficient sequence")
    return IntPoly(coeffs)


def check_polys(X) -> list[IntPoly]:
    """A batch of polynomials: an iterable of anything ``check_poly`` accepts,
    or a 2-D integer array with one coefficient row per sample."""
    if isinstance(X, (str, IntPoly)):
        raise ValueError("expected a collection of polynomials, got a single one")
    if isinstance(X, np.ndarray) and X.ndim != 2:
        raise ValueError(f"expected a 2-D coefficient array, got {X.ndim}-D")
    return [check_poly(row) for row in X]


def check_primes(primes: Iterable[int] | None) -> tuple[int, ...]:
    if primes is None:
        return ()
    out = tuple(int(p) for p in primes)
    bad = [p for p in out if not is_prime(p)]
    if bad:
        raise ValueError(f"not prime: {bad}")
    if len(set(out)) != len(out):
        raise ValueError(f"duplicate primes in {out}")
    return out
