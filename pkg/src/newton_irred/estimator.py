"""scikit-learn wrappers so the criteria drop into pipelines and grid searches.

Samples are polynomials (text, integer sequences, or rows of a 2-D
coefficient array, lowest degree first).
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_polys, check_primes
from .criteria import Certificate, Verdict, auto_check
from .poly import factor_out_x
from .polygon import build_polygon


class IrreducibilityCertifier(ClassifierMixin, BaseEstimator):
    """Predicts ``True`` when the polygon criteria certify irreducibility over Q.

    ``False`` means inconclusive, never reducible. Fitting learns nothing;
    it only validates the parameters.

    Parameters
    ----------
    primes : sequence of int, optional
        Primes to use for every sample.
    auto_primes : bool, optional
        Also discover primes per sample. Defaults to ``primes is None``.
    bound : int
        Largest prime considered during discovery.
    mode : {"endpoints", "all_coeffs"}
        Which coefficients discovery scans.
    """

    def __init__(self, primes=None, auto_primes=None, bound=10000, mode="endpoints"):
        self.primes = primes
        self.auto_primes = auto_primes
        self.bound = bound
        self.mode = mode

    def fit(self, X, y=None):
        if self.mode not in ("endpoints", "all_coeffs", "all"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.bound < 2:
            raise ValueError("bound must be at least 2")
        self.primes_ = check_primes(self.primes)
        self.classes_ = np.array([False, True])
        check_polys(X)
        return self

    def certify(self, X) -> list[Certificate]:
        check_is_fitted(self, "primes_")
        primes = list(self.primes_) if self.primes is not None else None
        return [
            auto_check(f, primes, auto_primes=self.auto_primes, bound=self.bound, mode=self.mode)
            for f in check_polys(X)
        ]

    def predict(self, X) -> np.ndarray:
        return np.array([c.verdict is Verdict.IRREDUCIBLE for c in self.certify(X)], dtype=bool)


class NewtonPolygonFeatures(TransformerMixin, BaseEstimator):
    """Per-prime polygon summaries as a numeric feature matrix.

    For each prime the columns are the width gcd, the segment count and
    the edge count of the polygon (after removing any power of x).
    Constants get zeros.
    """

    _COLUMNS = ("d_p", "n_segments", "n_edges")

    def __init__(self, primes=(2, 3, 5, 7)):
        self.primes = primes

    def fit(self, X, y=None):
        self.primes_ = check_primes(self.primes)
        if not self.primes_:
            raise ValueError("need at least one prime")
        check_polys(X)
        self.n_features_out_ = len(self.primes_) * len(self._COLUMNS)
        return self

    def transform(self, X) -> np.ndarray:
        check_is_fitted(self, "primes_")
        polys = check_polys(X)
        out = np.zeros((len(polys), self.n_features_out_), dtype=np.int64)
        for row, f in enumerate(polys):
            if f.is_zero():
                continue
            _, g = factor_out_x(f)
            if g.degree < 1:
                continue
            for k, p in enumerate(self.primes_):
                poly = build_polygon(g, p)
                widths = poly.segment_widths()
                out[row, 3 * k : 3 * k + 3] = (np.gcd.reduce(widths), len(widths), len(poly.edges))
        return out

    def get_feature_names_out(self, input_features=None) -> np.ndarray:
        check_is_fitted(self, "primes_")
        return np.array([f"{c}_{p}" for p in self.primes_ for c in self._COLUMNS], dtype=object)
