"""Empirical CDFs and the comparison statistics used by the harness."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import stats as _sps

__all__ = ["Ecdf", "ecdf", "ks_distance", "rmse", "mean_ci"]


@dataclass(frozen=True, eq=False)
class Ecdf:
    """Right-continuous step function ``F(x) = P(X <= x)``.

    ``support`` is strictly increasing and ``cum_prob[i] = F(support[i])``,
    ending at exactly 1.
    """

    support: np.ndarray
    cum_prob: np.ndarray

    def __call__(self, x):
        x = np.asarray(x, dtype=np.float64)
        pos = np.searchsorted(self.support, x, side="right")
        out = np.where(pos > 0, self.cum_prob[np.maximum(pos - 1, 0)], 0.0)
        return out if out.ndim else float(out)

    def __len__(self):
        return int(self.support.size)

    def __eq__(self, other):
        if not isinstance(other, Ecdf):
            return NotImplemented
        return (np.array_equal(self.support, other.support)
                and np.array_equal(self.cum_prob, other.cum_prob))

    __hash__ = None

    def rows(self):
        return list(zip(self.support.tolist(), self.cum_prob.tolist()))

    @classmethod
    def from_counts(cls, values, counts) -> "Ecdf":
        """ECDF of a multiset given as distinct values with multiplicities."""
        values = np.asarray(values, dtype=np.float64)
        counts = np.asarray(counts, dtype=np.int64)
        if values.shape != counts.shape or values.size == 0:
            raise ValueError("values and counts must be non-empty and equally long")
        if np.any(counts < 0) or counts.sum() == 0:
            raise ValueError("counts must be non-negative with a positive total")
        uniq, inverse = np.unique(values, return_inverse=True)
        merged = np.zeros(uniq.size, dtype=np.int64)
        np.add.at(merged, inverse, counts)
        keep = merged > 0
        uniq, merged = uniq[keep], merged[keep]
        cum = np.cumsum(merged)
        prob = cum / cum[-1]
        prob[-1] = 1.0
        return cls(uniq, prob)


def ecdf(values) -> Ecdf:
    values = np.asarray(values, dtype=np.float64).ravel()
    if values.size == 0:
        raise ValueError("ecdf of an empty sample is undefined")
    if np.any(np.isnan(values)):
        raise ValueError("values contain NaN")
    uniq, counts = np.unique(values, return_counts=True)
    cum = np.cumsum(counts)
    prob = cum / values.size
    prob[-1] = 1.0
    return Ecdf(uniq, prob)


def ks_distance(f: Ecdf, g: Ecdf) -> float:
    """``sup_x |F(x) - G(x)|``, evaluated exactly on the merged support.

    Both functions are constant between consecutive points of the merged
    support, so the supremum is attained at one of them.
    """
    grid = np.union1d(f.support, g.support)
    return float(np.max(np.abs(f(grid) - g(grid))))


def rmse(original, sampled) -> float:
    a = np.asarray(original, dtype=np.float64).ravel()
    b = np.asarray(sampled, dtype=np.float64).ravel()
    if a.size != b.size:
        raise ValueError(f"length mismatch: {a.size} original vs {b.size} sampled values")
    if a.size == 0:
        raise ValueError("rmse of empty sequences is undefined")
    return math.sqrt(float(np.mean((a - b) ** 2)))


def mean_ci(values, level=0.95):
    """Student-t confidence interval for the mean: ``(mean, lower, upper)``."""
    x = np.asarray(values, dtype=np.float64).ravel()
    n = x.size
    if n < 2:
        raise ValueError("a confidence interval needs at least two values")
    if not 0.0 < level < 1.0:
        raise ValueError("level must lie in (0, 1)")
    mean = float(x.mean())
    s = float(x.std(ddof=1))
    half = float(_sps.t.ppf(0.5 + level / 2.0, n - 1)) * s / math.sqrt(n)
    return mean, mean - half, mean + half
