"""Dynamic weighted discrete distribution over element ids.

A Fenwick (binary indexed) tree over non-negative integer weights. Point
updates and weight-proportional draws both cost ``O(log m)``; a batch of
``k`` unit increments costs ``O(k log m)`` and is applied with vectorised
numpy operations, one per tree level.
"""

from __future__ import annotations

import math

import numpy as np

from .exceptions import ExhaustedDistributionError

__all__ = ["WeightIndex"]


class WeightIndex:
    """Fenwick tree supporting ``add``, ``add_many`` and ``draw``.

    ``ops`` counts tree cells read or written by updates and draws (not by
    construction), so callers can bound the total work of a sampling run.
    """

    def __init__(self, initial_weights):
        w = np.asarray(initial_weights)
        if w.ndim != 1 or w.size == 0:
            raise ValueError("initial_weights must be a non-empty 1-d sequence")
        if not np.all(np.equal(np.mod(w, 1), 0)):
            raise ValueError("weights must be integer-valued")
        w = w.astype(np.int64)
        if np.any(w < 0):
            raise ValueError("weights must be non-negative")
        m = w.size
        self._m = m
        self._w = w.copy()
        tree = np.zeros(m + 1, dtype=np.int64)
        tree[1:] = w
        step = 1
        while step <= m:
            # nodes whose lowest set bit is `step` feed their parent at i + step
            i = np.arange(step, m + 1, 2 * step)
            parent = i + step
            ok = parent <= m
            tree[parent[ok]] += tree[i[ok]]
            step *= 2
        self._tree = tree
        self._total = int(w.sum())
        self._top = 1 << (m.bit_length() - 1)
        self.ops = 0

    @classmethod
    def build(cls, initial_weights) -> "WeightIndex":
        return cls(initial_weights)

    def __len__(self):
        return self._m

    @property
    def size(self) -> int:
        return self._m

    @property
    def total(self) -> int:
        return self._total

    @property
    def weights(self) -> np.ndarray:
        """Read-only view of the current per-element weights."""
        v = self._w.view()
        v.setflags(write=False)
        return v

    def weight(self, i: int) -> int:
        return int(self._w[i])

    def add(self, i: int, delta: int) -> None:
        """Add ``delta`` to the weight of element ``i``."""
        if not 0 <= i < self._m:
            raise IndexError(f"element {i} out of range [0, {self._m})")
        delta = int(delta)
        new = int(self._w[i]) + delta
        if new < 0:
            raise ValueError(f"weight of element {i} would become negative ({new})")
        if delta == 0:
            return
        self._w[i] = new
        self._total += delta
        tree, m = self._tree, self._m
        j = i + 1
        while j <= m:
            tree[j] += delta
            self.ops += 1
            j += j & -j

    add_to_weight = add

    def zero(self, i: int) -> None:
        """Set the weight of element ``i`` to zero."""
        self.add(i, -int(self._w[i]))

    def add_many(self, ids, delta: int = 1) -> None:
        """Add ``delta`` to every element in ``ids`` (repeats accumulate)."""
        ids = np.asarray(ids, dtype=np.int64)
        if ids.size == 0:
            return
        if ids.min() < 0 or ids.max() >= self._m:
            raise IndexError("element id out of range")
        delta = int(delta)
        if delta < 0:
            after = self._w.copy()
            np.add.at(after, ids, delta)
            if np.any(after[ids] < 0):
                raise ValueError("weight would become negative")
        np.add.at(self._w, ids, delta)
        self._total += delta * int(ids.size)
        tree, m = self._tree, self._m
        j = ids + 1
        while j.size:
            np.add.at(tree, j, delta)
            self.ops += int(j.size)
            j = j + (j & -j)
            j = j[j <= m]

    def prefix_sum(self, i: int) -> int:
        """Sum of weights of elements ``0 .. i - 1``."""
        s = 0
        j = int(i)
        while j > 0:
            s += int(self._tree[j])
            j -= j & -j
        return s

    def draw(self, u: float) -> int:
        """Element whose cumulative-weight interval ``[lo, hi)`` holds ``u * total``."""
        if self._total <= 0:
            raise ExhaustedDistributionError("total weight is zero")
        if not 0.0 <= u < 1.0:
            raise ValueError("u must lie in [0, 1)")
        target = u * self._total
        if target >= self._total:
            target = math.nextafter(float(self._total), 0.0)
        tree, m = self._tree, self._m
        pos = 0
        acc = 0
        step = self._top
        while step:
            nxt = pos + step
            if nxt <= m:
                self.ops += 1
                cand = acc + int(tree[nxt])
                if cand <= target:
                    pos = nxt
                    acc = cand
            step >>= 1
        return pos
