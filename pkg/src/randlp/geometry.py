"""Geometric primitives shared by the generator and the validator.

Every dot product or norm whose value feeds an accept/reject comparison goes
through ``row_dots`` / ``row_sumsq`` below.  Both work on a single vector or
on a stack of rows, and numpy's pairwise reduction makes the row-batched
result bit-identical to the one-row result, so the batched engines and the
scalar public operations can never disagree on a strict comparison.
"""
from __future__ import annotations

import numpy as np

from .model import Inequality


def row_dots(rows: np.ndarray, y: np.ndarray) -> np.ndarray:
    """<row, y> for one vector or for each row of a 2-D stack."""
    return (rows * y).sum(axis=-1)


def row_sumsq(rows: np.ndarray) -> np.ndarray:
    """Squared euclidean norm per row."""
    return (rows * rows).sum(axis=-1)


def row_norms(rows: np.ndarray) -> np.ndarray:
    return np.sqrt(row_sumsq(rows))


def hypercube_center(n: int, alpha: float) -> np.ndarray:
    """Center point h = (alpha/2, ..., alpha/2)."""
    h = np.full(n, alpha / 2.0)
    h.flags.writeable = False
    return h


def objective_value(c: np.ndarray, x: np.ndarray) -> float:
    return float(row_dots(np.asarray(c, dtype=np.float64), np.asarray(x, dtype=np.float64)))


def distance_to_center(h: np.ndarray, q: Inequality) -> float:
    """Distance |<a,h> - b| / ||a|| from h to the hyperplane a.x = b."""
    nrm = float(row_norms(q.a))
    if nrm == 0.0:
        raise ValueError("zero-norm coefficient vector has no hyperplane")
    return float(abs(row_dots(q.a, h) - q.b)) / nrm


def project_center(h: np.ndarray, q: Inequality) -> np.ndarray:
    """Orthogonal projection of h onto the hyperplane a.x = b."""
    nsq = float(row_sumsq(q.a))
    if nsq == 0.0:
        raise ValueError("zero-norm coefficient vector has no hyperplane")
    t = (float(row_dots(q.a, h)) - q.b) / nsq
    return h - t * q.a


def likeness(q1: Inequality, q2: Inequality, l_max: float, s_min: float) -> bool:
    """True when the two constraints are alike: their unit normals are closer
    than l_max and their normalized offsets are closer than s_min, both strict."""
    n1 = float(row_norms(q1.a))
    n2 = float(row_norms(q2.a))
    if n1 == 0.0 or n2 == 0.0:
        raise ValueError("zero-norm coefficient vector cannot be compared")
    gap = float(row_norms(q1.a / n1 - q2.a / n2))
    off = abs(q1.b / n1 - q2.b / n2)
    return gap < l_max and off < s_min


class SimilarityIndex:
    """Normalized constraint rows supporting batched likeness queries.

    Stores one unit normal and one normalized offset per constraint.  The
    normalization and gap arithmetic reuse the shared row kernels, so a query
    here decides exactly like pairwise ``likeness`` calls.
    """

    def __init__(self, n: int, l_max: float, s_min: float, capacity: int = 8):
        self._n = n
        self._l_max = l_max
        self._s_min = s_min
        cap = max(1, capacity)
        self._units = np.empty((cap, n), dtype=np.float64)
        self._offsets = np.empty(cap, dtype=np.float64)
        self._count = 0

    @classmethod
    def from_inequalities(
        cls,
        ineqs,
        n: int,
        l_max: float,
        s_min: float,
        extra_capacity: int = 0,
    ) -> "SimilarityIndex":
        ineqs = list(ineqs)
        idx = cls(n, l_max, s_min, capacity=len(ineqs) + extra_capacity + 1)
        if ineqs:
            a = np.stack([q.a for q in ineqs])
            b = np.array([q.b for q in ineqs])
            norms = row_norms(a)
            if np.any(norms == 0.0):
                raise ValueError("zero-norm coefficient vector cannot be indexed")
            k = len(ineqs)
            idx._units[:k] = a / norms[:, None]
            idx._offsets[:k] = b / norms
            idx._count = k
        return idx

    def __len__(self) -> int:
        return self._count

    def append(self, a: np.ndarray, b: float) -> None:
        nrm = float(row_norms(a))
        if nrm == 0.0:
            raise ValueError("zero-norm coefficient vector cannot be indexed")
        if self._count == self._units.shape[0]:
            grow = max(8, self._units.shape[0])
            self._units = np.concatenate([self._units, np.empty((grow, self._n))])
            self._offsets = np.concatenate([self._offsets, np.empty(grow)])
        self._units[self._count] = a / nrm
        self._offsets[self._count] = b / nrm
        self._count += 1

    def any_alike(self, a: np.ndarray, b: float) -> bool:
        nrm = float(row_norms(a))
        if nrm == 0.0:
            raise ValueError("zero-norm coefficient vector cannot be compared")
        if self._count == 0:
            return False
        u = a / nrm
        beta = b / nrm
        gaps = row_norms(self._units[: self._count] - u)
        offs = np.abs(self._offsets[: self._count] - beta)
        return bool(np.any((gaps < self._l_max) & (offs < self._s_min)))
