"""Independent instance checking.

``validate_instance`` re-derives what the generator promises: exact bounding
rows and objective, center feasibility, the distance band, objective
improvement, and pairwise dissimilarity.  Strict acceptance conditions
(distance > rho, improvement) are checked strictly with no slack; non-strict
bounds get a relative slack of 1e-9 so serialization round-trips can never
flip them.  All strict comparisons go through the same row kernels the
generator used, so a generated instance validates bit-for-bit.

``verify_support_solution`` checks the known optimum of the bounding system
by brute-force vertex enumeration, deliberately an independent code path from
the generator (plain Gaussian elimination, no shared solver).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .geometry import (
    distance_to_center,
    hypercube_center,
    likeness,
    objective_value,
    project_center,
    row_dots,
    row_norms,
)
from .model import Inequality, LPInstance, UnsupportedDimensionError
from .support import build_objective, build_support, support_only_solution

_SLACK = 1e-9


def _within(x: float, bound: float) -> bool:
    """Non-strict x <= bound with relative slack."""
    return x <= bound + _SLACK * max(1.0, abs(bound))


@dataclass(frozen=True)
class Violation:
    constraint: int        # index into the full system; -1 for structural issues
    condition: str
    measured: object
    bound: object

    def __str__(self):
        where = "structure" if self.constraint < 0 else f"constraint {self.constraint}"
        return f"{where}: {self.condition} (measured {self.measured}, bound {self.bound})"


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...]


def validate_instance(inst: LPInstance) -> ValidationReport:
    """Check every promised property of inst; collect all violations."""
    out: list[Violation] = []
    n = inst.n
    p = inst.params

    if n < 1:
        return ValidationReport(False, (Violation(-1, "n >= 1", n, 1),))
    if len(inst.support) != 2 * n + 1:
        out.append(Violation(-1, "support row count", len(inst.support), 2 * n + 1))
    if inst.c.shape[0] != n:
        out.append(Violation(-1, "objective length", inst.c.shape[0], n))
    rows = inst.constraints
    bad_shape = [i for i, q in enumerate(rows) if q.a.shape[0] != n]
    for i in bad_shape:
        out.append(Violation(i, "coefficient row length", rows[i].a.shape[0], n))
    if out:
        return ValidationReport(False, tuple(out))

    expected_support = build_support(n, p.alpha)
    for i, (got, want) in enumerate(zip(inst.support, expected_support)):
        if got != want:
            out.append(Violation(i, "bounding row mismatch", "row differs", "exact"))
    expected_c = build_objective(n, p.theta)
    if not np.array_equal(inst.c, expected_c):
        out.append(Violation(-1, "objective row mismatch", "row differs", "exact"))

    norms = np.array([float(row_norms(q.a)) for q in rows])
    for i in np.nonzero(norms == 0.0)[0]:
        out.append(Violation(int(i), "nonzero coefficient norm", 0.0, "> 0"))
    usable = norms > 0.0

    h = hypercube_center(n, p.alpha)
    f_h = objective_value(inst.c, h)
    n_support = len(inst.support)

    for i, q in enumerate(rows):
        if not usable[i]:
            continue
        ah = float(row_dots(q.a, h))
        if not _within(ah, q.b):
            out.append(Violation(i, "center feasibility a.h <= b", ah, q.b))
        if i < n_support:
            continue
        # random rows only: distance band and objective improvement
        dist = distance_to_center(h, q)
        if not dist > p.rho:
            out.append(Violation(i, "distance > rho", dist, p.rho))
        if not _within(dist, p.theta):
            out.append(Violation(i, "distance <= theta", dist, p.theta))
        f_proj = objective_value(inst.c, project_center(h, q))
        if not f_proj > f_h:
            out.append(Violation(i, "objective improvement at projection", f_proj, f_h))

    out.extend(_pairwise_likeness_violations(rows, usable, p.l_max, p.s_min))
    return ValidationReport(not out, tuple(out))


def _pairwise_likeness_violations(rows, usable, l_max, s_min):
    """All-pairs dissimilarity check.

    A BLAS Gram matrix narrows the candidate pairs (with a safety margin on
    the direction-gap bound), then each shortlisted pair is rechecked with the
    exact scalar predicate, so the verdict never depends on BLAS summation
    order.
    """
    idx = np.nonzero(usable)[0]
    if idx.size < 2:
        return []
    a = np.stack([rows[i].a for i in idx])
    b = np.array([rows[i].b for i in idx])
    nrm = row_norms(a)
    units = a / nrm[:, None]
    beta = b / nrm
    gram = units @ units.T
    gap_sq = 2.0 - 2.0 * gram
    near = (gap_sq < l_max * l_max + 1e-6) & (
        np.abs(beta[:, None] - beta[None, :]) < s_min
    )
    near &= np.triu(np.ones_like(near, dtype=bool), k=1)
    out = []
    for i, j in np.argwhere(near):
        qi, qj = rows[idx[i]], rows[idx[j]]
        if likeness(qi, qj, l_max, s_min):
            gap = float(row_norms(qi.a / float(row_norms(qi.a)) - qj.a / float(row_norms(qj.a))))
            out.append(
                Violation(
                    int(idx[j]),
                    f"alike with constraint {int(idx[i])}",
                    f"direction gap {gap:.6g}",
                    f"< {l_max:g} is too similar",
                )
            )
    return out


def _solve_square(A: np.ndarray, b: np.ndarray, tol: float = 1e-9):
    """Gaussian elimination with partial pivoting; None when singular."""
    A = np.array(A, dtype=np.float64)
    b = np.array(b, dtype=np.float64)
    k = len(b)
    for col in range(k):
        piv = col + int(np.argmax(np.abs(A[col:, col])))
        if abs(A[piv, col]) <= tol:
            return None
        if piv != col:
            A[[col, piv]] = A[[piv, col]]
            b[[col, piv]] = b[[piv, col]]
        for r in range(col + 1, k):
            f = A[r, col] / A[col, col]
            A[r, col:] -= f * A[col, col:]
            b[r] -= f * b[col]
    x = np.zeros(k)
    for row in range(k - 1, -1, -1):
        x[row] = (b[row] - float(A[row, row + 1 :] @ x[row + 1 :])) / A[row, row]
    return x


def verify_support_solution(n: int, alpha: float, theta: float) -> bool:
    """True iff (alpha, ..., alpha, alpha/2) is the unique maximizer of the
    bounding system, established by enumerating every vertex (n <= 3)."""
    if n < 1:
        raise ValueError("n >= 1 required")
    if n > 3:
        raise UnsupportedDimensionError(
            f"vertex enumeration oracle supports n <= 3, got n = {n}"
        )
    support = build_support(n, alpha)
    c = build_objective(n, theta)
    A = np.stack([q.a for q in support])
    b = np.array([q.b for q in support])
    slack = _SLACK * np.maximum(1.0, np.abs(b))

    vertices: list[np.ndarray] = []
    tol = 1e-9 * max(1.0, abs(alpha))
    for sel in combinations(range(2 * n + 1), n):
        x = _solve_square(A[list(sel)], b[list(sel)])
        if x is None:
            continue
        if not np.all(A @ x <= b + slack):
            continue
        if not any(np.all(np.abs(x - v) <= tol) for v in vertices):
            vertices.append(x)

    xbar = support_only_solution(n, alpha)
    if not np.all(A @ xbar <= b + slack):
        return False
    if not any(np.all(np.abs(xbar - v) <= tol) for v in vertices):
        return False
    best = objective_value(c, xbar)
    margin = _SLACK * max(1.0, abs(best))
    for v in vertices:
        if np.all(np.abs(v - xbar) <= tol):
            continue
        if objective_value(c, v) >= best - margin:
            return False
    return True
