import numpy as np
import pytest

from randlp import (
    Inequality,
    build_objective,
    build_support,
    objective_value,
    support_only_solution,
)


def test_canonical_system_n2():
    rows = build_support(2, 200.0)
    assert rows == [
        Inequality([1.0, 0.0], 200.0),
        Inequality([0.0, 1.0], 200.0),
        Inequality([-1.0, 0.0], 0.0),
        Inequality([0.0, -1.0], 0.0),
        Inequality([1.0, 1.0], 300.0),
    ]


def test_canonical_system_n1():
    rows = build_support(1, 200.0)
    assert rows == [
        Inequality([1.0], 200.0),
        Inequality([-1.0], 0.0),
        Inequality([1.0], 100.0),
    ]


def test_canonical_system_n3_cut():
    rows = build_support(3, 200.0)
    assert len(rows) == 7
    assert rows[-1] == Inequality([1.0, 1.0, 1.0], 500.0)


def test_row_structure():
    for n in (1, 2, 5, 17):
        rows = build_support(n, 200.0)
        assert len(rows) == 2 * n + 1
        for j in range(n):
            assert np.count_nonzero(rows[j].a) == 1 and rows[j].a[j] == 1.0
            assert rows[j].b == 200.0
        for j in range(n):
            r = rows[n + j]
            assert np.count_nonzero(r.a) == 1 and r.a[j] == -1.0
            assert r.b == 0.0
        assert np.all(rows[2 * n].a == 1.0)


def test_objective_examples():
    assert np.array_equal(build_objective(3, 100.0), [300.0, 200.0, 100.0])
    assert np.array_equal(build_objective(1, 100.0), [100.0])
    assert np.array_equal(build_objective(2, 100.0), [200.0, 100.0])


def test_objective_strictly_decreasing_positive():
    for n in (1, 2, 10, 100):
        c = build_objective(n, 7.25)
        assert np.all(c > 0)
        assert np.all(np.diff(c) < 0)


def test_solution_examples():
    assert np.array_equal(support_only_solution(2, 200.0), [200.0, 100.0])
    assert np.array_equal(support_only_solution(1, 200.0), [100.0])
    assert np.array_equal(support_only_solution(3, 200.0), [200.0, 200.0, 100.0])


@pytest.mark.parametrize("alpha", [1.0, 200.0, 1e6])
def test_solution_binds_exactly_n_constraints(alpha):
    for n in range(1, 101):
        rows = build_support(n, alpha)
        x = support_only_solution(n, alpha)
        tight = 0
        for q in rows:
            lhs = float(np.dot(q.a, x))
            assert lhs <= q.b + 1e-9 * max(1.0, abs(q.b))
            if lhs == q.b:
                tight += 1
        assert tight == n


def test_preconditions():
    with pytest.raises(ValueError):
        build_support(0, 200.0)
    with pytest.raises(ValueError):
        build_objective(0, 100.0)
    with pytest.raises(ValueError):
        support_only_solution(0, 200.0)


def test_solution_value_formula():
    # f(xbar) = theta*alpha*(n^2 + n - 1)/2
    for n, expected in ((1, 10000.0), (2, 50000.0), (3, 110000.0)):
        c = build_objective(n, 100.0)
        x = support_only_solution(n, 200.0)
        assert objective_value(c, x) == expected
