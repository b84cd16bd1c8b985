"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line."""

import functools
import math
import random
from fractions import Fraction as F

import pytest

from tpbessel.audit import AuditedRational, SubtractionAudit
from tpbessel.bessel import (
    CollocationSpec,
    basis_matrix_A,
    basis_matrix_C,
    bd_bessel_collocation,
    bd_of_A,
    bd_of_C,
    bd_reverse_bessel_collocation,
    collocation_matrix,
)
from tpbessel.bidiagonal import bd_from_matrix, expand
from tpbessel.experiments import figure, rhs_pair
from tpbessel.matrices import NodeSequence, all_minors_nonnegative
from tpbessel.solvers import (
    eigenvalues,
    eigenvalues_reference,
    inverse,
    naive_eigenvalues,
    naive_lu_solve,
    naive_singular_values,
    relative_errors_mp,
    singular_values,
    singular_values_reference,
    solve,
    to_double_matrix,
)

import oracles


def criterion(num, label):
    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"ACCEPTANCE {num} ({label}): FAIL")
                raise
            print(f"ACCEPTANCE {num} ({label}): PASS")
        return wrapper
    return deco


def sig5(x: float) -> str:
    return f"{x:.4e}"


@pytest.fixture(scope="module")
def bd20():
    return bd_bessel_collocation(NodeSequence.integers(20))


@pytest.fixture(scope="module")
def m20_double(bd20):
    return to_double_matrix(expand(bd20))


@criterion(1, "closed-form BD of the Bessel basis matrix")
def test_criterion_1():
    for n in range(1, 13):
        assert bd_of_A(n) == bd_from_matrix(basis_matrix_A(n)), f"n={n}"


@criterion(2, "closed-form BD of the reverse Bessel basis matrix")
def test_criterion_2():
    for n in range(1, 13):
        c = basis_matrix_C(n)
        bd = bd_of_C(n)
        assert bd == bd_from_matrix(c), f"n={n}"
        # even packed columns of the lower triangle are entirely zero
        for j1 in range(2, n + 1, 2):
            for i1 in range(j1 + 1, n + 1):
                assert bd.lower(i1 - 1, j1 - 1) == 0
    # self-similarity: one elimination step of C reproduces a leading
    # principal submatrix of C two orders down
    n = 12
    c = basis_matrix_C(n)
    work = [list(r) for r in c.rows]
    for i in range(n - 1, 0, -1):
        ratio = work[i][0] / work[i - 1][0]
        work[i] = [work[i][j] - ratio * work[i - 1][j] for j in range(n)]
    small = basis_matrix_C(n - 2)
    for i in range(2, n):
        for j in range(2, n):
            assert work[i][j] == small[i - 2, j - 2]


@criterion(3, "factorization route equals direct collocation")
def test_criterion_3():
    for n in range(2, 13):
        nodes = NodeSequence.integers(n)
        assert expand(bd_bessel_collocation(nodes)) == collocation_matrix(
            CollocationSpec("bessel", nodes)), f"bessel n={n}"
        assert expand(bd_reverse_bessel_collocation(nodes)) == collocation_matrix(
            CollocationSpec("rbessel", nodes)), f"rbessel n={n}"


@criterion(4, "order-20 eigenvalue table")
def test_criterion_4(bd20, m20_double):
    ref, bits = eigenvalues_reference(bd20)
    hra = eigenvalues(bd20).values
    errs = relative_errors_mp(hra, ref, bits)
    assert max(errs) <= 1e-13
    assert sig5(hra[0]) == "4.5222e+46"
    assert sig5(hra[-1]) == "1.2006e-04"
    naive = naive_eigenvalues(m20_double)
    naive_errs = relative_errors_mp(naive, ref, bits)
    assert naive_errs[-1] >= 1e3


@criterion(5, "order-20 singular value table")
def test_criterion_5(bd20, m20_double):
    ref, bits = singular_values_reference(bd20)
    hra = singular_values(bd20).values
    errs = relative_errors_mp(hra, ref, bits)
    assert max(errs) <= 1e-13
    assert sig5(hra[0]) == "4.8763e+46"
    assert sig5(hra[-1]) == "1.6258e-07"
    naive = naive_singular_values(m20_double)
    naive_errs = relative_errors_mp(naive, ref, bits)
    assert naive_errs[-1] >= 1e3


@criterion(6, "order-20 inverse accuracy and sign pattern")
def test_criterion_6(bd20):
    inv = inverse(bd20)
    worst = 0.0
    for i in range(20):
        for j in range(20):
            v = inv[i, j]
            if v != 0:
                assert (v > 0) == ((i + j) % 2 == 0), f"sign at ({i},{j})"
                err = float(abs(F(float(v)) - v) / abs(v))
                worst = max(worst, err)
    assert worst <= 1e-14


@criterion(7, "order-20 linear systems, seeded right-hand sides")
def test_criterion_7(bd20, m20_double):
    b_alt, b_pos = rhs_pair(seed=1, n=20)
    for b in (b_alt, b_pos):
        x = solve(bd20, b)
        hra_errs = [float(abs(F(float(v)) - v) / abs(v)) for v in x if v != 0]
        assert max(hra_errs) <= 1e-15
        naive = naive_lu_solve(m20_double, b)
        naive_errs = [abs(F(a) - e) / abs(e) for a, e in zip(naive, x) if e != 0]
        bad = sum(1 for e in naive_errs if e >= F(1, 100))
        assert bad >= len(naive_errs) // 2


def _slope(xs, ys):
    n = len(xs)
    mx = sum(xs) / n
    my = sum(ys) / n
    return (sum((x - mx) * (y - my) for x, y in zip(xs, ys))
            / sum((x - mx) ** 2 for x in xs))


@criterion(8, "error growth sweeps, both families")
def test_criterion_8():
    for fig_id in ("val", "valR"):
        header, rows = figure(fig_id, 15)
        for quantity in ("min_eigenvalue", "min_singular_value"):
            data = [(int(r[0]), float(r[2]), float(r[3]))
                    for r in rows if r[1] == quantity]
            hra = {n: e for n, e, _ in data}
            naive = {n: e for n, _, e in data}
            assert max(hra.values()) <= 1e-12, (fig_id, quantity)
            assert naive[14] > 1 and naive[15] > 1, (fig_id, quantity)
            ns = [n for n in naive if n >= 8]
            logs = [math.log10(max(naive[n], 1e-18)) for n in ns]
            assert _slope(ns, logs) > 0, (fig_id, quantity)


@criterion(9, "brute-force spectral and minor oracles")
def test_criterion_9():
    for gen in (bd_bessel_collocation, bd_reverse_bessel_collocation):
        for n in range(2, 7):
            bd = gen(NodeSequence.integers(n))
            m = expand(bd)
            ev_oracle = [float(v) for v in oracles.oracle_eigenvalues(m)]
            ev = eigenvalues(bd).values
            for a, b in zip(ev_oracle, ev):
                assert abs(a - b) <= 1e-13 * abs(a)
            sv_oracle = [float(v) for v in oracles.oracle_singular_values(m)]
            sv = singular_values(bd).values
            for a, b in zip(sv_oracle, sv):
                assert abs(a - b) <= 1e-13 * abs(a)

    rng = random.Random(2024)
    for basis in ("bessel", "rbessel"):
        for _ in range(10):
            n = rng.randint(3, 5)
            nodes, t = [], F(0)
            for _ in range(n):
                t += F(rng.randint(1, 9), rng.randint(1, 4))
                nodes.append(t)
            m = collocation_matrix(CollocationSpec(basis, NodeSequence(tuple(nodes))))
            assert all_minors_nonnegative(m, strict=True), (basis, nodes)


@criterion(10, "subtraction-free audit of expand and solve")
def test_criterion_10(bd20):
    audit = SubtractionAudit()
    audited = bd20.map(lambda x: AuditedRational(x, audit))
    expand(audited)
    b_alt, _ = rhs_pair(seed=1, n=20)
    b = [AuditedRational(v, audit) for v in b_alt]
    solve(audited, b)
    assert audit.same_sign_subtractions == 0, audit.events[:3]
