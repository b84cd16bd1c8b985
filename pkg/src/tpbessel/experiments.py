"""Reproduction of the comparison tables and error-sweep figures.

Each table pits the high-accuracy route (exact rationals or certified
multiprecision, rounded once to double) against the conventional
double-precision route, measuring both against the multiprecision
reference.  The sweeps repeat that for orders 2..n_max at integer
nodes.  CSV is the canonical output; the SVG chart is a convenience
rendering with no plotting dependency.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
from mpmath import mp

from .bessel import bd_bessel_collocation, bd_reverse_bessel_collocation
from .bidiagonal import expand
from .matrices import Matrix, NodeSequence
from .scalars import DEFAULT_POLICY, PrecisionPolicy
from .solvers import (
    eigenvalues_reference,
    inverse,
    naive_eigenvalues,
    naive_lu_solve,
    naive_singular_values,
    relative_errors_mp,
    singular_values_reference,
    solve,
    to_double_matrix,
)

# 64-bit linear congruential generator (Knuth's MMIX constants); makes
# the random right-hand sides reproducible across platforms.
_LCG_A = 6364136223846793005
_LCG_C = 1442695040888963407
_LCG_MASK = (1 << 64) - 1

DEFAULT_SEED = 1

FIGURE_IDS = ("val", "inv", "valR", "invR")


def lcg_integers(seed: int, count: int, lo: int = 1, hi: int = 1000) -> list[int]:
    """Deterministic integers in [lo, hi] from a 64-bit LCG stream."""
    state = seed & _LCG_MASK
    out = []
    span = hi - lo + 1
    for _ in range(count):
        state = (_LCG_A * state + _LCG_C) & _LCG_MASK
        out.append(lo + (state >> 33) % span)
    return out


def rhs_pair(seed: int, n: int):
    """(b_alt, b_pos): b_pos has random entries in [1, 1000]; b_alt
    flips every other sign so the pattern alternates."""
    b_pos = [Fraction(v) for v in lcg_integers(seed, n)]
    b_alt = [v if i % 2 == 0 else -v for i, v in enumerate(b_pos)]
    return b_alt, b_pos


def _fmt(x: float) -> str:
    return format(float(x), ".16e")


def _entry_relerr_exact(exact: Fraction) -> float:
    """Relative error of the single double rounding of an exact value."""
    if exact == 0:
        return 0.0
    approx = Fraction(float(exact))
    return float(abs(approx - exact) / abs(exact))


def _matrix_relerrs(approx: Matrix, exact: Matrix) -> list[float]:
    errs = []
    for i in range(exact.n_rows):
        for j in range(exact.n_cols):
            e = exact[i, j]
            if e == 0:
                continue
            errs.append(float(abs(Fraction(float(approx[i, j])) - e) / abs(e)))
    return errs


def _vector_relerrs(approx, exact) -> list[float]:
    errs = []
    for a, e in zip(approx, exact):
        if e == 0:
            continue
        errs.append(float(abs(Fraction(float(a)) - e) / abs(e)))
    return errs


def table(table_id: int, seed: int = DEFAULT_SEED,
          policy: PrecisionPolicy = DEFAULT_POLICY):
    """Rows for one comparison table at order 20, Bessel nodes 1..20.

    Tables 1/2: eigenvalue / singular value errors, rows
    ``i,reference,relerr_hra,relerr_naive``.  Table 3: inverse error
    summary, rows ``stat,relerr_hra,relerr_naive``.  Tables 4/5:
    linear-system errors for the alternating and the unrestricted
    seeded right-hand side.
    """
    if table_id not in (1, 2, 3, 4, 5):
        raise ValueError(f"table id must be 1..5, got {table_id}")
    n = 20
    bd = bd_bessel_collocation(NodeSequence.integers(n))
    m_exact = expand(bd)
    m_double = to_double_matrix(m_exact)

    if table_id in (1, 2):
        if table_id == 1:
            ref, bits = eigenvalues_reference(bd, policy)
            naive = naive_eigenvalues(m_double)
        else:
            ref, bits = singular_values_reference(bd, policy)
            naive = naive_singular_values(m_double)
        hra = [float(v) for v in ref]
        err_h = relative_errors_mp(hra, ref, bits)
        err_n = relative_errors_mp(naive, ref, bits)
        header = ["i", "reference", "relerr_hra", "relerr_naive"]
        rows = [[str(i + 1), _fmt(hra[i]), _fmt(err_h[i]), _fmt(err_n[i])]
                for i in range(n)]
        return header, rows

    if table_id == 3:
        inv_exact = inverse(bd)
        inv_hra = to_double_matrix(inv_exact)
        inv_naive = Matrix(np.linalg.inv(
            np.array(m_double.rows, dtype=float)).tolist())
        err_h = _matrix_relerrs(inv_hra, inv_exact)
        err_n = _matrix_relerrs(inv_naive, inv_exact)
        header = ["stat", "relerr_hra", "relerr_naive"]
        rows = [
            ["mean", _fmt(sum(err_h) / len(err_h)), _fmt(sum(err_n) / len(err_n))],
            ["maximum", _fmt(max(err_h)), _fmt(max(err_n))],
        ]
        return header, rows

    b_alt, b_pos = rhs_pair(seed, n)
    b = b_alt if table_id == 4 else b_pos
    x_exact = solve(bd, b)
    x_hra = [float(v) for v in x_exact]
    x_naive = naive_lu_solve(m_double, b)
    err_h = _vector_relerrs(x_hra, x_exact)
    err_n = _vector_relerrs(x_naive, x_exact)
    header = ["i", "reference", "relerr_hra", "relerr_naive"]
    rows = [[str(i + 1), _fmt(float(x_exact[i])), _fmt(err_h[i]), _fmt(err_n[i])]
            for i in range(n)]
    return header, rows


def _collocation_bd_for(fig_id: str, n: int):
    nodes = NodeSequence.integers(n)
    if fig_id.endswith("R"):
        return bd_reverse_bessel_collocation(nodes)
    return bd_bessel_collocation(nodes)


def figure(fig_id: str, n_max: int,
           policy: PrecisionPolicy = DEFAULT_POLICY):
    """Long-format sweep rows for one figure over n = 2..n_max.

    ``val``/``valR``: minimal eigenvalue and singular value errors,
    rows ``n,quantity,relerr_hra,relerr_naive``.  ``inv``/``invR``:
    mean and maximum inverse errors, rows
    ``n,stat,relerr_hra,relerr_naive``.
    """
    if fig_id not in FIGURE_IDS:
        raise ValueError(f"figure id must be one of {FIGURE_IDS}, got {fig_id!r}")
    if not (2 <= n_max <= 25):
        raise ValueError(f"n_max must be in 2..25, got {n_max}")
    header = (["n", "quantity", "relerr_hra", "relerr_naive"]
              if fig_id in ("val", "valR")
              else ["n", "stat", "relerr_hra", "relerr_naive"])
    rows = []
    for n in range(2, n_max + 1):
        bd = _collocation_bd_for(fig_id, n)
        m_double = to_double_matrix(expand(bd))
        if fig_id in ("val", "valR"):
            for quantity, reference, naive in (
                ("min_eigenvalue", eigenvalues_reference(bd, policy),
                 naive_eigenvalues(m_double)),
                ("min_singular_value", singular_values_reference(bd, policy),
                 naive_singular_values(m_double)),
            ):
                ref, bits = reference
                hra_min = float(ref[-1])
                err_h = relative_errors_mp([hra_min], [ref[-1]], bits)[0]
                err_n = relative_errors_mp([naive[-1]], [ref[-1]], bits)[0]
                rows.append([str(n), quantity, _fmt(err_h), _fmt(err_n)])
        else:
            inv_exact = inverse(bd)
            inv_hra = to_double_matrix(inv_exact)
            inv_naive = Matrix(np.linalg.inv(
                np.array(m_double.rows, dtype=float)).tolist())
            err_h = _matrix_relerrs(inv_hra, inv_exact)
            err_n = _matrix_relerrs(inv_naive, inv_exact)
            rows.append([str(n), "mean",
                         _fmt(sum(err_h) / len(err_h)),
                         _fmt(sum(err_n) / len(err_n))])
            rows.append([str(n), "maximum", _fmt(max(err_h)), _fmt(max(err_n))])
    return header, rows


def rows_to_csv(header, rows) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(r) for r in rows)
    return "\n".join(lines) + "\n"


def figure_svg(header, rows, title: str,
               width: int = 640, height: int = 420) -> str:
    """Minimal log-y line chart of the sweep's error series."""
    series: dict[str, list[tuple[float, float]]] = {}
    for row in rows:
        n = float(row[0])
        label = row[1]
        for col, kind in ((2, "hra"), (3, "naive")):
            series.setdefault(f"{label}:{kind}", []).append((n, float(row[col])))

    floor = 1e-18
    pts = [(x, max(y, floor)) for vals in series.values() for x, y in vals]
    x_min = min(p[0] for p in pts)
    x_max = max(p[0] for p in pts)
    y_min = math.floor(math.log10(min(p[1] for p in pts)))
    y_max = math.ceil(math.log10(max(p[1] for p in pts)))
    if y_max == y_min:
        y_max += 1
    pad = 50

    def sx(x):
        if x_max == x_min:
            return pad
        return pad + (x - x_min) / (x_max - x_min) * (width - 2 * pad)

    def sy(y):
        ly = math.log10(max(y, floor))
        return height - pad - (ly - y_min) / (y_max - y_min) * (height - 2 * pad)

    palette = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"]
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<text x="{width // 2}" y="20" text-anchor="middle" '
        f'font-family="sans-serif" font-size="14">{title}</text>',
        f'<line x1="{pad}" y1="{height - pad}" x2="{width - pad}" '
        f'y2="{height - pad}" stroke="black"/>',
        f'<line x1="{pad}" y1="{pad}" x2="{pad}" y2="{height - pad}" stroke="black"/>',
    ]
    for decade in range(y_min, y_max + 1):
        y = sy(10.0 ** decade)
        out.append(f'<line x1="{pad - 4}" y1="{y:.1f}" x2="{pad}" y2="{y:.1f}" '
                   f'stroke="black"/>')
        out.append(f'<text x="{pad - 8}" y="{y + 4:.1f}" text-anchor="end" '
                   f'font-family="sans-serif" font-size="10">1e{decade}</text>')
    for x in range(int(x_min), int(x_max) + 1):
        xp = sx(x)
        out.append(f'<line x1="{xp:.1f}" y1="{height - pad}" x2="{xp:.1f}" '
                   f'y2="{height - pad + 4}" stroke="black"/>')
        out.append(f'<text x="{xp:.1f}" y="{height - pad + 16}" '
                   f'text-anchor="middle" font-family="sans-serif" '
                   f'font-size="10">{x}</text>')
    for idx, (label, vals) in enumerate(sorted(series.items())):
        color = palette[idx % len(palette)]
        path = " ".join(f"{sx(x):.1f},{sy(y):.1f}" for x, y in vals)
        out.append(f'<polyline points="{path}" fill="none" stroke="{color}" '
                   f'stroke-width="1.5"/>')
        out.append(f'<text x="{width - pad}" y="{pad + 14 * idx}" '
                   f'text-anchor="end" font-family="sans-serif" font-size="10" '
                   f'fill="{color}">{label}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
