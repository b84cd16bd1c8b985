"""Algebraic computations from a bidiagonal decomposition.

The exact routes (determinant, solve, inverse) stay in rational
arithmetic end to end and round once at the very end if a double is
wanted.  The spectral routes expand the decomposition exactly, move to
multiprecision floats, and certify the returned doubles by doubling
the working precision until two runs agree.  The ``naive_*`` functions
are deliberately plain double-precision LAPACK calls, kept as the
error-comparison baseline.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from mpmath import mp

from .bidiagonal import BidiagonalDecomposition, expand
from .errors import DimensionMismatch, NoConvergence, NonRealSpectrum
from .matrices import Matrix
from .scalars import DEFAULT_POLICY, PrecisionPolicy, refine_with_bits, to_mpf


def _sign(x) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class SignPatternVector:
    """A right-hand side together with its recognized sign structure."""

    values: tuple
    pattern: str

    @classmethod
    def classify(cls, values) -> "SignPatternVector":
        vals = tuple(values)
        signs = [_sign(v) for v in vals]
        nonzero = [s for s in signs if s != 0]
        if len(nonzero) <= 1:
            return cls(vals, "single_support")
        alternating = all(signs[i] * signs[i + 1] <= 0 for i in range(len(signs) - 1))
        if alternating and nonzero:
            return cls(vals, "alternating")
        return cls(vals, "general")


def determinant(bd: BidiagonalDecomposition) -> Fraction:
    """det = product of the diagonal pivots (unit bidiagonal factors)."""
    out = Fraction(1)
    for d in bd.diag:
        out *= d
    return out


def solve_stages(bd: BidiagonalDecomposition, b):
    """Yield the vector after each bidiagonal pass of the solve.

    The system runs through the factors in turn: forward substitution
    through each lower factor, a diagonal scaling, then back
    substitution through each upper factor (2n - 1 triangular solves).
    """
    n = bd.n
    if len(b) != n:
        raise DimensionMismatch(f"rhs length {len(b)} != order {n}")
    v = list(b)
    # F_{n-1} ... F_1 on the left: peel outermost first
    for i in range(n - 1, 0, -1):
        w = list(v)
        for k in range(i, n):
            w[k] = v[k] - bd.data[k][k - i] * w[k - 1]
        v = w
        yield ("lower", i, list(v))
    v = [v[k] / bd.data[k][k] for k in range(n)]
    yield ("diag", 0, list(v))
    # G_1 ... G_{n-1} on the right: peel G_1 first
    for i in range(1, n):
        w = list(v)
        for k in range(n - 1, i - 1, -1):
            w[k - 1] = v[k - 1] - bd.data[k - i][k] * w[k]
        v = w
        yield ("upper", i, list(v))


def solve(bd: BidiagonalDecomposition, b) -> list:
    """Exact solution of expand(bd) @ x = b.

    For an alternating-sign b every subtraction in the passes combines
    terms of opposite sign, which is the structural reason this route
    carries high relative accuracy; in rationals it is exact for any b.
    """
    out = None
    for _, _, v in solve_stages(bd, b):
        out = v
    return out


def inverse(bd: BidiagonalDecomposition) -> Matrix:
    """Exact inverse, column by column via unit right-hand sides."""
    n = bd.n
    cols = []
    for j in range(n):
        e = [Fraction(1) if i == j else Fraction(0) for i in range(n)]
        cols.append(solve(bd, e))
    return Matrix([[cols[j][i] for j in range(n)] for i in range(n)])


@dataclass(frozen=True)
class SpectrumResult:
    values: tuple
    achieved_precision_bits: int
    kind: str


def _to_mp_matrix(m: Matrix):
    return mp.matrix([[to_mpf(x) for x in row] for row in m.rows])


def _eig_compute(m: Matrix, imag_rtol: float):
    def compute(bits):
        with mp.workprec(bits):
            am = _to_mp_matrix(m)
            vals = mp.eig(am, left=False, right=False)
            if isinstance(vals, tuple):  # 1x1 input: mpmath returns (E, L, R)
                vals = vals[0]
            tol = mp.mpf(imag_rtol)
            for v in vals:
                if abs(v.imag) > tol * max(mp.mpf(1), abs(v)):
                    raise NonRealSpectrum(
                        f"eigenvalue {v} has non-negligible imaginary part")
            return sorted((v.real for v in vals), reverse=True)
    return compute


def eigenvalues_reference(bd: BidiagonalDecomposition,
                          policy: PrecisionPolicy = DEFAULT_POLICY):
    """Certified multiprecision eigenvalues: (mpf list descending, bits)."""
    m = expand(bd)
    return refine_with_bits(_eig_compute(m, policy.agreement_rtol), policy)


def eigenvalues(bd: BidiagonalDecomposition,
                policy: PrecisionPolicy = DEFAULT_POLICY) -> SpectrumResult:
    """Eigenvalues of expand(bd), descending, certified to double accuracy."""
    vals, bits = eigenvalues_reference(bd, policy)
    return SpectrumResult(tuple(float(v) for v in vals), bits, "eigenvalues")


def singular_values_reference(bd: BidiagonalDecomposition,
                              policy: PrecisionPolicy = DEFAULT_POLICY):
    """Certified multiprecision singular values: (mpf list descending, bits).

    Uses the exact rational Gram matrix M^T M (so no accuracy is lost
    forming it) and a multiprecision symmetric eigensolve.
    """
    m = expand(bd)
    gram = m.transpose() @ m

    def compute(bits):
        with mp.workprec(bits):
            gm = _to_mp_matrix(gram)
            vals = mp.eigsy(gm, eigvals_only=True)
            return sorted((mp.sqrt(v) for v in vals), reverse=True)

    return refine_with_bits(compute, policy)


def singular_values(bd: BidiagonalDecomposition,
                    policy: PrecisionPolicy = DEFAULT_POLICY) -> SpectrumResult:
    vals, bits = singular_values_reference(bd, policy)
    return SpectrumResult(tuple(float(v) for v in vals), bits, "singular_values")


def to_double_matrix(m: Matrix) -> Matrix:
    """Round every entry to the nearest double (entry-wise, one rounding)."""
    return m.map(float)


def _to_numpy(m: Matrix) -> np.ndarray:
    return np.array([[float(x) for x in row] for row in m.rows], dtype=float)


def naive_eigenvalues(m: Matrix) -> list[float]:
    """Plain double-precision eigenvalues (LAPACK), descending real parts.

    No HRA measures on purpose: this is the baseline whose breakdown
    the comparison tables exhibit.
    """
    if not m.is_square:
        raise DimensionMismatch("eigenvalues need a square matrix")
    vals = np.linalg.eigvals(_to_numpy(m))
    return sorted((float(v.real) for v in vals), reverse=True)


def naive_singular_values(m: Matrix) -> list[float]:
    """Plain double-precision singular values (LAPACK), descending."""
    vals = np.linalg.svd(_to_numpy(m), compute_uv=False)
    return [float(v) for v in vals]


def naive_lu_solve(m: Matrix, b) -> list[float]:
    """Double-precision LU solve of the expanded system (the A\\b baseline)."""
    x = np.linalg.solve(_to_numpy(m), np.array([float(v) for v in b], dtype=float))
    return [float(v) for v in x]


def relative_errors(approx, reference) -> list[float]:
    """Componentwise |approx - ref| / |ref|."""
    if len(approx) != len(reference):
        raise DimensionMismatch("length mismatch")
    out = []
    for a, r in zip(approx, reference):
        if r == 0:
            raise ZeroDivisionError("reference entry is zero")
        out.append(abs(float(a) - float(r)) / abs(float(r)))
    return out


def relative_errors_mp(approx, reference, bits: int) -> list[float]:
    """Componentwise relative errors with an mpf reference vector."""
    if len(approx) != len(reference):
        raise DimensionMismatch("length mismatch")
    out = []
    with mp.workprec(bits):
        for a, r in zip(approx, reference):
            if r == 0:
                raise ZeroDivisionError("reference entry is zero")
            out.append(float(abs(mp.mpf(a) - r) / abs(r)))
    return out
