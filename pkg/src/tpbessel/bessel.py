"""Bessel and reverse Bessel polynomial bases and their collocation BDs.

The degree-n Bessel polynomial has coefficients (n+k)!/(2^k (n-k)! k!);
the reverse polynomial reverses that coefficient list.  Both
change-of-basis matrices to the monomials are lower triangular,
totally positive, and have closed-form bidiagonal decompositions with
integer-ratio entries, which is what makes every collocation-matrix
computation here exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .bidiagonal import BidiagonalDecomposition, bd_from_matrix, bd_product, bd_transpose
from .errors import InvalidNodes
from .matrices import Matrix, NodeSequence, vandermonde_matrix

BASIS_NAMES = ("bessel", "rbessel", "monomial")


def semifactorial(n: int) -> int:
    """n!! = n (n-2) (n-4) ... down to 1 or 2."""
    if n < 1:
        raise ValueError("semifactorial needs a positive integer")
    out = 1
    m = n
    while m > 0:
        out *= m
        m -= 2
    return out


def bessel_poly(n: int) -> list[int]:
    """Ascending coefficients of the degree-n Bessel polynomial."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    coeffs = []
    for k in range(n + 1):
        num = factorial(n + k)
        den = 2 ** k * factorial(n - k) * factorial(k)
        q, r = divmod(num, den)
        assert r == 0
        coeffs.append(q)
    return coeffs


def reverse_bessel_poly(n: int) -> list[int]:
    """Ascending coefficients of the degree-n reverse Bessel polynomial."""
    return list(reversed(bessel_poly(n)))


def _eval_poly(coeffs, x: Fraction) -> Fraction:
    """Horner evaluation, exact in rationals."""
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def basis_matrix_A(n: int) -> Matrix:
    """Lower-triangular change of basis: row i = Bessel polynomial i-1."""
    if n < 1:
        raise ValueError("order must be >= 1")
    rows = []
    for i in range(n):
        coeffs = bessel_poly(i)
        rows.append([Fraction(coeffs[j]) if j <= i else Fraction(0)
                     for j in range(n)])
    return Matrix(rows)


def basis_matrix_C(n: int) -> Matrix:
    """Lower-triangular change of basis: row i = reverse Bessel polynomial i-1."""
    if n < 1:
        raise ValueError("order must be >= 1")
    rows = []
    for i in range(n):
        coeffs = reverse_bessel_poly(i)
        rows.append([Fraction(coeffs[j]) if j <= i else Fraction(0)
                     for j in range(n)])
    return Matrix(rows)


def bd_of_A(n: int) -> BidiagonalDecomposition:
    """Closed-form BD of the Bessel change-of-basis matrix.

    Diagonal: 1, then (2i-3)!! for i >= 2; lower multipliers
    (2i-2)(2i-3) / ((2i-j-1)(2i-j-2)); upper part zero.
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    data = [[Fraction(0)] * n for _ in range(n)]
    for i1 in range(1, n + 1):
        data[i1 - 1][i1 - 1] = (Fraction(1) if i1 == 1
                                else Fraction(semifactorial(2 * i1 - 3)))
        for j1 in range(1, i1):
            data[i1 - 1][j1 - 1] = Fraction(
                (2 * i1 - 2) * (2 * i1 - 3),
                (2 * i1 - j1 - 1) * (2 * i1 - j1 - 2))
    return BidiagonalDecomposition(data)


def bd_of_C(n: int) -> BidiagonalDecomposition:
    """Closed-form BD of the reverse Bessel change-of-basis matrix.

    Unit diagonal; lower multiplier 2i-2j-1 in odd columns, zero in
    even columns; upper part zero.
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    data = [[Fraction(0)] * n for _ in range(n)]
    for i1 in range(1, n + 1):
        data[i1 - 1][i1 - 1] = Fraction(1)
        for j1 in range(1, i1):
            if j1 % 2 == 1:
                data[i1 - 1][j1 - 1] = Fraction(2 * i1 - 2 * j1 - 1)
    return BidiagonalDecomposition(data)


def bd_vandermonde(nodes: NodeSequence) -> BidiagonalDecomposition:
    """BD of the Vandermonde matrix at the nodes, by exact elimination.

    The only subtractions are differences of node values and their
    products, i.e. of initial data, and exact rationals make even those
    error-free.
    """
    return bd_from_matrix(vandermonde_matrix(nodes))


def bd_bessel_collocation(nodes: NodeSequence) -> BidiagonalDecomposition:
    """BD of the Bessel collocation matrix M = V A^T at the nodes."""
    n = len(nodes)
    return bd_product(bd_vandermonde(nodes), bd_transpose(bd_of_A(n)))


def bd_reverse_bessel_collocation(nodes: NodeSequence) -> BidiagonalDecomposition:
    """BD of the reverse Bessel collocation matrix M_r = V C^T."""
    n = len(nodes)
    return bd_product(bd_vandermonde(nodes), bd_transpose(bd_of_C(n)))


@dataclass(frozen=True)
class CollocationSpec:
    basis: str
    nodes: NodeSequence

    def __post_init__(self):
        if self.basis not in BASIS_NAMES:
            raise ValueError(f"unknown basis {self.basis!r}; pick from {BASIS_NAMES}")

    @property
    def n(self):
        return len(self.nodes)


def collocation_matrix(spec: CollocationSpec) -> Matrix:
    """Direct evaluation path: entry (i, j) = basis polynomial j at node i.

    This is the independent oracle against which the factorization
    route is checked.
    """
    if spec.basis == "monomial":
        return vandermonde_matrix(spec.nodes)
    poly = bessel_poly if spec.basis == "bessel" else reverse_bessel_poly
    n = spec.n
    coeffs = [poly(j) for j in range(n)]
    return Matrix([[_eval_poly(coeffs[j], t) for j in range(n)]
                   for t in spec.nodes])


def collocation_bd(spec: CollocationSpec) -> BidiagonalDecomposition:
    """Factorization-route BD for any supported basis."""
    if spec.basis == "monomial":
        return bd_vandermonde(spec.nodes)
    if spec.basis == "bessel":
        return bd_bessel_collocation(spec.nodes)
    return bd_reverse_bessel_collocation(spec.nodes)
