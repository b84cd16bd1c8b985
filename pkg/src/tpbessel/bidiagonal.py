"""The packed bidiagonal decomposition of a nonsingular TP matrix.

Every nonsingular totally positive matrix factors uniquely as
``A = F_{n-1} ... F_1 D G_1 ... G_{n-1}`` with nonnegative unit
bidiagonal factors and a positive diagonal D.  The whole factorization
packs into one n x n array: lower multipliers below the diagonal, the
transposed upper multipliers above it, and the diagonal pivots on it.
That packed array is the canonical in-memory and on-disk form here.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DimensionMismatch, NotTotallyPositive, ParseError
from .matrices import Matrix, is_tp_nonsingular, neville_eliminate
from .scalars import format_rational, parse_rational


class BidiagonalDecomposition:
    """Packed n x n bidiagonal decomposition.

    ``data[i][j]`` holds, 0-based: the lower multiplier m[i][j] for
    i > j, the diagonal pivot d[i] for i == j, and the transposed upper
    multiplier for i < j.
    """

    __slots__ = ("data", "n")

    def __init__(self, data):
        data = [list(r) for r in data]
        n = len(data)
        if any(len(r) != n for r in data):
            raise DimensionMismatch("packed BD array must be square")
        self.data = data
        self.n = n

    @classmethod
    def identity(cls, n):
        one, zero = Fraction(1), Fraction(0)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @property
    def diag(self):
        return [self.data[i][i] for i in range(self.n)]

    def lower(self, i, j):
        """Multiplier m[i][j] (0-based, i > j)."""
        return self.data[i][j]

    def upper(self, i, j):
        """Upper multiplier for the (i, j) superdiagonal slot (i < j)."""
        return self.data[i][j]

    def __eq__(self, other):
        return (isinstance(other, BidiagonalDecomposition)
                and self.data == other.data)

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.data))

    def __repr__(self):
        return f"BidiagonalDecomposition({self.data!r})"

    def map(self, fn):
        return BidiagonalDecomposition([[fn(x) for x in row] for row in self.data])


def bd_from_matrix(a: Matrix) -> BidiagonalDecomposition:
    """Exact bidiagonal decomposition via Neville elimination of A and A^T."""
    if not a.is_square:
        raise DimensionMismatch("BD needs a square matrix")
    if not is_tp_nonsingular(a):
        raise NotTotallyPositive("matrix is not nonsingular totally positive")
    n = a.n_rows
    res = neville_eliminate(a)
    res_t = neville_eliminate(a.transpose())
    data = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        data[i][i] = res.pivots[i][i]
        for j in range(i):
            data[i][j] = res.multipliers[i][j]
            data[j][i] = res_t.multipliers[i][j]
    return BidiagonalDecomposition(data)


def _lower_factor(bd: BidiagonalDecomposition, i: int) -> Matrix:
    """F_i (1-based i): subdiagonal entries m[k][k-i] in rows i..n-1."""
    n = bd.n
    f = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
    for k in range(i, n):
        f[k][k - 1] = bd.data[k][k - i]
    return Matrix(f)


def _upper_factor(bd: BidiagonalDecomposition, i: int) -> Matrix:
    """G_i (1-based i): superdiagonal entries taken from the packed upper part."""
    n = bd.n
    g = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
    for k in range(i, n):
        g[k - 1][k] = bd.data[k - i][k]
    return Matrix(g)


def expand(bd: BidiagonalDecomposition) -> Matrix:
    """Multiply out F_{n-1} ... F_1 D G_1 ... G_{n-1}.

    All factor entries are nonnegative, so this is subtraction-free:
    only products and sums of same-sign terms occur.
    """
    n = bd.n
    d = Matrix([[bd.data[i][i] if i == j else 0 for j in range(n)] for i in range(n)])
    acc = d
    for i in range(1, n):
        acc = _lower_factor(bd, i) @ acc
    for i in range(1, n):
        acc = acc @ _upper_factor(bd, i)
    return acc


def bd_transpose(bd: BidiagonalDecomposition) -> BidiagonalDecomposition:
    """BD of the transposed matrix: swap the packed triangles."""
    n = bd.n
    return BidiagonalDecomposition(
        [[bd.data[j][i] for j in range(n)] for i in range(n)])


def bd_product(bd1: BidiagonalDecomposition,
               bd2: BidiagonalDecomposition) -> BidiagonalDecomposition:
    """BD of the product matrix expand(bd1) @ expand(bd2).

    Computed exactly: multiply the expanded rational matrices and
    refactor.  The product of nonsingular TP matrices is nonsingular
    TP, so the result always exists and is unique.
    """
    if bd1.n != bd2.n:
        raise DimensionMismatch(f"orders differ: {bd1.n} vs {bd2.n}")
    return bd_from_matrix(expand(bd1) @ expand(bd2))


def validate(bd: BidiagonalDecomposition) -> list[str]:
    """Check positivity, nonnegativity, and the uniqueness zero patterns.

    Returns a list of human-readable violations (empty when valid).
    In each packed column, a zero in the strictly-lower part forces
    zeros below it; in each packed row, a zero in the strictly-upper
    part forces zeros to its right.
    """
    n = bd.n
    bad = []
    for i in range(n):
        if not bd.data[i][i] > 0:
            bad.append(f"d_{i + 1} not positive")
    for i in range(n):
        for j in range(n):
            if i != j and bd.data[i][j] < 0:
                bad.append(f"entry ({i + 1},{j + 1}) negative")
    for j in range(n):
        seen_zero = None
        for i in range(j + 1, n):
            if bd.data[i][j] == 0:
                seen_zero = i
            elif seen_zero is not None:
                bad.append(
                    f"lower zero pattern broken in column {j + 1}: "
                    f"m_({seen_zero + 1},{j + 1})=0 but m_({i + 1},{j + 1})!=0")
                break
    for i in range(n):
        seen_zero = None
        for j in range(i + 1, n):
            if bd.data[i][j] == 0:
                seen_zero = j
            elif seen_zero is not None:
                bad.append(
                    f"upper zero pattern broken in row {i + 1}: "
                    f"zero at column {seen_zero + 1} but nonzero at "
                    f"column {j + 1}")
                break
    return bad


# BDF v1 on-disk format: "BDF1 n" header, then n rows of n rational tokens.

def to_bdf(bd: BidiagonalDecomposition) -> str:
    lines = [f"BDF1 {bd.n}"]
    for row in bd.data:
        lines.append(" ".join(format_rational(Fraction(x)) for x in row))
    return "\n".join(lines) + "\n"


def from_bdf(text: str) -> BidiagonalDecomposition:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty BDF text")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "BDF1":
        raise ParseError(f"bad BDF header: {lines[0]!r}")
    try:
        n = int(head[1])
    except ValueError:
        raise ParseError(f"bad BDF header: {lines[0]!r}") from None
    if len(lines) != n + 1:
        raise ParseError(f"expected {n} rows, got {len(lines) - 1}")
    data = []
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != n:
            raise ParseError(f"expected {n} entries in row: {ln!r}")
        data.append([parse_rational(t) for t in toks])
    return BidiagonalDecomposition(data)
