"""Dense matrices, Neville elimination, and total-positivity tests.

Neville elimination zeros each column by subtracting a multiple of the
adjacent previous row; the surviving entries are the pivots and the
ratios used are the multipliers.  Over exact rationals the whole
tableau is computed without rounding, which is what every
total-positivity check and bidiagonal factorization here builds on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import DimensionMismatch, InvalidNodes, ParseError, SingularMatrix, TooLarge
from .scalars import format_rational, parse_rational


class Matrix:
    """Row-major dense matrix; entries may be Fraction, float, or mpf.

    Immutable by convention: operations return new matrices and never
    mutate ``rows`` in place.
    """

    __slots__ = ("rows", "n_rows", "n_cols")

    def __init__(self, rows):
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise ValueError("matrix must be non-empty")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        self.rows = rows
        self.n_rows = len(rows)
        self.n_cols = ncols

    @classmethod
    def identity(cls, n, one=Fraction(1), zero=Fraction(0)):
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @property
    def is_square(self):
        return self.n_rows == self.n_cols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def transpose(self) -> "Matrix":
        return Matrix([[self.rows[i][j] for i in range(self.n_rows)]
                       for j in range(self.n_cols)])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.n_cols != other.n_rows:
            raise DimensionMismatch(
                f"{self.n_rows}x{self.n_cols} @ {other.n_rows}x{other.n_cols}")
        out = []
        for i in range(self.n_rows):
            row = []
            for j in range(other.n_cols):
                acc = self.rows[i][0] * other.rows[0][j]
                for k in range(1, self.n_cols):
                    acc = acc + self.rows[i][k] * other.rows[k][j]
                row.append(acc)
            out.append(row)
        return Matrix(out)

    def __eq__(self, other):
        return (isinstance(other, Matrix)
                and self.rows == other.rows)

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.rows))

    def map(self, fn) -> "Matrix":
        return Matrix([[fn(x) for x in row] for row in self.rows])

    def __repr__(self):
        return f"Matrix({self.rows!r})"

    # text format: first line "n_rows n_cols", then one row per line of
    # whitespace-separated rational tokens
    def to_text(self) -> str:
        lines = [f"{self.n_rows} {self.n_cols}"]
        for row in self.rows:
            lines.append(" ".join(format_rational(Fraction(x)) for x in row))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Matrix":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ParseError("empty matrix text")
        head = lines[0].split()
        if len(head) != 2:
            raise ParseError(f"bad header line: {lines[0]!r}")
        try:
            nr, nc = int(head[0]), int(head[1])
        except ValueError:
            raise ParseError(f"bad header line: {lines[0]!r}") from None
        if len(lines) != nr + 1:
            raise ParseError(f"expected {nr} rows, got {len(lines) - 1}")
        rows = []
        for ln in lines[1:]:
            toks = ln.split()
            if len(toks) != nc:
                raise ParseError(f"expected {nc} entries in row: {ln!r}")
            rows.append([parse_rational(t) for t in toks])
        return cls(rows)


@dataclass(frozen=True)
class NodeSequence:
    """Strictly increasing positive collocation nodes, stored exactly."""

    nodes: tuple

    def __post_init__(self):
        nodes = tuple(Fraction(t) for t in self.nodes)
        object.__setattr__(self, "nodes", nodes)
        if not nodes:
            raise InvalidNodes("empty node sequence")
        if nodes[0] <= 0:
            raise InvalidNodes(f"nodes must be positive, got {nodes[0]}")
        for a, b in zip(nodes, nodes[1:]):
            if not a < b:
                raise InvalidNodes(f"nodes must be strictly increasing: {a} !< {b}")

    def __len__(self):
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    @classmethod
    def from_string(cls, text: str) -> "NodeSequence":
        return cls(tuple(parse_rational(t) for t in text.split(",")))

    @classmethod
    def integers(cls, n: int) -> "NodeSequence":
        return cls(tuple(Fraction(k) for k in range(1, n + 1)))

    def to_string(self) -> str:
        return ",".join(format_rational(t) for t in self.nodes)


@dataclass
class NevilleResult:
    """Full tableau of a Neville elimination run.

    ``pivots[i][j]`` (i >= j, 0-based) is the entry surviving in column
    j when that column is eliminated; ``multipliers[i][j]`` (i > j) is
    the ratio used to kill it.  ``upper`` is the final triangular
    matrix; its diagonal equals the diagonal pivots.
    """

    pivots: list
    multipliers: list
    upper: Matrix
    row_exchanges_used: bool

    @property
    def diagonal_pivots(self):
        return [self.pivots[i][i] for i in range(len(self.pivots))]


def neville_eliminate(a: Matrix) -> NevilleResult:
    """Run Neville elimination over exact rationals.

    Rows with a zero entry in the working column are moved to the
    bottom of the active block first (flagging ``row_exchanges_used``),
    then each remaining row is reduced with the row directly above it,
    bottom-up, so only adjacent rows ever interact.
    """
    if not a.is_square:
        raise DimensionMismatch("Neville elimination needs a square matrix")
    n = a.n_rows
    work = [list(row) for row in a.rows]
    zero = Fraction(0)
    pivots = [[zero] * n for _ in range(n)]
    mult = [[zero] * n for _ in range(n)]
    exchanges = False

    for t in range(n - 1):
        block = work[t:]
        keep = [r for r in block if r[t] != 0]
        push = [r for r in block if r[t] == 0]
        if push and keep and block != keep + push:
            exchanges = True
        work[t:] = keep + push
        for i in range(t, n):
            pivots[i][t] = work[i][t]
        for i in range(n - 1, t, -1):
            if work[i][t] != 0:
                m = work[i][t] / work[i - 1][t]
                mult[i][t] = m
                for j in range(t, n):
                    work[i][j] = work[i][j] - m * work[i - 1][j]
    pivots[n - 1][n - 1] = work[n - 1][n - 1]

    upper = Matrix(work)
    if any(upper[i, i] == 0 for i in range(n)):
        raise SingularMatrix("zero diagonal pivot: matrix is singular")
    return NevilleResult(
        pivots=[row[: i + 1] for i, row in enumerate(pivots)],
        multipliers=[row[:i] for i, row in enumerate(mult)],
        upper=upper,
        row_exchanges_used=exchanges,
    )


def is_tp_nonsingular(a: Matrix) -> bool:
    """Nonsingular-TP test: elimination of A and of U^T must run with no
    row exchanges and only nonnegative pivots."""
    res = neville_eliminate(a)
    if res.row_exchanges_used:
        return False
    if any(p < 0 for i, row in enumerate(res.pivots) for p in row):
        return False
    res_t = neville_eliminate(res.upper.transpose())
    if res_t.row_exchanges_used:
        return False
    return all(p >= 0 for row in res_t.pivots for p in row)


def _det(rows) -> Fraction:
    """Exact determinant by fraction-free-ish Gaussian elimination."""
    n = len(rows)
    rows = [list(r) for r in rows]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if rows[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = -det
        det *= rows[c][c]
        inv = 1 / rows[c][c]
        for r in range(c + 1, n):
            if rows[r][c] != 0:
                f = rows[r][c] * inv
                for k in range(c, n):
                    rows[r][k] -= f * rows[c][k]
    return det


def determinant_exact(a: Matrix) -> Fraction:
    if not a.is_square:
        raise DimensionMismatch("determinant needs a square matrix")
    return _det(a.rows)


def all_minors_nonnegative(a: Matrix, max_n: int = 7, strict: bool = False) -> bool:
    """Brute-force TP/STP oracle: enumerate every square minor exactly.

    Guarded by ``max_n`` because the minor count explodes
    combinatorially; this is a test oracle, not a production check.
    """
    if not a.is_square:
        raise DimensionMismatch("minor test needs a square matrix")
    n = a.n_rows
    if n > max_n:
        raise TooLarge(f"n={n} exceeds max_n={max_n}")
    idx = range(n)
    for k in range(1, n + 1):
        for rows_sel in combinations(idx, k):
            for cols_sel in combinations(idx, k):
                sub = [[a.rows[i][j] for j in cols_sel] for i in rows_sel]
                d = _det(sub)
                if strict:
                    if d <= 0:
                        return False
                elif d < 0:
                    return False
    return True


def vandermonde_matrix(nodes: NodeSequence) -> Matrix:
    """V[i][j] = t_i ** j, exact rationals."""
    return Matrix([[t ** j for j in range(len(nodes))] for t in nodes])
