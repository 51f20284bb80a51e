"""Dense exact linear algebra over the rationals.

Nothing in this package ever touches floating point.  Scalars are Python
ints or ``fractions.Fraction`` values (arbitrary precision, always reduced,
positive denominator), and every routine is deterministic, so kernel bases
and inertia computations are reproducible bit for bit.

Primitives:

* ``RatMatrix``       dense row-major matrix of exact scalars.
* ``rank``            fraction-free integer elimination after clearing
                      denominators row by row.
* ``kernel_basis``    canonical kernel basis read off the reduced echelon
                      form (columns of the result span the kernel).
* ``signature``       inertia (positive, negative, zero) of a symmetric
                      matrix by rational congruence diagonalization.
                      Eigenvalues are never computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

Rational = Fraction

Scalar = int | Fraction


class NonSymmetricError(ValueError):
    """Raised when an inertia computation is asked for a non-symmetric matrix."""


def normalize_scalar(x: Scalar) -> Scalar:
    """Canonical scalar form: plain int whenever the denominator is 1."""
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, int):
        return x
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


def scalar_str(x: Scalar) -> str:
    # serialization format is "num/den", reduced, den > 0
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def scalar_from_str(s: str) -> Scalar:
    num, _, den = s.partition("/")
    return normalize_scalar(Fraction(int(num), int(den) if den else 1))


class RatMatrix:
    """Immutable-by-convention dense matrix with exact rational entries."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, entries: list[list[Scalar]], cols: int | None = None):
        self.rows = len(entries)
        if self.rows == 0:
            if cols is None:
                raise ValueError("a 0-row matrix needs an explicit column count")
            self.cols = cols
        else:
            self.cols = len(entries[0])
            if cols is not None and cols != self.cols:
                raise ValueError("explicit column count disagrees with row length")
        data = []
        for row in entries:
            if len(row) != self.cols:
                raise ValueError("ragged rows")
            data.append([normalize_scalar(x) for x in row])
        self.data = data

    @classmethod
    def zero(cls, rows: int, cols: int) -> "RatMatrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def from_columns(cls, columns: list[list[Scalar]], rows: int | None = None) -> "RatMatrix":
        if not columns:
            if rows is None:
                raise ValueError("a 0-column matrix needs an explicit row count")
            return cls([[] for _ in range(rows)], cols=0)
        nrows = len(columns[0])
        return cls([[col[i] for col in columns] for i in range(nrows)], cols=len(columns))

    def column(self, j: int) -> list[Scalar]:
        return [row[j] for row in self.data]

    def columns(self) -> list[list[Scalar]]:
        return [self.column(j) for j in range(self.cols)]

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self.data == other.data

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.data)))

    def __repr__(self) -> str:
        return f"RatMatrix({self.rows}x{self.cols})"

    def to_lists(self) -> list[list[Scalar]]:
        return [list(row) for row in self.data]

    def transpose(self) -> "RatMatrix":
        return RatMatrix(
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        out = [[0] * other.cols for _ in range(self.rows)]
        odata = other.data
        for i in range(self.rows):
            arow = self.data[i]
            crow = out[i]
            for k, a in enumerate(arow):
                if a:
                    brow = odata[k]
                    for j, b in enumerate(brow):
                        if b:
                            crow[j] += a * b
        return RatMatrix([[normalize_scalar(x) for x in row] for row in out], cols=other.cols)

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch in addition")
        return RatMatrix(
            [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)],
            cols=self.cols,
        )

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        return self + other.scale(-1)

    def scale(self, c: Scalar) -> "RatMatrix":
        return RatMatrix([[c * x for x in row] for row in self.data], cols=self.cols)

    def __neg__(self) -> "RatMatrix":
        return self.scale(-1)

    def hstack(self, other: "RatMatrix") -> "RatMatrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch in hstack")
        return RatMatrix(
            [r1 + r2 for r1, r2 in zip(self.data, other.data)],
            cols=self.cols + other.cols,
        )

    def is_zero(self) -> bool:
        return all(not x for row in self.data for x in row)

    def is_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(
            self.data[i][j] == self.data[j][i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def trace(self) -> Scalar:
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        return normalize_scalar(sum(self.data[i][i] for i in range(self.rows)))


@dataclass(frozen=True)
class Signature:
    """Inertia triple of a symmetric bilinear form."""

    positive: int
    negative: int
    zero: int

    def astuple(self) -> tuple[int, int, int]:
        return (self.positive, self.negative, self.zero)

    @property
    def rank(self) -> int:
        return self.positive + self.negative


def _cleared_int_rows(m: RatMatrix) -> list[list[int]]:
    # row scaling changes neither rank nor kernel, so clear denominators per row
    out = []
    for row in m.data:
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = den * x.denominator // gcd(den, x.denominator)
        if den == 1:
            out.append([int(x) for x in row])
        else:
            out.append([int(x * den) for x in row])
    return out


def _row_echelon(rows: list[list[int]], cols: int) -> tuple[list[list[int]], list[int]]:
    """Fraction-free forward elimination on integer rows.

    Pivots are chosen deterministically: columns left to right, first
    remaining row with a nonzero entry.  Each update eliminates with the
    integer combination p*row - a*pivot scaled by gcd(p, a), then strips the
    content of the new row, so entries stay integral and small.
    Returns the nonzero echelon rows and their pivot columns.
    """
    nrows = len(rows)
    pivots: list[int] = []
    pr = 0
    for pc in range(cols):
        sel = None
        for i in range(pr, nrows):
            if rows[i][pc]:
                sel = i
                break
        if sel is None:
            continue
        rows[pr], rows[sel] = rows[sel], rows[pr]
        piv = rows[pr]
        p = piv[pc]
        ptail = piv[pc:]
        for i in range(pr + 1, nrows):
            a = rows[i][pc]
            if a:
                g = gcd(p, a)
                pa = p // g
                aa = a // g
                tail = [pa * x - aa * y for x, y in zip(rows[i][pc:], ptail)]
                c = 0
                for v in tail:
                    if v:
                        c = gcd(c, v)
                        if c == 1:
                            break
                if c > 1:
                    tail = [v // c for v in tail]
                rows[i] = [0] * pc + tail
        pivots.append(pc)
        pr += 1
        if pr == nrows:
            break
    return rows[:pr], pivots


def rank(m: RatMatrix) -> int:
    """Rank over the rationals, by exact fraction-free elimination."""
    if m.rows == 0 or m.cols == 0:
        return 0
    _, pivots = _row_echelon(_cleared_int_rows(m), m.cols)
    return len(pivots)


def _reduced_echelon(m: RatMatrix) -> tuple[list[list[Scalar]], list[int]]:
    # canonical reduced form: pivots are 1 and are the only nonzero entry
    # in their column; rows of the result are exact rationals
    if m.rows == 0 or m.cols == 0:
        return [], []
    ech, pivots = _row_echelon(_cleared_int_rows(m), m.cols)
    red: list[list[Scalar]] = [list(r) for r in ech]
    for i in reversed(range(len(pivots))):
        p = pivots[i]
        inv = red[i][p]
        red[i] = [normalize_scalar(Fraction(x, inv) if isinstance(x, int) else x / inv) for x in red[i]]
        for t in range(i):
            c = red[t][p]
            if c:
                red[t] = [normalize_scalar(x - c * y) for x, y in zip(red[t], red[i])]
    return red, pivots


def reduced_echelon(m: RatMatrix) -> tuple[RatMatrix, tuple[int, ...]]:
    """Canonical reduced row echelon form (zero rows dropped) and pivot columns.

    The nonzero rows are the canonical basis of the row space: each pivot
    entry is 1 and is the only nonzero entry in its column.
    """
    red, pivots = _reduced_echelon(m)
    return RatMatrix(red, cols=m.cols), tuple(pivots)


def kernel_basis(m: RatMatrix) -> RatMatrix:
    """Canonical basis of the right kernel, one basis vector per column.

    The basis comes from the reduced echelon form: the column for free
    column f carries 1 in slot f and the negated reduced entries in the
    pivot slots, so the result is deterministic and m @ kernel_basis(m) = 0.
    """
    red, pivots = _reduced_echelon(m)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    cols = []
    for f in free:
        v: list[Scalar] = [0] * m.cols
        v[f] = 1
        for i, p in enumerate(pivots):
            v[p] = normalize_scalar(-red[i][f])
        cols.append(v)
    return RatMatrix.from_columns(cols, rows=m.cols)


def _sym_swap(a: list[list[Scalar]], i: int, j: int) -> None:
    a[i], a[j] = a[j], a[i]
    for row in a:
        row[i], row[j] = row[j], row[i]


def _sym_pair_transform(a: list[list[Scalar]], i: int, j: int) -> None:
    # basis change (u, v) -> (u + v, u - v); with zero diagonal and
    # a[i][j] = c this produces diagonal entries 2c and -2c
    n = len(a)
    for t in range(n):
        a[i][t], a[j][t] = a[i][t] + a[j][t], a[i][t] - a[j][t]
    for t in range(n):
        a[t][i], a[t][j] = a[t][i] + a[t][j], a[t][i] - a[t][j]


def signature(m: RatMatrix) -> Signature:
    """Inertia of a symmetric matrix via congruence diagonalization.

    Deterministic symmetric pivoting: at step k take the first nonzero
    diagonal entry in the active block; if the active diagonal is entirely
    zero, apply the rank-2 transform (u, v) -> (u + v, u - v) to the first
    active pair with a nonzero off-diagonal entry.  Raises
    ``NonSymmetricError`` unless m equals its transpose.
    """
    if m.rows != m.cols or not m.is_symmetric():
        raise NonSymmetricError(f"signature needs a symmetric matrix, got {m.rows}x{m.cols}")
    n = m.rows
    a: list[list[Scalar]] = m.to_lists()
    pos = neg = 0
    for k in range(n):
        if not a[k][k]:
            sel = None
            for l in range(k + 1, n):
                if a[l][l]:
                    sel = l
                    break
            if sel is not None:
                _sym_swap(a, k, sel)
            else:
                pair = None
                for i in range(k, n):
                    for j in range(i + 1, n):
                        if a[i][j]:
                            pair = (i, j)
                            break
                    if pair:
                        break
                if pair is None:
                    break  # active block is identically zero
                i, j = pair
                _sym_pair_transform(a, i, j)
                if i != k:
                    _sym_swap(a, k, i)
        p = a[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            c = a[i][k]
            if c:
                f = normalize_scalar(Fraction(c, p) if isinstance(c, int) and isinstance(p, int) else c / p)
                arow_k = a[k]
                arow_i = a[i]
                for j in range(k + 1, n):
                    if arow_k[j]:
                        arow_i[j] = normalize_scalar(arow_i[j] - f * arow_k[j])
                arow_i[k] = 0
    return Signature(pos, neg, n - pos - neg)


def audit_canonical(m: RatMatrix) -> bool:
    """Check every entry is an int or a reduced Fraction with positive denominator."""
    for row in m.data:
        for x in row:
            if isinstance(x, int):
                continue
            if not isinstance(x, Fraction):
                return False
            if x.denominator <= 1:
                return False  # denominator 1 must have been normalized to int
            if gcd(abs(x.numerator), x.denominator) != 1:
                return False
    return True
