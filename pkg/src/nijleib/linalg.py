"""Exact rational vectors and matrices.

Everything in the package runs on `fractions.Fraction`; no floating point
representation exists anywhere.  Matrices are dense, immutable, and use the
column-action convention: entry [i][j] is the coefficient of basis vector i
in the image of basis vector j.

Rank is computed by fraction-free (Bareiss) elimination; a plain exact
Gaussian elimination is kept solely as a cross-check oracle.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Optional, Sequence

from .errors import ShapeError

Vector = tuple[Fraction, ...]


def frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def format_rational(q: Fraction) -> str:
    """Canonical string form: "p/q" with q > 1, else "p"."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse a canonical rational string; reject non-canonical spellings."""
    from .errors import BundleError

    if not isinstance(text, str):
        raise BundleError(f"rational must be a string, got {text!r}")
    try:
        q = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise BundleError(f"bad rational {text!r}: {exc}") from None
    if format_rational(q) != text:
        raise BundleError(f"non-canonical rational {text!r}; expected {format_rational(q)!r}")
    return q


def vector(entries: Iterable) -> Vector:
    return tuple(frac(e) for e in entries)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def vec_add(a: Vector, b: Vector) -> Vector:
    if len(a) != len(b):
        raise ShapeError(f"vector lengths {len(a)} != {len(b)}")
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Vector, b: Vector) -> Vector:
    if len(a) != len(b):
        raise ShapeError(f"vector lengths {len(a)} != {len(b)}")
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(c, a: Vector) -> Vector:
    c = frac(c)
    return tuple(c * x for x in a)


def is_zero_vector(a: Vector) -> bool:
    return all(x == 0 for x in a)


class Matrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("rows", "cols", "data", "_hash")

    def __init__(self, rows_data: Sequence[Sequence]):
        data = tuple(tuple(frac(e) for e in row) for row in rows_data)
        self.rows = len(data)
        self.cols = len(data[0]) if data else 0
        if any(len(row) != self.cols for row in data):
            raise ShapeError("ragged rows")
        self.data = data
        self._hash = None

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Vector]) -> "Matrix":
        rows = len(columns[0]) if columns else 0
        return cls([[col[i] for col in columns] for i in range(rows)])

    @classmethod
    def diag(cls, entries: Sequence) -> "Matrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.data == other.data

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.data)
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_rational(e) for e in row) for row in self.data)
        return f"Matrix[{body}]"

    def entry(self, i: int, j: int) -> Fraction:
        return self.data[i][j]

    def row(self, i: int) -> Vector:
        return self.data[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.data)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError(f"{self.rows}x{self.cols} + {other.rows}x{other.cols}")
        return Matrix([[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError(f"{self.rows}x{self.cols} - {other.rows}x{other.cols}")
        return Matrix([[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)])

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in row] for row in self.data])

    def scale(self, c) -> "Matrix":
        c = frac(c)
        return Matrix([[c * a for a in row] for row in self.data])

    def __mul__(self, other: "Matrix") -> "Matrix":
        return mat_mul(self, other)

    def pow(self, k: int) -> "Matrix":
        if self.rows != self.cols:
            raise ShapeError("pow needs a square matrix")
        result = Matrix.identity(self.rows)
        for _ in range(k):
            result = result * self
        return result

    def apply(self, v: Vector) -> Vector:
        if len(v) != self.cols:
            raise ShapeError(f"matrix {self.rows}x{self.cols} applied to length-{len(v)} vector")
        out = []
        for row in self.data:
            acc = Fraction(0)
            for a, x in zip(row, v):
                if a and x:
                    acc += a * x
            out.append(acc)
        return tuple(out)

    def transpose(self) -> "Matrix":
        return Matrix([[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def is_zero(self) -> bool:
        return all(e == 0 for row in self.data for e in row)

    def is_square(self) -> bool:
        return self.rows == self.cols


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Exact product, skipping zero entries (assembled coboundary matrices are sparse)."""
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    out = [[Fraction(0)] * b.cols for _ in range(a.rows)]
    for i in range(a.rows):
        arow = a.data[i]
        orow = out[i]
        for k in range(a.cols):
            aik = arow[k]
            if not aik:
                continue
            brow = b.data[k]
            for j in range(b.cols):
                bkj = brow[j]
                if bkj:
                    orow[j] += aik * bkj
    return Matrix(out)


def block_matrix(blocks: Sequence[Sequence[Matrix]]) -> Matrix:
    """Assemble a matrix from a grid of compatible blocks."""
    rows = []
    for block_row in blocks:
        height = block_row[0].rows
        if any(b.rows != height for b in block_row):
            raise ShapeError("inconsistent block heights")
        for i in range(height):
            row: list[Fraction] = []
            for b in block_row:
                row.extend(b.data[i])
            rows.append(row)
    return Matrix(rows)


def block_diag(blocks: Sequence[Matrix]) -> Matrix:
    grid = []
    for i, b in enumerate(blocks):
        grid.append([b if i == j else Matrix.zero(b.rows, blocks[j].cols) for j in range(len(blocks))])
    return block_matrix(grid)


def kron(a: Matrix, b: Matrix) -> Matrix:
    rows = []
    for i in range(a.rows):
        for k in range(b.rows):
            row = []
            for j in range(a.cols):
                aij = a.data[i][j]
                if aij:
                    row.extend(aij * x for x in b.data[k])
                else:
                    row.extend([Fraction(0)] * b.cols)
            rows.append(row)
    return Matrix(rows)


def _integer_rows(m: Matrix) -> list[list[int]]:
    """Clear denominators row by row; rank is unchanged."""
    out = []
    for row in m.data:
        mult = lcm(*(e.denominator for e in row)) if row else 1
        out.append([int(e * mult) for e in row])
    return out


def rank(m: Matrix) -> int:
    """Exact rank via fraction-free (Bareiss) elimination with column pivoting."""
    rows = _integer_rows(m)
    n_rows, n_cols = m.rows, m.cols
    r = 0
    prev = 1
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(r + 1, n_rows):
            ric = rows[i][c]
            rrc = rows[r][c]
            for j in range(c + 1, n_cols):
                rows[i][j] = (rows[i][j] * rrc - ric * rows[r][j]) // prev
            rows[i][c] = 0
        prev = rows[r][c]
        r += 1
        if r == n_rows:
            break
    return r


def gauss_rank(m: Matrix) -> int:
    """Plain exact Gaussian elimination; retained only as an oracle for `rank`."""
    rows = [list(row) for row in m.data]
    n_rows, n_cols = m.rows, m.cols
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [e * inv for e in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == n_rows:
            break
    return r


def _rref(rows: list[list[Fraction]], n_cols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form in place; returns (rows, pivot column indices)."""
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [e * inv for e in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def kernel_basis(m: Matrix) -> list[Vector]:
    """Canonical basis of the right null space.

    Free columns in ascending index order; each basis vector carries a 1 in
    its own free slot, pivot slots filled from the reduced echelon form.
    """
    rows = [list(row) for row in m.data]
    rows, pivots = _rref(rows, m.cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * m.cols
        v[free] = Fraction(1)
        for r_idx, p in enumerate(pivots):
            v[p] = -rows[r_idx][free]
        basis.append(tuple(v))
    return basis


def solve_linear(m: Matrix, rhs: Vector) -> Optional[Vector]:
    """One exact solution of m·x = rhs, or None if inconsistent.

    Deterministic: free variables are set to zero in canonical column order.
    """
    if len(rhs) != m.rows:
        raise ShapeError(f"rhs length {len(rhs)} != rows {m.rows}")
    rows = [list(row) + [frac(b)] for row, b in zip(m.data, rhs)]
    if m.rows == 0:
        return zero_vector(m.cols)
    rows, pivots = _rref(rows, m.cols)
    # A pivot cannot land in the augmented column because _rref only scans
    # the first m.cols columns; inconsistency shows as a nonzero tail entry.
    used = len(pivots)
    for i in range(used, m.rows):
        if rows[i][m.cols] != 0:
            return None
    x = [Fraction(0)] * m.cols
    for r_idx, p in enumerate(pivots):
        x[p] = rows[r_idx][m.cols]
    return tuple(x)
