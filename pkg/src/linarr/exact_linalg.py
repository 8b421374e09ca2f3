"""Exact dense linear algebra over the rationals.

Everything reduces to integer matrices (denominators cleared row by row) and
fraction-free Bareiss elimination, so no intermediate quotient is ever
non-integral. Kernels come from back-substitution on the echelon form;
inverses from the Gauss-Jordan variant.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from numbers import Rational
from typing import Sequence

try:
    from gmpy2 import divexact, mpz
except ImportError:  # pragma: no cover - plain ints are exact too, only slower
    mpz = int

    def divexact(a, b):
        return a // b


def as_rational(c) -> Rational:
    """Coerce to an exact rational; integral values come back as ``int``."""
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, (str, Rational)):
        q = Fraction(c)
        return q.numerator if q.denominator == 1 else q
    raise TypeError(f"not an exact rational: {c!r}")


@dataclass(frozen=True)
class RatMatrix:
    rows: int
    cols: int
    entries: tuple  # row-major

    def __post_init__(self):
        if self.rows * self.cols != len(self.entries):
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RatMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(as_rational(c) for r in rows for c in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def row_list(self) -> list[tuple]:
        return [self.row(i) for i in range(self.rows)]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def transpose(self) -> "RatMatrix":
        return RatMatrix(self.cols, self.rows,
                         tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def matvec(self, v: Sequence) -> list:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return [sum(a * b for a, b in zip(self.row(i), v) if a and b) for i in range(self.rows)]

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        cols = [other.transpose().row(j) for j in range(other.cols)]
        return RatMatrix(self.rows, other.cols, tuple(
            as_rational(sum(a * b for a, b in zip(self.row(i), c)))
            for i in range(self.rows) for c in cols))

    def det(self) -> Rational:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        if self.rows == 0:
            return 1
        scale = 1
        int_rows = []
        for r in self.row_list():
            ir, s = _clear_denominators(r)
            int_rows.append(ir)
            scale *= s
        ech, pivots, sign = _bareiss(int_rows, self.cols)
        if len(pivots) < self.rows:
            return 0
        return as_rational(Fraction(sign * int(ech[-1][pivots[-1]]), scale))

    def inverse(self) -> "RatMatrix":
        n = self.rows
        if n != self.cols:
            raise ValueError("inverse of a non-square matrix")
        aug = []
        for i, r in enumerate(self.row_list()):
            aug.append(list(r) + [int(i == j) for j in range(n)])
        int_rows = [_clear_denominators(r)[0] for r in aug]
        ech, pivots, _ = _gauss_jordan(int_rows, 2 * n)
        if pivots[:n] != list(range(n)):
            raise ZeroDivisionError("singular matrix")
        return RatMatrix(n, n, tuple(
            as_rational(Fraction(int(ech[i][n + j]), int(ech[i][i]))) for i in range(n) for j in range(n)))


def _clear_denominators(row: Sequence) -> tuple[list[int], int]:
    """Scale a rational row to integers; returns (row, scale factor used)."""
    den = 1
    for c in row:
        if isinstance(c, Fraction) and c.denominator != 1:
            den = lcm(den, c.denominator)
    if den == 1:
        return [int(c) for c in row], 1
    return [int(c * den) for c in row], den


def _bareiss(rows: list[list[int]], ncols: int) -> tuple[list[list], list[int], int]:
    """Forward fraction-free elimination to row echelon form.

    Returns (rows, pivot columns, sign of the row permutation). The last
    pivot is the determinant of the leading pivot minor. Pivots are the first
    nonzero entry scanning columns left to right.
    """
    rows = [[mpz(x) for x in r] for r in rows]
    n = len(rows)
    pivots: list[int] = []
    prev = mpz(1)
    sign = 1
    r = 0
    for c in range(ncols):
        if r == n:
            break
        piv = next((i for i in range(r, n) if rows[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            sign = -sign
        p = rows[r][c]
        tail = rows[r][c:]
        # left of column c every row below the pivot row is already zero
        for i in range(r + 1, n):
            row = rows[i]
            a = row[c]
            if a:
                rows[i] = row[:c] + [divexact(p * x - a * y, prev) for x, y in zip(row[c:], tail)]
            elif p != prev:
                rows[i] = row[:c] + [divexact(p * x, prev) for x in row[c:]]
        prev = p
        pivots.append(c)
        r += 1
    return rows, pivots, sign


def _gauss_jordan(rows: list[list[int]], ncols: int) -> tuple[list[list], list[int], int]:
    """Fraction-free Gauss-Jordan elimination on integer rows.

    Same contract as ``_bareiss``, but rows above each pivot are cleared too.
    Afterwards every pivot entry equals the last pivot value D, and the first
    ``len(pivots)`` rows divided by D are the reduced row echelon form.
    """
    rows = [[mpz(x) for x in r] for r in rows]
    n = len(rows)
    pivots: list[int] = []
    prev = mpz(1)
    sign = 1
    r = 0
    for c in range(ncols):
        if r == n:
            break
        piv = next((i for i in range(r, n) if rows[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            sign = -sign
        prow = rows[r]
        p = prow[c]
        tail = prow[c:]
        for i in range(n):
            if i == r:
                continue
            row = rows[i]
            a = row[c]
            if i > r:
                if a:
                    rows[i] = row[:c] + [divexact(p * x - a * y, prev) for x, y in zip(row[c:], tail)]
                elif p != prev:
                    rows[i] = row[:c] + [divexact(p * x, prev) for x in row[c:]]
            elif a:
                rows[i] = [divexact(p * x - a * y, prev) for x, y in zip(row, prow)]
            elif p != prev:
                rows[i] = [divexact(p * x, prev) for x in row]
        prev = p
        pivots.append(c)
        r += 1
    return rows, pivots, sign


def _integer_rows(M: RatMatrix) -> list[list[int]]:
    return [_clear_denominators(M.row(i))[0] for i in range(M.rows)]


def primitive(v: Sequence) -> tuple[int, ...]:
    """Scale a nonzero rational vector to coprime integers, first nonzero entry positive."""
    ints, _ = _clear_denominators(v)
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    lead = next(x for x in ints if x)
    if lead < 0:
        g = -g
    return tuple(x // g for x in ints)


@dataclass(frozen=True)
class Echelon:
    """Row echelon form of an integer-scaled matrix: nonzero rows and their pivot columns."""
    cols: int
    rows: tuple
    pivots: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.pivots)


def echelon(M: RatMatrix) -> Echelon:
    if M.rows == 0 or M.cols == 0:
        return Echelon(M.cols, (), ())
    ech, pivots, _ = _bareiss(_integer_rows(M), M.cols)
    return Echelon(M.cols, tuple(tuple(r) for r in ech[:len(pivots)]), tuple(pivots))


def rank(M: RatMatrix) -> int:
    return echelon(M).rank


def _back_substitute(E: Echelon, j: int) -> tuple[int, ...]:
    """The kernel vector with x_j = 1 and the other free entries 0, made primitive."""
    x = {j: 1}
    for i in reversed(range(E.rank)):
        pc, row = E.pivots[i], E.rows[i]
        s = sum(row[k] * v for k, v in x.items())
        if not s:
            continue
        e = row[pc]
        g = gcd(int(s), int(e))
        t = abs(e) // g
        if t != 1:
            x = {k: v * t for k, v in x.items()}
        x[pc] = -(s // g) * (1 if e > 0 else -1)
    v = [0] * E.cols
    for k, val in x.items():
        v[k] = int(val)
    return primitive(v)


def kernel_from_echelon(E: Echelon) -> list[tuple[int, ...]]:
    pivot_set = set(E.pivots)
    return [_back_substitute(E, j) for j in range(E.cols) if j not in pivot_set]


def kernel_basis(M: RatMatrix) -> list[tuple[int, ...]]:
    """Basis of the right null space, one vector per free column.

    The vector for free column j has x_j = 1 and zeros at the other free
    columns, scaled to primitive integers with first nonzero entry positive.
    It is unique, so the output depends only on the matrix.
    """
    return kernel_from_echelon(echelon(M))


def in_span(v: Sequence, B: Sequence[Sequence]) -> bool:
    """True iff ``v`` lies in the rational span of the vectors ``B``."""
    n = len(v)
    if any(len(b) != n for b in B):
        raise ValueError("dimension mismatch")
    if not any(v):
        return True
    if not B:
        return False
    base = RatMatrix.from_rows(B, n)
    return rank(base) == rank(RatMatrix.from_rows(list(B) + [v], n))
