"""Dense homogeneous polynomials in x, y, z with exact rational coefficients.

Monomials of degree n are indexed in graded-lex order with x > y > z, so
x^n sits at index 0 and z^n at the last index C(n+2, 2) - 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from .exact_linalg import RatMatrix, as_rational, primitive

VARS = ("x", "y", "z")


class NotDivisible(ArithmeticError):
    code = "NOT_DIVISIBLE"


def num_monomials(n: int) -> int:
    return comb(n + 2, 2) if n >= 0 else 0


@lru_cache(maxsize=None)
def monomials(n: int) -> tuple[tuple[int, int, int], ...]:
    return tuple((i, j, n - i - j) for i in range(n, -1, -1) for j in range(n - i, -1, -1))


@lru_cache(maxsize=None)
def monomial_index(n: int) -> dict[tuple[int, int, int], int]:
    return {m: k for k, m in enumerate(monomials(n))}


@lru_cache(maxsize=None)
def _product_table(n1: int, n2: int) -> tuple[tuple[int, ...], ...]:
    """table[a][b] = index in degree n1+n2 of monomial a (deg n1) times monomial b (deg n2)."""
    idx = monomial_index(n1 + n2)
    return tuple(
        tuple(idx[(a[0] + b[0], a[1] + b[1], a[2] + b[2])] for b in monomials(n2))
        for a in monomials(n1)
    )


@dataclass(frozen=True)
class HomPoly:
    degree: int
    coeffs: tuple

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("negative degree")
        if len(self.coeffs) != num_monomials(self.degree):
            raise ValueError(
                f"degree {self.degree} needs {num_monomials(self.degree)} coefficients, "
                f"got {len(self.coeffs)}"
            )

    @classmethod
    def zero(cls, degree: int) -> "HomPoly":
        return cls(degree, (0,) * num_monomials(degree))

    @classmethod
    def from_coeffs(cls, degree: int, coeffs: Sequence) -> "HomPoly":
        return cls(degree, tuple(as_rational(c) for c in coeffs))

    @classmethod
    def from_terms(cls, degree: int, terms: dict) -> "HomPoly":
        """Build from {(i, j, k): coefficient}."""
        c = [0] * num_monomials(degree)
        idx = monomial_index(degree)
        for mono, v in terms.items():
            if sum(mono) != degree:
                raise ValueError(f"monomial {mono} is not of degree {degree}")
            c[idx[tuple(mono)]] += as_rational(v)
        return cls.from_coeffs(degree, c)

    @classmethod
    def linear(cls, a, b, c) -> "HomPoly":
        return cls.from_coeffs(1, (a, b, c))

    @classmethod
    def constant(cls, c) -> "HomPoly":
        return cls.from_coeffs(0, (c,))

    @classmethod
    def var(cls, name: str) -> "HomPoly":
        e = [0, 0, 0]
        e[VARS.index(name)] = 1
        return cls.linear(*e)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def terms(self) -> dict[tuple[int, int, int], object]:
        return {m: c for m, c in zip(monomials(self.degree), self.coeffs) if c}

    def __add__(self, other: "HomPoly") -> "HomPoly":
        return add(self, other)

    def __sub__(self, other: "HomPoly") -> "HomPoly":
        return add(self, scale(-1, other))

    def __neg__(self) -> "HomPoly":
        return scale(-1, self)

    def __mul__(self, other):
        if isinstance(other, HomPoly):
            return mul(self, other)
        return scale(other, self)

    __rmul__ = __mul__

    def __call__(self, x, y, z):
        total = 0
        for (i, j, k), c in self.terms().items():
            total += c * x**i * y**j * z**k
        return as_rational(total)

    def __str__(self) -> str:
        return format_poly(self)


def _check_degree(p: HomPoly, q: HomPoly) -> None:
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")


def add(p: HomPoly, q: HomPoly) -> HomPoly:
    _check_degree(p, q)
    return HomPoly(p.degree, tuple(as_rational(a + b) for a, b in zip(p.coeffs, q.coeffs)))


def scale(c, p: HomPoly) -> HomPoly:
    c = as_rational(c)
    return HomPoly(p.degree, tuple(as_rational(c * a) for a in p.coeffs))


def mul(p: HomPoly, q: HomPoly) -> HomPoly:
    out = [0] * num_monomials(p.degree + q.degree)
    table = _product_table(p.degree, q.degree)
    qnz = [(b, cb) for b, cb in enumerate(q.coeffs) if cb]
    for a, ca in enumerate(p.coeffs):
        if not ca:
            continue
        row = table[a]
        for b, cb in qnz:
            out[row[b]] += ca * cb
    return HomPoly(p.degree + q.degree, tuple(as_rational(c) for c in out))


def product(polys: Sequence[HomPoly]) -> HomPoly:
    result = HomPoly.constant(1)
    for p in polys:
        result = mul(result, p)
    return result


def partial(p: HomPoly, var: str | int) -> HomPoly:
    v = VARS.index(var) if isinstance(var, str) else var
    if p.degree == 0:
        raise ValueError("cannot differentiate a degree-0 polynomial")
    idx = monomial_index(p.degree - 1)
    out = [0] * num_monomials(p.degree - 1)
    for mono, c in zip(monomials(p.degree), p.coeffs):
        e = mono[v]
        if c and e:
            lower = list(mono)
            lower[v] -= 1
            out[idx[tuple(lower)]] += e * c
    return HomPoly(p.degree - 1, tuple(out))


def divide_exact(p: HomPoly, q: HomPoly) -> HomPoly:
    """Return r with p == q * r, or raise NotDivisible."""
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.degree < q.degree:
        raise NotDivisible(f"degree {p.degree} is below divisor degree {q.degree}")
    n = p.degree - q.degree
    qmonos = monomials(q.degree)
    lead = next(k for k, c in enumerate(q.coeffs) if c)
    lead_mono, lead_c = qmonos[lead], Fraction(q.coeffs[lead])
    q_terms = [(qmonos[k], c) for k, c in enumerate(q.coeffs) if c]
    rem = list(p.coeffs)
    pidx = monomial_index(p.degree)
    pmonos = monomials(p.degree)
    quotient = [0] * num_monomials(n)
    nidx = monomial_index(n)
    # grlex restricted to one degree is lex, a monomial order, so the leading
    # term of a multiple of q is always divisible by the leading term of q
    for k in range(len(rem)):
        c = rem[k]
        if not c:
            continue
        m = pmonos[k]
        shift = (m[0] - lead_mono[0], m[1] - lead_mono[1], m[2] - lead_mono[2])
        if min(shift) < 0:
            raise NotDivisible(f"{format_poly(p)} is not divisible by {format_poly(q)}")
        t = as_rational(c / lead_c)
        quotient[nidx[shift]] = t
        for qm, qc in q_terms:
            j = pidx[(qm[0] + shift[0], qm[1] + shift[1], qm[2] + shift[2])]
            rem[j] = as_rational(rem[j] - t * qc)
    return HomPoly(n, tuple(quotient))


def det3(M: Sequence[Sequence[HomPoly]]) -> HomPoly:
    """Determinant of a 3x3 matrix of homogeneous polynomials."""
    (a, b, c), (d, e, f), (g, h, i) = M
    terms = [
        (1, (a, e, i)), (1, (b, f, g)), (1, (c, d, h)),
        (-1, (c, e, g)), (-1, (b, d, i)), (-1, (a, f, h)),
    ]
    degrees = {sum(p.degree for p in t) for _, t in terms}
    if len(degrees) != 1:
        raise ValueError(f"incompatible degrees in det3: {sorted(degrees)}")
    total = None
    for s, (u, v, w) in terms:
        t = mul(mul(u, v), w)
        if s < 0:
            t = scale(-1, t)
        total = t if total is None else add(total, t)
    return total


def change_coords(p: HomPoly, A: RatMatrix | Sequence[Sequence]) -> HomPoly:
    """Return p o A, i.e. the polynomial v -> p(A v).

    Variable i is replaced by the linear form given by row i of A.
    """
    if not isinstance(A, RatMatrix):
        A = RatMatrix.from_rows(A)
    if (A.rows, A.cols) != (3, 3):
        raise ValueError("coordinate change must be 3x3")
    if A.det() == 0:
        raise ValueError("singular coordinate change")
    forms = [HomPoly.linear(*A.row(i)) for i in range(3)]
    powers = [[HomPoly.constant(1)] for _ in range(3)]
    for v in range(3):
        for _ in range(p.degree):
            powers[v].append(mul(powers[v][-1], forms[v]))
    out = HomPoly.zero(p.degree)
    for (i, j, k), c in p.terms().items():
        out = add(out, scale(c, mul(mul(powers[0][i], powers[1][j]), powers[2][k])))
    return out


def canonical_linear(coeffs: Sequence) -> tuple[int, int, int]:
    """Primitive integer form of a linear form, first nonzero coefficient positive."""
    return primitive([as_rational(c) for c in coeffs])


def format_poly(p: HomPoly) -> str:
    """Render as a sum of terms c·x^i y^j z^k in graded-lex order."""
    parts = []
    for (i, j, k), c in p.terms().items():
        vars_ = " ".join(
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(VARS, (i, j, k)) if e
        )
        parts.append(f"{c}·{vars_}" if vars_ else f"{c}")
    if not parts:
        return "0"
    return " + ".join(parts).replace("+ -", "- ")
