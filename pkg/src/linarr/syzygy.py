"""The graded module AR(f) of Jacobian relations a*f_x + b*f_y + c*f_z = 0.

Graded pieces are computed as kernels of exact relation matrices. On top of
that sit the explicit pencil syzygies attached to a multiple point, the
quotient-class test against multiples of a minimal syzygy, and the
determinantal map into the Bourbaki ideal.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from . import bounds
from .arrangement import Arrangement, LatticePoint, ProjPoint, lattice, tau
from .exact_linalg import RatMatrix, echelon, in_span, kernel_from_echelon, primitive, rank
from .poly import (
    HomPoly, _product_table, add, change_coords, det3, divide_exact, monomials,
    mul, num_monomials, partial, product, scale,
)


class SyzygyError(ValueError):
    def __init__(self, code: str, message: str):
        super().__init__(f"{code}: {message}")
        self.code = code


@dataclass(frozen=True)
class Syzygy:
    degree: int
    a: HomPoly
    b: HomPoly
    c: HomPoly

    def __post_init__(self):
        if not (self.a.degree == self.b.degree == self.c.degree == self.degree):
            raise ValueError("syzygy components must share the syzygy degree")

    @classmethod
    def from_vector(cls, q: int, vec: Sequence) -> "Syzygy":
        N = num_monomials(q)
        if len(vec) != 3 * N:
            raise ValueError(f"degree {q} syzygy vector needs {3 * N} entries")
        return cls(q, *(HomPoly.from_coeffs(q, vec[i * N:(i + 1) * N]) for i in range(3)))

    @property
    def components(self) -> tuple[HomPoly, HomPoly, HomPoly]:
        return (self.a, self.b, self.c)

    def vector(self) -> tuple:
        return self.a.coeffs + self.b.coeffs + self.c.coeffs

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero() and self.c.is_zero()

    def times(self, h: HomPoly) -> "Syzygy":
        return Syzygy(self.degree + h.degree, mul(h, self.a), mul(h, self.b), mul(h, self.c))

    def to_dict(self) -> dict:
        return {"degree": self.degree, "components": [str(p) for p in self.components]}


@lru_cache(maxsize=1024)
def jacobian(C: Arrangement) -> tuple[HomPoly, HomPoly, HomPoly]:
    f = C.poly
    return partial(f, 0), partial(f, 1), partial(f, 2)


def relation_matrix(C: Arrangement, m: int) -> RatMatrix:
    """Matrix of (a, b, c) in (S_m)^3 -> a f_x + b f_y + c f_z in S_{m+d-1}.

    Columns are (component, monomial) with the component outermost; rows are
    the degree m+d-1 monomials.
    """
    if m < 0:
        raise ValueError("degree must be non-negative")
    d = C.d
    N = num_monomials(m)
    nrows = num_monomials(m + d - 1)
    ncols = 3 * N
    rows = [[0] * ncols for _ in range(nrows)]
    table = _product_table(m, d - 1)
    for v, fv in enumerate(jacobian(C)):
        nz = [(b, cb) for b, cb in enumerate(fv.coeffs) if cb]
        for a in range(N):
            col = v * N + a
            t = table[a]
            for b, cb in nz:
                rows[t[b]][col] = cb
    return RatMatrix.from_rows(rows, ncols)


@lru_cache(maxsize=64)
def _relation_echelon(C: Arrangement, k: int):
    # shared by ar_dim and ar_basis: one elimination per degree
    return echelon(relation_matrix(C, k))


@lru_cache(maxsize=4096)
def ar_basis(C: Arrangement, k: int) -> tuple[Syzygy, ...]:
    """Basis of AR(f)_k, one syzygy per normalized kernel vector."""
    return tuple(Syzygy.from_vector(k, v) for v in kernel_from_echelon(_relation_echelon(C, k)))


@lru_cache(maxsize=4096)
def ar_dim(C: Arrangement, k: int) -> int:
    E = _relation_echelon(C, k)
    return E.cols - E.rank


@lru_cache(maxsize=1024)
def mdr(C: Arrangement) -> int:
    # the Koszul relation (f_y, -f_x, 0) bounds the scan by d-1
    for m in range(C.d):
        if ar_dim(C, m) > 0:
            return m
    raise AssertionError("no relation up to degree d-1; the Koszul relation was missed")


def min_syzygy(C: Arrangement) -> Syzygy:
    return ar_basis(C, mdr(C))[0]


def verify_syzygy(C: Arrangement, rho: Syzygy) -> bool:
    fx, fy, fz = jacobian(C)
    total = add(add(mul(rho.a, fx), mul(rho.b, fy)), mul(rho.c, fz))
    return total.is_zero()


def koszul(C: Arrangement) -> Syzygy:
    fx, fy, _ = jacobian(C)
    return Syzygy(fx.degree, fy, scale(-1, fx), HomPoly.zero(fx.degree))


_XYZ = (HomPoly.var("x"), HomPoly.var("y"), HomPoly.var("z"))


def _pencil_split(C: Arrangement, p) -> tuple[LatticePoint, HomPoly]:
    """(the lattice point p, product h of the lines not through p)."""
    L = lattice(C)
    try:
        point = L.find(p.coords if isinstance(p, ProjPoint) else tuple(p))
    except KeyError:
        raise SyzygyError("NOT_A_LATTICE_POINT", f"{tuple(p)} is not a multiple point") from None
    h = product([M.poly for i, M in enumerate(C.lines) if i not in point.lines])
    return point, h


def rho_point(C: Arrangement, p, method: str = "direct", axis: int = 0) -> Syzygy:
    """The syzygy of degree d - n(p) attached to the multiple point p.

    With f = g*h, g the lines through p, the relation is
    (D_p h) * (x, y, z) - d * h * p, where D_p is the derivative in the
    direction p; D_p kills g, so Euler's identity makes it a syzygy.
    ``method="frame"`` builds the same relation by moving p to a coordinate
    point first (see ``rho_point_frame``). Output is primitive integral.
    """
    if method == "frame":
        return rho_point_frame(C, p, axis)
    if method != "direct":
        raise ValueError(f"unknown method {method!r}")
    point, h = _pencil_split(C, p)
    d = C.d
    q = d - point.mult
    pc = point.point.coords
    if q == 0:
        comps = [scale(-d * pc[i], h) for i in range(3)]
    else:
        Dh = HomPoly.zero(q - 1)
        for i in range(3):
            if pc[i]:
                Dh = add(Dh, scale(pc[i], partial(h, i)))
        comps = [add(mul(_XYZ[i], Dh), scale(-d * pc[i], h)) for i in range(3)]
    rho = Syzygy.from_vector(q, primitive([c for comp in comps for c in comp.coeffs]))
    if not verify_syzygy(C, rho):
        raise AssertionError(f"pencil syzygy at {point.point} failed verification")
    return rho


def _frame(p: Sequence[int], axis: int) -> RatMatrix:
    """Invertible matrix whose column ``axis`` is p, completed by standard vectors."""
    for i, j in combinations(range(3), 2):
        cols = [[int(t == i) for t in range(3)], [int(t == j) for t in range(3)]]
        cols.insert(axis, list(p))
        P = RatMatrix.from_rows([[cols[c][r] for c in range(3)] for r in range(3)])
        if P.det() != 0:
            return P
    raise AssertionError("unreachable: a nonzero vector extends to a basis")


def rho_point_frame(C: Arrangement, p, axis: int = 0) -> Syzygy:
    """Pencil syzygy built in a frame where p is a coordinate point.

    Coordinates v = P v' with column ``axis`` of P equal to p. In the new
    coordinates the lines through p do not involve that variable, and
    rho' = h_axis * (x, y, z) - d * h * e_axis: for axis 0 this is
    (x h_x - d h, y h_x, z h_x), for axis 1 (x h_y, y h_y - d h, z h_y).
    It is carried back by rho(v) = P rho'(P^-1 v) and checked in the
    original coordinates.
    """
    point, _ = _pencil_split(C, p)
    d = C.d
    P = _frame(point.point.coords, axis)
    moved = C.transformed(P)
    through = [M for M in moved.lines if M.coeffs[axis] == 0]
    rest = [M for M in moved.lines if M.coeffs[axis] != 0]
    assert len(through) == point.mult
    h = product([M.poly for M in rest])
    q = d - point.mult
    if q == 0:
        comps = [HomPoly.zero(0) for _ in range(3)]
        comps[axis] = scale(-d, h)
    else:
        h_axis = partial(h, axis)
        comps = [mul(_XYZ[i], h_axis) for i in range(3)]
        comps[axis] = add(comps[axis], scale(-d, h))
    Pinv = P.inverse()
    pulled = [change_coords(c, Pinv) for c in comps]
    back = []
    for i in range(3):
        acc = HomPoly.zero(q)
        for j in range(3):
            if P[i, j]:
                acc = add(acc, scale(P[i, j], pulled[j]))
        back.append(acc)
    rho = Syzygy.from_vector(q, primitive([c for comp in back for c in comp.coeffs]))
    if not verify_syzygy(C, rho):
        raise AssertionError(f"pencil syzygy at {point.point} failed verification")
    return rho


def multiples_span(rho1: Syzygy, e: int) -> list[tuple]:
    return [rho1.times(HomPoly.from_terms(e, {mono: 1})).vector() for mono in monomials(e)]


def class_nonzero_mod(C: Arrangement, rho: Syzygy, rho1: Syzygy) -> bool:
    """True iff rho is not in S_e * rho1 with e = deg rho - deg rho1."""
    e = rho.degree - rho1.degree
    if e < 0:
        raise ValueError("rho must have degree at least that of rho1")
    return not in_span(rho.vector(), multiples_span(rho1, e))


def bourbaki_image(C: Arrangement, rho1: Syzygy, rho: Syzygy) -> HomPoly:
    """det(rows (x,y,z), rho1, rho) / f, of degree deg rho + deg rho1 + 1 - d."""
    delta = det3([_XYZ, rho1.components, rho.components])
    target = rho.degree + rho1.degree + 1 - C.d
    if target < 0:
        if delta.is_zero():
            raise ValueError(f"Bourbaki image lives in negative degree {target}")
    return divide_exact(delta, C.poly)


def is_free(C: Arrangement) -> bool:
    return tau(lattice(C)) == bounds.tau_max(C.d, mdr(C))


def bourbaki_dim(C: Arrangement, rho1: Syzygy, k: int) -> int:
    """dim B(C, rho1)_k, from images of a basis of AR(f) in the matching degree."""
    if is_free(C):
        raise SyzygyError("FREE_CURVE", "the Bourbaki sequence degenerates for free curves")
    q = k + C.d - 1 - rho1.degree
    if k < 0 or q < 0:
        return 0
    images = [bourbaki_image(C, rho1, rho).coeffs for rho in ar_basis(C, q)]
    if not images:
        return 0
    return rank(RatMatrix.from_rows(images, num_monomials(k)))
