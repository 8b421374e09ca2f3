"""Line arrangements: parsing, the intersection lattice and its combinatorics."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .exact_linalg import RatMatrix, as_rational, primitive
from .poly import HomPoly, canonical_linear, product


class ArrangementError(ValueError):
    """Invalid arrangement input; ``code`` is one of DUPLICATE_LINE, ZERO_FORM, MALFORMED."""

    def __init__(self, code: str, message: str):
        super().__init__(f"{code}: {message}")
        self.code = code


@dataclass(frozen=True)
class LinForm:
    a: int
    b: int
    c: int

    @classmethod
    def canonical(cls, coeffs: Sequence) -> "LinForm":
        if not any(as_rational(c) for c in coeffs):
            raise ArrangementError("ZERO_FORM", "the zero linear form is not a line")
        return cls(*canonical_linear(coeffs))

    @property
    def coeffs(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    @property
    def poly(self) -> HomPoly:
        return HomPoly.linear(self.a, self.b, self.c)

    def at(self, point: Sequence) -> int:
        return self.a * point[0] + self.b * point[1] + self.c * point[2]

    def __str__(self) -> str:
        return str(self.poly)


@dataclass(frozen=True)
class ProjPoint:
    coords: tuple[int, int, int]

    @classmethod
    def canonical(cls, coords: Sequence) -> "ProjPoint":
        return cls(primitive(coords))

    def __iter__(self):
        return iter(self.coords)

    def __str__(self) -> str:
        return "({}:{}:{})".format(*self.coords)


@dataclass(frozen=True)
class Arrangement:
    lines: tuple[LinForm, ...]

    def __post_init__(self):
        if not self.lines:
            raise ArrangementError("MALFORMED", "an arrangement needs at least one line")
        seen: dict[LinForm, int] = {}
        for i, L in enumerate(self.lines):
            if L in seen:
                raise ArrangementError(
                    "DUPLICATE_LINE", f"lines {seen[L] + 1} and {i + 1} are proportional ({L})")
            seen[L] = i

    @classmethod
    def from_coeffs(cls, rows: Iterable[Sequence]) -> "Arrangement":
        return cls(tuple(LinForm.canonical(r) for r in rows))

    @property
    def d(self) -> int:
        return len(self.lines)

    @cached_property
    def poly(self) -> HomPoly:
        return product([L.poly for L in self.lines])

    def transformed(self, A) -> "Arrangement":
        """The arrangement {L o A}: each line's coefficient row multiplied by A."""
        if not isinstance(A, RatMatrix):
            A = RatMatrix.from_rows(A)
        return Arrangement.from_coeffs(
            [[sum(L.coeffs[i] * A[i, j] for i in range(3)) for j in range(3)] for L in self.lines])

    def as_rows(self) -> list[list[int]]:
        return [list(L.coeffs) for L in self.lines]


def parse(text: str) -> Arrangement:
    """Parse the text format: one line ``a b c`` per linear form, ``#`` comments."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        fields = body.split()
        if len(fields) != 3:
            raise ArrangementError("MALFORMED", f"line {lineno}: expected 3 coefficients, got {len(fields)}")
        try:
            rows.append([Fraction(t) for t in fields])
        except (ValueError, ZeroDivisionError):
            raise ArrangementError("MALFORMED", f"line {lineno}: not rational coefficients: {body!r}") from None
    if not rows:
        raise ArrangementError("MALFORMED", "no lines found")
    for lineno, r in enumerate(rows, 1):
        if not any(r):
            raise ArrangementError("ZERO_FORM", f"form {lineno} is identically zero")
    return Arrangement.from_coeffs(rows)


def format_arrangement(C: Arrangement) -> str:
    return "".join("{} {} {}\n".format(*L.coeffs) for L in C.lines)


@dataclass(frozen=True)
class LatticePoint:
    point: ProjPoint
    lines: frozenset[int]

    @property
    def mult(self) -> int:
        return len(self.lines)


@dataclass(frozen=True)
class Lattice:
    d: int
    points: tuple[LatticePoint, ...]
    fingerprint: str = field(compare=False)

    def mults(self) -> list[int]:
        return [P.mult for P in self.points]

    def find(self, coords: Sequence) -> LatticePoint:
        key = ProjPoint.canonical(coords)
        for P in self.points:
            if P.point == key:
                return P
        raise KeyError(f"{key} is not a multiple point of the arrangement")


def cross(u: Sequence[int], v: Sequence[int]) -> tuple[int, int, int]:
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def _fingerprint(d: int, points: Sequence[LatticePoint]) -> str:
    mult_count = Counter(P.mult for P in points)
    mult_part = ",".join(f"{k}^{v}" for k, v in sorted(mult_count.items(), reverse=True))
    profiles = []
    for i in range(d):
        prof = sorted((P.mult for P in points if i in P.lines), reverse=True)
        profiles.append("(" + ",".join(map(str, prof)) + ")")
    return f"d={d};points={mult_part};lines={''.join(sorted(profiles, reverse=True))}"


def lattice(C: Arrangement) -> Lattice:
    if C.d < 2:
        raise ValueError("the lattice needs at least two lines")
    found: dict[ProjPoint, None] = {}
    for L1, L2 in combinations(C.lines, 2):
        found.setdefault(ProjPoint.canonical(cross(L1.coeffs, L2.coeffs)), None)
    points = []
    for P in found:
        incident = frozenset(i for i, L in enumerate(C.lines) if L.at(P.coords) == 0)
        points.append(LatticePoint(P, incident))
    points.sort(key=lambda P: (-P.mult, P.point.coords))
    pairs = sum(comb(P.mult, 2) for P in points)
    assert pairs == comb(C.d, 2), f"pair count {pairs} != C({C.d},2)"
    return Lattice(C.d, tuple(points), _fingerprint(C.d, points))


def tau(L: Lattice) -> int:
    return sum((P.mult - 1) ** 2 for P in L.points)


def m_and_n(L: Lattice) -> tuple[int, int]:
    """Maximal multiplicity m(C) and n(C); n is 1 when there is a single multiple point."""
    mults = sorted(L.mults(), reverse=True)
    if not mults:
        raise ValueError("no multiple points")
    if len(mults) == 1:
        return mults[0], 1
    return mults[0], mults[1]


def max_points(L: Lattice) -> tuple[LatticePoint, LatticePoint | None]:
    """A point of multiplicity m(C) and a distinct point of multiplicity n(C)."""
    pts = L.points  # sorted by decreasing multiplicity
    return pts[0], (pts[1] if len(pts) > 1 else None)


@dataclass(frozen=True)
class LatticeType:
    kind: str
    params: tuple[int, ...] = ()

    def __str__(self) -> str:
        if self.kind == "NEAR_PENCIL":
            return "NEAR_PENCIL_L({},{})".format(*self.params)
        if self.kind == "TWO_PENCILS":
            return "TWO_PENCILS({},{})".format(*self.params)
        return self.kind


def lattice_type(L: Lattice) -> LatticeType:
    """Classify L(C) by the special lattice shapes of small mdr.

    Checked in order PENCIL, TWO_PENCILS, GENERIC, NEAR_PENCIL, OTHER; the
    shapes overlap (two pencils of sizes (2, m) are also an L(d, m)), and the
    first match wins.
    """
    d = L.d
    if len(L.points) == 1 and L.points[0].mult == d:
        return LatticeType("PENCIL")
    m, n = m_and_n(L)
    two = _two_pencils(L)
    if two is not None:
        return LatticeType("TWO_PENCILS", two)
    if m == 2:
        return LatticeType("GENERIC")
    if n == 2 and 3 <= m <= d - 1:
        return LatticeType("NEAR_PENCIL", (d, m))
    return LatticeType("OTHER")


def _two_pencils(L: Lattice) -> tuple[int, int] | None:
    d = L.d
    for p in L.points:
        m2 = p.mult
        if m2 < 3:
            break
        rest = frozenset(range(d)) - p.lines
        m1 = len(rest)
        if m1 < 2 or m1 > m2:
            continue
        qs = [q for q in L.points if q.lines == rest]
        if not qs:
            continue
        q = qs[0]
        if all(P.mult == 2 for P in L.points if P is not p and P is not q):
            return (m1, m2)
    return None


def fingerprint(L: Lattice) -> str:
    return L.fingerprint


def pencil(m: int, point=(0, 0, 1), start: int = 0) -> list[list[int]]:
    """m distinct lines through ``point`` (integer coordinates)."""
    P = list(point)
    basis = [cross(P, e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    basis = [b for b in basis if any(b)]
    u = basis[0]
    v = next(b for b in basis[1:] if any(cross(u, b)))
    return [[u[i] + t * v[i] for i in range(3)] for t in range(start, start + m)]


def two_pencils(m1: int, m2: int) -> Arrangement:
    """Two pencils through (0:0:1) and (1:0:0) meeting only in double points.

    Avoids y = 0, the one line through both centers.
    """
    first = [[1, t, 0] for t in range(m1)]   # x + t y
    second = [[0, s, 1] for s in range(m2)]  # z + s y
    return Arrangement.from_coeffs(first + second)
