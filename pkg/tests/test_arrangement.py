import random
from collections import Counter
from fractions import Fraction
from itertools import combinations

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from linarr.arrangement import (
    Arrangement, ArrangementError, LatticeType, format_arrangement, lattice, lattice_type,
    m_and_n, parse, pencil, tau, two_pencils,
)
from linarr.corpus import near_pencil_rows, pencil_rows


def oracle_multiplicities(rows):
    """Multiplicity histogram via sympy null spaces, independent of the cross-product route."""
    points = {}
    for i, j in combinations(range(len(rows)), 2):
        (v,) = sympy.Matrix([rows[i], rows[j]]).nullspace()
        v = v / next(c for c in v if c != 0)
        key = tuple(v)
        points.setdefault(key, set()).update((i, j))
    return Counter(len(s) for s in points.values())


def random_rows(rng, d, bound=6):
    while True:
        rows = [[rng.randint(-bound, bound) for _ in range(3)] for _ in range(d)]
        try:
            Arrangement.from_coeffs(rows)
            return rows
        except ArrangementError:
            continue


def test_parse_and_format_round_trip():
    C = parse("# triangle\n1 0 0\n0 1 0   # y\n\n0 0 2\n")
    assert C.as_rows() == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert parse(format_arrangement(C)) == C
    assert parse("1/2 -1/3 0\n0 0 1\n").as_rows() == [[3, -2, 0], [0, 0, 1]]


@pytest.mark.parametrize("text, code", [
    ("1 0 0\n2 0 0\n", "DUPLICATE_LINE"),
    ("1 0 0\n-1 0 0\n", "DUPLICATE_LINE"),
    ("0 0 0\n", "ZERO_FORM"),
    ("1 0\n", "MALFORMED"),
    ("1 a 0\n", "MALFORMED"),
    ("# nothing\n", "MALFORMED"),
])
def test_parse_errors(text, code):
    with pytest.raises(ArrangementError) as exc:
        parse(text)
    assert exc.value.code == code


def test_canonical_lines():
    C = Arrangement.from_coeffs([[-2, 4, 0], [0, Fraction(1, 2), Fraction(3, 2)]])
    assert C.as_rows() == [[1, -2, 0], [0, 1, 3]]


def test_lattice_c1(c1):
    L = lattice(c1)
    assert Counter(L.mults()) == {4: 1, 3: 1, 2: 12}
    assert tau(L) == 9 + 4 + 12 == 25
    assert m_and_n(L) == (4, 3)
    assert L.points[0].point.coords == (0, 0, 1)
    assert L.find((0, 0, 5)).mult == 4
    with pytest.raises(KeyError):
        L.find((1, 1, 1))


def test_lattice_c3(c3):
    L = lattice(c3)
    assert Counter(L.mults()) == {3: 4, 2: 9}
    assert m_and_n(L) == (3, 3)


def test_pencil_conventions():
    L = lattice(Arrangement.from_coeffs(pencil_rows(5)))
    assert len(L.points) == 1
    assert m_and_n(L) == (5, 1)
    assert tau(L) == 16
    assert lattice_type(L) == LatticeType("PENCIL")


def test_lattice_types(c1, c2, triangle):
    assert str(lattice_type(lattice(c1))) == "TWO_PENCILS(3,4)"
    assert str(lattice_type(lattice(c2))) == "OTHER"
    assert str(lattice_type(lattice(triangle))) == "GENERIC"
    assert str(lattice_type(lattice(Arrangement.from_coeffs(near_pencil_rows(6))))) == "NEAR_PENCIL_L(6,5)"
    for m1, m2 in [(2, 3), (3, 3), (3, 4), (4, 5)]:
        assert lattice_type(lattice(two_pencils(m1, m2))) == LatticeType("TWO_PENCILS", (m1, m2))


def test_two_pencils_lattice():
    for m1, m2 in [(2, 2), (2, 3), (3, 3), (3, 4)]:
        L = lattice(two_pencils(m1, m2))
        want = Counter({2: m1 * m2})
        want[m1] += 1
        want[m2] += 1
        assert Counter(L.mults()) == want


def test_pencil_helper():
    rows = pencil(4, point=(1, 2, 3))
    assert all(a + 2 * b + 3 * c == 0 for a, b, c in rows)
    assert lattice(Arrangement.from_coeffs(rows)).mults() == [4]


def test_fingerprints_separate_c1_c2(c1, c2):
    f1, f2 = lattice(c1).fingerprint, lattice(c2).fingerprint
    assert f1 != f2
    # same multiplicity histogram, so only the incidence part differs
    assert f1.split(";lines=")[0] == f2.split(";lines=")[0]


def test_lattice_matches_sympy_oracle():
    rng = random.Random(11)
    for _ in range(25):
        d = rng.randint(3, 7)
        rows = random_rows(rng, d, bound=3)
        L = lattice(Arrangement.from_coeffs(rows))
        assert Counter(L.mults()) == oracle_multiplicities(rows)


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 7), st.integers(0, 2**32))
def test_invariance_under_permutation_and_coordinates(d, seed):
    rnd = random.Random(seed)
    rows = random_rows(rnd, d, bound=3)
    C = Arrangement.from_coeffs(rows)
    L = lattice(C)
    shuffled = list(rows)
    rnd.shuffle(shuffled)
    Ls = lattice(Arrangement.from_coeffs(shuffled))
    assert Ls.fingerprint == L.fingerprint and tau(Ls) == tau(L)
    while True:
        A = [[rnd.randint(-2, 2) for _ in range(3)] for _ in range(3)]
        if sympy.Matrix(A).det() != 0:
            break
    Lt = lattice(C.transformed(A))
    assert Lt.fingerprint == L.fingerprint
    assert (tau(Lt), m_and_n(Lt), lattice_type(Lt)) == (tau(L), m_and_n(L), lattice_type(L))


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 8), st.integers(0, 2**32))
def test_pair_count_identity(d, seed):
    L = lattice(Arrangement.from_coeffs(random_rows(random.Random(seed), d, bound=2)))
    assert sum(m * (m - 1) // 2 for m in L.mults()) == d * (d - 1) // 2
