import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from linarr.arrangement import Arrangement, ArrangementError, lattice, two_pencils
from linarr.corpus import near_pencil_rows, pencil_rows
from linarr.poly import HomPoly, monomials, num_monomials
from linarr.syzygy import (
    Syzygy, SyzygyError, ar_basis, ar_dim, bourbaki_dim, bourbaki_image, class_nonzero_mod,
    koszul, mdr, min_syzygy, relation_matrix, rho_point, verify_syzygy,
)

x, y, z = HomPoly.var("x"), HomPoly.var("y"), HomPoly.var("z")


def sympy_rank(M):
    # relation matrices have integer entries
    rows = [[ZZ(int(c)) for c in r] for r in M.row_list()]
    return DomainMatrix(rows, (M.rows, M.cols), ZZ).rank()


def random_arrangement(seed, d, bound=4):
    rng = random.Random(seed)
    while True:
        try:
            return Arrangement.from_coeffs(
                [[rng.randint(-bound, bound) for _ in range(3)] for _ in range(d)])
        except ArrangementError:
            continue


def test_relation_matrix_xyz(triangle):
    M = relation_matrix(triangle, 1)
    assert (M.rows, M.cols) == (10, 9)
    assert sympy_rank(M) == 7
    assert ar_dim(triangle, 1) == 2
    assert ar_dim(triangle, 0) == 0


def test_relation_matrix_xy():
    C = Arrangement.from_coeffs([[1, 0, 0], [0, 1, 0]])
    M = relation_matrix(C, 0)
    assert (M.rows, M.cols) == (3, 3)
    (rho,) = ar_basis(C, 0)
    assert rho.vector() == (0, 0, 1)


def test_ar_dims_against_sympy():
    for seed in range(6):
        C = random_arrangement(seed, 5 + seed % 2, bound=3)
        for k in range(C.d - 1):
            M = relation_matrix(C, k)
            assert ar_dim(C, k) == M.cols - sympy_rank(M)


def test_mdr_examples(c1, c2, c3, triangle):
    assert mdr(triangle) == 1
    assert [mdr(C) for C in (c1, c2, c3)] == [3, 3, 3]
    assert mdr(Arrangement.from_coeffs(pencil_rows(5))) == 0
    assert mdr(Arrangement.from_coeffs(near_pencil_rows(5))) == 1
    assert mdr(two_pencils(3, 4)) == 3


def test_c1_graded_dims(c1):
    assert [ar_dim(c1, k) for k in range(6)] == [0, 0, 0, 1, 4, 10]


def test_min_syzygy_pencil():
    rho = min_syzygy(Arrangement.from_coeffs(pencil_rows(4)))
    assert rho.degree == 0 and rho.vector() == (0, 0, 1)


def test_verify_syzygy(c1):
    assert verify_syzygy(c1, koszul(c1))
    assert verify_syzygy(c1, min_syzygy(c1))
    # Euler gives x f_x + y f_y + z f_z = 7 f, not a relation
    assert not verify_syzygy(c1, Syzygy(1, x, y, z))
    for rho in ar_basis(c1, 4):
        assert verify_syzygy(c1, rho)


def test_basis_is_deterministic(c1):
    C = Arrangement.from_coeffs(c1.as_rows())
    assert [r.vector() for r in ar_basis(C, 5)] == [r.vector() for r in ar_basis(c1, 5)]


@pytest.mark.parametrize("name", ["c1", "c2", "c3"])
def test_rho_point_all_points_both_methods(name, request):
    C = request.getfixturevalue(name)
    for P in lattice(C).points:
        rho = rho_point(C, P.point)
        assert rho.degree == C.d - P.mult
        assert verify_syzygy(C, rho)
        assert rho_point(C, P.point.coords, method="frame") == rho
        assert rho_point(C, P.point.coords, method="frame", axis=1) == rho


def test_rho_point_pencil_and_errors():
    C = Arrangement.from_coeffs(pencil_rows(4))
    rho = rho_point(C, (0, 0, 1))
    assert rho.degree == 0 and rho.vector() == (0, 0, 1)
    with pytest.raises(SyzygyError) as exc:
        rho_point(C, (1, 1, 1))
    assert exc.value.code == "NOT_A_LATTICE_POINT"
    with pytest.raises(ValueError):
        rho_point(C, (0, 0, 1), method="magic")


@settings(max_examples=25, deadline=None)
@given(st.integers(4, 7), st.integers(0, 10**6))
def test_rho_point_random(d, seed):
    C = random_arrangement(seed, d, bound=2)
    for P in lattice(C).points:
        if P.mult < 2:
            continue
        rho = rho_point(C, P.point)
        assert verify_syzygy(C, rho) and rho.degree == d - P.mult
        assert rho_point(C, P.point, method="frame") == rho


def test_class_nonzero_mod(c1, c3):
    L = lattice(c1)
    p, q = L.points[0], L.points[1]
    rp, rq = rho_point(c1, p.point), rho_point(c1, q.point)
    assert class_nonzero_mod(c1, rq, rp)
    # a multiple of rho_p is zero in the quotient
    assert not class_nonzero_mod(c1, rp.times(x + 2 * z), rp)
    L3 = lattice(c3)
    assert class_nonzero_mod(c3, rho_point(c3, L3.points[1].point), rho_point(c3, L3.points[0].point))


def test_bourbaki_image(c1):
    rho1 = min_syzygy(c1)
    assert bourbaki_image(c1, rho1, rho1.times(x * x)).is_zero()
    images = [bourbaki_image(c1, rho1, rho) for rho in ar_basis(c1, 5)]
    assert all(v.degree == 2 for v in images)
    assert any(not v.is_zero() for v in images)


def test_bourbaki_dims_and_exact_sequence(c1):
    rho1 = min_syzygy(c1)
    assert [bourbaki_dim(c1, rho1, k) for k in range(3)] == [0, 1, 4]
    for q in range(3, 6):
        k = q - 3
        assert ar_dim(c1, q) == num_monomials(q - 3) + bourbaki_dim(c1, rho1, k)


def test_bourbaki_dim_rejects_free(triangle):
    with pytest.raises(SyzygyError) as exc:
        bourbaki_dim(triangle, min_syzygy(triangle), 0)
    assert exc.value.code == "FREE_CURVE"


def test_syzygy_vector_layout():
    rho = Syzygy.from_vector(1, (1, 0, 0, 0, 1, 0, 0, 0, 1))
    assert rho.components == (x, y, z)
    assert len(monomials(1)) == 3
