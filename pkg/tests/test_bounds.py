from math import comb, isqrt

import pytest
from hypothesis import given
from hypothesis import strategies as st

from linarr.bounds import (
    InconsistentOverlap, PreconditionError, TeraoError, cor_nu_bound, disjoint_below, nu,
    tau_N_min, tau_dprime_min, tau_lower_bounds, tau_max, tau_max_refined, tau_min,
    tau_prime_min, terao_certificate, terao_r_bound,
)


def test_closed_forms():
    assert tau_min(7, 3) == 18
    assert tau_max(7, 3) == 27
    assert tau_max(3, 1) == 3
    assert tau_max_refined(7, 4) == 25
    assert tau_max_refined(5, 3) == 10
    with pytest.raises(PreconditionError):
        tau_max_refined(7, 3)


def test_refined_at_half_is_one_below():
    for d in range(4, 40, 2):
        assert tau_max_refined(d, d // 2) == tau_max(d, d // 2) - 1


def test_lower_bounds_type_7_3():
    b = tau_lower_bounds(7, 3, 4, 3)
    assert (b.tau_min, b.tau_max, b.tau_prime_min, b.tau_N_min) == (18, 27, 25, 25)
    # r = d - m, so the m-based bound does not apply
    assert b.tau_dprime_min is None and b.tau_max_refined is None
    assert tau_lower_bounds(7, 3, 3, 3).tau_dprime_min == 25
    assert tau_lower_bounds(7, 3, 4, 2).tau_N_min is None
    with pytest.raises(PreconditionError):
        tau_lower_bounds(3, 2, 2, 2)
    with pytest.raises(PreconditionError):
        tau_lower_bounds(7, 1, 6, 2)


def test_nu_examples():
    assert nu(7, 3, 25) == (2, "both")
    assert nu(3, 1, 3) == (0, "both")
    assert nu(9, 2, 50) == (52 - 50, "low")
    assert nu(4, 2, 6) == (1, "high")
    assert nu(5, 3, 10) == (2, "high")


def test_nu_branches_agree_on_overlap():
    # both branches subtract tau, so agreement reduces to this identity
    for d in range(3, 60):
        for r in range(0, d):
            if 2 * r < d and 2 * r >= d - 2:
                assert tau_max(d, r) == (3 * (d - 1) ** 2 + 3) // 4
    with pytest.raises(PreconditionError):
        nu(5, -1, 3)
    assert InconsistentOverlap.code == "INCONSISTENT_OVERLAP"


def test_cor_nu_bound():
    assert cor_nu_bound(3, 4) == 6 - 6 - 1
    assert cor_nu_bound(4, 3) == 10 - 3 - 1
    assert 3 * 4 // 2 - 3 - 1 == cor_nu_bound(3, 3) == 2


def test_tau_max_decreasing_below_half():
    for d in range(3, 51):
        vals = [tau_max(d, r) for r in range(0, (d + 1) // 2)]
        assert all(a > b for a, b in zip(vals, vals[1:]))


def test_terao_bounds_table():
    assert [terao_r_bound(d) for d in (10, 50, 100)] == [4, 9, 13]
    assert [isqrt(d - 2) for d in (10, 50, 100)] == [2, 6, 9]


def test_disjointness_is_the_square_inequality():
    for d in range(3, 201):
        for s in range(1, d):
            assert disjoint_below(d, s) == ((2 * s + 3) ** 2 < 8 * d + 41)


def test_disjointness_scan_below_bound():
    for d in range(3, 201):
        bound = terao_r_bound(d)
        assert all(disjoint_below(d, s) for s in range(1, bound))
        assert not disjoint_below(d, bound)


def test_terao_certificate_triangle():
    cert = terao_certificate(3, 3)
    assert (cert.r, cert.lattice_determined, cert.witness) == (1, True, {1: True})


def test_terao_certificate_d100():
    for r in range(0, 50):
        cert = terao_certificate(100, tau_max(100, r))
        assert cert.r == r and cert.r_bound == 13 and cert.old_bound == 9
        assert cert.lattice_determined == (r < 13)
        assert cert.lattice_determined == all(cert.witness.values())


def test_terao_errors():
    with pytest.raises(TeraoError) as exc:
        terao_certificate(7, 26)
    assert exc.value.code == "NO_SOLUTION"
    with pytest.raises(PreconditionError):
        terao_certificate(2, 1)


@given(st.integers(4, 80), st.integers(2, 40), st.integers(2, 40))
def test_bound_ordering(d, r, n):
    if r >= d:
        return
    assert tau_min(d, r) <= tau_prime_min(d, r, n)
    assert tau_prime_min(d, r, n) == tau_dprime_min(d, r, n)
    assert tau_N_min(d, r) == tau_min(d, r) + comb(r, 2) + 4
