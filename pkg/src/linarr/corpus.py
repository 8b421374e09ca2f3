"""Built-in regression corpus: the worked example arrangements with their known invariants."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

from . import bounds
from .arrangement import Arrangement, two_pencils
from .invariants import Report, verify_all

# xyz(x+y)(x+3y)(x+2y+z)(4x+8y+z)
C1 = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [1, 3, 0], [1, 2, 1], [4, 8, 1]]
# xyz(x+2y+z)(y+z)(x-2y)(x-y)
C2 = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 2, 1], [0, 1, 1], [1, -2, 0], [1, -1, 0]]
# xyz(2x-3y+z)(x-y)(x+z)(y+z)
C3 = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [2, -3, 1], [1, -1, 0], [1, 0, 1], [0, 1, 1]]

TRIANGLE = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def pencil_rows(d: int) -> list[list[int]]:
    """d lines through (0:0:1): x, y, x+y, x+2y, ..."""
    return [[1, 0, 0], [0, 1, 0]] + [[1, t, 0] for t in range(1, d - 1)]


def near_pencil_rows(d: int) -> list[list[int]]:
    """d-1 lines through (0:0:1) plus z."""
    return pencil_rows(d - 1) + [[0, 0, 1]]


@dataclass
class Entry:
    name: str
    C: Arrangement
    expect: dict
    source: str
    report: Report | None = None
    mismatches: list[str] = field(default_factory=list)


def _two_pencil_expect(m1: int, m2: int) -> dict:
    d = m1 + m2
    tau = (d - 1) ** 2 - m1 * m2 + 1
    return {"d": d, "mdr": m1, "m": m2, "n": m1, "tau": tau, "tau_prime_min": tau,
            "tau_min": (d - 1) ** 2 - m1 * m2 - (m1 * m1 - m1)}


def entries() -> list[Entry]:
    out = [
        Entry("C1", Arrangement.from_coeffs(C1),
              {"d": 7, "tau": 25, "mdr": 3, "m": 4, "n": 3, "tau_min": 18, "tau_prime_min": 25,
               "tau_N_min": 25, "mults": {4: 1, 3: 1, 2: 12}, "kind": "OTHER", "nu": 2},
              "7-line example with a quadruple and a triple point"),
        Entry("C2", Arrangement.from_coeffs(C2),
              {"d": 7, "tau": 25, "mdr": 3, "m": 4, "n": 3, "tau_prime_min": 25, "tau_N_min": 25,
               "mults": {4: 1, 3: 1, 2: 12}, "lattice_type": "OTHER"},
              "7-line example, one line through both high-multiplicity points"),
        Entry("C3", Arrangement.from_coeffs(C3),
              {"d": 7, "tau": 25, "mdr": 3, "m": 3, "n": 3, "tau_prime_min": 25,
               "tau_dprime_min": 25, "mults": {3: 4, 2: 9}},
              "7-line example with four triple points"),
    ]
    for m1, m2 in [(2, 2), (2, 3), (3, 3), (3, 4)]:
        out.append(Entry(f"two_pencils_{m1}_{m2}", two_pencils(m1, m2),
                         _two_pencil_expect(m1, m2), "union of two pencils in general position"))
    out.append(Entry("triangle", Arrangement.from_coeffs(TRIANGLE),
                     {"d": 3, "tau": 3, "mdr": 1, "kind": "FREE", "exponents": (1, 1), "nu": 0},
                     "three general lines"))
    for d in (3, 4):
        out.append(Entry(f"pencil_{d}", Arrangement.from_coeffs(pencil_rows(d)),
                         {"d": d, "mdr": 0, "m": d, "n": 1, "tau": (d - 1) ** 2,
                          "kind": "FREE", "exponents": (0, d - 1), "lattice_type": "PENCIL"},
                         "all lines through one point"))
    for d in (4, 5):
        out.append(Entry(f"near_pencil_{d}", Arrangement.from_coeffs(near_pencil_rows(d)),
                         {"d": d, "mdr": 1, "m": d - 1, "n": 2, "tau": (d - 2) ** 2 + d - 1,
                          "kind": "FREE", "exponents": (1, d - 2)},
                         "all but one line through one point"))
    return out


# d -> (strict bound on r, old bound floor(sqrt(d-2)))
TERAO_TABLE = {10: (4, 2), 50: (9, 6), 100: (13, 9)}


def _observed(rep: Report) -> dict:
    mults: dict[int, int] = {}
    for P in rep.lattice.points:
        mults[P.mult] = mults.get(P.mult, 0) + 1
    b = rep.bounds
    return {
        "d": rep.d, "tau": rep.tau, "mdr": rep.r, "m": rep.m, "n": rep.n,
        "tau_min": b.tau_min, "tau_prime_min": b.tau_prime_min,
        "tau_dprime_min": b.tau_dprime_min, "tau_N_min": b.tau_N_min,
        "mults": mults, "kind": rep.classification.kind,
        "exponents": rep.classification.exponents, "nu": rep.classification.nu,
        "lattice_type": str(rep.lattice_type),
    }


def run_corpus() -> tuple[list[Entry], list[str]]:
    """Analyze every entry and diff against its expectations; returns (entries, failures)."""
    failures: list[str] = []
    items = entries()
    for e in items:
        e.report = verify_all(e.C)
        got = _observed(e.report)
        for key, want in e.expect.items():
            if got[key] != want:
                e.mismatches.append(f"{e.name}: {key} expected {want}, got {got[key]}")
        for chk in e.report.failures():
            e.mismatches.append(f"{e.name}: check {chk.name} failed ({chk.lhs} {chk.relation} {chk.rhs})")
        failures.extend(e.mismatches)
    by_name = {e.name: e for e in items}
    if by_name["C1"].report.lattice.fingerprint == by_name["C2"].report.lattice.fingerprint:
        failures.append("C1 and C2 fingerprints coincide; their lattices are distinct")
    for d, (want_bound, want_old) in TERAO_TABLE.items():
        got = bounds.terao_r_bound(d)
        if got != want_bound:
            failures.append(f"terao d={d}: bound expected {want_bound}, got {got}")
        if isqrt(d - 2) != want_old:
            failures.append(f"terao d={d}: old bound expected {want_old}, got {isqrt(d - 2)}")
    return items, failures


def terao_rows() -> list[dict]:
    return [{"d": d, "r_bound": bounds.terao_r_bound(d), "old_bound": isqrt(d - 2),
             "certified_r": f"r < {bounds.terao_r_bound(d)}"} for d in TERAO_TABLE]
