"""Classification, freeness defect and the full inequality report for one arrangement."""
from __future__ import annotations

from dataclasses import dataclass, field

from . import bounds
from .arrangement import Arrangement, lattice, lattice_type, m_and_n, max_points, tau
from .bounds import Bounds, TeraoCertificate
from .poly import num_monomials
from .syzygy import (
    ar_dim, bourbaki_dim, class_nonzero_mod, min_syzygy, mdr, rho_point, verify_syzygy,
)

PASS, FAIL, SKIPPED = "PASS", "FAIL", "SKIPPED"


@dataclass(frozen=True)
class Classification:
    kind: str  # FREE | NEARLY_FREE | OTHER
    exponents: tuple[int, int] | None
    nu: int
    branch: str

    def to_dict(self) -> dict:
        return {"kind": self.kind,
                "exponents": list(self.exponents) if self.exponents else None,
                "nu": self.nu, "branch": self.branch}


@dataclass
class Check:
    name: str
    relation: str
    lhs: object = None
    rhs: object = None
    status: str = SKIPPED
    note: str = ""

    def to_dict(self) -> dict:
        out = {"name": self.name, "lhs": self.lhs, "rhs": self.rhs,
               "relation": self.relation, "status": self.status}
        if self.note:
            out["note"] = self.note
        return out


_RELATIONS = {
    "<=": lambda a, b: a <= b,
    ">=": lambda a, b: a >= b,
    "<": lambda a, b: a < b,
    "==": lambda a, b: a == b,
}


def _compare(name: str, lhs, relation: str, rhs, note: str = "") -> Check:
    ok = _RELATIONS[relation](lhs, rhs)
    return Check(name, relation, lhs, rhs, PASS if ok else FAIL, note)


def _skip(name: str, relation: str, why: str) -> Check:
    return Check(name, relation, status=SKIPPED, note=why)


@dataclass
class Report:
    C: Arrangement
    d: int
    r: int
    m: int
    n: int
    tau: int
    lattice: object
    lattice_type: object
    bounds: Bounds
    classification: Classification
    ar_dims: dict[int, int]
    checks: list[Check] = field(default_factory=list)
    terao: TeraoCertificate | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status == FAIL]

    def check(self, name: str) -> Check:
        return next(c for c in self.checks if c.name == name)

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "lines": self.C.as_rows(),
            "lattice": {
                "points": [{"coords": list(P.point.coords), "mult": P.mult,
                            "lines": sorted(P.lines)} for P in self.lattice.points],
                "fingerprint": self.lattice.fingerprint,
                "type": str(self.lattice_type),
            },
            "m": self.m,
            "n": self.n,
            "tau": self.tau,
            "mdr": self.r,
            "ar_dims": {str(k): v for k, v in self.ar_dims.items()},
            "classification": self.classification.to_dict(),
            "bounds": self.bounds.to_dict(),
            "checks": [c.to_dict() for c in self.checks],
            "terao": self.terao.to_dict() if self.terao else None,
            "notes": self.notes,
        }


def classify(C: Arrangement) -> Classification:
    d = C.d
    if d < 3:
        raise ValueError("classification needs at least 3 lines")
    r = mdr(C)
    t = tau(lattice(C))
    nu, branch = bounds.nu(d, r, t)
    top = bounds.tau_max(d, r)
    if t == top:
        assert 2 * r < d, "free arrangement with r >= d/2"
        return Classification("FREE", (r, d - 1 - r), nu, branch)
    if t == top - 1:
        assert 2 * r <= d, "nearly free arrangement with r > d/2"
        return Classification("NEARLY_FREE", (r, d - r), nu, branch)
    return Classification("OTHER", None, nu, branch)


def verify_all(C: Arrangement, dims_upto: int | None = None, rho_points: bool = True) -> Report:
    """Compute every invariant of C and run every applicable check.

    Failures land in ``Report.checks``; on valid input they indicate a bug.
    """
    d = C.d
    if d < 3:
        raise ValueError("analysis needs at least 3 lines")
    L = lattice(C)
    t = tau(L)
    m, n = m_and_n(L)
    r = mdr(C)
    cls = classify(C)
    free = cls.kind == "FREE"
    kmax = d - 2 if dims_upto is None else dims_upto
    dims = {k: ar_dim(C, k) for k in range(0, kmax + 1)}
    ltype = lattice_type(L)
    try:
        bd = bounds.tau_lower_bounds(d, r, m, n)
    except bounds.PreconditionError:
        bd = bounds.basic_bounds(d, r)
    checks: list[Check] = []
    notes: list[str] = []
    if len(L.points) == 1:
        notes.append("pencil: n(C) is set to 1 by convention")

    # du Plessis-Wall range
    if r >= 1:
        checks.append(_compare("tau_ge_tau_min", t, ">=", bd.tau_min))
        checks.append(_compare("tau_le_tau_max", t, "<=", bd.tau_max))
    else:
        checks.append(_skip("tau_ge_tau_min", ">=", "r = 0 (pencil)"))
        checks.append(_skip("tau_le_tau_max", "<=", "r = 0 (pencil)"))
    if 2 * r > d - 1 and r >= 1:
        checks.append(_compare("tau_le_tau_max_refined", t, "<=", bounds.tau_max_refined(d, r)))
    else:
        checks.append(_skip("tau_le_tau_max_refined", "<=", "r <= (d-1)/2"))

    # free / nearly free exponents
    if cls.kind == "FREE":
        checks.append(_compare("free_2r_lt_d", 2 * r, "<", d))
    elif cls.kind == "NEARLY_FREE":
        checks.append(_compare("nearly_free_2r_le_d", 2 * r, "<=", d))
    checks.append(_compare("nu_zero_iff_free", cls.nu == 0, "==", cls.kind == "FREE"))
    checks.append(_compare("nu_one_iff_nearly_free", cls.nu == 1, "==", cls.kind == "NEARLY_FREE"))
    checks.append(_compare("nu_nonnegative", cls.nu, ">=", 0))

    # non-free lower bounds
    base_ok = not free and r >= 2 and d >= 4
    why = "free" if free else ("r < 2" if r < 2 else "d < 4")
    if base_ok:
        checks.append(_compare("tau_ge_tau_prime", t, ">=", bd.tau_prime_min))
    else:
        checks.append(_skip("tau_ge_tau_prime", ">=", why))
    if base_ok and r != d - m:
        checks.append(_compare("tau_ge_tau_dprime", t, ">=", bd.tau_dprime_min))
    else:
        checks.append(_skip("tau_ge_tau_dprime", ">=", why if not base_ok else "r = d - m"))
    if not free and r >= 3 and n >= 3:
        checks.append(_compare("tau_ge_tau_N", t, ">=", bd.tau_N_min))
    else:
        checks.append(_skip("tau_ge_tau_N", ">=", "free" if free else "r < 3 or n < 3"))
    if not free and 2 <= r and 2 * r < d:
        checks.append(_compare("nu_le_cor_bound", cls.nu, "<=", bounds.cor_nu_bound(r, n)))
        checks.append(_compare("nu_le_r(r+1)/2-2", cls.nu, "<=", r * (r + 1) // 2 - 2))
    else:
        checks.append(_skip("nu_le_cor_bound", "<=", "free" if free else "r outside [2, d/2)"))

    # pencil / near-pencil dichotomies
    checks.append(_compare("mdr0_iff_m_eq_d", r == 0, "==", m == d))
    checks.append(_compare("mdr1_iff_m_eq_d-1", r == 1, "==", m == d - 1))

    # graded dimension identity for rational components
    checks.append(_compare("tau_eq_ar_dim_plus_binom", t, "==",
                           dims.get(d - 2, ar_dim(C, d - 2)) + (d - 1) * (d - 2) // 2))

    if ltype.kind == "TWO_PENCILS":
        m1, m2 = ltype.params
        checks.append(_compare("two_pencils_tau", t, "==", (d - 1) ** 2 - m1 * m2 + 1))
        checks.append(_compare("two_pencils_mdr", r, "==", m1))

    # explicit pencil syzygies
    if rho_points:
        for P in L.points:
            rho = rho_point(C, P.point)
            ok = verify_syzygy(C, rho) and rho.degree == d - P.mult
            checks.append(Check(f"rho_point{P.point}", "==", rho.degree, d - P.mult,
                                PASS if ok else FAIL))

    # Bourbaki exact sequence and quotient-class test, non-free only
    if not free and r >= 1:
        rho1 = min_syzygy(C)
        for q in range(r, d - 1):
            k = q + r + 1 - d
            rhs = num_monomials(q - r) + bourbaki_dim(C, rho1, k)
            checks.append(_compare(f"exact_sequence_q{q}", ar_dim(C, q), "==", rhs))
        p, q_pt = max_points(L)
        if q_pt is not None:
            rp = rho_point(C, p.point)
            rq = rho_point(C, q_pt.point)
            checks.append(_compare("rho_q_not_multiple_of_rho_p", class_nonzero_mod(C, rq, rp), "==", True))
    else:
        checks.append(_skip("exact_sequence", "==", "free" if free else "r = 0"))

    terao = bounds.terao_certificate(d, t) if free else None
    return Report(C, d, r, m, n, t, L, ltype, bd, cls, dims, checks, terao, notes)
