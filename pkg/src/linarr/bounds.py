"""Closed-form bounds on the global Tjurina number of a line arrangement.

Pure integer arithmetic: every comparison against (d-1)/2, d/2 or a square
root is carried out on doubled or squared integer forms.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from math import comb, isqrt


class PreconditionError(ValueError):
    code = "PRECONDITION"


class InconsistentOverlap(ArithmeticError):
    code = "INCONSISTENT_OVERLAP"


class TeraoError(ValueError):
    def __init__(self, code: str, message: str):
        super().__init__(f"{code}: {message}")
        self.code = code


def _binom(n: int) -> int:
    return comb(n, 2) if n >= 0 else 0


def tau_min(d: int, r: int) -> int:
    return (d - 1) * (d - r - 1)


def tau_max(d: int, r: int) -> int:
    return (d - 1) * (d - r - 1) + r * r


def tau_max_refined(d: int, r: int) -> int:
    """Upper bound valid when r > (d-1)/2."""
    if not 2 * r > d - 1:
        raise PreconditionError(f"refined bound needs r > (d-1)/2, got d={d}, r={r}")
    k = 2 * r + 2 - d
    return tau_max(d, r) - k * (k - 1) // 2


def best_upper(d: int, r: int) -> int:
    return tau_max_refined(d, r) if 2 * r > d - 1 else tau_max(d, r)


def tau_prime_min(d: int, r: int, n: int) -> int:
    return tau_min(d, r) + _binom(r) + _binom(n) + 1


def tau_dprime_min(d: int, r: int, m: int) -> int:
    return tau_min(d, r) + _binom(r) + _binom(m) + 1


def tau_N_min(d: int, r: int) -> int:
    return tau_min(d, r) + _binom(r) + 4


@dataclass(frozen=True)
class Bounds:
    tau_min: int
    tau_max: int
    tau_max_refined: int | None
    tau_prime_min: int | None
    tau_dprime_min: int | None
    tau_N_min: int | None

    def to_dict(self) -> dict:
        return asdict(self)


def tau_lower_bounds(d: int, r: int, m: int, n: int) -> Bounds:
    """All bounds for an arrangement of type (d, r) with m(C)=m, n(C)=n.

    The non-free lower bounds need d >= 4 and r >= 2.
    """
    if d < 4 or r < 2:
        raise PreconditionError(f"lower bounds need d >= 4 and r >= 2, got d={d}, r={r}")
    return Bounds(
        tau_min=tau_min(d, r),
        tau_max=tau_max(d, r),
        tau_max_refined=tau_max_refined(d, r) if 2 * r > d - 1 else None,
        tau_prime_min=tau_prime_min(d, r, n),
        tau_dprime_min=tau_dprime_min(d, r, m) if r != d - m else None,
        tau_N_min=tau_N_min(d, r) if r >= 3 and n >= 3 else None,
    )


def basic_bounds(d: int, r: int) -> Bounds:
    return Bounds(tau_min(d, r), tau_max(d, r),
                  tau_max_refined(d, r) if 2 * r > d - 1 else None, None, None, None)


def ceil_three_quarters_square(d: int) -> int:
    """ceil(3 (d-1)^2 / 4)."""
    return -(-3 * (d - 1) ** 2 // 4)


def nu(d: int, r: int, tau: int) -> tuple[int, str]:
    """Freeness defect from (d, r, tau).

    Returns (nu, branch) with branch "low" (r < d/2), "high" (r >= (d-2)/2)
    or "both" when r is in the overlap and the two formulas agree.
    """
    if r < 0:
        raise PreconditionError(f"mdr must be non-negative, got {r}")
    low = tau_max(d, r) - tau if 2 * r < d else None
    high = ceil_three_quarters_square(d) - tau if 2 * r >= d - 2 else None
    if low is not None and high is not None:
        if low != high:
            raise InconsistentOverlap(f"d={d}, r={r}, tau={tau}: {low} != {high}")
        return low, "both"
    if low is not None:
        return low, "low"
    return high, "high"


def cor_nu_bound(r: int, n: int) -> int:
    """Upper bound on nu for non-free arrangements with 2 <= r < d/2."""
    return r * (r + 1) // 2 - _binom(n) - 1


@dataclass(frozen=True)
class TeraoCertificate:
    d: int
    tau: int
    r: int
    r_bound: int
    lattice_determined: bool
    witness: dict[int, bool]
    old_bound: int

    def to_dict(self) -> dict:
        out = asdict(self)
        out["witness"] = {str(s): ok for s, ok in self.witness.items()}
        return out


def terao_r_bound(d: int) -> int:
    """Smallest integer t with (2t+3)^2 >= 8d+41; certification needs r < t."""
    t = max(0, (isqrt(8 * d + 41) - 3) // 2)
    while (2 * t + 3) ** 2 < 8 * d + 41:
        t += 1
    return t


def disjoint_below(d: int, s: int) -> bool:
    """tau_max(d, s) < tau_N_min(d, s-1): the tau ranges of mdr s and s-1 do not meet."""
    return tau_max(d, s) < tau_N_min(d, s - 1)


def terao_certificate(d: int, tau_free: int) -> TeraoCertificate:
    if d < 3:
        raise PreconditionError("need at least 3 lines")
    sols = [r for r in range(0, (d + 1) // 2) if tau_max(d, r) == tau_free]
    if not sols:
        raise TeraoError("NO_SOLUTION", f"tau={tau_free} is not tau_max(d, r) for any r < d/2 (d={d})")
    if len(sols) > 1:
        raise TeraoError("MULTIPLE_SOLUTIONS", f"tau={tau_free} matches r in {sols}")
    r = sols[0]
    witness = {s: disjoint_below(d, s) for s in range(1, r + 1)}
    return TeraoCertificate(
        d=d,
        tau=tau_free,
        r=r,
        r_bound=terao_r_bound(d),
        lattice_determined=(2 * r + 3) ** 2 < 8 * d + 41,
        witness=witness,
        old_bound=isqrt(d - 2),
    )
