"""Exact invariants of rational line arrangements in the projective plane."""

from .arrangement import Arrangement, ArrangementError, lattice, lattice_type, m_and_n, parse, tau
from .bounds import nu, tau_lower_bounds, tau_max, tau_max_refined, tau_min, terao_certificate
from .invariants import classify, verify_all
from .syzygy import ar_dim, mdr, min_syzygy, rho_point, verify_syzygy

__version__ = "0.1.0"

__all__ = [
    "Arrangement", "ArrangementError", "lattice", "lattice_type", "m_and_n", "parse", "tau",
    "nu", "tau_lower_bounds", "tau_max", "tau_max_refined", "tau_min", "terao_certificate",
    "classify", "verify_all", "ar_dim", "mdr", "min_syzygy", "rho_point", "verify_syzygy",
]
