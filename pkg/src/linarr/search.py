"""Seeded random arrangements with planted pencils, and the sharpness scan over them."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from .arrangement import Arrangement, ArrangementError, cross
from .invariants import verify_all


@dataclass(frozen=True)
class SearchConfig:
    d_min: int = 5
    d_max: int = 7
    samples: int = 200
    seed: int = 0
    pencils: tuple[int, ...] | None = None  # None: mixed plantings
    max_coeff: int = 10
    max_tries: int = 100


def _rand_vec(rng: random.Random, bound: int) -> list[int]:
    while True:
        v = [rng.randint(-bound, bound) for _ in range(3)]
        if any(v):
            return v


def _pencil_sizes(rng: random.Random, d: int) -> tuple[int, ...]:
    k = rng.choice((0, 1, 2))
    sizes = []
    room = d
    for _ in range(k):
        if room < 3:
            break
        s = rng.randint(3, room)
        sizes.append(s)
        room -= s
    return tuple(sizes)


def sample_arrangement(rng: random.Random, d: int, pencils: Sequence[int], bound: int,
                       max_tries: int = 100) -> Arrangement:
    """d distinct lines: pencils of the given sizes through random points, the rest random.

    Draws that produce a zero form or a repeated line are rejected and redrawn.
    """
    if sum(pencils) > d:
        raise ValueError(f"pencils {tuple(pencils)} need more than {d} lines")
    for _ in range(max_tries):
        rows = []
        for size in pencils:
            center = _rand_vec(rng, bound)
            rows.extend(cross(center, _rand_vec(rng, bound)) for _ in range(size))
        rows.extend(_rand_vec(rng, bound) for _ in range(d - len(rows)))
        try:
            return Arrangement.from_coeffs(rows)
        except ArrangementError:
            continue
    raise RuntimeError(f"no reduced arrangement after {max_tries} draws (d={d}, bound={bound})")


def sample_rng(seed: int, index: int) -> random.Random:
    """Independent stream per sample, so samples can be drawn in any order."""
    return random.Random(seed * 1_000_003 + index)


def draw(config: SearchConfig, index: int) -> Arrangement:
    rng = sample_rng(config.seed, index)
    d = rng.randint(config.d_min, config.d_max)
    pencils = config.pencils if config.pencils is not None else _pencil_sizes(rng, d)
    return sample_arrangement(rng, d, pencils, config.max_coeff, config.max_tries)


def analyze_sample(args: tuple[SearchConfig, int]) -> dict:
    config, index = args
    C = draw(config, index)
    rep = verify_all(C)
    tp = rep.bounds.tau_prime_min
    return {
        "index": index,
        "d": rep.d,
        "r": rep.r,
        "m": rep.m,
        "n": rep.n,
        "tau": rep.tau,
        "tau_minus_tau_prime": None if tp is None else rep.tau - tp,
        "kind": rep.classification.kind,
        "nu": rep.classification.nu,
        "lattice_type": str(rep.lattice_type),
        "lines": rep.C.as_rows(),
        "violations": [c.name for c in rep.failures()],
    }


def run_search(config: SearchConfig, jobs: int = 1) -> Iterator[dict]:
    tasks = [(config, i) for i in range(config.samples)]
    if jobs <= 1:
        yield from map(analyze_sample, tasks)
        return
    from multiprocessing import Pool

    with Pool(jobs) as pool:
        # imap keeps sample order, so output is independent of scheduling
        yield from pool.imap(analyze_sample, tasks, chunksize=4)
