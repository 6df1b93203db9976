"""Exhaustive enumeration of small labelled complexes and their values.

Complexes are enumerated on point sets ``0..n-1`` with every point active.
Two labelled complexes are identified when a permutation of the points maps
facets to facets and Left points to Left points; the reduction is exact
(minimum code over all permutations), which is cheap at six points.
"""
from __future__ import annotations

import itertools
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .engine import GameNode, _canonical_eval, canonical_form
from .values import bracket, describe, parse_game

MAX_POINTS = 6


class CensusTooLarge(ValueError):
    pass


@dataclass
class CensusReport:
    max_vertices: int
    max_dim: int
    count: int = 0
    values_by_dim: dict[int, dict[str, str]] = field(default_factory=dict)
    seconds: float = 0.0

    def values(self, dim: int | None = None) -> dict[str, str]:
        """Distinct values as ``{canonical bracket: rendered value}``."""
        if dim is not None:
            return dict(self.values_by_dim.get(dim, {}))
        out: dict[str, str] = {}
        for d in sorted(self.values_by_dim):
            out.update(self.values_by_dim[d])
        return out

    def contains(self, g: GameNode, dim: int | None = None) -> bool:
        return bracket(canonical_form(g)) in self.values(dim)

    def lines(self) -> list[str]:
        out = [
            f"bounds: vertices <= {self.max_vertices}, dimension <= {self.max_dim}",
            f"complexes: {self.count}",
        ]
        for d in sorted(self.values_by_dim):
            vals = sorted(set(self.values_by_dim[d].values()))
            out.append(f"dim {d}: {len(vals)} values: " + ", ".join(vals))
        out.append(f"distinct values: {len(set(self.values().values()))}")
        out.append(f"time: {self.seconds:.2f}s")
        return out


def estimate(max_vertices: int, max_dim: int) -> int:
    """Crude upper bound on the number of labelled complexes in the bounds."""
    total = 1
    for n in range(1, max_vertices + 1):
        faces = sum(math.comb(n, k) for k in range(2, min(max_dim + 1, n) + 1))
        total += (1 << faces) << n
    return total


def check_bounds(max_vertices: int, max_dim: int) -> None:
    if max_vertices < 0 or max_dim < -1:
        raise ValueError("census bounds must be nonnegative")
    ok = max_vertices <= 5 or (max_vertices <= MAX_POINTS and max_dim <= 1)
    if not ok:
        raise CensusTooLarge(
            f"census with vertices <= {max_vertices} and dimension <= {max_dim} is too large "
            f"(up to ~{estimate(max_vertices, max_dim):.3g} labelled complexes); "
            "supported: vertices <= 5, or vertices <= 6 with dimension <= 1"
        )


def _perms(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)


def _subset_table(perms: np.ndarray) -> np.ndarray:
    n = perms.shape[1]
    table = np.zeros((perms.shape[0], 1 << n), dtype=np.int64)
    for k, p in enumerate(perms):
        for s in range(1 << n):
            table[k, s] = sum(1 << int(p[i]) for i in range(n) if s >> i & 1)
    return table


def families(n: int, max_size: int):
    """Antichains of nonempty subsets of ``range(n)`` covering every point.

    Yields each family as a bitset over subset masks.  Faces of size two and
    up are chosen freely; a point left uncovered must be a singleton facet.
    """
    if n == 0:
        yield 1  # the family holding only the empty face
        return
    cands = sorted(
        (s for s in range(1 << n) if 2 <= bin(s).count("1") <= max_size),
        key=lambda s: -bin(s).count("1"),
    )

    def rec(i: int, chosen: list[int], covered: int):
        if i == len(cands):
            fam = 0
            for s in chosen:
                fam |= 1 << s
            for p in range(n):
                if not covered >> p & 1:
                    fam |= 1 << (1 << p)
            yield fam
            return
        s = cands[i]
        yield from rec(i + 1, chosen, covered)
        if all(s & t != s for t in chosen):
            chosen.append(s)
            yield from rec(i + 1, chosen, covered | s)
            chosen.pop()

    if max_size >= 1:
        yield from rec(0, [], 0)


def _members(fam: int) -> list[int]:
    return [s for s in range(fam.bit_length()) if fam >> s & 1]


def classes(n: int, max_size: int) -> list[tuple[list[int], int]]:
    """Representatives ``(facet masks, left mask)`` of labelled complexes on ``n`` points."""
    if n == 0:
        return [([0], 0)]
    perms = _perms(n)
    table = _subset_table(perms)
    fams = np.array(list(families(n, max_size)), dtype=np.uint64)
    codes = _kernels.set_codes(fams, table)
    _, first = np.unique(codes, return_index=True)
    out = []
    labels = np.arange(1 << n, dtype=np.uint64)
    for i in sorted(first):
        fam = int(fams[i])
        members = _members(fam)
        auts = [k for k in range(len(perms)) if all(fam >> int(table[k, s]) & 1 for s in members)]
        orbit = _kernels.orbit_min(labels, perms[auts])
        for left in sorted(set(int(x) for x in orbit)):
            out.append((members, left))
    return out


def _evaluate_chunk(chunk: list[tuple[list[int], int]]) -> dict[int, dict[str, str]]:
    found: dict[int, dict[str, str]] = {}
    for members, left in chunk:
        masks = np.array(sorted(members), dtype=np.uint64)
        g = _canonical_eval(masks, left)
        dim = max(bin(s).count("1") for s in members) - 1
        found.setdefault(dim, {}).setdefault(bracket(g), describe(g))
    return found


def run_census(max_vertices: int, max_dim: int, workers: int = 1) -> CensusReport:
    """Evaluate every labelled complex within the bounds, up to isomorphism."""
    check_bounds(max_vertices, max_dim)
    start = time.perf_counter()
    reps: list[tuple[list[int], int]] = []
    for n in range(0, max_vertices + 1):
        reps.extend(classes(n, max_dim + 1))
    report = CensusReport(max_vertices, max_dim, count=len(reps))
    if workers > 1 and len(reps) > 1:
        size = -(-len(reps) // (4 * workers))
        chunks = [reps[i:i + size] for i in range(0, len(reps), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_evaluate_chunk, chunks))
    else:
        parts = [_evaluate_chunk(reps)]
    for part in parts:
        for dim, vals in part.items():
            report.values_by_dim.setdefault(dim, {}).update(vals)
    report.values_by_dim = {d: dict(sorted(v.items())) for d, v in sorted(report.values_by_dim.items())}
    report.seconds = time.perf_counter() - start
    return report


def absent_in_top(report: CensusReport, value: str) -> bool:
    """True when ``value`` occurs in no complex of dimension exactly ``max_dim``."""
    return not report.contains(parse_game(value), report.max_dim)
