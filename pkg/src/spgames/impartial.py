"""Impartial legal complexes: Grundy values and structural shortcuts."""
from __future__ import annotations

import itertools
from typing import Iterable

import numpy as np

from . import _kernels
from .complex import LegalComplex, SimplicialComplex

ImpartialComplex = SimplicialComplex

_grundy_memo: dict[bytes, int] = {}


def mex(values: Iterable[int]) -> int:
    s = set(values)
    n = 0
    while n in s:
        n += 1
    return n


def _grundy_masks(masks: np.ndarray) -> int:
    key = masks.tobytes()
    r = _grundy_memo.get(key)
    if r is None:
        union = 0
        for m in masks:
            union |= int(m)
        seen = set()
        bit = 0
        while union:
            if union & 1:
                seen.add(_grundy_masks(_kernels.link(masks, bit)))
            union >>= 1
            bit += 1
        r = mex(seen)
        _grundy_memo[key] = r
    return r


def grundy(c: SimplicialComplex) -> int:
    """Nim value of the impartial game whose legal positions are the faces of ``c``."""
    return _grundy_masks(c.masks())


def components(c: SimplicialComplex) -> list[SimplicialComplex]:
    """Connected components of the facet-intersection graph."""
    facets = [set(f) for f in c.facets]
    parent = list(range(len(facets)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in itertools.combinations(range(len(facets)), 2):
        if facets[i] & facets[j]:
            parent[find(i)] = find(j)
    groups: dict[int, list] = {}
    for i, f in enumerate(c.facets):
        groups.setdefault(find(i), []).append(f)
    return [type(c)(g) for g in groups.values()]


def predict_structural(c: SimplicialComplex, explain: bool = False):
    """Grundy value forced by facet sizes alone, or ``None``.

    Applies, in order: every facet of even size gives 0; a pure complex with
    facet size ``s`` gives ``s mod 2``; a disjoint union of pure pieces gives
    0, 1 or 2 according to whether the piece sizes are all even, all odd, or
    mixed.  With ``explain`` a ``(value, rule)`` pair is returned.
    """
    value, rule = None, "none"
    sizes = [len(f) for f in c.facets]
    if all(s % 2 == 0 for s in sizes):
        value, rule = 0, "every facet has even size"
    elif c.is_pure():
        value, rule = sizes[0] % 2, f"pure with facet size {sizes[0]}"
    else:
        parts = components(c)
        if len(parts) > 1 and all(p.is_pure() for p in parts):
            parity = {len(p.facets[0]) % 2 for p in parts}
            value = 2 if len(parity) == 2 else parity.pop()
            rule = f"disjoint union of {len(parts)} pure components"
    return (value, rule) if explain else value


def doubled_partizan(c: SimplicialComplex) -> LegalComplex:
    """Partizan complex where each position may be claimed by either player.

    Vertex ``p`` becomes ``x<p>`` and ``y<p>``; the facets are all Left/Right
    labellings of the facets of ``c``.
    """
    facets = []
    for f in c.facets:
        for bits in itertools.product("xy", repeat=len(f)):
            facets.append([b + v for b, v in zip(bits, f)])
    return LegalComplex(facets, [p + v for v in c.vertices for p in "xy"])


def grundy_value_crosscheck(c: SimplicialComplex) -> bool:
    from .engine import equal, evaluate
    from .values import make_nimber

    return equal(evaluate(doubled_partizan(c)), make_nimber(grundy(c)))
