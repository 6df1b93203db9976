"""Short partizan games as a hash-consed DAG.

Nodes are interned on their option sets, so two literally equal games are
the same Python object.  All derived quantities (outcome, order, canonical
form, sums, negatives, heights) are memoised in module-level tables keyed on
node ids.  The tables form one evaluation context per process; call
:func:`reset` only when no node from the old context is still in use.
"""
from __future__ import annotations

import enum
import itertools
import sys
from typing import Iterable

import numpy as np

from . import _kernels
from .complex import LegalComplex, SimplicialComplex

if sys.getrecursionlimit() < 20000:
    sys.setrecursionlimit(20000)


class GameNode:
    __slots__ = ("left", "right", "uid", "__weakref__")

    def __init__(self, left: tuple, right: tuple, uid: int):
        self.left = left
        self.right = right
        self.uid = uid

    def __repr__(self):
        return f"GameNode({raw_bracket(self)})"

    def __neg__(self):
        return negate(self)

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, negate(other))

    def __le__(self, other):
        return leq(self, other)

    def __ge__(self, other):
        return leq(other, self)


class Outcome(enum.Enum):
    N = "N"
    P = "P"
    L = "L"
    R = "R"

    def __le__(self, other: "Outcome") -> bool:
        if self is other:
            return True
        return self is Outcome.R or other is Outcome.L

    def __lt__(self, other: "Outcome") -> bool:
        return self is not other and self <= other

    def __ge__(self, other: "Outcome") -> bool:
        return other <= self

    def __gt__(self, other: "Outcome") -> bool:
        return other < self


_intern: dict = {}
_nodes: list[GameNode] = []
_neg: dict[int, GameNode] = {}
_sum: dict[tuple[int, int], GameNode] = {}
_leq: dict[tuple[int, int], bool] = {}
_lwf: dict[int, bool] = {}
_lws: dict[int, bool] = {}
_canon: dict[int, GameNode] = {}
_height: dict[int, int] = {}
_from_complex: dict = {}
_eval_memo: dict = {}

ZERO: GameNode


def make_game(left: Iterable[GameNode] = (), right: Iterable[GameNode] = ()) -> GameNode:
    """Intern the game ``{left | right}``; duplicate options collapse."""
    lt = tuple(sorted(set(left), key=_uid))
    rt = tuple(sorted(set(right), key=_uid))
    key = (tuple(g.uid for g in lt), tuple(g.uid for g in rt))
    node = _intern.get(key)
    if node is None:
        node = GameNode(lt, rt, len(_nodes))
        _nodes.append(node)
        _intern[key] = node
    return node


def _uid(g: GameNode) -> int:
    return g.uid


def reset(full: bool = False) -> None:
    """Clear the memo tables.

    Interned nodes survive, so games built earlier stay identical to ones
    built later.  ``full=True`` also drops the nodes; any node held across
    that call is stale afterwards.
    """
    global ZERO
    for table in (_neg, _sum, _leq, _lwf, _lws, _canon, _height, _from_complex, _eval_memo):
        table.clear()
    if full:
        _intern.clear()
        _nodes.clear()
        ZERO = make_game()
    from . import values

    values._reset_tables()


ZERO = make_game()


def node_count() -> int:
    return len(_nodes)


# ---------------------------------------------------------------------------
# outcome


def _left_wins_first(g: GameNode) -> bool:
    r = _lwf.get(g.uid)
    if r is None:
        r = any(_left_wins_second(gl) for gl in g.left)
        _lwf[g.uid] = r
    return r


def _left_wins_second(g: GameNode) -> bool:
    r = _lws.get(g.uid)
    if r is None:
        r = all(_left_wins_first(gr) for gr in g.right)
        _lws[g.uid] = r
    return r


def outcome(g: GameNode) -> Outcome:
    first, second = _left_wins_first(g), _left_wins_second(g)
    if first and second:
        return Outcome.L
    if first:
        return Outcome.N
    if second:
        return Outcome.P
    return Outcome.R


# ---------------------------------------------------------------------------
# algebra


def negate(g: GameNode) -> GameNode:
    r = _neg.get(g.uid)
    if r is None:
        r = make_game([negate(x) for x in g.right], [negate(x) for x in g.left])
        _neg[g.uid] = r
        _neg[r.uid] = g
    return r


def add(g: GameNode, h: GameNode) -> GameNode:
    """Literal disjunctive sum."""
    if g is ZERO:
        return h
    if h is ZERO:
        return g
    key = (g.uid, h.uid) if g.uid <= h.uid else (h.uid, g.uid)
    r = _sum.get(key)
    if r is None:
        left = [add(x, h) for x in g.left] + [add(g, x) for x in h.left]
        right = [add(x, h) for x in g.right] + [add(g, x) for x in h.right]
        r = make_game(left, right)
        _sum[key] = r
    return r


def add_canonical(g: GameNode, h: GameNode) -> GameNode:
    """Canonical form of ``g + h``, computed from canonical summands."""
    return canonical_form(add(canonical_form(g), canonical_form(h)))


def leq(g: GameNode, h: GameNode) -> bool:
    if g is h:
        return True
    key = (g.uid, h.uid)
    r = _leq.get(key)
    if r is None:
        r = not any(leq(h, gl) for gl in g.left) and not any(leq(hr, g) for hr in h.right)
        _leq[key] = r
    return r


def equal(g: GameNode, h: GameNode) -> bool:
    return leq(g, h) and leq(h, g)


def greater(g: GameNode, h: GameNode) -> bool:
    return leq(h, g) and not leq(g, h)


def incomparable(g: GameNode, h: GameNode) -> bool:
    return not leq(g, h) and not leq(h, g)


def leq_by_difference(g: GameNode, h: GameNode) -> bool:
    """Independent route to ``g <= h`` through the outcome of ``g - h``."""
    return outcome(add(g, negate(h))) in (Outcome.P, Outcome.R)


# ---------------------------------------------------------------------------
# canonical form


def _undominated_left(opts: set) -> set:
    return {x for x in opts if not any(y is not x and leq(x, y) for y in opts)}


def _undominated_right(opts: set) -> set:
    return {x for x in opts if not any(y is not x and leq(y, x) for y in opts)}


def _simplify(left: set, right: set) -> GameNode:
    # options are canonical on entry and stay canonical
    while True:
        left = _undominated_left(left)
        right = _undominated_right(right)
        g = make_game(left, right)
        changed = False
        new_left: set = set()
        for x in left:
            rev = next((xr for xr in x.right if leq(xr, g)), None)
            if rev is None:
                new_left.add(x)
            else:
                new_left.update(rev.left)
                changed = True
        new_right: set = set()
        for x in right:
            rev = next((xl for xl in x.left if leq(g, xl)), None)
            if rev is None:
                new_right.add(x)
            else:
                new_right.update(rev.right)
                changed = True
        if not changed:
            return g
        left, right = new_left, new_right


def canonical_form(g: GameNode) -> GameNode:
    r = _canon.get(g.uid)
    if r is None:
        left = {canonical_form(x) for x in g.left}
        right = {canonical_form(x) for x in g.right}
        r = _simplify(left, right)
        _canon[g.uid] = r
        _canon[r.uid] = r
    return r


def is_canonical(g: GameNode) -> bool:
    return canonical_form(g) is g


# ---------------------------------------------------------------------------
# heights and the commutation check


def formal_birthday(g: GameNode) -> int:
    r = _height.get(g.uid)
    if r is None:
        r = 1 + max((formal_birthday(x) for x in g.left + g.right), default=-1)
        _height[g.uid] = r
    return r


def birthday(g: GameNode) -> int:
    return formal_birthday(canonical_form(g))


def subgames(g: GameNode) -> list[GameNode]:
    seen = {g.uid: g}
    stack = [g]
    while stack:
        p = stack.pop()
        for x in p.left + p.right:
            if x.uid not in seen:
                seen[x.uid] = x
                stack.append(x)
    return list(seen.values())


def sp_tree_check(g: GameNode) -> bool:
    """Necessary condition for ``g`` to be the literal tree of an SP-game.

    Every Left-then-Right line ``P -> A -> Q`` must be matched by a
    Right-then-Left line ``P -> B -> Q`` reaching the literally same ``Q``,
    and vice versa.
    """
    for p in subgames(g):
        lr = {q.uid for a in p.left for q in a.right}
        rl = {q.uid for b in p.right for q in b.left}
        if lr != rl:
            return False
    return True


# ---------------------------------------------------------------------------
# games from complexes


def _state_children(masks: np.ndarray):
    union = 0
    for m in masks:
        union |= int(m)
    bit = 0
    while union:
        if union & 1:
            yield bit, _kernels.link(masks, bit)
        union >>= 1
        bit += 1


def _literal(masks: np.ndarray, left_bits: int, memo: dict) -> GameNode:
    key = masks.tobytes()
    node = memo.get(key)
    if node is None:
        left, right = [], []
        for bit, child in _state_children(masks):
            (left if left_bits >> bit & 1 else right).append(_literal(child, left_bits, memo))
        node = make_game(left, right)
        memo[key] = node
    return node


def game_from_complex(c: LegalComplex) -> GameNode:
    """Literal game form: each option claims one vertex and moves to its link."""
    key = c.to_text()
    node = _from_complex.get(key)
    if node is None:
        node = _literal(c.masks(), c.left_mask(), {})
        _from_complex[key] = node
    return node


def _canonical_eval(masks: np.ndarray, left_bits: int) -> GameNode:
    union = 0
    for m in masks:
        union |= int(m)
    key = (masks.tobytes(), left_bits & union)
    node = _eval_memo.get(key)
    if node is None:
        left, right = set(), set()
        for bit, child in _state_children(masks):
            (left if left_bits >> bit & 1 else right).add(_canonical_eval(child, left_bits))
        node = _simplify(left, right)
        _eval_memo[key] = node
    return node


def join_factors(c: SimplicialComplex) -> list[SimplicialComplex]:
    """Split ``c`` into join factors over its active vertices.

    A vertex block ``W`` splits off exactly when the number of facets equals
    the product of the numbers of distinct facet traces on ``W`` and on the
    complement.  Vertices whose facet-incidences are statistically dependent
    always share a factor, which keeps the search small.
    """
    verts = list(c.active_vertices())
    if len(verts) <= 1:
        return [c]
    if len(c.facets) == 1:
        return [type(c)([[v]]) for v in verts]
    col = {v: i for i, v in enumerate(verts)}
    inc = np.zeros((len(c.facets), len(verts)), dtype=np.int64)
    for r, f in enumerate(c.facets):
        inc[r, [col[v] for v in f]] = 1
    nf = inc.shape[0]
    count = inc.sum(axis=0)
    dependent = inc.T @ inc * nf != np.outer(count, count)
    parent = list(range(len(verts)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in zip(*np.nonzero(np.triu(dependent, 1))):
        parent[find(int(i))] = find(int(j))
    atoms: dict[int, list[int]] = {}
    for i in range(len(verts)):
        atoms.setdefault(find(i), []).append(i)
    blocks = list(atoms.values())
    if len(blocks) == 1 or len(blocks) > 16:
        return [c]
    packed = inc.astype(np.uint8)

    def traces(cols) -> int:
        return len({row.tobytes() for row in np.packbits(packed[:, cols], axis=1)})

    k = len(blocks)
    for size in range(1, k // 2 + 1):
        for chosen in itertools.combinations(range(k), size):
            w = sorted(i for b in chosen for i in blocks[b])
            rest = sorted(set(range(len(verts))) - set(w))
            if traces(w) * traces(rest) == nf:
                wset = {verts[i] for i in w}
                part = type(c)({tuple(v for v in f if v in wset) for f in c.facets})
                other = type(c)({tuple(v for v in f if v not in wset) for f in c.facets})
                return join_factors(part) + join_factors(other)
    return [c]


def evaluate(c: LegalComplex) -> GameNode:
    """Canonical form of the game on ``c``.

    Works bottom-up on canonical options and evaluates join factors
    separately, so sums of many small components stay cheap.
    """
    factors = join_factors(c) if c.facets else [c]
    total = ZERO
    for f in factors:
        total = canonical_form(add(total, _canonical_eval(f.masks(), f.left_mask())))
    return total


# ---------------------------------------------------------------------------
# bracket printing


def raw_bracket(g: GameNode) -> str:
    return _bracket(g, lambda x: None)


def _bracket(g: GameNode, label, cache: dict | None = None) -> str:
    if cache is None:
        cache = {}

    def rec(x: GameNode) -> str:
        s = cache.get(x.uid)
        if s is None:
            s = label(x)
            if s is None:
                ls = sorted((formal_birthday(y), rec(y)) for y in x.left)
                rs = sorted((formal_birthday(y), rec(y)) for y in x.right)
                s = "{" + ",".join(t[1] for t in ls) + "|" + ",".join(t[1] for t in rs) + "}"
            cache[x.uid] = s
        return s

    return rec(g)
