"""Legal complexes generated from concrete rulesets on concrete boards.

Legality in every shipped ruleset is pairwise: a set of basic positions is
legal iff each pair is compatible.  The facets are then the maximal cliques of
the compatibility graph.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from . import _kernels
from .complex import ComplexError, LegalComplex, Player, SimplicialComplex


@dataclass(frozen=True)
class Board:
    """A graph board (vertices ``1..n``) or a grid board with removed cells."""

    kind: str
    n: int = 0
    edges: tuple[tuple[int, int], ...] = ()
    rows: int = 0
    cols: int = 0
    mask: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.kind == "graph":
            for u, v in self.edges:
                if u == v:
                    raise ValueError(f"loop at vertex {u}")
                if not (1 <= u <= self.n and 1 <= v <= self.n):
                    raise ValueError(f"edge {u}-{v} outside vertices 1..{self.n}")
        elif self.kind == "grid":
            if self.rows < 0 or self.cols < 0:
                raise ValueError("grid dimensions must be nonnegative")
        else:
            raise ValueError(f"unknown board kind {self.kind!r}")

    @classmethod
    def graph(cls, n: int, edges: Iterable[tuple[int, int]] = ()) -> "Board":
        es = sorted({(min(u, v), max(u, v)) for u, v in edges})
        return cls("graph", n=n, edges=tuple(es))

    @classmethod
    def path(cls, n: int) -> "Board":
        return cls.graph(n, [(i, i + 1) for i in range(1, n)])

    @classmethod
    def cycle(cls, n: int) -> "Board":
        if n < 3:
            return cls.path(n)
        return cls.graph(n, [(i, i % n + 1) for i in range(1, n + 1)])

    @classmethod
    def complete(cls, n: int) -> "Board":
        return cls.graph(n, itertools.combinations(range(1, n + 1), 2))

    @classmethod
    def grid(cls, rows: int, cols: int, removed: Iterable[tuple[int, int]] = ()) -> "Board":
        return cls("grid", rows=rows, cols=cols, mask=frozenset(removed))

    def cells(self) -> list[tuple[int, int]]:
        return [
            (r, c) for r in range(self.rows) for c in range(self.cols) if (r, c) not in self.mask
        ]

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {i: set() for i in range(1, self.n + 1)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


def parse_board(spec: str) -> Board:
    """``path:<n>``, ``cycle:<n>``, ``complete:<n>``, ``grid:<r>x<c>[:mask=r,c;...]``, ``graph:<file>``."""
    kind, _, rest = spec.partition(":")
    try:
        if kind == "path":
            return Board.path(int(rest))
        if kind == "cycle":
            return Board.cycle(int(rest))
        if kind == "complete":
            return Board.complete(int(rest))
        if kind == "grid":
            dims, _, extra = rest.partition(":")
            r, c = (int(t) for t in dims.lower().split("x"))
            removed = []
            if extra:
                if not extra.startswith("mask="):
                    raise ValueError(f"unknown grid option {extra!r}")
                for cell in extra[len("mask="):].split(";"):
                    if cell.strip():
                        a, b = cell.split(",")
                        removed.append((int(a), int(b)))
            return Board.grid(r, c, removed)
        if kind == "graph":
            with open(rest, encoding="utf-8") as fh:
                return parse_graph_text(fh.read())
    except (TypeError, ValueError) as exc:
        raise ValueError(f"bad board spec {spec!r}: {exc}") from None
    raise ValueError(f"bad board spec {spec!r}")


def parse_graph_text(text: str) -> Board:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty graph file")
    n = int(lines[0])
    edges = []
    for ln in lines[1:]:
        u, v = ln.split()
        edges.append((int(u), int(v)))
    return Board.graph(n, edges)


@dataclass(frozen=True)
class BasicPosition:
    tag: str
    footprint: frozenset
    player: Player | None = None

    def __post_init__(self):
        if not self.footprint:
            raise ValueError(f"basic position {self.tag!r} has an empty footprint")


CompatibilityRule = Callable[[BasicPosition, BasicPosition], bool]


def maximal_compatible_sets(
    positions: Sequence[BasicPosition], rule: CompatibilityRule
) -> list[frozenset[str]]:
    """Inclusion-maximal sets of pairwise compatible positions, as tag sets.

    Overlapping footprints are always incompatible.  Output is sorted by
    (size, sorted tags).
    """
    n = len(positions)
    if n == 0:
        return []
    if n > _kernels.MAX_BITS:
        raise ValueError(f"{n} basic positions exceed the {_kernels.MAX_BITS}-position kernel limit")
    adj = np.zeros(n, dtype=np.uint64)
    for i, j in itertools.combinations(range(n), 2):
        a, b = positions[i], positions[j]
        if not (a.footprint & b.footprint) and rule(a, b):
            adj[i] |= np.uint64(1 << j)
            adj[j] |= np.uint64(1 << i)
    cliques = _kernels.max_cliques(adj)
    out = [frozenset(positions[k].tag for k in range(n) if int(m) >> k & 1) for m in cliques]
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def maximal_legal_sets(
    positions: Sequence[BasicPosition], is_legal: Callable[[frozenset[BasicPosition]], bool]
) -> list[frozenset[str]]:
    """Maximal legal sets under a whole-set predicate, assumed hereditary.

    Exponential; meant for rulesets whose legality is not pairwise.
    """
    faces = [frozenset()]
    frontier = [frozenset()]
    while frontier:
        nxt = set()
        for face in frontier:
            for p in positions:
                if p not in face and is_legal(face | {p}):
                    nxt.add(face | {p})
        faces.extend(nxt)
        frontier = list(nxt)
    maximal = [f for f in faces if f and not any(f < g for g in faces)]
    out = {frozenset(p.tag for p in f) for f in maximal}
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def _vertex_positions(board: Board) -> list[BasicPosition]:
    if board.kind != "graph":
        raise ValueError("this ruleset is played on a graph board")
    out = []
    for i in range(1, board.n + 1):
        out.append(BasicPosition(f"x{i}", frozenset([i]), Player.LEFT))
        out.append(BasicPosition(f"y{i}", frozenset([i]), Player.RIGHT))
    return out


def _complex(board_vertices: list[BasicPosition], facets: list[frozenset[str]]) -> LegalComplex:
    return LegalComplex(facets, [p.tag for p in board_vertices])


def snort_complex(board: Board) -> LegalComplex:
    """No piece may sit next to an opponent's piece."""
    adj = board.adjacency()
    pos = _vertex_positions(board)

    def ok(a: BasicPosition, b: BasicPosition) -> bool:
        (u,), (v,) = a.footprint, b.footprint
        return not (a.player is not b.player and v in adj[u])

    return _complex(pos, maximal_compatible_sets(pos, ok))


def col_complex(board: Board) -> LegalComplex:
    """No piece may sit next to one of the same player's pieces."""
    adj = board.adjacency()
    pos = _vertex_positions(board)

    def ok(a: BasicPosition, b: BasicPosition) -> bool:
        (u,), (v,) = a.footprint, b.footprint
        return not (a.player is b.player and v in adj[u])

    return _complex(pos, maximal_compatible_sets(pos, ok))


def domineering_positions(board: Board) -> list[BasicPosition]:
    if board.kind != "grid":
        raise ValueError("domineering is played on a grid board")
    live = set(board.cells())
    out = []
    for r, c in sorted(live):
        if (r + 1, c) in live:
            out.append(BasicPosition(f"xV{r}_{c}", frozenset([(r, c), (r + 1, c)]), Player.LEFT))
        if (r, c + 1) in live:
            out.append(BasicPosition(f"yH{r}_{c}", frozenset([(r, c), (r, c + 1)]), Player.RIGHT))
    return out


def domineering_complex(board: Board) -> LegalComplex:
    """Left places vertical dominoes, Right horizontal ones."""
    pos = domineering_positions(board)
    return _complex(pos, maximal_compatible_sets(pos, lambda a, b: True))


def nim_pile_positions(n: int) -> list[BasicPosition]:
    out = []
    for size in range(1, n + 1):
        for sub in itertools.combinations(range(1, n + 1), size):
            tag = f"K{size}_" + ".".join(map(str, sub))
            out.append(BasicPosition(tag, frozenset(sub)))
    return out


def nim_pile_complex(n: int) -> SimplicialComplex:
    """Impartial complex of placing complete graphs ``K_1..K_n`` on ``K_n``.

    Faces are sets of disjoint pieces, so the facets are the set partitions of
    the ``n`` board vertices.
    """
    if n < 1:
        raise ValueError("nim pile size must be at least 1")
    pos = nim_pile_positions(n)
    facets = maximal_compatible_sets(pos, lambda a, b: True)
    return SimplicialComplex(facets, [p.tag for p in pos])


def ruleset_complex(name: str, board: Board):
    if name == "snort":
        return snort_complex(board)
    if name == "col":
        return col_complex(board)
    if name == "domineering":
        return domineering_complex(board)
    if name == "nim":
        if board.kind != "graph":
            raise ValueError("nim needs a vertex count board such as complete:<n>")
        return nim_pile_complex(board.n)
    raise ComplexError(f"unknown ruleset {name!r}")
