"""Simplicial complexes with Left/Right vertex ownership.

Only facets are stored; a face is any subset of a facet.  Vertex ownership is
read off the name: ``x...`` is Left, ``y...`` is Right.  Negating a complex
swaps that first letter.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import _kernels


class ComplexError(ValueError):
    """Malformed complex input (bad names, collisions, owner conflicts)."""


class ComplexFormatError(ComplexError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class Player(enum.Enum):
    LEFT = "L"
    RIGHT = "R"

    @property
    def opponent(self) -> "Player":
        return Player.RIGHT if self is Player.LEFT else Player.LEFT


def owner_of(name: str) -> Player:
    if name.startswith("x"):
        return Player.LEFT
    if name.startswith("y"):
        return Player.RIGHT
    raise ComplexError(f"vertex {name!r}: partizan names must start with 'x' (Left) or 'y' (Right)")


@dataclass(frozen=True, order=True)
class Vertex:
    name: str
    owner: Player | None = None

    def __post_init__(self):
        _check_name(self.name)


def _check_name(name: str) -> None:
    if not name or any(ch.isspace() for ch in name) or "#" in name or name == "()":
        raise ComplexError(f"invalid vertex name {name!r}")


def _facet_key(face: tuple[str, ...]):
    return (len(face), face)


def _maximal_faces(faces: set[tuple[str, ...]], universe: set[str]) -> list[tuple[str, ...]]:
    if len(faces) <= 1:
        return list(faces)
    if len(universe) > _kernels.MAX_BITS:
        return [f for f in faces if not any(f != g and set(f) <= set(g) for g in faces)]
    names = sorted(universe)
    idx = {v: i for i, v in enumerate(names)}
    by_mask = {sum(1 << idx[v] for v in f): f for f in faces}
    kept = _kernels.maximal(np.array(sorted(by_mask), dtype=np.uint64))
    return [by_mask[int(m)] for m in kept]


class SimplicialComplex:
    """Unlabelled complex: a vertex universe plus an antichain of facets.

    Instances are immutable and compare literally (same names, same facets).
    """

    __slots__ = ("vertices", "facets", "_index", "_masks", "_hash")

    def __init__(self, facets: Iterable[Iterable[str]] = (), vertices: Iterable[str] | None = None):
        faces = {tuple(sorted(set(f))) for f in facets}
        for face in faces:
            for v in face:
                _check_name(v)
        universe = set(itertools.chain.from_iterable(faces))
        if vertices is not None:
            extra = set(vertices)
            for v in extra:
                _check_name(v)
            universe |= extra
        self._validate_names(universe)
        object.__setattr__(self, "facets", tuple(sorted(_maximal_faces(faces, universe), key=_facet_key)))
        object.__setattr__(self, "vertices", tuple(sorted(universe)))
        object.__setattr__(self, "_index", None)
        object.__setattr__(self, "_masks", None)
        object.__setattr__(self, "_hash", None)

    def _validate_names(self, names) -> None:
        pass

    def __setattr__(self, key, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def _from_canonical(cls, facets: tuple, vertices: tuple):
        obj = object.__new__(cls)
        object.__setattr__(obj, "facets", facets)
        object.__setattr__(obj, "vertices", vertices)
        object.__setattr__(obj, "_index", None)
        object.__setattr__(obj, "_masks", None)
        object.__setattr__(obj, "_hash", None)
        return obj

    # -- basic queries ------------------------------------------------------

    def __eq__(self, other):
        if type(self) is not type(other):
            return NotImplemented
        return self.facets == other.facets and self.vertices == other.vertices

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((type(self).__name__, self.facets, self.vertices)))
        return self._hash

    def __repr__(self):
        body = ", ".join("{" + ",".join(f) + "}" for f in self.facets)
        return f"<{body}>"

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    @property
    def is_void(self) -> bool:
        """True for the complex with no facets at all (not even the empty face)."""
        return not self.facets

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def active_vertices(self) -> tuple[str, ...]:
        """Vertices lying in at least one facet, i.e. the legal moves."""
        return tuple(sorted(set(itertools.chain.from_iterable(self.facets))))

    def is_face(self, face: Iterable[str]) -> bool:
        s = set(face)
        return any(s <= set(f) for f in self.facets)

    # -- constructions --------------------------------------------------------

    def link(self, v: str):
        """Complex reached by claiming ``v``; ``None`` if ``v`` lies in no facet."""
        if v not in self.vertices:
            raise ComplexError(f"unknown vertex {v!r}")
        containing = [tuple(x for x in f if x != v) for f in self.facets if v in f]
        if not containing:
            return None
        return type(self)(containing)

    def join(self, other: "SimplicialComplex"):
        if type(other) is not type(self):
            raise ComplexError("cannot join complexes of different kinds")
        clash = set(self.vertices) & set(other.vertices)
        if clash:
            raise ComplexError(f"join: vertex names collide: {sorted(clash)}")
        # the void complex plays the same game as <{}>, so it joins as the identity
        mine = self.facets or ((),)
        theirs = other.facets or ((),)
        if not self.facets and not other.facets:
            return type(self)((), self.vertices + other.vertices)
        # facets of a join of antichains on disjoint vertex sets are already maximal
        facets = (tuple(sorted(a + b)) for a in mine for b in theirs)
        return type(self)._from_canonical(
            tuple(sorted(facets, key=_facet_key)), tuple(sorted(self.vertices + other.vertices))
        )

    def renamed(self, mapping) -> "SimplicialComplex":
        """Apply ``mapping`` (callable or dict) to every vertex name."""
        f = mapping if callable(mapping) else mapping.__getitem__
        return type(self)(((f(v) for v in face) for face in self.facets), [f(v) for v in self.vertices])

    # -- bitmask view -----------------------------------------------------------

    def index(self) -> dict[str, int]:
        if self._index is None:
            object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.vertices)})
        return self._index

    def masks(self) -> np.ndarray:
        """Facets as a sorted ``uint64`` array over vertex indices in name order."""
        if self._masks is None:
            if len(self.vertices) > _kernels.MAX_BITS:
                raise ComplexError(
                    f"{len(self.vertices)} vertices exceed the {_kernels.MAX_BITS}-vertex kernel limit"
                )
            idx = self.index()
            arr = np.array(
                sorted(sum(1 << idx[v] for v in f) for f in self.facets), dtype=np.uint64
            )
            object.__setattr__(self, "_masks", arr)
        return self._masks

    @classmethod
    def from_masks(cls, masks: Iterable[int], names: list[str], vertices: Iterable[str] | None = None):
        facets = []
        for m in masks:
            m = int(m)
            facets.append(tuple(names[i] for i in range(len(names)) if m >> i & 1))
        return cls(facets, vertices)

    # -- text format --------------------------------------------------------------

    def to_text(self) -> str:
        lines = []
        active = set(self.active_vertices())
        if set(self.vertices) - active:
            lines.append("vertices: " + " ".join(self.vertices))
        for f in self.facets:
            lines.append(" ".join(f) if f else "()")
        return "".join(line + "\n" for line in lines)

    @classmethod
    def from_text(cls, text: str):
        universe: list[str] | None = None
        facets: list[tuple[str, ...]] = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line.startswith("vertices:"):
                if universe is not None:
                    raise ComplexFormatError("duplicate 'vertices:' header", lineno)
                universe = line[len("vertices:"):].split()
                continue
            toks = line.split()
            if toks == ["()"]:
                facets.append(())
                continue
            if len(set(toks)) != len(toks):
                raise ComplexFormatError("repeated vertex in facet", lineno)
            for t in toks:
                try:
                    _check_name(t)
                    cls._check_token(t)
                except ComplexError as exc:
                    raise ComplexFormatError(str(exc), lineno) from None
            facets.append(tuple(toks))
        try:
            return cls(facets, universe)
        except ComplexError as exc:
            raise ComplexFormatError(str(exc)) from None

    @staticmethod
    def _check_token(tok: str) -> None:
        pass

    @classmethod
    def read(cls, path):
        with open(path, encoding="utf-8") as fh:
            return cls.from_text(fh.read())


class LegalComplex(SimplicialComplex):
    """Legal complex of a partizan SP-game; names carry the owner prefix."""

    __slots__ = ()

    def _validate_names(self, names) -> None:
        for v in names:
            owner_of(v)

    @staticmethod
    def _check_token(tok: str) -> None:
        owner_of(tok)

    def owner(self, v: str) -> Player:
        return owner_of(v)

    def moves(self, player: Player) -> tuple[str, ...]:
        return tuple(v for v in self.active_vertices() if owner_of(v) is player)

    def left_mask(self) -> int:
        idx = self.index()
        return sum(1 << i for v, i in idx.items() if v[0] == "x")


ImpartialComplex = SimplicialComplex


# ---------------------------------------------------------------------------
# functional surface


def _names_of(face) -> list[str]:
    out = []
    for item in face:
        out.append(item.name if isinstance(item, Vertex) else item)
    return out


def normalize(raw_facets: Iterable[Iterable], vertices: Iterable | None = None, impartial: bool = False):
    """Build a complex from arbitrary faces, keeping the inclusion-maximal ones.

    Faces may hold plain names or :class:`Vertex` objects.  An explicit owner
    that disagrees with the name prefix, or two owners for one name, is an
    error.
    """
    owners: dict[str, Player | None] = {}
    faces = []
    items = [list(f) for f in raw_facets]
    extra = list(vertices) if vertices is not None else []
    for item in itertools.chain(itertools.chain.from_iterable(items), extra):
        if isinstance(item, Vertex) and item.owner is not None:
            prev = owners.setdefault(item.name, item.owner)
            if prev is not item.owner:
                raise ComplexError(f"vertex {item.name!r} given conflicting owners")
            if not impartial and owner_of(item.name) is not item.owner:
                raise ComplexError(f"vertex {item.name!r}: owner {item.owner.name} conflicts with its prefix")
    for f in items:
        names = _names_of(f)
        if len(set(names)) != len(names):
            raise ComplexError(f"face {names} repeats a vertex")
        faces.append(names)
    cls = SimplicialComplex if impartial else LegalComplex
    return cls(faces, _names_of(extra) if vertices is not None else None)


def dimension(c: SimplicialComplex) -> int:
    return c.dimension


def link(c: SimplicialComplex, v: str):
    return c.link(v)


def join(a: SimplicialComplex, b: SimplicialComplex):
    return a.join(b)


def is_pure(c: SimplicialComplex) -> bool:
    return c.is_pure()


def _swap(name: str) -> str:
    return ("y" if name[0] == "x" else "x") + name[1:]


def negate_labels(c: LegalComplex) -> LegalComplex:
    """Swap Left and Right on every vertex; facet structure is untouched."""
    return LegalComplex._from_canonical(
        tuple(sorted((tuple(sorted(_swap(v) for v in f)) for f in c.facets), key=_facet_key)),
        tuple(sorted(_swap(v) for v in c.vertices)),
    )


def join_all(parts: Iterable[SimplicialComplex], prefix_copies: bool = True):
    """Join several complexes, suffixing names with ``_<k>`` so they never clash."""
    parts = list(parts)
    if not parts:
        return LegalComplex([()])
    out = None
    for k, p in enumerate(parts, start=1):
        q = p.renamed(lambda v, k=k: f"{v}_{k}") if prefix_copies else p
        out = q if out is None else out.join(q)
    return out


def parse_complex(text: str, impartial: bool = False):
    return (SimplicialComplex if impartial else LegalComplex).from_text(text)


def serialize(c: SimplicialComplex) -> str:
    return c.to_text()
