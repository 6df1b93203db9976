"""Witness complexes for integers, dyadic fractions, switches, tinies and nimbers."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .complex import LegalComplex, join_all, negate_labels
from .engine import GameNode, negate
from .values import parse_game


def _xs(lo: int, hi: int) -> list[str]:
    return [f"x{i}" for i in range(lo, hi + 1)]


def _ys(lo: int, hi: int) -> list[str]:
    return [f"y{i}" for i in range(lo, hi + 1)]


def integer_simplex(m: int, n: int) -> LegalComplex:
    """One facet with ``m`` Left and ``n`` Right vertices; value ``m - n``."""
    if m < 0 or n < 0:
        raise ValueError("integer_simplex needs m, n >= 0")
    return LegalComplex([_xs(1, m) + _ys(1, n)])


def integer_at_dimension(n: int, k: int) -> LegalComplex:
    """Dimension-``k`` complex with value ``n`` (needs ``k >= n + 1``)."""
    if n < 0 or k < n + 1:
        raise ValueError(f"integer_at_dimension needs 0 <= n and k >= n+1, got n={n}, k={k}")
    xs = _xs(1, k + 1)
    facets = [xs] + [list(c) + ["y"] for c in itertools.combinations(xs, n + 1)]
    return LegalComplex(facets)


def _subsets_counting_down(n: int) -> list[list[str]]:
    # S_i = binary digits of 2^n - i, so the sets holding y_n come first and S_{2^n} is empty
    total = 1 << n
    return [[f"y{j + 1}" for j in range(n) if (total - i) >> j & 1] for i in range(1, total + 1)]


def fraction_complex(n: int) -> LegalComplex:
    """Facets ``{x_i} ∪ S_i`` over all subsets ``S_i`` of ``{y1..yn}``; value ``1/2^n``."""
    if n < 0:
        raise ValueError("fraction_complex needs n >= 0")
    return LegalComplex([[f"x{i}"] + s for i, s in enumerate(_subsets_counting_down(n), start=1)])


def dyadic_complex(p: int, q: int) -> LegalComplex:
    """Join of ``|p|`` renamed copies of ``fraction_complex(q)``; value ``p/2^q``."""
    if q < 0:
        raise ValueError("dyadic_complex needs q >= 0")
    if p == 0:
        return LegalComplex([()])
    unit = fraction_complex(q)
    if p < 0:
        unit = negate_labels(unit)
    if abs(p) == 1:
        return unit
    return join_all([unit] * abs(p))


def switch_symmetric(a: int, b: int, connected: bool = False) -> LegalComplex:
    """Facets ``{x0..xa}`` and ``{y0..yb}``; value ``{a | -b}``.

    With ``connected`` (and ``a, b >= 1``) the face ``{x0, y0}`` is added; the
    moves it creates are dominated, so the value is unchanged.
    """
    if a < 0 or b < 0:
        raise ValueError("switch_symmetric needs a, b >= 0")
    facets = [_xs(0, a), _ys(0, b)]
    if connected:
        if a < 1 or b < 1:
            raise ValueError("the connecting face needs a, b >= 1")
        facets.append(["x0", "y0"])
    return LegalComplex(facets)


def switch_general(a: int, b: int) -> LegalComplex:
    """Facets ``{x1..x(a+1)}`` and ``{x1..xb, y}``; value ``{a | b}`` for ``a > b >= 0``."""
    if not a > b >= 0:
        raise ValueError(f"switch_general needs a > b >= 0, got a={a}, b={b}")
    return LegalComplex([_xs(1, a + 1), _xs(1, b) + ["y"]])


def tiny_complex(n: int) -> LegalComplex:
    """Value ``+_n = {0 || 0 | -n}``.

    Facets ``{y1..y(n+2)}``, ``{x1, yi}`` for each ``i`` and ``{x2}``.  Right's
    move in ``y1`` leaves ``<{y2..y(n+2)}, {x1}> = {0 | -n}``; with only
    ``n + 1`` Right vertices the same shape is worth ``+_(n-1)``.
    """
    if n < 1:
        raise ValueError("tiny_complex needs n >= 1")
    ys = _ys(1, n + 2)
    return LegalComplex([ys] + [["x1", y] for y in ys] + [["x2"]])


@dataclass(frozen=True)
class CatalogEntry:
    complex: LegalComplex
    expected: str
    negated: bool = False

    def expected_game(self) -> GameNode:
        from .engine import canonical_form

        g = canonical_form(parse_game(self.expected))
        return negate(g) if self.negated else g

    @property
    def label(self) -> str:
        return f"-({self.expected})" if self.negated else self.expected


_BIRTHDAY2 = [
    ("x1 x2", "2"),
    ("x1 y1", "0"),
    ("x1 x2 / x1 y1", "1*"),
    ("x1 x2 / y1 y2", "{1|-1}"),
    ("x1 x2 / x2 y1 / y1 y2 / y2 x3", "{1|*}"),
    ("x1 x2 / y1", "{1|0}"),
    ("x1 y1 / x2", "1/2"),
    ("x1 y1 / x2 / y2", "*"),
    ("x1 y1 / y1 y2 / y2 x2 / x2 x3 / x3 y3 / x4 / y4", "*2"),
    ("x1 y1 / y1 y2 / y2 x2 / x2 x3 / x3 y3 / x4", "^"),
    ("x1 x2 / x2 y1 / y1 y2 / y2 x3 / y3", "{1|0,*}"),
    ("x1 y1 / x1 x2 / x2 y1 / y2 / x3", "^*"),
]


def birthday2_catalog(with_negatives: bool = False) -> list[CatalogEntry]:
    """The twelve dimension-1 witnesses for the values born by day 2."""
    out = []
    for facets, value in _BIRTHDAY2:
        c = LegalComplex(f.split() for f in facets.split(" / "))
        out.append(CatalogEntry(c, value))
    if with_negatives:
        out += [CatalogEntry(negate_labels(e.complex), e.expected, True) for e in list(out)]
    return out


def nim_pile(n: int):
    from .rulesets import nim_pile_complex

    return nim_pile_complex(n)


def expected_value(kind: str, *params: int) -> GameNode:
    """Value each construction is built to have."""
    from . import values as V
    from .engine import canonical_form, make_game

    if kind == "integer-simplex":
        m, n = params
        return V.make_number(m - n)
    if kind == "integer-at-dim":
        return V.make_number(params[0])
    if kind == "fraction":
        return V.make_number(Fraction(1, 1 << params[0]))
    if kind == "dyadic":
        p, q = params
        return V.make_number(Fraction(p, 1 << q))
    if kind == "switch-sym":
        a, b = params[:2]
        return canonical_form(make_game([V.make_number(a)], [V.make_number(-b)]))
    if kind == "switch":
        return V.make_switch(params[0], params[1])
    if kind == "tiny":
        return V.make_tiny(params[0])
    if kind == "nim":
        return V.make_nimber(params[0])
    raise ValueError(f"unknown construction {kind!r}")


CONSTRUCTIONS = {
    "integer-simplex": (integer_simplex, 2),
    "integer-at-dim": (integer_at_dimension, 2),
    "fraction": (fraction_complex, 1),
    "dyadic": (dyadic_complex, 2),
    "switch-sym": (switch_symmetric, 2),
    "switch": (switch_general, 2),
    "tiny": (tiny_complex, 1),
    "nim": (nim_pile, 1),
}
