"""Named game values: numbers, nimbers, ups, switches and tinies.

Builders return canonical forms; :func:`recognize` maps a game back to a
descriptor, and every descriptor it returns is checked against the builder
for that descriptor.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from . import engine
from .engine import GameNode, add, canonical_form, make_game, negate

UP_BOUND = 8
NIMBER_BOUND = 64
_UP_STAR_BOUND = 3


@dataclass(frozen=True)
class Dyadic:
    """``p / 2**q`` in lowest terms."""

    p: int
    q: int = 0

    def __post_init__(self):
        if self.q < 0:
            raise ValueError("dyadic exponent must be nonnegative")
        if self.q > 0 and self.p % 2 == 0:
            raise ValueError(f"{self.p}/2^{self.q} is not in lowest terms")

    @classmethod
    def of(cls, x: Union["Dyadic", Fraction, int, str]) -> "Dyadic":
        if isinstance(x, Dyadic):
            return x
        f = Fraction(x)
        den = f.denominator
        q = den.bit_length() - 1
        if den != 1 << q:
            raise ValueError(f"{f} is not a dyadic rational")
        return cls(f.numerator, q)

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.p, 1 << self.q)

    def is_integer(self) -> bool:
        return self.q == 0

    def __add__(self, other):
        return Dyadic.of(self.fraction + Dyadic.of(other).fraction)

    __radd__ = __add__

    def __sub__(self, other):
        return Dyadic.of(self.fraction - Dyadic.of(other).fraction)

    def __rsub__(self, other):
        return Dyadic.of(Dyadic.of(other).fraction - self.fraction)

    def __neg__(self):
        return Dyadic(-self.p, self.q)

    def __lt__(self, other):
        return self.fraction < Dyadic.of(other).fraction

    def __le__(self, other):
        return self.fraction <= Dyadic.of(other).fraction

    def __gt__(self, other):
        return self.fraction > Dyadic.of(other).fraction

    def __ge__(self, other):
        return self.fraction >= Dyadic.of(other).fraction

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.fraction == other
        if isinstance(other, Dyadic):
            return self.p == other.p and self.q == other.q
        return NotImplemented

    def __hash__(self):
        return hash(self.fraction)

    def half(self) -> "Dyadic":
        return Dyadic.of(self.fraction / 2)

    def __str__(self):
        return format_number(self)


def format_number(d: Dyadic) -> str:
    """``3``, ``-1/2``, ``2+1/2``, ``-2-1/2``."""
    if d.q == 0:
        return str(d.p)
    sign = "-" if d.p < 0 else ""
    whole, rest = divmod(abs(d.p), 1 << d.q)
    frac = f"{rest}/{1 << d.q}"
    if whole == 0:
        return sign + frac
    return f"{sign}{whole}{sign or '+'}{frac}"


def simplest_between(a, b) -> Dyadic:
    """Simplest dyadic strictly between ``a`` and ``b``."""
    a, b = Dyadic.of(a), Dyadic.of(b)
    if not a < b:
        raise ValueError(f"simplest_between needs a < b, got {a} >= {b}")
    return _simplest(a.fraction, b.fraction)


def _simplest(lo: Fraction | None, hi: Fraction | None) -> Dyadic:
    # None marks an open end
    if (lo is None or lo < 0) and (hi is None or hi > 0):
        return Dyadic(0)
    if lo is not None and lo >= 0:
        n = _floor(lo) + 1
        if hi is None or n < hi:
            return Dyadic(n)
    else:
        n = _ceil(hi) - 1
        if lo is None or n > lo:
            return Dyadic(n)
    q = 1
    while True:
        scale = 1 << q
        p = _floor(lo * scale) + 1
        if Fraction(p, scale) < hi:
            return Dyadic.of(Fraction(p, scale))
        q += 1


def _floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


# ---------------------------------------------------------------------------
# descriptors


@dataclass(frozen=True)
class Number:
    value: Dyadic


@dataclass(frozen=True)
class Nimber:
    n: int


@dataclass(frozen=True)
class NumberUpStar:
    """``number + ups.^ + *star`` with at least one of ``ups``, ``star`` nonzero."""

    number: Dyadic
    ups: int
    star: int = 0


@dataclass(frozen=True)
class Switch:
    left: Dyadic
    right: Dyadic

    @property
    def mean(self) -> Dyadic:
        return (self.left + self.right).half()

    @property
    def temperature(self) -> Dyadic:
        return (self.left - self.right).half()


@dataclass(frozen=True)
class Tiny:
    """``number + {0 || 0 | -n}``."""

    n: Dyadic
    number: Dyadic = Dyadic(0)


@dataclass(frozen=True)
class Miny:
    n: Dyadic
    number: Dyadic = Dyadic(0)


@dataclass(frozen=True)
class Literal:
    text: str


ValueDescriptor = Union[Number, Nimber, NumberUpStar, Switch, Tiny, Miny, Literal]


# ---------------------------------------------------------------------------
# builders

_number_cache: dict[Dyadic, GameNode] = {}
_nimber_cache: dict[int, GameNode] = {}
_up_cache: dict[tuple[int, int], GameNode] = {}
_up_table: dict[int, tuple[int, int]] = {}


def _reset_tables() -> None:
    _number_cache.clear()
    _nimber_cache.clear()
    _up_cache.clear()
    _up_table.clear()


def make_number(d) -> GameNode:
    d = Dyadic.of(d)
    g = _number_cache.get(d)
    if g is None:
        if d.p == 0:
            g = engine.ZERO
        elif d.q == 0:
            g = make_game([make_number(d.p - 1)]) if d.p > 0 else make_game([], [make_number(d.p + 1)])
        else:
            step = Fraction(1, 1 << d.q)
            g = make_game([make_number(d.fraction - step)], [make_number(d.fraction + step)])
        g = canonical_form(g)
        _number_cache[d] = g
    return g


def make_nimber(n: int) -> GameNode:
    if n < 0:
        raise ValueError("nimber index must be nonnegative")
    g = _nimber_cache.get(n)
    if g is None:
        opts = [make_nimber(i) for i in range(n)]
        g = make_game(opts, opts)
        _nimber_cache[n] = g
    return g


def make_up_star(k: int, star: int = 0) -> GameNode:
    """Canonical ``k.^ + *star``; negative ``k`` gives downs."""
    key = (k, star)
    g = _up_cache.get(key)
    if g is None:
        if k == 0:
            g = make_nimber(star)
        elif k < 0:
            g = negate(make_up_star(-k, star))
        else:
            up = make_game([engine.ZERO], [make_nimber(1)])
            g = canonical_form(add(make_up_star(k - 1, 0), up))
            if star:
                g = canonical_form(add(g, make_nimber(star)))
        _up_cache[key] = g
    return g


def make_switch(a, b) -> GameNode:
    a, b = Dyadic.of(a), Dyadic.of(b)
    if not a > b:
        raise ValueError(f"switch needs left > right, got {{{a}|{b}}}")
    return canonical_form(make_game([make_number(a)], [make_number(b)]))


def make_tiny(d, number=0) -> GameNode:
    d = Dyadic.of(d)
    if not d > 0:
        raise ValueError("tiny needs a positive subscript")
    inner = make_game([engine.ZERO], [make_number(-d)])
    g = canonical_form(make_game([engine.ZERO], [inner]))
    if Dyadic.of(number) != 0:
        g = canonical_form(add(g, make_number(number)))
    return g


def make_miny(d, number=0) -> GameNode:
    return canonical_form(negate(make_tiny(d, -Dyadic.of(number))))


def build(v: ValueDescriptor) -> GameNode:
    """Canonical form denoted by a descriptor."""
    if isinstance(v, Number):
        return make_number(v.value)
    if isinstance(v, Nimber):
        return make_nimber(v.n)
    if isinstance(v, NumberUpStar):
        return canonical_form(add(make_up_star(v.ups, v.star), make_number(v.number)))
    if isinstance(v, Switch):
        return make_switch(v.left, v.right)
    if isinstance(v, Tiny):
        return make_tiny(v.n, v.number)
    if isinstance(v, Miny):
        return make_miny(v.n, v.number)
    if isinstance(v, Literal):
        return canonical_form(parse_game(v.text))
    raise TypeError(f"not a value descriptor: {v!r}")


# ---------------------------------------------------------------------------
# recognition


def number_value(g: GameNode) -> Dyadic | None:
    """Dyadic value of a canonical number, ``None`` if ``g`` is not a number."""
    if canonical_form(g) is not g:
        raise ValueError("number_value expects a canonical form")
    return _number_of(g)


def _number_of(g: GameNode) -> Dyadic | None:
    if len(g.left) > 1 or len(g.right) > 1:
        return None
    lo = hi = None
    if g.left:
        lo = _number_of(g.left[0])
        if lo is None:
            return None
    if g.right:
        hi = _number_of(g.right[0])
        if hi is None:
            return None
    if lo is not None and hi is not None and not lo < hi:
        return None
    return _simplest(None if lo is None else lo.fraction, None if hi is None else hi.fraction)


def _nimber_of(g: GameNode) -> int | None:
    if g.left != g.right:
        return None
    n = len(g.left)
    if n > NIMBER_BOUND:
        return None
    if set(g.left) != {make_nimber(i) for i in range(n)}:
        return None
    return n


def stops(g: GameNode) -> tuple[Dyadic, Dyadic]:
    """(left stop, right stop) of a canonical game."""
    return _left_stop(g), _right_stop(g)


def _left_stop(g: GameNode) -> Dyadic:
    x = _number_of(g)
    if x is not None:
        return x
    return max(_right_stop(gl) for gl in g.left)


def _right_stop(g: GameNode) -> Dyadic:
    x = _number_of(g)
    if x is not None:
        return x
    return min(_left_stop(gr) for gr in g.right)


def _up_star_of(g: GameNode) -> tuple[int, int] | None:
    if not _up_table:
        for k in range(-UP_BOUND, UP_BOUND + 1):
            if k == 0:
                continue
            for s in range(_UP_STAR_BOUND + 1):
                _up_table[make_up_star(k, s).uid] = (k, s)
    m = _nimber_of(g)
    if m is not None:
        return 0, m
    return _up_table.get(g.uid)


def _single_number(opts: tuple) -> Dyadic | None:
    if len(opts) != 1:
        return None
    return _number_of(opts[0])


def recognize(g: GameNode) -> ValueDescriptor:
    g = canonical_form(g)
    x = _number_of(g)
    if x is not None:
        return Number(x)
    n = _nimber_of(g)
    if n is not None:
        return Nimber(n)
    a, b = _single_number(g.left), _single_number(g.right)
    if a is not None and b is not None and a > b:
        return Switch(a, b)
    ls, rs = stops(g)
    if ls == rs:
        rest = canonical_form(add(g, make_number(-ls)))
        us = _up_star_of(rest)
        if us is not None:
            return NumberUpStar(ls, us[0], us[1])
        if a is not None and a == ls and len(g.right) == 1:
            h = g.right[0]
            c, d = _single_number(h.left), _single_number(h.right)
            if c == a and d is not None and d < a:
                return Tiny(a - d, a)
        if b is not None and b == ls and len(g.left) == 1:
            h = g.left[0]
            c, d = _single_number(h.left), _single_number(h.right)
            if d == b and c is not None and c > b:
                return Miny(c - b, b)
    return Literal(pretty_bracket(g))


# ---------------------------------------------------------------------------
# rendering


def _ups_token(k: int) -> str:
    arrow = "^" if k > 0 else "v"
    return arrow if abs(k) == 1 else f"{abs(k)}.{arrow}"


def render_value(v: ValueDescriptor, machine: bool = False) -> str:
    """Human form uses ``±``; ``machine=True`` keeps to ASCII and tags literals."""
    pm = "+-" if machine else "±"
    if isinstance(v, Number):
        return format_number(v.value)
    if isinstance(v, Nimber):
        return "0" if v.n == 0 else ("*" if v.n == 1 else f"*{v.n}")
    if isinstance(v, NumberUpStar):
        out = "" if v.number == 0 else format_number(v.number)
        if v.ups:
            tok = _ups_token(v.ups)
            if out and abs(v.ups) == 1 and not v.number.is_integer():
                out += "." + tok
            elif out:
                out += "+" + tok
            else:
                out = tok
        if v.star:
            out += "*" if v.star == 1 else f"*{v.star}"
        return out
    if isinstance(v, Switch):
        t = format_number(v.temperature)
        if not v.temperature.is_integer():
            t = f"({t})"
        return f"{{{format_number(v.left)}|{format_number(v.right)}}} = {format_number(v.mean)}{pm}{t}"
    if isinstance(v, Tiny):
        pre = "" if v.number == 0 else format_number(v.number)
        return f"{pre}+_{format_number(v.n)}"
    if isinstance(v, Miny):
        pre = "" if v.number == 0 else format_number(v.number)
        return f"{pre}-_{format_number(v.n)}"
    if isinstance(v, Literal):
        return ("L:" + v.text) if machine else v.text
    raise TypeError(f"not a value descriptor: {v!r}")


def _pretty_label(g: GameNode) -> str | None:
    x = _number_of(g)
    if x is not None:
        return format_number(x)
    n = _nimber_of(g)
    if n is not None:
        return "*" if n == 1 else f"*{n}"
    return None


def pretty_bracket(g: GameNode) -> str:
    """Bracket form with numbers and nimbers printed by name."""
    label = _pretty_label(g)
    if label is not None:
        return label
    return engine._bracket(g, _pretty_label)


def bracket(g: GameNode, pretty: bool = False) -> str:
    return pretty_bracket(g) if pretty else engine.raw_bracket(g)


def describe(g: GameNode, machine: bool = True) -> str:
    return render_value(recognize(g), machine=machine)


# ---------------------------------------------------------------------------
# parsing value expressions

_NUM = r"-?\d+(?:[+-]\d+/\d+|/\d+)?"
_ATOM_RE = re.compile(
    rf"""^(?P<num>{_NUM})?
        (?:(?P<sep>[.+])?(?P<mult>\d+\.)?(?P<arrow>[\^v]))?
        (?P<star>\*\d*)?$""",
    re.X,
)
_TINY_RE = re.compile(rf"^(?P<num>{_NUM})?(?P<sign>[+-])_(?P<sub>{_NUM})$")
_MULTI_UP_RE = re.compile(r"^(?P<mult>\d+)\.(?P<arrow>[\^v])(?P<star>\*\d*)?$")


def parse_number(tok: str) -> Dyadic:
    m = re.fullmatch(r"(-?)(\d+)([+-])(\d+)/(\d+)", tok)
    if m:
        sign = -1 if m.group(1) else 1
        if (m.group(3) == "-") != (sign < 0):
            raise ValueError(f"inconsistent sign in {tok!r}")
        return Dyadic.of(sign * (int(m.group(2)) + Fraction(int(m.group(4)), int(m.group(5)))))
    return Dyadic.of(Fraction(tok))


def parse_atom(tok: str) -> GameNode:
    tok = tok.strip()
    if tok.startswith("L:"):
        return parse_game(tok[2:])
    m = _TINY_RE.match(tok)
    if m:
        num = parse_number(m.group("num")) if m.group("num") else Dyadic(0)
        sub = parse_number(m.group("sub"))
        return make_tiny(sub, num) if m.group("sign") == "+" else make_miny(sub, num)
    m = _MULTI_UP_RE.match(tok)
    if m:
        k = int(m.group("mult")) * (1 if m.group("arrow") == "^" else -1)
        star = int(m.group("star")[1:] or 1) if m.group("star") else 0
        return make_up_star(k, star)
    m = _ATOM_RE.match(tok)
    if not tok or not m:
        raise ValueError(f"cannot parse value token {tok!r}")
    num = parse_number(m.group("num")) if m.group("num") else Dyadic(0)
    ups = 0
    if m.group("arrow"):
        mult = int(m.group("mult")[:-1]) if m.group("mult") else 1
        ups = mult if m.group("arrow") == "^" else -mult
    star = 0
    if m.group("star"):
        star = int(m.group("star")[1:] or 1)
    if ups == 0:
        g = make_nimber(star)
        return g if num == 0 else canonical_form(add(g, make_number(num)))
    return build(NumberUpStar(num, ups, star))


def parse_game(text: str) -> GameNode:
    """Parse bracket notation with named atoms; braces are kept literally.

    ``{{|0}|0}`` yields exactly that tree, while atoms such as ``1/2``,
    ``*2``, ``^*`` or ``+_1`` stand for their canonical forms.  A trailing
    `` = m±t`` annotation (as printed for switches) is ignored.
    """
    text = text.strip()
    if "=" in text and text.startswith("{"):
        text = text.split("=", 1)[0].strip()
    pos = 0

    def skip():
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def game() -> GameNode:
        nonlocal pos
        skip()
        if pos < len(text) and text[pos] == "{":
            pos += 1
            left = options("|")
            pos += 1
            right = options("}")
            pos += 1
            return make_game(left, right)
        start = pos
        while pos < len(text) and text[pos] not in ",|}{":
            pos += 1
        return parse_atom(text[start:pos])

    def options(end: str) -> list[GameNode]:
        nonlocal pos
        out: list[GameNode] = []
        skip()
        if pos < len(text) and text[pos] == end:
            return out
        while True:
            out.append(game())
            skip()
            if pos >= len(text):
                raise ValueError(f"unbalanced braces in {text!r}")
            if text[pos] == ",":
                pos += 1
                continue
            if text[pos] == end:
                return out
            raise ValueError(f"unexpected {text[pos]!r} at {pos} in {text!r}")

    g = game()
    skip()
    if pos != len(text):
        raise ValueError(f"trailing input at {pos} in {text!r}")
    return g
