"""Regression checks over the published constructions and the golden fixtures."""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Callable

from . import _kernels, engine as E, values as V
from .census import absent_in_top, run_census
from .complex import LegalComplex, SimplicialComplex
from .constructions import (
    birthday2_catalog,
    dyadic_complex,
    expected_value,
    fraction_complex,
    integer_at_dimension,
    integer_simplex,
    switch_general,
    switch_symmetric,
    tiny_complex,
)
from .impartial import grundy, grundy_value_crosscheck, predict_structural
from .rulesets import Board, col_complex, domineering_complex, nim_pile_complex, parse_board, snort_complex

SNORT_P3_FACETS = {
    frozenset({"x1", "y2", "x3"}),
    frozenset({"y1", "x2", "y3"}),
    frozenset({"x1", "y3"}),
    frozenset({"x3", "y1"}),
}


@dataclass
class Row:
    key: str
    claim: str
    expected: str
    got: str
    ok: bool
    seconds: float = 0.0
    limit: float | None = None

    @property
    def status(self) -> str:
        return "PASS" if self.ok else "FAIL"

    def line(self) -> str:
        lim = f" (limit {self.limit:g}s)" if self.limit is not None else ""
        return (
            f"{self.status} {self.key}: {self.claim} | expected {self.expected} | "
            f"got {self.got} | {self.seconds:.4f}s{lim}"
        )


@dataclass
class Fixture:
    name: str
    complex: SimplicialComplex
    expected: str
    impartial: bool


class FixtureError(ValueError):
    pass


def default_fixture_dir() -> Path:
    return Path(str(resources.files("spgames") / "fixtures"))


def load_fixtures(directory: str | Path | None = None) -> list[Fixture]:
    """Read every ``*.cx`` file; each needs a ``# expect: <value>`` header."""
    path = Path(directory) if directory is not None else default_fixture_dir()
    if not path.is_dir():
        raise FixtureError(f"fixture directory {path} does not exist")
    out = []
    for f in sorted(path.glob("*.cx")):
        text = f.read_text(encoding="utf-8")
        expected, impartial = None, False
        for line in text.splitlines():
            s = line.strip()
            if s.startswith("# expect:"):
                expected = s[len("# expect:"):].strip()
            elif s == "# impartial":
                impartial = True
        if expected is None:
            raise FixtureError(f"{f.name}: missing '# expect:' header")
        cls = SimplicialComplex if impartial else LegalComplex
        out.append(Fixture(f.stem, cls.from_text(text), expected, impartial))
    if not out:
        raise FixtureError(f"no fixtures (*.cx) found in {path}")
    return out


def _timed(fn: Callable[[], tuple[str, str, bool]]) -> tuple[str, str, bool, float]:
    E.reset()
    start = time.perf_counter()
    try:
        expected, got, ok = fn()
    except Exception as exc:  # a broken engine must show up as a failed row
        expected, got, ok = "-", f"error: {type(exc).__name__}: {exc}", False
    return expected, got, ok, time.perf_counter() - start


def _same(g: E.GameNode, h: E.GameNode) -> bool:
    return E.canonical_form(g) is E.canonical_form(h)


def _mismatches(pairs) -> list[str]:
    return [label for label, g, h in pairs if not _same(g, h)]


def _summary(bad: list[str], total: int) -> tuple[str, str, bool]:
    got = f"{total - len(bad)}/{total} match" + (f"; failing: {', '.join(bad[:6])}" if bad else "")
    return f"{total}/{total} match", got, not bad


# ---------------------------------------------------------------------------
# the individual checks


def check_snort():
    c = snort_complex(Board.path(3))
    got = {frozenset(f) for f in c.facets}
    fmt = lambda fs: " ".join("{" + ",".join(sorted(f)) + "}" for f in sorted(fs, key=sorted))
    return fmt(SNORT_P3_FACETS), fmt(got), got == SNORT_P3_FACETS


def check_col_example():
    c = col_complex(Board.path(3))
    got = {frozenset(f) for f in c.facets}
    fmt = lambda fs: " ".join("{" + ",".join(sorted(f)) + "}" for f in sorted(fs, key=sorted))
    return fmt(SNORT_P3_FACETS), fmt(got), got == SNORT_P3_FACETS


def check_birthday2():
    pairs = [(e.label, E.evaluate(e.complex), e.expected_game()) for e in birthday2_catalog(True)]
    return _summary(_mismatches(pairs), len(pairs))


def check_integers():
    pairs = []
    for m in range(5):
        for n in range(5):
            pairs.append((f"simplex({m},{n})", E.evaluate(integer_simplex(m, n)), V.make_number(m - n)))
    for n in range(4):
        for k in range(n + 1, 6):
            c = integer_at_dimension(n, k)
            pairs.append((f"dim({n},{k})", E.evaluate(c), V.make_number(n)))
            if c.dimension != k:
                pairs.append((f"dim({n},{k}) dimension", V.make_number(c.dimension), V.make_number(k)))
    return _summary(_mismatches(pairs), len(pairs))


def check_fractions():
    pairs = []
    for q in range(6):
        pairs.append((f"1/2^{q}", E.evaluate(fraction_complex(q)), V.make_number(Fraction(1, 1 << q))))
    for p in range(-5, 6):
        for q in range(4):
            pairs.append((f"{p}/2^{q}", E.evaluate(dyadic_complex(p, q)), V.make_number(Fraction(p, 1 << q))))
    return _summary(_mismatches(pairs), len(pairs))


def check_switches_tinies():
    pairs = []
    for a in range(5):
        for b in range(5):
            pairs.append((f"sym({a},{b})", E.evaluate(switch_symmetric(a, b)), expected_value("switch-sym", a, b)))
            if a > b:
                pairs.append((f"switch({a},{b})", E.evaluate(switch_general(a, b)), expected_value("switch", a, b)))
    for n in range(1, 5):
        pairs.append((f"tiny({n})", E.evaluate(tiny_complex(n)), V.make_tiny(n)))
    return _summary(_mismatches(pairs), len(pairs))


def check_nim():
    got = [grundy(nim_pile_complex(n)) for n in range(1, 6)]
    cross = [grundy_value_crosscheck(nim_pile_complex(n)) for n in range(1, 5)]
    expected = "grundy 1..5; crosscheck n<=4 true"
    return expected, f"grundy {got}; crosscheck {cross}", got == [1, 2, 3, 4, 5] and all(cross)


def check_census():
    r1 = run_census(5, 1)
    r0 = run_census(5, 0)
    ok1 = absent_in_top(r1, "1") and absent_in_top(r1, "-1")
    ok0 = absent_in_top(r0, "0")
    got = f"dim 1: +-1 {'absent' if ok1 else 'PRESENT'}; dim 0: 0 {'absent' if ok0 else 'PRESENT'}"
    return "dim 1: +-1 absent; dim 0: 0 absent", got, ok1 and ok0


def check_domineering():
    cases = [
        ("1x1", "grid:1x1", "0"),
        ("2x1", "grid:2x1", "1"),
        ("2x2", "grid:2x2", "{1|-1}"),
        ("L", "grid:3x2:mask=0,1;1,1", "{0|1}"),
        ("plus", "grid:4x3:mask=0,0;0,2;1,0;2,2;3,0;3,2", "^"),
        ("2x5", "grid:2x5", "1/2"),
    ]
    bad = []
    for label, board, value in cases:
        c = domineering_complex(parse_board(board))
        g = E.evaluate(c)
        if not _same(g, V.parse_game(value)):
            bad.append(label)
        if label == "L" and V.bracket(g) != "{{|}|{{|}|}}":
            bad.append("L canonical form")
        if label == "2x5":
            fb, b = E.formal_birthday(E.game_from_complex(c)), E.birthday(g)
            if (fb, b) != (5, 2):
                bad.append(f"2x5 birthdays {fb},{b}")
    return _summary(bad, len(cases))


def random_complex(rng: random.Random, max_vertices: int = 6, max_size: int = 3, impartial: bool = False):
    n = rng.randint(1, max_vertices)
    names = [f"v{i}" for i in range(n)] if impartial else [rng.choice("xy") + str(i) for i in range(n)]
    facets = []
    for _ in range(rng.randint(1, 5)):
        k = rng.randint(1, min(max_size, n))
        facets.append(rng.sample(names, k))
    cls = SimplicialComplex if impartial else LegalComplex
    return cls(facets)


def _random_game(rng: random.Random, depth: int) -> E.GameNode:
    if depth == 0:
        return E.ZERO
    left = [_random_game(rng, depth - 1) for _ in range(rng.randint(0, 2))]
    right = [_random_game(rng, depth - 1) for _ in range(rng.randint(0, 2))]
    return E.make_game(left, right)


def check_properties(cases: int = 200, seed: int = 2024):
    rng = random.Random(seed)
    bad = []
    for i in range(cases):
        g = _random_game(rng, 3)
        h = _random_game(rng, 3)
        if not E.equal(E.add(g, E.negate(g)), E.ZERO):
            bad.append(f"g-g #{i}")
        cg = E.canonical_form(g)
        if E.canonical_form(cg) is not cg or not E.equal(cg, g):
            bad.append(f"canonical #{i}")
        if E.leq(g, h) != E.leq_by_difference(g, h):
            bad.append(f"leq #{i}")
        a = random_complex(rng, 4, 2)
        b = random_complex(rng, 3, 2).renamed(lambda v: v + "b")
        if not E.equal(E.evaluate(a.join(b)), E.add(E.evaluate(a), E.evaluate(b))):
            bad.append(f"join #{i}")
        if E.formal_birthday(E.game_from_complex(a)) != a.dimension + 1:
            bad.append(f"formal birthday #{i}")
        ic = random_complex(rng, 7, 4, impartial=True)
        p = predict_structural(ic)
        if p is not None and p != grundy(ic):
            bad.append(f"structural #{i}")
    for m in range(7):
        for n in range(7):
            if not _same(E.add(V.make_nimber(m), V.make_nimber(n)), V.make_nimber(m ^ n)):
                bad.append(f"*{m}+*{n}")
    return _summary(bad, cases * 6 + 49)


def check_sp_tree(fixtures: list[Fixture]):
    minus_half = E.canonical_form(V.parse_game("-1/2"))
    bad = []
    if E.sp_tree_check(minus_half):
        bad.append("-1/2 accepted")
    for fx in fixtures:
        if not fx.impartial and not E.sp_tree_check(E.game_from_complex(fx.complex)):
            bad.append(fx.name)
    return "-1/2 rejected; every fixture accepted", "ok" if not bad else ", ".join(bad), not bad


def check_col_paths():
    got = []
    ok = True
    for n in range(1, 6):
        v = V.recognize(E.evaluate(col_complex(Board.path(n))))
        got.append(V.render_value(v, machine=True))
        is_num = isinstance(v, V.Number) or (isinstance(v, V.Nimber) and v.n <= 1)
        is_num_star = isinstance(v, V.NumberUpStar) and v.ups == 0 and v.star in (0, 1)
        ok = ok and (is_num or is_num_star)
    return "numbers or number+* on P1..P5", ", ".join(got), ok


def check_fixture(fx: Fixture) -> tuple[str, str, bool]:
    if fx.impartial:
        got = f"*{grundy(fx.complex)}"
        return fx.expected, got, _same(V.parse_game(got), V.parse_game(fx.expected))
    g = E.evaluate(fx.complex)
    return fx.expected, V.describe(g), _same(g, V.parse_game(fx.expected))


CRITERIA: list[tuple[str, str, Callable, float]] = [
    ("c1", "Snort on P3 has the four example facets", check_snort, 0.001),
    ("c2", "birthday-2 witnesses and their negatives", check_birthday2, 1.0),
    ("c3", "integer constructions", check_integers, 10.0),
    ("c4", "unit and dyadic fractions", check_fractions, 60.0),
    ("c5", "switches and tinies", check_switches_tinies, 10.0),
    ("c6", "nim piles and the partizan cross-check", check_nim, 30.0),
    ("c7", "integer impossibility census", check_census, 60.0),
    ("c8", "Domineering boards", check_domineering, 30.0),
    ("c9", "seeded algebraic properties", check_properties, 60.0),
    ("c11", "Col on paths is a number or number plus star", check_col_paths, 10.0),
]


def run_all(fixture_dir: str | Path | None = None) -> list[Row]:
    """Run every check and every fixture; raises ``FixtureError`` on a bad fixture dir."""
    fixtures = load_fixtures(fixture_dir)
    _kernels.warmup()
    rows = []
    for key, claim, fn, limit in CRITERIA:
        expected, got, ok, secs = _timed(fn)
        rows.append(Row(key, claim, expected, got, ok and secs < limit, secs, limit))
    expected, got, ok, secs = _timed(lambda: check_sp_tree(fixtures))
    rows.insert(9, Row("c10", "commutation check on -1/2 and the fixtures", expected, got, ok and secs < 1.0, secs, 1.0))
    expected, got, ok, secs = _timed(check_col_example)
    rows.insert(1, Row("c1b", "Col on P3 has the four example facets", expected, got, ok, secs))
    for fx in fixtures:
        expected, got, ok, secs = _timed(lambda fx=fx: check_fixture(fx))
        rows.append(Row(f"fixture {fx.name}", "golden value", expected, got, ok, secs))
    return rows
