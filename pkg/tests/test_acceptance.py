"""One test per acceptance criterion, each checked at its stated time limit.

Every test prints a single PASS/FAIL line; the lines are repeated in the
terminal summary so they show up without ``-s``.
"""
import pytest

from conftest import ACCEPTANCE_LINES
from spgames import _kernels
from spgames import verify as Vf


@pytest.fixture(scope="module", autouse=True)
def _warm():
    _kernels.warmup()


def run(key, claim, fn, limit):
    expected, got, ok, secs = Vf._timed(fn)
    row = Vf.Row(key, claim, expected, got, ok and secs < limit, secs, limit)
    print(row.line())
    ACCEPTANCE_LINES.append(row.line())
    assert ok, f"{key}: expected {expected}, got {got}"
    assert secs < limit, f"{key}: took {secs:.3f}s, limit {limit}s"


def test_c1_snort_path3_facets():
    Vf.check_snort()  # first call pays for imports and board setup
    run("c1", "Snort on P3 has the four listed facets", Vf.check_snort, 0.001)


def test_c2_birthday2_catalog():
    run("c2", "birthday-2 witnesses evaluate to their values", Vf.check_birthday2, 1.0)


def test_c3_integer_constructions():
    run("c3", "integer_simplex and integer_at_dimension", Vf.check_integers, 10.0)


def test_c4_fractions():
    run("c4", "fraction_complex and dyadic_complex", Vf.check_fractions, 60.0)


def test_c5_switches_and_tinies():
    run("c5", "switch_symmetric, switch_general, tiny_complex", Vf.check_switches_tinies, 10.0)


def test_c6_nim_piles():
    run("c6", "grundy of nim piles and the partizan cross-check", Vf.check_nim, 30.0)


def test_c7_census():
    run("c7", "no +-1 at dimension 1 and no 0 at dimension 0", Vf.check_census, 60.0)


def test_c8_domineering():
    run("c8", "Domineering boards", Vf.check_domineering, 30.0)


def test_c9_properties():
    run("c9", "seeded algebraic properties, 200 cases each", lambda: Vf.check_properties(cases=200, seed=2024), 60.0)


def test_c10_sp_tree():
    fixtures = Vf.load_fixtures()
    run("c10", "commutation check on -1/2 and the fixture corpus", lambda: Vf.check_sp_tree(fixtures), 1.0)


def test_c11_col_paths():
    run("c11", "Col on P1..P5 is a number or number plus star", Vf.check_col_paths, 10.0)
