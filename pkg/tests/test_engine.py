from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from spgames import engine as E
from spgames import values as V
from spgames.complex import LegalComplex, negate_labels
from spgames.constructions import birthday2_catalog
from spgames.engine import Outcome

from strategies import games, legal_complexes

ZERO = E.ZERO
ONE = V.make_number(1)
STAR = V.make_nimber(1)
HALF = V.make_number(Fraction(1, 2))


def game(*facets):
    return E.game_from_complex(LegalComplex([f.split() for f in facets]))


def test_games_from_small_complexes():
    assert game() is ZERO
    assert game("x1") is E.make_game([ZERO], [])
    g = game("x1 y1")
    assert g.left == (V.make_number(-1),) and g.right == (ONE,)
    assert E.equal(g, ZERO)


def test_outcomes():
    assert E.outcome(ZERO) is Outcome.P
    assert E.outcome(STAR) is Outcome.N
    assert E.outcome(ONE) is Outcome.L
    assert E.outcome(V.make_number(-2)) is Outcome.R


def test_outcome_partial_order():
    assert Outcome.R < Outcome.N < Outcome.L
    assert Outcome.R < Outcome.P < Outcome.L
    assert not (Outcome.N <= Outcome.P) and not (Outcome.P <= Outcome.N)


def test_negation():
    assert E.negate(ONE) is E.make_game([], [ZERO])
    assert E.negate(STAR) is STAR


def test_sums():
    g = game("x1 y1", "x2")
    assert E.add(ZERO, g) is g
    assert E.canonical_form(E.add(ONE, ONE)) is E.make_game([ONE], [])


def test_comparisons():
    assert E.leq(ZERO, ONE) and not E.leq(ONE, ZERO)
    assert not E.leq(STAR, ZERO) and not E.leq(ZERO, STAR)
    assert E.incomparable(STAR, ZERO)
    assert E.leq(HALF, ONE)
    assert E.outcome(E.add(HALF, E.negate(ONE))) is Outcome.R
    assert E.greater(ONE, HALF)


def test_domination_example():
    lhs = V.parse_game("{1|*}")
    rhs = V.parse_game("{1,*,-1|*}")
    assert E.equal(lhs, rhs)
    assert E.canonical_form(rhs) is E.canonical_form(lhs)


def test_reversible_example():
    g = game("x1 x2", "x1 y1")
    assert E.canonical_form(g) is E.make_game([ONE], [ONE])
    assert E.canonical_form(game("x1 y1", "x2")) is E.make_game([ZERO], [ONE])
    assert E.canonical_form(ZERO) is ZERO


def test_birthdays():
    assert E.birthday(ZERO) == 0
    g = game("x1 y1", "x2")
    assert E.formal_birthday(g) == 2 and E.birthday(g) == 2


def test_sp_tree_check():
    assert not E.sp_tree_check(E.canonical_form(V.parse_game("-1/2")))
    assert E.canonical_form(V.parse_game("-1/2")) is V.parse_game("{{|0}|0}")
    assert E.sp_tree_check(ZERO)
    for e in birthday2_catalog(True):
        assert E.sp_tree_check(E.game_from_complex(e.complex))


def test_negation_matches_label_swap():
    for e in birthday2_catalog():
        assert E.negate(E.game_from_complex(e.complex)) is E.game_from_complex(negate_labels(e.complex))


def test_deep_recursion():
    g = ZERO
    for _ in range(200):
        g = E.make_game([g], [])
    assert E.formal_birthday(g) == 200
    assert E.canonical_form(g) is V.make_number(200)
    assert E.leq(V.make_number(199), g) and E.outcome(g) is Outcome.L
    assert E.equal(E.add(g, E.negate(g)), ZERO)


def test_reset_keeps_identity():
    before = V.make_number(3)
    E.reset()
    assert E.canonical_form(E.make_game([V.make_number(2)], [])) is before
    assert E.equal(E.evaluate(LegalComplex([["x1", "y1"], ["x2"]])), V.make_number(Fraction(1, 2)))
    assert E.equal(E.evaluate(LegalComplex([["x1", "y1"], ["x2"]])), V.make_number(Fraction(1, 2)))


def test_join_factors_split_sums():
    from spgames.constructions import dyadic_complex

    parts = E.join_factors(dyadic_complex(3, 1))
    assert len(parts) == 3 and all(len(p.facets) == 2 for p in parts)


@given(games())
def test_g_minus_g_is_zero(g):
    assert E.outcome(E.add(g, E.negate(g))) is Outcome.P


@given(games())
def test_canonical_idempotent_and_equal(g):
    c = E.canonical_form(g)
    assert E.canonical_form(c) is c
    assert E.equal(g, c)
    assert E.birthday(g) <= E.formal_birthday(g)


@given(games(), games())
def test_leq_matches_difference(g, h):
    assert E.leq(g, h) == (E.outcome(E.add(g, E.negate(h))) in (Outcome.P, Outcome.R))
    assert E.leq(g, h) == E.leq_by_difference(g, h)


@given(games(), games())
def test_canonical_uniqueness(g, h):
    assert E.equal(g, h) == (E.canonical_form(g) is E.canonical_form(h))


@given(games(), games(), games())
def test_order_axioms(a, b, c):
    assert E.leq(a, a)
    if E.leq(a, b) and E.leq(b, c):
        assert E.leq(a, c)
    assert (E.outcome(a) is Outcome.P) == E.equal(a, ZERO)
    assert (E.outcome(a) is Outcome.L) == E.greater(a, ZERO)


@given(games(), st.lists(games(), min_size=1, max_size=3))
def test_equal_games_behave_alike_in_sums(g, hs):
    c = E.canonical_form(g)
    for h in hs:
        assert E.outcome(E.add(g, h)) is E.outcome(E.add(c, h))


@given(legal_complexes())
def test_formal_birthday_is_dimension_plus_one(c):
    assert E.formal_birthday(E.game_from_complex(c)) == c.dimension + 1


@given(legal_complexes())
def test_evaluate_matches_literal_tree(c):
    assert E.evaluate(c) is E.canonical_form(E.game_from_complex(c))
    assert E.sp_tree_check(E.game_from_complex(c))


@given(legal_complexes(max_vertices=4), legal_complexes(max_vertices=4, prefix="b"))
def test_join_is_sum(a, b):
    assert E.equal(E.evaluate(a.join(b)), E.add(E.evaluate(a), E.evaluate(b)))
