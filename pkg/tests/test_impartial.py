from hypothesis import given

from spgames import engine as E
from spgames import values as V
from spgames.complex import SimplicialComplex
from spgames.impartial import (
    components,
    doubled_partizan,
    grundy,
    grundy_value_crosscheck,
    mex,
    predict_structural,
)
from spgames.rulesets import nim_pile_complex

from strategies import impartial_complexes


def cx(*facets):
    return SimplicialComplex([f.split() for f in facets])


def test_mex():
    assert mex([]) == 0
    assert mex({0, 1, 3}) == 2
    assert mex({1, 2}) == 0


def test_grundy_examples():
    assert grundy(SimplicialComplex()) == 0
    assert grundy(SimplicialComplex([()])) == 0
    for n in range(1, 6):
        assert grundy(nim_pile_complex(n)) == n
    assert grundy(cx("a b c", "c d e", "a e f")) == 1
    assert grundy(cx("a b c d", "c d e f")) == 0


def test_structural_examples():
    assert predict_structural(cx("a b c d", "a b e f")) == 0
    assert predict_structural(cx("a b c", "c d e")) == 1
    assert predict_structural(cx("a b", "c d e")) == 2
    assert predict_structural(cx("a b", "c d e", "f")) == 2
    assert predict_structural(cx("a b c", "d e f", "g")) == 1
    assert predict_structural(cx("a b", "b c d")) is None
    value, rule = predict_structural(cx("a b", "c d e"), explain=True)
    assert value == 2 and "disjoint union" in rule


def test_even_facet_alone_predicts_nothing():
    # an even facet next to an odd one is not enough to force a value
    assert predict_structural(cx("a b", "b c d")) is None


def test_components():
    parts = components(cx("a b", "b c", "d e", "f"))
    assert sorted(len(p.facets) for p in parts) == [1, 1, 2]


def test_doubled_partizan():
    d = doubled_partizan(cx("a"))
    assert {frozenset(f) for f in d.facets} == {frozenset({"xa"}), frozenset({"ya"})}
    assert E.evaluate(d) is V.make_nimber(1)
    assert E.evaluate(doubled_partizan(cx("a b"))) is E.ZERO
    assert E.evaluate(doubled_partizan(nim_pile_complex(2))) is V.make_nimber(2)


def test_crosscheck():
    for n in range(1, 5):
        assert grundy_value_crosscheck(nim_pile_complex(n))
    assert grundy_value_crosscheck(SimplicialComplex([()]))


@given(impartial_complexes())
def test_structural_prediction_agrees(c):
    p = predict_structural(c)
    if p is not None:
        assert p == grundy(c)


@given(impartial_complexes(max_vertices=5), impartial_complexes(max_vertices=5))
def test_join_is_xor(a, b):
    b2 = b.renamed(lambda v: v + "'")
    assert grundy(a.join(b2)) == grundy(a) ^ grundy(b)


@given(impartial_complexes())
def test_zero_needs_an_even_facet(c):
    if grundy(c) == 0:
        assert any(len(f) % 2 == 0 for f in c.facets)


@given(impartial_complexes())
def test_renaming_invariance(c):
    assert grundy(c.renamed(lambda v: "q" + v[::-1])) == grundy(c)


@given(impartial_complexes(max_vertices=4, max_facets=3, max_size=3))
def test_partizan_crosscheck_random(c):
    assert grundy_value_crosscheck(c)
