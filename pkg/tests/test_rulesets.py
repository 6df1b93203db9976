import itertools

import pytest

from spgames import engine as E
from spgames import values as V
from spgames.complex import negate_labels
from spgames.rulesets import (
    BasicPosition,
    Board,
    col_complex,
    domineering_complex,
    domineering_positions,
    maximal_compatible_sets,
    maximal_legal_sets,
    nim_pile_complex,
    parse_board,
    parse_graph_text,
    snort_complex,
)

EXAMPLE_FACETS = {
    frozenset({"x1", "y2", "x3"}),
    frozenset({"y1", "x2", "y3"}),
    frozenset({"x1", "y3"}),
    frozenset({"x3", "y1"}),
}
BELL = [1, 1, 2, 5, 15, 52]


def fs(c):
    return {frozenset(f) for f in c.facets}


def test_snort_path3_follows_the_rule():
    # opposite colours may not touch
    assert fs(snort_complex(Board.path(3))) == {
        frozenset({"x1", "x2", "x3"}),
        frozenset({"y1", "y2", "y3"}),
        frozenset({"x1", "y3"}),
        frozenset({"x3", "y1"}),
    }


def test_col_path3_gives_the_example_facets():
    assert fs(col_complex(Board.path(3))) == EXAMPLE_FACETS


def test_single_vertex_is_star():
    for make in (snort_complex, col_complex):
        c = make(Board.path(1))
        assert fs(c) == {frozenset({"x1"}), frozenset({"y1"})}
        assert E.evaluate(c) is V.make_nimber(1)


def test_empty_board():
    c = snort_complex(Board.graph(0))
    assert c.facets == () and E.evaluate(c) is E.ZERO


def test_col_path2():
    assert fs(col_complex(Board.path(2))) == {frozenset({"x1", "y2"}), frozenset({"y1", "x2"})}


def test_rules_coincide_without_edges():
    b = Board.graph(2)
    assert snort_complex(b) == col_complex(b)


def test_domineering_small_boards():
    assert E.evaluate(domineering_complex(Board.grid(1, 1))) is E.ZERO
    c = domineering_complex(Board.grid(2, 1))
    assert fs(c) == {frozenset({"xV0_0"})} and E.evaluate(c) is V.make_number(1)
    assert E.evaluate(domineering_complex(Board.grid(2, 2))) is V.make_switch(1, -1)


@pytest.mark.parametrize("r,c", [(1, 3), (2, 3), (3, 2), (2, 4), (3, 3)])
def test_domineering_rotation_negates(r, c):
    a = E.evaluate(negate_labels(domineering_complex(Board.grid(r, c))))
    b = E.evaluate(domineering_complex(Board.grid(c, r)))
    assert a is b


def test_domineering_masks():
    b = parse_board("grid:3x2:mask=0,1;1,1")
    assert b.cells() == [(0, 0), (1, 0), (2, 0), (2, 1)]
    tags = [p.tag for p in domineering_positions(b)]
    assert tags == ["xV0_0", "xV1_0", "yH2_0"]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_nim_pile_facets_are_set_partitions(n):
    assert len(nim_pile_complex(n).facets) == BELL[n]


def test_nim_pile_two():
    assert fs(nim_pile_complex(2)) == {frozenset({"K1_1", "K1_2"}), frozenset({"K2_1.2"})}


def test_maximal_sets_extremes():
    pos = [BasicPosition(f"x{i}", frozenset([i])) for i in range(4)]
    assert maximal_compatible_sets(pos, lambda a, b: True) == [frozenset(p.tag for p in pos)]
    assert maximal_compatible_sets(pos, lambda a, b: False) == [frozenset([p.tag]) for p in pos]


def test_whole_set_predicate_agrees_with_pairwise():
    b = Board.cycle(5)
    adj = b.adjacency()
    pos = [BasicPosition(f"{p}{i}", frozenset([i])) for i in range(1, 6) for p in "xy"]

    def legal(face):
        return all(
            not (a.footprint & c.footprint) and not (a.tag[0] != c.tag[0] and next(iter(c.footprint)) in adj[next(iter(a.footprint))])
            for a, c in itertools.combinations(face, 2)
        )

    assert {frozenset(f) for f in maximal_legal_sets(pos, legal)} == fs(snort_complex(b))


def test_facets_are_legal_and_maximal():
    b = Board.cycle(5)
    adj = b.adjacency()
    c = snort_complex(b)
    for f in c.facets:
        cells = {int(v[1:]): v[0] for v in f}
        assert len(cells) == len(f)
        assert all(not (cells[u] != cells[v] and v in adj[u]) for u in cells for v in cells if u != v)
        for i in range(1, 6):
            if i in cells:
                continue
            for p in "xy":
                bigger = {**cells, i: p}
                assert any(bigger[u] != bigger[v] and v in adj[u] for u in bigger for v in bigger if u != v)


def test_board_parsing(tmp_path):
    assert parse_board("path:3") == Board.path(3)
    assert parse_board("cycle:4").edges == ((1, 2), (1, 4), (2, 3), (3, 4))
    assert len(parse_board("complete:4").edges) == 6
    g = tmp_path / "g.txt"
    g.write_text("3\n1 2\n2 3  # middle\n")
    assert parse_board(f"graph:{g}") == Board.path(3)
    assert parse_graph_text("2\n1 2\n") == Board.path(2)
    for bad in ["path:x", "grid:3", "hex:3", "grid:2x2:holes=1,1"]:
        with pytest.raises(ValueError):
            parse_board(bad)
    with pytest.raises(ValueError):
        Board.graph(2, [(1, 1)])
