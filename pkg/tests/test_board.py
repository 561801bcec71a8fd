from fractions import Fraction

import pytest

from pizzagames import (
    Board,
    BoardError,
    affine,
    board_stats,
    build_board,
    concat,
    cyc,
    menu,
    parse_shorthand,
    path,
    st,
    tes,
    value_exhaustive,
)


def test_shorthand_parsing():
    sh = parse_shorthand("tes(4,3,1,2)")
    assert sh.kind == "tes"
    assert sh.weights == (4, 3, 1, 2)
    with pytest.raises(BoardError):
        parse_shorthand("blob(1,2)")


def test_build_board_accepts_shorthand_and_json():
    b1 = build_board("cyc(0,1,0,2)")
    b2 = build_board(b1.to_json())
    assert b1 == b2
    assert b1.size == 4
    assert b1.parity == 0


def test_menu_all_available_stack_top_only():
    m = menu(1, 2, 3)
    assert m.available == frozenset(m.ids)
    s = st(1, 2, 3)
    assert len(s.available) == 1


def test_unbroached_cycle_every_vertex_legal():
    c = cyc(0, 1, 0, 2)
    assert c.available == frozenset()
    assert c.legal_moves() == set(c.ids)


def test_moves_open_neighbours():
    c = cyc(5, 1, 2, 3)
    ids = sorted(c.ids)
    after = c.apply_move(ids[0])
    # only the two neighbours of the removed vertex are now legal
    assert after.legal_moves() == {ids[1], ids[3]}


def test_broached_path_interior_illegal():
    p = path(1, 2, 3, 4)
    ids = sorted(p.ids)
    after = p.apply_move(ids[0])
    assert ids[2] not in after.legal_moves()


def test_concat_disjoint_and_value_additive_on_invertibles():
    b = concat(st(1, 2), st(3))
    assert b.size == 3
    assert len(b.components()) == 2


def test_affine_value_law():
    # val(a·g + c) = a·val(g) + c·(±1 by parity contribution of each move)
    b = tes(2, 4, 1, 0, 1)
    scaled = affine(b, 3, 0)
    assert value_exhaustive(scaled) == 3 * value_exhaustive(b)
    shifted = affine(b, 1, 5)  # odd board: alternating sum of c is +5
    assert value_exhaustive(shifted) == value_exhaustive(b) + 5


def test_board_stats():
    s = board_stats(tes(4, 3, 1, 2))
    assert s["size"] == 4
    assert s["parity"] == "even"
    assert s["abs_total"] == 10


def test_json_round_trip_fractions():
    b = menu(Fraction(1, 3), Fraction(-2, 5))
    assert build_board(b.to_json()) == b


def test_unknown_vertex_rejected():
    with pytest.raises(BoardError):
        tes(1, 2).weight(99)
