import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as hst

from pizzagames import (
    ReducedForm,
    concat,
    reduce_concat,
    reduce_stack,
    reduce_tes,
    st,
    tes,
    value_exhaustive,
    value_of_reduced,
)
from pizzagames.acceptance import _board_of_parts, random_concat
from pizzagames.reduction import cancel_pairs, optimal_move_concat

weights = hst.lists(hst.integers(-4, 4), min_size=1, max_size=9)


def test_cancel_pairs():
    assert cancel_pairs((3, 1, 1, 2)) == (3, 2)
    assert cancel_pairs((1, 1)) == ()
    assert cancel_pairs((2, 1)) == (2, 1)


def test_reduced_form_addition_cancels():
    f1 = reduce_tes((0, 1, 0))
    both = f1 + f1
    assert value_of_reduced(both) == 0
    assert both.menu == ()


@settings(max_examples=250, deadline=None)
@given(weights)
def test_reduce_tes_matches_oracle(ws):
    assert value_of_reduced(reduce_tes(ws)) == value_exhaustive(tes(*ws))


@settings(max_examples=250, deadline=None)
@given(weights)
def test_reduce_stack_matches_oracle(ws):
    assert value_of_reduced(reduce_stack(ws)) == value_exhaustive(st(*ws))


def test_reduce_concat_matches_oracle_sampled():
    rng = random.Random(77)
    for _ in range(150):
        parts = random_concat(rng, 10)
        assert value_of_reduced(reduce_concat(parts)) == value_exhaustive(
            _board_of_parts(parts)
        )


def test_optimal_move_concat_is_optimal():
    rng = random.Random(78)
    for _ in range(120):
        parts = random_concat(rng, 10)
        board = _board_of_parts(parts)
        mv = optimal_move_concat(parts)
        value = value_exhaustive(board)
        if mv.kind == "any":
            candidates = board.legal_moves()
        else:
            boards = [st(*ws) if k == "st" else tes(*ws) for k, ws in parts]
            offset = sum(b.size for b in boards[: mv.part_index])
            size = boards[mv.part_index].size
            # concat relabels ids 1..n in operand order; a stack only
            # opens at its top
            if parts[mv.part_index][0] == "st" or mv.end == "left":
                concrete = offset + 1
            else:
                concrete = offset + size
            candidates = {concrete}
        for v in candidates:
            w = board.weight(v)
            assert w - value_exhaustive(board.apply_move(v)) == value, (parts, mv, v)


def test_ev_sign_by_menu_parity():
    assert value_of_reduced(ReducedForm((), Fraction(2), 0)) == -2
    assert value_of_reduced(ReducedForm((Fraction(5),), Fraction(2), 1)) == 7
