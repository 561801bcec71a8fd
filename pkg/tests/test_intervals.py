import random

import pytest

from pizzagames import (
    NonIntervalBoard,
    SizeCapExceeded,
    concat,
    cyc,
    make_board,
    menu,
    path,
    st,
    tes,
    value_exhaustive,
    value_interval_dp,
)
from pizzagames.intervals import analyze_components, interval_outcomes


def test_component_shapes_recognized():
    assert analyze_components(st(1, 2, 3))[0].kind == "stack"
    assert analyze_components(tes(1, 2, 3))[0].kind == "tes"
    assert analyze_components(path(1, 2, 3))[0].kind == "path"
    assert analyze_components(cyc(1, 2, 3))[0].kind == "cyc"


def test_non_interval_rejected():
    star = make_board(
        [(1, 0), (2, 1), (3, 1), (4, 1)], [(1, 2), (1, 3), (1, 4)], [1]
    )
    with pytest.raises(NonIntervalBoard):
        value_interval_dp(star)


def test_component_cap():
    b = concat(*(st(1) for _ in range(5)))
    with pytest.raises(SizeCapExceeded):
        value_interval_dp(b, max_components=3)


def test_dp_matches_exhaustive():
    rng = random.Random(31)
    for _ in range(120):
        n = rng.randrange(1, 9)
        ws = [rng.randrange(-3, 5) for _ in range(n)]
        shapes = [st(*ws), tes(*ws), path(*ws)]
        if n >= 3:
            shapes.append(cyc(*ws))
        for b in shapes:
            assert value_interval_dp(b) == value_exhaustive(b), ws
        combo = concat(st(*ws), path(*ws))
        assert value_interval_dp(combo) == value_exhaustive(combo), ws


def test_dp_supports_rules():
    rng = random.Random(32)
    for _ in range(60):
        n = rng.randrange(1, 8)
        ws = [rng.randrange(-3, 4) for _ in range(n)]
        b = tes(*ws)
        for rules in ("p", "a", "s"):
            assert value_interval_dp(b, rules) == value_exhaustive(b, rules), (
                ws,
                rules,
            )


def test_interval_outcomes_agree_with_exhaustive():
    b = cyc(2, 3, 1, 2, 0)
    outs = interval_outcomes(b)
    for v, o in outs.items():
        assert o == b.weight(v) - value_exhaustive(b.apply_move(v))


def test_mixed_menu_component():
    b = concat(menu(3), menu(-2), st(1, 4))
    assert value_interval_dp(b) == value_exhaustive(b)
