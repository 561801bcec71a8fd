import random

import pytest

from pizzagames import (
    concat,
    is_simplistic,
    make_board,
    menu,
    outcome_per_move,
    reduce_e_game,
    safe_moves,
    simplistic_class,
    simplistic_strategy_move,
    simplistic_value,
    st,
    tes,
    value_exhaustive,
)
from pizzagames.zeroone import (
    NotAnEGame,
    NotSimplistic,
    fixture_g1,
    fixture_g1_prime,
    fixture_g2,
    fixture_g2_prime,
    one_clusters,
)


def _random_e_game(rng: random.Random, max_n: int):
    n = rng.randrange(1, max_n + 1)
    vertices = [(i + 1, rng.randrange(0, 2)) for i in range(n)]
    edges = set()
    for i in range(2, n + 1):
        edges.add((rng.randrange(1, i), i))
    for _ in range(rng.randrange(0, n)):
        if n > 1:
            a, b = rng.sample(range(1, n + 1), 2)
            edges.add((min(a, b), max(a, b)))
    available = [rng.randrange(1, n + 1)]  # tree edges keep it one component
    return make_board(vertices, sorted(edges), available)


def test_e_game_guards():
    with pytest.raises(NotAnEGame):
        reduce_e_game(menu(2))  # weight outside {0,1}
    unbroached = make_board([(1, 0), (2, 1)], [(1, 2)], [])
    with pytest.raises(NotAnEGame):
        reduce_e_game(unbroached)


def test_cluster_detection():
    b = fixture_g1()
    clusters = one_clusters(b)
    assert [sorted(c) for c in clusters] == [[1], [3], [5]]


def test_reduction_no_adjacent_ones():
    rng = random.Random(201)
    for _ in range(100):
        b = _random_e_game(rng, 8)
        r = reduce_e_game(b)
        ones = {v for v, w in r.vertices if w == 1}
        assert not any(x in ones and y in ones for x, y in r.edges)


def test_reduction_preserves_class():
    rng = random.Random(202)
    for _ in range(200):
        b = _random_e_game(rng, 8)
        r = reduce_e_game(b)
        for _ in range(3):
            h = _random_e_game(rng, 4)
            assert value_exhaustive(concat(b, h)) == value_exhaustive(concat(r, h))


def test_simple_reductions():
    # an even 1-cluster on a stack top deletes, promoting the 0 below
    r = reduce_e_game(st(1, 1, 0))
    assert [w for _, w in r.vertices] == [0]
    assert len(r.available) == 1
    # an odd singleton cluster is already reduced
    t = tes(0, 1, 0)
    assert reduce_e_game(t) == t


def test_safe_moves_examples():
    assert safe_moves(tes(0, 1, 0)) == set()
    g1 = fixture_g1()
    assert safe_moves(g1) == {2, 4}
    with pytest.raises(NotAnEGame):
        safe_moves(st(1, 0))  # available 1-vertex


def test_fixture_g1_statuses():
    g1 = fixture_g1()
    outs = outcome_per_move(g1)
    best = max(outs.values())
    optimal = {v for v, o in outs.items() if o == best}
    assert optimal == {2}
    assert safe_moves(g1) == {2, 4}  # one safe+optimal, one safe-not-optimal
    assert not is_simplistic(g1)


def test_fixture_g2_statuses():
    g2 = fixture_g2()
    outs = outcome_per_move(g2)
    best = max(outs.values())
    optimal = {v for v, o in outs.items() if o == best}
    safe = safe_moves(g2)
    assert len(outs) == 4
    assert len(safe) == 2 and not (safe & optimal)
    assert len(optimal) == 2


def test_prime_fixtures_correspond():
    for fixture, ref in (
        (fixture_g1_prime(), fixture_g1()),
        (fixture_g2_prime(), fixture_g2()),
    ):
        outs = outcome_per_move(fixture)
        ref_outs = outcome_per_move(ref)
        assert len(outs) == len(ref_outs)
        assert sorted(outs.values()) == sorted(ref_outs.values())
        assert not is_simplistic(fixture)


def test_simplistic_value_and_class():
    assert simplistic_value(tes(0, 1, 0)) == -1
    assert simplistic_class(tes(0, 1, 0)).menu == (-1,)
    assert simplistic_value(menu(0)) == 0


def test_simplistic_oracle_agreement():
    rng = random.Random(203)
    checked = 0
    while checked < 120:
        b = _random_e_game(rng, 8)
        if not is_simplistic(b):
            continue
        assert simplistic_value(b) == value_exhaustive(b)
        checked += 1


def test_simplistic_strategy_is_optimal():
    rng = random.Random(204)
    checked = 0
    while checked < 80:
        b = _random_e_game(rng, 7)
        if not is_simplistic(b) or b.size == 0:
            continue
        mv = simplistic_strategy_move(b)
        outs = outcome_per_move(b)
        assert outs[mv] == max(outs.values())
        checked += 1


def test_simplistic_rejects_non_simplistic():
    with pytest.raises(NotSimplistic):
        simplistic_value(fixture_g1())


def test_single_error_costs_at_most_two():
    rng = random.Random(205)
    checked = 0
    while checked < 100:
        b = _random_e_game(rng, 8)
        outs = outcome_per_move(b)
        if not outs:
            continue
        v = value_exhaustive(b)
        assert all(o >= v - 2 for o in outs.values())
        checked += 1
