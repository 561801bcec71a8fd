import random
from fractions import Fraction

import pytest

from pizzagames import (
    cyc,
    cycle_value_via_rotations,
    cycles_equivalent,
    delete_even_plateaus,
    four_ninths_margin,
    gen_extremal,
    mu_bound,
    plateau_points,
    solve_cycle,
    solve_unbroached_path,
    value_exhaustive,
)
from pizzagames.cyclepath import (
    CycleError,
    delta_statistic,
    gen_gk,
    gen_pi_pizza,
    gen_pm1_min_cycle,
    is_extremal_special_pizza,
    special_slice_tiling,
)


def test_plateau_points_cyclic():
    info = plateau_points((0, 5, 2, 1, 2, 1), cyclic=True)
    # 5 is a plateau; so is each local max among its neighbours
    assert any(info.points)
    # all-equal cycle has exactly one plateau
    flat = plateau_points((2, 2, 2, 2), cyclic=True)
    assert len(flat.plateaus) == 1


def test_solve_cycle_reports_optimal_vertices():
    res = solve_cycle((0, 1, 0, 2))
    assert res["value"] == 3
    outs = {
        v: Fraction(w) - solve_unbroached_path_rest((0, 1, 0, 2), v)
        for v, w in enumerate((0, 1, 0, 2))
    }
    best = {v for v, o in outs.items() if o == 3}
    assert set(res["optimal_vertices"]) <= best
    assert res["optimal_vertices"]


def solve_unbroached_path_rest(seq, v):
    rest = list(seq[v + 1 :]) + list(seq[:v])
    from pizzagames import tes as tes_board

    return value_exhaustive(tes_board(*rest)) if rest else Fraction(0)


def test_single_vertex_cycle_value():
    assert solve_cycle((7,))["value"] == 7


def test_audit_agrees_on_random_cycles():
    rng = random.Random(90)
    for _ in range(80):
        n = rng.randrange(3, 15)
        ws = [rng.randrange(-3, 6) for _ in range(n)]
        solve_cycle(ws, audit=True)  # raises on plateau/full-scan mismatch


def test_rotation_identity():
    rng = random.Random(91)
    for _ in range(60):
        n = rng.randrange(3, 12)
        ws = [rng.randrange(-3, 6) for _ in range(n)]
        assert cycle_value_via_rotations(ws) == solve_cycle(ws)["value"]


def test_delete_even_plateaus_zero_values():
    for ws in (
        (1, 2, 3, 3, 2, 1),
        (1, 3, 3, 2, 2, 1),
        (2, 1, 2, 3, 3, 2, 1, 2),
        (1, 3, 4, 4, 3, 2, 2, 1),
    ):
        assert delete_even_plateaus(ws) == ()
        assert solve_cycle(ws)["value"] == 0


def test_four_ninths_rejects_negative_weights():
    with pytest.raises(CycleError):
        four_ninths_margin((1, -1, 1))


def test_mu_bound_shape():
    assert mu_bound(0) == Fraction(1, 9)
    assert mu_bound(Fraction(1, 3)) == Fraction(1, 3)
    assert mu_bound(Fraction(1, 2)) == Fraction(1, 2)


def test_gk_values_and_sizes():
    for k in range(2, 7):
        b = gen_gk(k)
        assert b.size == 15
        ws = [w for _, w in b.vertices]
        assert solve_cycle(ws)["value"] == -(k - 1)


def test_pm1_cycles_attain_minimum():
    for n in (3, 5, 21, 39):
        ws = [w for _, w in gen_pm1_min_cycle(n).vertices]
        assert set(ws) <= {-1, 1}
        assert solve_cycle(ws)["value"] == -2 * ((n - 3) // 18) - 1


def test_pi_pizza_margin_zero_for_extremal_pieces():
    b = gen_pi_pizza((2, 3, 4), 2)
    ws = [w for _, w in b.vertices]
    assert four_ninths_margin(ws) == 0


def test_gen_extremal_dispatch_and_errors():
    assert gen_extremal("gk", 2).size == 15
    with pytest.raises(CycleError):
        gen_extremal("nope")
    with pytest.raises(CycleError):
        gen_pm1_min_cycle(4)


def test_special_slice_tiling_and_delta():
    pizza15 = (0, 1, 0, 1, 0, 0, 1, 0, 2, 0, 0, 2, 0, 2, 0)
    tiles = special_slice_tiling(pizza15)
    assert sorted(-sum(t[1::2]) for t in tiles) == [-4, -3, -2]
    for t in tiles:
        assert delta_statistic(t) >= 0


def test_extremal_recognition_rejects_near_misses():
    pizza15 = [0, 1, 0, 1, 0, 0, 1, 0, 2, 0, 0, 2, 0, 2, 0]
    assert is_extremal_special_pizza(pizza15)
    bumped = list(pizza15)
    bumped[1] += 1
    assert not is_extremal_special_pizza(bumped)


def test_cycles_equivalent():
    a = (0, 1, 0, 1, 0, 0, 1, 0, 2, 0, 0, 2, 0, 2, 0)
    b = (0, 1, 0, 1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0)
    # same value, not equivalent
    assert not cycles_equivalent(a, b)
    assert cycles_equivalent(a, a)
    # rotation preserves the class
    assert cycles_equivalent(a, a[3:] + a[:3])


def test_path_solver_against_oracle():
    rng = random.Random(92)
    from pizzagames import path as path_board

    for _ in range(80):
        n = rng.randrange(1, 11)
        ws = [rng.randrange(-3, 6) for _ in range(n)]
        res = solve_unbroached_path(ws)
        b = path_board(*ws)
        assert res["value"] == value_exhaustive(b)
        ids = sorted(b.ids)
        for idx in res["optimal_vertices"]:
            v = ids[idx]
            assert b.weight(v) - value_exhaustive(b.apply_move(v)) == res["value"]
