"""Acceptance suite: the frozen regression table, oracle-equivalence
property suites, performance gates, and extremal-recognition checks.

Shared by the ``verify`` CLI subcommand and the acceptance tests; each
check is a named callable raising AssertionError on failure.
"""

from __future__ import annotations

import itertools
import random
import time
from fractions import Fraction

from .backend import int_kernel
from .board import Board, concat, cyc, make_board, menu, path, st, tes
from .classalg import c_of_g, canonical_class, class_distance, is_invertible
from .cyclepath import (
    cycle_value_via_rotations,
    four_ninths_margin,
    gen_gk,
    gen_pi_pizza,
    gen_pm1_min_cycle,
    is_extremal_special_pizza,
    mu_bound,
    solve_cycle,
    solve_unbroached_path,
)
from .intervals import value_interval_dp
from .oracle import s_value_menu, value_auto, value_exhaustive
from .reduction import ReducedForm, reduce_concat, value_of_reduced
from .slices import asc_holds, partition_stack, partition_tes
from .zeroone import simplistic_class

PIZZA_15 = (0, 1, 0, 1, 0, 0, 1, 0, 2, 0, 0, 2, 0, 2, 0)
PIZZA_21 = (0, 1, 0, 1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0)


def _eq(actual, expected, label):
    assert actual == expected, f"{label}: got {actual}, expected {expected}"


def _val(b: Board) -> Fraction:
    return value_auto(b)


# -- regression table ----------------------------------------------------


def check_tes_intro():
    for ws in ((4, 3, 1, 2), (4, 3, 6, 5), (4, 3, 1, 4, 7, 5)):
        _eq(value_of_reduced(reduce_concat([("tes", ws)])), 2, f"tes{ws}")
    return "three introductory tes games all valued 2"


def check_cyc_intro():
    _eq(solve_cycle((0, 5, 2, 1, 2, 1))["value"], 5, "cyc(0,5,2,1,2,1)")
    _eq(solve_cycle((0, 3, 3, 1, 2, 1))["value"], 2, "cyc(0,3,3,1,2,1)")
    return "introductory 6-cycles valued 5 and 2"


def check_greedy_wrong():
    _eq(value_of_reduced(reduce_concat([("tes", (2, 4, 1, 0, 1))])), 0, "tes(2,4,1,0,1)")
    _eq(solve_cycle((2, 3, 1, 2, 0))["value"], 2, "cyc(2,3,1,2,0)")
    return "greedy-refuting 5-vertex games valued 0 and 2"


def check_pizza_15():
    _eq(solve_cycle(PIZZA_15)["value"], -1, "15-vertex pizza")
    return "15-vertex pizza valued -1"


def check_pizza_21_zero_one():
    _eq(solve_cycle(PIZZA_21)["value"], -1, "21-vertex 0-1 pizza")
    return "21-vertex 0-1 pizza valued -1"


def check_heavy_piece_parity():
    for k, expect in ((4, 1), (5, 0)):
        ws = [3] + [1, 0] * k
        _eq(solve_cycle(ws)["value"], expect, f"(2k+1)-cycle N=3 k={k}")
    return "heavy-piece odd cycles follow the N+k parity rule"


def check_septet():
    g = cyc(0, 1, 0, 1, 1, 0)
    h1 = menu(0, 1)
    h2 = menu(-1, 0)
    for b, e, lbl in (
        (g, 1, "g"),
        (h1, 1, "h1"),
        (h2, 1, "h2"),
        (concat(g, h1), 2, "g+h1"),
        (concat(g, h2), 2, "g+h2"),
        (concat(h1, h2), 2, "h1+h2"),
        (concat(g, h1, h2), 1, "g+h1+h2"),
    ):
        _eq(value_exhaustive(b), e, lbl)
    return "septet of values 1,1,1,2,2,2,1 reproduced"


def check_eight_cycle_pair():
    g = cyc(0, 1, 0, 1, 1, 0, 1, 0)
    _eq(value_exhaustive(g), 2, "8-cycle")
    _eq(value_exhaustive(concat(menu(-1, 1), g)), 2, "menu(-1,1)+8-cycle")
    return "8-cycle and its menu sum both valued 2"


def check_path_block():
    _eq(solve_unbroached_path((1, 2, 3))["value"], 2, "path(1,2,3)")
    _eq(solve_unbroached_path((3, 1, 2))["value"], 4, "path(3,1,2)")
    _eq(solve_unbroached_path((0, 1, 0, 2))["value"], 3, "path(0,1,0,2)")
    _eq(solve_cycle((0, 1, 0, 2))["value"], 3, "cyc(0,1,0,2)")
    _eq(solve_unbroached_path((1, 0, 1, 1, 0))["value"], 1, "path(1,0,1,1,0)")
    _eq(solve_unbroached_path((1, 2, 3, 4, 5))["value"], 3, "path(1,2,3,4,5)")
    _eq(value_exhaustive(concat(path(0, 1, 0, 2), menu(-1, -2))), 4, "path(0,1,0,2)+menu")
    _eq(value_exhaustive(concat(path(0, 2, 0, 1), menu(-1, -2))), 2, "path(0,2,0,1)+menu")
    return "unbroached-path block incl. order-sensitive menu sums"


def check_zero_cycles():
    for ws in (
        (1, 2, 3, 3, 2, 1),
        (1, 3, 3, 2, 2, 1),
        (2, 1, 2, 3, 3, 2, 1, 2),
        (1, 3, 4, 4, 3, 2, 2, 1),
    ):
        _eq(solve_cycle(ws)["value"], 0, f"cyc{ws}")
    return "four even-plateau cycles all valued 0"


def check_gk_family():
    for k in range(2, 7):
        _eq(solve_cycle([w for _, w in gen_gk(k).vertices])["value"], -(k - 1), f"g_{k}")
    return "g_k valued -(k-1) for k=2..6"


def check_invertibility():
    assert is_invertible(path(1, 2, 3)), "path(1,2,3) should be invertible"
    g = path(0, 1, 0, 1)
    assert not is_invertible(g), "path(0,1,0,1) should not be invertible"
    _eq(value_exhaustive(concat(g, g, menu(-10))), -8, "val(g+g+<-10>)")
    rng = random.Random(405)
    for _ in range(20):
        n = rng.randrange(3, 9)
        ws = [rng.randrange(0, 4) for _ in range(n)]
        assert is_invertible(cyc(*ws)), f"cycle {ws} should be invertible"
    return "invertibility verdicts incl. 20 random unbroached cycles"


def check_simplistic_classes():
    _eq(simplistic_class(tes(0, 1, 0)).menu, (Fraction(-1),), "tes(0,1,0) class")
    reps = [(), (-1,), (0,), (0, -1)]
    classes = [canonical_class(ws) for ws in reps]
    for i, j in itertools.combinations(range(4), 2):
        (c1, x1), (c2, x2) = classes[i], classes[j]
        d = class_distance(c1, x1, c2, x2)
        assert d == "infinite" or d > 0, f"classes {i},{j} not separated: {d}"
    return "four simplistic classes pairwise separated"


# -- random generators ---------------------------------------------------


def random_board(rng: random.Random, max_n: int, wlo=-3, whi=5) -> Board:
    n = rng.randrange(1, max_n + 1)
    vertices = [(i + 1, rng.randrange(wlo, whi)) for i in range(n)]
    edges = set()
    for i in range(2, n + 1):
        edges.add((rng.randrange(1, i), i))
    for _ in range(rng.randrange(0, n)):
        a, b = rng.sample(range(1, n + 1), 2) if n > 1 else (1, 1)
        if a != b:
            edges.add((min(a, b), max(a, b)))
    k = rng.randrange(1, n + 1)
    available = rng.sample(range(1, n + 1), k)
    return make_board(vertices, sorted(edges), sorted(available))


def random_concat(rng: random.Random, max_total: int):
    """Random disjoint sum of stacks and two-ended stacks as (kind, ws) parts."""
    parts = []
    total = 0
    while total < max_total and (not parts or rng.random() < 0.6):
        n = rng.randrange(1, min(6, max_total - total) + 1)
        ws = [rng.randrange(-4, 5) for _ in range(n)]
        parts.append((rng.choice(("st", "tes")), tuple(ws)))
        total += n
    return parts


def _board_of_parts(parts) -> Board:
    boards = [st(*ws) if kind == "st" else tes(*ws) for kind, ws in parts]
    return concat(*boards) if len(boards) > 1 else boards[0]


# -- property suites -----------------------------------------------------


def check_reduction_vs_exhaustive(count=1000):
    rng = random.Random(211)
    for i in range(count):
        parts = random_concat(rng, 12)
        got = value_of_reduced(reduce_concat(parts))
        want = value_exhaustive(_board_of_parts(parts))
        assert got == want, f"case {i}: {parts} -> {got} != {want}"
    return f"{count} random stack/tes concatenations match the oracle"


def check_cycle_path_vs_dp(count=500):
    rng = random.Random(977)
    for i in range(count):
        n = rng.randrange(1, 17)
        ws = [rng.randrange(-3, 6) for _ in range(n)]
        pv = solve_unbroached_path(ws)["value"]
        _eq(value_interval_dp(path(*ws)), pv, f"path case {i}: {ws}")
        if n >= 3:
            cv = solve_cycle(ws, audit=(n <= 17))["value"]
            _eq(value_interval_dp(cyc(*ws)), cv, f"cycle case {i}: {ws}")
            _eq(cycle_value_via_rotations(ws), cv, f"rotation case {i}: {ws}")
    return f"{count} random paths/cycles match interval DP (plateau audit on)"


def _segment_weight(seg):
    return sum(w if i % 2 == 0 else -w for i, w in enumerate(seg))


def _is_slice(seg):
    return len(seg) % 2 == 1 and asc_holds(seg) and asc_holds(seg[::-1])


def _is_ev(seg):
    return len(seg) % 2 == 0 and asc_holds(seg) and -_segment_weight(seg) >= 0


def _slice_partitions(a):
    """All partitions of a into odd-length slices, as weight profiles."""
    n = len(a)
    out = []

    def rec(i, ws):
        if i == n:
            out.append(tuple(ws))
            return
        for j in range(i + 1, n + 1, 2):
            seg = a[i:j]
            if _is_slice(seg):
                rec(j, ws + [_segment_weight(seg)])

    rec(0, [])
    return out


def _u_shaped(ws):
    # no interior weak relative maxima
    return all(
        ws[j] < ws[j + 1] or ws[j] < ws[j - 1] for j in range(1, len(ws) - 1)
    )


def _enumerate_tes_profiles(a):
    return {ws for ws in _slice_partitions(a) if _u_shaped(ws)}


def _enumerate_stack_profiles(a):
    """All (strictly decreasing slice weights; ev weight) profiles."""
    n = len(a)
    found = set()
    for split in range(n, -1, -2):
        rem = a[split:]
        if rem and not _is_ev(rem):
            continue
        x = -_segment_weight(rem) if rem else 0
        for ws in _slice_partitions(a[:split]):
            if all(p > q for p, q in zip(ws, ws[1:])):
                found.add((ws, x))
    return found


def check_partition_uniqueness(count=2000):
    rng = random.Random(1259)
    for i in range(count):
        n = rng.randrange(1, 12)
        a = tuple(rng.randrange(-2, 3) for _ in range(n))
        tes_profiles = _enumerate_tes_profiles(a)
        assert len(tes_profiles) == 1, f"case {i}: {a} has {len(tes_profiles)} tes profiles"
        _eq(tuple(partition_tes(a).weights), tes_profiles.pop(), f"tes case {i}: {a}")
        stack_profiles = _enumerate_stack_profiles(a)
        assert (
            len(stack_profiles) == 1
        ), f"case {i}: {a} has {len(stack_profiles)} stack profiles"
        dec = partition_stack(a)
        _eq((tuple(dec.weights), dec.ev_x), stack_profiles.pop(), f"stack case {i}: {a}")
    return f"{count} sampled sequences: partition profiles unique and correct"


def check_theta_isometry(count=500):
    rng = random.Random(34)
    done = 0
    while done < count:
        ws1 = [rng.randrange(-3, 4) for _ in range(rng.randrange(0, 6))]
        ws2 = [rng.randrange(-3, 4) for _ in range(rng.randrange(0, 6))]
        if len(ws1) % 2 != len(ws2) % 2:
            continue
        (c1, x1), (c2, x2) = canonical_class(ws1), canonical_class(ws2)
        d = class_distance(c1, x1, c2, x2)
        want = value_exhaustive(menu(*ws1, *ws2)) if ws1 or ws2 else Fraction(0)
        assert d == want, f"{ws1} vs {ws2}: {d} != {want}"
        done += 1
    return f"{count} same-parity menu-class pairs: distance equals oracle sum value"


def check_s_rules(count_menus=200, count_boards=300):
    rng = random.Random(55)
    for i in range(count_menus):
        ws = [rng.randrange(-5, 6) for _ in range(rng.randrange(0, 9))]
        _eq(s_value_menu(ws), value_exhaustive(menu(*ws), rules="s"), f"menu {ws}")
    for i in range(count_boards):
        b = random_board(rng, 10)
        v = value_exhaustive(b)
        va = value_exhaustive(b, rules="a")
        vp = value_exhaustive(b, rules="p")
        if b.parity == 0:
            assert v <= va, f"(5.1) even: {v} > {va}"
            assert vp <= va, f"even: val_p {vp} > val_a {va}"
        else:
            assert c_of_g(b) <= va <= v, f"(5.2) odd: c,{va},{v}"
            assert va <= vp, f"odd: val_a {va} > val_p {vp}"
        if b.size <= 5 and is_invertible(b, exhaustive_cap=2 * b.size + 1):
            _eq(va, v, f"invertible board {i}")
    return "s-menu formula and passing-rule inequalities hold"


def check_four_ninths(count_pizzas=1000, count_cycles=500):
    rng = random.Random(49)
    for i in range(count_pizzas):
        n = rng.randrange(3, 26)
        ws = [rng.randrange(0, 6) for _ in range(n)]
        m = four_ninths_margin(ws)
        assert m >= 0, f"pizza {ws}: margin {m}"
    for i in range(count_cycles):
        n = rng.randrange(3, 16) | 1
        lo = -rng.randrange(1, 5)
        ws = [rng.randrange(lo, 6) for _ in range(n)]
        total = sum(abs(w) for w in ws)
        if total == 0:
            continue
        mu = Fraction(max(0, -min(ws)), total)
        v = solve_cycle(ws)["value"]
        bound = -mu_bound(mu) * total
        assert v >= bound, f"cycle {ws}: {v} < {bound}"
    return "4/9 margin nonnegative; min-weight value bound holds"


# -- performance ---------------------------------------------------------


def _time_partition(n: int, reps: int, rng: random.Random) -> float:
    a = [rng.randrange(-3, 4) for _ in range(n)]
    best = float("inf")
    for _ in range(reps):
        t0 = time.perf_counter()
        int_kernel(a).tes_partition(a)
        best = min(best, time.perf_counter() - t0)
    return best


def check_partition_speed():
    t = _time_partition(100_000, 5, random.Random(7))
    assert t < 0.050, f"partition of 1e5 took {t * 1000:.1f} ms"
    return f"partition of 1e5 weights in {t * 1000:.1f} ms"


def check_partition_linearity():
    rng = random.Random(8)
    t1 = _time_partition(100_000, 5, rng)
    t2 = _time_partition(200_000, 5, rng)
    ratio = t2 / t1
    assert ratio <= 3, f"doubling ratio {ratio:.2f} > 3"
    return f"doubling ratio {ratio:.2f} (linear-time partition)"


def check_cycle_speed():
    rng = random.Random(9)
    ws = [rng.randrange(0, 9) for _ in range(2000)]
    t0 = time.perf_counter()
    solve_cycle(ws)
    t = time.perf_counter() - t0
    assert t < 2.0, f"solve_cycle n=2000 took {t:.2f} s"
    return f"solve_cycle n=2000 in {t:.2f} s"


# -- extremal recognition ------------------------------------------------


def check_extremal_recognition():
    assert is_extremal_special_pizza(PIZZA_15), "15-vertex pizza not recognized"
    assert is_extremal_special_pizza(PIZZA_21), "21-vertex pizza not recognized"
    fam_a = [w for _, w in gen_pi_pizza((2, 3, 4), 2).vertices]
    assert is_extremal_special_pizza(fam_a), "three-slice family instance rejected"
    for t in (Fraction(1, 2), Fraction(1)):
        fam_b = [
            w
            for _, w in gen_pi_pizza(
                (3, 2 * t, 3 + t, 9 - t, 12 - 2 * t), 2
            ).vertices
        ]
        assert is_extremal_special_pizza(fam_b), f"five-slice t={t} rejected"
        assert four_ninths_margin(fam_b) == 0, f"five-slice t={t} margin nonzero"
    perturbed = list(PIZZA_15)
    perturbed[8] += 1
    assert not is_extremal_special_pizza(perturbed), "perturbed pizza accepted"
    assert four_ninths_margin(perturbed) > 0, "perturbed pizza margin not positive"
    return "extremal families accepted, perturbation rejected with positive margin"


def check_zero_one_minimum():
    for n in range(3, 41, 2):
        b = gen_pm1_min_cycle(n)
        ws = [w for _, w in b.vertices]
        _eq(solve_cycle(ws)["value"], -2 * ((n - 3) // 18) - 1, f"n={n}")
    return "generated +-1 cycles attain the minimum-value formula"


# -- registry ------------------------------------------------------------

CHECKS = [
    ("regression", "tes-intro-values", check_tes_intro),
    ("regression", "cycle-intro-values", check_cyc_intro),
    ("regression", "greedy-counterexamples", check_greedy_wrong),
    ("regression", "pizza-15-value", check_pizza_15),
    ("regression", "pizza-21-zero-one-value", check_pizza_21_zero_one),
    ("regression", "heavy-piece-parity", check_heavy_piece_parity),
    ("regression", "six-cycle-septet", check_septet),
    ("regression", "eight-cycle-pair", check_eight_cycle_pair),
    ("regression", "path-value-block", check_path_block),
    ("regression", "zero-valued-cycles", check_zero_cycles),
    ("regression", "gk-family-values", check_gk_family),
    ("regression", "invertibility-verdicts", check_invertibility),
    ("regression", "simplistic-classes", check_simplistic_classes),
    ("properties", "reduction-vs-exhaustive", check_reduction_vs_exhaustive),
    ("properties", "cycle-path-vs-dp", check_cycle_path_vs_dp),
    ("properties", "partition-uniqueness", check_partition_uniqueness),
    ("properties", "theta-isometry", check_theta_isometry),
    ("properties", "passing-rules", check_s_rules),
    ("properties", "pizza-four-ninths", check_four_ninths),
    ("performance", "partition-speed", check_partition_speed),
    ("performance", "partition-linearity", check_partition_linearity),
    ("performance", "cycle-solver-speed", check_cycle_speed),
    ("extremal", "extremal-pizza-recognition", check_extremal_recognition),
    ("extremal", "zero-one-pizza-minimum", check_zero_one_minimum),
]

REGRESSION_BUDGET_S = 5.0


def run_acceptance(only: str | None = None) -> dict:
    """Run (a subset of) the acceptance checks; returns a JSON-able report."""
    results = []
    regression_time = 0.0
    regression_ran = 0
    for category, name, fn in CHECKS:
        if only and only not in category and only not in name:
            continue
        t0 = time.perf_counter()
        try:
            detail = fn()
            ok = True
        except AssertionError as e:
            detail = str(e)
            ok = False
        dt = time.perf_counter() - t0
        if category == "regression":
            regression_time += dt
            regression_ran += 1
        results.append(
            {
                "category": category,
                "name": name,
                "passed": ok,
                "seconds": round(dt, 4),
                "detail": detail,
            }
        )
    if regression_ran == sum(1 for c, _, _ in CHECKS if c == "regression"):
        ok = regression_time < REGRESSION_BUDGET_S
        results.append(
            {
                "category": "performance",
                "name": "regression-table-runtime",
                "passed": ok,
                "seconds": round(regression_time, 4),
                "detail": f"regression table ran in {regression_time:.2f} s"
                + ("" if ok else f" (budget {REGRESSION_BUDGET_S} s)"),
            }
        )
    return {
        "passed": all(r["passed"] for r in results),
        "counts": {
            "total": len(results),
            "failed": sum(1 for r in results if not r["passed"]),
        },
        "checks": results,
    }
