"""Solvers for unbroached cycles ("pizzas") and unbroached paths.

The quadratic cycle algorithm evaluates wt(v) − val(tes(rest)) per candidate
first move; candidates can be restricted to plateau points without loss.
Also: rotation identities, even-plateau deletion, the 4/9 proportionality
bound and its refinement f(μ), and generators/recognizers for the extremal
families.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import backend
from .board import Board, concat, cyc
from .intervals import value_interval_dp
from .reduction import reduce_stack, value_of_reduced
from .weights import WeightLike, parse_weight, parse_weights, scale_to_integers


class CycleError(ValueError):
    pass


# -- plateau structure ---------------------------------------------------


@dataclass(frozen=True)
class PlateauInfo:
    """Plateau structure of a weight sequence (0-based indices).

    plateaus: maximal equal-weight runs all of whose vertices are plateau
    points, each a tuple of consecutive indices (wrapping when cyclic).
    neighbors: for every non-plateau vertex, the indices (into `plateaus`)
    of its neighboring plateaus.
    """

    cyclic: bool
    points: tuple[int, ...]
    plateaus: tuple[tuple[int, ...], ...]
    neighbors: dict[int, tuple[int, ...]]


def _runs(a: Sequence[Fraction], cyclic: bool) -> list[tuple[int, ...]]:
    """Maximal equal-weight runs, in order; cyclic runs may wrap."""
    n = len(a)
    runs: list[list[int]] = []
    for i in range(n):
        if runs and a[i] == a[runs[-1][-1]]:
            runs[-1].append(i)
        else:
            runs.append([i])
    if cyclic and len(runs) > 1 and a[0] == a[n - 1]:
        runs[0] = runs.pop() + runs[0]
    return [tuple(r) for r in runs]


def plateau_points(seq: Sequence[WeightLike], cyclic: bool) -> PlateauInfo:
    """A vertex is a plateau point when the first differing weight on each
    side (cyclically where applicable) is strictly smaller, or no differing
    weight exists on that side."""
    a = parse_weights(seq)
    n = len(a)
    if n == 0:
        raise CycleError("empty sequence")
    runs = _runs(a, cyclic)
    m = len(runs)
    is_plateau_run = []
    for k, run in enumerate(runs):
        w = a[run[0]]
        if cyclic:
            left_ok = m == 1 or a[runs[(k - 1) % m][0]] < w
            right_ok = m == 1 or a[runs[(k + 1) % m][0]] < w
        else:
            left_ok = k == 0 or a[runs[k - 1][0]] < w
            right_ok = k == m - 1 or a[runs[k + 1][0]] < w
        is_plateau_run.append(left_ok and right_ok)
    plateaus = tuple(run for run, ok in zip(runs, is_plateau_run) if ok)
    points = tuple(sorted(i for p in plateaus for i in p))
    point_set = set(points)
    # neighboring plateaus of every non-plateau vertex
    neighbors: dict[int, tuple[int, ...]] = {}
    plateau_of_run = {}
    idx = 0
    for k, ok in enumerate(is_plateau_run):
        if ok:
            plateau_of_run[k] = idx
            idx += 1
    plateau_runs = sorted(plateau_of_run)
    for k, run in enumerate(runs):
        if is_plateau_run[k]:
            continue
        nbrs: set[int] = set()
        if plateau_runs:
            if cyclic or len(plateau_runs) == 1:
                # nearest plateau run on each side (cyclically for cycles;
                # a single plateau flanks everything in a path too)
                before = max((r for r in plateau_runs if r < k), default=max(plateau_runs))
                after = min((r for r in plateau_runs if r > k), default=min(plateau_runs))
                nbrs = {plateau_of_run[before], plateau_of_run[after]}
            else:
                before = max((r for r in plateau_runs if r < k), default=None)
                after = min((r for r in plateau_runs if r > k), default=None)
                nbrs = {
                    plateau_of_run[r] for r in (before, after) if r is not None
                }
        for i in run:
            if i not in point_set:
                neighbors[i] = tuple(sorted(nbrs))
    return PlateauInfo(cyclic, points, plateaus, neighbors)


# -- quadratic solvers ---------------------------------------------------


def _outcomes(a: tuple[Fraction, ...], candidates: Sequence[int]) -> list[Fraction]:
    """outcome(v) = a[v] − val(tes of the rest of the cycle, clockwise)."""
    ints, denom = scale_to_integers(a)
    kern = backend.int_kernel(ints)
    raw = kern.cycle_outcomes(ints, list(candidates))
    return [Fraction(r, denom) for r in raw]


def solve_cycle(seq: Sequence[WeightLike], audit: bool = False) -> dict:
    """Value and optimal first moves of an unbroached cycle.

    Scans one representative per plateau (lossless: every other move is
    metrically dominated by a neighboring plateau move, and moves within a
    plateau are equivalent).  With audit=True every vertex is scanned and
    the two scans must agree.
    """
    a = parse_weights(seq)
    n = len(a)
    if n == 0:
        raise CycleError("empty sequence")
    if n == 1:
        return {"value": a[0], "optimal_vertices": [0], "per_plateau_outcomes": {0: a[0]}}
    info = plateau_points(a, cyclic=True)
    reps = [p[0] for p in info.plateaus]
    outs = _outcomes(a, reps)
    per_plateau = dict(zip(reps, outs))
    value = max(outs)
    best_plateaus = [p for p, r in zip(info.plateaus, reps) if per_plateau[r] == value]
    optimal = sorted(i for p in best_plateaus for i in p)
    if audit:
        all_outs = _outcomes(a, range(n))
        if max(all_outs) != value:
            raise AssertionError(
                f"plateau restriction lost value: {value} vs {max(all_outs)}"
            )
    return {
        "value": value,
        "optimal_vertices": optimal,
        "per_plateau_outcomes": per_plateau,
    }


def solve_unbroached_path(seq: Sequence[WeightLike]) -> dict:
    """Value and optimal first moves of an unbroached path.

    Removing vertex i leaves two stacks, each consumed outward from the
    break; their reduced forms add."""
    a = parse_weights(seq)
    n = len(a)
    if n == 0:
        raise CycleError("empty sequence")
    outs = []
    for i in range(n):
        left = reduce_stack(a[:i][::-1])
        right = reduce_stack(a[i + 1 :])
        outs.append(a[i] - value_of_reduced(left + right))
    value = max(outs)
    return {
        "value": value,
        "optimal_vertices": [i for i, o in enumerate(outs) if o == value],
    }


def cycle_value_via_rotations(seq: Sequence[WeightLike]) -> Fraction:
    """val(cyc) = min over rotations of val(path) for odd n, max for even n."""
    a = parse_weights(seq)
    if not a:
        raise CycleError("empty sequence")
    vals = [
        solve_unbroached_path(a[k:] + a[:k])["value"] for k in range(len(a))
    ]
    return min(vals) if len(a) % 2 == 1 else max(vals)


def delete_even_plateaus(seq: Sequence[WeightLike]) -> tuple[Fraction, ...]:
    """Repeatedly delete an even-length plateau from a cyclic sequence;
    each deletion preserves the value.  Returns the fixpoint (an empty
    result proves value 0 for even cycles)."""
    a = list(parse_weights(seq))
    while a:
        info = plateau_points(a, cyclic=True)
        target = next((p for p in info.plateaus if len(p) % 2 == 0), None)
        if target is None:
            break
        drop = set(target)
        a = [w for i, w in enumerate(a) if i not in drop]
    return tuple(a)


# -- proportionality bounds ----------------------------------------------


def four_ninths_margin(seq: Sequence[WeightLike]) -> Fraction:
    """val(g) + |g|/9 for a pizza (nonnegative-weight cycle); ≥ 0 always,
    with equality exactly on the extremal examples."""
    a = parse_weights(seq)
    if any(w < 0 for w in a):
        raise CycleError("pizza weights must be nonnegative")
    total = sum(a, Fraction(0))
    return solve_cycle(a)["value"] + total / 9


def mu_bound(mu: WeightLike) -> Fraction:
    """f(μ) with val(g) ≥ −f(μ)|g| for odd cycles whose minimum weight is
    ≥ −μ|g|: f(μ) = 1/9 + (2/3)μ for μ ≤ 1/3, f(μ) = μ for μ ≥ 1/3."""
    m = parse_weight(mu)
    if not 0 <= m <= 1:
        raise CycleError("μ must lie in [0,1]")
    if m <= Fraction(1, 3):
        return Fraction(1, 9) + Fraction(2, 3) * m
    return m


# -- extremal generators -------------------------------------------------


def gen_gk(k: int) -> Board:
    """The family with value −(k−1), extremal for μ=(k−2)/(3k+3); its slice
    weights are −k, −(k+1), −(k+2)."""
    if k < 2:
        raise CycleError("k must be at least 2")
    if k <= 3:
        ws = [0, 1, -(k - 2), 1, 0, 0, k - 1, 0, 2, 0, 0, 2, -(k - 2), 2, 0]
    else:
        ws = [0, 1, -(k - 2), 1, 0, 0, 2, -(k - 3), 2, 0, 0, 2, -(k - 2), 2, 0]
    return cyc(*ws)


def _special_slice_ints(total: int) -> list[int]:
    """(0,1,0,1,…,1,0) with `total` ones: a special slice of weight −total."""
    out = [0]
    for _ in range(total):
        out += [1, 0]
    return out


def gen_pm1_min_cycle(n: int) -> Board:
    """An odd ±1 cycle of size n attaining the minimum value
    −2⌊(n−3)/18⌋−1."""
    if n < 3 or n % 2 == 0:
        raise CycleError("n must be odd and at least 3")
    k = (n - 3) // 18
    if k == 0:
        zero_one = [0] * n
    else:
        zero_one = (
            _special_slice_ints(2 * k)
            + _special_slice_ints(3 * k)
            + _special_slice_ints(4 * k)
        )
        zero_one += [0] * (n - len(zero_one))  # even padding of 0s
    return cyc(*[2 * w - 1 for w in zero_one])


def gen_pi_pizza(xs: Sequence[WeightLike], n: int) -> Board:
    """Discretized continuous-pizza game: each piece of size xᵢ becomes the
    segment (0, xᵢ/n, 0, …, xᵢ/n, 0) with n equal weights."""
    pieces = parse_weights(xs)
    if not pieces or any(x <= 0 for x in pieces):
        raise CycleError("piece sizes must be positive")
    if n < 1:
        raise CycleError("n must be positive")
    ws: list[Fraction] = []
    for x in pieces:
        ws.append(Fraction(0))
        for _ in range(n):
            ws += [x / n, Fraction(0)]
    return cyc(*ws)


def gen_extremal(kind: str, *args) -> Board:
    """Dispatcher: ("gk", k) | ("zeroone", n) | ("pi", xs, n)."""
    if kind == "gk":
        return gen_gk(*args)
    if kind == "zeroone":
        return gen_pm1_min_cycle(*args)
    if kind == "pi":
        return gen_pi_pizza(*args)
    raise CycleError(f"unknown extremal family {kind!r}")


# -- extremal recognition ------------------------------------------------


def _is_special_slice(a: Sequence[Fraction]) -> bool:
    """(0, p₁, 0, p₂, 0, …, p_k, 0) with all pᵢ > 0."""
    n = len(a)
    if n < 3 or n % 2 == 0:
        return False
    for i, w in enumerate(a):
        if i % 2 == 0:
            if w != 0:
                return False
        elif w <= 0:
            return False
    return True


def delta_statistic(special_slice: Sequence[WeightLike]) -> Fraction:
    """δ(ā) for a special slice ā = (0, a₁, …, a_k, 0): with a = Σaᵢ and i₀
    the smallest index where the prefix sum reaches a/2,
    δ = a_{i₀} − |Σ_{i<i₀} aᵢ − Σ_{i>i₀} aᵢ|.  Always ≥ 0; zero iff the
    prefix sum hits a/2 exactly."""
    a = parse_weights(special_slice)
    if not _is_special_slice(a):
        raise CycleError("not a special slice")
    inner = a[1:-1]
    total = sum(inner, Fraction(0))
    acc = Fraction(0)
    i0 = None
    for i, w in enumerate(inner):
        acc += w
        if acc >= total / 2:
            i0 = i
            break
    before = sum(inner[:i0], Fraction(0))
    after = total - before - inner[i0]
    return inner[i0] - abs(before - after)


def special_slice_tiling(seq: Sequence[WeightLike]) -> list[tuple[Fraction, ...]]:
    """Partition a cyclic weight sequence into special slices, in cyclic
    order.  Slice boundaries are exactly the double-0 runs; interior 0s are
    single.  Raises CycleError when no such tiling exists."""
    a = parse_weights(seq)
    n = len(a)
    if n == 0 or any(w < 0 for w in a):
        raise CycleError("not tiled by special slices")
    # rotate so index 0 starts right after a 00 boundary
    start = None
    for i in range(n):
        if a[i] == 0 and a[(i + 1) % n] == 0:
            start = (i + 1) % n
            break
    if start is None:
        raise CycleError("not tiled by special slices")
    r = a[start:] + a[:start]
    slices: list[tuple[Fraction, ...]] = []
    cur: list[Fraction] = []
    i = 0
    while i < n:
        cur.append(r[i])
        if r[i] == 0 and i + 1 < n and r[i + 1] == 0:
            slices.append(tuple(cur))
            cur = [r[i + 1]]
            i += 1
        i += 1
    slices.append(tuple(cur))
    if any(not _is_special_slice(s) for s in slices):
        raise CycleError("not tiled by special slices")
    if sum(len(s) for s in slices) != n:
        raise CycleError("not tiled by special slices")
    return slices


def _scaled(s: Sequence[Fraction], factor: Fraction) -> tuple[Fraction, ...]:
    return tuple(w * factor for w in s)


def _matches_family_a(slices, weights) -> bool:
    # canonical scale: slice weights 2, 3, 4 (|g| = 9)
    total = sum(weights, Fraction(0))
    lam = total / 9
    if lam <= 0:
        return False
    ws = [w / lam for w in weights]
    if sorted(ws) != [Fraction(2), Fraction(3), Fraction(4)]:
        return False
    by_w = {w: s for w, s in zip(ws, slices)}
    inv = 1 / lam
    return (
        delta_statistic(_scaled(by_w[Fraction(2)], inv)) == 0
        and delta_statistic(_scaled(by_w[Fraction(4)], inv)) == 0
        and delta_statistic(_scaled(by_w[Fraction(3)], inv)) <= 1
    )


def _matches_family_b(slices, weights) -> bool:
    # canonical scale: weights (3, 2t, 3+t, 9−t, 12−2t) or its B2 variant
    # (3, 2t, 3+t, 12−2t, 9−t), 0 < t ≤ 1; |g| = 27
    total = sum(weights, Fraction(0))
    lam = total / 27
    if lam <= 0:
        return False
    ws = [w / lam for w in weights]
    inv = 1 / lam
    sc = [_scaled(s, inv) for s in slices]
    m = 5
    for rot in range(m):
        for rw, rs in (
            ([ws[(rot + i) % m] for i in range(m)], [sc[(rot + i) % m] for i in range(m)]),
            ([ws[(rot - i) % m] for i in range(m)], [sc[(rot - i) % m] for i in range(m)]),
        ):
            if rw[0] != 3:
                continue
            t = rw[1] / 2
            if not 0 < t <= 1:
                continue
            if rw[2] != 3 + t:
                continue
            if (rw[3], rw[4]) not in ((9 - t, 12 - 2 * t), (12 - 2 * t, 9 - t)):
                continue
            sa, sb, sc_, sd, se = rs[0], rs[1], rs[2], None, None
            if rw[3] == 9 - t:
                sd, se = rs[3], rs[4]
            else:
                sd, se = rs[4], rs[3]
            if (
                delta_statistic(sb) == 0
                and delta_statistic(se) == 0
                and delta_statistic(sa) <= 3 - 2 * t
                and delta_statistic(sc_) <= 3 - 3 * t
                and delta_statistic(sd) <= 3 - t
            ):
                return True
    return False


def is_extremal_special_pizza(seq: Sequence[WeightLike]) -> bool:
    """Does a pizza tiled by special slices attain val(g) = −|g|/9?

    Checked structurally against the complete extremal families (three
    slices of weights ∝ −2,−3,−4 with δ = 0, ≤1, 0; or the two
    five-slice one-parameter families), under rotation and reflection.
    Raises CycleError when the pizza is not tiled by special slices."""
    slices = special_slice_tiling(seq)
    weights = [sum(s[1:-1], Fraction(0)) for s in slices]  # −slice-weight
    if len(slices) == 3:
        return _matches_family_a(slices, weights)
    if len(slices) == 5:
        return _matches_family_b(slices, weights)
    return False


# -- equivalence ---------------------------------------------------------


def cycles_equivalent(c1: Sequence[WeightLike], c2: Sequence[WeightLike]) -> bool:
    """Unbroached cycles are invertible, so equivalence is d(g₁,g₂) =
    val(g₁⊕g₂) = 0; different parities are never equivalent."""
    a1, a2 = parse_weights(c1), parse_weights(c2)
    if len(a1) % 2 != len(a2) % 2:
        return False
    b = concat(cyc(*a1), cyc(*a2))
    return value_interval_dp(b, "normal", max_components=2, max_comp_size=24) == 0
