"""Equivalence-class algebra for all-available games.

𝒢₀ classes [a₁,…,aₙ] ⊕ ev(x) with pair cancellation, the measure embedding
θ (each class becomes a finite union of intervals, odd classes carrying a
left ray), exact distances, c(g), invertibility, and the order/independence
relations on invertible classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional, Sequence, Union

from .board import Board, concat, menu
from .intervals import NonIntervalBoard, SizeCapExceeded, analyze_components, value_interval_dp
from .oracle import DEFAULT_EXHAUSTIVE_CAP, value_exhaustive
from .reduction import ReducedForm, cancel_pairs, reduce_stack, reduce_tes
from .weights import WeightLike, parse_weight, parse_weights

INFINITE = "infinite"


class ClassError(ValueError):
    pass


@dataclass(frozen=True)
class G0Class:
    """Canonical all-available class: distinct weights (pairs cancelled),
    sorted increasing, plus the parity of the pre-cancellation count."""

    weights: tuple[Fraction, ...]
    parity: int

    def __add__(self, other: "G0Class") -> "G0Class":
        merged = cancel_pairs(self.weights + other.weights)
        return G0Class(tuple(sorted(merged)), (self.parity + other.parity) % 2)


def canonical_class(
    weights: Sequence[WeightLike], ev_x: WeightLike = 0
) -> tuple[G0Class, Fraction]:
    ws = parse_weights(weights)
    x = parse_weight(ev_x)
    if x < 0:
        raise ClassError("ev weight must be nonnegative")
    return G0Class(tuple(sorted(cancel_pairs(ws))), len(ws) % 2), x


@dataclass(frozen=True)
class ThetaSet:
    """Finite union of disjoint open intervals; lo=None means −∞ (a left
    ray, present exactly for odd classes)."""

    intervals: tuple[tuple[Optional[Fraction], Fraction], ...]

    @property
    def has_ray(self) -> bool:
        return bool(self.intervals) and self.intervals[0][0] is None

    def measure(self) -> Union[Fraction, str]:
        if self.has_ray:
            return INFINITE
        return sum((hi - lo for lo, hi in self.intervals), Fraction(0))


def theta(c: G0Class) -> ThetaSet:
    """XOR of the rays (−∞, xᵢ): consecutive endpoints pair up, with a left
    ray first when the class is odd."""
    xs = c.weights  # sorted increasing, distinct
    out: list[tuple[Optional[Fraction], Fraction]] = []
    i = 0
    if len(xs) % 2 == 1:
        out.append((None, xs[0]))
        i = 1
    while i < len(xs):
        if xs[i] != xs[i + 1]:
            out.append((xs[i], xs[i + 1]))
        i += 2
    return ThetaSet(tuple(out))


def measure_v(a: ThetaSet, c: Optional[WeightLike] = None) -> Fraction:
    """v(A) = c + μ(A∖(−∞,c)) − μ((−∞,c)∖A); independent of the cut c."""
    if c is None:
        pts = [hi for _, hi in a.intervals]
        pts += [lo for lo, _ in a.intervals if lo is not None]
        c = min(pts + [Fraction(0)]) - 1
    c = parse_weight(c)
    above = sum(
        (max(Fraction(0), hi - (c if lo is None else max(lo, c))) for lo, hi in a.intervals),
        Fraction(0),
    )
    below = Fraction(0)  # μ((−∞,c) ∖ A)
    if a.has_ray:
        prev_hi = a.intervals[0][1]
        for lo, hi in a.intervals[1:]:
            gap_hi = min(lo, c)
            if gap_hi > prev_hi:
                below += gap_hi - prev_hi
            prev_hi = hi
        if c > prev_hi:
            below += c - prev_hi
    else:
        first = a.intervals[0][0] if a.intervals else None
        if first is not None and c > first:
            raise ClassError("cut must lie below every endpoint for ray-free sets")
    return c + above - below


def class_value(c: G0Class, ev_x: WeightLike = 0) -> Fraction:
    """Even classes: μ(θ) − x.  Odd classes: v(θ) + x via the cut formula."""
    x = parse_weight(ev_x)
    t = theta(c)
    if c.parity == 0:
        m = t.measure()
        assert m != INFINITE
        return m - x
    return measure_v(t) + x


def class_distance(
    c1: G0Class, x1: WeightLike, c2: G0Class, x2: WeightLike
) -> Union[Fraction, str]:
    """μ(θ₁ Δ θ₂) + |x₁ − x₂|; infinite across parities."""
    if c1.parity != c2.parity:
        return INFINITE
    diff = c1 + c2  # symmetric difference of rays = class addition
    t = theta(G0Class(diff.weights, 0))
    m = t.measure()
    assert m != INFINITE
    return m + abs(parse_weight(x1) - parse_weight(x2))


# -- board-level operations (need a valuer) ------------------------------


def _value_any(b: Board, exhaustive_cap: int = DEFAULT_EXHAUSTIVE_CAP) -> Fraction:
    if b.size <= exhaustive_cap:
        return value_exhaustive(b, "normal", exhaustive_cap)
    # beyond the exhaustive cap: interval DP with relaxed component cap
    return value_interval_dp(b, "normal", max_components=None, max_comp_size=48)


def c_of_g(b: Board, exhaustive_cap: int = DEFAULT_EXHAUSTIVE_CAP) -> Fraction:
    """The constant c(g) with val(g⊕⟨y⟩) = c(g)+y (even g) or c(g)−y (odd)
    for all y < −|g|; evaluated at y = −|g|−1."""
    y = -b.abs_total - 1
    val = _value_any(concat(b, menu(y)), exhaustive_cap)
    return val - y if b.parity == 0 else val + y


def is_invertible(b: Board, exhaustive_cap: int = DEFAULT_EXHAUSTIVE_CAP) -> bool:
    """val(g⊕g⊕⟨y⟩) = y for y < −2|g| characterizes invertibility;
    tested at y = −2|g|−1."""
    y = -2 * b.abs_total - 1
    val = _value_any(concat(b, b, menu(y)), exhaustive_cap)
    return val == y


def independent(boards: Sequence[Board]) -> bool:
    """At most one odd board and val(⊕gᵢ) = Σ val(gᵢ); all inputs must be
    invertible (the relation lives on 𝒢)."""
    for b in boards:
        if not is_invertible(b):
            raise ClassError("independence is defined for invertible games only")
    if sum(b.parity for b in boards) > 1:
        return False
    total = boards[0]
    for b in boards[1:]:
        total = concat(total, b)
    return _value_any(total) == sum((_value_any(b) for b in boards), Fraction(0))


def class_leq(b1: Board, b2: Board) -> bool:
    """[g1] ≤ [g2]: (g2 odd or g1 even) and val(g1⊕g2) = val(g2) − val(g1)."""
    for b in (b1, b2):
        if not is_invertible(b):
            raise ClassError("order is defined for invertible games only")
    if not (b2.parity == 1 or b1.parity == 0):
        return False
    return _value_any(concat(b1, b2)) == _value_any(b2) - _value_any(b1)


def board_reduced_form(b: Board) -> Optional[ReducedForm]:
    """ReducedForm of a board whose components are all stacks or
    two-ended stacks; None otherwise."""
    try:
        comps = analyze_components(b)
    except NonIntervalBoard:
        return None
    form = None
    for c in comps:
        if c.kind == "stack":
            part = reduce_stack(c.weights)
        elif c.kind == "tes":
            part = reduce_tes(c.weights)
        else:
            return None
        form = part if form is None else form + part
    if form is None:
        from .reduction import EMPTY_FORM

        form = EMPTY_FORM
    return form


def metric_dominates(
    b1: Board, v: int, b2: Board, w: int
) -> Union[bool, Literal["unknown"]]:
    """Does the v-move in g₁ metrically dominate the w-move in g₂, i.e.
    d(g₁∖v, g₂∖w) ≤ wt(v) − wt(w)?  Returns "unknown" when the distance is
    not computable within caps."""
    margin = b1.weight(v) - b2.weight(w)
    r1, r2 = b1.apply_move(v), b2.apply_move(w)
    f1, f2 = board_reduced_form(r1), board_reduced_form(r2)
    if f1 is not None and f2 is not None:
        if f1.parity != f2.parity:
            return False
        g1, _ = canonical_class(f1.menu)
        g2, _ = canonical_class(f2.menu)
        d = class_distance(g1, f1.ev_x, g2, f2.ev_x)
        return d != INFINITE and d <= margin
    if r1.parity != r2.parity:
        return False
    if r1.size + r2.size <= DEFAULT_EXHAUSTIVE_CAP:
        try:
            if is_invertible(r1) and is_invertible(r2):
                d = _value_any(concat(r1, r2))
                return d <= margin
        except (SizeCapExceeded, NonIntervalBoard):
            return "unknown"
    return "unknown"


def search_non_34prime_invertibles(boards: Sequence[Board]) -> list[Board]:
    """Exploratory harness: hunt for invertible games that fail the
    sufficient condition "val(g⊕g)=0 and every initial move is metrically
    dominated by a move leaving an invertible remnant".  No such example is
    known; callers must not assert on the outcome."""
    found = []
    for b in boards:
        if not is_invertible(b):
            continue
        if _value_any(concat(b, b)) != 0:
            found.append(b)
            continue
        moves = sorted(b.legal_moves())
        ok_moves = [v for v in moves if is_invertible(b.apply_move(v))]
        all_dominated = True
        for w in moves:
            if any(metric_dominates(b, v, b, w) is True for v in ok_moves):
                continue
            all_dominated = False
            break
        if not all_dominated:
            found.append(b)
    return found
