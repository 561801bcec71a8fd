"""Reduction of stacks, two-ended stacks and their concatenations to the
equivalence-class surrogate ⟨s₁,…,s_m⟩ ⊕ ev(x), with closed-form values
and provably optimal first moves.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional, Sequence, Union

from .board import Board
from .slices import classify, partition_stack, partition_tes, SliceDecomposition
from .weights import WeightLike, parse_weight, parse_weights

Part = tuple[str, Sequence[WeightLike]]  # ("st"|"tes", weight sequence)


class ReductionError(ValueError):
    pass


def cancel_pairs(weights: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Drop weights in pairs: [a,a] = [ ].  Keeps multiplicity mod 2,
    sorted non-increasing."""
    counts = Counter(weights)
    out = [w for w, c in counts.items() if c % 2 == 1]
    return tuple(sorted(out, reverse=True))


@dataclass(frozen=True)
class ReducedForm:
    menu: tuple[Fraction, ...]  # pair-cancelled, sorted non-increasing
    ev_x: Fraction
    parity: int  # of the original board size

    def __post_init__(self):
        if self.ev_x < 0:
            raise ReductionError("ev weight must be nonnegative")
        if len(self.menu) % 2 != self.parity:
            raise ReductionError("menu parity inconsistent with board parity")

    def __add__(self, other: "ReducedForm") -> "ReducedForm":
        return ReducedForm(
            cancel_pairs(self.menu + other.menu),
            self.ev_x + other.ev_x,
            (self.parity + other.parity) % 2,
        )


EMPTY_FORM = ReducedForm((), Fraction(0), 0)


def reduce_tes(seq: Sequence[WeightLike]) -> ReducedForm:
    """tes(a1,…,an) ∼ ⟨s1,…,sm⟩ where the sᵢ are the slice weights."""
    d = partition_tes(seq)
    return ReducedForm(cancel_pairs(d.weights), Fraction(0), len(d.sequence) % 2)


def reduce_stack(seq: Sequence[WeightLike]) -> ReducedForm:
    """st(a1,…,an) ∼ ⟨s1,…,sm⟩ ⊕ ev(x)."""
    d = partition_stack(seq)
    return ReducedForm(cancel_pairs(d.weights), d.ev_x, len(d.sequence) % 2)


def _reduce_part(part: Part) -> ReducedForm:
    kind, seq = part
    if kind == "st":
        return reduce_stack(seq)
    if kind == "tes":
        return reduce_tes(seq)
    raise ReductionError(f"unknown part kind {kind!r}")


def reduce_concat(parts: Sequence[Part]) -> ReducedForm:
    """Class of a concatenation of stacks and two-ended stacks: menus
    union (with pair cancellation), ev weights add."""
    form = EMPTY_FORM
    for part in parts:
        form = form + _reduce_part(part)
    return form


def value_of_reduced(r: ReducedForm) -> Fraction:
    """val(⟨menu⟩ ⊕ ev(x)): alternating sum of the menu in non-increasing
    order, minus x for an even menu, plus x for an odd one."""
    v = Fraction(0)
    for i, w in enumerate(sorted(r.menu, reverse=True)):
        v = v + w if i % 2 == 0 else v - w
    return v - r.ev_x if len(r.menu) % 2 == 0 else v + r.ev_x


def value_concat(parts: Sequence[Part]) -> Fraction:
    return value_of_reduced(reduce_concat(parts))


@dataclass(frozen=True)
class OptimalMove:
    kind: Literal["end", "any"]
    part_index: Optional[int] = None
    end: Optional[Literal["left", "right"]] = None
    note: str = ""


def optimal_move_concat(parts: Sequence[Part]) -> OptimalMove:
    """An optimal first move in a stack/tes concatenation.

    With no slices anywhere (the whole board is a sum of ev-sequence
    stacks), any initial move is optimal.  Otherwise the end move whose
    slice attains the maximal slice-weight over all parts is optimal: it
    metrically dominates the corresponding menu move, which is greedily
    optimal among all menu weights (cancelled or not).
    """
    decomps: list[tuple[str, SliceDecomposition]] = []
    for kind, seq in parts:
        d = partition_tes(seq) if kind == "tes" else partition_stack(seq)
        if kind == "st" and d is None:
            raise ReductionError("bad part")
        decomps.append((kind, d))
    all_weights = [w for _, d in decomps for w in d.weights]
    if not all_weights:
        return OptimalMove(
            "any",
            note="no slices: optimal play continues in one ev-sequence until exhausted",
        )
    target = max(all_weights)
    for idx, (kind, d) in enumerate(decomps):
        if not d.weights:
            continue
        if d.weights[0] == target:
            return OptimalMove("end", idx, "left")
        if kind == "tes" and d.weights[-1] == target:
            return OptimalMove("end", idx, "right")
    raise AssertionError("maximal slice-weight must sit at an end of some part")


def condense_slice(seq: Sequence[WeightLike], start: int, end: int) -> tuple[Fraction, ...]:
    """Replace the slice a[start:end] (0-based, half-open) by its weight;
    the reduced form is unchanged."""
    a = parse_weights(seq)
    if not (0 <= start < end <= len(a)):
        raise ReductionError("index range out of bounds")
    c = classify(a[start:end])
    if c.kind != "slice":
        raise ReductionError("segment is not a slice")
    return a[:start] + (c.weight,) + a[end:]


def detach_max(b: Board) -> tuple[Board, Fraction]:
    """g ∼ (g∖v) ⊕ ⟨wt(v)⟩ when v is available and carries the global max
    weight.  Returns (g∖v, wt(v))."""
    if b.size == 0:
        raise ReductionError("empty board")
    m = b.max_weight
    candidates = sorted(v for v in b.available if b.weight(v) == m)
    if not candidates:
        raise ReductionError("no available vertex of maximal weight")
    v = candidates[0]
    return b.apply_move(v), m
