"""Sequence machinery: the alternating-sum condition, ev-sequences, slices,
and the linear-time partition algorithms for two-ended stacks and stacks.

A slice is an odd-length sequence satisfying (ASC) in both directions; an
ev-sequence is an even-length sequence satisfying (ASC).  Every weight
sequence partitions into slices (tes flavor: U-shaped slice weights) or
into slices plus an ev-remainder (stack flavor: strictly decreasing
weights); the weight profiles are unique.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional, Sequence

from . import backend
from .weights import WeightLike, parse_weights, scale_to_integers

Segment = tuple[int, int]  # half-open index range


class SliceError(ValueError):
    pass


def _prepare(seq: Sequence[WeightLike]) -> tuple[Fraction, ...]:
    return parse_weights(seq)


def asc_holds(seq: Sequence[WeightLike]) -> bool:
    """True iff every even-length alternating prefix sum is ≤ 0
    (vacuously true for n ≤ 1)."""
    a = _prepare(seq)
    s = Fraction(0)
    for i, w in enumerate(a):
        s = s + w if i % 2 == 0 else s - w
        if i % 2 == 1 and s > 0:
            return False
    return True


@dataclass(frozen=True)
class Classification:
    kind: Literal["ev_sequence", "slice", "neither"]
    weight: Optional[Fraction]  # x for ev-sequences, s for slices


def classify(seq: Sequence[WeightLike]) -> Classification:
    """ev_sequence (even n, (ASC); weight x = Σ(−1)^i aᵢ ≥ 0),
    slice (odd n, (ASC) both ways; weight s = Σ(−1)^{i−1}aᵢ), or neither."""
    a = _prepare(seq)
    n = len(a)
    alt = sum((w if i % 2 == 0 else -w) for i, w in enumerate(a))
    if n % 2 == 0:
        if asc_holds(a):
            return Classification("ev_sequence", -alt)
        return Classification("neither", None)
    if asc_holds(a) and asc_holds(a[::-1]):
        return Classification("slice", alt)
    return Classification("neither", None)


@dataclass(frozen=True)
class SliceDecomposition:
    flavor: Literal["tes", "stack"]
    sequence: tuple[Fraction, ...]
    segments: tuple[Segment, ...]
    weights: tuple[Fraction, ...]
    ev_remainder: Optional[tuple[Segment, Fraction]]  # (range, x)

    @property
    def ev_x(self) -> Fraction:
        return self.ev_remainder[1] if self.ev_remainder else Fraction(0)

    def slice_values(self, k: int) -> tuple[Fraction, ...]:
        s, e = self.segments[k]
        return self.sequence[s:e]


def _run_partition(a: tuple[Fraction, ...], flavor: str):
    """Dispatch to the best kernel; returns raw kernel output in Fractions."""
    ints, denom = scale_to_integers(a)
    kern = backend.int_kernel(ints)
    if flavor == "tes":
        cuts, weights = kern.tes_partition(ints)
        return cuts, [Fraction(w, denom) for w in weights], None, None
    cuts, weights, rem_start, x = kern.stack_partition(ints)
    return cuts, [Fraction(w, denom) for w in weights], rem_start, Fraction(x, denom)


def partition_tes(seq: Sequence[WeightLike]) -> SliceDecomposition:
    """Partition into slices with U-shaped weight sequence."""
    a = _prepare(seq)
    cuts, weights, _, _ = _run_partition(a, "tes")
    return SliceDecomposition("tes", a, tuple(cuts), tuple(weights), None)


def partition_stack(seq: Sequence[WeightLike]) -> SliceDecomposition:
    """Partition into slices with strictly decreasing weights plus an
    optional ev-remainder."""
    a = _prepare(seq)
    cuts, weights, rem_start, x = _run_partition(a, "stack")
    rem = None
    if rem_start < len(a):
        rem = ((rem_start, len(a)), x)
    return SliceDecomposition("stack", a, tuple(cuts), tuple(weights), rem)


def check_decomposition(d: SliceDecomposition) -> None:
    """Re-validate every claim a decomposition makes; raises SliceError."""
    covered = 0
    for (s, e), w in zip(d.segments, d.weights):
        if s != covered:
            raise SliceError("segments not contiguous")
        covered = e
        c = classify(d.sequence[s:e])
        if c.kind != "slice" or c.weight != w:
            raise SliceError(f"segment {(s, e)} is not a slice of weight {w}")
    if d.ev_remainder is not None:
        (s, e), x = d.ev_remainder
        if s != covered or e != len(d.sequence):
            raise SliceError("remainder does not close the partition")
        covered = e
        c = classify(d.sequence[s:e])
        if c.kind != "ev_sequence" or c.weight != x:
            raise SliceError("remainder is not an ev-sequence of the stated weight")
    if covered != len(d.sequence):
        raise SliceError("partition does not cover the sequence")
    ws = d.weights
    if d.flavor == "stack":
        if any(ws[i] <= ws[i + 1] for i in range(len(ws) - 1)):
            raise SliceError("stack weights not strictly decreasing")
    else:
        if d.ev_remainder is not None:
            raise SliceError("tes decomposition cannot carry a remainder")
        lo = min(range(len(ws)), key=lambda i: ws[i], default=0)
        left, right = ws[: lo + 1], ws[lo:]
        if any(left[i] < left[i + 1] for i in range(len(left) - 1)) or any(
            right[i] > right[i + 1] for i in range(len(right) - 1)
        ):
            raise SliceError("tes weights not weakly U-shaped")


def compose_weights(
    outer: SliceDecomposition, inner: SliceDecomposition
) -> SliceDecomposition:
    """Refine: outer partitions inner's slice-weight sequence; the merged
    segments of the original sequence form a decomposition with outer's
    weights."""
    if outer.sequence != inner.weights:
        raise SliceError("outer sequence must equal inner weight sequence")
    if inner.ev_remainder is not None and inner.ev_remainder[1] != 0:
        raise SliceError("inner remainder of nonzero weight cannot be absorbed")
    segments = []
    for s, e in outer.segments:
        segments.append((inner.segments[s][0], inner.segments[e - 1][1]))
    if inner.ev_remainder is not None and segments:
        # a weight-0 ev-remainder absorbs into the final slice
        start, _ = segments[-1]
        segments[-1] = (start, len(inner.sequence))
    out = SliceDecomposition(
        outer.flavor, inner.sequence, tuple(segments), outer.weights, None
    )
    check_decomposition(out)
    return out
