"""Ground-truth valuation by exhaustive memoized search.

val(g) = max over legal v of wt(v) − val(g∖v), with the §5-style variants:
  normal: plain recursion, val(⟨ ⟩) = 0
  p:      passing allowed, two passes end the game → val_p = max(0, …)
  a:      passing allowed only when the remaining size is even
  s:      passing allowed but never twice in a row → val_s = |max(…)|
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Optional, Sequence

from .board import Board
from .intervals import NonIntervalBoard, SizeCapExceeded, interval_outcomes, value_interval_dp
from .weights import WeightLike, parse_weights

RULES = ("normal", "p", "a", "s")

DEFAULT_EXHAUSTIVE_CAP = 20


def _check_rules(rules: str) -> None:
    if rules not in RULES:
        raise ValueError(f"unknown rules {rules!r}")


def value_exhaustive(b: Board, rules: str = "normal", cap: int = DEFAULT_EXHAUSTIVE_CAP) -> Fraction:
    """Exact value by memoized search over remaining-vertex bitmasks."""
    _check_rules(rules)
    n = b.size
    if n > cap:
        raise SizeCapExceeded(f"board size {n} exceeds exhaustive cap {cap}")
    if n == 0:
        return Fraction(0)
    ids = list(b.ids)
    index = {v: i for i, v in enumerate(ids)}
    wt = [w for _, w in b.vertices]
    adj = [0] * n
    for x, y in b.edges:
        adj[index[x]] |= 1 << index[y]
        adj[index[y]] |= 1 << index[x]
    avail0 = 0
    for v in b.available:
        avail0 |= 1 << index[v]
    unbroached = []
    for comp in b.components():
        cmask = 0
        for v in comp:
            cmask |= 1 << index[v]
        if not cmask & avail0:
            unbroached.append(cmask)
    full = (1 << n) - 1
    memo: dict[int, Fraction] = {}

    def legal(mask: int) -> int:
        removed = full ^ mask
        av = avail0
        r = removed
        while r:
            low = r & -r
            av |= adj[low.bit_length() - 1]
            r ^= low
        moves = av & mask
        for cmask in unbroached:
            if cmask & mask == cmask:
                moves |= cmask
        return moves

    def value(mask: int) -> Fraction:
        if mask == 0:
            return Fraction(0)
        hit = memo.get(mask)
        if hit is not None:
            return hit
        best = None
        moves = legal(mask)
        m = moves
        while m:
            low = m & -m
            i = low.bit_length() - 1
            out = wt[i] - value(mask ^ low)
            if best is None or out > best:
                best = out
            m ^= low
        rem = mask.bit_count()
        if rules == "p" or (rules == "a" and rem % 2 == 0):
            best = max(best, Fraction(0))
        elif rules == "s":
            best = abs(best)
        memo[mask] = best
        return best

    return value(full)


def value_auto(
    b: Board,
    rules: str = "normal",
    cap: int = DEFAULT_EXHAUSTIVE_CAP,
    dp_max_components: Optional[int] = 3,
    dp_max_comp_size: Optional[int] = 24,
) -> Fraction:
    """Exhaustive when small enough, else the interval DP; refuses beyond caps."""
    _check_rules(rules)
    if b.size <= cap:
        return value_exhaustive(b, rules, cap)
    return value_interval_dp(b, rules, dp_max_components, dp_max_comp_size)


def outcome_per_move(
    b: Board,
    rules: str = "normal",
    valuer: Optional[Callable[[Board], Fraction]] = None,
) -> dict[int, Fraction]:
    """outcome(v) = wt(v) − value(b∖v) for every legal v."""
    _check_rules(rules)
    if valuer is None:
        if b.size <= DEFAULT_EXHAUSTIVE_CAP:
            valuer = lambda bb: value_exhaustive(bb, rules)
        else:
            return interval_outcomes(b, rules)
    wmap = b.weight_map
    return {v: wmap[v] - valuer(b.apply_move(v)) for v in sorted(b.legal_moves())}


def best_move(b: Board, rules: str = "normal") -> Optional[int]:
    """Lowest-id vertex attaining the max outcome; None only on empty boards."""
    outs = outcome_per_move(b, rules)
    if not outs:
        return None
    best = max(outs.values())
    return min(v for v, o in outs.items() if o == best)


def s_value_menu(weights: Sequence[WeightLike]) -> Fraction:
    """Closed formula for s-rules menu games ⟨a1,…,an⟩.

    With N = Σ|negative weights| and P = Σ positive weights: if N > P the
    value is N − P; otherwise list the positives in increasing order
    p1 ≤ … ≤ pk, take the smallest j with P′ = p1+…+pj ≥ N, and the value
    is p_k − p_{k−1} + … + (−1)^{k−j+1} p_{j+1} + (−1)^{k−j}(P′ − N).
    """
    ws = parse_weights(weights)
    neg = -sum((w for w in ws if w < 0), Fraction(0))
    pos = sorted(w for w in ws if w > 0)
    p_total = sum(pos, Fraction(0))
    if neg > p_total:
        return neg - p_total
    j, acc = 0, Fraction(0)
    for idx, p in enumerate(pos, start=1):
        acc += p
        if acc >= neg:
            j = idx
            break
    k = len(pos)
    val = Fraction(0)
    sign = 1
    for t in range(k, j, -1):
        val += sign * pos[t - 1]
        sign = -sign
    return val + sign * (acc - neg)
