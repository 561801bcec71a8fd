"""Polynomial valuation for boards whose components are stacks, two-ended
stacks, unbroached paths, or unbroached cycles.

Legal play in such a component only ever leaves interval-shaped remnants
(a suffix; a middle run; two outward-consumed stacks; an arc), so the whole
position compresses to one small state per component instead of a vertex
bitmask.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional

from .board import Board


class NonIntervalBoard(ValueError):
    """A component is not one of the four supported shapes."""


class SizeCapExceeded(RuntimeError):
    def __init__(self, msg="size cap exceeded"):
        super().__init__(msg)


class _Comp:
    """One component: shape kind, weights in path/cycle order, vertex ids."""

    __slots__ = ("kind", "weights", "ids")

    def __init__(self, kind, weights, ids):
        self.kind = kind
        self.weights = weights
        self.ids = ids

    def initial_state(self):
        if self.kind == "stack":
            return 0
        if self.kind == "tes":
            return (0, len(self.weights) - 1)
        return "full"

    def remaining(self, state) -> int:
        n = len(self.weights)
        if self.kind == "stack":
            return n - state
        if self.kind == "tes":
            i, j = state
            return j - i + 1
        if state == "full":
            return n
        if self.kind == "path":
            l, r = state
            return l + r
        _, m = state  # cycle arc
        return m

    def moves(self, state):
        """Yield (vertex-id, weight, new-state)."""
        a, ids, n = self.weights, self.ids, len(self.weights)
        if self.kind == "stack":
            if state < n:
                yield ids[state], a[state], state + 1
            return
        if self.kind == "tes":
            i, j = state
            if i <= j:
                yield ids[i], a[i], (i + 1, j)
                if j > i:
                    yield ids[j], a[j], (i, j - 1)
            return
        if self.kind == "path":
            if state == "full":
                for k in range(n):
                    yield ids[k], a[k], (k, n - k - 1)
                return
            l, r = state
            if l > 0:
                yield ids[l - 1], a[l - 1], (l - 1, r)
            if r > 0:
                yield ids[n - r], a[n - r], (l, r - 1)
            return
        # cycle
        if state == "full":
            for k in range(n):
                yield ids[k], a[k], ((k + 1) % n, n - 1)
            return
        s, m = state
        if m > 0:
            yield ids[s], a[s], ((s + 1) % n, m - 1)
            if m > 1:
                e = (s + m - 1) % n
                yield ids[e], a[e], (s, m - 1)


def _order_path(comp_ids, adj) -> Optional[list[int]]:
    ends = [v for v in comp_ids if len(adj[v] & comp_ids) == 1]
    if len(ends) != 2:
        return None
    order = [min(ends)]
    prev = None
    while len(order) < len(comp_ids):
        nxt = [u for u in adj[order[-1]] & comp_ids if u != prev]
        if len(nxt) != 1:
            return None
        prev = order[-1]
        order.append(nxt[0])
    return order


def _order_cycle(comp_ids, adj) -> Optional[list[int]]:
    if any(len(adj[v] & comp_ids) != 2 for v in comp_ids):
        return None
    start = min(comp_ids)
    order = [start]
    prev = None
    while True:
        nbrs = sorted(u for u in adj[order[-1]] & comp_ids if u != prev)
        if not nbrs:
            return None
        prev = order[-1]
        order.append(nbrs[0])
        if order[-1] == start:
            order.pop()
            return order if len(order) == len(comp_ids) else None


def analyze_components(b: Board) -> list[_Comp]:
    """Classify every component; raises NonIntervalBoard if any component
    is not a stack / tes / unbroached path / unbroached cycle."""
    wmap = b.weight_map
    adj: dict[int, set[int]] = {v: set() for v, _ in b.vertices}
    for x, y in b.edges:
        adj[x].add(y)
        adj[y].add(x)
    comps = []
    for comp in b.components():
        avail = comp & b.available
        if len(comp) == 1:
            (v,) = comp
            comps.append(_Comp("stack", [wmap[v]], [v]))
            continue
        order = _order_path(comp, adj)
        if order is not None:
            first, last = order[0], order[-1]
            if not avail:
                kind = "path"
            elif avail == {first, last}:
                kind = "tes"
            elif avail == {first}:
                kind = "stack"
            elif avail == {last}:
                kind = "stack"
                order = order[::-1]
            else:
                raise NonIntervalBoard(f"unsupported availability on path {sorted(comp)}")
            comps.append(_Comp(kind, [wmap[v] for v in order], order))
            continue
        order = _order_cycle(comp, adj)
        if order is not None and not avail:
            comps.append(_Comp("cyc", [wmap[v] for v in order], order))
            continue
        raise NonIntervalBoard(f"component {sorted(comp)} is not interval-shaped")
    return comps


def _check_caps(comps, max_components, max_comp_size):
    if max_components is not None and len(comps) > max_components:
        raise SizeCapExceeded(f"more than {max_components} components")
    if max_comp_size is not None:
        for c in comps:
            if len(c.weights) > max_comp_size:
                raise SizeCapExceeded(f"component larger than {max_comp_size}")


def _value(comps, states, memo, rules) -> Fraction:
    key = states
    hit = memo.get(key)
    if hit is not None:
        return hit
    remaining = sum(c.remaining(s) for c, s in zip(comps, states))
    if remaining == 0:
        return Fraction(0)
    best = None
    for idx, (c, s) in enumerate(zip(comps, states)):
        for _, w, ns in c.moves(s):
            child = states[:idx] + (ns,) + states[idx + 1 :]
            out = w - _value(comps, child, memo, rules)
            if best is None or out > best:
                best = out
    if rules == "p" or (rules == "a" and remaining % 2 == 0):
        best = max(best, Fraction(0))
    elif rules == "s":
        best = abs(best)
    memo[key] = best
    return best


def value_interval_dp(
    b: Board,
    rules: str = "normal",
    max_components: Optional[int] = 3,
    max_comp_size: Optional[int] = 24,
) -> Fraction:
    """Exact value of an interval-shaped board under any rules variant."""
    comps = analyze_components(b)
    _check_caps(comps, max_components, max_comp_size)
    states = tuple(c.initial_state() for c in comps)
    return _value(comps, states, {}, rules)


def interval_outcomes(
    b: Board,
    rules: str = "normal",
    max_components: Optional[int] = 3,
    max_comp_size: Optional[int] = 24,
) -> dict[int, Fraction]:
    """outcome(v) = wt(v) − value(b∖v) for every legal v, via the DP."""
    comps = analyze_components(b)
    _check_caps(comps, max_components, max_comp_size)
    states = tuple(c.initial_state() for c in comps)
    memo: dict = {}
    out: dict[int, Fraction] = {}
    for idx, (c, s) in enumerate(zip(comps, states)):
        for vid, w, ns in c.moves(s):
            child = states[:idx] + (ns,) + states[idx + 1 :]
            out[vid] = w - _value(comps, child, memo, rules)
    return out
