"""Games with all weights 0 or 1 and no unbroached components ("e-games"):
1-cluster reduction, safe moves, the simplistic class with its closed-form
values, and the counterexample fixtures showing safe play is not optimal
in general.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .board import Board, make_board
from .reduction import ReducedForm, cancel_pairs


class NotAnEGame(ValueError):
    pass


class NotSimplistic(ValueError):
    pass


def _check_e_game(b: Board) -> None:
    if any(w not in (0, 1) for _, w in b.vertices):
        raise NotAnEGame("weights must all be 0 or 1")
    if b.unbroached_components():
        raise NotAnEGame("unbroached components are not allowed")


def _adjacency(b: Board) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {v: set() for v, _ in b.vertices}
    for x, y in b.edges:
        adj[x].add(y)
        adj[y].add(x)
    return adj


def one_clusters(b: Board) -> list[frozenset[int]]:
    """Connected components of the subgraph induced by the 1-vertices,
    ordered by minimal vertex id."""
    ones = {v for v, w in b.vertices if w == 1}
    adj = _adjacency(b)
    seen: set[int] = set()
    clusters = []
    for v in sorted(ones):
        if v in seen:
            continue
        comp = {v}
        queue = [v]
        while queue:
            u = queue.pop()
            for x in adj[u] & ones:
                if x not in comp:
                    comp.add(x)
                    queue.append(x)
        seen |= comp
        clusters.append(frozenset(comp))
    return clusters


def reduce_e_game(b: Board) -> Board:
    """The equivalent reduced game: each odd 1-cluster collapses to one
    1-vertex, adjacent to every 0-vertex adjacent to the cluster and
    available iff some cluster vertex is available; even 1-clusters are
    deleted,
    with new edges joining their 0-neighbours pairwise and availability
    promoted to those 0-neighbours when the deleted cluster held an
    available vertex.  No two 1-vertices are adjacent in the result."""
    _check_e_game(b)
    adj = _adjacency(b)
    zeros = {v for v, w in b.vertices if w == 0}
    avail0 = set(b.available & zeros)
    vertices: list[tuple[int, Fraction]] = [(v, Fraction(0)) for v in sorted(zeros)]
    edges = {
        (min(x, y), max(x, y))
        for x, y in b.edges
        if x in zeros and y in zeros
    }
    available = set(avail0)
    for cluster in one_clusters(b):
        nbr0 = set().union(*(adj[v] for v in cluster)) & zeros
        if len(cluster) % 2 == 1:
            rep = min(cluster)
            vertices.append((rep, Fraction(1)))
            for z in nbr0:
                edges.add((min(rep, z), max(rep, z)))
            if any(v in b.available for v in cluster):
                available.add(rep)
        else:
            pairs = sorted(nbr0)
            for i, x in enumerate(pairs):
                for y in pairs[i + 1 :]:
                    edges.add((x, y))
            if any(v in b.available for v in cluster):
                available |= nbr0
    vertices.sort()
    return make_board(vertices, sorted(edges), sorted(available))


def safe_moves(b: Board) -> set[int]:
    """Available 0-vertices whose adjacent 1-clusters have even total size.
    Only defined when no 1-vertex is available (an available 1 is simply
    taken)."""
    _check_e_game(b)
    wmap = b.weight_map
    if any(wmap[v] == 1 for v in b.available):
        raise NotAnEGame("safe moves are undefined while a 1-vertex is available")
    adj = _adjacency(b)
    clusters = one_clusters(b)
    cluster_of = {v: c for c in clusters for v in c}
    out = set()
    for v in b.available:
        touched = {cluster_of[u] for u in adj[v] if u in cluster_of}
        if sum(len(c) for c in touched) % 2 == 0:
            out.add(v)
    return out


def is_simplistic(b: Board) -> bool:
    """The reduction has every 0-vertex available and every non-available
    1-vertex of even degree."""
    r = reduce_e_game(b)
    wmap = r.weight_map
    adj = _adjacency(r)
    for v, w in r.vertices:
        if w == 0 and v not in r.available:
            return False
        if w == 1 and v not in r.available and len(adj[v]) % 2 == 1:
            return False
    return True


_CORE_MENU = {
    # (zeros mod 2, ones mod 2) -> menu of the class representative
    (0, 0): (),  # ⟨ ⟩
    (0, 1): (Fraction(-1),),  # ⟨−1⟩ ~ tes(0,1,0)
    (1, 0): (Fraction(0),),  # ⟨0⟩
    (1, 1): (Fraction(0), Fraction(-1)),  # ⟨0⟩ ⊕ ⟨−1⟩
}


def _detach_available_ones(r: Board) -> tuple[Board, int]:
    """Detach available 1-vertices from a reduced game one at a time
    (each is a maximal-weight available vertex); returns the residual and
    the count detached."""
    count = 0
    while True:
        ones = sorted(v for v in r.available if r.weight(v) == 1)
        if not ones:
            return r, count
        r = r.apply_move(ones[0])
        count += 1


def simplistic_class(b: Board) -> ReducedForm:
    """Equivalence class of a simplistic game: one ⟨1⟩ per detached
    available 1-vertex (cancelling in pairs) plus one of the four core
    classes ⟨ ⟩, ⟨−1⟩, ⟨0⟩, ⟨0⟩⊕⟨−1⟩ determined by the parities of the
    0- and 1-counts of the residual reduction."""
    if not is_simplistic(b):
        raise NotSimplistic("game is not simplistic")
    r, detached = _detach_available_ones(reduce_e_game(b))
    zeros = sum(1 for _, w in r.vertices if w == 0)
    ones = sum(1 for _, w in r.vertices if w == 1)
    core = _CORE_MENU[(zeros % 2, ones % 2)]
    menu = cancel_pairs((Fraction(1),) * detached + core)
    return ReducedForm(menu, Fraction(0), (detached + len(core)) % 2)


def simplistic_value(b: Board) -> Fraction:
    """Closed-form value: with no available 1s the value is 0/1 (odd zero
    count) or 0/−1 (even zero count) according to the parity of the
    1-count; available 1s detach first."""
    from .reduction import value_of_reduced

    return value_of_reduced(simplistic_class(b))


def simplistic_strategy_move(b: Board) -> int:
    """An optimal move per the simplistic strategy: an available 1-vertex
    if any, else a safe move, else any legal move (lowest id in each
    case)."""
    if not is_simplistic(b):
        raise NotSimplistic("game is not simplistic")
    if b.size == 0:
        raise NotAnEGame("empty board")
    wmap = b.weight_map
    ones = sorted(v for v in b.available if wmap[v] == 1)
    if ones:
        return ones[0]
    safe = safe_moves(b)
    if safe:
        return min(safe)
    return min(b.legal_moves())


# -- fixtures: safe play need not be optimal -----------------------------


def fixture_g1() -> Board:
    """Path (1,0,1,0,1,0), 0-vertices available: one move is safe and
    optimal, one safe but not optimal, one neither."""
    ws = [1, 0, 1, 0, 1, 0]
    vertices = [(i + 1, w) for i, w in enumerate(ws)]
    edges = [(i, i + 1) for i in range(1, 6)]
    return make_board(vertices, edges, [2, 4, 6])


def fixture_g2() -> Board:
    """Path (1,0,1,0,1,0,1) with an extra 1-vertex u adjacent to the middle
    0-vertex and to a pendant available 0-vertex w: two safe-not-optimal
    and two optimal-not-safe moves."""
    ws = [1, 0, 1, 0, 1, 0, 1]
    vertices = [(i + 1, w) for i, w in enumerate(ws)] + [(8, 1), (9, 0)]
    edges = [(i, i + 1) for i in range(1, 7)] + [(8, 4), (8, 9)]
    return make_board(vertices, edges, [2, 4, 6, 9])


def fixture_g1_prime() -> Board:
    """fixture_g1 with two non-available 0-vertices adjoined on the left:
    satisfies the degree condition but not full 0-availability."""
    ws = [0, 0, 1, 0, 1, 0, 1, 0]
    vertices = [(i + 1, w) for i, w in enumerate(ws)]
    edges = [(i, i + 1) for i in range(1, 8)]
    return make_board(vertices, edges, [4, 6, 8])


def fixture_g2_prime() -> Board:
    """fixture_g2 with two non-available 0-vertices adjoined on each side
    of the path."""
    ws = [0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0]
    vertices = [(i + 1, w) for i, w in enumerate(ws)] + [(12, 1), (13, 0)]
    edges = [(i, i + 1) for i in range(1, 11)] + [(12, 6), (12, 13)]
    return make_board(vertices, edges, [4, 6, 8, 13])
