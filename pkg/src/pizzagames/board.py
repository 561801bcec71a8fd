"""Graph game boards g = (G, A).

A board is a finite simple vertex-weighted graph together with the set A of
available vertices.  A move removes a legal vertex (any available vertex, or
any vertex of a component containing no available vertex) and makes its
former neighbours available.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from .weights import Weight, WeightLike, parse_weight, parse_weights, weight_to_json


class BoardError(ValueError):
    """Malformed board description or illegal operation on a board."""


class IllegalMove(BoardError):
    def __init__(self, vertex):
        super().__init__(f"illegal move: vertex {vertex}")
        self.vertex = vertex


SHORTHAND_KINDS = ("menu", "st", "tes", "path", "cyc")


@dataclass(frozen=True)
class Shorthand:
    """One of the named board families: menu ⟨…⟩, st, tes, path, cyc."""

    kind: str
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        if self.kind not in SHORTHAND_KINDS:
            raise BoardError(f"unknown shorthand kind {self.kind!r}")
        if self.kind != "menu" and len(self.weights) == 0:
            raise BoardError(f"{self.kind} requires at least one vertex")


_SHORTHAND_RE = re.compile(r"^\s*(menu|st|tes|path|cyc)\s*\(\s*(.*?)\s*\)\s*$")


def parse_shorthand(text: str) -> Shorthand:
    m = _SHORTHAND_RE.match(text)
    if not m:
        raise BoardError(f"cannot parse shorthand {text!r}")
    kind, body = m.group(1), m.group(2)
    weights = parse_weights(w for w in (s.strip() for s in body.split(",")) if w != "")
    return Shorthand(kind, weights)


@dataclass(frozen=True)
class Board:
    """Immutable game position.  Construct through make_board / build_board."""

    vertices: tuple[tuple[int, Fraction], ...]  # (id, weight), sorted by id
    edges: frozenset[tuple[int, int]]  # (lo, hi) pairs, lo < hi
    available: frozenset[int]

    # -- basic queries ----------------------------------------------------

    @property
    def ids(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.vertices)

    def weight(self, v: int) -> Fraction:
        for u, w in self.vertices:
            if u == v:
                return w
        raise BoardError(f"unknown vertex {v}")

    @property
    def weight_map(self) -> dict[int, Fraction]:
        return dict(self.vertices)

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def parity(self) -> int:
        """0 for even boards, 1 for odd."""
        return self.size % 2

    @property
    def abs_total(self) -> Fraction:
        """|g| = Σ|wt(v)|."""
        return sum((abs(w) for _, w in self.vertices), Fraction(0))

    @property
    def max_weight(self) -> Optional[Fraction]:
        if not self.vertices:
            return None
        return max(w for _, w in self.vertices)

    def neighbours(self, v: int) -> frozenset[int]:
        out = set()
        for a, b in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return frozenset(out)

    def components(self) -> list[frozenset[int]]:
        """Connected components, ordered by minimal vertex id."""
        adj: dict[int, set[int]] = {v: set() for v, _ in self.vertices}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        seen: set[int] = set()
        comps = []
        for v, _ in self.vertices:
            if v in seen:
                continue
            stack, comp = [v], {v}
            seen.add(v)
            while stack:
                u = stack.pop()
                for w in adj[u] - seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
            comps.append(frozenset(comp))
        return comps

    def unbroached_components(self) -> list[frozenset[int]]:
        return [c for c in self.components() if not (c & self.available)]

    # -- moves ------------------------------------------------------------

    def legal_moves(self) -> frozenset[int]:
        moves = set(self.available)
        for comp in self.unbroached_components():
            moves |= comp
        return frozenset(moves)

    def apply_move(self, v: int) -> "Board":
        if v not in self.legal_moves():
            raise IllegalMove(v)
        nbrs = self.neighbours(v)
        return make_board(
            [(u, w) for u, w in self.vertices if u != v],
            [(a, b) for a, b in self.edges if v not in (a, b)],
            (self.available | nbrs) - {v},
        )

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "vertices": [{"id": v, "weight": weight_to_json(w)} for v, w in self.vertices],
            "edges": sorted([a, b] for a, b in self.edges),
            "available": sorted(self.available),
        }

    @staticmethod
    def from_json(data: Mapping) -> "Board":
        try:
            vertices = [(int(v["id"]), parse_weight(v["weight"])) for v in data["vertices"]]
            edges = [(int(a), int(b)) for a, b in data.get("edges", [])]
            available = [int(v) for v in data.get("available", [])]
        except (KeyError, TypeError, ValueError) as exc:
            raise BoardError(f"malformed board JSON: {exc}") from exc
        return make_board(vertices, edges, available)


def make_board(
    vertices: Iterable[tuple[int, WeightLike]],
    edges: Iterable[tuple[int, int]],
    available: Iterable[int],
) -> Board:
    """Validate and normalize a raw description into a Board.

    Normalizations (all irrelevant to values): self-loops and duplicate
    edges are dropped, and isolated vertices are forced available so that
    canonical board comparison is well-defined.
    """
    vs = [(int(v), parse_weight(w)) for v, w in vertices]
    ids = [v for v, _ in vs]
    if len(set(ids)) != len(ids):
        raise BoardError("duplicate vertex ids")
    idset = set(ids)
    es: set[tuple[int, int]] = set()
    for a, b in edges:
        a, b = int(a), int(b)
        if a not in idset or b not in idset:
            raise BoardError(f"edge ({a},{b}) references unknown vertex")
        if a == b:
            continue  # loops are irrelevant
        es.add((min(a, b), max(a, b)))
    avail = set(int(v) for v in available)
    if not avail <= idset:
        raise BoardError("available set contains unknown vertex")
    touched = {v for e in es for v in e}
    avail |= idset - touched  # isolated vertices: availability is irrelevant
    return Board(tuple(sorted(vs)), frozenset(es), frozenset(avail))


def build_board(spec: Union[Shorthand, str, Mapping]) -> Board:
    """Board from a Shorthand, shorthand text, or board-JSON mapping.

    Shorthand vertices are numbered v1…vn in sequence order.
    """
    if isinstance(spec, str):
        spec = parse_shorthand(spec)
    if isinstance(spec, Mapping):
        return Board.from_json(spec)
    n = len(spec.weights)
    vertices = [(i + 1, w) for i, w in enumerate(spec.weights)]
    edges: list[tuple[int, int]] = []
    if spec.kind != "menu":
        edges = [(i, i + 1) for i in range(1, n)]
        if spec.kind == "cyc" and n >= 2:
            edges.append((n, 1))
    available: list[int] = []
    if spec.kind == "menu":
        available = [v for v, _ in vertices]
    elif spec.kind == "st":
        available = [1]
    elif spec.kind == "tes":
        available = [1, n]
    return make_board(vertices, edges, available)


def menu(*ws: WeightLike) -> Board:
    return build_board(Shorthand("menu", parse_weights(ws)))


def st(*ws: WeightLike) -> Board:
    return build_board(Shorthand("st", parse_weights(ws)))


def tes(*ws: WeightLike) -> Board:
    return build_board(Shorthand("tes", parse_weights(ws)))


def path(*ws: WeightLike) -> Board:
    return build_board(Shorthand("path", parse_weights(ws)))


def cyc(*ws: WeightLike) -> Board:
    return build_board(Shorthand("cyc", parse_weights(ws)))


def concat(b1: Board, b2: Board, *more: Board) -> Board:
    """Disjoint union g1 ⊕ g2 (⊕ …); vertex ids relabelled 1…n by
    (operand index, original id)."""
    boards = (b1, b2) + more
    vertices: list[tuple[int, Fraction]] = []
    edges: list[tuple[int, int]] = []
    available: list[int] = []
    next_id = 1
    for b in boards:
        remap = {}
        for v, w in b.vertices:
            remap[v] = next_id
            vertices.append((next_id, w))
            next_id += 1
        edges.extend((remap[a], remap[b_]) for a, b_ in b.edges)
        available.extend(remap[v] for v in b.available)
    return make_board(vertices, edges, available)


def affine(b: Board, a: WeightLike, c: WeightLike) -> Board:
    """φ_{a,c}: every weight w ↦ a·w + c, structure unchanged.  Requires a > 0."""
    a, c = parse_weight(a), parse_weight(c)
    if a <= 0:
        raise BoardError("affine scale must be positive")
    return Board(
        tuple((v, a * w + c) for v, w in b.vertices), b.edges, b.available
    )


def board_stats(b: Board) -> dict:
    return {
        "size": b.size,
        "parity": "odd" if b.parity else "even",
        "abs_total": b.abs_total,
        "max_weight": b.max_weight,
        "unbroached_component_count": len(b.unbroached_components()),
    }
