"""HTTP JSON API hosting live game sessions: a human (or two) plays any
supported board, optionally against the exact engine, with hints and
per-move analysis.  All rule logic lives server-side.
"""

from __future__ import annotations

import json
import os
import uuid
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware

from .board import Board, BoardError, build_board
from .intervals import NonIntervalBoard, SizeCapExceeded
from .oracle import DEFAULT_EXHAUSTIVE_CAP, value_auto
from .weights import weight_to_json

RULES = ("normal", "p", "a", "s")
SEATS = ("none", "player1", "player2")


def engine_cap() -> int:
    raw = os.environ.get("PIZZA_ENGINE_CAP")
    return int(raw) if raw else DEFAULT_EXHAUSTIVE_CAP


class Unsupported(Exception):
    """Position beyond exact-solver capability."""


def _position_outcomes(b: Board, rules: str) -> dict[int, Fraction]:
    cap = engine_cap()
    try:
        wmap = b.weight_map
        return {
            v: wmap[v] - value_auto(b.apply_move(v), rules, cap)
            for v in sorted(b.legal_moves())
        }
    except (SizeCapExceeded, NonIntervalBoard) as e:
        raise Unsupported(str(e)) from e


def _position_value(b: Board, rules: str, opponent_passed: bool) -> Fraction:
    if b.size == 0:
        return Fraction(0)
    outs = _position_outcomes(b, rules)
    best = max(outs.values())
    if rules == "p" or (rules == "a" and b.size % 2 == 0):
        return max(best, Fraction(0))
    if rules == "s" and not opponent_passed:
        return abs(best)
    return best


def _pass_legal(b: Board, rules: str, opponent_passed: bool) -> bool:
    if b.size == 0:
        return False
    if rules == "p":
        return True
    if rules == "a":
        return b.size % 2 == 0
    if rules == "s":
        return not opponent_passed
    return False


@dataclass
class Session:
    id: str
    rules: str
    engine_seat: str
    initial: Board
    board: Board
    history: list = field(default_factory=list)
    scores: list = field(default_factory=lambda: [Fraction(0), Fraction(0)])
    to_move: int = 1
    finished: bool = False
    last_was_pass: bool = False

    def apply(self, vertex: Optional[int]) -> None:
        """One move (vertex) or pass (None) by the player to move."""
        mover = self.to_move
        if vertex is None:
            if not _pass_legal(self.board, self.rules, self.last_was_pass):
                raise ValueError("passing is not allowed here")
            if self.last_was_pass:
                self.finished = True
            self.history.append({"mover": mover, "pass": True})
            self.last_was_pass = not self.finished and True
        else:
            w = self.board.weight(vertex)  # raises on unknown id
            if vertex not in self.board.legal_moves():
                raise ValueError(f"vertex {vertex} is not a legal move")
            self.board = self.board.apply_move(vertex)
            self.scores[mover - 1] += w
            self.scores[2 - mover] -= w
            self.history.append(
                {"mover": mover, "pass": False, "vertex": vertex, "weight": w}
            )
            self.last_was_pass = False
            if self.board.size == 0:
                self.finished = True
        self.to_move = 3 - mover

    def engine_to_move(self) -> bool:
        seat = {"player1": 1, "player2": 2}.get(self.engine_seat)
        return not self.finished and seat == self.to_move

    def engine_step(self) -> None:
        b, rules = self.board, self.rules
        outs = _position_outcomes(b, rules)
        best = max(outs.values()) if outs else None
        may_pass = _pass_legal(b, rules, self.last_was_pass)
        if may_pass and (best is None or best < 0):
            self.apply(None)
            return
        target = min(v for v, o in outs.items() if o == best)
        self.apply(target)

    def state(self) -> dict:
        return {
            "game_id": self.id,
            "rules": self.rules,
            "engine_seat": self.engine_seat,
            "board": self.board.to_json(),
            "initial_board": self.initial.to_json(),
            "legal_moves": sorted(self.board.legal_moves()),
            "pass_legal": _pass_legal(self.board, self.rules, self.last_was_pass)
            and not self.finished,
            "history": [
                {
                    **h,
                    **(
                        {"weight": weight_to_json(h["weight"])}
                        if "weight" in h
                        else {}
                    ),
                }
                for h in self.history
            ],
            "scores": {
                "player1": weight_to_json(self.scores[0]),
                "player2": weight_to_json(self.scores[1]),
            },
            "to_move": self.to_move,
            "finished": self.finished,
        }

    def summary(self) -> dict:
        return {
            "game_id": self.id,
            "rules": self.rules,
            "engine_seat": self.engine_seat,
            "moves": len(self.history),
            "finished": self.finished,
        }

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "rules": self.rules,
            "engine_seat": self.engine_seat,
            "initial": self.initial.to_json(),
            "board": self.board.to_json(),
            "history": [
                {**h, **({"weight": weight_to_json(h["weight"])} if "weight" in h else {})}
                for h in self.history
            ],
            "scores": [weight_to_json(s) for s in self.scores],
            "to_move": self.to_move,
            "finished": self.finished,
            "last_was_pass": self.last_was_pass,
        }

    @classmethod
    def from_json(cls, data: dict) -> "Session":
        from .weights import parse_weight

        history = []
        for h in data["history"]:
            h = dict(h)
            if "weight" in h:
                h["weight"] = parse_weight(h["weight"])
            history.append(h)
        return cls(
            id=data["id"],
            rules=data["rules"],
            engine_seat=data["engine_seat"],
            initial=build_board(data["initial"]),
            board=build_board(data["board"]),
            history=history,
            scores=[parse_weight(s) for s in data["scores"]],
            to_move=data["to_move"],
            finished=data["finished"],
            last_was_pass=data["last_was_pass"],
        )


def create_app(state_dir: Optional[str] = None) -> FastAPI:
    app = FastAPI(title="graph-game service", version="1")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    sessions: dict[str, Session] = {}
    sdir = Path(state_dir) if state_dir else None

    def snapshot(s: Session) -> None:
        if sdir is None:
            return
        sdir.mkdir(parents=True, exist_ok=True)
        (sdir / f"{s.id}.json").write_text(json.dumps(s.to_json()))

    def forget(game_id: str) -> None:
        if sdir is not None:
            f = sdir / f"{game_id}.json"
            if f.exists():
                f.unlink()

    if sdir is not None and sdir.is_dir():
        for f in sorted(sdir.glob("*.json")):
            try:
                s = Session.from_json(json.loads(f.read_text()))
                sessions[s.id] = s
            except (ValueError, KeyError, BoardError):
                continue

    def get_session(game_id: str) -> Session:
        s = sessions.get(game_id)
        if s is None:
            raise HTTPException(404, "unknown game")
        return s

    @app.post("/api/v1/games", status_code=201)
    def create_game(body: dict):
        rules = body.get("rules", "normal")
        engine_seat = body.get("engine_seat", "none")
        if rules not in RULES:
            raise HTTPException(400, f"unknown rules {rules!r}")
        if engine_seat not in SEATS:
            raise HTTPException(400, f"unknown engine seat {engine_seat!r}")
        spec = body.get("board") or body.get("shorthand")
        if spec is None:
            raise HTTPException(400, "board or shorthand required")
        try:
            board = build_board(spec)
        except (BoardError, ValueError) as e:
            raise HTTPException(400, str(e))
        s = Session(
            id=uuid.uuid4().hex[:12],
            rules=rules,
            engine_seat=engine_seat,
            initial=board,
            board=board,
            finished=board.size == 0,
        )
        # capability: the engine (and hints) must be able to value the
        # opening position; legal play preserves solvable shapes
        try:
            if not s.finished:
                _position_outcomes(board, rules)
        except Unsupported as e:
            raise HTTPException(422, f"board beyond engine capability: {e}")
        while s.engine_to_move():
            s.engine_step()
        sessions[s.id] = s
        snapshot(s)
        return s.state()

    @app.get("/api/v1/games")
    def list_games():
        return [s.summary() for s in sessions.values()]

    @app.get("/api/v1/games/{game_id}")
    def get_game(game_id: str):
        return get_session(game_id).state()

    @app.delete("/api/v1/games/{game_id}", status_code=204)
    def delete_game(game_id: str):
        get_session(game_id)
        del sessions[game_id]
        forget(game_id)

    @app.post("/api/v1/games/{game_id}/moves")
    def post_move(game_id: str, body: dict):
        s = get_session(game_id)
        if s.finished:
            raise HTTPException(409, "game is finished")
        if s.engine_to_move():
            raise HTTPException(409, "not your turn")
        is_pass = bool(body.get("pass"))
        vertex = body.get("vertex")
        if not is_pass and not isinstance(vertex, int):
            raise HTTPException(422, "vertex (integer) or pass required")
        try:
            s.apply(None if is_pass else vertex)
        except (ValueError, BoardError) as e:
            raise HTTPException(422, str(e))
        while s.engine_to_move():
            s.engine_step()
        snapshot(s)
        return s.state()

    @app.get("/api/v1/games/{game_id}/analysis")
    def analysis(game_id: str):
        s = get_session(game_id)
        if s.finished or s.board.size == 0:
            return {
                "value_to_move": 0,
                "optimal_moves": [],
                "per_move_outcomes": {},
                "pass_optimal": False,
            }
        try:
            outs = _position_outcomes(s.board, s.rules)
            value = _position_value(s.board, s.rules, s.last_was_pass)
        except Unsupported as e:
            raise HTTPException(422, f"position beyond engine capability: {e}")
        best = max(outs.values())
        optimal = sorted(v for v, o in outs.items() if o == best and o == value)
        return {
            "value_to_move": weight_to_json(value),
            "optimal_moves": optimal,
            "per_move_outcomes": {str(v): weight_to_json(o) for v, o in outs.items()},
            "pass_optimal": _pass_legal(s.board, s.rules, s.last_was_pass)
            and best < value + (0 if s.rules != "s" else 2 * abs(best)),
        }

    return app
