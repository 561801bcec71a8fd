"""Command-line front end: solving, partitions, class-algebra queries,
pizza generators and checks, terminal play, the HTTP service, benchmarks,
and the acceptance-suite runner.

Exit codes: 0 ok, 1 usage error, 2 computation refusal (size/shape caps),
3 verification failure.
"""

from __future__ import annotations

import json
import sys
import time
from fractions import Fraction

import click

from . import backend
from .board import Board, BoardError, build_board, concat, cyc, menu, path, st, tes
from .classalg import (
    ClassError,
    board_reduced_form,
    class_leq,
    independent,
    is_invertible,
)
from .cyclepath import (
    CycleError,
    cycles_equivalent,
    four_ninths_margin,
    gen_extremal,
    is_extremal_special_pizza,
    solve_cycle,
    solve_unbroached_path,
)
from .intervals import NonIntervalBoard, SizeCapExceeded
from .oracle import outcome_per_move, value_auto
from .slices import partition_stack, partition_tes
from .weights import parse_weight, weight_to_json
from .zeroone import NotAnEGame, NotSimplistic, reduce_e_game, safe_moves, simplistic_value

# spec'd exit codes: 1 for usage problems (click defaults to 2)
click.UsageError.exit_code = 1

EXIT_REFUSAL = 2
EXIT_VERIFY = 3


def _parse_csv(text: str) -> list[Fraction]:
    return [parse_weight(p.strip()) for p in text.split(",") if p.strip()]


def _fmt(w) -> str:
    return str(w)


def _emit(as_json: bool, data: dict, text: str) -> None:
    if as_json:
        click.echo(json.dumps(data))
    else:
        click.echo(text)


def _refuse(as_json: bool, message: str) -> None:
    _emit(as_json, {"error": "refused", "reason": message}, f"refused: {message}")
    sys.exit(EXIT_REFUSAL)


_SHAPES = ("tes", "st", "path", "cyc", "menu")


def _board_expr(text: str) -> Board:
    """A shorthand, or a "+"-separated disjoint sum of shorthands."""
    import re

    parts = [p.strip() for p in re.split(r"(?<=\))\s*\+", text)]
    try:
        boards = [build_board(p) for p in parts]
    except (BoardError, ValueError) as e:
        raise click.UsageError(str(e))
    return boards[0] if len(boards) == 1 else concat(*boards)


def _board_from_options(shorthand, **shapes) -> Board:
    given = [(k, v) for k, v in shapes.items() if v is not None]
    if shorthand is not None:
        given.append(("shorthand", shorthand))
    if len(given) != 1:
        raise click.UsageError("give exactly one board (shorthand or one shape option)")
    kind, value = given[0]
    if kind == "shorthand":
        return _board_expr(value)
    try:
        ctor = {"tes": tes, "st": st, "path": path, "cyc": cyc, "menu": menu}[kind]
        return ctor(*_parse_csv(value))
    except (BoardError, ValueError) as e:
        raise click.UsageError(str(e))


def _shape_options(fn):
    for shape in _SHAPES:
        fn = click.option(f"--{shape}", default=None, metavar="CSV")(fn)
    return fn


def _json_option(fn):
    return click.option("--json", "as_json", is_flag=True, help="machine output")(fn)


@click.group()
def main():
    """Exact solvers for vertex-removal graph games (stacks, paths, pizzas)."""


# -- solve ---------------------------------------------------------------


def _play_line(b: Board, rules: str) -> list[dict]:
    line = []
    mover = 1
    score = Fraction(0)
    while b.size:
        outs = outcome_per_move(b, rules, valuer=lambda x: value_auto(x, rules))
        best = max(outs.values())
        v = min(u for u, o in outs.items() if o == best)
        w = b.weight(v)
        score += w if mover == 1 else -w
        line.append({"mover": mover, "vertex": v, "weight": weight_to_json(w)})
        b = b.apply_move(v)
        mover = 3 - mover
    return line


@main.command()
@click.argument("shorthand", required=False)
@_shape_options
@click.option("--rules", type=click.Choice(["normal", "p", "a", "s"]), default="normal")
@click.option("--line/--no-line", default=True, help="print an optimal play line")
@_json_option
def solve(shorthand, rules, line, as_json, **shapes):
    """Value, optimal first moves, and an optimal play line for a board."""
    b = _board_from_options(shorthand, **shapes)
    try:
        value = value_auto(b, rules)
        outs = outcome_per_move(b, rules, valuer=lambda x: value_auto(x, rules))
    except (SizeCapExceeded, NonIntervalBoard) as e:
        _refuse(as_json, str(e))
        return
    best = max(outs.values(), default=Fraction(0))
    optimal = sorted(v for v, o in outs.items() if o == best)
    data = {
        "value": weight_to_json(value),
        "optimal_moves": optimal,
        "per_move_outcomes": {str(v): weight_to_json(o) for v, o in outs.items()},
    }
    lines = [f"value: {_fmt(value)}", f"optimal moves: {optimal}"]
    if line and b.size <= 40:
        played = _play_line(b, rules)
        data["play_line"] = played
        lines.append(
            "play line: "
            + " ".join(f"P{m['mover']}:v{m['vertex']}({m['weight']})" for m in played)
        )
    _emit(as_json, data, "\n".join(lines))


# -- partition -----------------------------------------------------------


@main.command()
@click.option("--tes", "tes_csv", default=None, metavar="CSV")
@click.option("--st", "st_csv", default=None, metavar="CSV")
@_json_option
def partition(tes_csv, st_csv, as_json):
    """Slice partition of a two-ended-stack or stack weight sequence."""
    if (tes_csv is None) == (st_csv is None):
        raise click.UsageError("give exactly one of --tes or --st")
    seq = _parse_csv(tes_csv if tes_csv is not None else st_csv)
    dec = partition_tes(seq) if tes_csv is not None else partition_stack(seq)
    data = {
        "flavor": dec.flavor,
        "segments": [list(s) for s in dec.segments],
        "slice_weights": [weight_to_json(w) for w in dec.weights],
        "ev_weight": weight_to_json(dec.ev_x),
    }
    text = (
        f"slices: {[f'{list(map(str, dec.sequence[s:e]))}' for s, e in dec.segments]}\n"
        f"slice weights: {[str(w) for w in dec.weights]}\n"
        f"ev weight: {dec.ev_x}"
    )
    _emit(as_json, data, text)


# -- class algebra queries -----------------------------------------------


def _two_boards(spec1: str, spec2: str) -> tuple[Board, Board]:
    return _board_expr(spec1), _board_expr(spec2)


def _pure_cycle_weights(b: Board):
    """Weight sequence if the board is a single unbroached cycle."""
    from .intervals import analyze_components

    try:
        comps = analyze_components(b)
    except NonIntervalBoard:
        return None
    if len(comps) == 1 and comps[0].kind == "cyc":
        return comps[0].weights
    return None


def _distance(b1: Board, b2: Board):
    """Exact class distance, "infinite", or None when undecidable in caps."""
    if b1.parity != b2.parity:
        return "infinite"
    r1, r2 = board_reduced_form(b1), board_reduced_form(b2)
    if r1 is not None and r2 is not None:
        from .classalg import canonical_class, class_distance

        c1, x1 = canonical_class(r1.menu, r1.ev_x)
        c2, x2 = canonical_class(r2.menu, r2.ev_x)
        return class_distance(c1, x1, c2, x2)
    w1, w2 = _pure_cycle_weights(b1), _pure_cycle_weights(b2)
    if w1 is not None and w2 is not None:
        return Fraction(0) if cycles_equivalent(w1, w2) else None
    try:
        if is_invertible(b1) and is_invertible(b2):
            return value_auto(concat(b1, b2))
    except (SizeCapExceeded, NonIntervalBoard):
        pass
    return None


@main.command()
@click.argument("board1")
@click.argument("board2")
@_json_option
def equiv(board1, board2, as_json):
    """Whether two shorthand boards are equivalent (distance zero)."""
    b1, b2 = _two_boards(board1, board2)
    d = _distance(b1, b2)
    if d is None:
        w1, w2 = _pure_cycle_weights(b1), _pure_cycle_weights(b2)
        if w1 is not None and w2 is not None:
            eq = cycles_equivalent(w1, w2)
            _emit(as_json, {"equivalent": eq}, str(eq).lower())
            return
        _refuse(as_json, "equivalence undecidable within size/shape caps")
        return
    eq = d == 0
    _emit(as_json, {"equivalent": eq}, str(eq).lower())


@main.command()
@click.argument("board1")
@click.argument("board2")
@_json_option
def distance(board1, board2, as_json):
    """Exact class distance between two shorthand boards."""
    b1, b2 = _two_boards(board1, board2)
    d = _distance(b1, b2)
    if d is None:
        _refuse(as_json, "distance undecidable within size/shape caps")
        return
    out = "infinite" if d == "infinite" else weight_to_json(d)
    _emit(as_json, {"distance": out}, str(out))


@main.command()
@click.argument("board")
@_json_option
def invertible(board, as_json):
    """Whether a shorthand board's class is invertible."""
    b = _board_expr(board)
    try:
        ok = is_invertible(b)
    except (SizeCapExceeded, NonIntervalBoard) as e:
        _refuse(as_json, str(e))
        return
    _emit(as_json, {"invertible": ok}, str(ok).lower())


@main.command()
@click.argument("board1")
@click.argument("board2")
@_json_option
def order(board1, board2, as_json):
    """Whether [board1] <= [board2] in the class order (invertible games)."""
    b1, b2 = _two_boards(board1, board2)
    try:
        ok = class_leq(b1, b2)
    except ClassError as e:
        raise click.UsageError(str(e))
    except (SizeCapExceeded, NonIntervalBoard) as e:
        _refuse(as_json, str(e))
        return
    _emit(as_json, {"leq": ok}, str(ok).lower())


@main.command(name="independent")
@click.argument("boards", nargs=-1, required=True)
@_json_option
def independent_cmd(boards, as_json):
    """Whether the classes of the given shorthand boards are independent."""
    if len(boards) < 2:
        raise click.UsageError("need at least two boards")
    bs = [_board_expr(s) for s in boards]
    try:
        ok = independent(bs)
    except ClassError as e:
        raise click.UsageError(str(e))
    except (SizeCapExceeded, NonIntervalBoard) as e:
        _refuse(as_json, str(e))
        return
    _emit(as_json, {"independent": ok}, str(ok).lower())


# -- zero-one ------------------------------------------------------------


def _board_from_json_arg(source: str) -> Board:
    try:
        raw = sys.stdin.read() if source == "-" else open(source).read()
        return build_board(json.loads(raw))
    except (OSError, ValueError, BoardError) as e:
        raise click.UsageError(str(e))


@main.group()
def zeroone():
    """0-1 game (e-game) machinery over board JSON files ("-" = stdin)."""


@zeroone.command("reduce")
@click.argument("source")
@_json_option
def zeroone_reduce(source, as_json):
    """1-cluster reduction of an e-game."""
    b = _board_from_json_arg(source)
    try:
        r = reduce_e_game(b)
    except NotAnEGame as e:
        raise click.UsageError(str(e))
    _emit(as_json, {"board": r.to_json()}, json.dumps(r.to_json(), indent=2))


@zeroone.command("safe")
@click.argument("source")
@_json_option
def zeroone_safe(source, as_json):
    """Safe moves of an e-game with no available 1-vertex."""
    b = _board_from_json_arg(source)
    try:
        moves = sorted(safe_moves(b))
    except NotAnEGame as e:
        raise click.UsageError(str(e))
    _emit(as_json, {"safe_moves": moves}, str(moves))


@zeroone.command("value")
@click.argument("source")
@_json_option
def zeroone_value(source, as_json):
    """Closed-form value of a simplistic e-game."""
    b = _board_from_json_arg(source)
    try:
        v = simplistic_value(b)
    except (NotAnEGame, NotSimplistic) as e:
        raise click.UsageError(str(e))
    _emit(as_json, {"value": weight_to_json(v)}, str(v))


# -- pizza ---------------------------------------------------------------


@main.group()
def pizza():
    """Extremal pizza generators and the 4/9-bound checker."""


@pizza.command("gen")
@click.option("--gk", type=int, default=None, help="family with value -(k-1)")
@click.option("--zeroone", "zo", type=int, default=None, help="minimum-value +-1 cycle of size n")
@click.option("--pi", default=None, metavar="CSV", help="piece sizes for the discretized pizza")
@click.option("--n", "n_", type=int, default=2, help="weights per piece for --pi")
@_json_option
def pizza_gen(gk, zo, pi, n_, as_json):
    """Generate an extremal cycle; prints its weight sequence and value."""
    given = [x for x in (gk, zo, pi) if x is not None]
    if len(given) != 1:
        raise click.UsageError("give exactly one of --gk, --zeroone, --pi")
    try:
        if gk is not None:
            b = gen_extremal("gk", gk)
        elif zo is not None:
            b = gen_extremal("zeroone", zo)
        else:
            b = gen_extremal("pi", _parse_csv(pi), n_)
    except (CycleError, ValueError) as e:
        raise click.UsageError(str(e))
    ws = [w for _, w in b.vertices]
    v = solve_cycle(ws)["value"]
    data = {
        "weights": [weight_to_json(w) for w in ws],
        "value": weight_to_json(v),
    }
    _emit(as_json, data, f"cyc({','.join(map(str, ws))})\nvalue: {v}")


@pizza.command("check-49")
@click.argument("csv")
@_json_option
def pizza_check49(csv, as_json):
    """Margin of a pizza over the -|g|/9 bound and extremal recognition."""
    try:
        ws = _parse_csv(csv)
        margin = four_ninths_margin(ws)
    except (CycleError, ValueError) as e:
        raise click.UsageError(str(e))
    extremal = is_extremal_special_pizza(ws)
    data = {
        "value": weight_to_json(solve_cycle(ws)["value"]),
        "margin": weight_to_json(margin),
        "extremal": extremal,
    }
    text = f"margin: {margin}\nextremal: {str(extremal).lower()}"
    _emit(as_json, data, text)
    if margin < 0:
        sys.exit(EXIT_VERIFY)


# -- play ----------------------------------------------------------------


@main.command()
@click.argument("shorthand")
@click.option("--seat", type=click.Choice(["1", "2", "both", "auto"]), default="1",
              help="which seat(s) the human plays; auto = engine plays both")
@click.option("--rules", type=click.Choice(["normal", "p", "a", "s"]), default="normal")
def play(shorthand, seat, rules):
    """Play a board in the terminal against the exact engine."""
    from .service import Session, Unsupported, _position_outcomes

    try:
        board = build_board(shorthand)
    except (BoardError, ValueError) as e:
        raise click.UsageError(str(e))
    engine_seat = {"1": "player2", "2": "player1", "both": "none", "auto": "none"}[seat]
    s = Session(
        id="local",
        rules=rules,
        engine_seat=engine_seat,
        initial=board,
        board=board,
        finished=board.size == 0,
    )
    try:
        if not s.finished:
            _position_outcomes(board, rules)
    except Unsupported as e:
        click.echo(f"refused: {e}")
        sys.exit(EXIT_REFUSAL)

    def human_turn() -> bool:
        return seat in ("1", "2", "both") and (
            seat == "both" or s.to_move == int(seat)
        )

    while not s.finished:
        wmap = s.board.weight_map
        legal = sorted(s.board.legal_moves())
        click.echo(
            f"\nplayer {s.to_move} to move; "
            f"scores {s.scores[0]} / {s.scores[1]}"
        )
        click.echo("legal: " + "  ".join(f"v{v}(wt {wmap[v]})" for v in legal))
        if seat == "auto" or not human_turn():
            s.engine_step()
            last = s.history[-1]
            what = "pass" if last.get("pass") else f"v{last['vertex']}"
            click.echo(f"engine (player {last['mover']}) plays {what}")
            continue
        raw = click.prompt("your move (vertex id, 'pass', or 'quit')", type=str)
        if raw.strip() == "quit":
            break
        try:
            s.apply(None if raw.strip() == "pass" else int(raw))
        except ValueError as e:
            click.echo(f"bad move: {e}")
    click.echo(
        f"\n{'finished' if s.finished else 'abandoned'} after {len(s.history)} moves; "
        f"final scores {s.scores[0]} / {s.scores[1]} "
        f"(outcome for player 1: {s.scores[0]})"
    )


# -- serve ---------------------------------------------------------------


@main.command()
@click.option("--port", type=int, default=8080)
@click.option("--host", default="127.0.0.1")
@click.option("--state-dir", default=None, help="JSON session snapshot directory")
def serve(port, host, state_dir):
    """Run the HTTP game service."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(state_dir=state_dir), host=host, port=port)


# -- bench ---------------------------------------------------------------


def _bench_partition(sizes: list[int], reps: int) -> list[dict]:
    import random as _random

    from . import _kernel_py

    rng = _random.Random(12)
    rows = []
    for n in sizes:
        a = [rng.randrange(-3, 4) for _ in range(n)]
        times = {}
        for label, kernel in ((backend.BACKEND, backend.kernel), ("pure", _kernel_py)):
            best = min(
                _timed(lambda k=kernel: k.tes_partition(a)) for _ in range(reps)
            )
            times[label] = best
        rows.append({"n": n, **{k: round(v * 1000, 3) for k, v in times.items()}})
    return rows


def _timed(fn) -> float:
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def _bench_cycle(sizes: list[int], reps: int) -> list[dict]:
    import random as _random

    rng = _random.Random(13)
    rows = []
    for n in sizes:
        ws = [rng.randrange(0, 9) for _ in range(n)]
        best = min(_timed(lambda: solve_cycle(ws)) for _ in range(reps))
        rows.append({"n": n, "seconds": round(best, 4)})
    return rows


@main.command()
@click.option("--partition", "do_partition", is_flag=True)
@click.option("--cycle", "do_cycle", is_flag=True)
@click.option("--sizes", default="100000,200000", metavar="CSV")
@click.option("--reps", type=int, default=5)
@_json_option
def bench(do_partition, do_cycle, sizes, reps, as_json):
    """Benchmark the partition kernels (native vs pure) and cycle solver."""
    try:
        ns = [int(Fraction(p)) for p in sizes.split(",") if p.strip()]
    except ValueError as e:
        raise click.UsageError(str(e))
    if not ns or any(n <= 0 for n in ns) or ns != sorted(ns):
        raise click.UsageError("sizes must be positive and ascending")
    if not (do_partition or do_cycle):
        do_partition = True
    data: dict = {"backend": backend.BACKEND}
    lines = [f"compiled backend: {backend.BACKEND}"]
    if do_partition:
        rows = _bench_partition(ns, reps)
        data["partition"] = rows
        lines.append("partition (ms, best of %d):" % reps)
        for r in rows:
            cells = "  ".join(f"{k} {v:>9}" for k, v in r.items() if k != "n")
            lines.append(f"  n={r['n']:>8}  {cells}")
        if len(rows) >= 2:
            key = backend.BACKEND
            ratios = [rows[i][key] / rows[i - 1][key] for i in range(1, len(rows))]
            data["partition_step_ratios"] = [round(r, 2) for r in ratios]
            lines.append(
                "  step ratios (native): "
                + ", ".join(f"{r:.2f}" for r in ratios)
                + "  (linear-time target: ~size ratio)"
            )
    if do_cycle:
        rows = _bench_cycle(ns, reps)
        data["cycle"] = rows
        lines.append("cycle solver (s, best of %d):" % reps)
        for r in rows:
            lines.append(f"  n={r['n']:>8}  {r['seconds']:>8}")
        if len(rows) >= 2:
            ratios = [
                rows[i]["seconds"] / max(rows[i - 1]["seconds"], 1e-9)
                for i in range(1, len(rows))
            ]
            data["cycle_step_ratios"] = [round(r, 2) for r in ratios]
            lines.append(
                "  step ratios: "
                + ", ".join(f"{r:.2f}" for r in ratios)
                + "  (quadratic target: ~size ratio squared)"
            )
    _emit(as_json, data, "\n".join(lines))


# -- verify --------------------------------------------------------------


@main.command()
@click.option("--only", default=None, help="category or name substring filter")
@_json_option
def verify(only, as_json):
    """Run the acceptance suite; exit 3 on any failure."""
    from .acceptance import run_acceptance

    report = run_acceptance(only=only)
    if as_json:
        click.echo(json.dumps(report))
    else:
        for c in report["checks"]:
            mark = "PASS" if c["passed"] else "FAIL"
            click.echo(
                f"{mark}  {c['category']:<12} {c['name']:<28} "
                f"{c['seconds']:>8.3f}s  {c['detail']}"
            )
        n = report["counts"]
        click.echo(f"{n['total'] - n['failed']}/{n['total']} checks passed")
    if not report["passed"]:
        sys.exit(EXIT_VERIFY)


if __name__ == "__main__":
    main()
