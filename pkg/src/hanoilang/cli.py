"""Command-line front end.

Subcommands:

* solve      -- produce the optimal move sequence with a chosen engine
* verify     -- replay a move sequence and judge legality and completion
* compare    -- run every engine and check they emit identical sequences
* enumerate  -- list every word the N-disc grammar can generate
* trace      -- show each derivation step or each automaton configuration

solve in text mode prints the moves on stdout (one space-joined line, or
one move per line with --stream) and a summary line on stderr, so stdout
stays byte-comparable against golden files. JSON mode prints a single
record {engine, n_discs, moves, move_count, elapsed_ms, verified}.

Exit codes: 0 success, 1 semantic failure (illegal or unsolved sequence,
engine divergence), 2 usage error (bad arguments, unparseable input,
enumerate/trace caps), 3 engine failure (step limit, solve/bfs caps).
"""

import argparse
import json
import sys
import time

from .constructions import (
    BFS_MAX_DISCS,
    CapExceeded,
    HanoiInstance,
    bfs_optimal,
    build_hanoi_grammar,
    build_hanoi_pda,
    grammar_step_limit,
    pda_step_limit,
    recursive_solve,
)
from .grammar import (
    MAX_FORM_SYMBOLS,
    FormTooLarge,
    NoApplicableProduction,
    StepLimitExceeded,
    derive_full,
    derive_step,
    derive_streaming,
    enumerate_language,
    format_form,
)
from .hanoi import (
    IllegalMove,
    MoveParseError,
    MoveSymbol,
    apply_move,
    initial_state,
    is_solved,
    validate_sequence,
)
from .pda import PdaConfiguration, RunOutcome, run_to_empty_stack, step as pda_step

ENGINES = ("grammar", "pda", "recursive", "bfs")

# Disc-count caps. Materializing a word above 24 discs needs gigabytes;
# enumeration and traces blow up far sooner. --unsafe-no-cap lifts all of
# them for people who know what they are asking for.
SOLVE_MATERIALIZED_MAX = 24
ENUMERATE_MAX = 4
TRACE_MAX = 6

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_ENGINE = 3


class EngineFailure(RuntimeError):
    """An engine could not produce a sequence (limits, caps, bad run)."""


def _complain(message: str) -> None:
    print(f"hanoilang: {message}", file=sys.stderr)


def _summary_line(record: dict) -> str:
    verified = "true" if record["verified"] else "false"
    return (
        f"engine={record['engine']} n_discs={record['n_discs']} "
        f"move_count={record['move_count']} elapsed_ms={record['elapsed_ms']} "
        f"verified={verified}"
    )


def _record(engine: str, n: int, moves, elapsed_ms: float) -> dict:
    report = validate_sequence(n, moves)
    return {
        "engine": engine,
        "n_discs": n,
        "moves": [mv.code for mv in moves],
        "move_count": len(moves),
        "elapsed_ms": round(elapsed_ms, 3),
        "verified": report.legal and report.final_solved,
    }


def _run_engine(engine: str, n: int, unsafe: bool, observer=None) -> tuple:
    """Produce the N-disc move sequence with one engine, or raise
    EngineFailure. The observer, if given, sees each move as the
    automaton engine emits it (other engines ignore it)."""
    if engine == "grammar":
        grammar = build_hanoi_grammar(n)
        try:
            derivation = derive_full(
                grammar,
                step_limit=grammar_step_limit(n),
                max_form_symbols=None if unsafe else MAX_FORM_SYMBOLS,
            )
        except (StepLimitExceeded, FormTooLarge, NoApplicableProduction) as exc:
            raise EngineFailure(str(exc)) from exc
        return derivation.word
    if engine == "pda":
        machine = build_hanoi_pda(n)
        trace = run_to_empty_stack(
            machine, (), observer=observer, step_limit=pda_step_limit(n)
        )
        if trace.outcome is not RunOutcome.EMPTY_STACK_HALT:
            raise EngineFailure(f"automaton run ended {trace.outcome.value}")
        return trace.emitted
    if engine == "recursive":
        return recursive_solve(HanoiInstance(n))
    if engine == "bfs":
        try:
            return bfs_optimal(n, max_discs=None if unsafe else BFS_MAX_DISCS).sequence
        except CapExceeded as exc:
            raise EngineFailure(str(exc)) from exc
    raise ValueError(f"unknown engine {engine!r}")


def _solve_streaming_grammar(n: int, out) -> int:
    """True streaming path: moves go to `out` as the derivation produces
    them, memory stays proportional to N, and legality is checked on the
    fly by replaying each move on a board."""
    grammar = build_hanoi_grammar(n)
    board = initial_state(n)
    legal = True
    emitted = 0

    def sink(move: MoveSymbol) -> None:
        nonlocal board, legal, emitted
        print(move.code, file=out)
        emitted += 1
        if legal:
            try:
                board = apply_move(board, move)
            except IllegalMove:
                legal = False

    started = time.perf_counter()
    derive_streaming(grammar, sink, step_limit=grammar_step_limit(n))
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    verified = legal and is_solved(board, n)
    record = {
        "engine": "grammar",
        "n_discs": n,
        "moves": None,  # streamed, not retained
        "move_count": emitted,
        "elapsed_ms": round(elapsed_ms, 3),
        "verified": verified,
    }
    print(_summary_line(record), file=sys.stderr)
    return EXIT_OK


def cmd_solve(args) -> int:
    if args.n < 1:
        _complain(f"--n must be at least 1, got {args.n}")
        return EXIT_USAGE
    if args.stream and args.format == "json":
        _complain("--stream produces line output and cannot be combined with --format json")
        return EXIT_USAGE
    if args.stream and args.engine == "grammar":
        return _solve_streaming_grammar(args.n, sys.stdout)
    if args.n > SOLVE_MATERIALIZED_MAX and not args.unsafe_no_cap:
        _complain(
            f"materializing {args.n} discs means 2^{args.n} - 1 moves; "
            f"capped at {SOLVE_MATERIALIZED_MAX} (see --unsafe-no-cap, "
            "or --stream with the grammar engine)"
        )
        return EXIT_ENGINE
    observer = None
    if args.stream:
        # Non-grammar engines materialize anyway; the automaton at least
        # emits through its observer hook while running.
        observer = (lambda mv: print(mv.code)) if args.engine == "pda" else None
    started = time.perf_counter()
    try:
        moves = _run_engine(args.engine, args.n, args.unsafe_no_cap, observer=observer)
    except EngineFailure as exc:
        _complain(str(exc))
        return EXIT_ENGINE
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    record = _record(args.engine, args.n, moves, elapsed_ms)
    if args.format == "json":
        print(json.dumps(record, indent=2))
        return EXIT_OK
    if args.stream:
        if args.engine != "pda":  # pda already printed via its observer
            for mv in moves:
                print(mv.code)
    else:
        print(" ".join(record["moves"]))
    print(_summary_line(record), file=sys.stderr)
    return EXIT_OK


def _read_moves_source(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    with open(source, "r", encoding="utf-8") as handle:
        return handle.read()


def cmd_verify(args) -> int:
    if args.n < 1:
        _complain(f"--n must be at least 1, got {args.n}")
        return EXIT_USAGE
    try:
        text = _read_moves_source(args.moves)
    except OSError as exc:
        _complain(f"cannot read moves from {args.moves!r}: {exc}")
        return EXIT_USAGE
    moves = []
    for index, token in enumerate(text.split()):
        try:
            moves.append(MoveSymbol.parse(token))
        except MoveParseError as exc:
            _complain(f"token {index} ({token!r}): {exc}")
            return EXIT_USAGE
    report = validate_sequence(args.n, moves)
    solved = report.legal and report.final_solved
    if args.format == "json":
        print(
            json.dumps(
                {
                    "n_discs": args.n,
                    "legal": report.legal,
                    "failing_index": report.failing_index,
                    "failure_reason": report.failure_reason,
                    "final_solved": report.final_solved,
                    "moves_checked": report.moves_checked,
                },
                indent=2,
            )
        )
    else:
        print(f"legal: {'true' if report.legal else 'false'}")
        if not report.legal:
            print(f"failing_index: {report.failing_index}")
            print(f"failure_reason: {report.failure_reason}")
        print(f"final_solved: {'true' if report.final_solved else 'false'}")
        print(f"moves_checked: {report.moves_checked}")
    return EXIT_OK if solved else EXIT_FAILURE


def cmd_compare(args) -> int:
    if args.n < 1:
        _complain(f"--n must be at least 1, got {args.n}")
        return EXIT_USAGE
    if args.n > SOLVE_MATERIALIZED_MAX and not args.unsafe_no_cap:
        _complain(
            f"comparing materialized words is capped at {SOLVE_MATERIALIZED_MAX} "
            "discs (see --unsafe-no-cap)"
        )
        return EXIT_ENGINE
    engines = ["grammar", "pda", "recursive"]
    if args.n <= BFS_MAX_DISCS or args.unsafe_no_cap:
        engines.append("bfs")
    else:
        print(f"bfs: skipped (capped at {BFS_MAX_DISCS} discs)")
    sequences = {}
    for engine in engines:
        started = time.perf_counter()
        try:
            sequences[engine] = _run_engine(engine, args.n, args.unsafe_no_cap)
        except EngineFailure as exc:
            _complain(f"engine {engine} failed: {exc}")
            return EXIT_ENGINE
        elapsed_ms = (time.perf_counter() - started) * 1000.0
        print(f"{engine}: {len(sequences[engine])} moves in {elapsed_ms:.3f} ms")
    reference = engines[0]
    for engine in engines[1:]:
        expected, got = sequences[reference], sequences[engine]
        if expected == got:
            continue
        index = next(
            (i for i, (a, b) in enumerate(zip(expected, got)) if a != b),
            min(len(expected), len(got)),
        )
        print(f"divergence: {reference} vs {engine} at index {index}")
        return EXIT_FAILURE
    print(f"agreement: {len(engines)} engines, {len(sequences[reference])} moves")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.n < 1:
        _complain(f"--n must be at least 1, got {args.n}")
        return EXIT_USAGE
    if args.n > ENUMERATE_MAX and not args.unsafe_no_cap:
        _complain(
            f"enumeration explores every rewrite order and is capped at "
            f"{ENUMERATE_MAX} discs (see --unsafe-no-cap)"
        )
        return EXIT_USAGE
    bound = args.bound if args.bound is not None else 2 ** args.n
    if bound < 1:
        _complain(f"--bound must be at least 1, got {bound}")
        return EXIT_USAGE
    grammar = build_hanoi_grammar(args.n)
    words = enumerate_language(grammar, max_derivation_length=bound)
    for word in sorted(words):
        print(" ".join(mv.code for mv in word))
    print(f"cardinality: {len(words)}")
    return EXIT_OK


def _grammar_forms(n: int):
    grammar = build_hanoi_grammar(n)
    form = (grammar.start,)
    forms = [form]
    while True:
        nxt = derive_step(grammar, form)
        if nxt is None:
            return forms
        forms.append(nxt)
        form = nxt


def _pda_stacks(n: int):
    machine = build_hanoi_pda(n)
    config = PdaConfiguration(machine.start_state, (), (machine.start_stack,))
    stacks = [config.stack]
    while config.stack:
        successors = pda_step(machine, config)
        config = next(iter(successors))  # deterministic: exactly one
        stacks.append(config.stack)
    return stacks


def _format_stack(stack: tuple) -> str:
    return " ".join(str(sym) for sym in stack) if stack else "ε"


def cmd_trace(args) -> int:
    if args.n < 1:
        _complain(f"--n must be at least 1, got {args.n}")
        return EXIT_USAGE
    if args.limit is not None and args.limit < 1:
        _complain(f"--limit must be at least 1, got {args.limit}")
        return EXIT_USAGE
    if args.n > TRACE_MAX and not args.unsafe_no_cap:
        _complain(
            f"a {args.n}-disc trace runs to about 2^{args.n + 1} lines; capped "
            f"at {TRACE_MAX} discs (see --unsafe-no-cap)"
        )
        return EXIT_USAGE
    if args.engine == "grammar":
        forms = [format_form(form) for form in _grammar_forms(args.n)]
        if args.format == "json":
            entries = [{"step": i, "form": form} for i, form in enumerate(forms)]
            if args.limit is not None:
                entries = entries[: args.limit]
            print(json.dumps(entries, indent=2, ensure_ascii=False))
        else:
            lines = [
                f"{prev} ⊢ {nxt}" for prev, nxt in zip(forms, forms[1:])
            ]
            if args.limit is not None:
                lines = lines[: args.limit]
            for line in lines:
                print(line)
    else:
        stacks = [_format_stack(stack) for stack in _pda_stacks(args.n)]
        if args.format == "json":
            entries = [{"step": i, "stack": stack} for i, stack in enumerate(stacks)]
            if args.limit is not None:
                entries = entries[: args.limit]
            print(json.dumps(entries, indent=2, ensure_ascii=False))
        else:
            lines = [f"⟨q0, ε, {stack}⟩" for stack in stacks]
            if args.limit is not None:
                lines = lines[: args.limit]
            for line in lines:
                print(line)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hanoilang",
        description="Towers of Hanoi as a formal language: grammar, "
        "pushdown automaton, and reference solvers.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    def common(sub):
        sub.add_argument("--n", type=int, required=True, metavar="N",
                         help="number of discs")
        sub.add_argument("--unsafe-no-cap", action="store_true",
                         help="lift the disc-count caps (expect long runtimes "
                         "and large outputs)")

    solve = subparsers.add_parser(
        "solve", help="produce the optimal move sequence")
    common(solve)
    solve.add_argument("--engine", choices=ENGINES, default="grammar")
    solve.add_argument("--format", choices=("text", "json"), default="text")
    solve.add_argument("--stream", action="store_true",
                       help="print one move per line as they are produced")
    solve.set_defaults(func=cmd_solve)

    verify = subparsers.add_parser(
        "verify", help="replay a move sequence and judge it")
    common(verify)
    verify.add_argument("moves", metavar="FILE",
                        help="whitespace-separated move codes; '-' for stdin")
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.set_defaults(func=cmd_verify)

    compare = subparsers.add_parser(
        "compare", help="run all engines and check they agree")
    common(compare)
    compare.set_defaults(func=cmd_compare)

    enumerate_ = subparsers.add_parser(
        "enumerate", help="list every generated word within a step bound")
    common(enumerate_)
    enumerate_.add_argument("--bound", type=int, default=None, metavar="STEPS",
                            help="max derivation steps to explore "
                            "(default: 2^N, enough for the full word)")
    enumerate_.set_defaults(func=cmd_enumerate)

    trace = subparsers.add_parser(
        "trace", help="show each derivation step or automaton configuration")
    common(trace)
    trace.add_argument("--engine", choices=("grammar", "pda"), default="grammar")
    trace.add_argument("--format", choices=("text", "json"), default="text")
    trace.add_argument("--limit", type=int, default=None, metavar="COUNT",
                       help="print at most this many trace entries")
    trace.set_defaults(func=cmd_trace)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
