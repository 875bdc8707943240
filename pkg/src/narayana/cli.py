"""Command-line front door: seq, rep, comp, id, nim, beatty, analog, serve.

Exit codes: 0 success, 1 a verification subcommand found a counterexample,
2 usage error. With --json, big integers serialize as decimal strings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import analogs, beatty, compositions, identities, nim, representations, sequences


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _rep_json(rep: representations.QRepresentation) -> dict:
    return {
        "q": rep.q,
        "value": str(rep.value()),
        "indices": list(rep.indices),
        "summands": [str(v) for v in rep.summands()],
    }


def _report_json(report) -> dict:
    out = {"identity": getattr(report, "identity", getattr(report, "claim", "?")),
           "q": report.q, "nMax": report.n_max, "ok": report.ok}
    if report.counterexample:
        out["counterexample"] = {k: str(v) for k, v in report.counterexample.items()}
    return out


def _cmd_seq(args) -> int:
    if args.to < args.start:
        print("empty range", file=sys.stderr)
        return 2
    term = {
        "narayana": sequences.g_term,
        "tribonacci": sequences.t_term,
        "padovan": sequences.p_term,
        "u": sequences.u_term,
    }[args.family]
    ks = range(args.start, args.to + 1)
    if args.a_shift:
        if args.family == "narayana":
            values = [sequences.a_term(args.q, k) for k in ks]
        elif args.family == "tribonacci":
            values = [sequences.tri_a_term(args.q, k) for k in ks]
        else:
            print("--a is only defined for narayana and tribonacci", file=sys.stderr)
            return 2
    else:
        values = [term(args.q, k) for k in ks]
    if args.json:
        _print_json({"family": args.family, "q": args.q, "from": args.start,
                     "to": args.to, "terms": [str(v) for v in values]})
    else:
        print(", ".join(str(v) for v in values))
    return 0


def _cmd_rep(args) -> int:
    if args.mode == "greedy":
        rep = representations.greedy_q_rep(args.q, args.n)
        if args.json:
            _print_json(_rep_json(rep))
        else:
            print(representations.format_rep(rep))
    elif args.mode == "far":
        rep = representations.far_difference_rep(args.q, args.n)
        if args.json:
            _print_json({
                "q": args.q, "value": str(rep.value()),
                "terms": [{"index": i, "sign": s, "summand": str(abs(v))}
                          for (i, s), (v, _) in zip(rep.terms, rep.summands())],
            })
        else:
            print(representations.format_far_difference(rep))
    else:  # tri
        rep = representations.tribonacci_greedy_rep(args.q, args.n)
        if args.json:
            _print_json({"q": args.q, "value": str(rep.value()),
                         "indices": list(rep.indices),
                         "summands": [str(v) for v in rep.summands()]})
        else:
            summands = rep.summands()
            print(f"{args.n} = " + " + ".join(map(str, summands)) if summands else f"{args.n} = 0 (empty)")
    return 0


def _cmd_comp(args) -> int:
    constraint = compositions.parse_constraint(args.parts) if args.parts else None
    if args.mode == "count":
        count = compositions.count_compositions(args.n, constraint)
        if args.json:
            _print_json({"n": args.n, "parts": constraint.describe(), "count": str(count)})
        else:
            print(count)
        return 0
    if args.mode == "list":
        comps = compositions.enumerate_compositions(args.n, constraint, bound=args.bound)
        if args.json:
            _print_json({"n": args.n, "parts": constraint.describe(), "count": str(len(comps)),
                         "compositions": [list(c.parts) for c in comps]})
        else:
            for c in comps:
                print(c)
        return 0
    comp = compositions.Composition(tuple(int(p) for p in args.composition.split(",")))
    if args.mode == "macmahon":
        bits = compositions.macmahon_sequence(comp)
        print("".join(map(str, bits)) if not args.json else json.dumps({"bits": list(bits)}))
    elif args.mode == "conjugate":
        print(compositions.conjugate(comp))
    elif args.mode == "sills":
        print(compositions.sills_map(args.q, comp))
    else:  # sills-inv
        print(compositions.sills_inverse(args.q, comp))
    return 0


def _cmd_id(args) -> int:
    if args.mode == "verify":
        report = {
            "3": lambda: identities.verify_sum_identity(args.q, args.nmax),
            "4": lambda: identities.verify_binomial_identity(args.q, args.nmax),
            "5": lambda: identities.verify_weighted_identity(args.q, args.nmax),
            "footnote": lambda: identities.footnote_identity_check(args.q),
        }[args.which]()
        _print_json(_report_json(report)) if args.json else print(report)
        return 0 if report.ok else 1
    if args.mode == "cA":
        interval = identities.c_A_constant(args.q, args.digits)
        if args.json:
            _print_json({"q": args.q, "digits": args.digits, "value": interval.decimal(args.digits),
                         "lo": str(interval.lo), "hi": str(interval.hi)})
        else:
            print(interval.decimal(args.digits))
        return 0
    hits = identities.cross_family_coincidences(args.q, args.bound)
    if args.json:
        _print_json({"q": args.q, "bound": str(args.bound),
                     "coincidences": [{"value": str(v), "index": i, "indexNext": j}
                                      for v, i, j in hits]})
    else:
        for v, i, j in hits:
            print(f"{v} = G_{i} (q={args.q}) = G_{j} (q={args.q + 1})")
    return 0


def _cmd_nim(args) -> int:
    config = nim.GameConfig(args.q, nim.Variant(args.variant), max(args.n or 2, 2))
    if args.mode == "solve":
        losers = nim.losing_positions(config, args.n)
        if args.json:
            _print_json({"q": args.q, "variant": args.variant, "nMax": args.n,
                         "firstPlayerLoses": losers})
        else:
            print("first player loses at:", ", ".join(map(str, losers)))
        return 0
    if args.mode == "hint":
        state = nim.GameState(beans=args.beans, last_take=args.last_take)
        move = nim.strategy_move(config, state)
        if args.json:
            _print_json({"take": move.take, "leastSummand": move.least_summand,
                         "winning": move.winning,
                         "representation": [str(v) for v in move.representation.summands()]})
        else:
            label = "least summand" if move.least_summand else "fallback (no winning move)"
            print(f"take {move.take} ({label}); pile {representations.format_rep(move.representation)}")
        return 0
    return _play_loop(config, args)


def _play_loop(config: nim.GameConfig, args) -> int:
    """Interactive terminal game; the engine replies with the strategy move."""
    state = nim.new_game(nim.GameConfig(config.q, config.variant, args.beans))
    order = "Engine moves first" if args.engine_first else "You move first"
    print(f"Pile: {state.beans} beans. {order}; whoever takes the last bean wins.")
    if args.engine_first:
        move = nim.strategy_move(config, state)
        state = nim.apply_move(config, state, move.take)
        print(f"  engine takes {move.take}; {state.beans} left")
    while not state.over:
        cap = nim.max_take(config, state)
        try:
            line = input(f"your take (1..{cap})> ").strip()
        except EOFError:
            print("\nbye")
            return 0
        if line in ("q", "quit", "exit"):
            return 0
        try:
            take = int(line)
            state = nim.apply_move(config, state, take)
        except (ValueError, nim.IllegalMoveError) as exc:
            print(f"  illegal: {exc}")
            continue
        if state.over:
            print("You took the last bean. You win!")
            return 0
        move = nim.strategy_move(config, state)
        state = nim.apply_move(config, state, move.take)
        rep = representations.format_rep(move.representation)
        print(f"  engine takes {move.take} (pile was {rep}); {state.beans} left")
        if state.over:
            print("Engine took the last bean. Engine wins.")
    return 0


def _cmd_beatty(args) -> int:
    if args.mode == "pair":
        rows = [(n, beatty.beatty_a(args.q, n), beatty.beatty_b(args.q, n))
                for n in range(1, args.n + 1)]
        if args.json:
            _print_json({"q": args.q,
                         "pairs": [{"n": n, "a": str(a), "b": str(b)} for n, a, b in rows]})
        else:
            for n, a, b in rows:
                print(f"a({n}) = {a}\tb({n}) = {b}")
        return 0
    if args.mode == "word":
        errf = beatty.kimberling_error_q2 if args.q == 2 else beatty.kimberling_error
        if args.q not in (2, 3):
            print("word identities are stated for q=2 and q=3 only", file=sys.stderr)
            return 2
        values = [errf(args.word, n) for n in range(1, args.nmax + 1)]
        ok = all(v >= 0 for v in values) and (args.q == 3 or len(set(values)) == 1)
        summary = {"q": args.q, "word": args.word, "nMax": args.nmax,
                   "min": min(values), "max": max(values), "ok": ok}
        _print_json(summary) if args.json else print(
            f"e_f over n<=:{args.nmax}: min {summary['min']}, max {summary['max']}"
            + ("" if ok else "  [FAIL]"))
        return 0 if ok else 1
    report = beatty.check_complementarity(args.q, args.N)
    if args.json:
        _print_json({"q": report.q, "N": report.limit, "ok": report.ok,
                     "missing": list(report.missing), "duplicated": list(report.duplicated)})
    else:
        print(f"complementarity up to {report.limit}: " + ("pass" if report.ok else
              f"FAIL missing={report.missing[:5]} duplicated={report.duplicated[:5]}"))
    return 0 if report.ok else 1


def _cmd_analog(args) -> int:
    if args.mode == "verify":
        report = (analogs.verify_padovan_counts(args.q, args.nmax) if args.which == "padovan"
                  else analogs.verify_tribonacci_counts(args.q, args.nmax))
        _print_json(_report_json(report)) if args.json else print(report)
        return 0 if report.ok else 1
    rows = analogs.sills_analog_probe(args.q, args.nmax)
    if args.json:
        _print_json({"q": args.q, "rows": [{"n": n, "residueCount": str(a), "shiftedCount": str(b)}
                                           for n, a, b in rows]})
    else:
        for n, a, b in rows:
            print(f"n={n}\tc_n(q-1 mod q)={a}\tc_(n+1)(1 mod q-1, !=1)={b}")
    return 0


def _cmd_serve(args) -> int:
    from . import service  # lazy: pulls in the HTTP machinery

    port = int(os.environ.get("NARAYANA_PORT", args.port))
    return service.serve(
        port=port,
        bind=args.bind,
        persist=args.persist,
        engine_first_default=args.engine_first,
        ttl_seconds=args.ttl,
        cors_origin=args.cors_origin,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="narayana",
        description="Exact toolkit for the Narayana family: representations, "
                    "compositions, identities, Nim, Beatty sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", help="print sequence terms")
    p.add_argument("--family", choices=["narayana", "tribonacci", "padovan", "u"],
                   default="narayana")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--from", dest="start", type=int, default=0)
    p.add_argument("--to", type=int, required=True)
    p.add_argument("--a", dest="a_shift", action="store_true",
                   help="print the shifted summand sequence a_k instead")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_seq)

    p = sub.add_parser("rep", help="integer representations")
    p.add_argument("mode", choices=["greedy", "far", "tri"])
    p.add_argument("--q", type=int, required=True)
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_rep)

    p = sub.add_parser("comp", help="compositions")
    p.add_argument("mode", choices=["count", "list", "macmahon", "conjugate", "sills", "sills-inv"])
    p.add_argument("--n", type=int, help="target integer for count/list")
    p.add_argument("--parts", help="constraint: set:1,3 | set:1x2 | mod:3:1,2 | min:3 | mod:2:1!1")
    p.add_argument("--q", type=int, default=2, help="q for the Sills maps")
    p.add_argument("--bound", type=int, default=compositions.DEFAULT_ENUMERATION_BOUND)
    p.add_argument("composition", nargs="?", help="comma-separated parts for the map modes")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_comp)

    p = sub.add_parser("id", help="identity verifiers and constants")
    p.add_argument("mode", choices=["verify", "cA", "coincide"])
    p.add_argument("--which", choices=["3", "4", "5", "footnote"], default="3")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--nmax", type=int, default=40)
    p.add_argument("--digits", type=int, default=6)
    p.add_argument("--bound", type=int, default=10**6)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_id)

    p = sub.add_parser("nim", help="the generalized Fibonacci Nim engine")
    p.add_argument("mode", choices=["solve", "hint", "play"])
    p.add_argument("--q", type=int, required=True, choices=[1, 2, 3])
    p.add_argument("--variant", choices=["standard", "modified"], default="standard")
    p.add_argument("--n", type=int, default=100, help="solve up to this pile size")
    p.add_argument("--beans", type=int, default=47)
    p.add_argument("--last-take", type=int, default=None,
                   help="previous opponent take for hint (omit on the first move)")
    p.add_argument("--engine-first", action="store_true",
                   help="play: engine takes the opening move")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_nim)

    p = sub.add_parser("beatty", help="certified Beatty sequences")
    p.add_argument("mode", choices=["pair", "word", "check"])
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, default=20)
    p.add_argument("--word", default="a")
    p.add_argument("--nmax", type=int, default=2000)
    p.add_argument("--N", type=int, default=10**4)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_beatty)

    p = sub.add_parser("analog", help="Padovan/tribonacci composition-count identities")
    p.add_argument("mode", choices=["verify", "probe"])
    p.add_argument("--which", choices=["padovan", "tribonacci"], default="padovan")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--nmax", type=int, default=50)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_analog)

    p = sub.add_parser("serve", help="run the Nim game HTTP service")
    p.add_argument("--port", type=int, default=8717)
    p.add_argument("--bind", default="127.0.0.1")
    p.add_argument("--persist", default=None, help="append-only JSONL event log for replay")
    p.add_argument("--engine-first", action="store_true",
                   help="engine takes the first move by default")
    p.add_argument("--ttl", type=int, default=3600, help="idle session lifetime, seconds")
    p.add_argument("--cors-origin", default="*")
    p.set_defaults(func=_cmd_serve)

    return parser


def run_cli(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, beatty.RefinementBudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
