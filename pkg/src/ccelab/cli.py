"""Command-line front end.

Exit codes: 0 success / property verified, 1 negative result (condition
violated, recognition failed, counterexample found, dk above the searched
bound), 2 usage or parse error, 3 I/O failure, 4 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional

from .caps import ResourceCapError
from .conditions import ConditionKind, satisfies_condition
from .dk import double_competition_number
from .enumeration import (
    explore_open_problem,
    verify_theorem_acyclic,
    verify_theorem_kr,
    verify_theorem_loopless,
    verify_theorem_main0,
    verify_theorem_props,
)
from .fileformats import (
    ParseError,
    digraph_to_json,
    dot_derived,
    dumps,
    graph_to_json,
    intervals_to_json,
    parse_digraph,
    parse_graph,
    semiorder_to_json,
    serialize_digraph,
    serialize_graph,
    serialize_intervals,
    serialize_semiorder,
)
from .graphs import (
    SimpleGraph,
    cce_graph,
    competition_graph,
    decompose_kr_iq,
    niche_graph,
)
from .orders import recognize_interval_order, recognize_semiorder
from .witnesses import witness_loopless, witness_semiorder

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_CAP = 4

_CONDITIONS = {
    "C": ConditionKind.C,
    "Cp": ConditionKind.C_PRIME,
    "Cs": ConditionKind.C_STAR,
    "Csp": ConditionKind.C_STAR_PRIME,
}

_DERIVES = {
    "competition": competition_graph,
    "cce": cce_graph,
    "niche": niche_graph,
}


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _workers(args) -> int:
    threads = getattr(args, "threads", 1)
    if threads and threads > 0:
        return threads
    return os.cpu_count() or 1


def _condition_label(flag: str, p: int) -> str:
    return {
        "C": f"C({p})",
        "Cp": f"C'({p})",
        "Cs": f"C*({p})",
        "Csp": f"C*'({p})",
    }[flag]


def _shape_label(g: SimpleGraph) -> str:
    shape = decompose_kr_iq(g)
    if shape is not None:
        if shape.r == 0:
            return f"I_{shape.q}"
        if shape.q == 0:
            return f"K_{shape.r}"
        return f"K_{shape.r} u I_{shape.q}"
    return "edges " + " ".join(f"{u}-{v}" for u, v in sorted(g.edges))


# -- subcommand handlers ---------------------------------------------------------


def _cmd_derive(args) -> int:
    d = parse_digraph(_read(args.infile))
    g = _DERIVES[args.kind](d)
    _write(args.out, serialize_graph(g))
    if args.dot:
        _write(args.dot, dot_derived(d, g, args.kind))
    if args.json:
        sys.stdout.write(
            dumps({"kind": args.kind, "digraph": digraph_to_json(d),
                   "derived": graph_to_json(g)})
        )
    return EXIT_OK


def _cmd_check(args) -> int:
    d = parse_digraph(_read(args.infile))
    report = satisfies_condition(d, _CONDITIONS[args.condition], args.p)
    label = _condition_label(args.condition, args.p)
    if args.json:
        sys.stdout.write(
            dumps({
                "condition": args.condition,
                "p": args.p,
                "satisfied": report.satisfied,
                "witness": sorted(report.violating_set)
                if report.violating_set is not None else None,
            })
        )
    elif report.satisfied:
        print(f"{label}: satisfied")
    else:
        witness = "{" + ", ".join(map(str, sorted(report.violating_set))) + "}"
        print(f"{label}: violated by {witness}")
    return EXIT_OK if report.satisfied else EXIT_NEGATIVE


def _cmd_recognize(args) -> int:
    d = parse_digraph(_read(args.infile))
    if args.model == "semiorder":
        rep = recognize_semiorder(d)
        text = serialize_semiorder(rep) if rep else None
        payload = semiorder_to_json(rep) if rep else None
    else:
        rep = recognize_interval_order(d)
        text = serialize_intervals(rep) if rep else None
        payload = intervals_to_json(rep) if rep else None
    if rep is None:
        if args.json:
            sys.stdout.write(dumps({"model": args.model, "present": False}))
        else:
            print(f"no {args.model} representation exists")
        return EXIT_NEGATIVE
    if args.json:
        sys.stdout.write(dumps({"model": args.model, "present": True, **payload}))
    if args.out:
        _write(args.out, text)
    elif not args.json:
        sys.stdout.write(text)
    return EXIT_OK


def _parse_shape(text: str):
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected --shape r,q, got {text!r}")
    return int(parts[0]), int(parts[1])


def _cmd_witness(args) -> int:
    r, q = _parse_shape(args.shape)
    if args.model == "loopless":
        d = witness_loopless(r, q)
        text = serialize_digraph(d)
        payload = {"model": "loopless", "shape": [r, q], **digraph_to_json(d)}
    else:
        rep = witness_semiorder(r, q)
        text = serialize_semiorder(rep)
        payload = {"model": "semiorder", "shape": [r, q], **semiorder_to_json(rep)}
    if args.json:
        sys.stdout.write(dumps(payload))
    if args.out:
        _write(args.out, text)
    elif not args.json:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_dk(args) -> int:
    g = parse_graph(_read(args.infile))
    result = double_competition_number(g, args.kmax)
    if result is None:
        if args.json:
            sys.stdout.write(dumps({"dk": None, "kmax": args.kmax}))
        else:
            print(f"dk > {args.kmax} (no realization within the searched strata)")
        return EXIT_NEGATIVE
    if args.json:
        sys.stdout.write(
            dumps({"dk": result.k, "witness": digraph_to_json(result.witness)})
        )
    else:
        print(f"dk = {result.k}")
    if args.witness_out:
        _write(args.witness_out, serialize_digraph(result.witness))
    elif not args.json:
        sys.stdout.write(serialize_digraph(result.witness))
    return EXIT_OK


def _cmd_verify(args) -> int:
    workers = _workers(args)
    progress = None
    if args.progress:
        def progress(done: int, total: int) -> None:
            print(f"progress: {done}/{total} chunks", file=sys.stderr)

    theorem = args.theorem
    if theorem == "kr":
        outcome = verify_theorem_kr(args.n, workers=workers)
    elif theorem == "main0":
        outcome = verify_theorem_main0(args.n, workers=workers)
    elif theorem == "loopless":
        outcome = verify_theorem_loopless(
            args.p, args.n, workers=workers, progress=progress
        )
    elif theorem == "acyclic":
        outcome = verify_theorem_acyclic(
            args.p, args.n, workers=workers, progress=progress
        )
    else:
        outcome = verify_theorem_props(args.n, workers=workers, progress=progress)

    payload = {
        "theorem": theorem,
        "n": args.n,
        "p": args.p if theorem in ("loopless", "acyclic") else None,
        "checked": outcome.checked,
        "verified": outcome.verified,
        "counterexample": None,
    }
    if outcome.verified:
        if args.json:
            sys.stdout.write(dumps(payload))
        else:
            print(f"{theorem}: verified ({outcome.checked} digraphs checked)")
        return EXIT_OK
    digraph, tag = outcome.counterexample
    _write(args.report, serialize_digraph(digraph))
    payload["counterexample"] = {"tag": tag, "digraph": digraph_to_json(digraph)}
    if args.json:
        sys.stdout.write(dumps(payload))
    else:
        print(f"{theorem}: counterexample found ({tag}); written to {args.report}")
    return EXIT_NEGATIVE


def _cmd_explore(args) -> int:
    report = explore_open_problem(
        args.problem, args.p, args.n, workers=_workers(args)
    )
    if args.json:
        sections = {
            name: [
                {"graph": graph_to_json(c.graph),
                 "witness": digraph_to_json(c.witness)}
                for c in classes
            ]
            for name, classes in sorted(report.sections.items())
        }
        sys.stdout.write(
            dumps({
                "problem": report.problem,
                "p": report.p,
                "n": report.n,
                "checked": report.checked,
                "sections": sections,
            })
        )
        return EXIT_OK
    print(
        f"problem {report.problem} at p={report.p}, n={report.n}: "
        f"{report.checked} digraphs examined"
    )
    for name, classes in sorted(report.sections.items()):
        print(f"[{name}] {len(classes)} isomorphism classes")
        for c in classes:
            arcs = " ".join(f"{u}->{v}" for u, v in sorted(c.witness.arcs))
            print(f"  {_shape_label(c.graph)}   witness: {arcs or '(no arcs)'}")
    return EXIT_OK


# -- parser ------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ccelab",
        description=(
            "Competition, competition-common-enemy and niche graphs of "
            "digraphs: derived graphs, neighborhood-chain conditions, order "
            "recognition, double competition numbers, and exhaustive "
            "verification sweeps at small vertex counts."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("derive", help="compute a derived graph of a digraph")
    p.add_argument("--kind", choices=sorted(_DERIVES), required=True)
    p.add_argument("--in", dest="infile", required=True, metavar="FILE")
    p.add_argument("--out", required=True, metavar="FILE")
    p.add_argument("--dot", metavar="FILE", help="also write a DOT rendering")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_derive)

    p = sub.add_parser("check", help="check one condition at one level p")
    p.add_argument("--condition", choices=["C", "Cp", "Cs", "Csp"], required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--in", dest="infile", required=True, metavar="FILE")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("recognize", help="find a semiorder or interval representation")
    p.add_argument("--model", choices=["semiorder", "interval"], required=True)
    p.add_argument("--in", dest="infile", required=True, metavar="FILE")
    p.add_argument("--out", metavar="FILE")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_recognize)

    p = sub.add_parser("witness", help="emit a constructive K_r u I_q witness")
    p.add_argument("--shape", required=True, metavar="R,Q")
    p.add_argument("--model", choices=["loopless", "semiorder"], default="loopless")
    p.add_argument("--out", metavar="FILE")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("dk", help="double competition number by exact search")
    p.add_argument("--in", dest="infile", required=True, metavar="FILE")
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--witness-out", metavar="FILE")
    p.add_argument("--threads", type=int, default=0)
    p.add_argument("--fast-nondet", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_dk)

    p = sub.add_parser("verify", help="run a theorem-verification sweep")
    p.add_argument(
        "--theorem",
        choices=["kr", "main0", "loopless", "acyclic", "props"],
        required=True,
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--report", default="counterexample.digraph", metavar="FILE")
    p.add_argument("--threads", type=int, default=0)
    p.add_argument("--fast-nondet", action="store_true")
    p.add_argument("--progress", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("explore", help="survey an open problem's graph classes")
    p.add_argument("--problem", type=int, choices=[1, 2, 3], required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--threads", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_explore)

    return parser


def main(argv: Optional[list] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceCapError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
