"""Command-line surface: generate graphs, run deciders, emit witnesses, census.

Exit codes are a total contract: 0 = yes/success, 1 = no, 2 = invalid input
or error.  The oracle node budget can be overridden with the environment
variable ACCGRAPH_NODE_BUDGET.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import oracle
from .census import run_census
from .deciders import (
    accordion_is_bipartite,
    accordion_is_circulant,
    accordions_isomorphic,
    circulant_is_bipartite,
    circulant_is_connected,
    circulant_iso_accordion,
    circulant_iso_torus,
    find_accordion_param,
    torus_parameters,
)
from .errors import (
    BudgetExceededError,
    InvalidParameterError,
    InvariantViolationError,
    NotApplicableError,
)
from .graphs import (
    AccordionParams,
    accordion,
    cartesian_product,
    circulant,
    circulant_graph,
    cycle_graph,
    path_graph,
)
from .modarith import gcd
from .serialize import graph_from_json, graph_to_dot, graph_to_edgelist, graph_to_json, witness_to_json
from .witnesses import (
    accordion_witness,
    circulant_accordion_witness,
    verify_witness,
)

ENV_NODE_BUDGET = "ACCGRAPH_NODE_BUDGET"

__all__ = ["main", "run", "build_parser", "ENV_NODE_BUDGET"]


def _node_budget() -> int | None:
    raw = os.environ.get(ENV_NODE_BUDGET)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise InvalidParameterError(f"{ENV_NODE_BUDGET} must be an integer, got {raw!r}")


def _require(args: argparse.Namespace, names: list[str], context: str) -> None:
    missing = [f"--{name.replace('_', '-')}" for name in names if getattr(args, name) is None]
    if missing:
        raise InvalidParameterError(f"{context} requires {', '.join(missing)}")


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "accordion":
        _require(args, ["n", "k"], "gen accordion")
        g = accordion(args.n, args.k)
    elif args.family == "circulant":
        _require(args, ["n", "a", "b"], "gen circulant")
        g = circulant(args.n, args.a, args.b)
    elif args.family == "torus":
        _require(args, ["n1", "n2"], "gen torus")
        g = cartesian_product(cycle_graph(args.n1), cycle_graph(args.n2))
    else:  # cyl
        _require(args, ["n1", "n2"], "gen cyl")
        g = cartesian_product(cycle_graph(args.n1), path_graph(args.n2))
    renderer = {"json": graph_to_json, "dot": graph_to_dot, "edgelist": graph_to_edgelist}
    sys.stdout.write(renderer[args.format](g))
    return 0


def _print_witness(source, target, vm, direction: str) -> None:
    # re-verify before printing; a failed self-check must never emit output
    if not verify_witness(source, target, vm):
        raise InvariantViolationError("witness failed re-verification before printing")
    print(f"witness-direction: {direction}")
    sys.stdout.write("witness: " + witness_to_json(source, target, vm))


def _decide_acc_acc(args: argparse.Namespace) -> int:
    _require(args, ["n", "k1", "k2"], "decide acc-acc")
    n, k1, k2 = args.n, args.k1, args.k2
    v = accordions_isomorphic(n, k1, k2)
    print("kind: acc-acc")
    print(f"n: {n}")
    print(f"k1: {k1}")
    print(f"k2: {k2}")
    print(f"gcd(n,k1): {v.gcd1}")
    print(f"gcd(n,k2): {v.gcd2}")
    if v.half_product is not None:
        print(f"half-product mod n: {v.half_product % n}")
    print(f"branch: {v.branch}")
    print(f"isomorphic: {_yesno(v.isomorphic)}")
    if args.witness and v.isomorphic:
        wit = accordion_witness(n, k1, k2)
        _print_witness(accordion(n, k2), accordion(n, k1), wit, f"A[{n},{k2}] -> A[{n},{k1}]")
    return 0 if v.isomorphic else 1


def _decide_ci_acc(args: argparse.Namespace) -> int:
    _require(args, ["n", "a", "b"], "decide ci-acc")
    n, a, b = args.n, args.a, args.b
    k = args.k
    if k is None:
        k = find_accordion_param(n, a, b)
        if k is None:
            print("kind: ci-acc")
            print(f"n: {n}")
            print("matched-k: none")
            print("isomorphic: no")
            return 1
    v = circulant_iso_accordion(n, a, b, k)
    two_n = 2 * n
    print("kind: ci-acc")
    print(f"n: {n}")
    print(f"a: {v.a}")
    print(f"b: {v.b}")
    print(f"matched-k: {v.k}")
    print(f"regime: {v.regime}")
    print(f"connected: {_yesno(v.connected)}")
    print(f"gcd(2n,a): {gcd(two_n, v.a)}")
    print(f"gcd(2n,b): {gcd(two_n, v.b)}")
    if v.regime == "bipartite":
        print(f"a+b: {v.a + v.b}")
    else:
        print(f"oriented-swap: {_yesno(v.swapped)}")
        print(f"gcd(n,k): {v.q}")
        print(f"steps: {v.steps}")
        print(f"sign: {'+2' if v.sign == 1 else '-2' if v.sign == -1 else 'none'}")
    print(f"isomorphic: {_yesno(v.isomorphic)}")
    if args.witness and v.isomorphic:
        wit = circulant_accordion_witness(n, a, b, k)
        _print_witness(
            circulant(n, a, b), accordion(n, k), wit,
            f"Ci[{two_n},{{{v.a},{v.b}}}] -> A[{n},{k}]",
        )
    return 0 if v.isomorphic else 1


def _decide_ci_torus(args: argparse.Namespace) -> int:
    _require(args, ["nprime", "a1", "a2"], "decide ci-torus")
    if (args.n1 is None) != (args.n2 is None):
        raise InvalidParameterError("--n1 and --n2 must be given together")
    m, a1, a2 = args.nprime, args.a1, args.a2
    print("kind: ci-torus")
    print(f"nprime: {m}")
    print(f"a1: {a1}")
    print(f"a2: {a2}")
    if args.n1 is None:
        found = torus_parameters(m, a1, a2)
        if found is None:
            print("factors: none")
            print("isomorphic: no")
            return 1
        n1, n2 = found
        print(f"factors: {n1} x {n2}")
    else:
        n1, n2 = args.n1, args.n2
    ok = circulant_iso_torus(m, a1, a2, n1, n2)
    print(f"gcd(nprime,a1): {gcd(m, a1 % m)}")
    print(f"gcd(nprime,a2): {gcd(m, a2 % m)}")
    print(f"gcd(n1,n2): {gcd(n1, n2)}")
    print(f"isomorphic: {_yesno(ok)}")
    if args.witness and ok:
        ci = circulant_graph(m, (a1, a2))
        torus = cartesian_product(cycle_graph(n1), cycle_graph(n2))
        vm = oracle.are_isomorphic(ci, torus, _node_budget())
        if vm is None:
            raise InvariantViolationError("decider says isomorphic but the search found no map")
        _print_witness(ci, torus, vm, f"Ci[{m},{{{a1},{a2}}}] -> C{n1} x C{n2}")
    return 0 if ok else 1


def _decide_acc_circulant(args: argparse.Namespace) -> int:
    _require(args, ["n", "k"], "decide acc-circulant")
    n, k = args.n, args.k
    ok = accordion_is_circulant(n, k)
    if k % 2 == 1:
        clause = "k-odd"
    elif n % 2 == 1:
        clause = "k-even-n-odd"
    elif k == 2:
        clause = "k-2-n-even"
    else:
        clause = "none"
    print("kind: acc-circulant")
    print(f"n: {n}")
    print(f"k: {k}")
    print(f"clause: {clause}")
    print(f"circulant: {_yesno(ok)}")
    return 0 if ok else 1


def _decide_predicate(args: argparse.Namespace) -> int:
    _require(args, ["family"], f"decide {args.kind}")
    if args.family == "accordion":
        _require(args, ["n", "k"], f"decide {args.kind} --family accordion")
        if args.kind == "bipartite":
            ok = accordion_is_bipartite(args.n, args.k)
        else:  # accordion graphs are always connected
            AccordionParams(args.n, args.k)
            ok = True
    else:
        _require(args, ["n", "a", "b"], f"decide {args.kind} --family circulant")
        if args.kind == "bipartite":
            ok = circulant_is_bipartite(args.n, args.a, args.b)
        else:
            ok = circulant_is_connected(args.n, args.a, args.b)
    print(f"kind: {args.kind}")
    print(f"family: {args.family}")
    print(f"{args.kind}: {_yesno(ok)}")
    return 0 if ok else 1


def cmd_decide(args: argparse.Namespace) -> int:
    if args.witness and args.kind not in ("acc-acc", "ci-acc", "ci-torus"):
        raise InvalidParameterError(f"--witness is not supported for kind {args.kind}")
    dispatch = {
        "acc-acc": _decide_acc_acc,
        "ci-acc": _decide_ci_acc,
        "ci-torus": _decide_ci_torus,
        "acc-circulant": _decide_acc_circulant,
        "bipartite": _decide_predicate,
        "connected": _decide_predicate,
    }
    return dispatch[args.kind](args)


def cmd_oracle(args: argparse.Namespace) -> int:
    g = graph_from_json(Path(args.file_g).read_text())
    h = graph_from_json(Path(args.file_h).read_text())
    vm = oracle.are_isomorphic(g, h, _node_budget())
    if vm is None:
        print("isomorphic: no")
        return 1
    print("isomorphic: yes")
    sys.stdout.write(witness_to_json(g, h, vm))
    return 0


def cmd_census(args: argparse.Namespace) -> int:
    report = run_census(
        max_n=args.max_n,
        max_torus=args.max_torus,
        seed=args.seed,
        node_budget=_node_budget(),
    )
    out = Path(args.out)
    with out.open("w") as handle:
        for row in report.rows:
            handle.write(json.dumps(row.to_dict(), separators=(",", ":")) + "\n")
        handle.write(json.dumps({"summary": report.summary}, separators=(",", ":")) + "\n")
    summary = report.summary
    print(f"rows: {summary['rows']}")
    print(f"isomorphic rows: {summary['isomorphic_rows']}")
    print(f"disagreements: {len(summary['disagreements'])}")
    for bad in summary["disagreements"]:
        print(f"  DISAGREE {bad}")
    print(f"witness failures: {len(summary['witness_failures'])}")
    for bad in summary["witness_failures"]:
        print(f"  WITNESS-FAIL {bad}")
    print(f"elapsed: {summary['elapsed']}s")
    print(f"report: {out}")
    print(f"result: {'PASS' if report.ok else 'FAIL'}")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="accgraph",
        description="Accordion and quartic circulant graphs: constructors, "
        "isomorphism deciders, witnesses, and a decider-vs-oracle census.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="construct a family graph and print it")
    gen.add_argument("family", choices=["accordion", "circulant", "torus", "cyl"])
    gen.add_argument("--n", type=int)
    gen.add_argument("--k", type=int)
    gen.add_argument("--a", type=int)
    gen.add_argument("--b", type=int)
    gen.add_argument("--n1", type=int)
    gen.add_argument("--n2", type=int)
    gen.add_argument("--format", choices=["edgelist", "dot", "json"], default="json")
    gen.set_defaults(func=cmd_gen)

    decide = sub.add_parser("decide", help="run an isomorphism or structure decider")
    decide.add_argument(
        "kind",
        choices=["acc-acc", "ci-acc", "ci-torus", "acc-circulant", "bipartite", "connected"],
    )
    decide.add_argument("--n", type=int)
    decide.add_argument("--k", type=int)
    decide.add_argument("--k1", type=int)
    decide.add_argument("--k2", type=int)
    decide.add_argument("--a", type=int)
    decide.add_argument("--b", type=int)
    decide.add_argument("--nprime", type=int)
    decide.add_argument("--a1", type=int)
    decide.add_argument("--a2", type=int)
    decide.add_argument("--n1", type=int)
    decide.add_argument("--n2", type=int)
    decide.add_argument("--family", choices=["accordion", "circulant"])
    decide.add_argument("--witness", action="store_true")
    decide.set_defaults(func=cmd_decide)

    orc = sub.add_parser("oracle", help="brute-force isomorphism test on two graph files")
    orc.add_argument("file_g")
    orc.add_argument("file_h")
    orc.set_defaults(func=cmd_oracle)

    census = sub.add_parser("census", help="cross-validate every decider against the oracle")
    census.add_argument("--max-n", type=int, default=14)
    census.add_argument("--max-torus", type=int, default=36)
    census.add_argument("--seed", type=int, default=0)
    census.add_argument("--out", default="census.jsonl")
    census.set_defaults(func=cmd_census)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (
        InvalidParameterError,
        NotApplicableError,
        BudgetExceededError,
        InvariantViolationError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())
