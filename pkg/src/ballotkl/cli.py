"""Command-line interface: ``ballotkl {poly,table,verify,render}``.

Exit status is 0 on success, 1 when a verification fails or routes
disagree, and 2 on bad input.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from .ballot import enumerate_conf, q_polynomial
from .hecke import p_polynomial
from .laurent import CASE_A, Case, Laurent, case_b
from .linkpattern import p_minus_A, p_minus_B
from .render import (
    FORMATS as FIG_FORMATS, render_configuration, render_diagram,
    render_link_pattern, render_tree,
)
from .strings import PLUS, all_strings, bruhat_leq, check_string, parse_sign, sign_str
from .tree import build_tree, capacities, r_polynomial
from .verify import SUITES, run_suite

MAX_N_ENV = "BALLOTKL_MAX_N"
DEFAULT_MAX_N = 8
ALGOS = ("ballot", "linkpattern", "hecke", "tree")


class UsageError(Exception):
    pass


def max_n() -> int:
    raw = os.environ.get(MAX_N_ENV)
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{MAX_N_ENV} must be an integer, got {raw!r}") from None


def _check_cap(n: int) -> None:
    cap = max_n()
    if n > cap:
        raise UsageError(f"N={n} exceeds the safety cap {cap} (set {MAX_N_ENV} to raise it)")
    if n < 1:
        raise UsageError("N must be at least 1")


def _case(args) -> Case:
    if args.case == "A":
        if args.m is not None:
            raise UsageError("--m only applies to case B")
        return CASE_A
    if args.m is None:
        raise UsageError("case B needs --m")
    if args.m < 1:
        raise UsageError("--m must be a positive integer")
    return case_b(args.m)


def route(algo: str, alpha: str, beta: str, eps: int, case: Case) -> Laurent | None:
    """P^eps_{alpha,beta} by one algorithm, or None if it does not cover eps."""
    if algo == "hecke":
        return p_polynomial(alpha, beta, eps, case)
    if algo == "ballot":
        return q_polynomial(alpha, beta, eps, "I" if eps == PLUS else "II", case)
    if algo == "tree":
        return r_polynomial(alpha, beta, case) if eps == PLUS else None
    if algo == "linkpattern":
        if eps == PLUS:
            return None
        return p_minus_A(alpha, beta) if case.kind == "A" else p_minus_B(alpha, beta, case.m)
    raise UsageError(f"unknown algorithm {algo!r}")


def cmd_poly(args) -> int:
    case = _case(args)
    eps = parse_sign(args.eps)
    alpha, beta = args.alpha, args.beta
    for s in (alpha, beta):
        try:
            check_string(s, args.n)
        except ValueError as e:
            raise UsageError(str(e)) from None
    if len(alpha) != len(beta):
        raise UsageError("strings must have the same length")
    _check_cap(len(alpha))
    if not bruhat_leq(alpha, beta, eps):
        raise UsageError(f"{alpha} is not below {beta} for eps={sign_str(eps)}")
    algos = ALGOS if args.algo == "all" else (args.algo,)
    results = {a: route(a, alpha, beta, eps, case) for a in algos}
    results = {a: p for a, p in results.items() if p is not None}
    if not results:
        raise UsageError(f"algorithm {args.algo} does not cover eps={sign_str(eps)}")
    agree = len({p for p in results.values()}) == 1
    if args.format == "json":
        doc = {"alpha": alpha, "beta": beta, "eps": sign_str(eps), "case": str(case),
               "results": {a: p.to_json() for a, p in results.items()}}
        if args.algo == "all":
            doc["verdict"] = "AGREE" if agree else "DISAGREE"
        print(json.dumps(doc))
    elif args.algo == "all":
        for a, p in results.items():
            print(f"{a}: {p}")
        print("AGREE" if agree else "DISAGREE")
    else:
        print(next(iter(results.values())))
    return 0 if agree else 1


def table(n: int, eps: int, case: Case, algo: str = "hecke") -> tuple[list[str], list[list[Laurent]]]:
    """Rows alpha, columns beta, both in lexicographic order with 1 < 2."""
    strings = all_strings(n)
    rows = []
    for a in strings:
        row = []
        for b in strings:
            p = route(algo, a, b, eps, case) if bruhat_leq(a, b, eps) else Laurent()
            if p is None:
                raise UsageError(f"algorithm {algo} does not cover eps={sign_str(eps)}")
            row.append(p)
        rows.append(row)
    return strings, rows


def cmd_table(args) -> int:
    case = _case(args)
    eps = parse_sign(args.eps)
    _check_cap(args.n)
    if args.algo == "all":
        raise UsageError("table takes a single algorithm")
    strings, rows = table(args.n, eps, case, args.algo)
    if args.format == "json":
        print(json.dumps({"n": args.n, "case": str(case), "eps": sign_str(eps),
                          "algorithm": args.algo, "order": strings,
                          "matrix": [[p.to_json() for p in r] for r in rows]}))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["alpha\\beta"] + strings)
        for a, r in zip(strings, rows):
            w.writerow([a] + [str(p) for p in r])
        sys.stdout.write(buf.getvalue())
    elif args.format == "text":
        cells = [[str(p) for p in r] for r in rows]
        width = max([len(s) for s in strings] + [len(c) for r in cells for c in r])
        print(" " * len(strings[0]) + " | " + " | ".join(s.ljust(width) for s in strings))
        for a, r in zip(strings, cells):
            print(a + " | " + " | ".join(c.ljust(width) for c in r))
    else:
        raise UsageError(f"table does not support format {args.format!r}")
    return 0


def cmd_verify(args) -> int:
    case = _case(args)
    _check_cap(args.n)
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    rep = run_suite(args.suite, args.n, case)
    if args.format == "json":
        print(json.dumps(rep.to_json()))
    else:
        print(rep.summary())
        for v in rep.violations[: args.show]:
            print("  counterexample:", " ".join(str(x) for x in v))
    return 0 if rep.ok else 1


def _write(text: str, out: str | None, name: str) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    path = Path(out)
    if path.suffix:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
    else:
        path.mkdir(parents=True, exist_ok=True)
        (path / name).write_text(text)


def cmd_render(args) -> int:
    fmt = args.format
    if fmt not in FIG_FORMATS:
        raise UsageError(f"render supports {FIG_FORMATS}, not {fmt!r}")
    eps = parse_sign(args.eps)
    strings = args.strings
    try:
        for s in strings:
            check_string(s)
    except ValueError as e:
        raise UsageError(str(e)) from None
    kind = args.object
    if kind == "configurations":
        _check_cap(max(len(s) for s in strings))
    if kind == "diagram":
        if len(strings) != 1:
            raise UsageError("render diagram takes one string")
        _write(render_diagram(strings[0], eps, fmt), args.out, f"diagram_{strings[0]}.{fmt}")
    elif kind == "configurations":
        if len(strings) != 2:
            raise UsageError("render configurations takes alpha and beta")
        alpha, beta = strings
        if not bruhat_leq(alpha, beta, eps):
            raise UsageError(f"{alpha} is not below {beta}")
        rule = args.rule or ("I" if eps == PLUS else "II")
        confs = enumerate_conf(alpha, beta, eps, rule, _case(args))
        for k, conf in enumerate(sorted(confs, key=lambda c: sorted(c.strips)), start=1):
            _write(render_configuration(conf, alpha, beta, eps, fmt), args.out,
                   f"conf_{alpha}_{beta}_{k}.{fmt}")
        print(f"{len(confs)} configurations", file=sys.stderr)
    elif kind == "linkpattern":
        if len(strings) != 1:
            raise UsageError("render linkpattern takes one string")
        _write(render_link_pattern(strings[0], _case(args), fmt), args.out,
               f"linkpattern_{strings[0]}.{fmt}")
    elif kind == "tree":
        case = _case(args)
        if len(strings) == 1:
            tree = build_tree(strings[0], case)
        elif len(strings) == 2:
            alpha, beta = strings
            if not bruhat_leq(alpha, beta):
                raise UsageError(f"{alpha} is not below {beta}")
            tree = capacities(beta, alpha, case)
        else:
            raise UsageError("render tree takes beta or alpha beta")
        labels = None
        if args.labels:
            labels = [int(x) for x in args.labels.split(",")]
            if len(labels) != len(tree):
                raise UsageError(f"the tree has {len(tree)} edges, got {len(labels)} labels")
        _write(render_tree(tree, labels, fmt), args.out, f"tree_{strings[-1]}.{fmt}")
    else:
        raise UsageError(f"unknown object {kind!r}")
    return 0


def _common(p: argparse.ArgumentParser, n_required: bool = False) -> None:
    p.add_argument("--n", type=int, required=n_required, help="string length N")
    p.add_argument("--case", choices=("A", "B"), default="A")
    p.add_argument("--m", type=int, default=None, help="tN = t^m in case B")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ballotkl", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="one polynomial P_{alpha,beta}")
    _common(p)
    p.add_argument("--eps", default="+")
    p.add_argument("--algo", choices=ALGOS + ("all",), default="hecke")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("alpha")
    p.add_argument("beta")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("table", help="the full matrix of P over all strings of length N")
    _common(p, n_required=True)
    p.add_argument("--eps", default="+")
    p.add_argument("--algo", choices=ALGOS, default="hecke")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run an exhaustive identity check")
    p.add_argument("suite", help=", ".join(SUITES))
    _common(p)
    p.set_defaults(n=4)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--show", type=int, default=10, help="counterexamples to print")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw a diagram, tilings, a link pattern or a tree")
    p.add_argument("object", choices=("diagram", "configurations", "linkpattern", "tree"))
    p.add_argument("strings", nargs="+")
    p.add_argument("--case", choices=("A", "B"), default="A")
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--eps", default="+")
    p.add_argument("--rule", choices=("I", "II"), default=None)
    p.add_argument("--labels", default=None, help="comma-separated edge labels for a tree")
    p.add_argument("--format", choices=FIG_FORMATS, default="tikz")
    p.add_argument("--out", default=None, help="file, or directory for several figures")
    p.set_defaults(func=cmd_render)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
