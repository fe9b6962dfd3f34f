"""Command-line interface.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error.
Atom names given on the command line are bound to fresh atoms for the
duration of one invocation.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import analyzer, cardinal, counting, fixpoint, oracle
from .atoms import Labels
from .fscore import parse_atomset
from .fsfun import is_injective, is_surjective, parse_fun

GRAMMAR = """\
expression grammar:
  e ::= A | Nat | Tfin | Tdelta | e x e | e + e | e^n
      | Pfin(e) | Pcofin(e) | Pus(e) | Pfs(e) | Fun(A, e)
  'x' binds tighter than '+'; parentheses group.
map grammar:
  M ::= id | cup{a,b} | img(fun{a->b; tail=id}) | perm((a b)) | (M | M) | (M ; M)"""


class UsageError(Exception):
    pass


def _emit(args, data: Any, text: str) -> None:
    if args.json:
        print(json.dumps(data, sort_keys=True, ensure_ascii=False))
    else:
        print(text)


def _support(text: str | None, labels: Labels) -> list:
    if not text:
        return []
    names = [t.strip() for t in text.split(",") if t.strip()]
    if len(set(names)) != len(names):
        raise UsageError(f"repeated atom name in --support {text!r}")
    return labels.atoms(names)


def _kind(kind: str | None) -> str:
    if kind not in counting.FORMULAS:
        raise UsageError(f"unknown kind {kind!r}; choose from {', '.join(counting.FORMULAS)}")
    return kind


def _arity(kind: str, arity: int | None) -> int | None:
    if kind == "funATuple":
        return 1 if arity is None else arity
    return None


def cmd_analyze(args) -> int:
    try:
        verdict = analyzer.analyze(analyzer.parse_expr(args.expr))
    except analyzer.ParseError as exc:
        raise UsageError(f"{exc}\n{GRAMMAR}") from exc
    _emit(args, verdict.to_dict(args.first_k), verdict.report(args.first_k))
    return 0


def cmd_count(args) -> int:
    labels = Labels()
    if not args.cross_check:
        kind = _kind(args.kind)
        if args.support_size is None:
            raise UsageError("count needs --support-size (or --cross-check)")
        try:
            n = counting.count_supported(kind, args.support_size, _arity(kind, args.arity))
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        data = {"kind": kind, "support_size": args.support_size, "count": n,
                "provenance": counting.FORMULAS[kind].provenance}
        _emit(args, data, str(n))
        return 0
    S = _support(args.support, labels)
    if args.universe is None:
        raise UsageError("--cross-check needs --universe")
    kinds = [_kind(args.kind)] if args.kind else list(counting.FORMULAS)
    reports, skipped = [], []
    for kind in kinds:
        need = max(2 * len(S) + 2, oracle.min_universe(kind, len(S)))
        if args.universe < need:
            if args.kind:
                raise UsageError(f"universe {args.universe} below threshold {need} for {kind}")
            skipped.append(kind)
            continue
        reports.append(counting.cross_check(kind, S, args.universe, _arity(kind, args.arity)))
    text = "\n".join([str(r) for r in reports] + [f"{k}: skipped (universe too small)" for k in skipped])
    _emit(args, {"reports": [r.to_dict() for r in reports], "skipped": skipped}, text)
    return 0 if all(r.ok for r in reports) else 1


def cmd_enumerate(args) -> int:
    labels = Labels()
    kind = _kind(args.kind)
    S = _support(args.support, labels)
    elems = counting.symbolic_enumeration(kind, S, _arity(kind, args.arity))
    shown = [analyzer.show(x) for x in elems]
    _emit(args, {"kind": kind, "support": [str(a) for a in S], "count": len(elems),
                 "elements": shown},
          "\n".join(shown + [f"({len(elems)} elements)"]))
    return 0


def cmd_fixpoint(args) -> int:
    labels = Labels()
    try:
        M = fixpoint.parse_map(args.map, labels)
        start = parse_atomset(args.start, labels) if args.start else None
    except ValueError as exc:
        raise UsageError(f"{exc}\n{GRAMMAR}") from exc
    try:
        if start is None:
            result = fixpoint.lfp_from_empty(M, args.max_iter)
        else:
            if not start.is_finite:
                raise UsageError("--from must be a finite set")
            result = fixpoint.iterate_to_fix(M, start, args.max_iter)
    except fixpoint.FixpointError as exc:
        _emit(args, {"error": str(exc), "chain": [str(z) for z in exc.chain]}, f"error: {exc}")
        return 1
    data = result.to_dict()
    data["map"] = str(M)
    data["support"] = sorted(str(a) for a in fixpoint.support_of_map(M))
    text = "\n".join([f"map {M}", "chain: " + " -> ".join(map(str, result.chain)),
                      f"fixpoint {result.fixpoint} after {result.steps} steps"])
    _emit(args, data, text)
    return 0


def cmd_check_fn(args) -> int:
    labels = Labels()
    try:
        f = parse_fun(args.fun, labels)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    inj, surj = is_injective(f), is_surjective(f)
    data = {"function": str(f.normalized), "support": sorted(str(a) for a in f.support()),
            "injective": inj, "surjective": surj}
    text = "\n".join([f"normal form {f.normalized}",
                      "support {" + ",".join(data["support"]) + "}",
                      f"injective {inj}", f"surjective {surj}"])
    _emit(args, data, text)
    return 0 if inj == surj else 1


def cmd_oracle(args) -> int:
    labels = Labels()
    S = _support(args.support, labels)
    if args.universe is None:
        raise UsageError("oracle needs --universe")
    try:
        model = oracle.FiniteModel.of_size(args.universe, include=S)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.total_order:
        try:
            ok = oracle.no_total_order_on_atoms(model, S)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        _emit(args, {"universe": args.universe, "support": [str(a) for a in S],
                     "no_supported_total_order": ok},
              f"no S-supported total order on {args.universe} atoms: {ok}")
        return 0 if ok else 1
    kind = _kind(args.kind)
    try:
        elems = oracle.enumerate_supported(model, kind, S, _arity(kind, args.arity))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    shown = sorted(analyzer.show(x) for x in elems)
    _emit(args, {"kind": kind, "universe": args.universe, "support": [str(a) for a in S],
                 "count": len(elems), "elements": shown},
          "\n".join(shown + [f"({len(elems)} elements)"]))
    return 0


def cmd_check_card(args) -> int:
    try:
        relation, w = cardinal.named_witness(args.witness)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    report = cardinal.relation_check(relation, w, args.samples, args.seed)
    _emit(args, report.to_dict(), str(report))
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="nomset", description="Finitely supported sets toolkit",
                                epilog=GRAMMAR, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="verb", required=True)

    a = sub.add_parser("analyze", parents=[common], help="classify a set construction")
    a.add_argument("expr")
    a.add_argument("--first-k", type=int, default=5)
    a.set_defaults(run=cmd_analyze)

    c = sub.add_parser("count", parents=[common], help="count S-supported elements")
    c.add_argument("--kind")
    c.add_argument("--support-size", type=int)
    c.add_argument("--arity", type=int)
    c.add_argument("--cross-check", action="store_true")
    c.add_argument("--support")
    c.add_argument("--universe", type=int)
    c.set_defaults(run=cmd_count)

    e = sub.add_parser("enumerate", parents=[common], help="list S-supported elements")
    e.add_argument("--kind", required=True)
    e.add_argument("--support", default="")
    e.add_argument("--arity", type=int)
    e.set_defaults(run=cmd_enumerate)

    f = sub.add_parser("fixpoint", parents=[common], help="iterate a monotone map")
    f.add_argument("--map", required=True)
    f.add_argument("--from", dest="start")
    f.add_argument("--max-iter", type=int)
    f.set_defaults(run=cmd_fixpoint)

    g = sub.add_parser("check-fn", parents=[common], help="inspect a function A -> A")
    g.add_argument("fun")
    g.set_defaults(run=cmd_check_fn)

    o = sub.add_parser("oracle", parents=[common], help="brute-force finite model")
    o.add_argument("--kind")
    o.add_argument("--support", default="")
    o.add_argument("--universe", type=int)
    o.add_argument("--arity", type=int)
    o.add_argument("--total-order", action="store_true",
                   help="check that no total order on the universe is S-supported")
    o.set_defaults(run=cmd_oracle)

    k = sub.add_parser("check-card", parents=[common], help="test a cardinality witness")
    k.add_argument("--witness", required=True, help=", ".join(cardinal.WITNESS_NAMES))
    k.add_argument("--samples", type=int, default=50)
    k.set_defaults(run=cmd_check_card)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if exc.code == 2:
            print(GRAMMAR, file=sys.stderr)
        return int(exc.code or 0)
    try:
        return args.run(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
