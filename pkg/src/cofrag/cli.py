"""Command line front end.

Exit codes: 0 success, 1 a verification or oracle cross-check failed,
2 usage or parse error. ``COFRAG_BOUND`` overrides the default bound.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import cyclic
from .automata import AlphabetError, dumps
from .classes import ExprSyntaxError, classify, eval_expr, parse_expr
from .congruence import (
    RelationSyntaxError,
    fold_closure,
    parse_relations,
    class_matrix,
    saturate_rules,
)
from .verify import run_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _default_bound() -> int:
    raw = os.environ.get("COFRAG_BOUND")
    if raw is None:
        return 100
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"COFRAG_BOUND must be an integer, got {raw!r}") from None
    if value < 0:
        raise UsageError("COFRAG_BOUND must be non-negative")
    return value


def _bound(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("bound must be non-negative")
    return value


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _emit(args, text: str, payload):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _word(w: str, unary: bool) -> str:
    if unary:
        return str(len(w))
    return w or "e"


def cmd_close(args) -> int:
    rel = parse_relations(_read(args.relfile))
    if rel.is_unary:
        g = cyclic.closure_unary(rel)
        auto = dumps(cyclic.automaton(g)) if g >= 1 else None
        head = f"g={g}" if g else "g=0 ([0], infinite chain)"
        _emit(args, head + ("\n" + auto.rstrip("\n") if auto else ""), {"g": g, "automaton": auto})
        return EXIT_OK
    q = fold_closure(rel)
    text = f"complete={'true' if q.complete else 'false'}\n{dumps(q).rstrip(chr(10))}"
    _emit(args, text, {"complete": q.complete, "automaton": dumps(q)})
    return EXIT_OK


def cmd_eval(args) -> int:
    cs = eval_expr(parse_expr(args.expr, base=Path.cwd()), args.bound)
    text = " ".join(map(str, cs.indices())) + f"\nexact={'true' if cs.exact else 'false'}"
    _emit(args, text, cs.to_dict())
    return EXIT_OK


def cmd_classify(args) -> int:
    v = classify(parse_expr(args.expr, base=Path.cwd()), args.bound)
    _emit(args, str(v), v.to_dict())
    return EXIT_OK


def cmd_lattice(args) -> int:
    op, vals = args.op, args.values
    arity = {"join": 2, "meet": 2, "le": 2, "accepts": 2}
    if op in arity and len(vals) != arity[op]:
        raise UsageError(f"{op} takes exactly {arity[op]} values")
    if any(v < 0 for v in vals):
        raise UsageError("cyclic indices must be non-negative")
    fn = {
        "join": cyclic.join,
        "meet": cyclic.meet,
        "le": cyclic.le,
        "accepts": cyclic.accepts,
    }.get(op)
    result = fn(*vals) if fn else {"sup": cyclic.sup_set, "inf": cyclic.inf_set}[op](vals)
    text = str(result).lower() if isinstance(result, bool) else str(result)
    _emit(args, text, {"op": op, "args": vals, "result": result})
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.bound < 1:
        raise UsageError("verify needs --bound >= 1")
    checks = run_all(args.bound)
    failed = sum(not c.ok for c in checks)
    text = "\n".join(map(str, checks)) + f"\n{len(checks) - failed} passed, {failed} failed"
    payload = {
        "bound": args.bound,
        "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in checks],
        "failed": failed,
    }
    _emit(args, text, payload)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_oracle(args) -> int:
    rel = parse_relations(_read(args.relfile))
    B = args.length_bound
    if rel.is_unary:
        der = saturate_rules(rel, B, "five-rule-unary")
        g = cyclic.closure_unary(rel)
        period = der.period()
        expected = {(p, q) for p in range(B + 1) for q in range(B + 1) if cyclic.divides(g, p - q)}
        derived = {(len(u), len(v)) for u, v in der.pairs}
        agree = derived == expected and period == g
        summary = [f"period={period}", f"closure={g}"]
    else:
        der = saturate_rules(rel, B, "four-rule")
        q = fold_closure(rel)
        agree = bool(np.array_equal(der.matrix, class_matrix(q, der.words)))
        summary = []
    unary = rel.is_unary
    listing = sorted(
        der.pairs, key=lambda p: (len(p[0]), p[0], len(p[1]), p[1])
    )
    lines = [f"{_word(u, unary)} {_word(v, unary)}" for u, v in listing]
    verdict = "AGREE" if agree else "DISAGREE"
    text = "\n".join(lines + summary + [verdict])
    payload = {
        "pairs": [[_word(u, unary), _word(v, unary)] for u, v in listing],
        "length_bound": B,
        "agree": agree,
    }
    if unary:
        payload.update(period=period, closure=g)
    _emit(args, text, payload)
    return EXIT_OK if agree else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-N", "--bound", type=_bound, default=None, help="universe bound (default 100 or $COFRAG_BOUND)")
    common.add_argument("--format", choices=("text", "json"), default="text")

    p = argparse.ArgumentParser(prog="cofrag", description="Fragment classes of cyclic automata.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("close", parents=[common], help="closure of a relation file")
    s.add_argument("relfile", help="relation file, or - for stdin")
    s.set_defaults(func=cmd_close)

    s = sub.add_parser("eval", parents=[common], help="members of a class expression")
    s.add_argument("expr")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("classify", parents=[common], help="contradictory / complete / ambiguous")
    s.add_argument("expr")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("lattice", parents=[common], help="lattice operations on cyclic indices")
    s.add_argument("op", choices=("join", "meet", "le", "sup", "inf", "accepts"))
    s.add_argument("values", type=int, nargs="*")
    s.set_defaults(func=cmd_lattice)

    s = sub.add_parser("verify", parents=[common], help="run the property and theorem suite")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("oracle", parents=[common], help="rule saturation cross-check")
    s.add_argument("relfile", help="relation file, or - for stdin")
    s.add_argument("-B", "--length-bound", type=_bound, default=20)
    s.set_defaults(func=cmd_oracle)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.bound is None:
            args.bound = _default_bound()
        return args.func(args)
    except (UsageError, RelationSyntaxError, ExprSyntaxError, AlphabetError, ValueError) as exc:
        print(f"cofrag {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
