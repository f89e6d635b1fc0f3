"""Command-line front end.

Every subcommand prints text by default and JSON with ``--json``.  Exit
codes: 0 on success, 1 when the acceptance suite has a failing criterion,
2 on usage errors (bad flags, unreadable files, malformed specs or
formulae).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import List, Optional

from .acceptance import run_suite
from .blocks import coloured_chain, hypothesis_report, minimal_abelian, spine
from .constructions import (
    UnsupportedSpecError,
    example_nc_decide,
    lemma31_witnesses,
    random_admissible_pair,
)
from .evaluator import SearchBudget, evaluate
from .formula import FormulaSyntaxError, free_vars, parse, print_formula, relativize, to_json
from .pl import PLMap, PLQGroup, PreconditionError
from .wreath import KINDS, MODES, ChainSpec, WreathGroup


class UsageError(Exception):
    pass


# -- inputs ------------------------------------------------------------------------------

def load_group_spec(data: dict):
    """Build a model from a group spec document, rejecting anything unexpected."""
    if not isinstance(data, dict) or "family" not in data:
        raise UsageError("group spec must be an object with a 'family' key")
    family = data["family"]
    if family == "plq":
        extra = set(data) - {"family"}
        if extra:
            raise UsageError(f"unknown keys for family plq: {sorted(extra)}")
        return PLQGroup()
    if family == "wreath":
        extra = set(data) - {"family", "levels", "mode"}
        if extra:
            raise UsageError(f"unknown keys for family wreath: {sorted(extra)}")
        levels = data.get("levels")
        if not isinstance(levels, list) or not levels or any(k not in KINDS for k in levels):
            raise UsageError(f"levels must be a non-empty list drawn from {list(KINDS)}")
        mode = data.get("mode", "restricted")
        if mode not in MODES:
            raise UsageError(f"mode must be one of {list(MODES)}")
        return WreathGroup(ChainSpec(tuple(levels), mode))
    raise UsageError(f"unknown family {family!r}; expected 'plq' or 'wreath'")


def _read(path: Optional[str]) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _spec(args):
    if not args.spec:
        raise UsageError("--spec is required")
    try:
        data = json.loads(_read(args.spec))
    except json.JSONDecodeError as exc:
        raise UsageError(f"{args.spec}: invalid JSON ({exc.msg})") from None
    return load_group_spec(data)


def _formula(args):
    try:
        return parse(_read(args.formula))
    except FormulaSyntaxError as exc:
        raise UsageError(f"syntax error: {exc}") from None


def _budget(args) -> SearchBudget:
    return SearchBudget(max_elements=args.max_elements, size_bound=args.size_bound, seed=args.seed)


def _jsonable(v):
    if hasattr(v, "to_json"):
        return v.to_json()
    if isinstance(v, (bool, int, str)) or v is None:
        return v
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return str(v)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


# -- subcommands -----------------------------------------------------------------------------

def cmd_parse(args) -> int:
    f = _formula(args)
    text = print_formula(f)
    _emit(args, {"text": text, "ast": to_json(f)}, text)
    return 0


def cmd_relativize(args) -> int:
    f = _formula(args)
    try:
        rel = relativize(f, args.h)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = print_formula(rel)
    _emit(args, {"h": args.h, "text": text, "ast": to_json(rel)}, text)
    return 0


def _verdict(tv) -> dict:
    return {
        "verdict": tv.verdict,
        "witness": None if not tv.witness else [[str(k), _jsonable(v)] for k, v in tv.witness],
    }


def cmd_eval(args) -> int:
    G = _spec(args)
    f = _formula(args)
    if free_vars(f):
        raise UsageError(f"eval needs a sentence; free variables: {', '.join(sorted(free_vars(f)))}")
    modes = ["syntactic", "oracle"] if args.mode == "both" else [args.mode]
    results = {m: _verdict(evaluate(f, {}, G, _budget(args), mode=m)) for m in modes}
    payload = {"formula": print_formula(f), "results": results}
    if len(modes) == 2:
        a, b = (results[m]["verdict"] for m in modes)
        payload["contradiction"] = a is not None and b is not None and a != b
    text = "\n".join(f"{m}: {'Unknown' if r['verdict'] is None else r['verdict']}" for m, r in results.items())
    _emit(args, payload, text)
    return 0


def cmd_spine(args) -> int:
    sp = spine(_spec(args))
    payload = sp.to_json()
    _emit(args, payload, "\n".join(f"level {d['level']}: {d['kind']}" for d in payload["levels"]))
    return 0


def cmd_colours(args) -> int:
    chain = coloured_chain(_spec(args), None, _budget(args))
    payload = chain.to_json()
    lines = []
    for d in payload["levels"]:
        cols = ", ".join(f"{k}={'?' if v is None else v}" for k, v in d["colours"].items())
        lines.append(f"level {d['level']} ({d['kind']}): {cols}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_props(args) -> int:
    from .constructions import spine_order_props

    G = _spec(args)
    budget = _budget(args)
    flags = hypothesis_report(G, budget).flags()
    order = spine_order_props(G)
    ma = minimal_abelian(G, budget)
    payload = {
        "hypotheses": flags,
        "spine_order": order,
        "minimal_abelian": {
            "witness": _jsonable(ma.witness),
            "checked_pairs": ma.checked_pairs,
            "counterexamples": len(ma.counterexamples),
        },
    }
    lines = [f"{k}: {v}" for k, v in flags.items()]
    lines += [f"spine {k}: {v}" for k, v in order.items() if k != "checks"]
    lines.append(f"minimal abelian witness: {ma.witness}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_lemma31(args) -> int:
    if args.pair:
        try:
            data = json.loads(_read(args.pair))
            h, g = PLMap.from_json(data["h"]), PLMap.from_json(data["g"])
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"{args.pair}: expected {{'h': ..., 'g': ...}} ({exc})") from None
    else:
        h, g = random_admissible_pair(random.Random(args.seed))
    try:
        inst = lemma31_witnesses(h, g)
    except PreconditionError as exc:
        raise UsageError(str(exc)) from None
    payload = inst.to_json()
    text = (f"case {inst.case}\nh  = {h}\ng  = {g}\nf  = {inst.f}\nk  = {inst.k}\n"
            f"check point {inst.check_point}: w1w2 -> {inst.lhs}, w2w1 -> {inst.rhs}")
    _emit(args, payload, text)
    return 0


def cmd_example_nc(args) -> int:
    G = _spec(args)
    if not isinstance(G, WreathGroup):
        raise UsageError("example-nc needs a wreath spec with Z levels")
    try:
        verdict, res = example_nc_decide(G.spec, _budget(args))
    except UnsupportedSpecError as exc:
        raise UsageError(str(exc)) from None
    payload = res.to_json()
    _emit(args, payload, f"verdict: {verdict}\n{res.note}\nrefutations: {len(res.refutations)}")
    return 0


def cmd_suite(args) -> int:
    only = None
    if args.only:
        try:
            only = {int(x) for x in args.only.split(",")}
        except ValueError:
            raise UsageError("--only takes a comma-separated list of criterion numbers") from None
    results = run_suite(args.seed, only)
    if args.json:
        rows = []
        for r in results:
            row = r.to_json()
            row.pop("seconds")  # keep output reproducible
            rows.append(row)
        print(json.dumps({"seed": args.seed, "results": rows}, indent=2))
    else:
        for r in results:
            print(r.line(timing=False))
    return 0 if all(r.passed for r in results) else 1


# -- argument parsing ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-elements", type=int, default=40)
    common.add_argument("--size-bound", type=int, default=2)

    p = argparse.ArgumentParser(prog="lperm", description="Computable models of lattice-ordered permutation groups.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, spec=False, formula=False):
        sp = sub.add_parser(name, parents=[common], help=help_)
        if spec:
            sp.add_argument("--spec", required=True, help="group spec JSON file")
        if formula:
            sp.add_argument("--formula", default="-", help="formula file, '-' for stdin")
        sp.set_defaults(fn=fn)
        return sp

    add("parse", cmd_parse, "parse and pretty-print a formula", formula=True)
    add("relativize", cmd_relativize, "relativize a sentence to h's component",
        formula=True).add_argument("--h", default="h", help="name of the parameter")
    add("eval", cmd_eval, "evaluate a sentence on a model", spec=True, formula=True).add_argument(
        "--mode", choices=("syntactic", "oracle", "both"), default="oracle")
    add("spine", cmd_spine, "list the spine", spec=True)
    add("colours", cmd_colours, "coloured chain of a model", spec=True)
    add("props", cmd_props, "hypothesis flags and spine order properties", spec=True)
    add("lemma31", cmd_lemma31, "build witnesses separating two commutators").add_argument(
        "--pair", help="JSON file with PL maps 'h' and 'g'; random when omitted")
    add("example-nc", cmd_example_nc, "decide the nc sentence on a Z tower", spec=True)
    add("suite", cmd_suite, "run the acceptance suite").add_argument(
        "--only", help="comma-separated criterion numbers")
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"lperm {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
