"""Command-line driver.

    loopalg --space {cp|hp} --n <int> <command> [args] [--format text|json|latex]

Exit codes: 0 on success, 1 when a verification sweep finds a counterexample,
2 for usage or expression errors.  The environment variable LOOPALG_MAX_LEVEL
(default 8) caps verification sweeps when --max-k is not given.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from .expr import ExprError, evaluate, format_latex, format_text, parse
from .homology import HomologyElement, cap, dual, gysin
from .loops import (
    CohClass,
    LoopClass,
    TensorCohClass,
    betti_table,
    coproduct_closed,
    coproduct_pipeline,
    generator_degree,
    gh_product,
    gh_product_pairs,
    verify_coassociativity,
    verify_duality,
    verify_pipeline,
    verify_presentation,
)
from .spaces import SpaceParams, catalog_for
from .verify import verify_gysin_values, verify_ring_axioms, verify_structure

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

_GEN_TOKEN = re.compile(r"^(ab|a)(\d+)$")


class UsageError(Exception):
    pass


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as err:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from err
    if value < 1:
        raise argparse.ArgumentTypeError("value must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="loopalg",
        description="Exact loop-homology coproduct and product computations "
        "on complex and quaternionic projective spaces.",
    )
    ap.add_argument("--space", choices=["cp", "hp"], required=True, help="base space family")
    ap.add_argument("--n", type=_positive_int, required=True, help="projective rank, n >= 1")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=["text", "json", "latex"], default="text")

    p = sub.add_parser("coproduct", help="coproduct of a loop-homology expression")
    p.add_argument("expr")
    p.add_argument("--route", choices=["closed", "pipeline"], default="closed")
    common(p)

    p = sub.add_parser("product", help="product of cohomology expressions")
    p.add_argument("exprs", nargs="+", metavar="expr")
    common(p)

    p = sub.add_parser("gysin", help="wrong-way image of a dual basis class")
    p.add_argument("gen", help="source class, a<i> or ab<i>")
    p.add_argument("--k", type=_positive_int, required=True, help="target level")
    p.add_argument("--map", dest="map_spec", required=True, help="pL or pV:<m>")
    common(p)

    p = sub.add_parser("cap", help="cap a Thom fiber class into a level class")
    p.add_argument("gen", help="level class, a<i> or ab<i>")
    p.add_argument("--k", type=_positive_int, required=True, help="level")
    p.add_argument("--m", type=_positive_int, required=True, help="break index")
    common(p)

    p = sub.add_parser("table", help="Betti numbers of the relative loop homology")
    p.add_argument("--max-degree", type=int, default=None)
    common(p)

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument(
        "suite",
        choices=["duality", "coassoc", "pipeline", "presentation", "gysin", "rings"],
    )
    p.add_argument("--max-k", type=_positive_int, default=None)
    common(p)

    return ap


def _max_level(args) -> int:
    if getattr(args, "max_k", None):
        return args.max_k
    raw = os.environ.get("LOOPALG_MAX_LEVEL", "8").strip() or "8"
    try:
        level = int(raw)
    except ValueError:
        raise UsageError(f"LOOPALG_MAX_LEVEL={raw!r} is not an integer")
    if level < 1:
        raise UsageError("LOOPALG_MAX_LEVEL must be at least 1")
    return level


def _class_terms_json(obj) -> list[dict]:
    out = []
    for key, coeff in obj.sorted_terms():
        parts = key if obj.pair else (key,)
        out.append(
            {
                "coeff": str(coeff),
                "gen": [{"kind": kind, "k": k, "i": i} for kind, k, i in parts],
            }
        )
    return out


def _homology_terms_json(x: HomologyElement) -> list[dict]:
    out = []
    ring = x.ring
    order = sorted(x.terms, key=lambda m: (ring.monomial_degree(m), m))
    for m in order:
        out.append({"coeff": str(x.terms[m]), "dual": ring.exponents_by_name(m)})
    return out


def _latex_name(name: str) -> str:
    if name == "xi":
        return "\\xi"
    head = name.rstrip("0123456789")
    tail = name[len(head) :]
    return f"{head}_{{{tail}}}" if tail else head


def _homology_latex(x: HomologyElement) -> str:
    if x.is_zero():
        return "0"
    ring = x.ring
    bits = []
    for m in sorted(x.terms, key=lambda mm: (ring.monomial_degree(mm), mm)):
        c = x.terms[m]
        parts = []
        for g, e in zip(ring.generators, m):
            if not e:
                continue
            base = _latex_name(g.name)
            parts.append(base if e == 1 else f"{base}^{{{e}}}")
        body = "[" + (" ".join(parts) or "1") + "]"
        if bits:
            bits.append("-" if c < 0 else "+")
            c = abs(c)
        if c == 1:
            bits.append(body)
        elif c == -1:
            bits.append(f"-{body}")
        elif c.denominator == 1:
            bits.append(f"{c.numerator}{body}")
        else:
            bits.append(f"\\tfrac{{{c.numerator}}}{{{c.denominator}}}{body}")
    return " ".join(bits)


def _record(params: SpaceParams, command: str, result, degree=None) -> dict:
    rec = {"space": params.token, "n": params.n, "command": command, "result": result}
    if degree is not None:
        rec["degree"] = degree
    return rec


def _emit(args, record: dict, text: str, latex: str | None = None) -> None:
    if args.format == "json":
        print(json.dumps(record, indent=2))
    elif args.format == "latex":
        print(latex if latex is not None else text)
    else:
        print(text)


def _parse_gen_token(token: str, params: SpaceParams) -> tuple[int, bool]:
    hit = _GEN_TOKEN.match(token)
    if hit is None:
        raise UsageError(f"bad class token {token!r}; expected a<i> or ab<i>, like a0 or ab1")
    with_b = hit.group(1) == "ab"
    i = int(hit.group(2))
    if i > params.n - 1:
        raise UsageError(f"index out of range for n={params.n}")
    return i, with_b


def _cmd_coproduct(args, params: SpaceParams) -> int:
    value = evaluate(parse(args.expr, params.n), params)
    if value is None:
        value = LoopClass.zero(params)
    if not isinstance(value, LoopClass):
        raise UsageError("coproduct expects a loop-homology expression in A and B")
    result = (
        coproduct_closed(value) if args.route == "closed" else coproduct_pipeline(value)
    )
    payload = {
        "input": args.expr,
        "route": args.route,
        "terms": _class_terms_json(result),
    }
    rec = _record(params, "coproduct", payload, result.degree())
    _emit(args, rec, format_text(result), format_latex(result))
    return EXIT_OK


def _cmd_product(args, params: SpaceParams) -> int:
    if len(args.exprs) == 1:
        value = evaluate(parse(args.exprs[0], params.n), params)
        if value is None:
            result = CohClass.zero(params)
        elif isinstance(value, TensorCohClass):
            result = gh_product_pairs(value)
        else:
            raise UsageError(
                "product with one argument expects tensor terms like 's[1,0] x m[1,1]'"
            )
    elif len(args.exprs) == 2:
        sides = []
        for text in args.exprs:
            value = evaluate(parse(text, params.n), params)
            if value is None:
                value = CohClass.zero(params)
            if not isinstance(value, CohClass):
                raise UsageError("product expects cohomology expressions in s and m")
            sides.append(value)
        result = gh_product(sides[0], sides[1])
    else:
        raise UsageError("product takes one tensor expression or two expressions")
    payload = {"input": list(args.exprs), "terms": _class_terms_json(result)}
    rec = _record(params, "product", payload, result.degree())
    _emit(args, rec, format_text(result), format_latex(result))
    return EXIT_OK


def _cmd_gysin(args, params: SpaceParams) -> int:
    cat = catalog_for(params)
    i, with_b = _parse_gen_token(args.gen, params)
    k = args.k
    if args.map_spec == "pL":
        out = gysin(cat.pullback_pL(k), cat.sm, cat.gamma(k), cat.sm_dual(i, with_b))
    elif args.map_spec.startswith("pV:"):
        try:
            m = int(args.map_spec[3:])
        except ValueError:
            raise UsageError(f"bad map {args.map_spec!r}; expected pL or pV:<m>")
        if not 1 <= m <= k - 1:
            raise UsageError(f"break index m={m} outside 1 .. {k - 1}")
        out = gysin(
            cat.pullback_pV(k, m), cat.sm_pair, cat.gamma(k), cat.sm_pair_dual(i, with_b)
        )
    else:
        raise UsageError(f"bad map {args.map_spec!r}; expected pL or pV:<m>")
    payload = {
        "input": args.gen,
        "map": args.map_spec,
        "k": k,
        "terms": _homology_terms_json(out),
    }
    rec = _record(params, "gysin", payload, out.degree())
    _emit(args, rec, str(out), _homology_latex(out))
    return EXIT_OK


def _cmd_cap(args, params: SpaceParams) -> int:
    cat = catalog_for(params)
    i, with_b = _parse_gen_token(args.gen, params)
    k, m = args.k, args.m
    if not 1 <= m <= k - 1:
        raise UsageError(f"break index m={m} outside 1 .. {k - 1}")
    ring = cat.gamma(k).ring
    exps = {f"x{j}": 1 for j in range(1, 2 * k)}
    if i:
        exps["a"] = i
    if with_b:
        exps["b"] = 1
    out = cap(ring.gen(f"x{2 * m}"), dual(ring, ring.monomial(exps)))
    payload = {
        "input": args.gen,
        "k": k,
        "m": m,
        "terms": _homology_terms_json(out),
    }
    rec = _record(params, "cap", payload, out.degree())
    _emit(args, rec, str(out), _homology_latex(out))
    return EXIT_OK


def _cmd_table(args, params: SpaceParams) -> int:
    max_degree = args.max_degree
    if max_degree is None:
        max_degree = generator_degree(params, "B", _max_level(args), params.n - 1)
    if max_degree < 0:
        raise UsageError("--max-degree must be non-negative")
    rows = betti_table(params, max_degree)
    payload = {"rows": [{"degree": d, "dim": v} for d, v in rows]}
    text = "\n".join(f"{d} {v}" for d, v in rows)
    rec = _record(params, "table", payload)
    _emit(args, rec, text)
    return EXIT_OK


def _cmd_verify(args, params: SpaceParams) -> int:
    level = _max_level(args)
    if args.suite == "duality":
        report = verify_duality(params, level)
    elif args.suite == "coassoc":
        report = verify_coassociativity(params, level)
    elif args.suite == "pipeline":
        report = verify_pipeline(params, level)
    elif args.suite == "presentation":
        report = verify_presentation(params, level)
    elif args.suite == "gysin":
        report = verify_gysin_values(params, level)
    else:
        report = verify_ring_axioms(params)
        report.absorb(verify_structure(params, max_k=level))
    payload = {
        "suite": args.suite,
        "passed": report.passed,
        "checks": report.checks,
        "failures": report.failures,
    }
    text = report.summary()
    if not report.passed:
        text += f"\nfirst counterexample: {report.failures[0]}"
    _emit(args, _record(params, "verify", payload), text)
    return EXIT_OK if report.passed else EXIT_FAIL


_COMMANDS = {
    "coproduct": _cmd_coproduct,
    "product": _cmd_product,
    "gysin": _cmd_gysin,
    "cap": _cmd_cap,
    "table": _cmd_table,
    "verify": _cmd_verify,
}


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    params = SpaceParams.from_token(args.space, args.n)
    try:
        return _COMMANDS[args.command](args, params)
    except (UsageError, ExprError, ValueError) as err:
        print(f"loopalg: error: {err}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
