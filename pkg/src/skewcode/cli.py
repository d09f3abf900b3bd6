"""Command-line front end: ``skewcode <group> <command> [options]``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 no applicable certification criterion, 4 distance/search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
import warnings
from pathlib import Path

from .fqr import CodeSpec, GrayMatrix, gray_image_matrix
from .gf import FieldContext, FieldError, field_from_q, make_field, parse_field_descriptor
from .lincode import BudgetExceeded, CodeError, min_distance_detail
from .quantum import CertificateError, QuantumError, check_dual_containing, css_params, quantum_report
from .search import (
    REPORT_COLUMNS,
    SearchError,
    SearchSpace,
    reproduce_table1,
    results_csv,
    results_jsonl,
    right_divisors,
    search_quantum,
)
from .skewpoly import (
    SkewPoly,
    SkewPolyError,
    dagger,
    format_ascending,
    format_display,
    parse_compact,
    parse_poly,
    right_divmod,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CRITERION, EXIT_BUDGET = 0, 1, 2, 3, 4
DEFAULT_SEED = 20240601


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# -- argument plumbing ---------------------------------------------------------

def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--out", type=Path, help="write the report here instead of stdout")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--jobs", type=int, default=1, help="worker processes for distance search")
    p.add_argument(
        "--compact", "--paper-notation", dest="compact", action="store_true",
        help="read polynomials in compact descending form",
    )
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def _field_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--q", type=int, help="field size (Conway modulus)")
    p.add_argument("--field", help="descriptor such as 'GF(3^2);modulus=2,2,1'")
    p.add_argument("--i", type=int, default=1, dest="theta_exp", help="Frobenius exponent of Theta")


def _code_opts(p: argparse.ArgumentParser) -> None:
    _field_opts(p)
    p.add_argument("--spec", type=Path, help="CodeSpec JSON file (overrides the options below)")
    p.add_argument("--alpha", type=int)
    p.add_argument("--beta", type=int)
    p.add_argument("--f")
    p.add_argument("--g1")
    p.add_argument("--g2")
    p.add_argument("--gray", default="hadamard", help="identity | hadamard | four comma-separated entries")
    p.add_argument("--strategy", default="auto", choices=("auto", "enumerate", "column_dependence"))
    p.add_argument("--budget", type=int, help="distance-search work budget")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    root = _Parser(prog="skewcode", description="F_qR-skew cyclic codes and CSS quantum codes")
    groups = root.add_subparsers(dest="group", required=True, parser_class=_Parser)

    field = groups.add_parser("field").add_subparsers(dest="command", required=True, parser_class=_Parser)
    info = field.add_parser("info", parents=[common])
    info.add_argument("--p", type=int)
    info.add_argument("--m", type=int, default=1)
    info.add_argument("--modulus", help="ascending comma list of modulus coefficients")
    _field_opts(info)

    skew = groups.add_parser("skew").add_subparsers(dest="command", required=True, parser_class=_Parser)
    dm = skew.add_parser("divmod", parents=[common])
    _field_opts(dm)
    dm.add_argument("--a", required=True, help="dividend")
    dm.add_argument("--b", required=True, help="divisor")
    dg = skew.add_parser("dagger", parents=[common])
    _field_opts(dg)
    dg.add_argument("--h", required=True)
    dv = skew.add_parser("divisors", parents=[common])
    _field_opts(dv)
    dv.add_argument("--n", type=int, required=True)
    dv.add_argument("--degree", type=int, required=True)

    code = groups.add_parser("code").add_subparsers(dest="command", required=True, parser_class=_Parser)
    build = code.add_parser("build", parents=[common])
    _code_opts(build)
    build.add_argument("--dump-matrix", action="store_true")

    quantum = groups.add_parser("quantum").add_subparsers(dest="command", required=True, parser_class=_Parser)
    _code_opts(quantum.add_parser("check", parents=[common]))

    search = groups.add_parser("search").add_subparsers(dest="command", required=True, parser_class=_Parser)
    run = search.add_parser("run", parents=[common])
    _field_opts(run)
    run.add_argument("--alpha", type=int, required=True)
    run.add_argument("--beta", type=int, required=True)
    for name, default in (("f", "1,3"), ("g1", "1,2"), ("g2", "1,2")):
        run.add_argument(f"--{name}-deg", default=default, help="degree range lo,hi")
    run.add_argument("--gray", default="hadamard")
    run.add_argument("--budget", type=int)
    run.add_argument("--limit", type=int, help="emit only the first N ranked results")

    rep = groups.add_parser("reproduce").add_subparsers(dest="command", required=True, parser_class=_Parser)
    t1 = rep.add_parser("table1", parents=[common])
    t1.add_argument("--rows", help="comma-separated row numbers (default: all)")
    t1.add_argument("--budget", type=int)
    return root


def _resolve_field(args) -> FieldContext:
    if getattr(args, "field", None):
        F = parse_field_descriptor(args.field)
        if args.q is not None and args.q != F.q:
            raise UsageError(f"--q {args.q} disagrees with --field {args.field}")
        return F
    if args.q is None:
        raise UsageError("one of --q or --field is required")
    return field_from_q(args.q)


def _parser_for(args):
    return parse_compact if args.compact else parse_poly


def _spec_from_args(args) -> CodeSpec:
    if args.spec is not None:
        return CodeSpec.from_json(args.spec.read_text(), compact=args.compact)
    missing = [o for o in ("alpha", "beta", "f", "g1", "g2") if getattr(args, o) is None]
    if missing:
        raise UsageError("missing options: " + ", ".join("--" + m for m in missing))
    F = _resolve_field(args)
    parse = _parser_for(args)
    return CodeSpec.separable(
        F, args.theta_exp, args.alpha, args.beta, parse(args.f, F), parse(args.g1, F), parse(args.g2, F)
    )


def _degrees(text: str) -> tuple[int, int]:
    parts = [int(t) for t in text.split(",")]
    if len(parts) == 1:
        parts = [1, parts[0]]
    if len(parts) != 2:
        raise UsageError(f"degree range must be 'hi' or 'lo,hi', got {text!r}")
    return parts[0], parts[1]


# -- output ------------------------------------------------------------------------

def _emit(args, report: dict, rows: list[dict] | None = None, columns: list[str] | None = None) -> None:
    config = report.get("config", {})
    if args.format == "json":
        text = json.dumps(report, sort_keys=True, indent=None) + "\n"
    elif args.format == "csv":
        text = "# config " + json.dumps(config, sort_keys=True) + "\n"
        text += results_csv(rows if rows is not None else [report["result"]], columns or REPORT_COLUMNS)
    else:
        lines = ["# config " + json.dumps(config, sort_keys=True)]
        if rows is not None:
            lines += [json.dumps(r, sort_keys=True) for r in rows]
        else:
            lines += [f"{k}: {v}" for k, v in report["result"].items()]
        text = "\n".join(lines) + "\n"
    if args.out is not None:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)


def _base_config(args, F: FieldContext | None = None) -> dict:
    cfg = {"command": f"{args.group} {args.command}", "seed": args.seed, "jobs": args.jobs}
    if F is not None:
        cfg["field"] = F.descriptor()
        cfg["theta_exp"] = getattr(args, "theta_exp", None)
    return cfg


def _spec_config(args, spec: CodeSpec) -> dict:
    cfg = _base_config(args, spec.field)
    cfg.update(spec.to_dict())
    cfg["gray"] = args.gray
    cfg["strategy"] = args.strategy
    cfg["budget"] = args.budget
    return cfg


# -- commands ----------------------------------------------------------------------

def _cmd_field_info(args) -> int:
    if args.p is not None:
        modulus = None if args.modulus is None else [int(t) for t in args.modulus.split(",")]
        F = make_field(args.p, args.m, modulus)
    else:
        F = _resolve_field(args)
    order = F.automorphism_order(args.theta_exp)
    orbit = {F.format(a): [F.format(F.frob_(a, args.theta_exp * t)) for t in range(order)] for a in range(F.q)}
    result = {
        "q": F.q,
        "p": F.p,
        "m": F.m,
        "modulus": list(F.modulus),
        "elements": [F.format(a) for a in range(F.q)],
        "add": F.add.tolist(),
        "mul": F.mul.tolist(),
        "theta_order": order,
        "frobenius_orbits": orbit,
    }
    _emit(args, {"config": _base_config(args, F), "result": result}, rows=None)
    return EXIT_OK


def _cmd_skew_divmod(args) -> int:
    F = _resolve_field(args)
    parse = _parser_for(args)
    a, b = parse(args.a, F, args.theta_exp), parse(args.b, F, args.theta_exp)
    quo, rem = right_divmod(a, b)
    ok = quo * b + rem == a
    result = {
        "quotient": format_ascending(quo),
        "remainder": format_ascending(rem),
        "quotient_display": format_display(quo),
        "remainder_display": format_display(rem),
        "reconstructs": ok,
    }
    _emit(args, {"config": _base_config(args, F), "result": result})
    return EXIT_OK if ok else EXIT_FAIL


def _cmd_skew_dagger(args) -> int:
    F = _resolve_field(args)
    h = _parser_for(args)(args.h, F, args.theta_exp)
    hd = dagger(h)
    result = {"dagger": format_ascending(hd), "display": format_display(hd)}
    _emit(args, {"config": _base_config(args, F), "result": result})
    return EXIT_OK


def _cmd_skew_divisors(args) -> int:
    F = _resolve_field(args)
    divs = right_divisors(args.n, args.degree, F, args.theta_exp)
    rows = [{"ascending": format_ascending(g), "display": format_display(g)} for g in divs]
    report = {"config": _base_config(args, F), "result": {"count": len(rows), "divisors": rows}}
    _emit(args, report, rows=rows if args.format != "json" else None, columns=["ascending", "display"])
    return EXIT_OK


def _distance(args, G):
    return min_distance_detail(G, strategy=args.strategy, budget=args.budget, jobs=args.jobs)


def _cmd_code_build(args) -> int:
    spec = _spec_from_args(args)
    M = GrayMatrix.parse(args.gray, spec.field)
    G = gray_image_matrix(spec, M)
    dist = _distance(args, G)
    result = {
        "q": spec.field.q,
        "n": G.n,
        "k": G.k,
        "d": dist.d,
        "strategy": dist.strategy,
        "expected_k": spec.expected_dimension(),
        "witness": [spec.field.format(int(v)) for v in dist.witness],
    }
    if args.dump_matrix:
        result["generator_matrix"] = json.loads(G.to_json())
    _emit(args, {"config": _spec_config(args, spec), "result": result})
    return EXIT_OK if G.k == spec.expected_dimension() else EXIT_FAIL


def _cmd_quantum_check(args) -> int:
    spec = _spec_from_args(args)
    cert = check_dual_containing(spec)
    G = gray_image_matrix(spec, GrayMatrix.parse(args.gray, spec.field))
    d = _distance(args, G).d
    result = quantum_report(spec, cert, G.n, G.k, d)
    if cert.valid:
        css_params(G.n, G.k, d, spec.field.q)
    result["witnesses_verify"] = cert.witnesses_verify()
    summary = {k: result[k] for k in ("n", "k", "d", "q", "dual_containing", "route")}
    _emit(args, {"config": _spec_config(args, spec), "result": result, **summary})
    return EXIT_OK if cert.valid else EXIT_FAIL


def _cmd_search_run(args) -> int:
    space = SearchSpace(
        q=_resolve_field(args).q,
        theta_exp=args.theta_exp,
        alpha=args.alpha,
        beta=args.beta,
        f_degrees=_degrees(args.f_deg),
        g1_degrees=_degrees(args.g1_deg),
        g2_degrees=_degrees(args.g2_deg),
        gray=args.gray,
        budget=args.budget,
    )
    results = search_quantum(space, jobs=args.jobs)
    if args.limit is not None:
        results = results[: args.limit]
    rows = [r.row() for r in results]
    cfg = _base_config(args, space.field)
    cfg.update(space.to_dict())
    if args.format == "json":
        _emit(args, {"config": cfg, "result": {"count": len(rows), "codes": rows}})
    elif args.format == "text":
        text = "# config " + json.dumps(cfg, sort_keys=True) + "\n" + results_jsonl(rows)
        (args.out.write_text(text) if args.out else sys.stdout.write(text))
    else:
        _emit(args, {"config": cfg}, rows=rows)
    return EXIT_OK


def _cmd_reproduce_table1(args) -> int:
    rows = None if args.rows is None else [int(t) for t in args.rows.split(",")]
    reports = reproduce_table1(jobs=args.jobs, rows=rows, budget=args.budget)
    out = [r.to_dict() for r in reports]
    cfg = _base_config(args)
    cfg.update({"rows": rows or "all", "budget": args.budget, "gray": "hadamard", "theta_exp": 1})
    passed = sum(r.passed for r in reports)
    summary = {"passed": passed, "total": len(reports)}
    columns = ["row"] + REPORT_COLUMNS + ["pass", "note"]
    if args.format == "json":
        _emit(args, {"config": cfg, "result": {"summary": summary, "rows": out}})
    else:
        _emit(args, {"config": cfg}, rows=out, columns=columns)
    return EXIT_OK if passed == len(reports) else EXIT_FAIL


COMMANDS = {
    ("field", "info"): _cmd_field_info,
    ("skew", "divmod"): _cmd_skew_divmod,
    ("skew", "dagger"): _cmd_skew_dagger,
    ("skew", "divisors"): _cmd_skew_divisors,
    ("code", "build"): _cmd_code_build,
    ("quantum", "check"): _cmd_quantum_check,
    ("search", "run"): _cmd_search_run,
    ("reproduce", "table1"): _cmd_reproduce_table1,
}


def _fail(code: int, exc: BaseException) -> int:
    payload = {"error": type(exc).__name__, "message": str(exc), "exit_code": code}
    sys.stderr.write(json.dumps(payload, sort_keys=True) + "\n")
    return code


def run(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return _fail(EXIT_USAGE, exc)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    random.seed(args.seed)
    if args.jobs < 1:
        return _fail(EXIT_USAGE, UsageError("--jobs must be at least 1"))
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("default")
            return COMMANDS[(args.group, args.command)](args)
    except CertificateError as exc:
        return _fail(EXIT_CRITERION, exc)
    except BudgetExceeded as exc:
        return _fail(EXIT_BUDGET, exc)
    except (UsageError, FieldError, SkewPolyError, CodeError, QuantumError, SearchError, ValueError, OSError) as exc:
        return _fail(EXIT_USAGE, exc)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
