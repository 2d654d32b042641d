"""Command-line front end.

Every command prints a text report by default or JSON with ``--format json``.
Exit status: 0 on success or PASS, 1 on a FAIL verdict, 2 on invalid input.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from typing import Any

from lfactors import __version__
from lfactors.closedforms import (
    SUITES,
    checked_discrepancy,
    identity_a_audit,
    printed_form,
    verify_closed_forms,
)
from lfactors.core import atomize
from lfactors.decompositions import OutOfRange, Way, WaySpec
from lfactors.normalization import (
    ALL_CONFIGS,
    GroupType,
    TauConfig,
    alpha_classical,
    alpha_gl,
    beta_classical,
    sigma_term_convention,
)
from lfactors.params import InvalidParameter, parse_param
from lfactors.poles import (
    CommonPoleReport,
    common_poles,
    corollary_gcd,
    pole_loci,
    strategy_check,
    zero_loci,
)
from lfactors.report import (
    check_json,
    common_json,
    config_json,
    discrepancy_json,
    dumps,
    factor_lines,
    gcd_json,
    identity_json,
    locus_json,
    param_json,
    product_json,
    shared_lines,
    strategy_json,
)
from lfactors.sweeps import (
    gl_coprimality_sweep,
    rank_one_common_poles,
    recursion_sweep,
    sign_class_sweep,
    strategy_sweep,
)

ENGINE = {"name": "lfactors", "version": __version__}


@dataclass
class Outcome:
    result: Any
    text: list[str]
    passed: int = 0
    failed: int = 0
    checks: bool = False  # whether pass/fail counts carry a verdict


# -- argument helpers ---------------------------------------------------------

def _group(args) -> GroupType:
    return GroupType.parse(args.group)


def _param(args):
    return parse_param(args.param, sigma_present=not args.no_sigma)


def _configs(args) -> tuple[TauConfig, ...]:
    sides = (1, -1) if args.tau_pole is None else ((1,) if args.tau_pole == "rho" else (-1,))
    sigmas = (False, True) if args.sigma_pole is None else (args.sigma_pole == "true",)
    return tuple(c for c in ALL_CONFIGS if c.pole_side in sides and c.sigma_pole in sigmas)


def _group_header(group: GroupType) -> str:
    return f"group {group.value}: rho = {group.rho_name}, rho- = {group.rho_minus_name}"


def _product_block(title: str, p, atomized: bool) -> list[str]:
    lines = [title]
    lines += factor_lines(p)
    if atomized:
        lines.append("  atomized:")
        lines += factor_lines(atomize(p), "    ")
    return lines


def _spec(args, way_name: str) -> WaySpec:
    way = Way.parse(way_name)
    if way.is_gl:
        return WaySpec(way, args.c, args.a, args.d, args.b)
    return WaySpec(way, args.c, args.a, param=_param(args), group=_group(args), pair=args.pair)


def _filter(report: CommonPoleReport, configs: tuple[TauConfig, ...]) -> CommonPoleReport:
    shared = []
    for x in report.shared:
        keep = tuple(c for c in x.configs if c in configs)
        if keep:
            shared.append(type(x)(x.re_s, keep, x.left, x.right))
    return CommonPoleReport(report.left_label, report.right_label, tuple(shared))


# -- commands -------------------------------------------------------------

def cmd_alpha(args, beta: bool = False) -> Outcome:
    group, param = _group(args), _param(args)
    fn = beta_classical if beta else alpha_classical
    p = fn(args.c, args.a, param, group)
    name = "beta" if beta else "alpha"
    text = [_group_header(group), f"sigma term: {sigma_term_convention(param, group)}"]
    text += _product_block(f"{name}_{{{args.c},{args.a}}}(s; r={param.label()}):", p, True)
    result = {"group": group.value, "rho": group.rho_name, "rho_minus": group.rho_minus_name,
              "factors": product_json(p), "atomized": product_json(atomize(p))}
    return Outcome(result, text)


def cmd_alpha_gl(args) -> Outcome:
    p = alpha_gl(args.c, args.d, args.a, args.b, args.offset)
    title = (f"alpha_GL(s+{args.offset}, rho_{args.c}(tau_{args.a}), rho_{args.d}(tau_{args.b})):")
    return Outcome({"factors": product_json(p), "atomized": product_json(atomize(p))},
                   _product_block(title, p, True))


def cmd_discrepancy(args) -> Outcome:
    spec = _spec(args, args.way)
    rep = checked_discrepancy(spec)
    configs = _configs(args)
    form = printed_form(spec)
    text = [f"way: {spec.label()}"]
    for label, p in rep.constituents:
        text += _product_block(f"constituent {label}:", p, False)
    text += _product_block(f"target {rep.target[0]}:", rep.target[1], False)
    text.append("P (atomized):")
    text += factor_lines(rep.P)
    if form is not None:
        text.append(f"printed form [{form.source}]: {'match' if rep.closed_form_match else 'MISMATCH'}")
        text += factor_lines(atomize(form.product))
        for name, value in form.predicates:
            text.append(f"  predicate {name}: {value}")
    loci = {}
    for config in configs:
        poles = pole_loci(rep.P, config)
        loci[config.label()] = poles
        text.append(f"poles under {config.label()}:")
        text += [f"  {x.describe()}" for x in poles] or ["  none"]
    zeros = zero_loci(rep.P)
    if zeros:
        text.append("zeros (not cancelled):")
        text += [f"  {x.describe()}" for x in zeros]
    result = discrepancy_json(rep)
    result["predicates"] = [{"name": n, "value": v} for n, v in (form.predicates if form else ())]
    result["poles"] = [{"config": config_json(c), "loci": [locus_json(x) for x in loci[c.label()]]}
                       for c in configs]
    result["zeros"] = [locus_json(x) for x in zeros]
    return Outcome(result, text)


def cmd_verify(args) -> Outcome:
    suites = SUITES if args.suite == "all" else (args.suite,)
    checks = verify_closed_forms(suites, _group(args))
    passed = sum(c.match for c in checks)
    failed = len(checks) - passed
    text = []
    for suite in suites:
        mine = [c for c in checks if c.suite == suite]
        ok = sum(c.match for c in mine)
        ident = sum(c.match_identified for c in mine)
        text.append(f"suite {suite}: {ok}/{len(mine)} printed forms reproduced "
                    f"({ident}/{len(mine)} with tau x sigma identified by r_t)")
        for c in mine:
            if not c.match:
                note = "; agrees once tau x sigma is identified" if c.match_identified else ""
                text.append(f"  MISMATCH {c.spec.label()} [{c.source}]{note}")
                text.append(f"    computed: {c.computed}")
                text.append(f"    printed:  {c.printed}")
    result: dict[str, Any] = {"checks": [check_json(c) for c in checks]}
    if args.suite == "all":
        audit = identity_a_audit()
        result["identity_a"] = identity_json(audit)
        for name, cases in audit.readings:
            good = sum(c.balanced for c in cases)
            text.append(f"identity (a), reading {name}: {good}/{len(cases)} balanced")
        text.append(f"identity (a): uniform reading(s) {audit.uniform()}; "
                    f"{'PASS' if audit.passed else 'FAIL'}")
        passed += audit.passed
        failed += not audit.passed
    return Outcome(result, text, passed, failed, True)


def cmd_common_poles(args) -> Outcome:
    x = checked_discrepancy(_spec(args, args.way1))
    y = checked_discrepancy(_spec(args, args.way2))
    report = _filter(common_poles(x, y), _configs(args))
    text = [f"{report.left_label}  vs  {report.right_label}",
            "P1: " + str(x.P), "P2: " + str(y.P), f"verdict: {report.verdict}"]
    text += shared_lines(report.shared)
    return Outcome(common_json(report), text)


def cmd_strategy(args) -> Outcome:
    v = strategy_check(args.c, args.a, _param(args), _group(args))
    text = [f"strategy c={v.c} a={v.a} r={v.param.label()} group={v.group.value}: {v.status}",
            f"case: {v.case}", f"pair: {v.pair[0]}  vs  {v.pair[1]}"]
    for w, ok in v.reductions:
        text.append(f"reduction {w}: {'trivial' if ok else 'NONTRIVIAL'}")
    text.append("common loci:")
    text += shared_lines(v.common) or ["  none"]
    if v.offending:
        text.append("offending loci (Re(s) != 0):")
        text += shared_lines(v.offending)
    text.append(f"axioms assumed: {', '.join(v.axioms) or 'none'}")
    return Outcome(strategy_json(v), text, int(v.passed), int(not v.passed), True)


def cmd_gcd(args) -> Outcome:
    g = corollary_gcd(args.c, _group(args))
    text = [f"gcd of alpha_{args.c}^-1 and (beta_{args.c}(s) beta_{args.c}(-s))^-1",
            f"structural reading: computed {g.structural}; printed pair {g.printed_structural}; "
            f"{'match' if g.structural_match else 'MISMATCH'}",
            f"locus reading: {'match' if g.locus_match else 'MISMATCH'}", "  computed:"]
    text += shared_lines(g.locus.shared, "    ") or ["    none"]
    text.append("  printed pair:")
    text += shared_lines(g.printed_locus.shared, "    ") or ["    none"]
    return Outcome(gcd_json(g), text, int(g.locus_match), int(not g.locus_match), True)


SWEEP_MAX_C = {"common-poles": 10, "sign-class": 8}


def cmd_sweep(args) -> Outcome:
    group = _group(args)
    kind = args.kind
    if args.max_c is None:
        args.max_c = SWEEP_MAX_C.get(kind, 6)
    points: list[dict[str, Any]] = []
    text: list[str] = []
    if kind == "common-poles":
        # an enumeration: every point is reported, none carries a verdict
        for c, rep in rank_one_common_poles(args.max_c, group):
            points.append({"c": c, "nonempty": bool(rep.shared), "report": common_json(rep)})
            pts = ", ".join(str(x) for x in sorted(rep.points())) or "none"
            text.append(f"c={c}: {rep.verdict}; shared Re(s): {pts}")
            text += shared_lines(rep.shared, "    ")
        hits = [p["c"] for p in points if p["nonempty"]]
        text.insert(0, f"sweep {kind}: common poles at c in {hits}")
        return Outcome({"kind": kind, "points": points}, text)
    elif kind == "strategy":
        for v in strategy_sweep(args.max_c, args.max_a, args.max_r, group):
            points.append({"ok": v.passed, "report": strategy_json(v)})
            if not v.passed:
                text.append(f"FAIL c={v.c} a={v.a} r={v.param.label()}")
                text += shared_lines(v.offending)
    elif kind == "sign-class":
        for s in sign_class_sweep(args.max_c, args.max_a, args.max_r, group):
            points.append({"ok": s.ok, "family": s.family, "way": s.way, "class": s.got})
            if not s.ok:
                text.append(f"FAIL {s.family} {s.way}: {s.got}")
    elif kind == "recursion":
        for label, ok in recursion_sweep(args.max_index):
            points.append({"ok": ok, "case": label})
            if not ok:
                text.append(f"FAIL {label}")
    elif kind == "gl-coprime":
        for label, rep in gl_coprimality_sweep(args.max_index):
            ok = rep.verdict == "coprime"
            points.append({"ok": ok, "case": label, "report": common_json(rep)})
            if not ok:
                text.append(f"FAIL {label}: {rep.verdict}")
    passed = sum(p["ok"] for p in points)
    failed = len(points) - passed
    text.insert(0, f"sweep {kind}: {passed}/{len(points)} points pass")
    return Outcome({"kind": kind, "points": points}, text, passed, failed, True)


# -- parser -------------------------------------------------------------------

def _common(p: argparse.ArgumentParser, *, way: bool = False) -> None:
    p.add_argument("--c", type=int, default=1)
    p.add_argument("--a", type=int, default=1)
    if way:
        p.add_argument("--d", type=int, default=1)
        p.add_argument("--b", type=int, default=1)
        p.add_argument("--pair", type=int, default=0, help="segment pair peeled by cl3")
    p.add_argument("--param", default="", help='segment indices, e.g. "5,1"; empty for none')
    p.add_argument("--no-sigma", action="store_true", help="no base sigma (n0 = 0)")
    p.add_argument("--group", default="sp", help="u-even, u-odd, so-odd, sp or so-even")


def _configs_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tau-pole", choices=("rho", "rho-minus"))
    p.add_argument("--sigma-pole", choices=("true", "false"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lfactors", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"lfactors {__version__}")
    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("--format", choices=("text", "json"), default="text")
    out.add_argument("--out", help="write the report here instead of standard output")
    sub = parser.add_subparsers(dest="command", required=True)

    for name in ("alpha", "beta"):
        p = sub.add_parser(name, parents=[out], help=f"the classical {name} factor")
        _common(p)
    p = sub.add_parser("alpha-gl", parents=[out], help="the GL normalization factor")
    for opt in ("c", "d", "a", "b"):
        p.add_argument(f"--{opt}", type=int, default=1)
    p.add_argument("--offset", default="0", help="rational shift of s, e.g. 1/4")

    p = sub.add_parser("discrepancy", parents=[out], help="discrepancy of one way")
    p.add_argument("--way", required=True, help=", ".join(w.value for w in Way))
    _common(p, way=True)
    _configs_opts(p)

    p = sub.add_parser("verify-closed-forms", parents=[out], help="regression against printed forms")
    p.add_argument("--suite", default="all", choices=("all",) + SUITES)
    p.add_argument("--group", default="sp")

    p = sub.add_parser("common-poles", parents=[out], help="shared pole lines of two ways")
    p.add_argument("--way1", required=True)
    p.add_argument("--way2", required=True)
    _common(p, way=True)
    _configs_opts(p)

    p = sub.add_parser("strategy", parents=[out], help="induction-strategy check")
    _common(p)

    p = sub.add_parser("gcd-corollary", parents=[out], help="gcd of the inverse normalizations")
    p.add_argument("--c", type=int, default=1)
    p.add_argument("--group", default="sp")

    p = sub.add_parser("sweep", parents=[out], help="grid sweeps")
    p.add_argument("--kind", required=True,
                   choices=("common-poles", "strategy", "sign-class", "recursion", "gl-coprime"))
    p.add_argument("--max-c", type=int, help="default 10 for common-poles, 8 for sign-class, else 6")
    p.add_argument("--max-a", type=int, default=6)
    p.add_argument("--max-r", type=int, default=8)
    p.add_argument("--max-index", type=int, default=12)
    p.add_argument("--group", default="sp")
    return parser


COMMANDS: dict[str, Callable[[argparse.Namespace], Outcome]] = {
    "alpha": cmd_alpha,
    "beta": lambda args: cmd_alpha(args, beta=True),
    "alpha-gl": cmd_alpha_gl,
    "discrepancy": cmd_discrepancy,
    "verify-closed-forms": cmd_verify,
    "common-poles": cmd_common_poles,
    "strategy": cmd_strategy,
    "gcd-corollary": cmd_gcd,
    "sweep": cmd_sweep,
}


def _request(args) -> dict[str, Any]:
    skip = {"format", "out", "command"}
    req = {k: v for k, v in sorted(vars(args).items()) if k not in skip}
    if "param" in req:
        req["param"] = param_json(_param(args))
        req.pop("no_sigma", None)
    return {"command": args.command, **req}


def run(argv: Sequence[str] | None = None) -> tuple[int, str, str | None]:
    """Execute one command; returns ``(exit code, report body, output path)``."""
    args = build_parser().parse_args(argv)
    try:
        if hasattr(args, "group"):
            GroupType.parse(args.group)
        outcome = COMMANDS[args.command](args)
        request = _request(args)
    except (InvalidParameter, OutOfRange, ValueError) as exc:
        return 2, f"error: {exc}\n", None
    status = "FAIL" if outcome.checks and outcome.failed else "PASS" if outcome.checks else "OK"
    code = 1 if status == "FAIL" else 0
    if args.format == "json":
        report = {"engine": ENGINE, "request": request, "result": outcome.result,
                  "summary": {"pass": outcome.passed, "fail": outcome.failed, "status": status}}
        return code, dumps(report), args.out
    lines = [f"lfactors {__version__} :: {args.command}"] + outcome.text
    if outcome.checks:
        lines.append(f"summary: {outcome.passed} pass, {outcome.failed} fail -> {status}")
    return code, "\n".join(lines) + "\n", args.out


def main(argv: Sequence[str] | None = None) -> int:
    try:
        code, body, out = run(argv)
    except SystemExit as exc:  # argparse exits with 2 on usage errors
        return int(exc.code or 0)
    if code == 2:
        sys.stderr.write(body)
    elif out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
