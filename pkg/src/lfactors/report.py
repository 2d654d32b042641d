"""JSON-ready payloads and plain-text renderings for engine results.

Every rational is written as an exact ``"p/q"`` string and every list is
emitted in the engine's canonical order, so equal results serialize to equal
bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from lfactors.closedforms import ClosedFormCheck, IdentityAudit
from lfactors.core import LFactor, LProduct, format_linear
from lfactors.decompositions import DiscrepancyReport
from lfactors.normalization import TauConfig
from lfactors.params import DiscreteSeriesParam
from lfactors.poles import CommonPoleReport, GcdReport, PoleLocus, SharedLocus, StrategyVerdict


def rational(x: Fraction | int) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


def factor_json(f: LFactor, e: int) -> dict[str, Any]:
    return {"s_coeff": f.s_coeff, "shift": rational(f.shift), "kernel": f.kernel.label(),
            "exponent": e}


def product_json(p: LProduct) -> list[dict[str, Any]]:
    return [factor_json(f, e) for f, e in p.items()]


def param_json(param: DiscreteSeriesParam) -> dict[str, Any]:
    return {"r": list(param.r), "sigma_present": param.sigma_present}


def config_json(config: TauConfig) -> dict[str, Any]:
    return {"tau_pole": "rho" if config.pole_side > 0 else "rho-minus",
            "sigma_pole": config.sigma_pole}


def locus_json(x: PoleLocus) -> dict[str, Any]:
    return {"re_s": rational(x.re_s), "kernel": x.kernel.label(), "gate": x.gate,
            "factor": str(x.factor), "multiplicity": x.multiplicity}


def shared_json(x: SharedLocus) -> dict[str, Any]:
    return {"re_s": rational(x.re_s), "configs": [config_json(c) for c in x.configs],
            "left": [locus_json(y) for y in x.left], "right": [locus_json(y) for y in x.right]}


def common_json(r: CommonPoleReport) -> dict[str, Any]:
    return {"left": r.left_label, "right": r.right_label, "verdict": r.verdict,
            "shared": [shared_json(x) for x in r.shared]}


def discrepancy_json(r: DiscrepancyReport) -> dict[str, Any]:
    return {
        "way": r.spec.label(),
        "P": product_json(r.P),
        "constituents": [{"label": lbl, "factors": product_json(p)} for lbl, p in r.constituents],
        "target": {"label": r.target[0], "factors": product_json(r.target[1])},
        "closed_form_match": r.closed_form_match,
        "exact": r.check_exact(),
    }


def check_json(c: ClosedFormCheck) -> dict[str, Any]:
    out: dict[str, Any] = {"suite": c.suite, "way": c.spec.label(), "source": c.source,
                           "match": c.match, "match_identified": c.match_identified,
                           "predicates": [{"name": n, "value": v} for n, v in c.predicates]}
    if not c.match:
        out["computed"] = product_json(c.computed)
        out["printed"] = product_json(c.printed)
    return out


def identity_json(audit: IdentityAudit) -> dict[str, Any]:
    readings = []
    for name, cases in audit.readings:
        bad = [c for c in cases if not c.balanced]
        readings.append({
            "reading": name,
            "balanced": len(cases) - len(bad),
            "total": len(cases),
            "counterexamples": [{"a": c.a, "r1": c.r1, "r2": c.r2} for c in bad[:10]],
        })
    return {"readings": readings, "uniform": audit.uniform(), "passed": audit.passed}


def strategy_json(v: StrategyVerdict) -> dict[str, Any]:
    return {
        "c": v.c, "a": v.a, "param": param_json(v.param), "group": v.group.value,
        "case": v.case, "pair": list(v.pair), "status": v.status,
        "common": [shared_json(x) for x in v.common],
        "offending": [shared_json(x) for x in v.offending],
        "reductions": [{"way": w, "trivial": ok} for w, ok in v.reductions],
        "axioms": list(v.axioms),
    }


def gcd_json(g: GcdReport) -> dict[str, Any]:
    return {
        "c": g.c,
        "structural": {"computed": product_json(g.structural),
                       "printed": product_json(g.printed_structural),
                       "match": g.structural_match},
        "locus": {"computed": common_json(g.locus), "printed": common_json(g.printed_locus),
                  "match": g.locus_match},
    }


def dumps(payload: Any) -> str:
    return json.dumps(payload, indent=2, sort_keys=False, ensure_ascii=True) + "\n"


# -- text -------------------------------------------------------------------

def factor_lines(p: LProduct, indent: str = "  ") -> list[str]:
    if p.is_one:
        return [f"{indent}1"]
    return [f"{indent}{f}" + ("" if e == 1 else f"^{e}") for f, e in p.items()]


def factor_text_from_json(entry: dict[str, Any]) -> str:
    """Rebuild the text line for one JSON factor entry."""
    arg = format_linear(int(entry["s_coeff"]), parse_rational(entry["shift"]))
    e = int(entry["exponent"])
    return f"L({arg}, {entry['kernel']})" + ("" if e == 1 else f"^{e}")


def shared_lines(shared: tuple[SharedLocus, ...], indent: str = "  ") -> list[str]:
    out = []
    for x in shared:
        cfgs = "; ".join(c.label() for c in x.configs)
        out.append(f"{indent}Re(s) = {x.re_s}  under [{cfgs}]")
        out += [f"{indent}  left:  {y.describe()}" for y in x.left]
        out += [f"{indent}  right: {y.describe()}" for y in x.right]
    return out

