"""Acceptance criteria 1-9, one test each.

Every test prints ``criterion N: PASS`` or ``criterion N: FAIL`` followed by a
short summary, then asserts the verdict.
"""

from __future__ import annotations

from fractions import Fraction as F

import pytest

from lfactors.closedforms import check_spec, identity_a_audit, printed_form, straddling_params
from lfactors.core import L, atomize, speh_tensor, tau_tau, twisted_ext
from lfactors.decompositions import Way, WaySpec, discrepancy
from lfactors.normalization import TauConfig
from lfactors.poles import common_poles, corollary_gcd
from lfactors.sweeps import rank_one_common_poles, recursion_sweep, sign_class_sweep, strategy_sweep


@pytest.fixture
def verdict(capsys):
    def report(n: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'} ({detail})")
        assert ok, detail
    return report


def _matches(spec: WaySpec) -> bool:
    return discrepancy(spec).P == atomize(printed_form(spec).product)


def test_criterion_1_rank_one_closed_forms(verdict):
    specs = [WaySpec(w, c, 1) for c in range(2, 11) for w in (Way.CL_WAY1, Way.CL_WAY2)]
    bad = [s.label() for s in specs if not _matches(s)]
    verdict(1, not bad, f"{len(specs) - len(bad)}/{len(specs)} first/last splits match; bad={bad}")


def test_criterion_2_gl_closed_forms(verdict):
    specs = [WaySpec(Way.GL_WAY1P, 1, a, 1, 1) for a in range(2, 13)]
    specs += [WaySpec(w, c, 1, 1, 1) for c in range(2, 13) for w in (Way.GL_WAY1, Way.GL_WAY2)]
    bad = [s.label() for s in specs if not _matches(s)]
    # the printed forms themselves, written out independently of the transcriptions
    for a in range(2, 13):
        if discrepancy(WaySpec(Way.GL_WAY1P, 1, a, 1, 1)).P != atomize(L(2, -F(a - 1, 2), tau_tau())):
            bad.append(f"gl1p a={a}")
    common = {}
    for c in range(2, 13):
        rep = common_poles(discrepancy(WaySpec(Way.GL_WAY1, c, 1, 1, 1)),
                           discrepancy(WaySpec(Way.GL_WAY2, c, 1, 1, 1)))
        if rep.shared:
            common[c] = sorted(2 * x for x in rep.points())
    ok = not bad and common == {2: [-F(1, 2)]}
    verdict(2, ok, f"{len(specs) - len(bad)}/{len(specs)} GL forms match; common poles in 2s: {common}")


def test_criterion_3_general_step_forms(verdict):
    total = p1_bad = p1p_bad = identified = 0
    first_bad = []
    for c in range(2, 7):
        for a in range(2, 7):
            for param in straddling_params(a, 8):
                for way in (Way.CL_WAY1, Way.CL_WAY1P):
                    spec = WaySpec(way, c, a, param=param)
                    total += 1
                    identified += check_spec("general-step", spec).match_identified
                    if not _matches(spec):
                        if way is Way.CL_WAY1:
                            p1_bad += 1
                        else:
                            p1p_bad += 1
                        if len(first_bad) < 3:
                            first_bad.append(spec.label())
    ok = p1_bad == p1p_bad == 0
    verdict(3, ok, f"{total - p1_bad - p1p_bad}/{total} match; P1 mismatches={p1_bad}, "
                   f"P1' mismatches={p1p_bad}; first: {first_bad}; "
                   f"{identified}/{total} with tau x sigma identified (not used for the verdict)")


def test_criterion_4_common_pole_enumeration(verdict):
    found = {c: rep for c, rep in rank_one_common_poles(10) if rep.shared}
    minus_sigma = (TauConfig(-1, True),)
    ok = (set(found) == {2, 3}
          and found[2].points() == {F(0), -F(1, 2)}
          and [(x.re_s, x.configs) for x in found[3].shared] == [(0, minus_sigma)])
    shown = {c: sorted(str(x) for x in rep.points()) for c, rep in found.items()}
    verdict(4, ok, f"common poles at {shown}")


def test_criterion_5_consistency_invariant(verdict):
    grid = [(zc, F(k - 10, 4)) for k in range(20) for zc in (2,)]
    bad = [(a, zc, z) for a in range(1, 13) for zc, z in grid
           if atomize(L(zc, z, twisted_ext(a, 1)) * L(zc, z, twisted_ext(a, -1)))
           != atomize(L(zc, z, speh_tensor(a, a)))]
    verdict(5, not bad, f"{12 * len(grid) - len(bad)}/{12 * len(grid)} (a, z) points balance")


def test_criterion_6_gl_recursions(verdict):
    results = recursion_sweep(12)
    bad = [label for label, ok in results if not ok]
    verdict(6, not bad, f"{len(results) - len(bad)}/{len(results)} recursion instances hold")


def test_criterion_7_gcd_corollary(verdict):
    reports = [corollary_gcd(c) for c in range(1, 9)]
    locus_bad = [g.c for g in reports if not g.locus_match]
    structural_bad = [g.c for g in reports if not g.structural_match]
    verdict(7, not locus_bad, f"locus reading mismatches at c={locus_bad}; "
                              f"structural reading mismatches at c={structural_bad}")


def test_criterion_8_identity_a_audit(verdict):
    audit = identity_a_audit(8, 10)
    counts = {name: f"{sum(c.balanced for c in cases)}/{len(cases)}" for name, cases in audit.readings}
    verdict(8, audit.passed, f"balanced: {counts}; uniform: {audit.uniform()}")


def test_criterion_9_sign_classes_and_strategy(verdict):
    signs = sign_class_sweep(8, 6, 8)
    bad_signs = [(s.way, s.got) for s in signs if not s.ok]
    strategy = strategy_sweep(6, 6, 8)
    bad_strategy = [(v.c, v.a, v.param.r) for v in strategy if not v.passed]
    ok = not bad_signs and not bad_strategy
    verdict(9, ok, f"sign classes {len(signs) - len(bad_signs)}/{len(signs)}; strategy "
                   f"{len(strategy) - len(bad_strategy)}/{len(strategy)} PASS")
