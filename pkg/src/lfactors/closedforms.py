"""Transcribed closed forms for the discrepancies, and the regression driver.

Each closed form is a literal transcription of a published product formula,
kept apart from the engine so that disagreements stay visible.  Where a
formula has optional factors, the selection rule is recorded in
``PrintedForm.predicates``.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from fractions import Fraction

from lfactors.core import (
    L,
    LFactor,
    LProduct,
    atomize,
    rho,
    rho_minus,
    speh_tensor,
    tau_sigma,
    tau_tau,
    tensor_segment,
    twisted_ext,
)
from lfactors.decompositions import DiscrepancyReport, OutOfRange, Way, WaySpec, discrepancy
from lfactors.normalization import GroupType, alpha_gl, sigma_term_kernel
from lfactors.params import DiscreteSeriesParam, enumerate_params

F = Fraction


@dataclass(frozen=True)
class PrintedForm:
    source: str
    product: LProduct
    predicates: tuple[tuple[str, bool], ...] = ()


def straddles(a: int, param: DiscreteSeriesParam) -> bool:
    """``r1 > a > r2`` for a two-segment parameter."""
    return param.t == 2 and param.r[0] > a > param.r[1]


def _sigma_term(coeff_shift: Fraction, a: int, param: DiscreteSeriesParam,
                group: GroupType) -> LProduct:
    kernel = sigma_term_kernel(a, param, group)
    return LProduct.one() if kernel is None else L(1, coeff_shift, kernel)


def _tail_p1(c: int, a: int, param: DiscreteSeriesParam, group: GroupType) -> LProduct:
    """``L(2s, tau_a, rho-/rho) L(2s+c-1, tau_a, rho) L(s+(c-1)/2, tau_a x sigma_r)``."""
    first = twisted_ext(a, -1 if c % 2 else 1)
    return (L(2, 0, first) * L(2, c - 1, twisted_ext(a, 1))
            * _sigma_term(F(c - 1, 2), a, param, group))


def _cl1(spec: WaySpec) -> PrintedForm | None:
    c, a, param = spec.c, spec.a, spec.param
    if a == 1 and param.t == 0:
        return PrintedForm("rank-one base case, first split", _tail_p1(c, 1, param, spec.group))
    if a == 1 and straddles(1, param):
        return PrintedForm("rank-one induction step, first split",
                           _tail_p1(c, 1, param, spec.group))
    if a >= 2 and straddles(a, param):
        extra = LProduct.prod(L(2, j, speh_tensor(a, a)) for j in range(1, c - 1))
        return PrintedForm("general step, first split", extra * _tail_p1(c, a, param, spec.group))
    return None


def _cl2(spec: WaySpec) -> PrintedForm | None:
    c = spec.c
    if spec.a != 1 or spec.param.t != 0:
        return None
    second = rho() if c % 2 == 0 else rho_minus()
    p = (L(2, 2 - c, rho()) * L(2, 1, second)
         * _sigma_term(-F(c - 3, 2), 1, spec.param, spec.group))
    return PrintedForm("rank-one base case, last split", p)


def _cl1p(spec: WaySpec) -> PrintedForm | None:
    c, a, param = spec.c, spec.a, spec.param
    if not straddles(a, param):
        return None
    r2 = param.r[1]
    if c == 1:
        first = rho_minus() if a % 2 else rho()
        p = L(2, 0, first) * L(2, -(a - 1), rho())
        if r2 > 0:
            p = p * L(1, -F(a - r2, 2), tau_tau()) * L(1, -F(a - 1, 2), tau_sigma())
        return PrintedForm("Steinberg case, a-split", p, (("r2 > 0", r2 > 0), ("a odd", a % 2 == 1)))
    # bracketed general form
    tt = r2 != 0
    ts = sigma_term_kernel(a, param, spec.group) is not None
    p = LProduct.one()
    if tt:
        p = p * L(1, -F(a - r2, 2) - F(c - 1, 2), tau_tau())
    if ts:
        p = p * L(1, -F(a - 1, 2) - F(c - 1, 2), tau_sigma())
    for i in range(1, (c + 1) // 2 + 1):
        p = p * L(2, -c - 1 + 2 * i, rho_minus()) * L(2, -(a - 1) - c - 1 + 2 * i, rho())
    for i in range(1, c // 2 + 1):
        p = p * L(2, -c + 2 * i, rho()) * L(2, -(a - 1) - c + 2 * i, rho_minus())
    return PrintedForm("general step, a-split", p,
                       (("tau x tau bracket (r2 != 0)", tt), ("tau x sigma bracket", ts)))


def _cl3(spec: WaySpec) -> PrintedForm | None:
    c, a, param = spec.c, spec.a, spec.param
    if param.t < 2 or 2 * spec.pair + 1 >= param.t:
        return None
    r1, r2 = param.r[2 * spec.pair], param.r[2 * spec.pair + 1]
    if a >= r1 > r2 or r1 > r2 >= a:
        return PrintedForm("segment reduction, non-straddling pair", LProduct.one())
    if a != 1 or param.t != 2:
        return None
    if c == 1:
        p = L(1, 0, tau_sigma()) * L(1, F(r2 - 1, 2), tau_tau())
        return PrintedForm("Steinberg base case, segment reduction", p)
    if r2 == 0:
        p = L(1, -F(c - r2, 2), tau_tau())
    else:
        p = L(1, -F(c - 1, 2), tau_sigma()) * L(1, -F(c - r2, 2), tau_tau())
    return PrintedForm("rank-one induction step, segment reduction", p, (("r2 == 0", r2 == 0),))


def _gl(spec: WaySpec) -> PrintedForm | None:
    c, d, a, b, w = spec.c, spec.d, spec.a, spec.b, spec.way
    if c == d == 1:
        if w is Way.GL_WAY1P and b == 1 and a >= 2:
            return PrintedForm("GL Steinberg case, a-split", L(2, -F(a - 1, 2), tau_tau()))
        if w is Way.GL_WAY1P and 2 <= a < b:
            return PrintedForm("GL Steinberg recursion (a < b)", LProduct.one())
        if w is Way.GL_WAY4P and a >= b >= 2:
            return PrintedForm("GL Steinberg recursion (a >= b)", LProduct.one())
    if a == b == 1:
        if w is Way.GL_WAY1 and d == 1 and c >= 2:
            return PrintedForm("GL Speh case, first split", L(2, F(c - 1, 2), tau_tau()))
        if w is Way.GL_WAY2 and d == 1 and c >= 2:
            return PrintedForm("GL Speh case, last split", L(2, -F(c - 3, 2), tau_tau()))
        if w is Way.GL_WAY1 and 2 <= c < d:
            return PrintedForm("GL Speh recursion (c < d)", LProduct.one())
        if w is Way.GL_WAY4 and c >= d >= 2:
            return PrintedForm("GL Speh recursion (c >= d)", LProduct.one())
    return None


_DISPATCH = {
    Way.CL_WAY1: _cl1,
    Way.CL_WAY2: _cl2,
    Way.CL_WAY1P: _cl1p,
    Way.CL_WAY3: _cl3,
}


def printed_form(spec: WaySpec) -> PrintedForm | None:
    """The transcribed closed form for ``spec``, or ``None`` if none is printed."""
    if spec.way.is_gl:
        return _gl(spec)
    fn = _DISPATCH.get(spec.way)
    return fn(spec) if fn else None


def closed_form(spec: WaySpec) -> LProduct | None:
    form = printed_form(spec)
    return None if form is None else form.product


def checked_discrepancy(spec: WaySpec) -> DiscrepancyReport:
    """:func:`discrepancy` with ``closed_form_match`` filled in."""
    rep = discrepancy(spec)
    form = closed_form(spec)
    match = None if form is None else atomize(form) == rep.P
    return dataclasses.replace(rep, closed_form_match=match)


def identify_sigma_term(p: LProduct, param: DiscreteSeriesParam) -> LProduct:
    """Rewrite ``tau x sigma`` factors by the last segment length ``r_t``.

    With ``r_t = 0`` the factor ``L(z, tau x sigma_r)`` is read as 1 and with
    ``r_t = -1`` as ``L(z, tau x tau) = L(z, rho) L(z, rho-)``.  Other
    parameters are returned unchanged.
    """
    if param.t == 0 or param.r[-1] > 0:
        return p
    out = []
    for f, e in p.items():
        if f.kernel.kind != "tau x sigma":
            out.append((f, e))
        elif param.r[-1] == -1:
            out += [(LFactor(f.s_coeff, f.shift, rho()), e),
                    (LFactor(f.s_coeff, f.shift, rho_minus()), e)]
    return LProduct(out)


@dataclass(frozen=True)
class ClosedFormCheck:
    """One computed discrepancy against its printed form.

    ``match`` is exact equality of atomized products.  ``match_identified``
    compares both sides after :func:`identify_sigma_term`; it is reported
    alongside ``match`` and never replaces it.
    """

    suite: str
    spec: WaySpec
    source: str
    match: bool
    computed: LProduct
    printed: LProduct
    predicates: tuple[tuple[str, bool], ...] = ()
    match_identified: bool = False


def check_spec(suite: str, spec: WaySpec) -> ClosedFormCheck | None:
    form = printed_form(spec)
    if form is None:
        return None
    computed = discrepancy(spec).P
    printed = atomize(form.product)
    identified = (identify_sigma_term(computed, spec.param)
                  == identify_sigma_term(printed, spec.param))
    return ClosedFormCheck(suite, spec, form.source, computed == printed, computed, printed,
                           form.predicates, identified)


def straddling_params(a: int, max_r: int = 8) -> list[DiscreteSeriesParam]:
    return [p for p in enumerate_params(max_r, 2) if straddles(a, p)]


def non_straddling_params(a: int, max_r: int = 8) -> list[DiscreteSeriesParam]:
    return [p for p in enumerate_params(max_r, 2) if p.t == 2 and not straddles(a, p)]


def suite_specs(suite: str, group: GroupType = GroupType.SP, max_r: int = 8) -> list[WaySpec]:
    """Grid points for one named regression suite, in a fixed order."""
    specs: list[WaySpec] = []
    if suite == "rank-one":
        for c in range(2, 11):
            for way in (Way.CL_WAY1, Way.CL_WAY2):
                specs.append(WaySpec(way, c, 1, group=group))
    elif suite == "gl":
        for a in range(2, 13):
            specs.append(WaySpec(Way.GL_WAY1P, 1, a, 1, 1))
        for c in range(2, 13):
            specs.append(WaySpec(Way.GL_WAY1, c, 1, 1, 1))
            specs.append(WaySpec(Way.GL_WAY2, c, 1, 1, 1))
        for x in range(1, 9):
            for y in range(1, 9):
                specs.append(WaySpec(Way.GL_WAY4P if x >= y else Way.GL_WAY1P, 1, x, 1, y))
                specs.append(WaySpec(Way.GL_WAY4 if x >= y else Way.GL_WAY1, x, 1, y, 1))
    elif suite == "general-step":
        for c in range(2, 7):
            for a in range(2, 7):
                for p in straddling_params(a, max_r):
                    specs.append(WaySpec(Way.CL_WAY1, c, a, param=p, group=group))
                    specs.append(WaySpec(Way.CL_WAY1P, c, a, param=p, group=group))
    elif suite == "rank-one-induction":
        for c in range(2, 9):
            for p in straddling_params(1, max_r):
                specs.append(WaySpec(Way.CL_WAY1, c, 1, param=p, group=group))
                specs.append(WaySpec(Way.CL_WAY3, c, 1, param=p, group=group))
    elif suite == "steinberg":
        for a in range(2, 7):
            for p in straddling_params(a, max_r):
                specs.append(WaySpec(Way.CL_WAY1P, 1, a, param=p, group=group))
        for p in straddling_params(1, max_r):
            specs.append(WaySpec(Way.CL_WAY3, 1, 1, param=p, group=group))
    elif suite == "segment-reduction":
        for c in range(1, 5):
            for a in range(1, 7):
                for p in non_straddling_params(a, max_r):
                    specs.append(WaySpec(Way.CL_WAY3, c, a, param=p, group=group))
    else:
        raise ValueError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
    return specs


SUITES = ("rank-one", "gl", "general-step", "rank-one-induction", "steinberg",
          "segment-reduction")


def verify_closed_forms(suites: tuple[str, ...] | list[str] = SUITES,
                        group: GroupType = GroupType.SP) -> list[ClosedFormCheck]:
    out: list[ClosedFormCheck] = []
    for suite in suites:
        for spec in suite_specs(suite, group):
            check = check_spec(suite, spec)
            if check is not None:
                out.append(check)
    return out


# -- identity (a) and the GL recursions --------------------------------------

@dataclass(frozen=True)
class IdentityCase:
    a: int
    r1: int
    r2: int
    balanced: bool
    lhs: LProduct
    rhs: LProduct


@dataclass(frozen=True)
class IdentityAudit:
    """Both readings of the segment-merging identity over one grid."""

    readings: tuple[tuple[str, tuple[IdentityCase, ...]], ...]

    def uniform(self) -> list[str]:
        return [name for name, cases in self.readings if all(c.balanced for c in cases)]

    @property
    def passed(self) -> bool:
        return len(self.uniform()) == 1


READINGS = {
    "printed (r1+r2)/4": lambda r1, r2: F(r1 + r2, 4),
    "difference (r1-r2)/4": lambda r1, r2: F(r1 - r2, 4),
}


def identity_pairs(a: int, max_r: int) -> list[tuple[int, int]]:
    """``(r1, r2)`` of equal parity with ``r2 >= -1`` and the pair outside ``a``."""
    return [(r1, r2) for r1 in range(max_r, 0, -1) for r2 in range(r1 - 2, -2, -2)
            if a >= r1 > r2 or r1 > r2 >= a]


def identity_a_case(a: int, r1: int, r2: int, second_shift: Fraction) -> IdentityCase:
    """``L(s-(r1-r2)/4, tau_a x tau_m) L(s+e2, tau_a x tau_m)`` against ``L(s, tau_a x tau_r1) L(s, tau_a x tau_r2)``."""
    m = (r1 + r2) // 2
    if m == 0:
        lhs = LProduct.one()
    else:
        k = tensor_segment(a, m)
        lhs = L(1, -F(r1 - r2, 4), k) * L(1, second_shift, k)
    rhs = L(1, 0, tensor_segment(a, r1)) * L(1, 0, tensor_segment(a, r2))
    lhs, rhs = atomize(lhs), atomize(rhs)
    return IdentityCase(a, r1, r2, lhs == rhs, lhs, rhs)


def identity_a_audit(max_a: int = 8, max_r: int = 10) -> IdentityAudit:
    readings = []
    for name, shift in READINGS.items():
        cases = tuple(identity_a_case(a, r1, r2, shift(r1, r2))
                      for a in range(1, max_a + 1) for r1, r2 in identity_pairs(a, max_r))
        readings.append((name, cases))
    return IdentityAudit(tuple(readings))


def lemma32_sides(c: int, d: int) -> tuple[LProduct, LProduct]:
    """Both sides of the one-step recursion for ``alpha_GL(s, rho_c(tau), rho_d(tau))``."""
    if c < 1 or d < 1:
        raise OutOfRange(f"c and d must be positive, got ({c}, {d})")
    lhs = alpha_gl(c, d, 1, 1)
    if c >= d:
        rhs = alpha_gl(c, 1, 1, 1, F(d - 1, 4)) * alpha_gl(c, d - 1, 1, 1, -F(1, 4))
    else:
        rhs = alpha_gl(1, d, 1, 1, F(c - 1, 4)) * alpha_gl(c - 1, d, 1, 1, -F(1, 4))
    return atomize(lhs), atomize(rhs)


def lemma32_matching(c: int, d: int) -> bool:
    lhs, rhs = lemma32_sides(c, d)
    return lhs == rhs
