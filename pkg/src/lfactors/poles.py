"""Pole loci of atomized L-products and the induction-strategy check.

Model: an atomic ``L(A*s + B, K)`` can only have poles where ``Re(A*s + B) = 0``,
i.e. on the vertical line ``Re(s) = -B/A``, and only if its gate is open under
the chosen :class:`TauConfig`.  Lines with equal real part are treated as
shared; the lattice of imaginary parts is ignored, which can only enlarge
common-pole sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from lfactors.closedforms import straddles
from lfactors.core import RHO, RHO_MINUS, TAU_SIGMA, Kernel, LFactor, LProduct
from lfactors.decompositions import DiscrepancyReport, Way, WaySpec, discrepancy
from lfactors.normalization import ALL_CONFIGS, GroupType, TauConfig
from lfactors.params import DiscreteSeriesParam, check_param

GATE_PLUS = "pole_side=plus"
GATE_MINUS = "pole_side=minus"
GATE_SIGMA = "sigma_pole"
GATE_ALWAYS = "always"


class NotAtomic(ValueError):
    """Raised when a product still contains composite kernels."""


def gate_of(kernel: Kernel) -> str:
    return {RHO: GATE_PLUS, RHO_MINUS: GATE_MINUS, TAU_SIGMA: GATE_SIGMA}.get(kernel.kind, GATE_ALWAYS)


def gate_open(gate: str, config: TauConfig) -> bool:
    if gate == GATE_PLUS:
        return config.pole_side > 0
    if gate == GATE_MINUS:
        return config.pole_side < 0
    if gate == GATE_SIGMA:
        return config.sigma_pole
    return True


@dataclass(frozen=True, order=True)
class PoleLocus:
    re_s: Fraction
    kernel: Kernel = field(compare=False)
    gate: str
    factor: LFactor = field(compare=False)
    multiplicity: int = 1

    def describe(self) -> str:
        return f"Re(s)={self.re_s} via {self.factor} [{self.gate}]"


def _require_atomic(p: LProduct) -> None:
    if not p.is_atomic:
        raise NotAtomic(f"atomize the product first: {p}")


def _loci(p: LProduct, config: TauConfig | None, sign: int) -> list[PoleLocus]:
    _require_atomic(p)
    out = []
    for f, e in p.items():
        if (e > 0) != (sign > 0):
            continue
        gate = gate_of(f.kernel)
        if config is not None and not gate_open(gate, config):
            continue
        out.append(PoleLocus(-f.shift / f.s_coeff, f.kernel, gate, f, abs(e)))
    return sorted(out, key=lambda x: (x.re_s, x.factor.sort_key()))


def pole_loci(p: LProduct, config: TauConfig) -> list[PoleLocus]:
    """Loci of the positive-exponent factors whose gate fires under ``config``."""
    return _loci(p, config, 1)


def zero_loci(p: LProduct, config: TauConfig | None = None) -> list[PoleLocus]:
    """Loci contributed by negative exponents (reported, never cancelled)."""
    return _loci(p, config, -1)


def all_pole_loci(p: LProduct) -> list[PoleLocus]:
    """Loci firing under at least one configuration."""
    return _loci(p, None, 1)


def sign_class(p: LProduct) -> str:
    """``empty``, ``zero-only``, ``nonpositive``, ``nonnegative`` or ``mixed``."""
    res = [x.re_s for x in all_pole_loci(p)]
    if not res:
        return "empty"
    lo, hi = min(res), max(res)
    if lo == hi == 0:
        return "zero-only"
    if hi <= 0:
        return "nonpositive"
    if lo >= 0:
        return "nonnegative"
    return "mixed"


@dataclass(frozen=True)
class SharedLocus:
    re_s: Fraction
    configs: tuple[TauConfig, ...]
    left: tuple[PoleLocus, ...]
    right: tuple[PoleLocus, ...]


@dataclass(frozen=True)
class CommonPoleReport:
    left_label: str
    right_label: str
    shared: tuple[SharedLocus, ...]

    @property
    def verdict(self) -> str:
        if not self.shared:
            return "coprime"
        if all(x.re_s == 0 for x in self.shared):
            return "common-at-zero-only"
        return "other"

    def points(self) -> set[Fraction]:
        return {x.re_s for x in self.shared}


def common_loci(x: LProduct, y: LProduct, left_label: str = "left",
                right_label: str = "right") -> CommonPoleReport:
    """Intersect pole lines of two atomized products config by config."""
    by_point: dict[Fraction, tuple[list, set, set]] = {}
    for config in ALL_CONFIGS:
        lx, ly = pole_loci(x, config), pole_loci(y, config)
        for re in sorted({a.re_s for a in lx} & {b.re_s for b in ly}):
            configs, left, right = by_point.setdefault(re, ([], set(), set()))
            configs.append(config)
            left.update(a for a in lx if a.re_s == re)
            right.update(b for b in ly if b.re_s == re)
    shared = tuple(
        SharedLocus(re, tuple(cfgs), tuple(sorted(lf, key=_locus_key)), tuple(sorted(rt, key=_locus_key)))
        for re, (cfgs, lf, rt) in sorted(by_point.items())
    )
    return CommonPoleReport(left_label, right_label, shared)


def _locus_key(x: PoleLocus):
    return (x.re_s, x.factor.sort_key())


def common_poles(x: DiscrepancyReport, y: DiscrepancyReport) -> CommonPoleReport:
    return common_loci(x.P, y.P, x.spec.label(), y.spec.label())


def locus_gcd(x: LProduct, y: LProduct) -> CommonPoleReport:
    """Shared pole lines of two inverse products, i.e. common zero lines of the inverses."""
    return common_loci(x.inverse(), y.inverse(), "first", "second")


# -- the induction strategy --------------------------------------------------

HALF_PLANE = "holomorphic on Re(s) > 0"
MULTIPLICITY_FREE = "multiplicity-free at Re(s) = 0"


@dataclass(frozen=True)
class StrategyVerdict:
    c: int
    a: int
    param: DiscreteSeriesParam
    group: GroupType
    case: str
    pair: tuple[str, str]
    common: tuple[SharedLocus, ...]
    offending: tuple[SharedLocus, ...]
    reductions: tuple[tuple[str, bool], ...] = ()
    axioms: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.offending and all(ok for _, ok in self.reductions)

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"


def _half_plane_loci(p: LProduct, label: str) -> CommonPoleReport:
    # The unnormalized operator has no poles on Re(s) > 0, so only poles of P
    # with Re(s) <= 0 can survive the comparison.
    shared = []
    for config in ALL_CONFIGS:
        for x in pole_loci(p, config):
            if x.re_s <= 0:
                shared.append((x.re_s, config, x))
    points: dict[Fraction, tuple[list, set]] = {}
    for re, config, x in shared:
        cfgs, loci = points.setdefault(re, ([], set()))
        if config not in cfgs:
            cfgs.append(config)
        loci.add(x)
    return CommonPoleReport(label, HALF_PLANE, tuple(
        SharedLocus(re, tuple(cfgs), tuple(sorted(loci, key=_locus_key)), ())
        for re, (cfgs, loci) in sorted(points.items())))


def reduce_param(a: int, param: DiscreteSeriesParam) -> tuple[DiscreteSeriesParam, list[int]]:
    """Drop every segment pair not straddling ``a``; returns the rest and the dropped pair indices."""
    r = list(param.r)
    dropped: list[int] = []
    k = 0
    original = 0
    while 2 * k + 1 < len(r):
        r1, r2 = r[2 * k], r[2 * k + 1]
        if r1 > a > r2:
            k += 1
        else:
            dropped.append(original)
            del r[2 * k:2 * k + 2]
        original += 1
    return DiscreteSeriesParam(tuple(r), param.sigma_present), dropped


def strategy_check(c: int, a: int, param: DiscreteSeriesParam = DiscreteSeriesParam(),
                   group: GroupType = GroupType.SP) -> StrategyVerdict:
    """Run the designated pair of decompositions and test that common poles sit on Re(s) = 0.

    Segment pairs not straddling ``a`` are first removed by the segment
    reduction, which must have trivial discrepancy.  Common loci at ``Re(s) = 0``
    are discharged by the multiplicity-free axiom.
    """
    check_param(param)
    if c < 1 or a < 1:
        raise ValueError(f"c and a must be positive, got c={c}, a={a}")
    reductions: list[tuple[str, bool]] = []
    current = param
    reduced, dropped = reduce_param(a, param)
    for _ in dropped:
        # always peel the first non-straddling pair of what is left
        _, idx = reduce_param(a, current)
        spec = WaySpec(Way.CL_WAY3, c, a, param=current, group=group, pair=idx[0])
        reductions.append((spec.label(), discrepancy(spec).P.is_one))
        current = DiscreteSeriesParam(current.r[:2 * idx[0]] + current.r[2 * idx[0] + 2:],
                                      current.sigma_present)
    # a strictly decreasing parameter has at most one pair with r1 > a > r2
    assert current == reduced and reduced.t <= 2

    def rep(way: Way) -> DiscrepancyReport:
        return discrepancy(WaySpec(way, c, a, param=reduced, group=group))

    axioms = (MULTIPLICITY_FREE,)
    if c == 1 and a == 1 and reduced.t == 0:
        return StrategyVerdict(c, a, param, group, "base case", ("-", "-"), (), (),
                               tuple(reductions), ())
    if c >= 2 and a >= 2:
        case, x, y = "general step", rep(Way.CL_WAY1), rep(Way.CL_WAY1P)
        report = common_poles(x, y)
    elif a == 1 and reduced.t == 0:
        case, x, y = "rank-one base case", rep(Way.CL_WAY1), rep(Way.CL_WAY2)
        report = common_poles(x, y)
    elif a == 1:
        if c == 1:
            case, x = "Steinberg base case", rep(Way.CL_WAY3)
            report = _half_plane_loci(x.P, x.spec.label())
            axioms = (HALF_PLANE, MULTIPLICITY_FREE)
        else:
            case, x, y = "rank-one induction step", rep(Way.CL_WAY1), rep(Way.CL_WAY3)
            report = common_poles(x, y)
    else:
        case, x = "Steinberg induction step", rep(Way.CL_WAY1P)
        report = _half_plane_loci(x.P, x.spec.label())
        axioms = (HALF_PLANE, MULTIPLICITY_FREE)
    offending = tuple(s for s in report.shared if s.re_s != 0)
    return StrategyVerdict(c, a, param, group, case, (report.left_label, report.right_label),
                           report.shared, offending, tuple(reductions), axioms)


def strategy_params(a: int, max_r: int = 8) -> list[DiscreteSeriesParam]:
    """Two-segment parameters with ``r1 > a > r2`` and ``r1 <= max_r``."""
    from lfactors.params import enumerate_params

    return [p for p in enumerate_params(max_r, 2) if straddles(a, p)]


# -- gcd of the normalization inverses ----------------------------------------

@dataclass(frozen=True)
class GcdReport:
    """Two readings of a gcd of inverse products.

    ``structural`` keeps only factors present with the same argument and
    kernel in both inputs; ``locus`` keeps the shared zero lines of the
    inverses under the pole model.
    """

    c: int
    inputs: tuple[LProduct, LProduct]
    structural: LProduct
    locus: CommonPoleReport
    printed_inputs: tuple[LProduct, LProduct]
    printed_structural: LProduct
    printed_locus: CommonPoleReport

    def locus_signature(self, report: CommonPoleReport) -> tuple:
        return tuple((x.re_s, x.configs) for x in report.shared)

    @property
    def locus_match(self) -> bool:
        return self.locus_signature(self.locus) == self.locus_signature(self.printed_locus)

    @property
    def structural_match(self) -> bool:
        return self.structural == self.printed_structural


def corollary_gcd(c: int, group: GroupType = GroupType.SP) -> GcdReport:
    """gcd of ``alpha_c(s)^-1`` and ``(beta_c(s) beta_c(-s))^-1`` against the printed pair."""
    from lfactors.core import L, rho_minus, tau_sigma
    from lfactors.normalization import corollary_gcd_inputs, gcd_products

    x, y = corollary_gcd_inputs(c, group)
    px = L(1, -Fraction(c - 1, 2), tau_sigma()).inverse()
    py = L(-2, c - 1, rho_minus()).inverse()
    return GcdReport(c, (x, y), gcd_products(x, y), locus_gcd(x, y),
                     (px, py), gcd_products(px, py), locus_gcd(px, py))
