"""Reduced decompositions and their normalization discrepancies.

Each "way" embeds one inducing datum into a product of two smaller ones.  The
intertwining operator then factors through three (classical) or two (GL)
smaller operators, and the discrepancy ``P`` is

    (product of the constituent normalization factors) / (target factor).

Exponents are tracked as linear forms: a piece ``rho_c(tau_a)`` sitting at
``|det|^{s + delta}`` is recorded as ``Piece(c, a, delta)``.  A GL operator
swapping ``X |det|^{u}`` past ``Y |det|^{v}`` is normalized by
``alpha_GL`` evaluated where twice its variable equals ``u - v``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from lfactors.core import LProduct, atomize, translate
from lfactors.normalization import GroupType, alpha_classical, alpha_gl_at
from lfactors.params import DiscreteSeriesParam, check_param

HALF = Fraction(1, 2)


class Way(enum.Enum):
    GL_WAY1 = "gl1"
    GL_WAY2 = "gl2"
    GL_WAY3 = "gl3"
    GL_WAY4 = "gl4"
    GL_WAY1P = "gl1p"
    GL_WAY2P = "gl2p"
    GL_WAY3P = "gl3p"
    GL_WAY4P = "gl4p"
    CL_WAY1 = "cl1"
    CL_WAY2 = "cl2"
    CL_WAY1P = "cl1p"
    CL_WAY2P = "cl2p"
    CL_WAY3 = "cl3"

    @property
    def is_gl(self) -> bool:
        return self.value.startswith("gl")

    @classmethod
    def parse(cls, name: str) -> Way:
        try:
            return cls(name.lower())
        except ValueError:
            names = ", ".join(w.value for w in cls)
            raise ValueError(f"unknown way {name!r}; expected one of {names}") from None


class OutOfRange(ValueError):
    """Way parameters outside the range where the embedding exists."""


@dataclass(frozen=True)
class WaySpec:
    way: Way
    c: int
    a: int
    d: int = 1
    b: int = 1
    param: DiscreteSeriesParam = field(default_factory=DiscreteSeriesParam)
    group: GroupType = GroupType.SP
    pair: int = 0  # which (r_{2k+1}, r_{2k+2}) pair CL_WAY3 peels off

    def label(self) -> str:
        if self.way.is_gl:
            return f"{self.way.value}(c={self.c},d={self.d},a={self.a},b={self.b})"
        extra = f",pair={self.pair}" if self.way is Way.CL_WAY3 and self.pair else ""
        return (f"{self.way.value}(c={self.c},a={self.a},r={self.param.label()},"
                f"group={self.group.value}{extra})")


@dataclass(frozen=True)
class Piece:
    """``rho_c(tau_a)`` at ``|det|^{sign*s + delta}``."""

    c: int
    a: int
    delta: Fraction
    sign: int = 1

    def describe(self) -> str:
        s = "s" if self.sign > 0 else "-s"
        d = "" if self.delta == 0 else (f"+{self.delta}" if self.delta > 0 else f"{self.delta}")
        return f"rho_{self.c}(tau_{self.a})|det|^({s}{d})"


def swap_factor(left: Piece, right: Piece) -> LProduct:
    """alpha_GL for moving ``left`` past ``right``."""
    coeff = left.sign - right.sign
    return alpha_gl_at(left.c, right.c, left.a, right.a, coeff, left.delta - right.delta)


def split_c(c: int, a: int, p: int, sign: int = 1) -> tuple[Piece, Piece]:
    """``rho_c(tau_a) -> |det|^{-q/2} rho_p(tau_a) x |det|^{p/2} rho_q(tau_a)``, ``q = c - p``."""
    q = c - p
    if not (1 <= p < c):
        raise OutOfRange(f"c-split needs 1 <= p < c, got p={p}, c={c}")
    return (Piece(p, a, -Fraction(q, 2), sign), Piece(q, a, Fraction(p, 2), sign))


def split_a(c: int, a: int, p: int, sign: int = 1) -> tuple[Piece, Piece]:
    """``rho_c(tau_a) -> |det|^{q/2} rho_c(tau_p) x |det|^{-p/2} rho_c(tau_q)``, ``q = a - p``."""
    q = a - p
    if not (1 <= p < a):
        raise OutOfRange(f"a-split needs 1 <= p < a, got p={p}, a={a}")
    return (Piece(c, p, Fraction(q, 2), sign), Piece(c, q, -Fraction(p, 2), sign))


@dataclass(frozen=True)
class DiscrepancyReport:
    spec: WaySpec
    P: LProduct
    constituents: tuple[tuple[str, LProduct], ...]
    target: tuple[str, LProduct]
    closed_form_match: bool | None = None

    def check_exact(self) -> bool:
        """Product of constituents equals ``P`` times the target, atomically."""
        lhs = atomize(LProduct.prod(p for _, p in self.constituents))
        return lhs == self.P * atomize(self.target[1])


def _gl_discrepancy(spec: WaySpec) -> DiscrepancyReport:
    c, d, a, b = spec.c, spec.d, spec.a, spec.b
    if min(c, d, a, b) < 1:
        raise OutOfRange("GL ways need c, d, a, b >= 1")
    left = Piece(c, a, Fraction(0), 1)
    right = Piece(d, b, Fraction(0), -1)
    w = spec.way
    try:
        if w is Way.GL_WAY1:
            lefts, rights = split_c(c, a, c - 1), (right,)
        elif w is Way.GL_WAY2:
            lefts, rights = split_c(c, a, 1), (right,)
        elif w is Way.GL_WAY3:
            lefts, rights = (left,), split_c(d, b, d - 1, -1)
        elif w is Way.GL_WAY4:
            lefts, rights = (left,), split_c(d, b, 1, -1)
        elif w is Way.GL_WAY1P:
            lefts, rights = split_a(c, a, a - 1), (right,)
        elif w is Way.GL_WAY2P:
            lefts, rights = split_a(c, a, 1), (right,)
        elif w is Way.GL_WAY3P:
            lefts, rights = (left,), split_a(d, b, b - 1, -1)
        else:
            lefts, rights = (left,), split_a(d, b, 1, -1)
    except OutOfRange as exc:
        raise OutOfRange(f"{spec.label()}: {exc}") from None
    constituents = tuple(
        (f"alpha_GL[{x.describe()} past {y.describe()}]", swap_factor(x, y))
        for x in lefts for y in rights
    )
    target = (f"alpha_GL(s, rho_{c}(tau_{a}), rho_{d}(tau_{b}))", swap_factor(left, right))
    P = atomize(LProduct.prod(p for _, p in constituents) / target[1])
    return DiscrepancyReport(spec, P, constituents, target)


def _alpha_at(c: int, a: int, delta: Fraction, spec: WaySpec, param=None) -> tuple[str, LProduct]:
    param = spec.param if param is None else param
    arg = "s" if delta == 0 else f"s{'+' if delta > 0 else ''}{delta}"
    label = f"alpha_{{{c},{a}}}({arg}; r={param.label()})"
    return label, translate(alpha_classical(c, a, param, spec.group), delta)


def classical_split(spec: WaySpec, first: Piece, second: Piece) -> DiscrepancyReport:
    """Discrepancy for ``|det|^s rho_c(tau_a) -> first x second``, then ``x| sigma_r``.

    The operator factors as ``M(second)``, then the GL swap of ``first`` past
    the reflected ``second``, then ``M(first)``.
    """
    reflected = Piece(second.c, second.a, -second.delta, -1)
    constituents = (
        _alpha_at(first.c, first.a, first.delta, spec),
        (f"alpha_GL[{first.describe()} past {reflected.describe()}]", swap_factor(first, reflected)),
        _alpha_at(second.c, second.a, second.delta, spec),
    )
    target = _alpha_at(spec.c, spec.a, Fraction(0), spec)
    P = atomize(LProduct.prod(p for _, p in constituents) / target[1])
    return DiscrepancyReport(spec, P, constituents, target)


def peel_pair(param: DiscreteSeriesParam, k: int) -> tuple[int, int, DiscreteSeriesParam]:
    """``(m, 4e, rest)`` for ``sigma_r -> |det|^e tau_m x| sigma_rest`` at pair ``k``.

    ``m = (r1 + r2)/2`` and ``e = (r1 - r2)/4``; ``4e`` is returned to stay integral.
    """
    if 2 * k + 1 >= param.t:
        raise OutOfRange(f"pair index {k} out of range for r={param.r}")
    r1, r2 = param.r[2 * k], param.r[2 * k + 1]
    rest = DiscreteSeriesParam(param.r[:2 * k] + param.r[2 * k + 2:], param.sigma_present)
    return (r1 + r2) // 2, r1 - r2, rest


def _way3(spec: WaySpec) -> DiscrepancyReport:
    m, four_e, rest = peel_pair(spec.param, spec.pair)
    e = Fraction(four_e, 4)
    c, a = spec.c, spec.a
    speh = Piece(c, a, Fraction(0), 1)
    seg = Piece(1, m, e, 0)
    mirror = Piece(c, a, Fraction(0), -1)
    constituents = (
        (f"alpha_GL[{speh.describe()} past tau_{m}|det|^{e}]", swap_factor(speh, seg)),
        _alpha_at(c, a, Fraction(0), spec, rest),
        (f"alpha_GL[tau_{m}|det|^{e} past {mirror.describe()}]", swap_factor(seg, mirror)),
    )
    target = _alpha_at(c, a, Fraction(0), spec)
    P = atomize(LProduct.prod(p for _, p in constituents) / target[1])
    return DiscrepancyReport(spec, P, constituents, target)


def discrepancy(spec: WaySpec) -> DiscrepancyReport:
    """Compute the exact atomized discrepancy ``P`` for one way."""
    if spec.c < 1 or spec.a < 1:
        raise OutOfRange(f"{spec.label()}: c and a must be positive")
    if spec.way.is_gl:
        return _gl_discrepancy(spec)
    check_param(spec.param)
    c, a = spec.c, spec.a
    w = spec.way
    if w in (Way.CL_WAY1, Way.CL_WAY2) and c < 2:
        raise OutOfRange(f"{spec.label()}: needs c >= 2")
    if w in (Way.CL_WAY1P, Way.CL_WAY2P) and a < 2:
        raise OutOfRange(f"{spec.label()}: needs a >= 2")
    if w is Way.CL_WAY1:
        return classical_split(spec, *split_c(c, a, c - 1))
    if w is Way.CL_WAY2:
        return classical_split(spec, *split_c(c, a, 1))
    if w is Way.CL_WAY1P:
        return classical_split(spec, *split_a(c, a, a - 1))
    if w is Way.CL_WAY2P:
        return classical_split(spec, *split_a(c, a, 1))
    if spec.param.t == 0:
        raise OutOfRange(f"{spec.label()}: needs a nonempty parameter")
    return _way3(spec)
