"""Normalization factors for intertwining operators on classical groups and GL.

``alpha_classical`` and ``beta_classical`` are the Casselman-Shahidi style
factors attached to ``|det|^s rho_c(tau_a) x| sigma_r``; ``alpha_gl`` is the
factor for the GL operator swapping two Speh representations.  All of them
return composite-kernel products; call :func:`lfactors.core.atomize` to
compare them factor by factor.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction

from lfactors.core import (
    LFactor,
    LProduct,
    Number,
    as_shift,
    atomize,
    reflect,
    speh_tensor,
    tensor_discrete,
    twisted_ext,
)
from lfactors.params import DiscreteSeriesParam, check_param


class GroupType(enum.Enum):
    U_EVEN = "u-even"
    U_ODD = "u-odd"
    SO_ODD = "so-odd"
    SP = "sp"
    SO_EVEN = "so-even"

    @property
    def rho_name(self) -> str:
        return _RHO_NAMES[self][0]

    @property
    def rho_minus_name(self) -> str:
        return _RHO_NAMES[self][1]

    @property
    def n0_zero_standard(self) -> bool:
        """Whether ``L(s, tau_a x sigma)`` becomes ``L(s, tau_a)`` (not 1) when ``n0 = 0``."""
        return self in (GroupType.SP, GroupType.U_ODD)

    @classmethod
    def parse(cls, name: str) -> GroupType:
        try:
            return cls(name.lower())
        except ValueError:
            names = ", ".join(g.value for g in cls)
            raise ValueError(f"unknown group {name!r}; expected one of {names}") from None


_RHO_NAMES = {
    GroupType.U_EVEN: ("Asai", "Asai (x) chi_E/F"),
    GroupType.U_ODD: ("Asai (x) chi_E/F", "Asai"),
    GroupType.SO_ODD: ("Sym^2", "Lambda^2"),
    GroupType.SP: ("Lambda^2", "Sym^2"),
    GroupType.SO_EVEN: ("Lambda^2", "Sym^2"),
}


@dataclass(frozen=True)
class TauConfig:
    """Which of the rank-one factors has a pole at argument zero.

    ``pole_side=+1`` means ``L(z, tau, rho)`` has the pole, ``-1`` means
    ``L(z, tau, rho-)`` does.  ``sigma_pole`` governs ``L(z, tau x sigma)``.
    """

    pole_side: int
    sigma_pole: bool

    def __post_init__(self) -> None:
        if self.pole_side not in (1, -1):
            raise ValueError(f"pole_side must be +1 or -1, got {self.pole_side}")

    def label(self) -> str:
        side = "rho" if self.pole_side > 0 else "rho-"
        return f"{side}-pole,sigma-pole={'yes' if self.sigma_pole else 'no'}"


ALL_CONFIGS: tuple[TauConfig, ...] = tuple(
    TauConfig(side, sig) for side, sig in itertools.product((1, -1), (False, True))
)


def sigma_term_kernel(a: int, param: DiscreteSeriesParam, group: GroupType):
    """Kernel for ``L(., tau_a x sigma_r)``, or ``None`` when it is 1.

    With ``n0 = 0`` the factor is the standard ``L(., tau_a)`` for Sp and odd
    unitary groups; it is carried as a ``tau x sigma`` atom (same shift
    ``(a-1)/2``) and flagged by :func:`sigma_term_convention`.
    """
    check_param(param)
    if param.sigma_present:
        return tensor_discrete(a, param)
    if group.n0_zero_standard:
        return tensor_discrete(a, DiscreteSeriesParam((), True))
    return None


def sigma_term_convention(param: DiscreteSeriesParam, group: GroupType) -> str:
    if param.sigma_present:
        return "tau x sigma_r"
    return "standard L(s, tau_a)" if group.n0_zero_standard else "trivial (=1)"


def _classical(c: int, a: int, param: DiscreteSeriesParam, group: GroupType,
               rho_shifts, rho_minus_shifts, sigma_shift: Fraction) -> LProduct:
    if c < 1 or a < 1:
        raise ValueError(f"c and a must be positive, got c={c}, a={a}")
    terms = [(LFactor(2, Fraction(b), twisted_ext(a, 1)), 1) for b in rho_shifts]
    terms += [(LFactor(2, Fraction(b), twisted_ext(a, -1)), 1) for b in rho_minus_shifts]
    kernel = sigma_term_kernel(a, param, group)
    if kernel is not None:
        terms.append((LFactor(1, sigma_shift, kernel), 1))
    return LProduct(terms)


def alpha_classical(c: int, a: int, param: DiscreteSeriesParam = DiscreteSeriesParam(),
                    group: GroupType = GroupType.SP) -> LProduct:
    """``alpha_{c,a}(s, tau, sigma_r)``::

        prod_{i=1}^{ceil(c/2)}  L(2s - 1 - c + 2i, tau_a, rho)
        prod_{i=1}^{floor(c/2)} L(2s - c + 2i,     tau_a, rho-)
        L(s - (c-1)/2, tau_a x sigma_r)
    """
    return _classical(
        c, a, param, group,
        [-1 - c + 2 * i for i in range(1, (c + 1) // 2 + 1)],
        [-c + 2 * i for i in range(1, c // 2 + 1)],
        -Fraction(c - 1, 2),
    )


def beta_classical(c: int, a: int, param: DiscreteSeriesParam = DiscreteSeriesParam(),
                   group: GroupType = GroupType.SP) -> LProduct:
    """``beta_{c,a}(s, tau, sigma_r)``, the Plancherel companion of alpha::

        prod_{i=1}^{ceil(c/2)}  L(2s + c + 2 - 2i, tau_a, rho)
        prod_{i=1}^{floor(c/2)} L(2s + c + 1 - 2i, tau_a, rho-)
        L(s + (c+1)/2, tau_a x sigma_r)
    """
    return _classical(
        c, a, param, group,
        [c + 2 - 2 * i for i in range(1, (c + 1) // 2 + 1)],
        [c + 1 - 2 * i for i in range(1, c // 2 + 1)],
        Fraction(c + 1, 2),
    )


def gl_j_range(c: int, d: int) -> list[Fraction]:
    """``j = |c-d|/2, |c-d|/2 + 1, ..., (c+d-2)/2`` (``min(c, d)`` values)."""
    start = Fraction(abs(c - d), 2)
    return [start + k for k in range(min(c, d))]


def alpha_gl_at(c: int, d: int, a: int, b: int, z_coeff: int, z_shift: Number) -> LProduct:
    """``prod_j L(z - j, tau_a x tau_b)`` with ``z = z_coeff*s + z_shift``.

    This is ``alpha_GL`` at the point where twice its variable equals ``z``.
    A zero index (``rho_0`` or ``tau_0``) stands for the trivial
    representation and yields the empty product.
    """
    if min(c, d, a, b) < 0:
        raise ValueError("indices must be non-negative")
    if 0 in (c, d, a, b):
        return LProduct.one()
    z = as_shift(z_shift)
    kernel = speh_tensor(a, b)
    return LProduct((LFactor(z_coeff, z - j, kernel), 1) for j in gl_j_range(c, d))


def alpha_gl(c: int, d: int, a: int, b: int, s_offset: Number = 0) -> LProduct:
    """``alpha_GL(s + s_offset, rho_c(tau_a), rho_d(tau_b))``.

    Product of ``L(2(s + s_offset) - j, tau_a x tau_b)`` over
    ``j = |c-d|/2, ..., (c+d-2)/2`` in unit steps.
    """
    return alpha_gl_at(c, d, a, b, 2, 2 * as_shift(s_offset))


def gcd_products(x: LProduct, y: LProduct) -> LProduct:
    """Structural gcd: shared keys with same-sign exponents, smaller magnitude kept.

    Meant for atomized inputs.  For inverse products (negative exponents) this
    is the gcd of the corresponding polynomials in the factor symbols.
    """
    out = []
    for f, e in x.items():
        g = y.get(f)
        if g is None or (e > 0) != (g > 0):
            continue
        out.append((f, e if abs(e) <= abs(g) else g))
    return LProduct(out)


def corollary_gcd_inputs(c: int, group: GroupType = GroupType.SP) -> tuple[LProduct, LProduct]:
    """``(alpha_c(s)^-1, (beta_c(s) beta_c(-s))^-1)`` atomized, for ``a = 1`` and sigma supercuspidal."""
    param = DiscreteSeriesParam()
    alpha_inv = atomize(alpha_classical(c, 1, param, group)).inverse()
    beta = atomize(beta_classical(c, 1, param, group))
    return alpha_inv, (beta * reflect(beta)).inverse()
