"""Independent index-loop oracles.

Each oracle returns a ``Counter`` keyed by ``(s_coeff, shift, kind)`` over the
atomic kinds ``"rho"``, ``"rho-"`` and ``"tau x sigma"``.  None of them calls
into the engine's expansion code; they enumerate the defining products
directly.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction as F

RHO, RHO_MINUS, TAU_SIGMA = "rho", "rho-", "tau x sigma"


def as_counter(p) -> Counter:
    """Flatten an atomized engine product into the oracle's representation."""
    out: Counter = Counter()
    for f, e in p.items():
        out[(f.s_coeff, F(f.shift), f.kernel.kind)] += e
    return out


def add(acc: Counter, key, e: int = 1) -> None:
    acc[key] = acc.get(key, 0) + e
    if acc[key] == 0:
        del acc[key]


def twisted(acc: Counter, zc: int, zs, a: int, sign: int, e: int = 1) -> None:
    """``L(z, tau_a, rho_sign)`` by its two index loops."""
    main, other = (RHO, RHO_MINUS) if sign > 0 else (RHO_MINUS, RHO)
    i = 1
    while i <= (a + 1) // 2:
        add(acc, (zc, F(zs) + a + 1 - 2 * i, main), e)
        i += 1
    i = 1
    while i <= a // 2:
        add(acc, (zc, F(zs) + a - 2 * i, other), e)
        i += 1


def tautau(acc: Counter, zc: int, zs, e: int = 1) -> None:
    add(acc, (zc, F(zs), RHO), e)
    add(acc, (zc, F(zs), RHO_MINUS), e)


def segment(acc: Counter, zc: int, zs, a: int, r: int, e: int = 1) -> None:
    """Rankin-Selberg of two segments: ``prod_{j=0}^{min-1} L(z + (a+r)/2 - 1 - j, tau x tau)``."""
    if r == 0:
        return
    if r == -1:
        segment(acc, zc, zs, a, 1, -e)
        return
    for j in range(min(a, r)):
        tautau(acc, zc, F(zs) + F(a + r, 2) - 1 - j, e)


def discrete(acc: Counter, zc: int, zs, a: int, r: tuple[int, ...], sigma: bool = True,
             e: int = 1) -> None:
    for ri in r:
        segment(acc, zc, zs, a, ri, e)
    if sigma:
        add(acc, (zc, F(zs) + F(a - 1, 2), TAU_SIGMA), e)


def alpha(c: int, a: int, r: tuple[int, ...] = (), sigma: bool = True) -> Counter:
    acc: Counter = Counter()
    for i in range(1, (c + 1) // 2 + 1):
        twisted(acc, 2, -1 - c + 2 * i, a, 1)
    for i in range(1, c // 2 + 1):
        twisted(acc, 2, -c + 2 * i, a, -1)
    discrete(acc, 1, -F(c - 1, 2), a, r, sigma)
    return acc


def beta(c: int, a: int, r: tuple[int, ...] = (), sigma: bool = True) -> Counter:
    acc: Counter = Counter()
    for i in range(1, (c + 1) // 2 + 1):
        twisted(acc, 2, c + 2 - 2 * i, a, 1)
    for i in range(1, c // 2 + 1):
        twisted(acc, 2, c + 1 - 2 * i, a, -1)
    discrete(acc, 1, F(c + 1, 2), a, r, sigma)
    return acc


def alpha_gl(c: int, d: int, a: int, b: int, offset=0) -> Counter:
    acc: Counter = Counter()
    j = F(abs(c - d), 2)
    while j <= F(c + d - 2, 2):
        segment(acc, 2, 2 * F(offset) - j, a, b)
        j += 1
    return acc
