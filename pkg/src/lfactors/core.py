"""Formal products of local L-factors.

An :class:`LFactor` is the symbol ``L(A*s + B, K)`` for an integer ``A``, an
exact rational ``B`` and a kernel ``K``; an :class:`LProduct` is a finite
multiset of such symbols with signed integer exponents.  Nothing here is ever
evaluated numerically: two products are equal iff their exponent maps agree.

Composite kernels (Steinberg-level twisted squares, Rankin-Selberg products of
segments, products against a discrete series) are expanded on demand by
:func:`atomize` into the three rank-one kernels ``rho``, ``rho-`` and
``tau x sigma``.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from lfactors.params import DiscreteSeriesParam, check_param

Shift = Fraction
Number = Union[int, Fraction, str]

RHO = "rho"
RHO_MINUS = "rho-"
TAU_SIGMA = "tau x sigma"
TAU_TAU = "tau x tau"
SPEH = "speh"
TWISTED = "twisted"
SEGMENT = "segment"
DISCRETE = "discrete"

ATOMIC_KINDS = frozenset({RHO, RHO_MINUS, TAU_SIGMA})
_KIND_ORDER = {k: i for i, k in enumerate(
    [RHO, RHO_MINUS, TAU_SIGMA, TAU_TAU, SPEH, TWISTED, SEGMENT, DISCRETE])}


def as_shift(x: Number) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class Kernel:
    """The representation-theoretic label of an L-factor.

    Build kernels through the module-level constructors (:func:`rho`,
    :func:`speh_tensor`, ...) rather than directly; they collapse aliases so
    that structural equality is meaningful.
    """

    kind: str
    a: int = 0
    b: int = 0
    sign: int = 0
    param: DiscreteSeriesParam | None = None

    @property
    def is_atomic(self) -> bool:
        return self.kind in ATOMIC_KINDS

    def sort_key(self) -> tuple:
        param = (self.param.r, self.param.sigma_present) if self.param else ()
        return (_KIND_ORDER[self.kind], self.a, self.b, -self.sign, param)

    def label(self) -> str:
        k = self.kind
        if k in (RHO, RHO_MINUS, TAU_SIGMA, TAU_TAU):
            return k
        if k == SPEH:
            return f"tau_{self.a} x tau_{self.b}"
        if k == TWISTED:
            return f"tau_{self.a}, {'rho' if self.sign > 0 else 'rho-'}"
        if k == SEGMENT:
            return f"tau_{self.a} x tau_({self.b})"
        assert self.param is not None
        return f"tau_{self.a} x sigma_r{self.param.label()}"


def rho() -> Kernel:
    return Kernel(RHO)


def rho_minus() -> Kernel:
    return Kernel(RHO_MINUS)


def tau_sigma() -> Kernel:
    return Kernel(TAU_SIGMA)


def tau_tau() -> Kernel:
    return Kernel(TAU_TAU)


def speh_tensor(a: int, b: int) -> Kernel:
    """``tau_a x tau_b``; symmetric because tau is self-dual."""
    if a < 1 or b < 1:
        raise ValueError(f"segment lengths must be positive, got ({a}, {b})")
    if a == b == 1:
        return tau_tau()
    a, b = sorted((a, b))
    return Kernel(SPEH, a, b)


def twisted_ext(a: int, sign: int) -> Kernel:
    """``L(., tau_a, rho)`` for ``sign=+1`` and ``L(., tau_a, rho-)`` for ``-1``."""
    if a < 1:
        raise ValueError(f"a must be positive, got {a}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    if a == 1:
        return rho() if sign > 0 else rho_minus()
    return Kernel(TWISTED, a, sign=sign)


def tensor_segment(a: int, r: int) -> Kernel:
    """``tau_a x tau_r`` with the conventions for ``r = 0`` and ``r = -1``."""
    if a < 1:
        raise ValueError(f"a must be positive, got {a}")
    if r < -1:
        raise ValueError(f"segment index must be >= -1, got {r}")
    if r >= 1:
        return speh_tensor(a, r)
    return Kernel(SEGMENT, a, r)


def tensor_discrete(a: int, param: DiscreteSeriesParam) -> Kernel:
    if a < 1:
        raise ValueError(f"a must be positive, got {a}")
    return Kernel(DISCRETE, a, param=check_param(param))


def opposite(kernel: Kernel) -> Kernel:
    if kernel.kind == RHO:
        return rho_minus()
    if kernel.kind == RHO_MINUS:
        return rho()
    raise ValueError(f"{kernel.label()} has no opposite")


@dataclass(frozen=True)
class LFactor:
    s_coeff: int
    shift: Fraction
    kernel: Kernel

    def __post_init__(self) -> None:
        if self.s_coeff == 0:
            raise ValueError("s coefficient must be nonzero")
        object.__setattr__(self, "shift", as_shift(self.shift))

    def sort_key(self) -> tuple:
        return (self.kernel.sort_key(), -abs(self.s_coeff), -self.s_coeff, self.shift)

    def argument(self) -> str:
        return format_linear(self.s_coeff, self.shift)

    def translated(self, delta: Number) -> LFactor:
        return LFactor(self.s_coeff, self.shift + self.s_coeff * as_shift(delta), self.kernel)

    def __str__(self) -> str:
        return f"L({self.argument()}, {self.kernel.label()})"


def format_linear(coeff: int, shift: Fraction) -> str:
    """Render ``coeff*s + shift`` as e.g. ``2s-1/2`` or ``-s+3``."""
    if coeff == 1:
        head = "s"
    elif coeff == -1:
        head = "-s"
    else:
        head = f"{coeff}s"
    if shift == 0:
        return head
    sign = "+" if shift > 0 else "-"
    return f"{head}{sign}{abs(shift)}"


def L(coeff: int, shift: Number, kernel: Kernel) -> LProduct:
    """Shorthand for the one-factor product ``L(coeff*s + shift, kernel)``."""
    return LProduct.of(LFactor(coeff, as_shift(shift), kernel))


class LProduct(Mapping):
    """Immutable exponent map ``LFactor -> nonzero int``.

    Multiplication adds exponents and drops zeros, so ``p * p.inverse()`` is
    the empty product :meth:`one`.  Iteration order is canonical.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[LFactor, int] | Iterable[tuple[LFactor, int]] = ()):
        acc: dict[LFactor, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for f, e in items:
            acc[f] = acc.get(f, 0) + int(e)
        self._terms = {f: acc[f] for f in sorted(acc, key=LFactor.sort_key) if acc[f]}
        self._hash: int | None = None

    @classmethod
    def one(cls) -> LProduct:
        return cls()

    @classmethod
    def of(cls, factor: LFactor, exponent: int = 1) -> LProduct:
        return cls([(factor, exponent)])

    @classmethod
    def prod(cls, products: Iterable[LProduct]) -> LProduct:
        acc: list[tuple[LFactor, int]] = []
        for p in products:
            acc.extend(p.items())
        return cls(acc)

    def __getitem__(self, factor: LFactor) -> int:
        return self._terms[factor]

    def __iter__(self) -> Iterator[LFactor]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LProduct):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __mul__(self, other: LProduct) -> LProduct:
        if not isinstance(other, LProduct):
            return NotImplemented
        return LProduct(list(self._terms.items()) + list(other._terms.items()))

    def __truediv__(self, other: LProduct) -> LProduct:
        if not isinstance(other, LProduct):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, n: int) -> LProduct:
        return LProduct((f, e * n) for f, e in self._terms.items())

    def inverse(self) -> LProduct:
        return self ** -1

    @property
    def is_one(self) -> bool:
        return not self._terms

    @property
    def is_atomic(self) -> bool:
        return all(f.kernel.is_atomic for f in self._terms)

    def positive(self) -> LProduct:
        return LProduct((f, e) for f, e in self._terms.items() if e > 0)

    def negative(self) -> LProduct:
        return LProduct((f, e) for f, e in self._terms.items() if e < 0)

    def factor_count(self) -> int:
        return sum(abs(e) for e in self._terms.values())

    def __repr__(self) -> str:
        return f"LProduct({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "1"
        parts = []
        for f, e in self._terms.items():
            parts.append(str(f) if e == 1 else f"{f}^{e}")
        return " * ".join(parts)


# multiplication as a named operation, for symmetry with the other ops
def product_mul(x: LProduct, y: LProduct) -> LProduct:
    return x * y


def translate(p: LProduct, delta: Number) -> LProduct:
    """Substitute ``s -> s + delta``."""
    return LProduct((f.translated(delta), e) for f, e in p.items())


def shift_arguments(p: LProduct, delta: Number) -> LProduct:
    """Add ``delta`` to every argument ``A*s + B`` (i.e. ``B -> B + delta``)."""
    d = as_shift(delta)
    return LProduct((LFactor(f.s_coeff, f.shift + d, f.kernel), e) for f, e in p.items())


def reflect(p: LProduct) -> LProduct:
    """Substitute ``s -> -s``."""
    return LProduct((LFactor(-f.s_coeff, f.shift, f.kernel), e) for f, e in p.items())


# -- expansions ------------------------------------------------------------

def expand_twisted(z_coeff: int, z_shift: Number, a: int, sign: int) -> LProduct:
    """``L(z, tau_a, rho_sign)`` as a product over rank-one twisted squares.

    For ``sign=+1``::

        prod_{i=1}^{ceil(a/2)}  L(z + a + 1 - 2i, tau, rho)
        prod_{i=1}^{floor(a/2)} L(z + a - 2i,     tau, rho-)

    and for ``sign=-1`` the roles of ``rho`` and ``rho-`` are swapped.
    """
    if a < 1:
        raise ValueError(f"a must be positive, got {a}")
    z = as_shift(z_shift)
    main = rho() if sign > 0 else rho_minus()
    other = opposite(main)
    terms = [(LFactor(z_coeff, z + a + 1 - 2 * i, main), 1) for i in range(1, (a + 1) // 2 + 1)]
    terms += [(LFactor(z_coeff, z + a - 2 * i, other), 1) for i in range(1, a // 2 + 1)]
    return LProduct(terms)


def segment_shifts(a: int, r: int) -> list[Fraction]:
    """Shifts ``(max-1)/2 + i`` for ``i`` in ``[-(min-1)/2, (min-1)/2]``, ``r >= 1``."""
    lo, hi = sorted((a, r))
    center = Fraction(hi - 1, 2)
    start = -Fraction(lo - 1, 2)
    return [center + start + k for k in range(lo)]


def expand_segment(z_coeff: int, z_shift: Number, a: int, r: int) -> LProduct:
    """``L(z, tau_a x tau_r)`` as a product of ``L(., tau x tau)``.

    ``r = 0`` gives the empty product and ``r = -1`` the inverse of ``r = 1``.
    """
    if a < 1:
        raise ValueError(f"a must be positive, got {a}")
    if r < -1:
        raise ValueError(f"segment index must be >= -1, got {r}")
    if r == 0:
        return LProduct.one()
    if r == -1:
        return expand_segment(z_coeff, z_shift, a, 1).inverse()
    z = as_shift(z_shift)
    return LProduct((LFactor(z_coeff, z + d, tau_tau()), 1) for d in segment_shifts(a, r))


def expand_tautau(z_coeff: int, z_shift: Number, a: int) -> LProduct:
    """``L(z, tau_a x tau_a) = L(z, tau_a, rho) L(z, tau_a, rho-)``."""
    z = as_shift(z_shift)
    return LProduct([
        (LFactor(z_coeff, z, twisted_ext(a, 1)), 1),
        (LFactor(z_coeff, z, twisted_ext(a, -1)), 1),
    ])


def expand_tensor_discrete(z_coeff: int, z_shift: Number, a: int,
                           param: DiscreteSeriesParam) -> LProduct:
    """``L(z, tau_a x sigma_r)`` split over the segments of the parameter.

    The sigma part contributes the single factor ``L(z + (a-1)/2, tau x sigma)``
    when a base sigma is present.
    """
    check_param(param)
    z = as_shift(z_shift)
    out = LProduct.prod(expand_segment(z_coeff, z, a, r) for r in param.r)
    if param.sigma_present:
        out = out * LProduct.of(LFactor(z_coeff, z + Fraction(a - 1, 2), tau_sigma()))
    return out


def expand_factor(f: LFactor) -> LProduct:
    """One expansion step for a composite factor (atomic factors map to themselves)."""
    k = f.kernel
    if k.is_atomic:
        return LProduct.of(f)
    if k.kind == TWISTED:
        return expand_twisted(f.s_coeff, f.shift, k.a, k.sign)
    if k.kind == TAU_TAU:
        return expand_tautau(f.s_coeff, f.shift, 1)
    if k.kind in (SPEH, SEGMENT):
        return expand_segment(f.s_coeff, f.shift, k.a, k.b)
    if k.kind == DISCRETE:
        assert k.param is not None
        return expand_tensor_discrete(f.s_coeff, f.shift, k.a, k.param)
    raise ValueError(f"unknown kernel kind {k.kind!r}")


def atomize(p: LProduct) -> LProduct:
    """Expand every composite kernel until only rho, rho- and tau x sigma remain."""
    while not p.is_atomic:
        pieces: list[tuple[LFactor, int]] = []
        for f, e in p.items():
            if f.kernel.is_atomic:
                pieces.append((f, e))
            else:
                pieces.extend((g, e * m) for g, m in expand_factor(f).items())
        p = LProduct(pieces)
    return p


def expand_gl_tensor_recursion(a: int, b: int) -> tuple[LProduct, LProduct]:
    """Both sides of the one-step recursion for ``L(2s, tau_a x tau_b)``.

    For ``a >= b`` the right side is
    ``L(2s - (b-1)/2, tau_a x tau) L(2s + 1/2, tau_a x tau_(b-1))``; for ``a < b``
    the mirrored form with the roles of ``a`` and ``b`` exchanged.  A
    ``tau_0`` factor is the empty product.
    """
    if a < 1 or b < 1:
        raise ValueError(f"segment lengths must be positive, got ({a}, {b})")
    lhs = L(2, 0, speh_tensor(a, b))
    half = Fraction(1, 2)
    if a >= b:
        rhs = L(2, -Fraction(b - 1, 2), speh_tensor(a, 1))
        if b > 1:
            rhs = rhs * L(2, half, speh_tensor(a, b - 1))
    else:
        rhs = L(2, -Fraction(a - 1, 2), speh_tensor(1, b))
        if a > 1:
            rhs = rhs * L(2, half, speh_tensor(a - 1, b))
    return lhs, rhs
