from __future__ import annotations

from collections import Counter
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from lfactors.core import (
    L,
    LFactor,
    LProduct,
    atomize,
    expand_gl_tensor_recursion,
    expand_segment,
    expand_tautau,
    expand_tensor_discrete,
    expand_twisted,
    product_mul,
    reflect,
    rho,
    rho_minus,
    speh_tensor,
    tau_sigma,
    tau_tau,
    tensor_discrete,
    tensor_segment,
    translate,
    twisted_ext,
)
from lfactors.params import DiscreteSeriesParam, InvalidParameter

# -- strategies ---------------------------------------------------------------

shifts = st.fractions(min_value=-8, max_value=8, max_denominator=4)
coeffs = st.sampled_from([-2, -1, 1, 2])
atomic_kernels = st.sampled_from([rho(), rho_minus(), tau_sigma()])


@st.composite
def composite_kernels(draw):
    a = draw(st.integers(1, 5))
    kind = draw(st.sampled_from(["atomic", "tt", "twisted", "speh", "segment", "discrete"]))
    if kind == "atomic":
        return draw(atomic_kernels)
    if kind == "tt":
        return tau_tau()
    if kind == "twisted":
        return twisted_ext(a, draw(st.sampled_from([1, -1])))
    if kind == "speh":
        return speh_tensor(a, draw(st.integers(1, 5)))
    if kind == "segment":
        return tensor_segment(a, draw(st.integers(-1, 5)))
    r1 = draw(st.integers(0, 6))
    r2 = draw(st.sampled_from([x for x in range(r1 - 2, -2, -2)] or [None]))
    r = () if r2 is None else (r1, r2)
    return tensor_discrete(a, DiscreteSeriesParam(r))


def products(kernels=atomic_kernels, max_size=5):
    factor = st.builds(LFactor, coeffs, shifts, kernels)
    return st.lists(st.tuples(factor, st.integers(-3, 3)), max_size=max_size).map(LProduct)


# -- product algebra ------------------------------------------------------------

def test_cancellation_identity_and_merge():
    x = L(2, 0, rho())
    assert product_mul(x, x.inverse()).is_one
    assert product_mul(x, LProduct.one()) == x
    assert dict(product_mul(L(1, 0, tau_sigma()), L(1, 0, tau_sigma())).items()) == {
        LFactor(1, F(0), tau_sigma()): 2}


@given(products(), products(), products())
def test_multiplication_is_commutative_and_associative(x, y, z):
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)


@given(products())
def test_inverse_and_no_zero_exponents(x):
    assert (x * x.inverse()).is_one
    assert (x / x).is_one
    assert all(e != 0 for e in x.values())


@given(products())
def test_reflect_and_translate_round_trip(x):
    assert reflect(reflect(x)) == x
    assert translate(translate(x, F(3, 2)), -F(3, 2)) == x


def test_string_rendering_is_canonical():
    p = L(1, F(-1, 2), tau_sigma()) * L(2, -1, rho()) * L(2, 0, rho_minus())
    assert str(p) == "L(2s-1, rho) * L(2s, rho-) * L(s-1/2, tau x sigma)"
    assert str(LProduct.one()) == "1"
    assert str(L(-2, 3, rho()) ** 2) == "L(-2s+3, rho)^2"


# -- expansions ------------------------------------------------------------------

@pytest.mark.parametrize("a, expected", [
    (1, {(2, 0, "rho"): 1}),
    (2, {(2, 1, "rho"): 1, (2, 0, "rho-"): 1}),
    (3, {(2, 2, "rho"): 1, (2, 0, "rho"): 1, (2, 1, "rho-"): 1}),
])
def test_expand_twisted_examples(a, expected):
    got = oracles.as_counter(expand_twisted(2, 0, a, 1))
    assert got == Counter({(c, F(s), k): e for (c, s, k), e in expected.items()})


@given(st.integers(1, 12), st.sampled_from([1, -1]), coeffs, shifts)
def test_expand_twisted_matches_index_loops(a, sign, zc, zs):
    ref: Counter = Counter()
    oracles.twisted(ref, zc, zs, a, sign)
    assert oracles.as_counter(expand_twisted(zc, zs, a, sign)) == ref


def test_expand_segment_examples():
    tt = tau_tau()
    assert expand_segment(1, 0, 2, 2) == L(1, 0, tt) * L(1, 1, tt)
    assert expand_segment(1, 0, 3, 1) == L(1, 1, tt)
    assert expand_segment(1, 0, 1, -1) == L(1, 0, tt).inverse()
    assert expand_segment(1, 0, 4, 0).is_one
    with pytest.raises(ValueError):
        expand_segment(1, 0, 1, -2)


@given(st.integers(1, 10), st.integers(-1, 10), coeffs, shifts)
def test_expand_segment_matches_rankin_selberg_loop(a, r, zc, zs):
    ref: Counter = Counter()
    oracles.segment(ref, zc, zs, a, r)
    assert oracles.as_counter(atomize(expand_segment(zc, zs, a, r))) == ref


def test_expand_segment_is_symmetric():
    for a in range(1, 9):
        for r in range(1, 9):
            assert expand_segment(1, 0, a, r) == expand_segment(1, 0, r, a)


def test_expand_tautau_examples():
    assert expand_tautau(1, 0, 1) == L(1, 0, rho()) * L(1, 0, rho_minus())
    assert expand_tautau(2, F(1, 2), 1) == L(2, F(1, 2), rho()) * L(2, F(1, 2), rho_minus())
    want = L(1, 1, rho()) * L(1, 0, rho_minus()) * L(1, 1, rho_minus()) * L(1, 0, rho())
    assert atomize(expand_tautau(1, 0, 2)) == want
    assert atomize(expand_tautau(1, 0, 2)) == atomize(expand_segment(1, 0, 2, 2))


def test_expand_tensor_discrete_examples():
    tt, ts = tau_tau(), tau_sigma()
    got = expand_tensor_discrete(1, 0, 1, DiscreteSeriesParam((3, 1)))
    # tau x tau_3 contributes only L(s+1, tau x tau); tau x tau_1 contributes L(s, tau x tau)
    assert got == L(1, 1, tt) * L(1, 0, tt) * L(1, 0, ts)
    assert expand_tensor_discrete(1, 0, 1, DiscreteSeriesParam()) == L(1, 0, ts)
    got = expand_tensor_discrete(1, 0, 2, DiscreteSeriesParam((1, -1)))
    assert got == L(1, F(1, 2), ts)
    with pytest.raises(InvalidParameter):
        expand_tensor_discrete(1, 0, 1, DiscreteSeriesParam((3, 2)))


def test_atomize_examples():
    assert atomize(L(2, 0, twisted_ext(2, 1))) == L(2, 1, rho()) * L(2, 0, rho_minus())
    want = L(1, 0, rho()) * L(1, 0, rho_minus()) * L(1, 1, rho()) * L(1, 1, rho_minus())
    assert atomize(L(1, 0, speh_tensor(2, 2))) == want


@settings(max_examples=200)
@given(products(composite_kernels()))
def test_atomize_is_idempotent_and_atomic(p):
    q = atomize(p)
    assert q.is_atomic
    assert atomize(q) == q


@given(products(composite_kernels(), 3), products(composite_kernels(), 3))
def test_atomize_is_multiplicative(x, y):
    assert atomize(x * y) == atomize(x) * atomize(y)
    assert atomize(x.inverse()) == atomize(x).inverse()


@given(products(composite_kernels(), 3))
def test_atomize_commutes_with_reflection(p):
    assert atomize(reflect(p)) == reflect(atomize(p))


@pytest.mark.parametrize("a", range(1, 13))
def test_twisted_pair_is_tau_tensor_tau(a):
    for k in range(20):
        z = F(k - 10, 3)
        for zc in (1, 2):
            pair = L(zc, z, twisted_ext(a, 1)) * L(zc, z, twisted_ext(a, -1))
            assert atomize(pair) == atomize(L(zc, z, speh_tensor(a, a)))


def test_gl_tensor_recursion_examples():
    lhs, rhs = expand_gl_tensor_recursion(2, 2)
    assert lhs == L(2, 0, speh_tensor(2, 2))
    assert rhs == L(2, -F(1, 2), speh_tensor(2, 1)) * L(2, F(1, 2), speh_tensor(2, 1))
    lhs, rhs = expand_gl_tensor_recursion(1, 2)
    assert lhs == rhs == L(2, 0, speh_tensor(1, 2))


@pytest.mark.parametrize("a", range(1, 13))
def test_gl_tensor_recursion_balances(a):
    for b in range(1, 13):
        lhs, rhs = expand_gl_tensor_recursion(a, b)
        assert atomize(lhs) == atomize(rhs)


def test_kernel_constructors_reject_bad_indices():
    for bad in (lambda: twisted_ext(0, 1), lambda: twisted_ext(2, 0), lambda: speh_tensor(0, 1),
                lambda: tensor_segment(1, -2), lambda: LFactor(0, F(0), rho())):
        with pytest.raises(ValueError):
            bad()
