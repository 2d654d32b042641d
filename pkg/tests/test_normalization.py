from __future__ import annotations

from fractions import Fraction as F

import pytest

import oracles
from lfactors.core import L, LProduct, atomize, rho, rho_minus, tau_sigma, tau_tau, twisted_ext
from lfactors.normalization import (
    ALL_CONFIGS,
    GroupType,
    TauConfig,
    alpha_classical,
    alpha_gl,
    beta_classical,
    corollary_gcd_inputs,
    gcd_products,
    gl_j_range,
    sigma_term_convention,
)
from lfactors.params import (
    DiscreteSeriesParam,
    InvalidParameter,
    enumerate_params,
    parse_param,
    validate_param,
)

P = DiscreteSeriesParam


# -- parameters -----------------------------------------------------------------

def test_validate_param_examples():
    assert validate_param(P((3, 1))) is None
    assert validate_param(P()) is None
    assert validate_param(P((3, 2))).startswith("parity")
    assert validate_param(P((1, 1))).startswith("strict-decrease")
    assert validate_param(P((3, 1, -1))).startswith("t-odd")
    assert validate_param(P((1, -3))).startswith("lower bound")
    assert validate_param(P((3, 1), sigma_present=False)).startswith("n0=0")


def test_parse_param():
    assert parse_param("5,1") == P((5, 1))
    assert parse_param("5 1 ") == P((5, 1))
    assert parse_param("") == P()
    with pytest.raises(InvalidParameter, match="parity"):
        parse_param("4,1")
    with pytest.raises(InvalidParameter, match="integer"):
        parse_param("x")


def test_enumerate_params_is_exhaustive_and_valid():
    params = enumerate_params(6, 4)
    assert all(validate_param(p) is None for p in params)
    assert len(set(params)) == len(params)
    brute = {P()}
    for r1 in range(-1, 7):
        for r2 in range(-1, r1):
            if (r1 - r2) % 2 == 0:
                brute.add(P((r1, r2)))
                for r3 in range(-1, r2):
                    for r4 in range(-1, r3):
                        if (r1 - r3) % 2 == 0 and (r1 - r4) % 2 == 0:
                            brute.add(P((r1, r2, r3, r4)))
    assert set(params) == brute
    assert params == enumerate_params(6, 4)


# -- alpha and beta -------------------------------------------------------------

def test_alpha_examples():
    assert atomize(alpha_classical(1, 1)) == L(2, 0, rho()) * L(1, 0, tau_sigma())
    want = L(2, -1, rho()) * L(2, 0, rho_minus()) * L(1, -F(1, 2), tau_sigma())
    assert atomize(alpha_classical(2, 1)) == want


def test_beta_examples():
    assert atomize(beta_classical(1, 1)) == L(2, 1, rho()) * L(1, 1, tau_sigma())
    want = L(2, 2, rho()) * L(2, 1, rho_minus()) * L(1, F(3, 2), tau_sigma())
    assert atomize(beta_classical(2, 1)) == want


GRID = [(c, a, p) for c in range(1, 7) for a in range(1, 6) for p in enumerate_params(6, 2)]


@pytest.mark.parametrize("c, a, param", GRID[::3])
def test_alpha_beta_match_index_loops(c, a, param):
    assert oracles.as_counter(atomize(alpha_classical(c, a, param))) == oracles.alpha(c, a, param.r)
    assert oracles.as_counter(atomize(beta_classical(c, a, param))) == oracles.beta(c, a, param.r)


def test_alpha_three_two_full_grid():
    for param in enumerate_params(8, 2):
        assert oracles.as_counter(atomize(alpha_classical(3, 2, param))) == oracles.alpha(3, 2, param.r)


def test_alpha_composite_shape():
    p = alpha_classical(3, 2)
    kernels = sorted(f.kernel.label() for f in p)
    assert kernels == ["tau_2 x sigma_r()", "tau_2, rho", "tau_2, rho", "tau_2, rho-"]
    assert L(2, -2, twisted_ext(2, 1)) * L(2, 0, twisted_ext(2, 1)) == LProduct(
        (f, e) for f, e in p.items() if f.kernel == twisted_ext(2, 1))


def test_sigma_term_when_sigma_absent():
    empty = P((), sigma_present=False)
    for group in GroupType:
        got = atomize(alpha_classical(1, 1, empty, group))
        if group in (GroupType.SP, GroupType.U_ODD):
            assert got == L(2, 0, rho()) * L(1, 0, tau_sigma())
            assert sigma_term_convention(empty, group).startswith("standard")
        else:
            assert got == L(2, 0, rho())
            assert sigma_term_convention(empty, group) == "trivial (=1)"


def test_invalid_param_rejected():
    with pytest.raises(InvalidParameter):
        alpha_classical(2, 1, P((3, 2)))
    with pytest.raises(ValueError):
        alpha_classical(0, 1)


def test_group_metadata():
    assert GroupType.parse("sp").rho_name == "Lambda^2"
    assert GroupType.parse("SP").rho_minus_name == "Sym^2"
    assert GroupType.SO_ODD.rho_name == "Sym^2"
    with pytest.raises(ValueError, match="expected one of"):
        GroupType.parse("gl")


def test_tau_configs():
    assert len(ALL_CONFIGS) == len(set(ALL_CONFIGS)) == 4
    with pytest.raises(ValueError):
        TauConfig(0, True)


# -- alpha_GL -----------------------------------------------------------------

def test_alpha_gl_examples():
    tt = tau_tau()
    assert alpha_gl(1, 1, 1, 1) == L(2, 0, tt)
    assert alpha_gl(2, 1, 1, 1) == L(2, -F(1, 2), tt)
    assert alpha_gl(2, 2, 1, 1) == L(2, 0, tt) * L(2, -1, tt)
    assert alpha_gl(1, 1, 1, 1, F(1, 4)) == L(2, F(1, 2), tt)


def test_gl_j_range():
    assert gl_j_range(3, 1) == [1]
    assert gl_j_range(3, 3) == [0, 1, 2]
    assert gl_j_range(2, 5) == [F(3, 2), F(5, 2)]


@pytest.mark.parametrize("c", range(1, 6))
def test_alpha_gl_matches_index_loop(c):
    for d in range(1, 6):
        for a in range(1, 4):
            for b in range(1, 4):
                for off in (0, F(1, 4), -F(3, 4)):
                    got = oracles.as_counter(atomize(alpha_gl(c, d, a, b, off)))
                    assert got == oracles.alpha_gl(c, d, a, b, off)


# -- gcd --------------------------------------------------------------------------

def test_gcd_examples():
    x = L(1, 0, tau_sigma()).inverse() * L(2, 0, rho()).inverse()
    y = L(1, 0, tau_sigma()).inverse()
    assert gcd_products(x, y) == y
    assert gcd_products(x, LProduct.one()).is_one
    assert gcd_products(L(2, 0, rho()) ** 3, L(2, 0, rho()) ** 2) == L(2, 0, rho()) ** 2
    assert gcd_products(L(2, 0, rho()), L(2, 0, rho()).inverse()).is_one


def test_corollary_gcd_inputs_c2():
    x, y = corollary_gcd_inputs(2)
    assert x == atomize(alpha_classical(2, 1)).inverse()
    # structural gcd shares no factor: beta's arguments are all shifted away from alpha's
    assert gcd_products(x, y).is_one
