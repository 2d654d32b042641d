"""Parameter sweeps shared by the CLI, the scripts and the test suite.

Grid points are generated in a fixed order and results are returned in that
order, so reports built from them are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from lfactors.closedforms import lemma32_matching, straddling_params
from lfactors.core import atomize, expand_gl_tensor_recursion
from lfactors.decompositions import Way, WaySpec, discrepancy
from lfactors.normalization import GroupType
from lfactors.params import DiscreteSeriesParam
from lfactors.poles import CommonPoleReport, StrategyVerdict, common_poles, sign_class, strategy_check

NONPOSITIVE_OK = frozenset({"nonpositive", "zero-only", "empty"})
NONNEGATIVE_OK = frozenset({"nonnegative", "zero-only", "empty"})


def rank_one_common_poles(max_c: int = 10, group: GroupType = GroupType.SP
                          ) -> list[tuple[int, CommonPoleReport]]:
    """First split against last split for ``a = 1`` and supercuspidal sigma."""
    out = []
    for c in range(2, max_c + 1):
        x = discrepancy(WaySpec(Way.CL_WAY1, c, 1, group=group))
        y = discrepancy(WaySpec(Way.CL_WAY2, c, 1, group=group))
        out.append((c, common_poles(x, y)))
    return out


def strategy_sweep(max_c: int = 6, max_a: int = 6, max_r: int = 8,
                   group: GroupType = GroupType.SP) -> list[StrategyVerdict]:
    """``strategy_check`` over every ``c, a`` and every parameter with ``r1 > a > r2``."""
    return [strategy_check(c, a, p, group)
            for c in range(1, max_c + 1)
            for a in range(1, max_a + 1)
            for p in straddling_params(a, max_r)]


@dataclass(frozen=True)
class SignCheck:
    family: str
    way: str
    got: str
    ok: bool


def _params(a: int, max_r: int) -> list[DiscreteSeriesParam]:
    return [DiscreteSeriesParam()] + straddling_params(a, max_r)


def sign_class_sweep(max_c: int = 8, max_a: int = 6, max_r: int = 8,
                     group: GroupType = GroupType.SP) -> list[SignCheck]:
    """Real parts of poles: first splits stay left of 0, a-splits and segment reductions right."""
    out: list[SignCheck] = []

    def record(family: str, spec: WaySpec, allowed: frozenset[str]) -> None:
        got = sign_class(discrepancy(spec).P)
        out.append(SignCheck(family, spec.label(), got, got in allowed))

    for c in range(2, max_c + 1):
        for a in range(1, max_a + 1):
            for p in _params(a, max_r):
                record("first split", WaySpec(Way.CL_WAY1, c, a, param=p, group=group), NONPOSITIVE_OK)
    for c in range(1, max_c + 1):
        for a in range(2, max_a + 1):
            for p in _params(a, max_r):
                record("a-split", WaySpec(Way.CL_WAY1P, c, a, param=p, group=group), NONNEGATIVE_OK)
        for p in straddling_params(1, max_r):
            record("segment reduction", WaySpec(Way.CL_WAY3, c, 1, param=p, group=group),
                   NONNEGATIVE_OK)
    for c in range(2, 13):
        record("GL first split", WaySpec(Way.GL_WAY1, c, 1, 1, 1), NONPOSITIVE_OK)
    for a in range(2, 13):
        record("GL a-split", WaySpec(Way.GL_WAY1P, 1, a, 1, 1), NONNEGATIVE_OK)
    return out


def recursion_sweep(max_index: int = 12) -> list[tuple[str, bool]]:
    """GL tensor recursion and the Speh-level alpha_GL recursion for all indices up to ``max_index``."""
    out = []
    for a in range(1, max_index + 1):
        for b in range(1, max_index + 1):
            lhs, rhs = expand_gl_tensor_recursion(a, b)
            out.append((f"tensor(a={a},b={b})", atomize(lhs) == atomize(rhs)))
    for c in range(1, max_index + 1):
        for d in range(1, max_index + 1):
            out.append((f"alpha_GL(c={c},d={d})", lemma32_matching(c, d)))
    return out


def gl_coprimality_sweep(max_index: int = 8) -> list[tuple[str, CommonPoleReport]]:
    """The two GL way pairs compared when reducing to the rank-one lemma."""
    out = []
    for c in range(2, max_index + 1):
        for b in range(2, max_index + 1):
            x = discrepancy(WaySpec(Way.GL_WAY1, c, 1, 1, b))
            y = discrepancy(WaySpec(Way.GL_WAY4P, c, 1, 1, b))
            out.append((f"rho_{c}(tau) x tau_{b}: gl1 vs gl4p", common_poles(x, y)))
    for d in range(2, max_index + 1):
        for b in range(2, max_index + 1):
            x = discrepancy(WaySpec(Way.GL_WAY4, 1, 1, d, b))
            y = discrepancy(WaySpec(Way.GL_WAY4P, 1, 1, d, b))
            out.append((f"tau x rho_{d}(tau_{b}): gl4 vs gl4p", common_poles(x, y)))
    return out
