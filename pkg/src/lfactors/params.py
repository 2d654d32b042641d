"""Langlands-parameter data for generic discrete series supported on one tau.

A parameter is the decreasing tuple ``r_1 > r_2 > ... > r_t >= -1`` of the
segments ``tau (x) S_{r_i}`` together with a flag telling whether the
supercuspidal base ``sigma`` is present at all (``n0 = 0`` means it is not).
"""

from __future__ import annotations

from dataclasses import dataclass, field


class InvalidParameter(ValueError):
    """Raised when a discrete-series parameter violates its defining clauses."""


@dataclass(frozen=True, order=True)
class DiscreteSeriesParam:
    r: tuple[int, ...] = ()
    sigma_present: bool = field(default=True)

    def __post_init__(self) -> None:
        object.__setattr__(self, "r", tuple(int(x) for x in self.r))

    @property
    def t(self) -> int:
        return len(self.r)

    def peel(self) -> DiscreteSeriesParam:
        """Drop the leading pair ``(r_1, r_2)``."""
        return DiscreteSeriesParam(self.r[2:], self.sigma_present)

    def label(self) -> str:
        body = ",".join(str(x) for x in self.r)
        return f"({body})" if self.sigma_present else f"({body};n0=0)"


def validate_param(param: DiscreteSeriesParam) -> str | None:
    """Return ``None`` if ``param`` is admissible, else the first violated clause.

    Clauses are checked in a fixed order: strict decrease, common parity,
    lower bound ``r_t >= -1``, even length, and finally the ``n0 = 0``
    restriction (no segments without sigma).
    """
    r = param.r
    for x, y in zip(r, r[1:]):
        if not x > y:
            return f"strict-decrease violated: r_i={x} is not > r_(i+1)={y}"
    for x in r[1:]:
        if (x - r[0]) % 2:
            return f"parity violated: {r[0]} and {x} differ in parity"
    if r and r[-1] < -1:
        return f"lower bound violated: r_t={r[-1]} < -1"
    if len(r) % 2:
        return f"t-odd violated: t={len(r)} is odd"
    if not param.sigma_present and r:
        return "n0=0 violated: segments given without a base sigma"
    return None


def check_param(param: DiscreteSeriesParam) -> DiscreteSeriesParam:
    problem = validate_param(param)
    if problem is not None:
        raise InvalidParameter(problem)
    return param


def parse_param(text: str, sigma_present: bool = True) -> DiscreteSeriesParam:
    """Parse ``"5,1"`` / ``"5 1"`` / ``""`` into a validated parameter."""
    parts = text.replace(",", " ").split()
    try:
        values = tuple(int(p) for p in parts)
    except ValueError as exc:
        raise InvalidParameter(f"not an integer list: {text!r}") from exc
    return check_param(DiscreteSeriesParam(values, sigma_present))


def enumerate_params(max_r: int, max_t: int = 2) -> list[DiscreteSeriesParam]:
    """All admissible parameters with ``r_1 <= max_r`` and ``t <= max_t``.

    Ordered by length then lexicographically descending, so the output is
    stable across runs.
    """
    out: list[DiscreteSeriesParam] = [DiscreteSeriesParam()]

    def extend(prefix: tuple[int, ...]) -> None:
        if prefix and len(prefix) % 2 == 0:
            out.append(DiscreteSeriesParam(prefix))
        if len(prefix) == max_t:
            return
        top = prefix[-1] - 2 if prefix else max_r
        floor = -1
        for x in range(top, floor - 1, -1):
            if prefix and (x - prefix[0]) % 2:
                continue
            extend(prefix + (x,))

    extend(())
    return sorted(out, key=lambda p: (p.t, [-x for x in p.r]))
