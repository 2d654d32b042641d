"""Tabulate where computed discrepancies differ from the printed closed forms.

Groups mismatches by way, c, parity of a and sign of r2, and prints one
engine/printed quotient per group.

Usage: python scripts/closed_form_mismatches.py [suite ...]
"""

from __future__ import annotations

import sys
from collections import defaultdict

from lfactors.closedforms import SUITES, verify_closed_forms


def _bucket(check) -> tuple:
    s = check.spec
    r2 = s.param.r[1] if s.param.t >= 2 else None
    sign = "-" if r2 is None else ("r2>0" if r2 > 0 else "r2=0" if r2 == 0 else "r2=-1")
    c = "c=1" if s.c == 1 else "c=2" if s.c == 2 else "c>=3"
    return (check.suite, s.way.value, c, "a even" if s.a % 2 == 0 else "a odd", sign)


def main(suites: list[str]) -> None:
    groups: dict[tuple, list] = defaultdict(list)
    for check in verify_closed_forms(suites):
        groups[_bucket(check)].append(check)
    for key in sorted(groups):
        checks = groups[key]
        bad = [c for c in checks if not c.match]
        print(f"{' | '.join(key)}: {len(checks) - len(bad)}/{len(checks)} match")
        if bad:
            print(f"    e.g. {bad[0].spec.label()}: engine/printed = {bad[0].computed / bad[0].printed}")


if __name__ == "__main__":
    main(sys.argv[1:] or list(SUITES))
