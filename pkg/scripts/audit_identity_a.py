"""Test both readings of the segment-merging identity and list counterexamples.

Usage: python scripts/audit_identity_a.py [max_a] [max_r]
"""

from __future__ import annotations

import sys

from lfactors.closedforms import identity_a_audit


def main(max_a: int = 8, max_r: int = 10) -> None:
    audit = identity_a_audit(max_a, max_r)
    for name, cases in audit.readings:
        bad = [c for c in cases if not c.balanced]
        print(f"{name}: {len(cases) - len(bad)}/{len(cases)} balanced")
        for c in bad[:5]:
            print(f"  a={c.a} r=({c.r1},{c.r2}): left/right = {c.lhs / c.rhs}")
    print(f"uniform reading(s): {audit.uniform()} -> {'PASS' if audit.passed else 'FAIL'}")


if __name__ == "__main__":
    args = [int(x) for x in sys.argv[1:3]]
    main(*args)
