"""Enumerate shared pole lines of the first and last splits for a = 1.

Usage: python scripts/sweep_common_poles.py [max_c]
"""

from __future__ import annotations

import sys

from lfactors.report import shared_lines
from lfactors.sweeps import rank_one_common_poles


def main(max_c: int = 10) -> None:
    for c, rep in rank_one_common_poles(max_c):
        points = ", ".join(str(x) for x in sorted(rep.points())) or "none"
        print(f"c={c:2d}  {rep.verdict:20s}  Re(s): {points}")
        for line in shared_lines(rep.shared, "      "):
            print(line)


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 10)
