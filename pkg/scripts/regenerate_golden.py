"""Rewrite the JSON golden reports under tests/golden from the current engine.

Run after an intentional change to report content, then review the diff.
"""

from __future__ import annotations

import json
from pathlib import Path

from lfactors.cli import run

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"


def main() -> None:
    cases = json.loads((GOLDEN / "cases.json").read_text(encoding="utf-8"))
    for name, argv in cases.items():
        code, body, _ = run([*argv, "--format", "json"])
        (GOLDEN / f"{name}.json").write_text(body, encoding="utf-8")
        print(f"{name}: exit {code}")


if __name__ == "__main__":
    main()
