from __future__ import annotations

from lfactors.cli import main

raise SystemExit(main())
