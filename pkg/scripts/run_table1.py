#!/usr/bin/env python3
"""Reproduce the summary table (same as `semidual table1`)."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from semidual.cli import main

sys.exit(main(["table1"] + sys.argv[1:]))
