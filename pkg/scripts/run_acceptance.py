"""Run the acceptance suite and print one PASS/FAIL line per criterion."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

if __name__ == "__main__":
    root = Path(__file__).resolve().parent.parent
    sys.exit(pytest.main(["-q", str(root / "tests" / "test_acceptance.py")]))
