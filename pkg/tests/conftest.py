from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from tieknots.classify import load_default_table  # noqa: E402
from tieknots.tables import published_appendix  # noqa: E402


@pytest.fixture(scope="session")
def table():
    return load_default_table()


@pytest.fixture(scope="session")
def appendix():
    return published_appendix()
