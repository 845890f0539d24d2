import os
import pathlib

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def cli():
    path = os.environ.get("FILIFORM_CLI") or str(ROOT / "build" / "filiform")
    if not os.path.exists(path):
        pytest.skip(f"CLI binary not found at {path}")
    return path
