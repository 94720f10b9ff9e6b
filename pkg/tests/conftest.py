from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import pytest

from _oracles import (
    counterexample_subspace,
    k3_subspace,
    named_instances,
    r5_subspace,
)


@pytest.fixture(scope="session")
def r5():
    return r5_subspace()


@pytest.fixture(scope="session")
def counterexample():
    return counterexample_subspace()


@pytest.fixture(scope="session")
def k3():
    return k3_subspace()


@pytest.fixture(scope="session")
def instances():
    return named_instances()
