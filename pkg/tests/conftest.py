"""Brute-force set models used as independent oracles."""

import sys
import time
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from linrel.classification import enumerate_relations  # noqa: E402
from linrel.dynamics import EndoObject  # noqa: E402


@pytest.fixture(scope="session")
def rel_gf2_2():
    return list(enumerate_relations(2, 2))


@pytest.fixture(scope="session")
def objs_gf2_2(rel_gf2_2):
    return [EndoObject(a) for a in rel_gf2_2]


@pytest.fixture
def rng():
    return np.random.default_rng(20261019)


ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    """Time a criterion body and record a PASS/FAIL line for the summary."""
    lines = request.config.stash.setdefault(ACCEPTANCE, [])

    class Recorder:
        def __init__(self):
            self.name, self.limit = None, None

        def __call__(self, name, limit):
            self.name, self.limit = name, limit
            return self

        def __enter__(self):
            self.start = time.perf_counter()
            return self

        def __exit__(self, exc_type, exc, tb):
            took = time.perf_counter() - self.start
            ok = exc_type is None and took < self.limit
            status = "PASS" if ok else "FAIL"
            lines.append(f"{status}  {self.name}  ({took:.2f}s, limit {self.limit:g}s)")
            print(lines[-1])
            if exc_type is None:
                assert took < self.limit, f"{self.name}: {took:.2f}s exceeds {self.limit}s"
            return False

    return Recorder()


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
