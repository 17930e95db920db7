import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import settings

from hhw.corpus import corpus

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("repo", deadline=None, derandomize=True, max_examples=40)
settings.load_profile("repo")


@pytest.fixture(scope="session")
def algebras():
    return corpus()


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    verdicts = getattr(mod, "VERDICTS", None)
    if not verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(verdicts):
        terminalreporter.write_line(verdicts[n])
    missing = [n for n in range(1, 13) if n not in verdicts]
    for n in missing:
        terminalreporter.write_line(f"criterion {n:2d}: FAIL  (did not complete)")
