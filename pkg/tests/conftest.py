import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from finalg import kernels

sys.path.insert(0, str(Path(__file__).parent))

# the backend fixture is a switch, safe to share across generated inputs
settings.register_profile(
    "finalg", suppress_health_check=[HealthCheck.function_scoped_fixture], deadline=None)
settings.load_profile("finalg")

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"


@pytest.fixture(params=kernels.available())
def backend(request):
    """Run the test once per available kernel backend."""
    prev = kernels.use(request.param)
    yield request.param
    kernels.use(prev)


@pytest.fixture
def corpus_dir():
    return CORPUS


# acceptance lines are collected here and printed in the terminal summary
ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
