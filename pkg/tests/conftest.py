import sys
from pathlib import Path

import pytest

from zagrebcheck import kernels

sys.path.insert(0, str(Path(__file__).parent))

CORPORA = Path(__file__).resolve().parent.parent / "corpora"


@pytest.fixture(params=kernels.available())
def backend(request):
    previous = kernels.BACKEND
    kernels.use(request.param)
    yield request.param
    kernels.use(previous)


@pytest.fixture
def corpora():
    return CORPORA


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(module.RESULTS, key=lambda s: int(s.split("[")[1].split("]")[0])):
        terminalreporter.write_line(line)
