import importlib

import pytest

from newsbitext import _pykernels

BACKENDS = [_pykernels]
try:
    BACKENDS.append(importlib.import_module("newsbitext._ckernels"))
except ImportError:
    pass


@pytest.fixture(params=BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def kernels(request):
    return request.param


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line: call with (number, title, detail)."""
    state = {}

    def record(number, title, detail=""):
        state.update(number=number, title=title, detail=detail)

    yield record
    if state:
        rep = getattr(request.node, "rep_call", None)
        status = "PASS" if rep is not None and rep.passed else "FAIL"
        ACCEPTANCE_LINES.append(f"[{status}] criterion {state['number']}: {state['title']} {state['detail']}".rstrip())


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda l: int(l.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
