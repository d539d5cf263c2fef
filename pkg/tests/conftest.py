import sys

import pytest

from reestype import Ideal, VariableContext, parse_polynomial


def ideal(names, *texts):
    ctx = names if isinstance(names, VariableContext) else VariableContext(tuple(names.split()))
    return Ideal(ctx, [parse_polynomial(t, ctx) for t in texts])


@pytest.fixture
def R2():
    return VariableContext(("a1", "a2"))


@pytest.fixture
def R3():
    return VariableContext(("a1", "a2", "a3"))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[num])
