import pytest
from hypothesis import settings

from flagkit import HeckeAlgebra, IwahoriWeylGroup, KLTable

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

_groups = {}


def group(name):
    if name not in _groups:
        G = IwahoriWeylGroup(name)
        H = HeckeAlgebra(G)
        _groups[name] = (G, H, KLTable(H, max_length=12))
    return _groups[name]


@pytest.fixture
def gl2():
    return group("GL2")


@pytest.fixture
def a1():
    return group("A1")


@pytest.fixture
def a2():
    return group("A2")


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = next((m for name, m in sys.modules.items() if name.endswith("test_acceptance")), None)
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
