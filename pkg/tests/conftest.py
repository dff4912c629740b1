import pytest
from hypothesis import HealthCheck, settings

from stringtau import build_hasse
from stringtau.catalog import NAMES, catalog_algebra, golden_results
from stringtau.report import build_report

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def catalog_runs():
    """name -> (algebra, poset, report, golden) for every built-in algebra."""
    runs = {}
    for name in NAMES:
        algebra = catalog_algebra(name)
        golden = golden_results(name)
        poset = build_hasse(algebra)
        runs[name] = (algebra, poset, build_report(algebra, poset, golden.names_by_g()), golden)
    return runs


@pytest.fixture
def r2ab():
    return catalog_algebra("R(2AB)")


@pytest.fixture
def w2b():
    return catalog_algebra("W(2B)")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
