import numpy as np
import pytest

from mobi import registry
from mobi.report import summary_lines

# Filled by tests/test_acceptance.py; printed at the end of the session.
ACCEPTANCE_RESULTS: dict = {}


def assert_all_pass(reports, only=None):
    chosen = [r for r in reports if only is None or r.axiom_id in only]
    assert chosen, "no reports selected"
    failing = [r for r in chosen if not r.passed]
    assert not failing, "\n".join(summary_lines(failing))


def failing_ids(reports):
    return {r.axiom_id for r in reports if not r.passed}


def close(u, v, tol):
    return float(np.max(np.abs(np.asarray(u, dtype=float) - np.asarray(v, dtype=float)))) <= tol


@pytest.fixture(params=[e.name for e in registry.SPACES if not e.negative_control])
def catalog_space(request):
    return registry.get_space(request.param)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        status, title = ACCEPTANCE_RESULTS[n]
        terminalreporter.write_line(f"criterion {n}: {status}  {title}")
