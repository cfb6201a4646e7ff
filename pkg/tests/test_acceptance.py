"""One registered property sweep per acceptance criterion.

Run with ``pytest tests/test_acceptance.py -s`` to see the PASS/FAIL line for
each criterion; a session summary is printed at the end either way.
"""
import time

import pytest

from maxspec.theorems import REGISTRY, SweepConfig, run_theorem

CFG = SweepConfig()
_LINES: list[str] = []


@pytest.mark.parametrize("theorem_id", list(REGISTRY))
def test_criterion(theorem_id):
    result = run_theorem(theorem_id, CFG)
    line = f"{result.summary()} [{result.seconds:.2f}s]"
    _LINES.append(line)
    print(line)
    assert result.ok, line


def test_registry_covers_all_criteria():
    assert len(REGISTRY) == 17


@pytest.fixture(scope="module", autouse=True)
def _report(request):
    start = time.perf_counter()
    yield
    total = time.perf_counter() - start
    tr = request.config.pluginmanager.get_plugin("terminalreporter")
    if tr is None:
        return
    tr.write_line("")
    tr.write_line(f"acceptance summary ({len(_LINES)} criteria, {total:.1f}s):")
    for line in _LINES:
        tr.write_line("  " + line)
