import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

_ACCEPTANCE: list[tuple[str, str, float]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if item.get_closest_marker("acceptance") and rep.when == "call":
        status = "PASS" if rep.passed else ("XFAIL" if hasattr(rep, "wasxfail") else "FAIL")
        _ACCEPTANCE.append((item.name, status, rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, status, dur in _ACCEPTANCE:
        terminalreporter.write_line(f"{status:5} {name} ({dur:.1f}s)")
