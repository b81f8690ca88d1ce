import random

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

_CRITERIA: dict[str, str] = {}
_TITLES: dict[str, str] = {}
_OUTCOMES: dict[str, list[str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(id, title): acceptance criterion covered by this test")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("acceptance")
        if mark:
            ac_id, title = mark.args
            _CRITERIA[item.nodeid] = ac_id
            _TITLES.setdefault(ac_id, title)
            item.user_properties.append(("acceptance", f"{ac_id} {title}"))


def pytest_runtest_logreport(report):
    ac_id = _CRITERIA.get(report.nodeid)
    if ac_id is None:
        return
    if hasattr(report, "wasxfail") and report.when == "call":
        _OUTCOMES.setdefault(ac_id, []).append(f"xfail: {report.wasxfail}")
    elif report.when == "call" or report.outcome == "failed":
        _OUTCOMES.setdefault(ac_id, []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for ac_id in sorted(_OUTCOMES, key=lambda s: int(s[2:])):
        outcomes = _OUTCOMES[ac_id]
        xfails = [o[len("xfail: "):] for o in outcomes if o.startswith("xfail: ")]
        rest = [o for o in outcomes if not o.startswith("xfail: ")]
        if not rest or any(o != "passed" for o in rest):
            verdict = "FAIL"
        elif xfails:
            verdict = "PARTIAL"
        else:
            verdict = "PASS"
        line = f"{ac_id}: {verdict}  {_TITLES[ac_id]}"
        for reason in xfails:
            line += f"; expected failure: {reason}"
        terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return random.Random(20240917)
