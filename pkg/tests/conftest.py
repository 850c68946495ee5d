import pytest

_RESULTS: list[tuple[int, str, str, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        num, title = marker.args
        detail = "; ".join(str(v) for k, v in item.user_properties if k == "detail")
        _RESULTS.append((num, title, report.outcome.upper(), detail))


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, outcome, detail in sorted(_RESULTS):
        status = "PASS" if outcome == "PASSED" else "FAIL"
        line = f"[{status}] criterion {num:>2}: {title}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
