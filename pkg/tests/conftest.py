"""Per-criterion pass/fail lines for the acceptance suite."""

import pytest

_results: dict[str, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(cid, title): acceptance criterion this test belongs to")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or (report.when != "call" and not report.failed and not report.skipped):
        return
    cid, title = marker.args
    entry = _results.setdefault(cid, {"title": title, "status": "PASS", "notes": []})
    if hasattr(report, "wasxfail"):
        entry["status"] = "FAIL"
        entry["notes"].append(f"{item.name}: known failure ({report.wasxfail})")
    elif report.failed:
        entry["status"] = "FAIL"
        entry["notes"].append(f"{item.name}: failed")
    elif report.skipped and entry["status"] == "PASS":
        entry["status"] = "SKIP"


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(_results, key=lambda c: int(c[1:])):
        entry = _results[cid]
        terminalreporter.write_line(f"{entry['status']:4} {cid:>3}  {entry['title']}")
        for note in entry["notes"]:
            terminalreporter.write_line(f"           {note}")
