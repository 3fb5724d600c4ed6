"""Collects ``criterion`` markers and prints one PASS/FAIL line per criterion."""
import pytest

_RESULTS = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, text = mark.args
    entry = _RESULTS.setdefault(number, {"text": text, "ok": True, "notes": []})
    if rep.when == "call" and hasattr(rep, "wasxfail"):
        entry["ok"] = False
        entry["notes"].append(f"{item.name}: expected failure ({rep.wasxfail})")
    elif rep.failed:
        entry["ok"] = False
        entry["notes"].append(f"{item.name}: failed during {rep.when}")
    elif rep.skipped and rep.when != "teardown":
        entry["ok"] = False
        entry["notes"].append(f"{item.name}: skipped")


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS, key=lambda k: (int("".join(c for c in str(k) if c.isdigit())), str(k))):
        entry = _RESULTS[number]
        status = "PASS" if entry["ok"] else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status}  {entry['text']}")
        for note in entry["notes"]:
            terminalreporter.write_line(f"    {note}")
