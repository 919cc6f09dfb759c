import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None or call.when != "call":
        return
    number, title = mark.args
    note = getattr(item.module, "NOTES", {}).get(number)
    ok = call.excinfo is None
    if number in _CRITERIA:  # parametrized criteria pass only if every case does
        ok = ok and _CRITERIA[number][1]
    _CRITERIA[number] = (title, ok, note)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, ok, note = _CRITERIA[number]
        line = f"{'PASS' if ok else 'FAIL'} criterion {number:2d}: {title}"
        if note:
            line += f" [{note}]"
        terminalreporter.write_line(line)
