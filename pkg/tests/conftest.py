"""Collects acceptance-criterion outcomes and prints one line per criterion."""

_titles = {}
_owner = {}
_status = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark:
            number, title = mark.args
            _titles[number] = title
            _owner[item.nodeid] = number


def pytest_runtest_logreport(report):
    number = _owner.get(report.nodeid)
    if number is None:
        return
    if report.when == "call":
        ok = report.passed
    elif report.failed or report.skipped:
        ok = False
    else:
        return
    _status[number] = _status.get(number, True) and ok


def pytest_terminal_summary(terminalreporter):
    if not _titles:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(_titles):
        state = _status.get(number)
        word = "PASS" if state else ("NOT RUN" if state is None else "FAIL")
        terminalreporter.write_line(f"criterion {number:>2}: {word}  {_titles[number]}")
