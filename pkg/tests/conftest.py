_results = []


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("acceptance")
    if marker is None or call.when != "call":
        return
    failed = call.excinfo is not None
    _results.append((marker.args[0], "FAIL" if failed else "PASS"))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome in _results:
        terminalreporter.write_line(f"{outcome}  {label}")
