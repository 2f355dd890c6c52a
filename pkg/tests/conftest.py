"""Shared pytest plumbing: the acceptance-criteria result banner."""

_criterion_results = []


def record_criterion(number, label, passed):
    _criterion_results.append((number, label, passed))


def pytest_terminal_summary(terminalreporter):
    if not _criterion_results:
        return
    terminalreporter.write_line("")
    terminalreporter.write_line("acceptance criteria:")
    for number, label, passed in sorted(_criterion_results):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"  criterion {number:02d} [{label}]: {status}")
