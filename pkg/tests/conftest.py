import pytest

_ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance(request):
    """Record one pass/fail line for an acceptance criterion."""

    def record(number: int, ok: bool, detail: str) -> bool:
        status = "PASS" if ok else "FAIL"
        _ACCEPTANCE_LINES.append((number, f"[{status}] criterion {number:2d}: {detail}"))
        print(_ACCEPTANCE_LINES[-1][1])
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(_ACCEPTANCE_LINES):
        terminalreporter.write_line(line)
