import pytest

_LINES = []


@pytest.fixture(scope="session")
def criterion_log():
    """Collects one summary line per acceptance criterion."""
    def log(number, ok, text, details=()):
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {text}"
        for name, sub_ok, info in details:
            line += f"\n    [{'ok' if sub_ok else 'FAILED'}] {name}: {info}"
        _LINES.append(line)
        print(line)
        return ok

    return log


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in _LINES:
            terminalreporter.write_line(line)
