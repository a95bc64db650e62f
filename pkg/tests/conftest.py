import pytest

ACCEPTANCE_LINES: list = []


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line per acceptance criterion; printed in the terminal summary."""
    records = []

    def record(number: int, text: str):
        records.append((number, text))

    yield record, records


def pytest_runtest_makereport(item, call):
    if call.when != "call" or "criterion" not in item.fixturenames:
        return
    _, records = item.funcargs["criterion"]
    status = "PASS" if call.excinfo is None else "FAIL"
    for number, text in records:
        ACCEPTANCE_LINES.append((number, f"criterion {number:2d}: {status}  {text}"))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)
