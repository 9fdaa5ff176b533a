import pytest

# (criterion number, title, passed, detail), filled by test_acceptance.py
ACCEPTANCE: list = []


@pytest.fixture
def acceptance():
    def record(num: int, title: str, passed: bool, detail: str = ""):
        ACCEPTANCE.append((num, title, passed, detail))
        print(f"criterion {num} [{'PASS' if passed else 'FAIL'}] {title}: {detail}")
        return passed
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, passed, detail in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {num}. {title} ({detail})")
