import pytest

ACCEPTANCE = pytest.StashKey[dict]()


def pytest_configure(config):
    config.stash[ACCEPTANCE] = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance line: ``criterion(number, title)`` returns a
    callable that takes ``(ok, detail)``; failures also fail the test."""
    lines = request.config.stash[ACCEPTANCE]

    def start(number: int, title: str):
        lines[number] = f"criterion {number:>2} FAIL  {title}: did not finish"

        def finish(ok: bool, detail: str = "") -> None:
            lines[number] = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {title}" + (f": {detail}" if detail else "")
            assert ok, detail

        return finish

    return start


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash[ACCEPTANCE]
    if lines:
        terminalreporter.section("acceptance criteria")
        for number in sorted(lines):
            terminalreporter.write_line(lines[number])
