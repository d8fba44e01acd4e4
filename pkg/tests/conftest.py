import pytest


def pytest_configure(config):
    config.acceptance_lines = []


@pytest.fixture
def acceptance_log(request):
    lines = request.config.acceptance_lines

    def record(criterion, ok, detail=""):
        lines.append(f"criterion {criterion}: {'PASS' if ok else 'FAIL'}  {detail}".rstrip())
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if config.acceptance_lines:
        terminalreporter.section("acceptance")
        for line in config.acceptance_lines:
            terminalreporter.write_line(line)
