import pytest

CRITERION_KEY = pytest.StashKey()


@pytest.fixture(scope="session")
def criterion_log(pytestconfig):
    """Shared list the acceptance tests append their pass/fail lines to."""
    return pytestconfig.stash.setdefault(CRITERION_KEY, [])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(CRITERION_KEY, None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
