import pytest

from exactsample.conformance.checks import z_statistic
from exactsample.entropy import SeededSource


@pytest.fixture
def src():
    return SeededSource(12345)


def assert_rate(hits, n, p, z=5.0):
    stat = z_statistic(hits, n, p)
    assert stat <= z, f"frequency {hits / n:.6f} is {stat:.2f} sd from {p:.6f}"


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
