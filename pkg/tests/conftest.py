import pytest

from rainbowlab.sampling import RandomSeed

_ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def record_acceptance(name: str, passed: bool, detail: str) -> None:
    _ACCEPTANCE[name] = (passed, detail)


@pytest.fixture
def seed():
    return RandomSeed(20240917)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE, key=lambda s: int(s[1:])):
        passed, detail = _ACCEPTANCE[name]
        terminalreporter.write_line(f"{name} {'PASS' if passed else 'FAIL'}  {detail}")
