import pytest

from picturecube.cayley import build_distance_table
from picturecube.puzzle import cube_spec

ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


def pytest_addoption(parser):
    parser.addoption("--run-huge", action="store_true", default=False,
                     help="run the optional 6x1 exhaustive BFS")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-huge"):
        return
    skip = pytest.mark.skip(reason="needs --run-huge")
    for item in items:
        if "huge" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS, key=lambda s: (len(s.split()[0]), s)):
        ok, detail = ACCEPTANCE_RESULTS[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")


@pytest.fixture
def record():
    def _record(name: str, ok: bool, detail: str = "") -> None:
        ACCEPTANCE_RESULTS[name] = (bool(ok), detail)
        assert ok, f"{name}: {detail}"
    return _record


@pytest.fixture(scope="session")
def table_2x2():
    return build_distance_table(cube_spec(2, 2))

