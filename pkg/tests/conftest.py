import io
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction
from pathlib import Path

import pytest

from tugame import CostGame, TUGame
from tugame.cli import run

DATA = Path(__file__).parent / "data"


@pytest.fixture
def data_dir() -> Path:
    return DATA


@pytest.fixture
def ex1() -> TUGame:
    """Three-player game whose equal propensity to disrupt is -1."""
    return TUGame(
        3,
        {(1,): 3, (2,): 4, (3,): 5, (1, 2): 9, (1, 3): 10, (2, 3): 11, (1, 2, 3): 14},
    )


@pytest.fixture
def ex2() -> TUGame:
    """Like ex1 but with grand worth 29/2; the Gately point is unique."""
    return TUGame(
        3,
        {
            (1,): 3,
            (2,): 4,
            (3,): 5,
            (1, 2): 9,
            (1, 3): 10,
            (2, 3): 11,
            (1, 2, 3): Fraction(29, 2),
        },
    )


@pytest.fixture
def ex3_cost() -> CostGame:
    """Subadditive cost game whose savings game is the unit voting game."""
    return CostGame(
        3,
        {(1,): 7, (2,): 8, (3,): 9, (1, 2): 14, (1, 3): 15, (2, 3): 16, (1, 2, 3): 23},
    )


@pytest.fixture
def additive3() -> TUGame:
    """Additive (hence inessential) game with singleton worths 1, 2, 3."""
    return TUGame(
        3,
        {(1,): 1, (2,): 2, (3,): 3, (1, 2): 3, (1, 3): 4, (2, 3): 5, (1, 2, 3): 6},
    )


@pytest.fixture
def symmetric_unit() -> TUGame:
    """All proper coalitions worth 0, grand coalition worth 1."""
    values = dict.fromkeys([(1,), (2,), (3,), (1, 2), (1, 3), (2, 3)], 0)
    values[(1, 2, 3)] = 1
    return TUGame(3, values)


@pytest.fixture
def degenerate_pairs() -> TUGame:
    """Singletons 0, pairs 2, grand 3: minimal rights meet utopia payoffs."""
    values = dict.fromkeys([(1,), (2,), (3,)], 0)
    values.update(dict.fromkeys([(1, 2), (1, 3), (2, 3)], 2))
    values[(1, 2, 3)] = 3
    return TUGame(3, values)


def run_cli(*argv: str) -> tuple[int, str, str]:
    """Run the CLI in-process, returning (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = run(list(argv))
    return code, out.getvalue(), err.getvalue()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One PASS/FAIL line per acceptance criterion at the end of the run."""
    reports = []
    for outcome in ("passed", "failed"):
        for report in terminalreporter.stats.get(outcome, []):
            if report.when == "call" and "test_acceptance" in report.nodeid:
                reports.append(report)
    if not reports:
        return
    terminalreporter.section("acceptance criteria")
    for report in sorted(reports, key=lambda r: r.nodeid):
        name = report.nodeid.split("::")[-1]
        verdict = "PASS" if report.passed else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
