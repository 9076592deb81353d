import random
from pathlib import Path

import pytest

from toricfan import blow_up, hirzebruch, polytope_from_heights
from toricfan.errors import EmptyPolytope, NotAmple

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"


def random_blowup_fan(rng: random.Random, max_steps: int, max_n: int = 3):
    """An iterated blow-up of a random Hirzebruch surface."""
    f = hirzebruch(rng.randrange(max_n + 1))
    for _ in range(rng.randrange(1, max_steps + 1)):
        f, _ = blow_up(f, rng.randrange(len(f)))
    return f


def random_polytope(rng: random.Random):
    """A random Delzant polygon with vertices in [-8, 8]^2, by rejection
    over random fans with random support heights."""
    while True:
        f = random_blowup_fan(rng, 3, max_n=2)
        heights = {v: rng.randint(0, 5) for v in f.rays}
        try:
            p = polytope_from_heights(f, heights)
        except (NotAmple, EmptyPolytope):
            continue
        if all(-8 <= x <= 8 and -8 <= y <= 8 for x, y in p.vertices):
            return p


# --- acceptance summary ------------------------------------------------------
# test_acceptance.py holds one test per numbered criterion; print an explicit
# pass/fail line for each in the terminal summary.

_acceptance_results = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call" or "test_acceptance" not in item.nodeid:
        return
    doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
    _acceptance_results[item.nodeid] = (doc, report.passed)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for _, (doc, passed) in sorted(_acceptance_results.items()):
        terminalreporter.write_line(("PASS" if passed else "FAIL") + "  " + doc)
