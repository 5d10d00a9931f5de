import random

import pytest

from multicat.automata import Dfa

_criteria_key = pytest.StashKey[list]()


def random_dfa(rng: random.Random, max_states: int = 4, letters: int = 2) -> Dfa:
    n = rng.randint(1, max_states)
    delta = [[rng.randrange(n) for _ in range(letters)] for _ in range(n)]
    finals = {q for q in range(n) if rng.random() < 0.4}
    return Dfa(letters, n, rng.randrange(n), finals, delta)


@pytest.fixture
def criterion(request):
    """Record one acceptance line; printed in the terminal summary."""
    log = request.config.stash.setdefault(_criteria_key, [])

    def record(number, ok, detail=""):
        log.append((number, ok, detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter, config):
    log = config.stash.get(_criteria_key, [])
    if not log:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, detail in sorted(log, key=lambda t: t[0]):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number}: {detail}")
