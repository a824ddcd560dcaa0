import itertools

import pytest
from hypothesis import strategies as st

from pancake_embed.topology import pancake, star
from pancake_embed.verify import bfs_from_identity


def perms(n):
    return list(itertools.permutations(range(1, n + 1)))


def permutations_of(min_n=2, max_n=8):
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.permutations(list(range(1, n + 1))).map(tuple)
    )


@pytest.fixture(scope="session")
def tables():
    cache = {}

    def get(kind, n):
        if (kind, n) not in cache:
            cache[(kind, n)] = bfs_from_identity(pancake(n) if kind == "pancake" else star(n))
        return cache[(kind, n)]

    return get


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


@pytest.hookimpl(hookwrapper=True, tryfirst=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    setattr(item, f"rep_{rep.when}", rep)
