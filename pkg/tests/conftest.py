import os

import pytest

from sgreflect import FiniteSemigroup, validate_table
from sgreflect.enumeration import cached_corpus, corpus_members

# One line per acceptance criterion, echoed after the run (see
# pytest_terminal_summary) so the verdicts survive output capturing.
acceptance_lines = []


def pytest_terminal_summary(terminalreporter):
    if acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_lines:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session", autouse=True)
def isolated_cache(tmp_path_factory):
    """Keep corpus caches out of the user's home directory."""
    cache = tmp_path_factory.mktemp("sgreflect-cache")
    old = os.environ.get("REFLECT_CACHE_DIR")
    os.environ["REFLECT_CACHE_DIR"] = str(cache)
    yield cache
    if old is None:
        os.environ.pop("REFLECT_CACHE_DIR", None)
    else:
        os.environ["REFLECT_CACHE_DIR"] = old


# Small named semigroups used throughout.
EMPTY = FiniteSemigroup(0, ())
T = validate_table(1, [[0]])
N2 = validate_table(2, [[0, 0], [0, 0]])        # null: xy = 0
S2 = validate_table(2, [[0, 0], [0, 1]])        # 2-chain semilattice (min)
L2 = validate_table(2, [[0, 0], [1, 1]])        # left zero: xy = x
R2 = validate_table(2, [[0, 1], [0, 1]])        # right zero: xy = y
Z2 = validate_table(2, [[0, 1], [1, 0]])        # additive group of order 2
Z3 = validate_table(3, [[0, 1, 2], [1, 2, 0], [2, 0, 1]])
C3 = validate_table(3, [[0, 0, 0], [0, 1, 1], [0, 1, 2]])  # 3-chain (min)


@pytest.fixture(scope="session")
def corpus2():
    return [m for n in range(3) for m in corpus_members(cached_corpus(n))]


@pytest.fixture(scope="session")
def corpus3():
    return [m for n in range(4) for m in corpus_members(cached_corpus(n))]


@pytest.fixture(scope="session")
def corpus4():
    return [m for n in range(5) for m in corpus_members(cached_corpus(n))]
