import random

import pytest

from aperyres import from_generators

SUITE = [(2, 3), (3, 4, 5), (4, 9, 11, 14), (4, 13, 23), (4, 17, 27), (6, 9, 20), (5, 7, 9, 11, 13)]
MED_SUITE = {(2, 3), (3, 4, 5), (4, 9, 11, 14), (5, 7, 9, 11, 13)}


def brute_semigroup(gens, limit):
    """Elements of <gens> up to limit, by plain dynamic programming."""
    ok = [False] * (limit + 1)
    ok[0] = True
    for n in range(1, limit + 1):
        ok[n] = any(n >= g and ok[n - g] for g in gens)
    return ok


def brute_apery(gens):
    m = min(gens)
    limit = m * max(gens) + max(gens)
    ok = brute_semigroup(gens, limit)
    return tuple(min(n for n in range(limit + 1) if ok[n] and n % m == r) for r in range(m))


def random_semigroup(m, rng):
    """A random semigroup of multiplicity m: m together with a few larger coprime-ish generators."""
    while True:
        k = rng.randint(1, m - 1)
        extra = rng.sample(range(m + 1, 6 * m + 8), k)
        gens = [m] + extra
        try:
            S = from_generators(gens)
        except ValueError:
            continue
        if S.multiplicity == m:
            return S


@pytest.fixture
def rng():
    return random.Random(20261015)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
