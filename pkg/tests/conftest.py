"""Shared fixtures and independent oracles for the test suite.

The oracles here recompute quantities by definition (subset enumeration,
permutation scans) so the library implementations are checked against
something that cannot share their bugs.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

import pytest

from levelgraph.core import SimplicialGraph


def random_injective(rng: random.Random, n: int, span: int = 10 ** 6) -> list[Fraction]:
    """Distinct random rationals, one per vertex."""
    nums = rng.sample(range(-span, span), n)
    return [Fraction(a, rng.randint(1, 97)) for a in nums]


def gap_level(values, rng: random.Random) -> Fraction:
    """A level strictly inside a random gap of the value set."""
    distinct = sorted(set(values))
    i = rng.randrange(len(distinct) - 1)
    lo, hi = distinct[i], distinct[i + 1]
    t = Fraction(rng.randint(1, 9), 10)
    return lo + (hi - lo) * t


def brute_euler(g: SimplicialGraph) -> int:
    """Euler characteristic by scanning all vertex subsets up to size 6.

    Only usable on small graphs; cliques larger than 6 vertices make the
    alternating sum wrong, so callers must keep dimensions below that.
    """
    chi = 0
    verts = list(range(g.n))
    for size in range(1, 7):
        for sub in combinations(verts, size):
            if all(g.adjacent(u, v) for u, v in combinations(sub, 2)):
                chi += 1 if size % 2 == 1 else -1
    return chi


def paper_octahedron() -> SimplicialGraph:
    """Octahedron with a 4-cycle equator 0..3 and poles 4, 5."""
    edges = [(0, 1), (1, 2), (2, 3), (0, 3)]
    edges += [(i, 4) for i in range(4)]
    edges += [(i, 5) for i in range(4)]
    return SimplicialGraph(6, edges)


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
