"""Recursive recognition of contractible graphs, spheres and d-graphs.

The definitions are mutually recursive.  A graph is contractible when some
vertex x has a contractible unit sphere S(x) and a contractible complement
G-x, with the one-point graph as base case.  A d-sphere is a graph whose
unit spheres are all (d-1)-spheres and which loses contractibility .. gains
it .. after deleting a single vertex; the empty graph is the (-1)-sphere.
A d-graph only requires every unit sphere to be a (d-1)-sphere.

Searches carry an expansion budget.  When it runs out the caller receives
the verdict "resource_limit" instead of a guess.  Definitive verdicts are
memoized globally, keyed by the exact relabeled edge list and, for graphs
of at most 12 vertices, by a canonical form; the exact tier only
short-circuits repeats of the same labeled graph and never certifies
isomorphism on its own.

Two theorem-backed shortcuts prune the search without changing its answer:
graphs with a dominating vertex (cones) are contractible, and contractible
graphs as well as spheres of dimension >= 1 are connected.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from typing import Optional

from .canonical import canonical_edges
from .core import SimplicialGraph

DEFAULT_BUDGET = 10 ** 6
_CANONICAL_LIMIT = 12

if sys.getrecursionlimit() < 20000:
    sys.setrecursionlimit(20000)

_contractible_memo: dict = {}
_sphere_memo: dict = {}


@dataclass
class VerificationReport:
    verdict: str  # "yes" | "no" | "resource_limit"
    dimension: Optional[int] = None
    witness: object = None
    expansions: int = 0

    @property
    def ok(self) -> bool:
        return self.verdict == "yes"


class _Exhausted(Exception):
    pass


@dataclass
class _Budget:
    remaining: int
    used: int = 0

    def spend(self):
        if self.remaining <= 0:
            raise _Exhausted
        self.remaining -= 1
        self.used += 1


def clear_caches():
    _contractible_memo.clear()
    _sphere_memo.clear()


# -- subgraph views ---------------------------------------------------------


def _relabel(base: SimplicialGraph, active: frozenset):
    sel = sorted(active)
    index = {v: i for i, v in enumerate(sel)}
    adj = [[] for _ in sel]
    for i, v in enumerate(sel):
        for u in base.neighbors[v]:
            if u in active:
                adj[i].append(index[u])
    for row in adj:
        row.sort()
    return adj


def _exact_key(base, active):
    adj = _relabel(base, active)
    edges = tuple((u, v) for u, row in enumerate(adj) for v in row if u < v)
    return (len(adj), edges), adj


def _connected(base, active) -> bool:
    if not active:
        return True
    start = next(iter(active))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in base.neighbors[v]:
            if u in active and u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(active)


def _dominating(base, active) -> bool:
    size = len(active)
    return any(len(base.neighbors[v] & active) == size - 1 for v in active)


# -- contractibility ---------------------------------------------------------


def _contractible(base, active, budget) -> bool:
    n = len(active)
    if n == 0:
        return False
    if n == 1:
        return True
    if not _connected(base, active):
        return False
    if _dominating(base, active):
        return True
    key, adj = _exact_key(base, active)
    hit = _contractible_memo.get(key)
    if hit is not None:
        return hit
    ckey = None
    if n <= _CANONICAL_LIMIT:
        ckey = ("iso", canonical_edges(n, adj))
        hit = _contractible_memo.get(ckey)
        if hit is not None:
            _contractible_memo[key] = hit
            return hit
    budget.spend()
    result = False
    order = sorted(active, key=lambda v: (len(base.neighbors[v] & active), v))
    for x in order:
        sphere = base.neighbors[x] & active
        if _contractible(base, sphere, budget) and _contractible(base, active - {x}, budget):
            result = True
            break
    _contractible_memo[key] = result
    if ckey is not None:
        _contractible_memo[ckey] = result
    return result


def is_contractible(g: SimplicialGraph, budget: Optional[int] = None) -> VerificationReport:
    b = _Budget(DEFAULT_BUDGET if budget is None else budget)
    active = frozenset(range(g.n))
    try:
        ok = _contractible(g, active, b)
    except _Exhausted:
        return VerificationReport("resource_limit", witness="expansion budget exhausted",
                                  expansions=b.used)
    if ok:
        return VerificationReport("yes", dimension=g.dimension(), expansions=b.used)
    witness = "empty graph" if g.n == 0 else "no vertex removal sequence reaches a point"
    return VerificationReport("no", witness=witness, expansions=b.used)


# -- spheres ------------------------------------------------------------------


def _sphere(base, active, d, budget) -> bool:
    n = len(active)
    if d == -1:
        return n == 0
    if n == 0:
        return False
    if d == 0:
        if n != 2:
            return False
        a, b = sorted(active)
        return b not in base.neighbors[a]
    if not _connected(base, active):
        return False
    if d == 1:
        return n >= 4 and all(len(base.neighbors[v] & active) == 2 for v in active)
    key, adj = _exact_key(base, active)
    hit = _sphere_memo.get((key, d))
    if hit is not None:
        return hit
    ckey = None
    if n <= _CANONICAL_LIMIT:
        ckey = ("iso", canonical_edges(n, adj), d)
        hit = _sphere_memo.get(ckey)
        if hit is not None:
            _sphere_memo[(key, d)] = hit
            return hit
    budget.spend()
    result = True
    for x in sorted(active):
        if not _sphere(base, base.neighbors[x] & active, d - 1, budget):
            result = False
            break
    if result:
        order = sorted(active, key=lambda v: (len(base.neighbors[v] & active), v))
        result = any(_contractible(base, active - {x}, budget) for x in order)
    _sphere_memo[(key, d)] = result
    if ckey is not None:
        _sphere_memo[ckey] = result
    return result


def is_sphere(g: SimplicialGraph, d: int, budget: Optional[int] = None) -> VerificationReport:
    b = _Budget(DEFAULT_BUDGET if budget is None else budget)
    active = frozenset(range(g.n))
    try:
        ok = _sphere(g, active, d, b)
    except _Exhausted:
        return VerificationReport("resource_limit", witness="expansion budget exhausted",
                                  expansions=b.used)
    if ok:
        return VerificationReport("yes", dimension=d, expansions=b.used)
    return VerificationReport("no", witness=_sphere_witness(g, d, b), expansions=b.used)


def _sphere_witness(g, d, budget):
    if d == -1:
        return "graph is nonempty"
    if g.n == 0:
        return "graph is empty"
    if d >= 1 and not _connected(g, frozenset(range(g.n))):
        return "graph is disconnected"
    try:
        for x in range(g.n):
            if not _sphere(g, g.neighbors[x], d - 1, budget):
                return x
    except _Exhausted:
        pass
    return "no vertex deletion leaves a contractible graph"


# -- d-graphs ------------------------------------------------------------------


def is_dgraph(g: SimplicialGraph, d: int, budget: Optional[int] = None) -> VerificationReport:
    """Check that every unit sphere is a (d-1)-sphere.

    The empty graph passes vacuously for every d >= 0, which lets level set
    code state "empty or a (d-1)-graph" as a single verdict.
    """
    b = _Budget(DEFAULT_BUDGET if budget is None else budget)
    if d < 0:
        if g.n == 0:
            return VerificationReport("yes", dimension=d)
        return VerificationReport("no", witness="graph is nonempty")
    if d == 0:
        for u, v in g.edges():
            return VerificationReport("no", witness=(u, v), expansions=b.used)
        return VerificationReport("yes", dimension=0, expansions=b.used)
    if d == 1:
        for x in range(g.n):
            if g.degree(x) != 2:
                return VerificationReport("no", witness=x, expansions=b.used)
        for comp in components(g):
            if len(comp) < 4:
                return VerificationReport("no", witness=comp[0], expansions=b.used)
        return VerificationReport("yes", dimension=1, expansions=b.used)
    try:
        for x in range(g.n):
            if not _sphere(g, g.neighbors[x], d - 1, b):
                return VerificationReport("no", witness=x, expansions=b.used)
    except _Exhausted:
        return VerificationReport("resource_limit", witness="expansion budget exhausted",
                                  expansions=b.used)
    return VerificationReport("yes", dimension=d, expansions=b.used)


def components(g: SimplicialGraph) -> list[tuple[int, ...]]:
    """Connected components as sorted vertex tuples, ordered by least vertex."""
    seen = [False] * g.n
    out = []
    for v in range(g.n):
        if seen[v]:
            continue
        comp = []
        stack = [v]
        seen[v] = True
        while stack:
            w = stack.pop()
            comp.append(w)
            for u in g.neighbors[w]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        out.append(tuple(sorted(comp)))
    return out
