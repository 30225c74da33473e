"""Finite simple graphs together with their clique complexes.

A graph lives on dense vertex ids 0..n-1 and is treated as immutable after
construction.  Simplices are the vertex sets of complete subgraphs, stored
as strictly increasing tuples and grouped by dimension; the k-th entry of
the f-vector counts the k-dimensional simplices.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .errors import InputError

# A simplex is a strictly increasing tuple of vertex ids.
Simplex = tuple


class SimplicialGraph:
    """Immutable simple graph over vertices 0..n-1.

    Parameters
    ----------
    n : vertex count.
    edges : iterable of (u, v) pairs, u != v, ids in range.  Duplicates
        collapse; orientation is ignored.
    labels : optional per-vertex metadata (e.g. the originating simplex of a
        derived vertex).  Carried along by constructions that keep vertices.
    coordinates : optional per-vertex point used only for mesh export and
        plotting; never consulted by combinatorial code.
    """

    __slots__ = ("n", "neighbors", "labels", "coordinates", "_simplices", "_sphere_cache")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]],
                 labels: Optional[Sequence] = None,
                 coordinates: Optional[Sequence[Sequence[float]]] = None):
        if n < 0:
            raise InputError(f"vertex count must be nonnegative, got {n}")
        nbrs = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise InputError(f"self loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u},{v}) out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.neighbors = tuple(frozenset(s) for s in nbrs)
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise InputError("labels length must equal vertex count")
        self.labels = labels
        if coordinates is not None:
            coordinates = tuple(tuple(float(c) for c in p) for p in coordinates)
            if len(coordinates) != n:
                raise InputError("coordinates length must equal vertex count")
        self.coordinates = coordinates
        self._simplices = None
        self._sphere_cache = {}

    # -- basic accessors -------------------------------------------------

    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.neighbors[u]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted pairs, lexicographically ordered."""
        return [(u, v) for u in range(self.n) for v in sorted(self.neighbors[u]) if u < v]

    def edge_count(self) -> int:
        return sum(len(s) for s in self.neighbors) // 2

    def label_of(self, v: int):
        return self.labels[v] if self.labels is not None else v

    # -- derived graphs --------------------------------------------------

    def induced(self, verts: Iterable[int]) -> "SimplicialGraph":
        """Induced subgraph; vertex labels record where vertices came from."""
        sel = sorted(set(verts))
        index = {v: i for i, v in enumerate(sel)}
        edges = []
        for v in sel:
            for u in self.neighbors[v]:
                if u > v and u in index:
                    edges.append((index[v], index[u]))
        labels = tuple(self.label_of(v) for v in sel)
        coords = tuple(self.coordinates[v] for v in sel) if self.coordinates else None
        return SimplicialGraph(len(sel), edges, labels=labels, coordinates=coords)

    def unit_sphere(self, x: int) -> "SimplicialGraph":
        """Induced subgraph on the neighbors of x (cached per vertex)."""
        sphere = self._sphere_cache.get(x)
        if sphere is None:
            sphere = self.induced(self.neighbors[x])
            self._sphere_cache[x] = sphere
        return sphere

    # -- clique complex --------------------------------------------------

    def simplices(self, max_dim: Optional[int] = None) -> tuple[tuple[Simplex, ...], ...]:
        """All simplices grouped by dimension, each group in lexicographic order.

        With max_dim set, enumeration stops at that dimension; the full
        complex is cached after the first unbounded call.
        """
        if self._simplices is not None:
            if max_dim is None or max_dim >= len(self._simplices) - 1:
                return self._simplices
            return self._simplices[: max_dim + 1]
        groups = []
        # each entry pairs a simplex with the candidate vertices able to extend it
        level = [((v,), sorted(u for u in self.neighbors[v] if u > v))
                 for v in range(self.n)]
        dim = 0
        while level:
            groups.append(tuple(s for s, _ in level))
            if max_dim is not None and dim >= max_dim:
                return tuple(groups)
            nxt = []
            for s, cand in level:
                for i, v in enumerate(cand):
                    nv = self.neighbors[v]
                    ncand = [u for u in cand[i + 1:] if u in nv]
                    nxt.append((s + (v,), ncand))
            level = nxt
            dim += 1
        result = tuple(groups)
        if max_dim is None:
            self._simplices = result
        return result

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(g) for g in self.simplices())

    def dimension(self) -> int:
        """Largest simplex dimension; -1 for the empty graph."""
        return len(self.f_vector()) - 1


# -- module level operations ----------------------------------------------


def clique_complex(g: SimplicialGraph, max_dim: Optional[int] = None):
    return g.simplices(max_dim)


def f_vector(g: SimplicialGraph) -> tuple[int, ...]:
    return g.f_vector()


def euler_characteristic(g: SimplicialGraph) -> int:
    """Alternating sum over the f-vector; 0 for the empty graph."""
    return sum(count if k % 2 == 0 else -count for k, count in enumerate(g.f_vector()))


def unit_sphere(g: SimplicialGraph, x: int) -> SimplicialGraph:
    return g.unit_sphere(x)


def _merge_labels(a: SimplicialGraph, b: SimplicialGraph):
    if a.labels is None and b.labels is None:
        return None
    return tuple(a.label_of(v) for v in range(a.n)) + tuple(b.label_of(v) for v in range(b.n))


def disjoint_union(a: SimplicialGraph, b: SimplicialGraph) -> SimplicialGraph:
    edges = a.edges() + [(u + a.n, v + a.n) for u, v in b.edges()]
    return SimplicialGraph(a.n + b.n, edges, labels=_merge_labels(a, b))


def join(a: SimplicialGraph, b: SimplicialGraph) -> SimplicialGraph:
    """Zykov join: disjoint union plus every edge between the two parts."""
    edges = a.edges() + [(u + a.n, v + a.n) for u, v in b.edges()]
    edges.extend((u, v + a.n) for u in range(a.n) for v in range(b.n))
    return SimplicialGraph(a.n + b.n, edges, labels=_merge_labels(a, b))
