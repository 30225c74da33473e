"""Barycentric refinement and function extension.

The refinement of a graph has one vertex per simplex of the clique complex,
with edges given by strict containment.  Vertex order is by dimension, then
lexicographic within a dimension, so ids are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .core import Simplex, SimplicialGraph
from .errors import InputError
from .rational import as_fraction_vector


@dataclass(frozen=True)
class RefinedGraph:
    graph: SimplicialGraph
    parent: SimplicialGraph
    origin: tuple[Simplex, ...]  # originating parent simplex per vertex


def barycentric(g: SimplicialGraph) -> RefinedGraph:
    """Barycentric refinement; preserves the Euler characteristic.

    New coordinates, when the parent carries any, are simplex centroids.
    """
    origin = [s for group in g.simplices() for s in group]
    index = {s: i for i, s in enumerate(origin)}
    edges = []
    for s in origin:
        if len(s) == 1:
            continue
        i = index[s]
        for size in range(1, len(s)):
            for t in combinations(s, size):
                edges.append((index[t], i))
    coords = None
    if g.coordinates is not None:
        coords = [
            tuple(sum(g.coordinates[v][k] for v in s) / len(s)
                  for k in range(len(g.coordinates[0])))
            for s in origin
        ]
    graph = SimplicialGraph(len(origin), edges, labels=origin, coordinates=coords)
    return RefinedGraph(graph, g, tuple(origin))


def dimension_coloring(r) -> tuple[int, ...]:
    """Color each derived vertex by the dimension of its originating simplex.

    Works for any object with an origin attribute (refined graphs and level
    surfaces).  Containment edges always join different dimensions, so this
    is a proper coloring.
    """
    return tuple(len(s) - 1 for s in r.origin)


def extend_function(f: Sequence, r) -> tuple[Fraction, ...]:
    """Average a parent vertex function over each originating simplex.

    The mean is unweighted and exact: values are coerced to Fraction first.
    """
    values = as_fraction_vector(f, r.parent.n)
    out = []
    for s in r.origin:
        if len(s) == 0:
            raise InputError("empty origin simplex")
        out.append(sum(values[v] for v in s) / len(s))
    return tuple(out)
