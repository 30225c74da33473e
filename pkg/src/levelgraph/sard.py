"""Iterated level surfaces for several functions, one level at a time.

Each stage cuts the previous surface along the next function.  Functions
live on the original vertex set, so they are carried to later stages by
averaging over the multiset of original vertices supporting each surface
vertex.  The support of a surface vertex is the concatenation of the
supports of the vertices in its origin simplex, flattened and kept with
multiplicity; a vertex reachable through two paths counts twice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import chain
from typing import Callable, Optional, Sequence

from .core import SimplicialGraph
from .errors import ConstantExtension, EmptyStage, IncompatibleLevel, InputError
from .levelset import LevelSurfaceGraph, level_surface
from .rational import as_fraction, as_fraction_vector
from .topology import VerificationReport, is_dgraph

Support = tuple[int, ...]

EXTENSION_RULE = "flattened-multiset-mean"


@dataclass(frozen=True)
class SardStage:
    function_index: int  # 1-based position in the function list
    level: Fraction
    perturbed: bool
    input_values: tuple[Fraction, ...]
    excluded: tuple[Fraction, ...]  # value set of the stage input function
    surface: LevelSurfaceGraph
    support: tuple[Support, ...]
    verdict: Optional[VerificationReport]


@dataclass(frozen=True)
class SardTrace:
    graph: SimplicialGraph
    dimension: int
    stages: tuple[SardStage, ...]
    extension_rule: str = EXTENSION_RULE

    @property
    def final(self) -> SimplicialGraph:
        return self.stages[-1].surface.graph

    @property
    def all_regular(self) -> bool:
        return all(s.verdict is not None and s.verdict.ok for s in self.stages)


def extend_by_support(values: Sequence[Fraction],
                      supports: Sequence[Support]) -> list[Fraction]:
    """Average a vertex function over each support multiset."""
    return [sum(values[v] for v in sup) / len(sup) for sup in supports]


def sard_pipeline(g: SimplicialGraph, fs: Sequence[Sequence],
                  cs: Sequence, *, verify: bool = True,
                  budget: Optional[int] = None,
                  adjust_level: Optional[Callable] = None) -> SardTrace:
    """Cut g along fs[0]=cs[0], then the extension of fs[1]=cs[1], and so on.

    With verify=True each stage graph H_i is checked to be a (d-i)-graph,
    which is the discrete Sard conclusion for that stage.  adjust_level, if
    given, is called as adjust_level(stage, level, excluded) whenever a
    level hits the stage's value set and must return a replacement level;
    stages record whether this happened.
    """
    k = len(fs)
    d = g.dimension()
    if k == 0:
        raise InputError("at least one function required")
    if len(cs) != k:
        raise InputError(f"{k} functions but {len(cs)} levels")
    if k > d:
        raise InputError(f"{k} functions exceed graph dimension {d}")
    functions = [as_fraction_vector(f, g.n) for f in fs]
    levels = [as_fraction(c) for c in cs]

    current = g
    supports: list[Support] = [(v,) for v in range(g.n)]
    stages: list[SardStage] = []
    for i in range(k):
        stage = i + 1
        values = extend_by_support(functions[i], supports)
        value_set = set(values)
        if len(value_set) == 1:
            raise ConstantExtension(stage, values[0])
        excluded = tuple(sorted(value_set))
        c = levels[i]
        perturbed = False
        if c in value_set:
            if adjust_level is None:
                witnesses = tuple(v for v in range(current.n) if values[v] == c)
                raise IncompatibleLevel(stage, c, witnesses)
            c = as_fraction(adjust_level(stage, c, excluded))
            perturbed = c != levels[i]
            if c in value_set:
                witnesses = tuple(v for v in range(current.n) if values[v] == c)
                raise IncompatibleLevel(stage, c, witnesses)
        surface = level_surface(current, values, c)
        if surface.graph.n == 0:
            raise EmptyStage(stage, c)
        new_supports = tuple(
            tuple(sorted(chain.from_iterable(supports[u] for u in origin)))
            for origin in surface.origin)
        verdict = is_dgraph(surface.graph, d - stage, budget=budget) if verify else None
        stages.append(SardStage(stage, c, perturbed, tuple(values), excluded,
                                surface, new_supports, verdict))
        current = surface.graph
        supports = list(new_supports)
    return SardTrace(g, d, tuple(stages))
