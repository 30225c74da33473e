"""Ordered level-set pipeline with stagewise function extension.

Validates:
    - the two-stage worked example on the octahedron, with exact rationals
    - order asymmetry of the antisymmetric eigenvector pair
    - stagewise excluded values exactly flag the incompatible levels
    - k=d pipelines ending in a 0-graph
    - adjust_level recovery and error reporting
"""

import random
from fractions import Fraction
from itertools import chain

import pytest

from levelgraph.core import SimplicialGraph
from levelgraph.catalog import cross_polytope, octahedron
from levelgraph.errors import ConstantExtension, EmptyStage, IncompatibleLevel
from levelgraph.sard import extend_by_support, sard_pipeline
from levelgraph.topology import is_dgraph

from conftest import gap_level, paper_octahedron, random_injective


F = [13, 15, 17, 19, 1, 31]   # equator 13,15,17,19; poles 1 and 31


def test_first_stage_cycle():
    g = paper_octahedron()
    trace = sard_pipeline(g, [F, F], [2, Fraction(17, 2)])
    s1 = trace.stages[0]
    assert s1.surface.graph.n == 8
    assert s1.verdict.ok
    origins = set(s1.surface.origin)
    assert origins == {(0, 4), (1, 4), (2, 4), (3, 4),
                       (0, 1, 4), (0, 3, 4), (1, 2, 4), (2, 3, 4)}


def test_extended_values_exact():
    g = paper_octahedron()
    trace = sard_pipeline(g, [F, F], [2, Fraction(17, 2)])
    ext = trace.stages[1].input_values
    assert sorted(ext) == [7, 8, 9, Fraction(29, 3), 10, 11, 11, Fraction(37, 3)]


def test_literal_midpoint_average():
    # the edge (5,1) averages the pole with one equator vertex
    g = paper_octahedron()
    trace = sard_pipeline(g, [F, F], [2, Fraction(17, 2)])
    s1 = trace.stages[0]
    by_origin = {s1.surface.origin[v]: trace.stages[1].input_values[v]
                 for v in range(s1.surface.graph.n)}
    assert by_origin[(0, 4)] == 7            # (13 + 1) / 2
    assert by_origin[(0, 1, 4)] == Fraction(29, 3)
    assert by_origin[(1, 2, 4)] == 11        # (15 + 17 + 1) / 3


def test_triangle_means_resolve_to_eleven():
    # triangle means are (pair sum + 1)/3 over adjacent equator pairs; the
    # four pair sums always total 128, so the multiset {28, 32, 32, 36} is
    # forced and a 34 (mean 35/3) cannot occur under any relabeling
    g = paper_octahedron()
    trace = sard_pipeline(g, [F, F], [2, Fraction(17, 2)])
    ext = trace.stages[1].input_values
    assert Fraction(35, 3) not in ext
    assert sorted(x for x in ext if x.denominator == 3) == [
        Fraction(29, 3), Fraction(37, 3)]


def test_second_stage_zero_graph():
    g = paper_octahedron()
    trace = sard_pipeline(g, [F, F], [2, Fraction(17, 2)])
    s2 = trace.stages[1]
    assert s2.surface.graph.edge_count() == 0
    assert s2.verdict.ok
    assert trace.all_regular


def test_excluded_values_are_exact():
    g = paper_octahedron()
    trace = sard_pipeline(g, [F, F], [2, Fraction(17, 2)])
    assert set(trace.stages[1].excluded) == {
        7, 8, 9, 10, 11, Fraction(29, 3), Fraction(37, 3)}


def test_incompatible_level_raises():
    g = paper_octahedron()
    with pytest.raises(IncompatibleLevel) as e:
        sard_pipeline(g, [F, F], [2, 10])
    assert e.value.stage == 2
    assert e.value.value == 10


def test_order_asymmetry_of_eigenvector_pair():
    g = octahedron()
    f2 = [-1, -2, -3, 3, 2, 1]
    f3 = [1, 2, -3, -3, 2, 1]
    with pytest.raises(IncompatibleLevel) as first:
        sard_pipeline(g, [f2, f3], [0, 0])
    with pytest.raises(IncompatibleLevel) as second:
        sard_pipeline(g, [f3, f2], [0, 0])
    assert first.value.stage == second.value.stage == 2
    assert len(first.value.witnesses) == 6
    assert len(second.value.witnesses) == 2


def test_adjust_level_recovers():
    g = paper_octahedron()
    bumps = []

    def adjust(stage, value, excluded):
        bumps.append((stage, value))
        return value + Fraction(1, 1000)

    trace = sard_pipeline(g, [F, F], [2, 10], adjust_level=adjust)
    assert bumps == [(2, 10)]
    assert trace.stages[1].perturbed
    assert trace.stages[1].level == Fraction(10001, 1000)


def test_constant_extension():
    g = octahedron()
    with pytest.raises(ConstantExtension):
        sard_pipeline(g, [list(range(6)), [1] * 6], [Fraction(5, 2), 0])


def test_empty_stage():
    g = octahedron()
    with pytest.raises(EmptyStage):
        sard_pipeline(g, [list(range(6)), list(range(6))],
                      [Fraction(5, 2), Fraction(-100)])


def chained_levels(g, fs, rng):
    # choose each stage level inside a gap of the extended value set
    cs = [gap_level(fs[0], rng)]
    for i in range(1, len(fs)):
        trace = sard_pipeline(g, fs[:i], cs, verify=False)
        ext = extend_by_support(
            [Fraction(x) for x in fs[i]], trace.stages[-1].support)
        cs.append(gap_level(ext, rng))
    return cs


def test_full_depth_pipeline(rng):
    g = cross_polytope(3)
    for _ in range(3):
        fs = [random_injective(rng, g.n) for _ in range(3)]
        cs = chained_levels(g, fs, rng)
        trace = sard_pipeline(g, fs, cs)
        last = trace.stages[-1]
        assert last.surface.graph.edge_count() == 0
        assert all(s.verdict.ok for s in trace.stages)


def test_supports_flatten_with_multiplicity():
    g = paper_octahedron()
    trace = sard_pipeline(g, [F, F], [2, Fraction(17, 2)])
    s2 = trace.stages[1]
    for v in range(s2.surface.graph.n):
        sup = s2.support[v]
        assert sup == tuple(sorted(sup))
        assert len(sup) >= 2


def test_extend_by_support_mean():
    vals = [Fraction(0), Fraction(6), Fraction(12)]
    assert extend_by_support(vals, [(0, 1)]) == [Fraction(3)]
    assert extend_by_support(vals, [(1, 2, 2)]) == [Fraction(10)]


def test_stage_verdicts_on_random_spheres(rng):
    # two-stage pipelines on 2-spheres finish in 0-graphs
    g = octahedron()
    for _ in range(10):
        fs = [random_injective(rng, g.n), random_injective(rng, g.n)]
        cs = chained_levels(g, fs, rng)
        trace = sard_pipeline(g, fs, cs)
        assert all(s.verdict.ok for s in trace.stages)
