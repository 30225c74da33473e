"""Laplacian spectra, nodal reports and ground-state nodal surfaces."""

from fractions import Fraction

import numpy as np
import pytest

from levelgraph.catalog import cross_polytope, octahedron, wheel
from levelgraph.core import SimplicialGraph, disjoint_union
from levelgraph.errors import ConvergenceFailure, InputError, ZeroOnVertex
from levelgraph.spectral import (eigendecompose, eigenfunction_principle_check,
                                 ground_state_surface, laplacian, nodal_report,
                                 spectrum_of)
from levelgraph.topology import is_dgraph

TOL = 1e-8


def _close(got, want):
    assert len(got) == len(want)
    assert all(abs(a - b) < TOL for a, b in zip(got, want))


def test_spectrum_octahedron():
    _close(spectrum_of(octahedron()).eigenvalues, [0, 4, 4, 4, 6, 6])


def test_spectrum_wheel():
    _close(spectrum_of(wheel(7)).eigenvalues, [0, 2, 2, 4, 4, 5, 7])


def test_spectrum_edge():
    _close(spectrum_of(SimplicialGraph(2, [(0, 1)])).eigenvalues, [0, 2])


def test_spectrum_16_cell():
    _close(spectrum_of(cross_polytope(3)).eigenvalues, [0, 6, 6, 6, 6, 8, 8, 8])


def test_eigenvectors_orthonormal():
    V = spectrum_of(octahedron()).eigenvectors
    assert np.abs(V.T @ V - np.eye(6)).max() < TOL


def test_residuals_small():
    assert max(spectrum_of(octahedron()).residuals) < TOL


def test_trace_is_degree_sum():
    g = wheel(7)
    assert abs(sum(spectrum_of(g).eigenvalues)
               - sum(g.degree(v) for v in range(g.n))) < TOL


def test_zero_multiplicity_counts_components():
    g = disjoint_union(octahedron(), wheel(7))
    eig = spectrum_of(g).eigenvalues
    assert sum(1 for x in eig if abs(x) < TOL) == 2


def test_antipodal_eigenvector_octahedron():
    # odd under the antipodal map, hence eigenvalue n - deg(antipode edge) = 4
    L = np.array([[float(x) for x in row] for row in laplacian(octahedron())])
    f = np.array([-1.0, -2.0, -3.0, 3.0, 2.0, 1.0])
    assert np.linalg.norm(L @ f - 4 * f) < TOL


def test_hub_zero_eigenvector_wheel():
    L = np.array([[float(x) for x in row] for row in laplacian(wheel(7))])
    f = np.array([0.0, -1.0, -1.0, 0.0, 1.0, 1.0, 0.0])
    assert np.linalg.norm(L @ f - 2 * f) < TOL


def test_eigenfunction_principle_wheel():
    rows = eigenfunction_principle_check(wheel(7))
    assert len(rows) == 5          # eigenvalues 2, 2, 4, 4, 5 lie in (0, 7)
    assert all(v == 0 for v, _, _ in rows)
    assert all(mag < TOL for _, _, mag in rows)


def test_nodal_report_octahedron():
    nr = nodal_report(octahedron(), 2)
    assert abs(nr.eigenvalue - 4) < TOL
    assert nr.zero_vertices == ()
    assert not nr.perturbed and nr.seed is None
    assert (nr.positive_components, nr.negative_components) == (1, 1)
    assert nr.crossing_edges == 6
    assert (nr.positive_simplices, nr.negative_simplices) == (1, 1)
    assert nr.cheeger == Fraction(6, 1)
    assert is_dgraph(nr.surface.graph, 1).ok
    assert all(x != 0 for x in nr.rational)


def test_nodal_surface_is_exact_level_zero():
    nr = nodal_report(octahedron(), 2)
    assert nr.surface.levels == (Fraction(0),)
    assert nr.surface.functions[0] == nr.rational


def test_zero_on_vertex_without_perturb():
    # lambda=2 eigenvectors of the wheel vanish on the hub
    with pytest.raises(ZeroOnVertex):
        nodal_report(wheel(7), 2)


def test_seeded_perturbation_reproducible():
    a = nodal_report(wheel(7), 2, perturb=True, seed=5)
    b = nodal_report(wheel(7), 2, perturb=True, seed=5)
    c = nodal_report(wheel(7), 2, perturb=True, seed=6)
    assert a.perturbed and a.seed == 5
    assert a.rational == b.rational
    assert a.rational != c.rational
    assert all(x != 0 for x in a.rational)


def test_k_validation():
    with pytest.raises(InputError):
        nodal_report(octahedron(), 1)
    with pytest.raises(InputError):
        nodal_report(octahedron(), 7)


def test_convergence_failure():
    with pytest.raises(ConvergenceFailure):
        eigendecompose(laplacian(octahedron()), max_sweeps=0)


def test_non_symmetric_rejected():
    with pytest.raises(InputError):
        eigendecompose([[0, 1], [2, 0]])


def test_ground_state_16_cell():
    gs = ground_state_surface(cross_polytope(3), seed=0)
    assert abs(gs.gap - 6) < TOL
    assert gs.sphere.ok and gs.sphere.dimension == 2
    assert gs.double is not None and gs.double_error is None
    assert gs.double_components == 1
    assert gs.double_verdict is not None and gs.double_verdict.ok
