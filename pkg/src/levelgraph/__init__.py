"""Level surfaces, index theory and spectra on discrete d-graphs.

A d-graph is a finite simple graph in which every unit sphere is a
combinatorial (d-1)-sphere.  This package builds level surfaces {f=c}
inside such graphs, verifies their regularity, computes Poincare-Hopf
indices and curvature, runs iterated (Sard) level-set pipelines including
exact triangulation of polynomial varieties, and analyzes nodal surfaces
of Laplacian eigenfunctions.
"""

from .core import (SimplicialGraph, Simplex, clique_complex, disjoint_union,
                   euler_characteristic, f_vector, join, unit_sphere)
from .catalog import (build, cross_polytope, cycle, icosahedron, kuhn_grid,
                      octahedron, random_sphere, sixteen_cell, suspension, wheel)
from .topology import (VerificationReport, clear_caches, components,
                       is_contractible, is_dgraph, is_sphere)
from .canonical import are_isomorphic, canonical_form
from .rational import as_fraction, as_fraction_vector
from .refine import RefinedGraph, barycentric, dimension_coloring, extend_function
from .levelset import (LevelSurfaceGraph, SurfaceTriangles, interpolate_coordinates,
                       level_surface, simultaneous_locus, surface_triangles)
from .morse import (CurvatureVector, IndexReport, central_surface, curvature,
                    index_expectation, index_expectation_exact, ph_index,
                    ph_sum_check)
from .lagrange import (InjectivityReport, MaxRankReport, SignGradient,
                       crossing_gradient, gradients_at, lagrange_candidates,
                       max_rank_check, sign_gradient, strong_injectivity_check)
from .sard import SardStage, SardTrace, extend_by_support, sard_pipeline
from .variety import Polynomial, parse_polynomial, triangulate_variety
from .spectral import (GroundState, NodalReport, Spectrum, eigendecompose,
                       eigenfunction_principle_check, ground_state_surface,
                       laplacian, nodal_report, signed_components, spectrum_of)
from .graphdoc import GraphDocument
from .meshio import export_mesh, to_obj, to_off
from . import errors

__version__ = "0.1.0"

__all__ = [
    "SimplicialGraph", "Simplex", "clique_complex", "disjoint_union",
    "euler_characteristic", "f_vector", "join", "unit_sphere",
    "build", "cross_polytope", "cycle", "icosahedron", "kuhn_grid",
    "octahedron", "random_sphere", "sixteen_cell", "suspension", "wheel",
    "VerificationReport", "clear_caches", "components", "is_contractible",
    "is_dgraph", "is_sphere",
    "are_isomorphic", "canonical_form",
    "as_fraction", "as_fraction_vector",
    "RefinedGraph", "barycentric", "dimension_coloring", "extend_function",
    "LevelSurfaceGraph", "SurfaceTriangles", "interpolate_coordinates",
    "level_surface", "simultaneous_locus", "surface_triangles",
    "CurvatureVector", "IndexReport", "central_surface", "curvature",
    "index_expectation", "index_expectation_exact", "ph_index", "ph_sum_check",
    "InjectivityReport", "MaxRankReport", "SignGradient", "gradients_at",
    "crossing_gradient", "lagrange_candidates", "max_rank_check", "sign_gradient",
    "strong_injectivity_check",
    "SardStage", "SardTrace", "extend_by_support", "sard_pipeline",
    "Polynomial", "parse_polynomial", "triangulate_variety",
    "GroundState", "NodalReport", "Spectrum", "eigendecompose",
    "eigenfunction_principle_check", "ground_state_surface", "laplacian",
    "nodal_report", "signed_components", "spectrum_of",
    "GraphDocument", "export_mesh", "to_obj", "to_off",
    "errors",
]
