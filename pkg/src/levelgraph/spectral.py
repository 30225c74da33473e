"""Laplacian spectra, nodal regions and nodal surfaces of eigenfunctions.

The eigensolver is a plain cyclic Jacobi iteration: deterministic sweep
order, explicit zeroing of the rotated entry, convergence once the
off-diagonal Frobenius norm drops below tol.  Eigenvectors are rationalized
(exact binary expansion of the floats) before level surfaces are built, so
everything downstream stays exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import sqrt
from typing import Optional, Sequence, Union

import numpy as np

from .core import SimplicialGraph
from .errors import ConvergenceFailure, InputError, ZeroOnVertex
from .levelset import LevelSurfaceGraph, level_surface
from .sard import SardTrace, sard_pipeline
from .topology import VerificationReport, components, is_sphere


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: tuple[float, ...]  # ascending
    eigenvectors: np.ndarray        # column k pairs with eigenvalues[k]
    residuals: tuple[float, ...]    # per pair, against the input matrix
    sweeps: int


@dataclass(frozen=True)
class NodalReport:
    k: int  # 1-indexed, k=1 is the constant eigenvector
    eigenvalue: float
    vector: tuple[float, ...]
    zero_vertices: tuple[int, ...]
    positive_components: int
    negative_components: int
    surface: LevelSurfaceGraph
    crossing_edges: int
    positive_simplices: int
    negative_simplices: int
    cheeger: Optional[Fraction]  # crossing / min(pos, neg), None if one side empty
    perturbed: bool
    seed: Optional[int]
    rational: tuple[Fraction, ...]  # the vector the surface was built from


@dataclass(frozen=True)
class GroundState:
    nodal: NodalReport
    gap: float  # second eigenvalue
    sphere: VerificationReport  # is the nodal surface a (d-1)-sphere
    double: Optional[SardTrace]  # d=3 only: {v2=0} then {v3=0}
    double_components: Optional[int]
    double_verdict: Optional[VerificationReport]
    double_error: Optional[str]


def laplacian(g: SimplicialGraph) -> list[list[Fraction]]:
    """Dense rational D - A."""
    L = [[Fraction(0)] * g.n for _ in range(g.n)]
    for v in range(g.n):
        L[v][v] = Fraction(g.degree(v))
        for u in g.neighbors[v]:
            L[v][u] = Fraction(-1)
    return L


def _offdiag_norm(A: np.ndarray) -> float:
    return float(np.linalg.norm(A - np.diag(np.diag(A))))


def _rotate(A: np.ndarray, V: np.ndarray, p: int, q: int) -> None:
    apq = A[p, q]
    tau = (A[q, q] - A[p, p]) / (2.0 * apq)
    if abs(tau) > 1e150:  # tau*tau would overflow; use the asymptotic angle
        t = 0.5 / tau
    elif tau >= 0:
        t = 1.0 / (tau + sqrt(1.0 + tau * tau))
    else:
        t = -1.0 / (-tau + sqrt(1.0 + tau * tau))
    c = 1.0 / sqrt(1.0 + t * t)
    s = t * c
    for M in (A,):
        col_p = M[:, p].copy()
        col_q = M[:, q].copy()
        M[:, p] = c * col_p - s * col_q
        M[:, q] = s * col_p + c * col_q
        row_p = M[p, :].copy()
        row_q = M[q, :].copy()
        M[p, :] = c * row_p - s * row_q
        M[q, :] = s * row_p + c * row_q
    A[p, q] = A[q, p] = 0.0
    col_p = V[:, p].copy()
    col_q = V[:, q].copy()
    V[:, p] = c * col_p - s * col_q
    V[:, q] = s * col_p + c * col_q


def eigendecompose(L, tol: float = 1e-12, max_sweeps: int = 100) -> Spectrum:
    """Cyclic Jacobi eigendecomposition of a dense symmetric matrix."""
    A = np.array([[float(x) for x in row] for row in L], dtype=np.float64)
    n = A.shape[0]
    if A.shape != (n, n):
        raise InputError("matrix must be square")
    if not np.array_equal(A, A.T):
        raise InputError("matrix must be symmetric")
    original = A.copy()
    V = np.eye(n)
    sweeps = 0
    while True:
        off = _offdiag_norm(A)
        if off < tol:
            break
        if sweeps >= max_sweeps:
            raise ConvergenceFailure(sweeps, off, tol)
        for p in range(n - 1):
            for q in range(p + 1, n):
                if A[p, q] != 0.0:
                    _rotate(A, V, p, q)
        sweeps += 1
    order = np.argsort(np.diag(A), kind="stable")
    eigenvalues = tuple(float(A[i, i]) for i in order)
    vectors = V[:, order]
    residuals = tuple(
        float(np.linalg.norm(original @ vectors[:, k] - eigenvalues[k] * vectors[:, k]))
        for k in range(n))
    return Spectrum(eigenvalues, vectors, residuals, sweeps)


def spectrum_of(g: SimplicialGraph, tol: float = 1e-12,
                max_sweeps: int = 100) -> Spectrum:
    return eigendecompose(laplacian(g), tol=tol, max_sweeps=max_sweeps)


def signed_components(g: SimplicialGraph, values: Sequence[float],
                      zero_tol: float = 1e-9) -> tuple[int, int]:
    """Component counts of the subgraphs induced by f > zero_tol and f < -zero_tol."""
    pos = [v for v in range(g.n) if values[v] > zero_tol]
    neg = [v for v in range(g.n) if values[v] < -zero_tol]
    return len(components(g.induced(pos))), len(components(g.induced(neg)))


def _rationalize(vector: Sequence[float], zero_tol: float, perturb: bool,
                 seed: Optional[int]) -> tuple[list[Fraction], bool]:
    """Exact rational copy of a float vector with no zero entries.

    Entries within zero_tol of 0 are only acceptable after the seeded
    perturbation (uniform entries in [-1e-6, 1e-6]) documented in the
    nodal-surface recipe.
    """
    values = [Fraction(float(x)) for x in vector]
    zeros = [v for v, x in enumerate(vector) if abs(x) <= zero_tol]
    if not zeros:
        return values, False
    if not perturb:
        raise ZeroOnVertex(zeros[0], float(vector[zeros[0]]))
    rng = random.Random(seed)
    for _ in range(10):
        shifted = [x + Fraction(rng.uniform(-1e-6, 1e-6)) for x in values]
        if all(x != 0 for x in shifted):
            return shifted, True
    raise ZeroOnVertex(zeros[0], float(vector[zeros[0]]))  # pragma: no cover


def nodal_report(g: SimplicialGraph, k: int, zero_tol: float = 1e-9, *,
                 perturb: bool = False, seed: Optional[int] = 0,
                 spectrum: Optional[Spectrum] = None) -> NodalReport:
    """Nodal data of the k-th eigenvector (ascending, 1-indexed).

    Components are counted strictly beyond zero_tol on the original float
    vector.  The nodal surface {f=0} is built from the rationalized vector;
    vertices at zero either abort (perturb=False) or are moved off zero by
    a recorded seeded perturbation.
    """
    if k < 2:
        raise InputError("k must be at least 2 (k=1 is the constant eigenvector)")
    if spectrum is None:
        spectrum = spectrum_of(g)
    if k > g.n:
        raise InputError(f"k={k} exceeds {g.n} eigenvectors")
    vec = tuple(float(x) for x in spectrum.eigenvectors[:, k - 1])
    zero_vertices = tuple(v for v in range(g.n) if abs(vec[v]) <= zero_tol)
    pos_comp, neg_comp = signed_components(g, vec, zero_tol)
    rational, perturbed = _rationalize(vec, zero_tol, perturb, seed)
    surface = level_surface(g, rational, Fraction(0))
    crossing = sum(1 for u, v in g.edges() if (rational[u] > 0) != (rational[v] > 0))
    d = g.dimension()
    top = g.simplices()[d] if d >= 0 else ()
    pos_simp = sum(1 for s in top if all(rational[v] > 0 for v in s))
    neg_simp = sum(1 for s in top if all(rational[v] < 0 for v in s))
    cheeger = Fraction(crossing, min(pos_simp, neg_simp)) if min(pos_simp, neg_simp) else None
    return NodalReport(k, spectrum.eigenvalues[k - 1], vec, zero_vertices,
                       pos_comp, neg_comp, surface, crossing, pos_simp, neg_simp,
                       cheeger, perturbed, seed if perturbed else None,
                       tuple(rational))


def eigenfunction_principle_check(g: SimplicialGraph,
                                  spectrum: Optional[Spectrum] = None,
                                  margin: float = 1e-8) -> list[tuple[int, float, float]]:
    """|f(v)| for every dominating vertex v and eigenvalue strictly in (0, n).

    Eigenfunctions to such eigenvalues vanish on vertices adjacent to
    everything; the returned magnitudes should all be tiny.
    """
    if spectrum is None:
        spectrum = spectrum_of(g)
    hubs = [v for v in range(g.n) if g.degree(v) == g.n - 1]
    out = []
    for v in hubs:
        for i, lam in enumerate(spectrum.eigenvalues):
            if margin < lam < g.n - margin:
                out.append((v, lam, abs(float(spectrum.eigenvectors[v, i]))))
    return out


def ground_state_surface(g: SimplicialGraph, *, seed: int = 0,
                         zero_tol: float = 1e-9,
                         budget: Optional[int] = None,
                         spectrum: Optional[Spectrum] = None) -> GroundState:
    """Nodal surface of the first nonzero mode, checked against a sphere.

    Perturbation is always enabled here: symmetric graphs routinely zero
    out ground-state entries.  In dimension 3 the double nodal surface
    {v2=0, v3=0} is attempted as well; its pipeline errors are reported as
    text rather than raised, since the construction is experimental.
    """
    if spectrum is None:
        spectrum = spectrum_of(g)
    d = g.dimension()
    nodal = nodal_report(g, 2, zero_tol, perturb=True, seed=seed, spectrum=spectrum)
    sphere = is_sphere(nodal.surface.graph, d - 1, budget=budget)
    double = double_comp = double_verdict = double_error = None
    if d == 3:
        try:
            v3, _ = _rationalize(spectrum.eigenvectors[:, 2], zero_tol,
                                 True, seed + 1)
            eps = Fraction(1, 2 ** 64)

            def adjust(stage, level, excluded):
                shifted = level
                while shifted in excluded:
                    shifted += eps
                return shifted

            double = sard_pipeline(g, [nodal.rational, v3], [0, 0],
                                   budget=budget, adjust_level=adjust)
            double_comp = len(components(double.final))
            double_verdict = double.stages[-1].verdict
        except Exception as e:  # experimental harness: report, do not raise
            double_error = f"{type(e).__name__}: {e}"
    return GroundState(nodal, spectrum.eigenvalues[1], sphere,
                       double, double_comp, double_verdict, double_error)
