"""OFF and OBJ export of embedded surfaces and curves.

2-dimensional surfaces become triangle meshes (oriented consistently when
possible), 1-dimensional graphs become polyline segments, anything lower
exports as bare points.  Coordinates are padded or truncated to three
components since both formats are 3D.
"""

from __future__ import annotations

from typing import Optional, Union

from .core import SimplicialGraph
from .errors import MissingCoordinates
from .levelset import LevelSurfaceGraph, surface_triangles


def _graph_of(surface) -> SimplicialGraph:
    return surface.graph if isinstance(surface, LevelSurfaceGraph) else surface


def _points(g: SimplicialGraph) -> list[tuple[float, float, float]]:
    if g.n > 0 and g.coordinates is None:
        raise MissingCoordinates("surface has no vertex coordinates")
    out = []
    for p in g.coordinates or ():
        p = tuple(float(x) for x in p[:3])
        out.append(p + (0.0,) * (3 - len(p)))
    return out


def _faces(g: SimplicialGraph, budget: Optional[int]) -> list[tuple[int, int, int]]:
    if g.dimension() < 2:
        return []
    return list(surface_triangles(g, budget=budget).triangles)


def to_off(surface: Union[SimplicialGraph, LevelSurfaceGraph],
           budget: Optional[int] = None) -> str:
    g = _graph_of(surface)
    points = _points(g)
    faces = _faces(g, budget)
    lines = ["OFF", f"{len(points)} {len(faces)} 0"]
    lines += [f"{x} {y} {z}" for x, y, z in points]
    lines += [f"3 {a} {b} {c}" for a, b, c in faces]
    return "\n".join(lines) + "\n"


def to_obj(surface: Union[SimplicialGraph, LevelSurfaceGraph],
           budget: Optional[int] = None) -> str:
    g = _graph_of(surface)
    points = _points(g)
    lines = [f"v {x} {y} {z}" for x, y, z in points]
    if g.dimension() >= 2:
        lines += [f"f {a + 1} {b + 1} {c + 1}" for a, b, c in _faces(g, budget)]
    elif g.dimension() == 1:
        lines += [f"l {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + ("\n" if lines else "")


def export_mesh(surface: Union[SimplicialGraph, LevelSurfaceGraph],
                fmt: str, path: str, budget: Optional[int] = None) -> str:
    """Write the surface to path in the given format; returns the path."""
    if fmt == "off":
        text = to_off(surface, budget=budget)
    elif fmt == "obj":
        text = to_obj(surface, budget=budget)
    else:
        raise ValueError(f"unknown mesh format {fmt!r}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return path
