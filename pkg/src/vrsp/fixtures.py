"""Bundled example graphs.

``fig1`` is a 3x4 grid (12 vertices, 17 arcs, labels a/b/c) that decomposes
into a 3-vertex a-path and a 4-vertex b,b,c-path.  ``fig2`` and ``fig3`` are
2x2 grids whose shipped families fail verification: fig2's col family covers
only half the vertices, fig3's rows carry different labels.  ``fig2_g1`` /
``fig2_g2`` and ``fig3_g1`` / ``fig3_g2`` are the corresponding factor
graphs used by the product examples.

Each graph fixture ``<name>.json`` may come with family files ``<name>.rows``
and ``<name>.cols``.
"""

from __future__ import annotations

from pathlib import Path

from .graph import Graph
from .quotient import VertexFamily
from .serialization import parse_family, parse_graph

__all__ = ["fixture_dir", "fixture_path", "load_graph", "load_family"]


def fixture_dir() -> Path:
    return Path(__file__).with_name("fixtures")


def fixture_path(filename: str) -> Path:
    """Absolute path of a bundled fixture file, e.g. ``fig1.json`` or ``fig1.rows``."""
    path = fixture_dir() / filename
    if not path.is_file():
        names = ", ".join(sorted(p.name for p in fixture_dir().iterdir()))
        raise FileNotFoundError(f"no fixture {filename!r}; available: {names}")
    return path


def load_graph(name: str) -> Graph:
    """Load a bundled graph by bare name, e.g. ``fig1``."""
    return parse_graph(fixture_path(f"{name}.json").read_bytes())


def load_family(name: str, side: str) -> VertexFamily:
    """Load a bundled family, e.g. ``load_family("fig1", "rows")``."""
    return parse_family(fixture_path(f"{name}.{side}").read_bytes())
