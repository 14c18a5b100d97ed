"""Labelled directed acyclic multigraphs and their structural queries.

The data model: a graph has a set of vertex ids (opaque strings), and a list
of arcs.  Each arc has its own unique id, a tail, a head, and a label pair
(action name, exact weight).  Parallel arcs are permitted, including arcs
that agree in tail, head, and label; self-loops and directed cycles are not.

``Graph`` instances are immutable; every operation returns a fresh value.
Construction via the ``Graph`` constructor only normalises field order, it
does not enforce invariants.  Use :func:`validate` to obtain diagnostics, or
:func:`build_graph` / ``Graph.check`` to get validated values.
"""

from __future__ import annotations

import heapq
from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable

from .errors import InvalidGraphError, UnknownVertexError

__all__ = [
    "LabelPair",
    "Arc",
    "Graph",
    "Diagnostic",
    "build_graph",
    "validate",
    "level",
    "levels",
    "sources",
    "label_set",
    "induced_subgraph",
    "spanning_subgraph_by_labels",
    "weak_components",
    "is_weakly_connected",
    "topological_order",
]


@dataclass(frozen=True, order=True)
class LabelPair:
    """An arc label: an action name plus an exact weight.

    Two label pairs are equal iff both components are equal; weights are
    exact rationals, never floats, so equality never suffers rounding.
    """

    action: str
    weight: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        if not isinstance(self.action, str) or not self.action:
            raise ValueError("label action must be a non-empty string")
        if isinstance(self.weight, bool) or not isinstance(self.weight, (int, Fraction)):
            raise ValueError(f"label weight must be an exact integer or rational, got {self.weight!r}")
        object.__setattr__(self, "weight", Fraction(self.weight))

    def __str__(self) -> str:
        return f"{self.action},{self.weight}"


@dataclass(frozen=True, order=True)
class Arc:
    """A directed arc with its own identity, endpoints, and label."""

    id: str
    tail: str
    head: str
    label: LabelPair


@dataclass(frozen=True)
class Diagnostic:
    """One invariant violation found by :func:`validate`."""

    code: str
    message: str
    subject: tuple[str, ...] = ()

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


@dataclass(frozen=True)
class Graph:
    """An edge-labelled directed acyclic multigraph.

    ``vertices`` and ``arcs`` are stored canonically (sorted by id), so two
    graphs compare equal exactly when they have the same vertex ids and the
    same arcs, independent of construction order.  ``name`` is carried
    metadata for serialization and plays no role in any graph semantics.
    """

    vertices: tuple[str, ...]
    arcs: tuple[Arc, ...]
    name: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(sorted(set(self.vertices))))
        object.__setattr__(self, "arcs", tuple(sorted(self.arcs, key=lambda a: (a.id, a.tail, a.head, a.label))))

    @cached_property
    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)

    @cached_property
    def _out(self) -> dict[str, tuple[Arc, ...]]:
        out: dict[str, list[Arc]] = {v: [] for v in self.vertices}
        for a in self.arcs:
            if a.tail in out:
                out[a.tail].append(a)
        return {v: tuple(arcs) for v, arcs in out.items()}

    @cached_property
    def _in(self) -> dict[str, tuple[Arc, ...]]:
        inc: dict[str, list[Arc]] = {v: [] for v in self.vertices}
        for a in self.arcs:
            if a.head in inc:
                inc[a.head].append(a)
        return {v: tuple(arcs) for v, arcs in inc.items()}

    def out_arcs(self, v: str) -> tuple[Arc, ...]:
        self._require(v)
        return self._out[v]

    def in_arcs(self, v: str) -> tuple[Arc, ...]:
        self._require(v)
        return self._in[v]

    def out_degree(self, v: str) -> int:
        return len(self.out_arcs(v))

    def in_degree(self, v: str) -> int:
        return len(self.in_arcs(v))

    def _require(self, v: str) -> None:
        if v not in self.vertex_set:
            raise UnknownVertexError(f"unknown vertex id {v!r}")

    def check(self) -> "Graph":
        """Return self if all invariants hold, else raise ``InvalidGraphError``."""
        diags = validate(self)
        if diags:
            raise InvalidGraphError(diags)
        return self


def build_graph(vertices: Iterable[str], arcs: Iterable[Arc], name: str = "") -> Graph:
    """Construct a graph and verify all invariants."""
    return Graph(tuple(vertices), tuple(arcs), name).check()


def validate(g: Graph) -> list[Diagnostic]:
    """Check every structural invariant, returning one diagnostic per violation.

    Reported violations: duplicate arc ids, arcs whose tail or head is not a
    vertex of the graph, self-loops, and directed cycles (with one witness
    cycle spelled out).  An empty list means the graph is valid.
    """
    diags: list[Diagnostic] = []
    vset = g.vertex_set

    id_counts = Counter(a.id for a in g.arcs)
    for arc_id, n in sorted(id_counts.items()):
        if n > 1:
            diags.append(Diagnostic("duplicate-arc-id", f"arc id {arc_id!r} occurs {n} times", (arc_id,)))

    sound_arcs: list[Arc] = []
    for a in g.arcs:
        dangling = [e for e in (a.tail, a.head) if e not in vset]
        if dangling:
            ends = ", ".join(repr(e) for e in dangling)
            diags.append(Diagnostic("dangling-arc", f"arc {a.id!r} references missing vertex {ends}", (a.id,)))
            continue
        if a.tail == a.head:
            diags.append(Diagnostic("self-loop", f"arc {a.id!r} is a self-loop on {a.tail!r}", (a.id,)))
            continue
        sound_arcs.append(a)

    cycle = _find_cycle(vset, sound_arcs)
    if cycle is not None:
        path = " -> ".join(cycle + [cycle[0]])
        diags.append(Diagnostic("cycle", f"directed cycle {path}", tuple(cycle)))

    return diags


def _find_cycle(vertices: frozenset[str], arcs: list[Arc]) -> list[str] | None:
    """Return the vertices of one directed cycle, or None if acyclic."""
    succ: dict[str, list[str]] = {v: [] for v in vertices}
    indeg: dict[str, int] = {v: 0 for v in vertices}
    for a in arcs:
        succ[a.tail].append(a.head)
        indeg[a.head] += 1

    queue = deque(v for v in sorted(vertices) if indeg[v] == 0)
    seen = 0
    while queue:
        v = queue.popleft()
        seen += 1
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    if seen == len(vertices):
        return None

    # Vertices left over after Kahn's algorithm lie on a cycle or downstream
    # of one; trimming those without a surviving successor leaves only cycle
    # vertices, where walking successors must revisit a vertex.
    remnant = {v for v in vertices if indeg[v] > 0}
    outdeg = {v: sum(w in remnant for w in succ[v]) for v in remnant}
    trim = deque(v for v in remnant if outdeg[v] == 0)
    pred: dict[str, list[str]] = {v: [] for v in remnant}
    for v in remnant:
        for w in succ[v]:
            if w in remnant:
                pred[w].append(v)
    while trim:
        v = trim.popleft()
        remnant.discard(v)
        for u in pred[v]:
            if u in remnant:
                outdeg[u] -= 1
                if outdeg[u] == 0:
                    trim.append(u)

    path: list[str] = []
    position: dict[str, int] = {}
    v = min(remnant)
    while v not in position:
        position[v] = len(path)
        path.append(v)
        v = min(w for w in succ[v] if w in remnant)
    return path[position[v]:]


def topological_order(g: Graph) -> list[str]:
    """Vertices in a deterministic topological order (smallest id first among ready vertices)."""
    indeg = {v: g.in_degree(v) for v in g.vertices}
    ready = [v for v in g.vertices if indeg[v] == 0]
    heapq.heapify(ready)
    order: list[str] = []
    while ready:
        v = heapq.heappop(ready)
        order.append(v)
        for a in g.out_arcs(v):
            indeg[a.head] -= 1
            if indeg[a.head] == 0:
                heapq.heappush(ready, a.head)
    if len(order) != len(g.vertices):
        raise InvalidGraphError(validate(g))
    return order


def levels(g: Graph) -> dict[str, int]:
    """Map each vertex to the number of arcs on a longest directed path ending there."""
    lvl: dict[str, int] = {}
    for v in topological_order(g):
        incoming = g.in_arcs(v)
        lvl[v] = max((lvl[a.tail] + 1 for a in incoming), default=0)
    return lvl


def level(g: Graph, v: str) -> int:
    """Length of a longest directed path ending at ``v`` (0 iff ``v`` is a source)."""
    g._require(v)
    return levels(g)[v]


def sources(g: Graph) -> set[str]:
    """All vertices with in-degree 0."""
    return {v for v in g.vertices if g.in_degree(v) == 0}


def label_set(g: Graph) -> set[LabelPair]:
    """The distinct label pairs occurring on arcs of ``g``."""
    return {a.label for a in g.arcs}


def induced_subgraph(g: Graph, vs: Iterable[str]) -> Graph:
    """The subgraph on ``vs`` with every arc of ``g`` that has both ends in ``vs``."""
    keep = set(vs)
    unknown = keep - g.vertex_set
    if unknown:
        raise UnknownVertexError(f"unknown vertex ids {sorted(unknown)!r}")
    arcs = tuple(a for a in g.arcs if a.tail in keep and a.head in keep)
    return Graph(tuple(keep), arcs)


def spanning_subgraph_by_labels(g: Graph, keep: Iterable[LabelPair]) -> Graph:
    """Same vertex set as ``g``; exactly the arcs whose label is in ``keep``."""
    wanted = set(keep)
    return Graph(g.vertices, tuple(a for a in g.arcs if a.label in wanted))


def weak_components(g: Graph) -> list[set[str]]:
    """Partition of the vertices into weakly connected components.

    Components are ordered by their smallest contained vertex id, so the
    result is deterministic for a given graph.
    """
    neighbours: dict[str, set[str]] = {v: set() for v in g.vertices}
    for a in g.arcs:
        if a.tail in neighbours and a.head in neighbours:
            neighbours[a.tail].add(a.head)
            neighbours[a.head].add(a.tail)

    seen: set[str] = set()
    components: list[set[str]] = []
    for start in g.vertices:  # already sorted, so components come out ordered
        if start in seen:
            continue
        comp = {start}
        frontier = deque([start])
        while frontier:
            v = frontier.popleft()
            for w in neighbours[v]:
                if w not in comp:
                    comp.add(w)
                    frontier.append(w)
        seen |= comp
        components.append(comp)
    return components


def is_weakly_connected(g: Graph) -> bool:
    """True iff ``g`` is non-empty and has a single weak component."""
    return len(weak_components(g)) == 1
