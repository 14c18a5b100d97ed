"""Vertex-set contraction and repeated contraction over disjoint families.

Contracting a vertex set X replaces X by a single fresh vertex: arcs with
both ends inside X are deleted, and every arc crossing the boundary is
redirected to the new vertex, keeping its label and its original id.
Redirected arcs that coincide in (tail, head, label) collapse to a single
arc; the one with the smallest original id survives.  That identification is
what makes the quotient of a grid row look like a single path rather than a
bundle of parallel copies, and it keeps repeated contraction independent of
the order in which disjoint sets are contracted.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CycleCreatedError, GraphError, UnknownVertexError
from .graph import Arc, Graph, _find_cycle

__all__ = ["VertexFamily", "contract", "contract_family"]


@dataclass(frozen=True)
class VertexFamily:
    """An ordered list of pairwise disjoint, non-empty vertex sets."""

    sets: tuple[frozenset[str], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "sets", tuple(frozenset(s) for s in self.sets))
        seen: set[str] = set()
        for i, s in enumerate(self.sets):
            if not s:
                raise GraphError(f"family set #{i + 1} is empty")
            overlap = seen & s
            if overlap:
                raise GraphError(f"family sets are not disjoint: {sorted(overlap)!r} repeated")
            seen |= s

    @classmethod
    def of(cls, sets: Iterable[Iterable[str]]) -> "VertexFamily":
        return cls(tuple(frozenset(s) for s in sets))

    def __len__(self) -> int:
        return len(self.sets)

    def union(self) -> frozenset[str]:
        out: frozenset[str] = frozenset()
        for s in self.sets:
            out |= s
        return out

    def check_against(self, g: Graph) -> "VertexFamily":
        unknown = self.union() - g.vertex_set
        if unknown:
            raise UnknownVertexError(f"family references vertices not in the graph: {sorted(unknown)!r}")
        return self


def contract(g: Graph, x: Iterable[str], new_id: str) -> Graph:
    """Contract the vertex set ``x`` of ``g`` into the fresh vertex ``new_id``.

    Arcs internal to ``x`` are deleted; boundary arcs are redirected onto
    ``new_id`` with labels preserved and original ids retained.  Redirected
    arcs that become indistinguishable (same tail, head, and label) are
    merged, lowest id first.  Raises ``CycleCreatedError`` when the result
    would contain a directed cycle, which can happen when ``x`` is not
    closed under intermediate paths.
    """
    xs = set(x)
    if not xs:
        raise GraphError("cannot contract an empty vertex set")
    unknown = xs - g.vertex_set
    if unknown:
        raise UnknownVertexError(f"unknown vertex ids {sorted(unknown)!r}")
    survivors = g.vertex_set - xs
    if new_id in survivors:
        raise GraphError(f"replacement vertex id {new_id!r} already present in the graph")

    kept: list[Arc] = []
    redirected: dict[tuple[str, str, object], Arc] = {}
    for a in g.arcs:
        tail_in, head_in = a.tail in xs, a.head in xs
        if tail_in and head_in:
            continue
        if not tail_in and not head_in:
            kept.append(a)
            continue
        b = Arc(a.id, new_id if tail_in else a.tail, new_id if head_in else a.head, a.label)
        key = (b.tail, b.head, b.label)
        old = redirected.get(key)
        if old is None or b.id < old.id:
            redirected[key] = b

    result = Graph(tuple(survivors | {new_id}), tuple(kept) + tuple(redirected.values()))
    cycle = _find_cycle(result.vertex_set, list(result.arcs))
    if cycle is not None:
        raise CycleCreatedError(cycle)
    return result


def contract_family(
    g: Graph,
    fam: VertexFamily | Sequence[Iterable[str]],
    id_prefix: str = "y~",
    *,
    rng: random.Random | None = None,
) -> Graph:
    """Contract every set of a disjoint family, one after the other.

    The fresh vertex for a set is ``id_prefix`` + its 1-based position in
    the canonical family order (sets sorted by smallest member), skipping
    ids the graph already uses, so the result does not depend on the order
    in which the sets are listed or contracted.  ``rng``, when given,
    shuffles the order of the individual contractions; it exists to let
    tests exercise that independence.
    """
    if not isinstance(fam, VertexFamily):
        fam = VertexFamily.of(fam)
    fam.check_against(g)

    # Mint against all of V(g), skipping indices already taken, so the names
    # are fresh and cannot depend on the contraction order.  Quotients of
    # quotients therefore keep working even when the prefix repeats.
    ordered = sorted(fam.sets, key=min)
    minted: dict[frozenset[str], str] = {}
    taken = set(g.vertex_set)
    index = 1
    for s in ordered:
        while f"{id_prefix}{index}" in taken:
            index += 1
        minted[s] = f"{id_prefix}{index}"
        taken.add(minted[s])
        index += 1

    steps = list(ordered)
    if rng is not None:
        rng.shuffle(steps)
    out = g
    for s in steps:
        out = contract(out, s, minted[s])
    return Graph(out.vertices, out.arcs)
