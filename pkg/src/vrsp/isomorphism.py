"""Label-preserving isomorphism of directed acyclic multigraphs.

Two graphs are isomorphic when some vertex bijection carries, for every
ordered vertex pair, the multiset of arc labels between the pair onto the
multiset between the image pair.  Arc and vertex ids never matter.

:func:`find_isomorphism` is the practical matcher: vertices are grouped by
an invariant signature (degrees, level, incident label multisets, then a few
rounds of neighbourhood refinement) and matched by backtracking inside those
groups.  :func:`brute_force_isomorphic` is the ground-truth oracle for small
graphs: it enumerates every vertex bijection outright and shares none of the
matcher's pruning, which is the point.
"""

from __future__ import annotations

from collections import Counter
from itertools import permutations
from typing import Mapping

from .errors import SizeLimitError
from .graph import Graph, LabelPair, levels

__all__ = ["IsoMapping", "find_isomorphism", "is_isomorphism", "brute_force_isomorphic"]

IsoMapping = Mapping[str, str]

BRUTE_FORCE_LIMIT = 8

_LabelKey = tuple[tuple[LabelPair, int], ...]


def _pair_labels(g: Graph) -> dict[tuple[str, str], _LabelKey]:
    """Multiset of labels between every adjacent ordered vertex pair, in hashable form."""
    counts: dict[tuple[str, str], Counter] = {}
    for a in g.arcs:
        counts.setdefault((a.tail, a.head), Counter())[a.label] += 1
    return {pair: tuple(sorted(c.items())) for pair, c in counts.items()}


def is_isomorphism(g1: Graph, g2: Graph, mapping: IsoMapping) -> bool:
    """Check a witness: a bijection preserving per-pair label multisets."""
    if set(mapping.keys()) != g1.vertex_set:
        return False
    if set(mapping.values()) != g2.vertex_set or len(set(mapping.values())) != len(mapping):
        return False
    p1, p2 = _pair_labels(g1), _pair_labels(g2)
    image = {(mapping[u], mapping[v]): labels for (u, v), labels in p1.items()}
    return image == p2


def _signatures(g: Graph, rounds: int = 2) -> dict[str, int]:
    """Isomorphism-invariant vertex signatures, refined by neighbourhood structure.

    Signatures are interned to small ints; equal ints mean "possibly
    matchable", differing ints mean "provably unmatchable".
    """
    lvl = levels(g)
    interned: dict[object, int] = {}

    def intern(key: object) -> int:
        return interned.setdefault(key, len(interned))

    sig = {
        v: intern(
            (
                g.in_degree(v),
                g.out_degree(v),
                lvl[v],
                tuple(sorted(Counter(a.label for a in g.in_arcs(v)).items())),
                tuple(sorted(Counter(a.label for a in g.out_arcs(v)).items())),
            )
        )
        for v in g.vertices
    }
    for _ in range(rounds):
        sig = {
            v: intern(
                (
                    sig[v],
                    tuple(sorted((a.label, sig[a.tail]) for a in g.in_arcs(v))),
                    tuple(sorted((a.label, sig[a.head]) for a in g.out_arcs(v))),
                )
            )
            for v in g.vertices
        }
    return sig


def find_isomorphism(g1: Graph, g2: Graph) -> dict[str, str] | None:
    """Find a label-preserving isomorphism witness, or None when there is none.

    Deterministic for given inputs: vertices are processed smallest
    candidate class first, candidates in sorted id order.
    """
    if len(g1.vertices) != len(g2.vertices) or len(g1.arcs) != len(g2.arcs):
        return None
    if Counter(a.label for a in g1.arcs) != Counter(a.label for a in g2.arcs):
        return None
    if not g1.vertices:
        return {}

    # Signatures must be computed jointly so interned tokens are comparable.
    joint = _signatures(_disjoint_union(g1, g2))
    sig1 = {v: joint["1:" + v] for v in g1.vertices}
    sig2 = {v: joint["2:" + v] for v in g2.vertices}
    if Counter(sig1.values()) != Counter(sig2.values()):
        return None

    by_sig: dict[int, list[str]] = {}
    for w in g2.vertices:
        by_sig.setdefault(sig2[w], []).append(w)
    candidates = {u: by_sig[sig1[u]] for u in g1.vertices}
    order = sorted(g1.vertices, key=lambda u: (len(candidates[u]), u))

    p1, p2 = _pair_labels(g1), _pair_labels(g2)
    assigned: dict[str, str] = {}
    used: set[str] = set()

    def consistent(u: str, w: str) -> bool:
        for v, t in assigned.items():
            if p1.get((u, v)) != p2.get((w, t)) or p1.get((v, u)) != p2.get((t, w)):
                return False
        return True

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        u = order[i]
        for w in candidates[u]:
            if w in used or not consistent(u, w):
                continue
            assigned[u] = w
            used.add(w)
            if extend(i + 1):
                return True
            del assigned[u]
            used.remove(w)
        return False

    if not extend(0):
        return None
    assert is_isomorphism(g1, g2, assigned)
    return dict(assigned)


def _disjoint_union(g1: Graph, g2: Graph) -> Graph:
    from .graph import Arc

    vertices = tuple("1:" + v for v in g1.vertices) + tuple("2:" + v for v in g2.vertices)
    arcs = tuple(Arc("1:" + a.id, "1:" + a.tail, "1:" + a.head, a.label) for a in g1.arcs)
    arcs += tuple(Arc("2:" + a.id, "2:" + a.tail, "2:" + a.head, a.label) for a in g2.arcs)
    return Graph(vertices, arcs)


def brute_force_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Decide isomorphism by trying every vertex bijection.

    Only usable up to ``BRUTE_FORCE_LIMIT`` vertices per graph; raises
    ``SizeLimitError`` beyond that.
    """
    n1, n2 = len(g1.vertices), len(g2.vertices)
    if n1 > BRUTE_FORCE_LIMIT or n2 > BRUTE_FORCE_LIMIT:
        raise SizeLimitError(f"brute force is capped at {BRUTE_FORCE_LIMIT} vertices, got {n1} and {n2}")
    if n1 != n2:
        return False
    if n1 == 0:
        return True

    # Encode each pair's label multiset as an interned int so the inner loop
    # compares plain integers.
    interned: dict[_LabelKey, int] = {}

    def matrix(g: Graph) -> list[list[int]]:
        index = {v: i for i, v in enumerate(g.vertices)}
        m = [[0] * len(g.vertices) for _ in g.vertices]
        for (u, v), key in _pair_labels(g).items():
            m[index[u]][index[v]] = interned.setdefault(key, len(interned) + 1)
        return m

    m1, m2 = matrix(g1), matrix(g2)
    idx = range(n1)
    for perm in permutations(idx):
        ok = True
        for i in idx:
            row1, row2 = m1[i], m2[perm[i]]
            for j in idx:
                if row1[j] != row2[perm[j]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False
