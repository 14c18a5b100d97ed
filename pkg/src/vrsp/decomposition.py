"""Verification and search for Cartesian decompositions.

A decomposition hypothesis consists of two vertex-set families over the same
graph: "rows" and "cols".  The verifier checks seven conditions against the
induced layer subgraphs (coverage of vertices and arcs, vertex partitions,
pairwise uniformity of each family, the quotient-vs-layer matches, and label
disjointness across the two families), and, only when all of them hold, the
final constructive check: the graph must be isomorphic to the product of the
two quotients.

The search enumerates candidate families from label bipartitions: for any
valid decomposition the two sides cannot share a label, so each side of a
bipartition induces a spanning subgraph whose weak components are exactly
the candidate layers.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    CycleCreatedError,
    DegenerateSplitError,
    GraphError,
    LabelBudgetError,
    NotConnectedError,
)
from .graph import (
    Graph,
    LabelPair,
    induced_subgraph,
    is_weakly_connected,
    label_set,
    spanning_subgraph_by_labels,
    weak_components,
)
from .isomorphism import find_isomorphism
from .products import vrsp
from .quotient import VertexFamily, contract_family

__all__ = [
    "CONDITION_CODES",
    "DEFAULT_LABEL_BUDGET",
    "LABEL_BUDGET_ENV",
    "ConditionResult",
    "DecompositionReport",
    "Decomposition",
    "verify_decomposition",
    "layers_from_label_split",
    "find_decompositions",
    "prime_factors",
]

CONDITION_CODES = ("C1", "C2", "C3", "C4", "C5", "C6", "C7")

DEFAULT_LABEL_BUDGET = 20
LABEL_BUDGET_ENV = "VRSP_MAX_LABELS"


@dataclass(frozen=True)
class ConditionResult:
    """Outcome of one condition: pass/fail plus a human-readable witness on failure."""

    passed: bool
    witness: str = ""


@dataclass(frozen=True)
class DecompositionReport:
    """Per-condition outcomes of one verification run.

    ``conditions`` always holds C1..C7; the FINAL entry is present only when
    every numbered condition passed (the product check is meaningless
    otherwise).  ``factors`` carries the two quotient graphs exactly when
    the whole report is accepted, ordered (quotient by rows, quotient by
    cols).
    """

    conditions: dict[str, ConditionResult]
    family_sizes: tuple[int, int]
    factors: tuple[Graph, Graph] | None = None

    @property
    def accepted(self) -> bool:
        final = self.conditions.get("FINAL")
        return (
            all(self.conditions[c].passed for c in CONDITION_CODES)
            and final is not None
            and final.passed
        )

    def failed_codes(self) -> list[str]:
        return [code for code, res in self.conditions.items() if not res.passed]

    def as_dict(self) -> dict:
        """JSON-ready view (factor graphs embedded as documents)."""
        from .serialization import graph_to_document

        return {
            "accepted": self.accepted,
            "family_sizes": list(self.family_sizes),
            "conditions": {
                code: {"passed": res.passed, "witness": res.witness}
                for code, res in self.conditions.items()
            },
            "factors": (
                [graph_to_document(f) for f in self.factors] if self.factors else None
            ),
        }


@dataclass(frozen=True)
class Decomposition:
    """One accepted label bipartition with its factor pair and full report."""

    left_labels: tuple[LabelPair, ...]
    factors: tuple[Graph, Graph]
    report: DecompositionReport


def _sample(items: Iterable[str], limit: int = 4) -> str:
    out = sorted(items)
    shown = ", ".join(out[:limit])
    return shown + (", ..." if len(out) > limit else "")


def verify_decomposition(
    g: Graph,
    rows: VertexFamily | Sequence[Iterable[str]],
    cols: VertexFamily | Sequence[Iterable[str]],
) -> DecompositionReport:
    """Check the decomposition hypotheses for the given layer families.

    Conditions:
      C1  every vertex and every arc of g lies inside some row or col layer
      C2  the row sets cover V(g)
      C3  the col sets cover V(g)
      C4  the row layers are pairwise isomorphic
      C5  the col layers are pairwise isomorphic
      C6  contracting the rows yields a graph isomorphic to every col layer,
          and contracting the cols one isomorphic to every row layer
      C7  no label occurs both in a row layer and in a col layer
      FINAL (only when C1..C7 hold)  g is isomorphic to the product of the
          two quotients: quotient-by-rows then quotient-by-cols

    Contraction failures (a family set whose contraction would create a
    cycle) are reported as C6 failures, not raised.
    """
    g.check()
    if not g.vertices or not is_weakly_connected(g):
        raise NotConnectedError("decomposition needs a non-empty weakly connected graph")
    rows = rows if isinstance(rows, VertexFamily) else VertexFamily.of(rows)
    cols = cols if isinstance(cols, VertexFamily) else VertexFamily.of(cols)
    rows.check_against(g)
    cols.check_against(g)

    row_subs = [induced_subgraph(g, s) for s in rows.sets]
    col_subs = [induced_subgraph(g, s) for s in cols.sets]
    conditions: dict[str, ConditionResult] = {}

    all_sets = list(rows.sets) + list(cols.sets)
    uncovered_vs = g.vertex_set - (rows.union() | cols.union())
    uncovered_arcs = [
        a.id for a in g.arcs if not any(a.tail in s and a.head in s for s in all_sets)
    ]
    if uncovered_vs or uncovered_arcs:
        parts = []
        if uncovered_vs:
            parts.append(f"vertices not covered: {_sample(uncovered_vs)}")
        if uncovered_arcs:
            parts.append(f"arcs not inside any layer: {_sample(uncovered_arcs)}")
        conditions["C1"] = ConditionResult(False, "; ".join(parts))
    else:
        conditions["C1"] = ConditionResult(True)

    for code, fam in (("C2", rows), ("C3", cols)):
        missing = g.vertex_set - fam.union()
        conditions[code] = (
            ConditionResult(True)
            if not missing
            else ConditionResult(False, f"vertices not covered: {_sample(missing)}")
        )

    for code, subs, kind in (("C4", row_subs, "row"), ("C5", col_subs, "col")):
        witness = ""
        for i in range(1, len(subs)):
            if find_isomorphism(subs[0], subs[i]) is None:
                witness = f"{kind} layers 1 and {i + 1} are not isomorphic"
                break
        conditions[code] = ConditionResult(not witness, witness)

    q_rows = q_cols = None
    c6_witness = ""
    try:
        q_rows = contract_family(g, rows, "y~")
    except CycleCreatedError as e:
        c6_witness = f"contracting rows creates a cycle: {' -> '.join(e.witness)}"
    if not c6_witness:
        try:
            q_cols = contract_family(g, cols, "x~")
        except CycleCreatedError as e:
            c6_witness = f"contracting cols creates a cycle: {' -> '.join(e.witness)}"
    if not c6_witness and q_rows is not None and q_cols is not None:
        for j, sub in enumerate(col_subs):
            if find_isomorphism(q_rows, sub) is None:
                c6_witness = f"quotient by rows is not isomorphic to col layer {j + 1}"
                break
        else:
            for i, sub in enumerate(row_subs):
                if find_isomorphism(q_cols, sub) is None:
                    c6_witness = f"quotient by cols is not isomorphic to row layer {i + 1}"
                    break
    conditions["C6"] = ConditionResult(not c6_witness, c6_witness)

    row_labels = set().union(*(label_set(s) for s in row_subs)) if row_subs else set()
    col_labels = set().union(*(label_set(s) for s in col_subs)) if col_subs else set()
    shared = row_labels & col_labels
    conditions["C7"] = (
        ConditionResult(True)
        if not shared
        else ConditionResult(False, f"labels in both families: {_sample(str(l) for l in shared)}")
    )

    factors = None
    if all(conditions[c].passed for c in CONDITION_CODES):
        assert q_rows is not None and q_cols is not None
        product = vrsp(q_rows, q_cols)
        if find_isomorphism(g, product) is not None:
            conditions["FINAL"] = ConditionResult(True)
            factors = (q_rows, q_cols)
        else:
            conditions["FINAL"] = ConditionResult(
                False, "graph is not isomorphic to the product of the quotients"
            )

    return DecompositionReport(conditions, (len(rows), len(cols)), factors)


def layers_from_label_split(
    g: Graph, left_labels: Iterable[LabelPair]
) -> tuple[VertexFamily, VertexFamily]:
    """Candidate (rows, cols) families for one label bipartition.

    Rows are the weak components of the spanning subgraph on the complement
    labels, cols those of the subgraph on ``left_labels``; both are vertex
    partitions of g by construction.
    """
    labels = label_set(g)
    left = set(left_labels)
    stray = left - labels
    if stray:
        raise GraphError(f"labels not present in the graph: {_sample(str(l) for l in stray)}")
    right = labels - left
    if not left or not right:
        raise DegenerateSplitError("label bipartition needs both sides non-empty")

    rows = VertexFamily.of(weak_components(spanning_subgraph_by_labels(g, right)))
    cols = VertexFamily.of(weak_components(spanning_subgraph_by_labels(g, left)))
    return rows, cols


def _resolve_label_budget(max_labels: int | None) -> int:
    if max_labels is not None:
        return max_labels
    raw = os.environ.get(LABEL_BUDGET_ENV)
    if raw is None:
        return DEFAULT_LABEL_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise GraphError(f"{LABEL_BUDGET_ENV} must be an integer, got {raw!r}") from None


def find_decompositions(g: Graph, max_labels: int | None = None) -> list[Decomposition]:
    """All accepted label bipartitions of ``g``, in sorted left-side order.

    Unordered bipartitions are enumerated once each, canonicalised so the
    left side contains the smallest label; there are 2^(|L|-1) - 1 of them.
    Raises ``LabelBudgetError`` when the graph carries more distinct labels
    than the budget (``max_labels`` argument, else the VRSP_MAX_LABELS
    environment variable, else 20).
    """
    g.check()
    if not g.vertices or not is_weakly_connected(g):
        raise NotConnectedError("decomposition needs a non-empty weakly connected graph")
    budget = _resolve_label_budget(max_labels)
    labels = sorted(label_set(g))
    if len(labels) > budget:
        raise LabelBudgetError(f"graph has {len(labels)} labels, budget is {budget}")

    pivot, rest = labels[:1], labels[1:]
    candidates = []
    for mask in range((1 << len(rest)) - 1):  # full mask would leave the right side empty
        left = tuple(sorted(pivot + [l for k, l in enumerate(rest) if mask >> k & 1]))
        candidates.append(left)
    candidates.sort()

    results: list[Decomposition] = []
    for left in candidates:
        rows, cols = layers_from_label_split(g, left)
        report = verify_decomposition(g, rows, cols)
        if report.accepted:
            assert report.factors is not None
            results.append(Decomposition(left, report.factors, report))
    return results


def prime_factors(g: Graph, max_labels: int | None = None) -> list[Graph]:
    """Split ``g`` into factors that admit no further decomposition.

    Recurses on the first accepted bipartition at every level; a graph with
    no accepted bipartition is returned as is.
    """
    found = find_decompositions(g, max_labels)
    if not found:
        return [g]
    left, right = found[0].factors
    return prime_factors(left, max_labels) + prime_factors(right, max_labels)
