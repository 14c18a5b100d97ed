"""Command-line interface.

Subcommands: validate, product, contract, iso, verify, decompose, dot.
Exit codes: 0 for success or an accepting verdict, 1 for a negative verdict
(invalid graph, not isomorphic, rejected or absent decomposition), 2 for
unusable input (bad arguments, unreadable files, malformed documents).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .decomposition import find_decompositions, prime_factors, verify_decomposition
from .errors import GraphError
from .graph import Graph, label_set, validate
from .isomorphism import find_isomorphism
from .products import cartesian, intermediate, vrsp
from .quotient import contract
from .serialization import (
    emit_dot,
    emit_graph,
    graph_to_document,
    parse_family,
    parse_graph,
    weight_token,
)

_PRODUCT_KINDS = {"cartesian": cartesian, "intermediate": intermediate, "vrsp": vrsp}


def _read(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as e:
        raise GraphError(f"cannot read {path}: {e.strerror or e}") from None


def _load_graph(path: str, *, check: bool = True) -> Graph:
    try:
        return parse_graph(_read(path), check=check)
    except GraphError as e:
        raise GraphError(f"{path}: {e}") from None


def _load_family(path: str):
    try:
        return parse_family(_read(path))
    except GraphError as e:
        raise GraphError(f"{path}: {e}") from None


def _write_or_print(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _labels_json(labels) -> list[dict]:
    return [{"action": l.action, "weight": weight_token(l.weight)} for l in labels]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vrsp", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check graph invariants, printing one diagnostic per line")
    p.add_argument("graph")

    p = sub.add_parser("product", help="compute a product of two graphs")
    p.add_argument("--kind", choices=sorted(_PRODUCT_KINDS), required=True)
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("-o", "--output", help="write the result here instead of stdout")

    p = sub.add_parser("contract", help="contract a vertex set into one fresh vertex")
    p.add_argument("graph")
    p.add_argument("--set", dest="vertex_set", required=True, help="comma-separated vertex ids")
    p.add_argument("--id", dest="new_id", required=True, help="id of the replacement vertex")
    p.add_argument("-o", "--output")

    p = sub.add_parser("iso", help="find a label-preserving isomorphism")
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("verify", help="verify a decomposition hypothesis")
    p.add_argument("graph")
    p.add_argument("--rows", required=True, help="row family file")
    p.add_argument("--cols", required=True, help="col family file")

    p = sub.add_parser("decompose", help="search for Cartesian decompositions")
    p.add_argument("graph")
    p.add_argument("--recursive", action="store_true", help="also split factors into prime factors")
    p.add_argument("--max-labels", type=int, default=None, help="label budget for the search")
    p.add_argument("--out-dir", default=None, help="write factor graphs into this directory")

    p = sub.add_parser("dot", help="render a graph as Graphviz DOT")
    p.add_argument("graph")

    return parser


def _run(args: argparse.Namespace) -> int:
    if args.command == "validate":
        g = _load_graph(args.graph, check=False)
        diagnostics = validate(g)
        for d in diagnostics:
            print(d)
        return 1 if diagnostics else 0

    if args.command == "product":
        g = _PRODUCT_KINDS[args.kind](_load_graph(args.left), _load_graph(args.right))
        _write_or_print(emit_graph(g), args.output)
        return 0

    if args.command == "contract":
        ids = [part.strip() for part in args.vertex_set.split(",") if part.strip()]
        g = contract(_load_graph(args.graph), ids, args.new_id)
        _write_or_print(emit_graph(g), args.output)
        return 0

    if args.command == "iso":
        mapping = find_isomorphism(_load_graph(args.left), _load_graph(args.right))
        print(json.dumps({"isomorphic": mapping is not None, "mapping": mapping}, indent=2))
        return 0 if mapping is not None else 1

    if args.command == "verify":
        g = _load_graph(args.graph)
        report = verify_decomposition(g, _load_family(args.rows), _load_family(args.cols))
        print(json.dumps(report.as_dict(), indent=2))
        return 0 if report.accepted else 1

    if args.command == "decompose":
        g = _load_graph(args.graph)
        found = find_decompositions(g, max_labels=args.max_labels)
        out_dir = Path(args.out_dir) if args.out_dir else None
        if out_dir is not None:
            out_dir.mkdir(parents=True, exist_ok=True)
        stem = Path(args.graph).stem or "graph"

        entries = []
        for i, dec in enumerate(found, start=1):
            right = sorted(label_set(g) - set(dec.left_labels))
            entry = {
                "left_labels": _labels_json(dec.left_labels),
                "right_labels": _labels_json(right),
                "family_sizes": list(dec.report.family_sizes),
                "factors": [graph_to_document(f) for f in dec.factors],
            }
            if out_dir is not None:
                files = []
                for j, factor in enumerate(dec.factors, start=1):
                    path = out_dir / f"{stem}.d{i}.f{j}.json"
                    path.write_text(emit_graph(factor), encoding="utf-8")
                    files.append(str(path))
                entry["files"] = files
            entries.append(entry)

        result = {"count": len(found), "decompositions": entries}
        if args.recursive:
            primes = prime_factors(g, max_labels=args.max_labels)
            result["prime_factors"] = [graph_to_document(f) for f in primes]
            if out_dir is not None:
                files = []
                for k, factor in enumerate(primes, start=1):
                    path = out_dir / f"{stem}.prime{k}.json"
                    path.write_text(emit_graph(factor), encoding="utf-8")
                    files.append(str(path))
                result["prime_factor_files"] = files
        print(json.dumps(result, indent=2))
        return 0 if found else 1

    if args.command == "dot":
        sys.stdout.write(emit_dot(_load_graph(args.graph)))
        return 0

    raise AssertionError(f"unhandled command {args.command!r}")


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:  # argparse exits 2 on usage errors, 0 on --help
        return int(e.code or 0)
    try:
        return _run(args)
    except GraphError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except Exception as e:  # the CLI must never crash on bad input
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
