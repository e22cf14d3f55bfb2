"""Graph and witness documents: JSON, DOT and flat edge-list exports.

The JSON graph document is bit-exact by construction: keys "order" then
"edges", edges ascending pairs sorted lexicographically, compact separators,
no trailing whitespace, newline-terminated.  Golden files and round-trip
diffs rely on this.
"""

from __future__ import annotations

import json

from .errors import InvalidParameterError
from .graphs import Graph
from .witnesses import VertexMap

__all__ = [
    "graph_to_json",
    "graph_from_json",
    "graph_to_dot",
    "graph_to_edgelist",
    "witness_to_json",
    "witness_from_json",
]


def graph_to_json(g: Graph) -> str:
    doc = {"order": g.order, "edges": [list(e) for e in g.edges]}
    return json.dumps(doc, separators=(",", ":")) + "\n"


def _require_int(value: object, what: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise InvalidParameterError(f"{what} must be an integer, got {value!r}")
    return value


def graph_from_json(text: str) -> Graph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidParameterError(f"not a valid graph document: {exc}") from exc
    if not isinstance(doc, dict) or set(doc) != {"order", "edges"}:
        raise InvalidParameterError('graph document must have exactly the keys "order" and "edges"')
    order = _require_int(doc["order"], "order")
    edges_raw = doc["edges"]
    if not isinstance(edges_raw, list):
        raise InvalidParameterError("edges must be a list of [i,j] pairs")
    edges = []
    for item in edges_raw:
        if not isinstance(item, list) or len(item) != 2:
            raise InvalidParameterError(f"edge entry {item!r} is not an [i,j] pair")
        edges.append((_require_int(item[0], "edge endpoint"), _require_int(item[1], "edge endpoint")))
    return Graph(order, tuple(edges))


def graph_to_dot(g: Graph) -> str:
    lines = ["graph {"]
    for v in range(g.order):
        lines.append(f"  {v};")
    for i, j in g.edges:
        lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_edgelist(g: Graph) -> str:
    return "".join(f"{i} {j}\n" for i, j in g.edges)


def witness_to_json(source: Graph, target: Graph, vm: VertexMap) -> str:
    doc = {
        "source": {"order": source.order, "edges": [list(e) for e in source.edges]},
        "target": {"order": target.order, "edges": [list(e) for e in target.edges]},
        "mapping": list(vm.mapping),
    }
    return json.dumps(doc, separators=(",", ":")) + "\n"


def witness_from_json(text: str) -> tuple[Graph, Graph, VertexMap]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidParameterError(f"not a valid witness document: {exc}") from exc
    if not isinstance(doc, dict) or set(doc) != {"source", "target", "mapping"}:
        raise InvalidParameterError(
            'witness document must have exactly the keys "source", "target" and "mapping"'
        )
    source = graph_from_json(json.dumps(doc["source"]))
    target = graph_from_json(json.dumps(doc["target"]))
    mapping = doc["mapping"]
    if not isinstance(mapping, list):
        raise InvalidParameterError("mapping must be a list of integers")
    vm = VertexMap(source.order, target.order,
                   tuple(_require_int(x, "mapping entry") for x in mapping))
    return source, target, vm
