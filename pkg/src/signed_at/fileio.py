"""Canonical graph documents.

A graph document is JSON with ``vertices`` (ordered names), ``edges``
(``[u, v, sign]`` triples) and optionally ``outer_cycle`` and ``faces``.
:func:`dumps_graph` writes a fixed layout, so loading and dumping a
canonical document reproduces it byte for byte.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .core import SignedGraph
from .limits import InvalidArgumentError


@dataclass(frozen=True)
class GraphDoc:
    graph: SignedGraph
    outer_cycle: tuple | None = None
    faces: tuple | None = None


def _names(seq, what):
    if not isinstance(seq, list) or not all(isinstance(v, str) for v in seq):
        raise InvalidArgumentError(f"{what} must be a list of vertex names")
    return tuple(seq)


def loads_graph(text: str) -> GraphDoc:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidArgumentError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or "vertices" not in doc or "edges" not in doc:
        raise InvalidArgumentError("graph document needs 'vertices' and 'edges'")
    verts = _names(doc["vertices"], "vertices")
    edges = []
    for e in doc["edges"]:
        if not (isinstance(e, list) and len(e) == 3 and isinstance(e[0], str) and isinstance(e[1], str)
                and e[2] in (1, -1) and not isinstance(e[2], bool)):
            raise InvalidArgumentError(f"edge {e!r} must be [u, v, 1 or -1]")
        edges.append(tuple(e))
    g = SignedGraph.from_edges(verts, edges)
    outer = doc.get("outer_cycle")
    faces = doc.get("faces")
    if outer is not None:
        outer = _names(outer, "outer_cycle")
    if faces is not None:
        if not isinstance(faces, list):
            raise InvalidArgumentError("faces must be a list of vertex lists")
        faces = tuple(_names(f, "face") for f in faces)
    return GraphDoc(g, outer, faces)


def _line(items) -> str:
    return json.dumps(list(items), ensure_ascii=False)


def dumps_graph(g: SignedGraph, outer_cycle: Sequence | None = None, faces: Sequence | None = None) -> str:
    parts = ['{', f'  "vertices": {_line(g.vertices)},']
    edges = g.named_edges()
    if edges:
        parts.append('  "edges": [')
        parts += [f"    {_line(e)}," for e in edges[:-1]] + [f"    {_line(edges[-1])}"]
        parts.append("  ]")
    else:
        parts.append('  "edges": []')
    if outer_cycle is not None:
        parts[-1] += ","
        parts.append(f'  "outer_cycle": {_line(outer_cycle)}')
    if faces is not None:
        parts[-1] += ","
        faces = list(faces)
        if faces:
            parts.append('  "faces": [')
            parts += [f"    {_line(f)}," for f in faces[:-1]] + [f"    {_line(faces[-1])}"]
            parts.append("  ]")
        else:
            parts.append('  "faces": []')
    parts.append("}")
    return "\n".join(parts) + "\n"


def dumps_doc(doc: GraphDoc) -> str:
    return dumps_graph(doc.graph, doc.outer_cycle, doc.faces)


def read_graph(path) -> GraphDoc:
    with open(path, encoding="utf-8") as fh:
        return loads_graph(fh.read())
