"""Labeling documents: one JSON object per file, one top-level key per line.

Keys, in order: ``format``, ``graph`` (a descriptor, see
:func:`radiolab.graphs.describe`), ``naming``, ``order`` (flat vertex indices
by increasing label, or null), ``labels`` (per flat vertex index, or null),
``span``, ``valid``, ``origin``.  Indices are 0-based; ``naming`` records how
they map to printed names.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .graphs import Graph, GraphError, describe, from_descriptor
from .labeling import RadioLabeling

FORMAT = "radiolab-labeling/1"
KEYS = ("format", "graph", "naming", "order", "labels", "span", "valid", "origin")


class DocumentError(ValueError):
    pass


@dataclass
class LabelingDocument:
    graph: Graph
    order: list[int] | None
    labels: list[int] | None
    span: int | None
    valid: bool | None
    origin: str = ""

    @classmethod
    def from_labeling(cls, lab: RadioLabeling) -> "LabelingDocument":
        return cls(
            lab.graph,
            list(lab.order) if lab.order is not None else lab.ordering(),
            [int(v) for v in lab.labels],
            lab.span,
            lab.valid,
            lab.origin,
        )


def _naming(g: Graph) -> dict:
    def one(h: Graph) -> str:
        if h.kind == "generalized_petersen" and h.params.get("naming") == "x":
            return "x_i = index + 1"
        if h.kind == "generalized_petersen":
            return "u_i = index, v_i = index - m"
        if h.kind == "tree":
            return "y_j = index"
        return "vertex = index"

    if g.kind == "product" and g.factors is not None:
        return {"left": one(g.factors[0]), "right": one(g.factors[1]),
                "flat": "left * |V(right)| + right"}
    return {"vertex": one(g)}


def dumps(doc: LabelingDocument) -> str:
    body = {
        "format": FORMAT,
        "graph": describe(doc.graph),
        "naming": _naming(doc.graph),
        "order": doc.order,
        "labels": doc.labels,
        "span": doc.span,
        "valid": doc.valid,
        "origin": doc.origin,
    }
    lines = [f'  "{k}": {json.dumps(body[k], sort_keys=True)}' for k in KEYS]
    return "{\n" + ",\n".join(lines) + "\n}\n"


def loads(text: str) -> LabelingDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from None
    if not isinstance(raw, dict) or raw.get("format") != FORMAT:
        raise DocumentError(f"expected a {FORMAT} document")
    try:
        g = from_descriptor(raw["graph"])
    except (KeyError, GraphError) as exc:
        raise DocumentError(f"bad graph descriptor: {exc}") from None
    order, labels = raw.get("order"), raw.get("labels")
    for name, seq in (("order", order), ("labels", labels)):
        if seq is None:
            continue
        if not isinstance(seq, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in seq):
            raise DocumentError(f"'{name}' must be a list of integers")
        if len(seq) != g.n:
            raise DocumentError(f"'{name}' has {len(seq)} entries, graph has {g.n} vertices")
    if order is not None and sorted(order) != list(range(g.n)):
        raise DocumentError("'order' is not a permutation of the vertices")
    return LabelingDocument(g, order, labels, raw.get("span"), raw.get("valid"), raw.get("origin", ""))


def write_labeling(path, lab: RadioLabeling | LabelingDocument):
    doc = lab if isinstance(lab, LabelingDocument) else LabelingDocument.from_labeling(lab)
    with open(path, "w") as fh:
        fh.write(dumps(doc))


def read_document(path) -> LabelingDocument:
    with open(path) as fh:
        return loads(fh.read())


def labels_array(doc: LabelingDocument) -> np.ndarray:
    if doc.labels is None:
        raise DocumentError("document carries no labels")
    return np.asarray(doc.labels, dtype=np.int64)
