"""File formats: canonical JSON for trees and matrices, DOT export.

The tree format is ``{"vertices": [{"id", "multiplicity", "cyclic"}, ...]}``
with edges implicit in the cyclic lists.  Canonical printing rotates every
cyclic list to start at its smallest edge and orders vertices by those
rotated lists, so equal trees print byte-identically.
"""

from __future__ import annotations

import json
from typing import Sequence

from .ribbon import BrauerTree, validate


def tree_from_obj(obj) -> BrauerTree:
    if not isinstance(obj, dict) or "vertices" not in obj:
        raise ValueError('expected an object with a "vertices" list')
    raw = []
    for entry in obj["vertices"]:
        raw.append(
            (
                str(entry["id"]),
                int(entry.get("multiplicity", 1)),
                [int(e) for e in entry["cyclic"]],
            )
        )
    return validate(raw)


def tree_to_obj(t: BrauerTree) -> dict:
    def rotated(cyc):
        k = cyc.index(min(cyc))
        return list(cyc[k:] + cyc[:k])

    entries = sorted(
        (
            {"id": v.id, "multiplicity": v.multiplicity, "cyclic": rotated(v.cyclic)}
            for v in t.vertices
        ),
        key=lambda e: (e["cyclic"], e["id"]),
    )
    return {"vertices": entries}


def loads_tree(text: str) -> BrauerTree:
    return tree_from_obj(json.loads(text))


def dumps_tree(t: BrauerTree) -> str:
    return json.dumps(tree_to_obj(t), indent=2) + "\n"


def loads_matrix(text: str) -> list[list[int]]:
    obj = json.loads(text)
    if not isinstance(obj, list) or not all(isinstance(r, list) for r in obj):
        raise ValueError("expected a JSON array of arrays of integers")
    return [[int(x) for x in row] for row in obj]


def dumps_matrix(mat: Sequence[Sequence[int]]) -> str:
    return json.dumps([list(row) for row in mat]) + "\n"


def tree_to_dot(t: BrauerTree) -> str:
    """Graphviz rendering: doubled circle and multiplicity badge for the
    exceptional vertex; cyclic orders as comments since DOT cannot pin
    rotation."""
    lines = ["graph brauer_tree {", "  node [shape=circle];"]
    for v in t.vertices:
        attrs = f'label="{v.id}"'
        if v.multiplicity > 1:
            attrs = f'label="{v.id}\\nm={v.multiplicity}", peripheries=2'
        lines.append(f'  "{v.id}" [{attrs}];')
        lines.append(f"  // cyclic order at {v.id}: {','.join(map(str, v.cyclic))}")
    for e in t.edges:
        a, b = t.ends[e]
        lines.append(f'  "{a}" -- "{b}" [label="{e}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
