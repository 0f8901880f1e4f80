"""JSON wire formats and DOT export.

Formats:
  digraph       {"order": n, "arcs": [[u, v], ...], "labels": {"0": "...", ...}?}
  coloring      {"k": k, "assignment": [c_0, ..., c_{n-1}]}
  factorization {"m": m, "factors": [[[u, v], ...], ...]}
  detachment    {"map": [t_0, t_1, ...]}

Arcs are always emitted in the canonical (tail, head) order, so export
followed by import reproduces a digraph byte-identically.
"""

from __future__ import annotations

import colorsys
import json
from typing import Any, Sequence

from .digraph import Digraph
from .coloring import Coloring, ColorScheme
from .transforms import DetachmentMap, Factorization


def digraph_to_obj(d: Digraph) -> dict[str, Any]:
    obj: dict[str, Any] = {"order": d.order, "arcs": [list(a) for a in d.arc_list]}
    if d.labels:
        obj["labels"] = {str(v): s for v, s in d.labels}
    return obj


def digraph_from_obj(obj: dict[str, Any]) -> Digraph:
    order = int(obj["order"])
    arcs = [(int(u), int(v)) for (u, v) in obj["arcs"]]
    labels = None
    if "labels" in obj and obj["labels"]:
        labels = {int(k): str(s) for k, s in obj["labels"].items()}
    return Digraph.of(order, arcs, labels)


def coloring_to_obj(c: Coloring) -> dict[str, Any]:
    return {"k": c.k, "assignment": list(c.assignment)}


def coloring_from_obj(obj: dict[str, Any]) -> Coloring:
    return Coloring(int(obj["k"]), tuple(int(x) for x in obj["assignment"]))


def factorization_to_obj(f: Factorization) -> dict[str, Any]:
    return {"m": f.m, "factors": [[list(a) for a in h.arc_list] for h in f.factors]}


def factorization_from_obj(obj: dict[str, Any]) -> Factorization:
    m = int(obj["m"])
    factors = tuple(
        Digraph.of(m, [(int(u), int(v)) for (u, v) in arcs]) for arcs in obj["factors"]
    )
    return Factorization(m, factors)


def detachment_to_obj(dm: DetachmentMap) -> dict[str, Any]:
    return {"map": list(dm.mapping)}


def detachment_from_obj(obj: dict[str, Any], source: Digraph, target: Digraph) -> DetachmentMap:
    return DetachmentMap(source, target, tuple(int(x) for x in obj["map"]))


def dumps(obj: dict[str, Any]) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def loads(text: str) -> dict[str, Any]:
    return json.loads(text)


# ---------------------------------------------------------------------------
# DOT export


def _fill_for(color: int, k: int) -> str:
    """Stable pastel fill for color index 1..k."""
    hue = ((color - 1) * 0.61803398875) % 1.0
    r, g, b = colorsys.hls_to_rgb(hue, 0.82, 0.55)
    return "#{:02x}{:02x}{:02x}".format(int(r * 255), int(g * 255), int(b * 255))


def digraph_to_dot(
    d: Digraph,
    coloring: Coloring | None = None,
    blocks: Sequence[int] | None = None,
    scheme: ColorScheme | None = None,
    merge_symmetric: bool = True,
    name: str = "G",
) -> str:
    """Render as Graphviz DOT.

    With ``blocks`` (one block id per vertex) the product blocks become
    clusters.  Symmetric arc pairs collapse to one edge with dir=both.
    With a coloring, nodes are filled by their color; with a scheme, node
    labels show the decoded composite pair (block, position).
    """
    lines = [f"digraph {name} {{"]
    if blocks is not None:
        if len(blocks) != d.order:
            raise ValueError("blocks must assign one block per vertex")
        lines.append("  compound=true;")

    def node_line(v: int, indent: str) -> str:
        attrs = []
        label = d.label_map.get(v)
        if coloring is not None and scheme is not None:
            i, l = scheme.pair(coloring.color(v))
            label = label or f"{v} ({i},{l})"
        if label:
            attrs.append(f'label="{label}"')
        if coloring is not None:
            attrs.append('style=filled')
            attrs.append(f'fillcolor="{_fill_for(coloring.color(v), coloring.k)}"')
        body = f"{v}" + (f" [{', '.join(attrs)}]" if attrs else "")
        return f"{indent}{body};"

    if blocks is not None:
        for u in sorted(set(blocks)):
            lines.append(f"  subgraph cluster_{u} {{")
            lines.append(f'    label="block {u}";')
            for v in range(d.order):
                if blocks[v] == u:
                    lines.append(node_line(v, "    "))
            lines.append("  }")
    else:
        for v in range(d.order):
            lines.append(node_line(v, "  "))

    emitted: set[tuple[int, int]] = set()
    for (u, v) in d.arc_list:
        if (u, v) in emitted:
            continue
        if merge_symmetric and d.has_arc(v, u):
            emitted.add((u, v))
            emitted.add((v, u))
            a, b = min(u, v), max(u, v)
            lines.append(f"  {a} -> {b} [dir=both];")
        else:
            emitted.add((u, v))
            lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
