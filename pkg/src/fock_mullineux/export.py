"""Render crystal graphs as Graphviz DOT or JSON text."""

from __future__ import annotations

import json

from .crystal import CrystalGraph
from .partitions import format_partition


def emit_dot(graph: CrystalGraph, name: str = "crystal") -> str:
    """DOT digraph; vertices keyed by exponent-form text, edges labeled by operator.

    Render with e.g. ``dot -Tpng -O crystal.gv``.
    """
    lines = [f"digraph {name} {{", "  rankdir=TB;"]
    for v in graph.vertices:
        text = format_partition(v)
        lines.append(f'  "{text}" [label="{text}"];')
    for src, op, dst in graph.edges:
        lines.append(f'  "{format_partition(src)}" -> "{format_partition(dst)}" [label="{op.label()}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_json(graph: CrystalGraph) -> str:
    return json.dumps(graph.to_json(), indent=2) + "\n"
