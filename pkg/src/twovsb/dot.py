from __future__ import annotations

from typing import Iterable, Optional

from .graph import Arc, Digraph

HIGHLIGHT_STYLE = 'color="red", penwidth=2.0'


def to_dot(g: Digraph, highlight: Optional[Iterable[Arc]] = None, name: str = "G") -> str:
    """Render ``g`` as DOT; arcs in ``highlight`` are drawn thick and red.

    Output depends only on the graph and the highlight set, so it is byte-stable.
    """
    marked = set(highlight or ())
    lines = [f"digraph {name} {{"]
    lines.extend(f"  {v};" for v in g.vertices)
    for tail, head in g.arcs:
        style = f" [{HIGHLIGHT_STYLE}]" if (tail, head) in marked else ""
        lines.append(f"  {tail} -> {head}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"
