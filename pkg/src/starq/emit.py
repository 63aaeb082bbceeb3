"""Deterministic DOT, JSON-ready, and aligned-text renderings.

Output order is always fixed by the structural sort keys of the payload,
never by hashing or insertion history, so identical inputs give
byte-identical output.
"""

from __future__ import annotations

from typing import Dict, List

from .classify import Family
from .decomp import JHRow
from .orbits import OrbitGraph
from .weights import Comparison, Weight


def orbit_dot(graph: OrbitGraph) -> str:
    """Orbit graph in DOT form; arrows point from larger to smaller weight.

    With rank direction top-to-bottom this reproduces the usual diagram
    layout: the partial order increases upward.  Fixed-point edges render
    as dotted self-loops, incomparable neighbours as dashed lines.
    """
    lines = ["digraph orbit {", "  rankdir=TB;"]
    for v in graph.vertices:
        lines.append(f'  "{v}";')
    for e in graph.edges:
        attrs = [f'label="{e.label}"']
        if e.relation is Comparison.EQUAL:
            attrs.append("style=dotted")
            attrs.append("dir=none")
        elif e.relation is Comparison.INCOMPARABLE:
            attrs.append("style=dashed")
            attrs.append("dir=none")
        lines.append(f'  "{e.source}" -> "{e.target}" [{", ".join(attrs)}];')
    if graph.truncated:
        lines.append('  truncated [shape=plaintext, label="(truncated)"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def orbit_json(graph: OrbitGraph) -> Dict:
    return {
        "vertices": [str(v) for v in graph.vertices],
        "edges": [
            {
                "source": str(e.source),
                "label": e.label,
                "target": str(e.target),
                "relation": e.relation.value,
            }
            for e in graph.edges
        ],
        "truncated": graph.truncated,
    }


def family_dot(fam: Family, dashed: bool = False) -> str:
    """Family chain in DOT form; bidirectional arrows get two heads."""
    style = ', style=dashed' if dashed else ""
    lines = [f'digraph "{fam.family_id}" {{', "  rankdir=LR;"]
    for m in fam.members:
        lines.append(f'  "{m.weight}";')
    for a in fam.arrows:
        direction = ", dir=both" if a.bidirectional else ""
        lines.append(
            f'  "{a.source}" -> "{a.target}" [label="{a.label}"{direction}{style}];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def family_json(fam: Family) -> Dict:
    n = fam.members[0].weight.n
    return {
        "family_id": fam.family_id,
        "kind": fam.kind,
        "anchor": str(fam.anchor),
        "regularities": list(fam.regularities),
        "members": [
            {
                "type": m.type.render(n, gl=False),
                "word": list(m.word),
                "weight": str(m.weight),
            }
            for m in fam.members
        ],
        "arrows": [
            {
                "source": str(a.source),
                "label": a.label,
                "target": str(a.target),
                "bidirectional": a.bidirectional,
            }
            for a in fam.arrows
        ],
    }


def jh_row_json(row: JHRow) -> Dict:
    return {
        "k": row.k,
        "module": str(row.module),
        "entries": [
            {"weight": str(e.weight), "multiplicity": e.multiplicity}
            for e in row.entries
        ],
    }


def jh_table_text(rows: List[JHRow]) -> str:
    """Aligned table: one row per module, cells with multiplicity superscripts."""
    rendered = []
    for row in rows:
        cells = "  ".join(f"{e.weight}^{e.multiplicity}" for e in row.entries)
        rendered.append((f"L{row.module}", cells))
    width = max(len(label) for label, _ in rendered)
    lines = [f"{label.ljust(width)} | {cells}" for label, cells in rendered]
    return "\n".join(lines) + "\n"
