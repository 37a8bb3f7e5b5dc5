"""Deterministic layout and export of belief graphs.

The layout is a seeded Fruchterman-Reingold simulation: repulsion k^2/d
between all node pairs, attraction w*d^2/k along edges, displacement capped
by a linearly cooling temperature. Initial positions come from per-node
hashes, so the whole (graph, seed, iterations) triple maps to one exact set
of coordinates.

Exports are byte-deterministic: GEXF 1.2 with sorted nodes/edges and fixed
float formatting, and a canonical JSON view document (sorted keys, floats
rounded to six decimals).
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass
from xml.sax.saxutils import quoteattr

import numpy as np

from .landscape import (NEUTRAL, SHARED, USER_A, USER_B, BeliefGraph,
                        ViewSpec)

DEFAULT_ITERATIONS = 500

# overlay palette per the red/blue/green convention (USER_A = first user)
COLOR_RGB = {
    USER_A: (227, 26, 28),
    USER_B: (31, 120, 180),
    SHARED: (51, 160, 44),
    NEUTRAL: (153, 153, 153),
}


@dataclass
class LayoutResult:
    positions: dict[str, tuple[float, float]]
    iterations: int
    seed: int


def _initial_positions(keys: list[str], seed: int,
                       radius: float) -> np.ndarray:
    """Place nodes on a disc from per-key hashes (stable across runs)."""
    coords = np.empty((len(keys), 2), dtype=np.float64)
    for i, key in enumerate(keys):
        digest = hashlib.sha256(f"{seed}:{key}".encode("utf-8")).digest()
        angle_frac = int.from_bytes(digest[:8], "big") / 2 ** 64
        radius_frac = int.from_bytes(digest[8:16], "big") / 2 ** 64
        r = radius * math.sqrt(radius_frac)
        theta = 2 * math.pi * angle_frac
        coords[i, 0] = r * math.cos(theta)
        coords[i, 1] = r * math.sin(theta)
    return coords


def layout(graph: BeliefGraph, seed: int = 0,
           iterations: int = DEFAULT_ITERATIONS) -> LayoutResult:
    """Seeded force-directed layout; identical inputs give identical
    positions."""
    if iterations < 0:
        raise ValueError("iterations must be >= 0")
    keys = sorted(graph.nodes)
    n = len(keys)
    if n == 0:
        return LayoutResult(positions={}, iterations=iterations, seed=seed)
    size = 10.0 * math.sqrt(n)
    pos = _initial_positions(keys, seed, size / 2)
    if n > 1 and iterations > 0:
        index = {k: i for i, k in enumerate(keys)}
        if graph.edges:
            src = np.array([index[a] for a, _, _ in graph.edges])
            dst = np.array([index[b] for _, b, _ in graph.edges])
            weight = np.array([w for _, _, w in graph.edges],
                              dtype=np.float64)
        else:
            src = dst = np.empty(0, dtype=int)
            weight = np.empty(0, dtype=np.float64)
        k = size / math.sqrt(n)
        t0 = size / 10.0
        for step in range(iterations):
            delta = pos[:, None, :] - pos[None, :, :]
            dist = np.sqrt((delta ** 2).sum(axis=2))
            np.fill_diagonal(dist, 1.0)
            dist = np.maximum(dist, 1e-9)
            repulse = (k * k) / dist
            np.fill_diagonal(repulse, 0.0)
            disp = (delta / dist[:, :, None] * repulse[:, :, None]).sum(axis=1)
            if len(src):
                evec = pos[src] - pos[dst]
                edist = np.maximum(np.sqrt((evec ** 2).sum(axis=1)), 1e-9)
                force = weight * edist * edist / k
                pull = evec / edist[:, None] * force[:, None]
                np.subtract.at(disp, src, pull)
                np.add.at(disp, dst, pull)
            length = np.maximum(np.sqrt((disp ** 2).sum(axis=1)), 1e-9)
            t = t0 * (iterations - step) / iterations
            pos += disp / length[:, None] * np.minimum(length, t)[:, None]
    positions = {key: (float(pos[i, 0]), float(pos[i, 1]))
                 for i, key in enumerate(keys)}
    return LayoutResult(positions=positions, iterations=iterations, seed=seed)


def _fmt(x: float) -> str:
    return f"{x:.6f}"


def export_gexf(graph: BeliefGraph,
                layout_result: LayoutResult | None = None) -> bytes:
    """Serialize to GEXF 1.2 (undirected, static); nodes and edges are
    ordered by key so output is byte-stable."""
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<gexf xmlns="http://www.gexf.net/1.2draft"'
        ' xmlns:viz="http://www.gexf.net/1.2draft/viz" version="1.2">',
        '  <graph mode="static" defaultedgetype="undirected">',
        '    <attributes class="node">',
        '      <attribute id="0" title="frequency" type="integer"/>',
        '      <attribute id="1" title="displaytext" type="string"/>',
        '    </attributes>',
        '    <nodes>',
    ]
    for key in sorted(graph.nodes):
        stmt = graph.nodes[key]
        label = graph.labels.get(key, stmt.display_text)
        lines.append(f'      <node id={quoteattr(key)}'
                     f' label={quoteattr(label)}>')
        lines.append('        <attvalues>')
        lines.append(f'          <attvalue for="0"'
                     f' value="{stmt.frequency}"/>')
        lines.append(f'          <attvalue for="1"'
                     f' value={quoteattr(stmt.display_text)}/>')
        lines.append('        </attvalues>')
        if graph.colors is not None:
            r, g, b = COLOR_RGB[graph.colors.get(key, NEUTRAL)]
            lines.append(f'        <viz:color r="{r}" g="{g}" b="{b}"/>')
        if layout_result is not None:
            x, y = layout_result.positions[key]
            lines.append(f'        <viz:position x="{_fmt(x)}"'
                         f' y="{_fmt(y)}" z="0.000000"/>')
        lines.append('      </node>')
    lines.append('    </nodes>')
    lines.append('    <edges>')
    for i, (a, b, w) in enumerate(sorted(graph.edges)):
        lines.append(f'      <edge id="{i}" source={quoteattr(a)}'
                     f' target={quoteattr(b)} weight="{w}"/>')
    lines.append('    </edges>')
    lines.append('  </graph>')
    lines.append('</gexf>')
    return ("\n".join(lines) + "\n").encode("utf-8")


def _color_name(graph: BeliefGraph, key: str) -> str | None:
    if graph.colors is None:
        return None
    return graph.colors.get(key, NEUTRAL)


def export_view_json(graph: BeliefGraph,
                     layout_result: LayoutResult | None,
                     view: ViewSpec) -> bytes:
    """Canonical JSON for one rendered view: nodes with positions, edges
    with weights, and the view parameters under "meta"."""
    nodes = []
    for key in sorted(graph.nodes):
        stmt = graph.nodes[key]
        if layout_result is not None:
            x, y = layout_result.positions[key]
        else:
            x = y = 0.0
        nodes.append({
            "id": key,
            "label": graph.labels.get(key, stmt.display_text),
            "x": round(x, 6),
            "y": round(y, 6),
            "color": _color_name(graph, key),
            "frequency": stmt.frequency,
            "displayText": stmt.display_text,
        })
    edges = [{"source": a, "target": b, "weight": w}
             for a, b, w in sorted(graph.edges)]
    meta = {
        "kind": view.kind,
        "role": view.role,
        "sampleFraction": round(view.sample_fraction, 6),
        "seed": view.seed,
        "causeQuery": view.cause_query,
        "userA": view.user_a,
        "userB": view.user_b,
        "minWeight": view.min_weight,
        "nodeCount": len(nodes),
        "edgeCount": len(edges),
    }
    doc = {"nodes": nodes, "edges": edges, "meta": meta}
    return (json.dumps(doc, sort_keys=True, separators=(",", ":"),
                       ensure_ascii=True) + "\n").encode("utf-8")


def parse_view_json(data: bytes) -> dict:
    return json.loads(data.decode("utf-8"))


__all__ = [
    "COLOR_RGB",
    "DEFAULT_ITERATIONS",
    "LayoutResult",
    "export_gexf",
    "export_view_json",
    "layout",
    "parse_view_json",
]
