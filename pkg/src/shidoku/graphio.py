"""DOT serialization for orbit graphs and nest graphs.

Output is byte-stable for identical inputs: nodes and edges are emitted
in a fixed order, one statement per line.  Figures are reproduced
structurally (nodes, labeled edges, components); layout is left to the
renderer.  Involution generators get arrowless edges (dir=none).
"""

from __future__ import annotations

import re

from .action import OrbitGraph
from .nests import NestGraph
from .unionfind import UnionFind


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_orbit_graph(graph: OrbitGraph, name: str = "orbits") -> str:
    """DOT text with one node per board (id = board string) and one edge
    per (board, generator) application, self-loops included."""
    lines = [f"digraph {_quote(name)} {{"]
    for b in sorted(graph.nodes):
        lines.append(f"  {_quote(b.text)};")
    for e in sorted(graph.edges, key=lambda e: (e.src, e.label, e.dst)):
        attrs = [f"label={_quote(e.label)}"]
        if not e.directed:
            attrs.append("dir=none")
        lines.append(f"  {_quote(e.src.text)} -> {_quote(e.dst.text)} [{', '.join(attrs)}];")
    lines.append("}")
    return "".join(line + "\n" for line in lines)


def export_nest_graph(graph: NestGraph, name: str = "nests") -> str:
    """DOT text with nest labels as node ids; edges carry the generator
    label and, when present, the correcting auxiliary symmetry."""
    lines = [f"digraph {_quote(name)} {{"]
    for n in graph.nests:
        lines.append(f"  {_quote(n.label)};")
    for e in sorted(graph.edges, key=lambda e: (e.src, e.label, e.dst)):
        attrs = [f"label={_quote(e.label)}"]
        if e.aux is not None:
            attrs.append(f"aux={_quote(e.aux.cycle_notation())}")
        if not e.directed:
            attrs.append("dir=none")
        lines.append(f"  {_quote(e.src)} -> {_quote(e.dst)} [{', '.join(attrs)}];")
    lines.append("}")
    return "".join(line + "\n" for line in lines)


_NODE_RE = re.compile(r'^\s*"((?:[^"\\]|\\.)*)";$')
_EDGE_RE = re.compile(r'^\s*"((?:[^"\\]|\\.)*)" -> "((?:[^"\\]|\\.)*)" \[(.*)\];$')


def _unquote(s: str) -> str:
    return s.replace('\\"', '"').replace("\\\\", "\\")


def parse_dot(text: str) -> tuple[list[str], list[tuple[str, str]]]:
    """Parse DOT text produced by this module back into node ids and edge
    endpoint pairs.  Raises ValueError on anything outside that subset."""
    lines = text.split("\n")
    stripped = [line for line in lines if line.strip()]
    if not stripped or not stripped[0].startswith("digraph ") or stripped[-1] != "}":
        raise ValueError("not a digraph document produced by this module")
    nodes: list[str] = []
    edges: list[tuple[str, str]] = []
    for line in stripped[1:-1]:
        m = _NODE_RE.match(line)
        if m:
            nodes.append(_unquote(m.group(1)))
            continue
        m = _EDGE_RE.match(line)
        if m:
            edges.append((_unquote(m.group(1)), _unquote(m.group(2))))
            continue
        raise ValueError(f"unparseable DOT line: {line!r}")
    known = set(nodes)
    for u, v in edges:
        if u not in known or v not in known:
            raise ValueError(f"edge endpoint not declared as node: {(u, v)!r}")
    return nodes, edges


def dot_component_count(text: str) -> int:
    """Weakly connected component count of a parsed DOT document."""
    nodes, edges = parse_dot(text)
    uf = UnionFind(nodes)
    for u, v in edges:
        uf.union(u, v)
    return len(uf.blocks())
