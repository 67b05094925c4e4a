#!/usr/bin/env python3
"""Write the orbit graphs and nest graphs as DOT files.

Usage: python scripts/export_graphs.py [output-dir]

Produces one .dot file per graph plus a manifest line on stdout with the
component count of each, so the two-orbit structure is visible without a
renderer.
"""

from __future__ import annotations

import sys
from pathlib import Path

from shidoku.group import (
    direct_product,
    full_group,
    generate_position,
    generate_relabel,
    position_group,
    relabel_group,
)
from shidoku.perm import gen_r, gen_r2, gen_s, gen_t, relabeling
from shidoku.action import named_generators, orbit_graph
from shidoku.graphio import export_nest_graph, export_orbit_graph
from shidoku.nests import h4_nest_graph, s4_nest_graph


def main() -> int:
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("graphs")
    out.mkdir(parents=True, exist_ok=True)

    c123 = generate_relabel([relabeling("(1 2 3)")])
    orbit_cases = {
        "orbits-full": full_group(),
        "orbits-rt-x-S4": direct_product(generate_position([gen_r(), gen_t()]), relabel_group()),
        "orbits-rs-x-c123": direct_product(generate_position([gen_r(), gen_s()]), c123),
        "orbits-st-x-S4": direct_product(generate_position([gen_s(), gen_t()]), relabel_group()),
        "orbits-H4-x-c123": direct_product(position_group(), c123),
        "orbits-H4-only": position_group(),
    }
    for name, group in orbit_cases.items():
        graph = orbit_graph(named_generators(group))
        (out / f"{name}.dot").write_text(export_orbit_graph(graph, name))
        print(f"{name}.dot: {len(graph.nodes)} nodes, components={graph.component_count}")

    transpositions = [(n, relabeling(n)) for n in ("(1 2)", "(2 3)", "(3 4)", "(1 4)")]
    nest_cases = {
        "s4-nests-rst": s4_nest_graph([gen_r(), gen_s(), gen_t()]),
        "s4-nests-st": s4_nest_graph([gen_s(), gen_t()]),
        "s4-nests-rt": s4_nest_graph([gen_r(), gen_t()]),
        "s4-nests-r2st": s4_nest_graph([gen_r2(), gen_s(), gen_t()]),
        "h4-nests-transpositions": h4_nest_graph(transpositions),
        "h4-nests-12-23": h4_nest_graph(transpositions[:2]),
        "h4-nests-c123": h4_nest_graph([("(1 2 3)", relabeling("(1 2 3)"))]),
    }
    for name, graph in nest_cases.items():
        (out / f"{name}.dot").write_text(export_nest_graph(graph, name))
        print(f"{name}.dot: {len(graph.nests)} nests, components={graph.component_count}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
