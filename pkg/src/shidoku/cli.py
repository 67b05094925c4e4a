"""Command-line interface.

Subcommands: enumerate, orbits, burnside, nests, nest-graph, search,
export, verify.  All output is deterministic; exit codes are 0 (success),
1 (verification failure), 2 (usage or parse error).

Group specs are shorthand names (`full`, `trivial`, `H4`, `S4`, `st`,
`rs`, `rt`, `r2st`, `c123`), a product `<position>x<relabel>` of factor
shorthands (e.g. `stxS4`, `r2stxc123`), or a path to a group description
file (`generators:` header, then `pos=<cycles>; rel=<cycles>` lines).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable

from .board import enumerate_all
from .perm import Perm, gen_r, gen_r2, gen_s, gen_t, relabeling
from .group import (
    SymmetryGroup,
    direct_product,
    full_group,
    generate,
    generate_position,
    generate_relabel,
    parse_group_description,
    position_group,
    relabel_group,
    trivial_group,
)
from .action import is_position_symmetry, named_generators, orbit_graph, orbits
from .burnside import burnside_orbit_count, invariance_table
from .graphio import export_nest_graph, export_orbit_graph
from .nests import h4_nest_graph, h4_nests, s4_nest_graph, s4_nests
from .search import parse_pool_file, search_products
from .verify import run_checks


class CliError(Exception):
    """Usage or parse error: exits with status 2."""


_POSITION_FACTORS: dict[str, Callable[[], SymmetryGroup]] = {
    "H4": position_group,
    "st": lambda: generate_position([gen_s(), gen_t()]),
    "rs": lambda: generate_position([gen_r(), gen_s()]),
    "rt": lambda: generate_position([gen_r(), gen_t()]),
    "r2st": lambda: generate_position([gen_r2(), gen_s(), gen_t()]),
}

_RELABEL_FACTORS: dict[str, Callable[[], SymmetryGroup]] = {
    "S4": relabel_group,
    "c123": lambda: generate_relabel([relabeling("(1 2 3)")]),
}

_POSITION_GEN_NAMES: dict[str, Callable[[], Perm]] = {
    "r": gen_r,
    "r2": gen_r2,
    "s": gen_s,
    "t": gen_t,
}


def resolve_group(spec: str) -> SymmetryGroup:
    if spec == "full":
        return full_group()
    if spec == "trivial":
        return trivial_group()
    if spec in _POSITION_FACTORS:
        return _POSITION_FACTORS[spec]()
    if spec in _RELABEL_FACTORS:
        return _RELABEL_FACTORS[spec]()
    if "x" in spec:
        left, _, right = spec.partition("x")
        if left in _POSITION_FACTORS and right in _RELABEL_FACTORS:
            return direct_product(_POSITION_FACTORS[left](), _RELABEL_FACTORS[right]())
    path = Path(spec)
    if path.exists():
        try:
            gens = parse_group_description(path.read_text())
        except ValueError as exc:
            raise CliError(f"{spec}: {exc}") from exc
        for e in gens:
            if not e.pos.is_identity and not is_position_symmetry(e.pos):
                raise CliError(
                    f"{spec}: {e.pos.cycle_notation()} is not a valid position "
                    "symmetry (it breaks some board)"
                )
        return generate(gens)
    known = ["full", "trivial", *_POSITION_FACTORS, *_RELABEL_FACTORS]
    raise CliError(
        f"unknown group spec {spec!r}; use one of {', '.join(known)}, a "
        "<position>x<relabel> product, or a group description file path"
    )


def _parse_relabel_token(token: str) -> Perm:
    """Relabeling cycle token; digits may be packed, e.g. '(123)' == '(1 2 3)'."""
    text = token.strip()
    if "(" in text and " " not in text:
        text = text.replace(")(", ") (")
        text = "".join(
            "(" + " ".join(part) + ")"
            for part in text.replace("(", " ").replace(")", " ").split()
        )
    try:
        return Perm.from_cycles(text, 4)
    except ValueError as exc:
        raise CliError(f"bad relabeling token {token!r}: {exc}") from exc


def _parse_gen_list(text: str, factor: str) -> list[tuple[str, Perm]]:
    tokens = [tok for tok in text.split(",") if tok.strip()]
    named: list[tuple[str, Perm]] = []
    for token in tokens:
        token = token.strip()
        if factor == "s4":
            if token not in _POSITION_GEN_NAMES:
                raise CliError(
                    f"unknown position generator {token!r}; "
                    f"use {', '.join(_POSITION_GEN_NAMES)}"
                )
            named.append((token, _POSITION_GEN_NAMES[token]()))
        else:
            perm = _parse_relabel_token(token)
            named.append((perm.cycle_notation() or "id", perm))
    return named


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def cmd_enumerate(args) -> int:
    boards = enumerate_all()
    _emit(args, {"boards": [b.text for b in boards]}, [b.text for b in boards])
    return 0


def cmd_orbits(args) -> int:
    g = resolve_group(args.group)
    partition = orbits(g)
    lines = [
        f"block {k}: size {len(block)}, min {block[0].text}"
        for k, block in enumerate(partition.blocks, start=1)
    ]
    payload = {
        "blocks": [
            {"size": len(block), "min": block[0].text} for block in partition.blocks
        ]
    }
    _emit(args, payload, lines)
    return 0


def cmd_burnside(args) -> int:
    g = resolve_group(args.group)
    projection = generate_position(g.position_parts())
    table = invariance_table(projection)
    lines = []
    rows_payload = []
    for k, (cls, count) in enumerate(table.rows, start=1):
        rep = cls.representative.pos.cycle_notation() or "()"
        lines.append(
            f"class {k}: size {cls.size}, rep {rep}, invariant {count // 24}*4! ({count})"
        )
        rows_payload.append({"size": cls.size, "rep": rep, "invariant": count})
    burnside = burnside_orbit_count(g)
    direct = orbits(g).block_count
    lines += [
        f"group order: {g.order}",
        f"orbit count (burnside): {burnside}",
        f"orbit count (direct): {direct}",
    ]
    payload = {
        "classes": rows_payload,
        "order": g.order,
        "orbits_burnside": burnside,
        "orbits_direct": direct,
    }
    _emit(args, payload, lines)
    return 0


def cmd_nests(args) -> int:
    nests = s4_nests() if args.factor == "s4" else h4_nests()
    lines = [
        f"nest {n.label}: size {n.size}, rep {n.representative.text}" for n in nests
    ]
    payload = {
        "nests": [
            {"label": n.label, "size": n.size, "rep": n.representative.text}
            for n in nests
        ]
    }
    _emit(args, payload, lines)
    return 0


def cmd_nest_graph(args) -> int:
    named = _parse_gen_list(args.gens, args.factor)
    if args.factor == "s4":
        graph = s4_nest_graph(named)
    else:
        graph = h4_nest_graph(named)
    if args.dot:
        name = f"{args.factor}-nests[{','.join(n for n, _ in named)}]"
        Path(args.dot).write_text(export_nest_graph(graph, name))
    components = graph.components()
    payload = {"components": len(components), "blocks": components}
    _emit(args, payload, [f"components: {len(components)}"])
    return 0


def cmd_search(args) -> int:
    try:
        position_pool = (
            parse_pool_file(Path(args.position_pool).read_text(), 16)
            if args.position_pool
            else None
        )
        relabel_pool = (
            parse_pool_file(Path(args.relabel_pool).read_text(), 4)
            if args.relabel_pool
            else None
        )
    except (OSError, ValueError) as exc:
        raise CliError(str(exc)) from exc
    results = search_products(position_pool, relabel_pool)
    if args.minimal_only:
        results = tuple(res for res in results if res.minimal)
    lines = []
    payload_rows = []
    for res in results:
        pos = ",".join(res.position_names) or "-"
        rel = ",".join(res.relabel_names) or "-"
        lines.append(
            f"pos={pos} rel={rel} order={res.order} orbits={res.orbit_count} "
            f"complete={'yes' if res.complete else 'no'} "
            f"minimal={'yes' if res.minimal else 'no'}"
        )
        payload_rows.append(
            {
                "position_gens": list(res.position_names),
                "relabel_gens": list(res.relabel_names),
                "order": res.order,
                "orbits": res.orbit_count,
                "complete": res.complete,
                "minimal": res.minimal,
            }
        )
    _emit(args, {"results": payload_rows}, lines)
    return 0


def cmd_export(args) -> int:
    g = resolve_group(args.group)
    named = named_generators(g)
    graph = orbit_graph(named)
    name = f"orbits[{','.join(n for n, _ in named)}]"
    Path(args.dot).write_text(export_orbit_graph(graph, name))
    return 0


def cmd_verify(args) -> int:
    return 0 if run_checks(print) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shidoku",
        description="Enumerate Shidoku boards and analyze their symmetry groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str, formats: bool = True):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        if formats:
            p.add_argument(
                "--format", choices=("text", "json"), default="text", help="output format"
            )
        return p

    add("enumerate", cmd_enumerate, "print all 288 boards in canonical order")

    p = add("orbits", cmd_orbits, "print the orbit report for a group")
    p.add_argument("--group", required=True, help="group spec (see --help)")

    p = add("burnside", cmd_burnside, "print the invariance table and orbit count")
    p.add_argument("--group", required=True, help="group spec (see --help)")

    p = add("nests", cmd_nests, "print the nest report for one factor")
    p.add_argument("--factor", choices=("s4", "h4"), required=True)

    p = add("nest-graph", cmd_nest_graph, "component count of an induced nest graph")
    p.add_argument("--factor", choices=("s4", "h4"), required=True)
    p.add_argument(
        "--gens",
        default="",
        help="comma-separated generators: r,r2,s,t for s4; cycles like (12),(123) for h4",
    )
    p.add_argument("--dot", help="also write the graph as DOT to this path")

    p = add("search", cmd_search, "search product-form subgroups for complete groups")
    p.add_argument("--position-pool", help="pool file of position generators")
    p.add_argument("--relabel-pool", help="pool file of relabeling generators")
    p.add_argument("--minimal-only", action="store_true", help="only order-192 complete results")

    p = add("export", cmd_export, "write a group's orbit graph as DOT", formats=False)
    p.add_argument("--group", required=True, help="group spec (see --help)")
    p.add_argument("--dot", required=True, help="output path")

    add("verify", cmd_verify, "run the full reproduction suite", formats=False)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        # downstream consumer (e.g. head) closed the pipe; not an error
        sys.stderr.close()
        return 0


if __name__ == "__main__":
    sys.exit(main())
