"""Command-line front end: graph file ingestion, analysis commands, and
JSON/text reports.

Graph files carry a header line "n m" followed by m edge lines "u v".
Labels are arbitrary non-negative integers, mapped to dense internal ids
in first-appearance order; all output speaks original labels. Lines
starting with '#' are ignored.

Exit codes: 0 success, 2 parse/input error, 3 precondition violation,
4 oracle size guard.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import blocks as blk
from . import mscss as msc
from . import oracle as orc
from .connectivity import report as connectivity_report
from .errors import GraphInputError, OracleSizeError, PreconditionError
from .generate import random_strongly_connected
from .graphs import DiGraph, is_strongly_connected, scc, induced_subgraph

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_ORACLE_GUARD = 4


def parse_graph_file(path: str) -> tuple[DiGraph, list[int]]:
    """Read a GraphFile; returns the graph and labels[id] -> original label."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise GraphInputError(f"cannot read {path}: {exc}") from exc
    rows = [ln.strip() for ln in lines]
    rows = [ln for ln in rows if ln and not ln.startswith("#")]
    if not rows:
        raise GraphInputError(f"{path}: empty graph file")

    def ints(line: str, count: int) -> list[int]:
        toks = line.split()
        if len(toks) != count:
            raise GraphInputError(f"{path}: expected {count} fields, got {line!r}")
        out = []
        for t in toks:
            if not t.isdigit():
                raise GraphInputError(f"{path}: bad token {t!r} in {line!r}")
            out.append(int(t))
        return out

    n, m = ints(rows[0], 2)
    if len(rows) - 1 != m:
        raise GraphInputError(
            f"{path}: header says m={m} but found {len(rows) - 1} edge lines"
        )
    label_to_id: dict[int, int] = {}
    labels: list[int] = []
    pairs = []
    for row in rows[1:]:
        a, b = ints(row, 2)
        for lab in (a, b):
            if lab not in label_to_id:
                label_to_id[lab] = len(labels)
                labels.append(lab)
        pairs.append((label_to_id[a], label_to_id[b]))
    if len(labels) != n:
        raise GraphInputError(
            f"{path}: header says n={n} but {len(labels)} distinct labels appear"
        )
    return DiGraph(n, pairs), labels


def _relabel_set(vs, labels) -> list[int]:
    return sorted(labels[v] for v in vs)


def _relabel_edges(es, labels) -> list[list[int]]:
    return sorted([labels[u], labels[v]] for u, v in es)


def _relabel_family(family, labels) -> list[list[int]]:
    return sorted(sorted(labels[v] for v in b) for b in family)


def _dispatch_count(g: DiGraph, kind: str) -> int:
    """Separator count driving the auto dispatch rule, summed over SCCs."""
    total = 0
    for cell in scc(g).cells:
        if len(cell) < 2:
            continue
        sub, _ = induced_subgraph(g, cell)
        rep = connectivity_report(sub)
        if kind == "2s":
            total += rep.t_sap
        elif kind == "2e":
            total += rep.t_sb
        else:
            total += rep.t_sap + rep.t_sb
    return total


_BLOCK_ALGOS = {
    ("2d", "dom"): blk.blocks_2d_direct,
    ("2d", "enum"): blk.blocks_2d_combined,
    ("2s", "dom"): blk.blocks_2s_dom,
    ("2s", "enum"): blk.blocks_2s_sap,
    ("2e", "dom"): blk.blocks_2e_dom,
    ("2e", "enum"): blk.blocks_2e_bridge,
}


def compute_blocks(g: DiGraph, kind: str, algo: str):
    """Block family for a kind via the dominator route, the enumeration
    route, or the separator-count dispatch; returns (family, algo_used)."""
    if algo == "auto":
        algo = "enum" if _dispatch_count(g, kind) * g.n < g.m else "dom"
    return _BLOCK_ALGOS[(kind, algo)](g), algo


def cmd_analyze(path: str) -> dict:
    g, labels = parse_graph_file(path)
    t0 = time.perf_counter()
    rep = connectivity_report(g)
    elapsed = time.perf_counter() - t0
    return {
        "command": "analyze",
        "input": {"path": path, "n": g.n, "m": g.m},
        "labels": labels,
        "results": {
            "saps": _relabel_set(rep.saps, labels),
            "bridges": _relabel_edges(rep.bridges, labels),
            "t_sap": rep.t_sap,
            "t_sb": rep.t_sb,
            "is2v": rep.is2v,
            "is2e": rep.is2e,
        },
        "timing": {"seconds": elapsed},
    }


def cmd_blocks(path: str, kind: str, algo: str = "auto") -> dict:
    g, labels = parse_graph_file(path)
    t0 = time.perf_counter()
    family, used = compute_blocks(g, kind, algo)
    elapsed = time.perf_counter() - t0
    return {
        "command": "blocks",
        "input": {"path": path, "n": g.n, "m": g.m},
        "labels": labels,
        "results": {
            "kind": kind,
            "algo": used,
            "blocks": _relabel_family(family, labels),
        },
        "timing": {"seconds": elapsed},
    }


def cmd_blocks_at(path: str, vertex: int, kind: str) -> dict:
    g, labels = parse_graph_file(path)
    label_to_id = {lab: i for i, lab in enumerate(labels)}
    if vertex not in label_to_id:
        raise GraphInputError(f"unknown vertex label {vertex}")
    v = label_to_id[vertex]
    t0 = time.perf_counter()
    if kind == "2d":
        results = {
            "kind": kind,
            "vertex": vertex,
            "blocks": _relabel_family(blk.blocks_2d_at_vertex(g, v), labels),
        }
    else:
        results = {
            "kind": kind,
            "vertex": vertex,
            "block": _relabel_set(blk.block_2e_at_vertex(g, v), labels),
        }
    elapsed = time.perf_counter() - t0
    return {
        "command": "blocks-at",
        "input": {"path": path, "n": g.n, "m": g.m},
        "labels": labels,
        "results": results,
        "timing": {"seconds": elapsed},
    }


_MSCSS_OPS = {
    "saps": msc.mscss_same_saps,
    "2s": msc.mscss_same_2s,
    "2e": msc.mscss_same_2e,
    "2d": msc.mscss_same_2d,
}


def cmd_mscss(path: str, preserve: str) -> dict:
    g, labels = parse_graph_file(path)
    t0 = time.perf_counter()
    sol = _MSCSS_OPS[preserve](g)
    rep = msc.verify_solution(g, sol)
    elapsed = time.perf_counter() - t0
    return {
        "command": "mscss",
        "input": {"path": path, "n": g.n, "m": g.m},
        "labels": labels,
        "results": {
            "preserve": preserve,
            "edges": _relabel_edges(sol.edges, labels),
            "edge_count": sol.edge_count,
            "budget_bound": sol.budget_bound,
            "budget_adjusted": sol.budget_adjusted,
            "feasible": sol.feasible,
            "verify": {
                "strongly_connected": rep.strongly_connected,
                "structure_preserved": rep.structure_preserved,
                "within_budget": rep.within_budget,
            },
        },
        "timing": {"seconds": elapsed},
    }


def cmd_oracle_check(path: str) -> dict:
    g, labels = parse_graph_file(path)
    if g.n > orc.MAX_CLIQUE_N:
        raise OracleSizeError(
            f"oracle-check limited to n <= {orc.MAX_CLIQUE_N}, got {g.n}"
        )
    t0 = time.perf_counter()
    comparisons = {}
    for kind in ("2d", "2s", "2e"):
        want = orc.oracle_blocks(g, kind)
        dom_family, _ = compute_blocks(g, kind, "dom")
        enum_family, _ = compute_blocks(g, kind, "enum")
        comparisons[kind] = {
            "oracle": _relabel_family(want, labels),
            "dom_equal": dom_family == want,
            "enum_equal": enum_family == want,
        }
    connectivity_checked = is_strongly_connected(g) and g.n >= 2
    if connectivity_checked:
        rep = connectivity_report(g)
        comparisons["saps_equal"] = set(rep.saps) == orc.oracle_saps(g)
        comparisons["bridges_equal"] = set(rep.bridges) == orc.oracle_bridges(g)
    elapsed = time.perf_counter() - t0
    all_equal = all(
        c["dom_equal"] and c["enum_equal"]
        for c in (comparisons[k] for k in ("2d", "2s", "2e"))
    ) and comparisons.get("saps_equal", True) and comparisons.get("bridges_equal", True)
    return {
        "command": "oracle-check",
        "input": {"path": path, "n": g.n, "m": g.m},
        "labels": labels,
        "results": {
            "connectivity_checked": connectivity_checked,
            "comparisons": comparisons,
            "all_equal": all_equal,
        },
        "timing": {"seconds": elapsed},
    }


def cmd_gen(n: int, m: int, seed: int, out_path: str) -> dict | None:
    """Write a random fixture; with out_path '-' the graph file itself is
    the output and no report is produced."""
    g = random_strongly_connected(n, m, seed)
    body = [f"# random strongly connected fixture, seed={seed}", f"{g.n} {g.m}"]
    body += [f"{u} {v}" for u, v in g.edges]
    text = "\n".join(body) + "\n"
    if out_path == "-":
        sys.stdout.write(text)
        return None
    with open(out_path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return {
        "command": "gen",
        "results": {"n": g.n, "m": g.m, "seed": seed, "path": out_path},
    }


def _as_text(report: dict) -> str:
    lines = [f"command: {report['command']}"]
    if "input" in report:
        inp = report["input"]
        lines.append(f"input: {inp['path']} (n={inp['n']}, m={inp['m']})")
    for key, value in report.get("results", {}).items():
        if isinstance(value, list) and value and isinstance(value[0], list):
            lines.append(f"{key}:")
            lines.extend(f"  {row}" for row in value)
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def _emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
    else:
        sys.stdout.write(_as_text(report))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="diblocks",
        description="2-blocks, strong articulation points, and sparse "
        "certificates of directed graphs",
    )
    ap.add_argument("--format", choices=("json", "text"), default="json")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("analyze", help="SAPs, strong bridges, 2V/2E flags")
    p.add_argument("path")

    p = sub.add_parser("blocks", help="compute a block family")
    p.add_argument("path")
    p.add_argument("--kind", choices=("2d", "2s", "2e"), required=True)
    p.add_argument("--algo", choices=("dom", "enum", "auto"), default="auto")

    p = sub.add_parser("blocks-at", help="blocks containing one vertex")
    p.add_argument("path")
    p.add_argument("vertex", type=int)
    p.add_argument("--kind", choices=("2d", "2e"), required=True)

    p = sub.add_parser("mscss", help="sparse structure-preserving subgraph")
    p.add_argument("path")
    p.add_argument("--preserve", choices=("saps", "2s", "2e", "2d"), required=True)

    p = sub.add_parser("oracle-check", help="fast algorithms vs brute force")
    p.add_argument("path")

    p = sub.add_parser("gen", help="write a random strongly connected fixture")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="-")
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.cmd == "analyze":
            report = cmd_analyze(args.path)
        elif args.cmd == "blocks":
            report = cmd_blocks(args.path, args.kind, args.algo)
        elif args.cmd == "blocks-at":
            report = cmd_blocks_at(args.path, args.vertex, args.kind)
        elif args.cmd == "mscss":
            report = cmd_mscss(args.path, args.preserve)
        elif args.cmd == "oracle-check":
            report = cmd_oracle_check(args.path)
        else:
            report = cmd_gen(args.n, args.m, args.seed, args.out)
    except OracleSizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ORACLE_GUARD
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except GraphInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if report is not None:
        _emit(report, args.format)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
