"""Command-line front end: ``fslab <subcommand> ...``.

Graph arguments accept a family spec ``name:n[:k|:t]`` (``path:5``,
``dandelion:6:4``, ``complete-minus-matching:6:3``), the bare names
``theta0`` and ``theta1``, ``complete-bipartite:a:b``, a compact code
``n:hex`` or the path of a file holding an edge list or a compact code.

Exit codes: 0 success (claims pass or are vacuous), 1 counterexample found,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from importlib import resources
from pathlib import Path

from fslab import bench, fs, graphs, invariants
from fslab.graphs import Family, FamilySpec, Graph

FAMILY_HELP = (
    "graph: family spec name:n[:k|:t] with name in "
    + ", ".join(f.value for f in Family)
    + " (k for lollipop/dandelion, t for complete-minus-matching); theta0; theta1; "
    "complete-bipartite:a:b; compact n:hex; or a file with an edge list"
)
_COMPACT = re.compile(r"^\d+:[0-9a-fA-F]*$")


class InputError(Exception):
    pass


def parse_graph(text: str) -> Graph:
    text = text.strip()
    path = Path(text)
    if path.is_file():
        body = path.read_text(encoding="utf-8").strip()
        try:
            return graphs.from_compact(body) if _COMPACT.match(body) else graphs.from_edge_list(body)
        except ValueError as exc:
            raise InputError(f"{text}: {exc}") from exc
    try:
        if _COMPACT.match(text):
            return graphs.from_compact(text)
        name, *nums = text.split(":")
        if name in ("theta0", "theta1") and not nums:
            return graphs.theta0() if name == "theta0" else graphs.theta1()
        values = [int(v) for v in nums]
        if name == "complete-bipartite":
            if len(values) != 2 or min(values) < 1:
                raise ValueError("complete-bipartite needs two positive part sizes")
            return graphs.complete_bipartite(*values)
        kind = Family(name)
        if not values or len(values) > 2:
            raise ValueError("expected name:n or name:n:param")
        extra = values[1] if len(values) == 2 else None
        if kind is Family.COMPLETE_MINUS_MATCHING:
            spec = FamilySpec(kind, values[0], t=extra)
        else:
            spec = FamilySpec(kind, values[0], k=extra)
        return graphs.generate(spec)
    except ValueError as exc:
        raise InputError(f"cannot parse graph {text!r}: {exc}") from exc


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _default_format() -> str:
    return "text" if sys.stdout.isatty() else "json"


def _table(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows if len(rows) != 1 else rows[0], indent=2, sort_keys=True) + "\n"
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in row.items()})
    return buf.getvalue()


# ---------------------------------------------------------------------------
# subcommands


def cmd_components(args) -> int:
    x, y = parse_graph(args.x), parse_graph(args.y)
    if x.n != y.n:
        raise InputError(f"X and Y have different orders ({x.n} vs {y.n})")
    if x.n > fs.IMPLICIT_MAX or (args.kappa and x.n > fs.EXPLICIT_MAX):
        raise InputError("graph order exceeds the supported size")
    inst = fs.FsInstance(x, y)
    report = fs.components(inst)
    if args.kappa:
        report.per_component_kappa = fs.component_kappas(inst, report)
    if args.invariants:
        report.labels = invariants.component_labels(x, y, report.component_of)
    fmt = args.format or _default_format()
    data = report.to_json()
    if fmt == "text":
        lines = [f"FS({args.x}, {args.y}): {x.n}! = {sum(report.sizes)} vertices",
                 f"components: {report.count}",
                 f"sizes: {report.sizes}"]
        if report.per_component_kappa is not None:
            lines.append(f"kappa per component: {report.per_component_kappa}")
        for key, values in (report.labels or {}).items():
            lines.append(f"{key}: {values}")
        _emit("\n".join(lines) + "\n", args.output)
    elif fmt == "json":
        _emit(json.dumps(data, indent=2, sort_keys=True) + "\n", args.output)
    else:
        rows = [
            {"component": c, "size": size,
             "kappa": None if report.per_component_kappa is None else report.per_component_kappa[c]}
            for c, size in enumerate(report.component_sizes)
        ]
        for key, values in (report.labels or {}).items():
            for row, value in zip(rows, values):
                row[key] = value
        _emit(_table(rows, "csv"), args.output)
    return 0


def cmd_kappa(args) -> int:
    g = parse_graph(args.g)
    k = graphs.kappa(g)
    cut = graphs.min_vertex_cut(g) if k < g.n - 1 else None
    fmt = args.format or _default_format()
    if fmt == "text":
        line = f"kappa = {k}"
        if cut is not None:
            line += f"\nminimum cut: {' '.join(map(str, cut))}"
        _emit(line + "\n", args.output)
    else:
        _emit(_table([{"n": g.n, "kappa": k, "cut": cut}], fmt), args.output)
    return 0


def _suite_path(name: str) -> Path:
    path = Path(name)
    if path.is_file():
        return path
    bundled = resources.files("fslab") / "suites" / (name if name.endswith(".json") else name + ".json")
    if bundled.is_file():
        return Path(str(bundled))
    raise InputError(f"no config file or bundled suite named {name!r}")


def cmd_check(args) -> int:
    try:
        config = bench.load_config(_suite_path(args.config))
    except bench.ConfigError as exc:
        raise InputError(str(exc)) from exc
    if args.threads is not None:
        config.parallelism = args.threads
    halt = not args.collect_all
    config.halt_on_counterexample = config.halt_on_counterexample and halt
    fmt = args.format or _default_format()
    progress = (lambda r: print(r.summary_line(), flush=True)) if fmt == "text" else None
    try:
        results = bench.run_suite(config, progress=progress)
    except bench.ConfigError as exc:
        raise InputError(str(exc)) from exc
    data = bench.report(results, name=config.name, timings=not args.no_timings)
    text = json.dumps(data, indent=2, sort_keys=True) + "\n"
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    if fmt == "json" and not args.output:
        sys.stdout.write(text)
    elif fmt == "csv":
        rows = [{k: v for k, v in r.to_json(not args.no_timings).items() if k != "statement"} for r in results]
        sys.stdout.write(_table(rows, "csv") if rows else "")
    elif fmt == "text":
        s = data["summary"]
        print(f"{len(results)} checks: {s['AllPass']} pass, {s['VacuousAtThisN']} vacuous, "
              f"{s['Counterexample']} counterexample")
    return bench.exit_code(results)


def cmd_enumerate(args) -> int:
    if not 1 <= args.n <= graphs.MAX_ENUMERATION_ORDER:
        raise InputError(f"enumeration supports 1 <= n <= {graphs.MAX_ENUMERATION_ORDER}")
    gen = graphs.enumerate_connected(args.n) if args.connected else graphs.enumerate_graphs(args.n)
    if args.count:
        _emit(f"{sum(1 for _ in gen)}\n", args.output)
    elif args.edges:
        _emit("\n".join(graphs.to_edge_list(g) for g in gen), args.output)
    else:
        _emit("".join(graphs.to_compact(g) + "\n" for g in gen), args.output)
    return 0


def cmd_fs_export(args) -> int:
    x, y = parse_graph(args.x), parse_graph(args.y)
    if x.n != y.n:
        raise InputError(f"X and Y have different orders ({x.n} vs {y.n})")
    if x.n > fs.EXPLICIT_MAX:
        raise InputError(f"export needs n <= {fs.EXPLICIT_MAX}")
    inst = fs.FsInstance(x, y)
    if args.output:
        Path(args.output + ".edges").write_text(fs.export_edge_list(inst), encoding="utf-8")
        Path(args.output + ".ranks").write_text(fs.export_rank_table(x.n), encoding="utf-8")
    else:
        sys.stdout.write(fs.export_edge_list(inst))
    return 0


def cmd_replay(args) -> int:
    try:
        witness = json.loads(Path(args.witness).read_text(encoding="utf-8"))
        if "witness" in witness:
            witness = witness["witness"]
        outcome = bench.replay(witness)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise InputError(f"cannot replay {args.witness}: {exc}") from exc
    print(json.dumps({"hypothesis": outcome.hypothesis, "ok": outcome.ok, "detail": outcome.detail}, sort_keys=True))
    return 1 if outcome.hypothesis and not outcome.ok else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fslab", description="Friends-and-strangers graph lab.")
    sub = parser.add_subparsers(dest="command", required=True)
    formats = ["json", "csv", "text"]

    p = sub.add_parser("components", help="component report for FS(X, Y)", description=FAMILY_HELP)
    p.add_argument("--x", required=True, help="graph X")
    p.add_argument("--y", required=True, help="graph Y")
    p.add_argument("--kappa", action="store_true", help="add the vertex connectivity of each component")
    p.add_argument("--invariants", action="store_true", help="add parity / cyclic-ordering labels")
    p.add_argument("--format", choices=formats)
    p.add_argument("--output")
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("kappa", help="vertex connectivity and a minimum cut", description=FAMILY_HELP)
    p.add_argument("--g", required=True, help="graph")
    p.add_argument("--format", choices=formats)
    p.add_argument("--output")
    p.set_defaults(func=cmd_kappa)

    p = sub.add_parser("check", help="run a claim suite")
    p.add_argument("config", help="suite config path or bundled suite name (e.g. paper-claims-n5)")
    p.add_argument("--output", help="write the JSON report here")
    p.add_argument("--format", choices=formats)
    p.add_argument("--threads", type=int, help="worker processes (FS_LAB_THREADS overrides)")
    p.add_argument("--no-timings", action="store_true", help="omit runtimes so reports are byte-identical")
    p.add_argument("--collect-all", action="store_true", help="keep scanning after a counterexample")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", help="one graph per isomorphism class")
    p.add_argument("n", type=int)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--edges", action="store_true", help="edge lists instead of compact codes")
    p.add_argument("--count", action="store_true", help="print only the number of classes")
    p.add_argument("--output")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("fs-export", help="edge list of FS(X, Y) plus a rank table", description=FAMILY_HELP)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--output", help="path prefix; writes PREFIX.edges and PREFIX.ranks")
    p.set_defaults(func=cmd_fs_export)

    p = sub.add_parser("replay", help="re-evaluate a counterexample witness")
    p.add_argument("witness", help="JSON file with a witness record (or a result holding one)")
    p.set_defaults(func=cmd_replay)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args)
    except InputError as exc:
        print(f"fslab: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"fslab: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
