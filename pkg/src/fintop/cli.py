"""Command-line front end.

Exit status: 0 on success, 1 for domain errors (bad topology, inconsistent
base, malformed space file), 2 for usage errors, 3 when two independent
computation routes disagree (an internal error).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Callable, Sequence

from . import bits
from .enumeration import MAX_N, MAX_N_LARGE, enumerate_classes, enumerate_labeled
from .errors import FinTopError, ParseError, PathDisagreement, TargetNotOneDimensionalT0
from .hasse import hasse_dot
from .interval_quotient import CotsQuotient, PiecewiseLinear, induced_multifunction
from .maps import (
    Multifunction,
    PointFunction,
    check_open_map_theorem,
    continuity_class,
    is_lsc,
    is_usc,
    lsc_failures,
    openness_class,
    usc_failures,
)
from .operators import (
    DEFINITION,
    ORDER,
    boundary,
    classify_set,
    closure,
    closure_of_interior,
    derived_set,
    exterior,
    interior,
    interior_of_closure,
)
from .properties import (
    components_by_comparability,
    connected_components,
    dimension_by_subspaces,
    is_t0,
    space_report,
)
from .space import Space
from .textio import format_space, load_space, parse_cuts, parse_map, parse_pwl, parse_set, parse_spaces


class UsageError(Exception):
    pass


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _agree(what: str, first, second):
    if first != second:
        raise PathDisagreement(what, first, second)
    return first


def _space_json(space: Space) -> dict:
    return {
        "points": list(space.labels),
        "opens": [space.names(g) for g in space.opens],
        "minbase": {space.labels[x]: space.names(u) for x, u in enumerate(space.min_nbhd)},
    }


def _load(path: str) -> Space:
    try:
        return load_space(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _parse_list(text: str | None, allowed: Sequence[str], default: Sequence[str]) -> list[str]:
    if not text:
        return list(default)
    items = [s.strip() for s in text.split(",") if s.strip()]
    for item in items:
        if item not in allowed:
            raise UsageError(f"unknown item {item!r}; choose from {', '.join(allowed)}")
    return items


# --- subcommands ----------------------------------------------------------------

def cmd_validate(args, out) -> None:
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
    spaces = parse_spaces(text)
    if args.json:
        json.dump({"command": "validate", "spaces": [_space_json(s) for s in spaces]}, out, indent=2)
        out.write("\n")
        return
    for i, s in enumerate(spaces, start=1):
        out.write(f"space {i}: ok, {s.n} points, {len(s.opens)} open sets\n")


def cmd_info(args, out) -> None:
    space = _load(args.file)
    report = space_report(space)
    _agree("dimension", report.dim_inductive, dimension_by_subspaces(space))
    _agree("components", report.components, components_by_comparability(space))
    _agree("closed points", report.closed_points,
           bits.from_indices(x for x in range(space.n)
                             if closure(space, 1 << x, ORDER) == 1 << x))
    _agree("open points", report.open_points,
           bits.from_indices(x for x in range(space.n) if space.min_nbhd[x] == 1 << x))
    if args.figure:
        from .plotting import save_hasse

        save_hasse(space, args.figure)
    if args.json:
        payload = {"command": "info", "space": _space_json(space), "report": report.as_dict(space)}
        json.dump(payload, out, indent=2)
        out.write("\n")
        return
    fmt = space.fmt
    out.write(f"points: {' '.join(space.labels)}\n")
    out.write(f"minbase: {' '.join(f'{space.labels[x]}:{fmt(u)}' for x, u in enumerate(space.min_nbhd))}\n")
    for key, label in [("t0", "T0"), ("t1", "T1"), ("t_half", "T1/2"), ("discrete", "discrete"),
                       ("indiscrete", "indiscrete"), ("submaximal", "submaximal"),
                       ("connected", "connected"), ("cots", "COTS")]:
        out.write(f"{label}: {_yn(getattr(report, key))}\n")
    out.write(f"dim: {report.dim_inductive}  [minimal-base recursion = subspace recursion]\n")
    out.write(f"height: {report.height}\n")
    out.write(f"open points: {fmt(report.open_points)}  [open family = minimal neighborhoods]\n")
    out.write(f"closed points: {fmt(report.closed_points)}  [open family = order]\n")
    out.write(f"components: {' '.join(fmt(c) for c in report.components)}  [clopen = comparability]\n")
    if args.figure:
        out.write(f"figure: {args.figure}\n")


SET_OPS: dict[str, tuple[str, Callable]] = {
    "cl": ("cl", closure),
    "int": ("int", interior),
    "clint": ("cl int", closure_of_interior),
    "intcl": ("int cl", interior_of_closure),
    "boundary": ("boundary", boundary),
    "exterior": ("ext", exterior),
    "derived": ("d", derived_set),
}


def cmd_set(args, out) -> None:
    space = _load(args.file)
    try:
        a = parse_set(space, args.set)
    except ParseError as exc:
        raise UsageError(f"--set: {exc}") from None
    shown = _parse_list(args.show, [*SET_OPS, "classify"], [*SET_OPS, "classify"])
    results = {}
    for key in shown:
        if key == "classify":
            continue
        label, op = SET_OPS[key]
        results[key] = (label, _agree(label, op(space, a, ORDER), op(space, a, DEFINITION)))
    cls = None
    if "classify" in shown:
        cls = _agree("classification", classify_set(space, a, ORDER), classify_set(space, a, DEFINITION))
    if args.json:
        payload = {"command": "set", "set": space.names(a),
                   "operators": {k: space.names(v) for k, (_, v) in results.items()}}
        if cls is not None:
            payload["classification"] = cls.as_dict()
        json.dump(payload, out, indent=2)
        out.write("\n")
        return
    out.write(f"A: {space.fmt(a)}\n")
    for key, (label, value) in results.items():
        out.write(f"{label}: {space.fmt(value)}  [order = definition]\n")
    if cls is not None:
        for name, flag in cls.as_dict().items():
            out.write(f"{name}: {_yn(flag)}\n")


def _two_spaces(args) -> tuple[Space, Space]:
    return _load(args.source), _load(args.target)


def cmd_map(args, out) -> None:
    src, dst = _two_spaces(args)
    try:
        image = parse_map(src, dst, args.map)
    except ParseError as exc:
        raise UsageError(f"--map: {exc}") from None
    f = PointFunction(src, dst, image)
    checks = _parse_list(args.check, ["continuity", "openness", "openmap"], ["continuity", "openness"])
    payload: dict = {"command": "map"}
    if "continuity" in checks:
        payload["continuity"] = vars(continuity_class(f))
    if "openness" in checks:
        payload["openness"] = vars(openness_class(f))
    if "openmap" in checks:
        try:
            payload["open_map_theorem"] = check_open_map_theorem(f)._asdict()
        except TargetNotOneDimensionalT0 as exc:
            payload["open_map_theorem"] = {"applicable": False, "reason": str(exc)}
    if args.json:
        json.dump(payload, out, indent=2)
        out.write("\n")
        return
    for section in ("continuity", "openness", "open_map_theorem"):
        if section in payload:
            for name, flag in payload[section].items():
                shown = _yn(flag) if isinstance(flag, bool) else flag
                out.write(f"{name}: {shown}\n")


def _witness_text(F: Multifunction, kind: str) -> str:
    s, t = F.source, F.target
    if kind == "usc":
        fails = usc_failures(F)
        if not fails:
            return ""
        w = fails[0]
        x = s.labels[w.point]
        return f" (witness {x}; F(U_{x}) = {t.fmt(w.image_of_nbhd)} not inside {t.fmt(w.bound)})"
    fails = lsc_failures(F)
    if not fails:
        return ""
    w = fails[0]
    x, xp, y = s.labels[w.point], s.labels[w.neighbor], t.labels[w.value]
    return f" (witness {x}; F({xp}) misses U_{y} = {t.fmt(t.min_nbhd[w.value])})"


def _multi_payload(F: Multifunction, checks: list[str]) -> dict:
    s, t = F.source, F.target
    payload: dict = {"values": {s.labels[x]: t.names(v) for x, v in enumerate(F.image)}}
    if "usc" in checks:
        payload["usc"] = is_usc(F)
        payload["usc_failures"] = [s.labels[w.point] for w in usc_failures(F)]
    if "lsc" in checks:
        payload["lsc"] = is_lsc(F)
        payload["lsc_failures"] = sorted({s.labels[w.point] for w in lsc_failures(F)})
    return payload


def _write_multi(F: Multifunction, checks: list[str], out) -> None:
    if "usc" in checks:
        out.write(f"usc: {_yn(is_usc(F))}{_witness_text(F, 'usc')}\n")
    if "lsc" in checks:
        out.write(f"lsc: {_yn(is_lsc(F))}{_witness_text(F, 'lsc')}\n")


def cmd_multi(args, out) -> None:
    src, dst = _two_spaces(args)
    try:
        image = parse_map(src, dst, args.map, multi=True)
    except ParseError as exc:
        raise UsageError(f"--map: {exc}") from None
    F = Multifunction(src, dst, image)
    checks = _parse_list(args.check, ["usc", "lsc"], ["usc", "lsc"])
    if args.json:
        json.dump({"command": "multi", **_multi_payload(F, checks)}, out, indent=2)
        out.write("\n")
        return
    _write_multi(F, checks, out)


def cmd_quotient(args, out) -> None:
    try:
        cuts = parse_cuts(args.cuts)
        pairs = parse_pwl(args.pwl)
    except ParseError as exc:
        raise UsageError(str(exc)) from None
    q = CotsQuotient(cuts)
    f = PiecewiseLinear.from_pairs(pairs)
    g = induced_multifunction(f, q)
    Y = q.cot_space
    if args.figure:
        from .plotting import save_quotient_plot

        save_quotient_plot(f, q, args.figure)
    report = space_report(Y)
    if args.json:
        payload = {
            "command": "quotient",
            "cuts": [str(c) for c in q.cuts],
            "fibers": {Y.labels[p]: str(q.fiber(p)) for p in range(Y.n)},
            "cots": report.cots, "t0": report.t0, "dim_inductive": report.dim_inductive,
            **_multi_payload(g, ["usc", "lsc"]),
        }
        json.dump(payload, out, indent=2)
        out.write("\n")
        return
    out.write(f"COTS: {' '.join(Y.labels)}  (cots: {_yn(report.cots)}, T0: {_yn(report.t0)}, "
              f"dim: {report.dim_inductive})\n")
    for p in range(Y.n):
        out.write(f"g({Y.labels[p]}) = {Y.fmt(g.image[p])}    fiber {q.fiber(p)}\n")
    _write_multi(g, ["usc", "lsc"], out)
    if args.figure:
        out.write(f"figure: {args.figure}\n")


REPORT_KEYS = {
    "t0": "t0", "t1": "t1", "t_half": "t_half", "discrete": "discrete", "indiscrete": "indiscrete",
    "submaximal": "submaximal", "connected": "connected", "cots": "cots",
    "dim": "dim_inductive", "dim_inductive": "dim_inductive", "height": "height",
}


def parse_filter(text: str | None) -> list[tuple[str, object]]:
    terms = []
    if not text:
        return terms
    for raw in text.split(","):
        raw = raw.strip()
        if not raw:
            continue
        key, sep, value = raw.partition("=")
        key = key.strip()
        if key not in REPORT_KEYS:
            raise UsageError(f"unknown filter key {key!r}")
        attr = REPORT_KEYS[key]
        if attr in ("dim_inductive", "height"):
            if not sep:
                raise UsageError(f"filter {key!r} needs a value")
            try:
                terms.append((attr, int(value)))
            except ValueError:
                raise UsageError(f"filter {key!r} needs an integer") from None
        else:
            v = value.strip().lower() if sep else "yes"
            if v not in ("yes", "no", "true", "false", "1", "0"):
                raise UsageError(f"filter {key!r} needs yes or no")
            terms.append((attr, v in ("yes", "true", "1")))
    return terms


TABLE_COLUMNS = ["index", "labeled_count", "t0", "t_half", "submaximal", "connected", "cots",
                 "dim_inductive", "height", "open_sets"]


def cmd_enumerate(args, out) -> None:
    terms = parse_filter(args.filter)
    max_n = MAX_N_LARGE if args.allow_large else MAX_N
    reports: dict[Space, object] = {}

    def report_of(space: Space):
        if space not in reports:
            reports[space] = space_report(space)
        return reports[space]

    def keep(space: Space) -> bool:
        if args.t0 and not is_t0(space):
            return False
        if not terms:
            return True
        rep = report_of(space)
        return all(getattr(rep, attr) == want for attr, want in terms)

    if args.classes:
        entries = [(c.representative, c.labeled_count) for c in enumerate_classes(args.n, keep, max_n)]
    else:
        entries = [(s, 1) for s in enumerate_labeled(args.n, max_n) if keep(s)]
    rows = []
    for i, (space, count) in enumerate(entries, start=1):
        rep = report_of(space)
        rows.append({"index": i, "labeled_count": count, "t0": _yn(rep.t0), "t_half": _yn(rep.t_half),
                     "submaximal": _yn(rep.submaximal), "connected": _yn(rep.connected),
                     "cots": _yn(rep.cots), "dim_inductive": rep.dim_inductive, "height": rep.height,
                     "open_sets": len(space.opens)})
        out.write(f"# {'class' if args.classes else 'space'} {i}"
                  f"{f' ({count} labeled)' if args.classes else ''}\n")
        out.write(format_space(space))
        out.write("\n")
    total = sum(c for _, c in entries)
    out.write(f"# summary: n={args.n} {'classes' if args.classes else 'spaces'}={len(entries)} "
              f"labeled={total}\n")
    out.write("# " + "\t".join(TABLE_COLUMNS) + "\n")
    for row in rows:
        out.write("# " + "\t".join(str(row[c]) for c in TABLE_COLUMNS) + "\n")
    if args.table:
        with open(args.table, "w", newline="", encoding="utf-8") as fh:
            writer = csv.DictWriter(fh, fieldnames=TABLE_COLUMNS, delimiter="\t")
            writer.writeheader()
            writer.writerows(rows)
    if args.figure:
        from .plotting import save_hasse_grid

        shown = entries[:args.figure_limit]
        save_hasse_grid([s for s, _ in shown], [f"#{i}" for i in range(1, len(shown) + 1)], args.figure)


def cmd_hasse(args, out) -> None:
    space = _load(args.file)
    out.write(hasse_dot(space))
    if args.figure:
        from .plotting import save_hasse

        save_hasse(space, args.figure)


# --- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fintop", description="Computation with finite topological spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse and validate a space file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("info", help="whole-space report")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--figure", metavar="PATH", help="also render the Hasse diagram to PATH")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("set", help="operators and classification of one subset")
    p.add_argument("file")
    p.add_argument("--set", required=True, help='set literal such as "{y z}"')
    p.add_argument("--show", help="comma list of " + ",".join([*SET_OPS, "classify"]))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_set)

    p = sub.add_parser("map", help="continuity and openness of a point map")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--map", required=True, help='e.g. "x:x y:z z:y"')
    p.add_argument("--check", help="comma list of continuity,openness,openmap")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("multi", help="upper/lower semicontinuity of a multifunction")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--map", required=True, help='e.g. "a:{a b} b:{a}"')
    p.add_argument("--check", help="comma list of usc,lsc")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_multi)

    p = sub.add_parser("quotient", help="multifunction induced on a finite COTS quotient of [0,1]")
    p.add_argument("--cuts", required=True, help='e.g. "0,1/2,1"')
    p.add_argument("--pwl", required=True, help='breakpoint:value pairs, e.g. "0:3/4 1/4:1/4 1:1/2"')
    p.add_argument("--json", action="store_true")
    p.add_argument("--figure", metavar="PATH", help="also plot the map over the cut grid")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("enumerate", help="all topologies on n points")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t0", action="store_true", help="keep T0 spaces only")
    p.add_argument("--classes", action="store_true", help="one representative per homeomorphism class")
    p.add_argument("--filter", help="e.g. dim=1,submaximal or cots=no")
    p.add_argument("--table", metavar="PATH", help="write the summary table as TSV")
    p.add_argument("--figure", metavar="PATH", help="render Hasse diagrams of the listed spaces")
    p.add_argument("--figure-limit", type=int, default=60)
    p.add_argument("--allow-large", action="store_true", help=f"permit n up to {MAX_N_LARGE}")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("hasse", help="DOT Hasse diagram of the specialization order")
    p.add_argument("file")
    p.add_argument("--figure", metavar="PATH", help="also render it with matplotlib")
    p.set_defaults(func=cmd_hasse)
    return parser


def main(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args, out)
    except UsageError as exc:
        err.write(f"fintop {args.command}: usage error: {exc}\n")
        return 2
    except FinTopError as exc:
        line = getattr(exc, "line", None)
        where = f" (line {line})" if line is not None and not isinstance(exc, ParseError) else ""
        err.write(f"fintop {args.command}: error{where}: {exc}\n")
        return 1
    except PathDisagreement as exc:
        err.write(f"fintop {args.command}: internal error: {exc}\n")
        return 3
    return 0


run = main

if __name__ == "__main__":
    sys.exit(main())
