"""Command-line front end.

Exit codes: 0 success, 1 domain error (one ``error: <Code>: <detail>`` line on
stderr), 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import catalog
from .enumeration import EnumerationConfig, build_hasse, rigid_objects, support_tau_tilting_pairs
from .homoracle import oracle_cross_check
from .presentation import AlgebraError, AlgebraPresentation, ParseError, parse_algebra
from .report import build_report, g_label, object_names, to_dot, to_json, to_table
from .strings import enumerate_strings, g_vector, hook_closure, render, support_vertices


def _load(where: str) -> tuple[AlgebraPresentation, dict | None]:
    """A file path, or the name of a built-in algebra."""
    if not os.path.exists(where) and (where in catalog.SLUGS or where in catalog.SLUGS.values()):
        return catalog.catalog_algebra(where), catalog.golden_results(where).names_by_g()
    try:
        with open(where, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise AlgebraError("FileNotFound", f"{where}: {exc.strerror}") from exc
    return parse_algebra(text), None


def _emit(text: str) -> None:
    sys.stdout.write(text)


def cmd_validate(args) -> int:
    algebra, _ = _load(args.file)
    _emit(f"ok {algebra.name or args.file}: {len(algebra.vertices)} vertices, "
          f"{len(algebra.arrows)} arrows, {len(algebra.relations)} relations, dimension {algebra.dimension}\n")
    return 0


def cmd_strings(args) -> int:
    algebra, _ = _load(args.file)
    rows = []
    for c in enumerate_strings(algebra, args.max_len):
        rows.append({"display": render(algebra, c), "hook": render(algebra, hook_closure(algebra, c)),
                     "g": list(g_vector(algebra, c)), "support": sorted(support_vertices(algebra, c))})
    if args.format == "json":
        _emit(json.dumps(rows, indent=2, ensure_ascii=False) + "\n")
    else:
        for r in rows:
            _emit(f"{r['display']}\thook {r['hook']}\tg={g_label(r['g'])}\tsupport {{{','.join(r['support'])}}}\n")
    return 0


def cmd_rigid(args) -> int:
    algebra, by_g = _load(args.file)
    objs = rigid_objects(algebra, args.max_len)
    names = object_names(objs, by_g)
    rows = [{"name": names[o], "kind": o.kind, "g": list(o.g),
             "display": render(algebra, o.representative) if o.representative else None} for o in objs]
    if args.format == "json":
        _emit(json.dumps(rows, indent=2, ensure_ascii=False) + "\n")
    else:
        for r in rows:
            _emit(f"{r['name']}\tg={g_label(r['g'])}\t{r['display'] or 'shifted projective'}\n")
    return 0


def _config(args) -> EnumerationConfig:
    return EnumerationConfig(initial_len=getattr(args, "max_len", None), cap=getattr(args, "cap", 64),
                             threads=args.threads)


def cmd_tautilt(args) -> int:
    algebra, by_g = _load(args.file)
    if args.max_len is not None:
        objs = rigid_objects(algebra, args.max_len)
        pairs = support_tau_tilting_pairs(algebra, args.max_len, threads=args.threads, objects=objs)
    else:
        poset = build_hasse(algebra, _config(args))
        objs, pairs = poset.objects, poset.nodes
    names = object_names(objs, by_g)
    labels = [sorted(names[x] for x in p.members) for p in pairs]
    if args.format == "json":
        _emit(json.dumps({"algebra": algebra.name, "pairCount": len(labels), "pairs": labels},
                         indent=2, ensure_ascii=False) + "\n")
    else:
        _emit(f"{len(labels)} support tau-tilting pairs\n")
        for lab in labels:
            _emit("  {" + ", ".join(lab) + "}\n")
    return 0


def cmd_hasse(args) -> int:
    algebra, by_g = _load(args.file)
    report = build_report(algebra, build_hasse(algebra, _config(args)), by_g)
    _emit({"dot": to_dot, "json": to_json, "text": to_table}[args.format](report))
    return 0


def cmd_oracle(args) -> int:
    algebra, _ = _load(args.file)
    rep = oracle_cross_check(algebra, args.max_len, fields=(2, 3) if args.fields else ())
    _emit(rep.summary() + "\n")
    for line in rep.failures:
        _emit(f"  {line}\n")
    if not rep.ok:
        raise AlgebraError("OracleDiscrepancy", f"{len(rep.failures)} disagreements")
    return 0


def cmd_catalog(args) -> int:
    if args.name is None:
        for name in catalog.NAMES:
            g = catalog.golden_results(name)
            _emit(f"{name}\t{catalog.SLUGS[name]}\t{g.pair_count} pairs\n")
        return 0
    algebra = catalog.catalog_algebra(args.name)
    golden = catalog.golden_results(args.name)
    if not args.golden:
        _emit(json.dumps(algebra.to_dict(), indent=2, ensure_ascii=False) + "\n")
        return 0
    report = build_report(algebra, build_hasse(algebra, _config(args)), golden.names_by_g())
    diff = catalog.compare_with_golden(algebra, report, golden)
    _emit(f"{golden.algebra}: {report['pairCount']} pairs, {len(diff)} differences\n")
    for line in diff:
        _emit(f"  {line}\n")
    if diff:
        raise AlgebraError("GoldenMismatch", f"{len(diff)} differences")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="stringtau", description="tau-tilting theory of string algebras")
    p.add_argument("--threads", type=int, default=1, help="worker processes for compatibility checks")
    sub = p.add_subparsers(dest="command", required=True)

    def algebra_cmd(name, func, help_text, max_len=None, formats=("text", "json")):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("file", help="algebra JSON file or built-in name such as 'R(2AB)'")
        if max_len == "required":
            sp.add_argument("--max-len", type=int, required=True)
        elif max_len == "optional":
            sp.add_argument("--max-len", type=int, default=None)
        if formats:
            sp.add_argument("--format", choices=formats, default=formats[0])
        sp.set_defaults(func=func)
        return sp

    algebra_cmd("validate", cmd_validate, "check the string-algebra axioms", formats=())
    algebra_cmd("strings", cmd_strings, "list strings with hooks, g-vectors and supports", "required")
    algebra_cmd("rigid", cmd_rigid, "list rigid objects", "required")
    algebra_cmd("tautilt", cmd_tautilt, "list support tau-tilting pairs", "optional")
    hs = algebra_cmd("hasse", cmd_hasse, "Hasse quiver of support tau-tilting pairs",
                     formats=("dot", "json", "text"))
    hs.add_argument("--cap", type=int, default=64, help="largest string length tried")
    oc = algebra_cmd("oracle-check", cmd_oracle, "compare predicates with the rank oracle", "required",
                     formats=())
    oc.add_argument("--fields", action="store_true", help="also compare ranks modulo 2 and 3")
    cat = sub.add_parser("catalog", help="list or load built-in algebras")
    cat.add_argument("name", nargs="?")
    cat.add_argument("--golden", action="store_true", help="recompute and diff against the reference data")
    cat.add_argument("--cap", type=int, default=64)
    cat.set_defaults(func=cmd_catalog)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be positive")
    for opt in ("max_len", "cap"):
        if getattr(args, opt, None) is not None and getattr(args, opt) < 0:
            parser.error(f"--{opt.replace('_', '-')} must be non-negative")
    try:
        return args.func(args)
    except (AlgebraError, ParseError) as exc:
        print("error: " + " ".join(str(exc).split()), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
