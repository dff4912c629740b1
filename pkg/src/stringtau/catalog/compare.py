"""Semantic diff between a computed report and the reference data."""
from __future__ import annotations

from collections import Counter

from ..presentation import AlgebraPresentation
from ..strings import canonical, module_key, parse_display


def compare_with_golden(algebra: AlgebraPresentation, report: dict, golden) -> list[str]:
    """Differences as readable lines; empty when everything matches.

    Rigid strings are matched by g-vector, displays by the module they present.
    """
    diff = []
    if report["pairCount"] != golden.pair_count:
        diff.append(f"pairCount: computed {report['pairCount']}, expected {golden.pair_count}")
    got_g = Counter(tuple(r["g"]) for r in report["rigid"])
    want_g = Counter(r.g for r in golden.rigid)
    if got_g != want_g:
        diff.append(f"g-vectors: extra {sorted(got_g - want_g)}, missing {sorted(want_g - got_g)}")
    computed = {tuple(r["g"]): r for r in report["rigid"]}
    for ref in golden.rigid:
        row = computed.get(ref.g)
        if row is None:
            continue
        mine = module_key(algebra, parse_display(algebra, row["display"]))
        if module_key(algebra, parse_display(algebra, ref.display)) != mine:
            diff.append(f"{ref.name}: display {ref.display!r} presents a different module")
        if canonical(parse_display(algebra, ref.hook)) != mine:
            diff.append(f"{ref.name}: hook {ref.hook!r} differs from {row['hook']!r}")
        if sorted(row["compatible"]) != sorted(ref.compatible):
            diff.append(f"{ref.name}: compatible {sorted(row['compatible'])} vs {sorted(ref.compatible)}")
        if sorted(row["mutual"]) != sorted(ref.mutual):
            diff.append(f"{ref.name}: mutual {sorted(row['mutual'])} vs {sorted(ref.mutual)}")
    diff.extend(_hasse_diff(report, golden, {f"P{v}v" for v in algebra.vertices}))
    return diff


def _module_part(members, shifted: set[str]) -> frozenset[str]:
    return frozenset(m for m in members if m not in shifted)


def _hasse_diff(report: dict, golden, shifted: set[str]) -> list[str]:
    mine = {n["id"]: _module_part(n["members"], shifted) for n in report["hasse"]["nodes"]}
    theirs = {i: frozenset(m) for i, m in golden.hasse_nodes}
    if len(set(mine.values())) != len(mine) or len(set(theirs.values())) != len(theirs):
        return ["hasse: node labels are not unique"]
    if set(mine.values()) != set(theirs.values()):
        return [f"hasse: node sets differ ({len(mine)} vs {len(theirs)})"]
    got = {(mine[a], mine[b]) for a, b in report["hasse"]["edges"]}
    want = {(theirs[a], theirs[b]) for a, b in golden.hasse_edges}
    out = []
    for a, b in sorted(got - want, key=str):
        out.append(f"hasse: extra edge {sorted(a)} -> {sorted(b)}")
    for a, b in sorted(want - got, key=str):
        out.append(f"hasse: missing edge {sorted(a)} -> {sorted(b)}")
    return out
