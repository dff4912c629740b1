"""Structured reports shared by the command line and the golden comparison."""
from __future__ import annotations

import json

from .enumeration import HassePoset
from .presentation import AlgebraPresentation
from .rigidity import DEFAULT, RigidityConfig, RigidObject, is_c_rigid
from .strings import hook_closure, render


def g_label(g) -> str:
    return "[" + ",".join(str(x) for x in g) + "]"


def default_name(obj: RigidObject) -> str:
    if obj.is_shifted:
        return f"P{obj.vertex}v"
    if obj.key.is_trivial:
        return f"P{obj.key.vertex}"
    return g_label(obj.g)


def object_names(objects: list[RigidObject], by_g: dict[tuple[int, ...], str] | None = None) -> dict[RigidObject, str]:
    """Names from ``by_g`` where given, default labels otherwise."""
    by_g = by_g or {}
    return {o: by_g.get(o.g, default_name(o)) for o in objects}


def compatibility_lists(algebra: AlgebraPresentation, objects: list[RigidObject], names: dict[RigidObject, str],
                        config: RigidityConfig = DEFAULT) -> dict[RigidObject, tuple[list[str], list[str]]]:
    """For each string class C: the names it tolerates (D is C-rigid, or P_e[1] with e off the support)
    and the subset tolerated in both directions."""
    strings = [o for o in objects if not o.is_shifted]
    shifted = [o for o in objects if o.is_shifted]
    out = {}
    for c in strings:
        comp, mutual = [], []
        for d in strings:
            if d == c:
                continue
            if is_c_rigid(algebra, c.representative, d.representative, config):
                comp.append(names[d])
                if is_c_rigid(algebra, d.representative, c.representative, config):
                    mutual.append(names[d])
        for s in shifted:
            if s.vertex not in c.support:
                comp.append(names[s])
                mutual.append(names[s])
        out[c] = (sorted(comp), sorted(mutual))
    return out


def build_report(algebra: AlgebraPresentation, poset: HassePoset, by_g: dict | None = None,
                 config: RigidityConfig = DEFAULT) -> dict:
    objects = poset.objects
    names = object_names(objects, by_g)
    lists = compatibility_lists(algebra, objects, names, config)
    rigid = []
    for o in objects:
        if o.is_shifted:
            continue
        comp, mutual = lists[o]
        rigid.append({"name": names[o], "display": render(algebra, o.representative),
                      "hook": render(algebra, hook_closure(algebra, o.representative)),
                      "g": list(o.g), "compatible": comp, "mutual": mutual})
    pairs = [sorted(names[x] for x in p.members) for p in poset.nodes]
    return {
        "algebra": algebra.name,
        "pairCount": len(poset.nodes),
        "maxLen": poset.max_len,
        "rigid": rigid,
        "pairs": pairs,
        "hasse": {
            "nodes": [{"id": str(i + 1), "members": m} for i, m in enumerate(pairs)],
            "edges": [[str(a + 1), str(b + 1)] for a, b in poset.edges],
        },
    }


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False, sort_keys=False) + "\n"


def to_dot(report: dict) -> str:
    lines = [f'digraph "{report["algebra"]}" {{', "  rankdir=TB;"]
    for node in report["hasse"]["nodes"]:
        label = ", ".join(node["members"])
        lines.append(f'  n{node["id"]} [label="{label}"];')
    for a, b in report["hasse"]["edges"]:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_table(report: dict) -> str:
    """Human-readable rigid table; mutual entries are starred."""
    rows = [f"{report['algebra']}: {report['pairCount']} support tau-tilting pairs"]
    width = max((len(r["display"]) for r in report["rigid"]), default=0)
    for r in report["rigid"]:
        marks = [f"{n}*" if n in r["mutual"] else n for n in r["compatible"]]
        rows.append(f"  {r['name']:<8} {r['display']:<{width}}  g={g_label(r['g']):<12} {' '.join(marks)}")
    return "\n".join(rows) + "\n"
