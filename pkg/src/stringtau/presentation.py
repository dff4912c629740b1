"""Quiver-with-monomial-relations presentations of string algebras.

Paths compose left to right: ``("β", "γ")`` means β first, then γ, so it runs
from ``source(β)`` to ``target(γ)``.  A path is nonzero in the algebra exactly
when it is composable and contains no relation as a contiguous subword.
"""
from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable


class AlgebraError(ValueError):
    """Raised for malformed or invalid algebra input.

    ``code`` is a short machine-readable reason such as ``TooManyArrowsOut``.
    """

    def __init__(self, code: str, message: str = ""):
        self.code = code
        super().__init__(f"{code}: {message}" if message else code)


class ParseError(AlgebraError):
    pass


@dataclass(frozen=True, order=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True, order=True)
class Path:
    """A path of the quiver; ``arrows == ()`` is the trivial path at ``source``."""

    source: str
    target: str
    arrows: tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    def sort_key(self):
        return (len(self.arrows), self.arrows, self.source)

    def __str__(self) -> str:
        return "".join(self.arrows) if self.arrows else f"e_{self.source}"


@dataclass(frozen=True)
class Violation:
    code: str
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def codes(self) -> list[str]:
        return sorted({v.code for v in self.violations})

    def raise_if_invalid(self) -> None:
        if self.violations:
            first = self.violations[0]
            raise AlgebraError(first.code, first.detail)


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    @cached_property
    def arrow_map(self) -> dict[str, Arrow]:
        return {a.name: a for a in self.arrows}

    def out_arrows(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def in_arrows(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.target == v]


def _has_subword(word: tuple[str, ...], relations: frozenset[tuple[str, ...]], max_rel: int) -> bool:
    n = len(word)
    for length in range(2, min(n, max_rel) + 1):
        for start in range(n - length + 1):
            if word[start:start + length] in relations:
                return True
    return False


@dataclass(frozen=True)
class AlgebraPresentation:
    """A validated string algebra ``kQ/I`` with ``I`` generated by paths."""

    name: str
    quiver: Quiver
    relations: frozenset[tuple[str, ...]]
    _paths: dict = field(default=None, repr=False, compare=False, hash=False)

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.quiver.vertices

    @property
    def arrows(self) -> tuple[Arrow, ...]:
        return self.quiver.arrows

    @cached_property
    def vertex_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def max_relation_length(self) -> int:
        return max((len(r) for r in self.relations), default=1)

    def arrow(self, name: str) -> Arrow:
        return self.quiver.arrow_map[name]

    def composable(self, arrows: Iterable[str]) -> bool:
        arrows = tuple(arrows)
        amap = self.quiver.arrow_map
        return all(amap[a].target == amap[b].source for a, b in zip(arrows, arrows[1:]))

    def is_nonzero(self, arrows: Iterable[str]) -> bool:
        """True iff the arrow word is composable and free of relation subwords."""
        arrows = tuple(arrows)
        return self.composable(arrows) and not _has_subword(arrows, self.relations, self.max_relation_length)

    def path(self, arrows: Iterable[str], vertex: str | None = None) -> Path:
        arrows = tuple(arrows)
        if not arrows:
            if vertex is None:
                raise ValueError("trivial path needs a vertex")
            return Path(vertex, vertex)
        return Path(self.arrow(arrows[0]).source, self.arrow(arrows[-1]).target, arrows)

    def multiply(self, p: Path, q: Path) -> Path | None:
        """The product ``p·q`` (p first), or None when it vanishes."""
        if p.target != q.source:
            return None
        word = p.arrows + q.arrows
        if p.arrows and q.arrows and _has_subword(word, self.relations, self.max_relation_length):
            return None
        return Path(p.source, q.target, word)

    @property
    def path_basis(self) -> dict[tuple[str, str], list[Path]]:
        if self._paths is None:
            object.__setattr__(self, "_paths", enumerate_nonzero_paths(self))
        return self._paths

    @cached_property
    def all_paths(self) -> list[Path]:
        return sorted((p for ps in self.path_basis.values() for p in ps), key=Path.sort_key)

    @cached_property
    def paths_from(self) -> dict[str, list[Path]]:
        out = defaultdict(list)
        for p in self.all_paths:
            out[p.source].append(p)
        return dict(out)

    @property
    def dimension(self) -> int:
        return len(self.all_paths)

    @cached_property
    def longest_path(self) -> int:
        return max(len(p) for p in self.all_paths)

    def hom_basis(self, i: str, j: str) -> list[Path]:
        """Basis of Hom(P_j, P_i): nonzero paths from i to j, acting by left multiplication."""
        for v in (i, j):
            if v not in self.vertex_index:
                raise AlgebraError("UnknownVertex", v)
        return list(self.path_basis.get((i, j), []))

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "vertices": list(self.vertices),
            "arrows": [{"name": a.name, "source": a.source, "target": a.target} for a in self.arrows],
            "relations": [list(r) for r in sorted(self.relations)],
        }


def _grow_paths(quiver: Quiver, relations: frozenset, bound: int):
    """Breadth-first growth of relation-free paths; yields each length's layer."""
    max_rel = max((len(r) for r in relations), default=1)
    layer = [(a.name,) for a in quiver.arrows]
    length = 1
    while layer and length <= bound:
        yield layer
        nxt = []
        for word in layer:
            last = quiver.arrow_map[word[-1]]
            for a in quiver.out_arrows(last.target):
                new = word + (a.name,)
                if not _has_subword(new[-max_rel:], relations, max_rel):
                    nxt.append(new)
        layer = nxt
        length += 1
    if layer:
        yield layer


def validate_string_algebra(quiver: Quiver, relations: Iterable[Iterable[str]]) -> ValidationReport:
    """Check the string-algebra axioms and finite dimensionality; collect every violation."""
    violations: list[Violation] = []
    rels = frozenset(tuple(r) for r in relations)
    names = [a.name for a in quiver.arrows]
    if len(set(quiver.vertices)) != len(quiver.vertices) or any(not v for v in quiver.vertices):
        violations.append(Violation("DuplicateVertex", "vertex ids must be nonempty and unique"))
    if len(set(names)) != len(names) or any(not n for n in names):
        violations.append(Violation("DuplicateArrow", "arrow names must be nonempty and unique"))
    vs = set(quiver.vertices)
    for a in quiver.arrows:
        if a.source not in vs or a.target not in vs:
            violations.append(Violation("UnknownVertex", f"arrow {a.name} uses an undeclared vertex"))
    for r in sorted(rels):
        if len(r) < 2:
            violations.append(Violation("RelationTooShort", f"relation {list(r)} has length < 2"))
        elif any(x not in quiver.arrow_map for x in r):
            violations.append(Violation("UnknownArrow", f"relation {list(r)} uses an undeclared arrow"))
        elif not all(quiver.arrow_map[x].target == quiver.arrow_map[y].source for x, y in zip(r, r[1:])):
            violations.append(Violation("RelationNotComposable", f"relation {list(r)} is not a path"))
    if violations:
        return ValidationReport(tuple(violations))

    for v in quiver.vertices:
        if len(quiver.out_arrows(v)) > 2:
            violations.append(Violation("TooManyArrowsOut", f"vertex {v} has more than two outgoing arrows"))
        if len(quiver.in_arrows(v)) > 2:
            violations.append(Violation("TooManyArrowsIn", f"vertex {v} has more than two incoming arrows"))

    max_rel = max((len(r) for r in rels), default=1)
    bound = len(quiver.arrows) * (1 + max_rel)
    seen_continuation = False
    infinite = False
    for layer in _grow_paths(quiver, rels, bound):
        if len(layer[0]) > bound:
            infinite = True
            break
        if seen_continuation:
            continue
        for word in layer:
            right = [a.name for a in quiver.out_arrows(quiver.arrow_map[word[-1]].target)
                     if not _has_subword(word + (a.name,), rels, max_rel)]
            left = [a.name for a in quiver.in_arrows(quiver.arrow_map[word[0]].source)
                    if not _has_subword((a.name,) + word, rels, max_rel)]
            if len(right) > 1 or len(left) > 1:
                violations.append(Violation(
                    "ContinuationNotUnique",
                    f"path {''.join(word)} extends in more than one way"))
                seen_continuation = True
                break
    if infinite:
        violations.append(Violation("InfiniteDimensional", "a relation-free cycle can be repeated forever"))
    return ValidationReport(tuple(violations))


def enumerate_nonzero_paths(algebra: AlgebraPresentation) -> dict[tuple[str, str], list[Path]]:
    """All nonzero paths grouped by (source, target), sorted by length then arrow names."""
    basis: dict[tuple[str, str], list[Path]] = defaultdict(list)
    for v in algebra.vertices:
        basis[(v, v)].append(Path(v, v))
    bound = len(algebra.arrows) * (1 + algebra.max_relation_length)
    for layer in _grow_paths(algebra.quiver, algebra.relations, bound):
        for word in layer:
            p = algebra.path(word)
            basis[(p.source, p.target)].append(p)
    return {k: sorted(v, key=Path.sort_key) for k, v in sorted(basis.items())}


def build_algebra(name: str, vertices: Iterable[str], arrows: Iterable[Arrow | tuple],
                  relations: Iterable[Iterable[str]]) -> AlgebraPresentation:
    """Assemble and validate an algebra; raises AlgebraError on the first violation."""
    arrows = [a if isinstance(a, Arrow) else Arrow(*a) for a in arrows]
    vertices = list(vertices)
    if len(set(vertices)) == len(vertices):
        vertices = sorted(vertices)
    quiver = Quiver(tuple(vertices), tuple(sorted(arrows)))
    rels = [tuple(r) for r in relations]
    validate_string_algebra(quiver, rels).raise_if_invalid()
    return AlgebraPresentation(name, quiver, frozenset(rels))


_KEYS = {"name", "vertices", "arrows", "relations"}


def algebra_from_dict(data: dict) -> AlgebraPresentation:
    if not isinstance(data, dict):
        raise ParseError("SyntaxError", "top level must be an object")
    unknown = set(data) - _KEYS
    if unknown:
        raise ParseError("UnknownField", ", ".join(sorted(unknown)))
    missing = {"vertices", "arrows", "relations"} - set(data)
    if missing:
        raise ParseError("MissingField", ", ".join(sorted(missing)))
    vertices = data["vertices"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise ParseError("SyntaxError", "vertices must be a list of strings")
    arrows = []
    for a in data["arrows"]:
        if not isinstance(a, dict) or set(a) != {"name", "source", "target"}:
            raise ParseError("SyntaxError", f"bad arrow entry {a!r}")
        if not all(isinstance(x, str) for x in a.values()):
            raise ParseError("SyntaxError", f"bad arrow entry {a!r}")
        arrows.append(Arrow(a["name"], a["source"], a["target"]))
    relations = data["relations"]
    if not isinstance(relations, list) or not all(
            isinstance(r, list) and all(isinstance(x, str) for x in r) for r in relations):
        raise ParseError("SyntaxError", "relations must be a list of arrow-name lists")
    name = data.get("name", "")
    if not isinstance(name, str):
        raise ParseError("SyntaxError", "name must be a string")
    return build_algebra(name, vertices, arrows, relations)


def parse_algebra(text: str) -> AlgebraPresentation:
    """Parse the JSON algebra format and validate it as a string algebra."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("SyntaxError", str(exc)) from exc
    return algebra_from_dict(data)


def load_algebra(path) -> AlgebraPresentation:
    with open(path, encoding="utf-8") as fh:
        return parse_algebra(fh.read())
