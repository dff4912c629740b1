"""Rigid objects, support τ-tilting pairs, their order and the Hasse quiver."""
from __future__ import annotations

import logging
from collections import defaultdict, deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .presentation import AlgebraError, AlgebraPresentation
from .rigidity import (DEFAULT, RigidityConfig, RigidObject, compatible, is_c_rigid,
                       is_self_rigid, shifted_object, string_object)
from .strings import enumerate_strings, module_key

log = logging.getLogger(__name__)


class CompletionCountMismatch(AlgebraError):
    def __init__(self, count: int):
        self.count = count
        super().__init__("CompletionCountMismatch", f"found {count} completions, expected 2")


class LengthCapExceeded(AlgebraError):
    def __init__(self, cap: int):
        self.cap = cap
        super().__init__("LengthCapExceeded", f"no complete Hasse quiver with strings up to length {cap}")


@dataclass(frozen=True)
class EnumerationConfig:
    initial_len: int | None = None  # None means dim A
    cap: int = 64
    threads: int = 1
    rigidity: RigidityConfig = DEFAULT


def rigid_objects(algebra: AlgebraPresentation, max_len: int,
                  config: RigidityConfig = DEFAULT) -> list[RigidObject]:
    """Self-rigid string classes from strings up to ``max_len`` plus every shifted projective."""
    keys: dict = {}
    for c in enumerate_strings(algebra, max_len):
        keys.setdefault(module_key(algebra, c), c)
    out = [string_object(algebra, c) for c in keys.values() if is_self_rigid(algebra, c, config)]
    out += [shifted_object(algebra, v) for v in algebra.vertices]
    return sorted(out, key=RigidObject.sort_key)


@dataclass(frozen=True)
class SupportTauTiltingPair:
    members: tuple[RigidObject, ...]

    @staticmethod
    def of(members) -> "SupportTauTiltingPair":
        return SupportTauTiltingPair(tuple(sorted(members, key=RigidObject.sort_key)))

    @property
    def strings(self) -> list[RigidObject]:
        return [x for x in self.members if not x.is_shifted]

    @property
    def shifted_vertices(self) -> list[str]:
        return [x.vertex for x in self.members if x.is_shifted]

    def g_matrix(self) -> list[list[int]]:
        return [list(x.g) for x in self.members]

    def sort_key(self):
        return tuple(x.sort_key() for x in self.members)


def _compat_row(args):
    algebra, objs, i, config = args
    return [j > i and compatible(algebra, objs[i], objs[j], config) for j in range(len(objs))]


def compatibility_matrix(algebra: AlgebraPresentation, objs: list[RigidObject],
                         config: RigidityConfig = DEFAULT, threads: int = 1) -> list[list[bool]]:
    jobs = [(algebra, objs, i, config) for i in range(len(objs))]
    if threads > 1 and len(objs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(_compat_row, jobs, chunksize=max(1, len(jobs) // (4 * threads))))
    else:
        rows = [_compat_row(j) for j in jobs]
    for i in range(len(objs)):
        rows[i][i] = True
        for j in range(i):
            rows[i][j] = rows[j][i]
    return rows


def _cliques(compat: list[list[bool]], size: int) -> list[tuple[int, ...]]:
    n = len(compat)
    out = []

    def grow(chosen: list[int], candidates: list[int]):
        if len(chosen) == size:
            out.append(tuple(chosen))
            return
        for pos, v in enumerate(candidates):
            if len(chosen) + len(candidates) - pos < size:
                break
            grow(chosen + [v], [w for w in candidates[pos + 1:] if compat[v][w]])

    grow([], list(range(n)))
    return out


def support_tau_tilting_pairs(algebra: AlgebraPresentation, max_len: int,
                              config: RigidityConfig = DEFAULT, threads: int = 1,
                              objects: list[RigidObject] | None = None) -> list[SupportTauTiltingPair]:
    objs = objects if objects is not None else rigid_objects(algebra, max_len, config)
    compat = compatibility_matrix(algebra, objs, config, threads)
    pairs = [SupportTauTiltingPair.of(objs[i] for i in clique)
             for clique in _cliques(compat, len(algebra.vertices))]
    return sorted(pairs, key=SupportTauTiltingPair.sort_key)


def order_leq(algebra: AlgebraPresentation, n: SupportTauTiltingPair, m: SupportTauTiltingPair,
              config: RigidityConfig = DEFAULT) -> bool:
    """N ≤ M, i.e. Hom(T_M, T_N[1]) = 0."""
    for x in m.strings:
        for y in n.strings:
            if not is_c_rigid(algebra, x.representative, y.representative, config):
                return False
    for e in m.shifted_vertices:
        if any(e in y.support for y in n.strings):
            return False
    return True


def mutation_completions(algebra: AlgebraPresentation, almost_complete, universe: list[RigidObject],
                         config: RigidityConfig = DEFAULT) -> tuple[SupportTauTiltingPair, SupportTauTiltingPair]:
    """The two pairs containing an almost complete pair."""
    base = list(almost_complete)
    found = [x for x in universe if x not in base
             and all(compatible(algebra, x, y, config) for y in base)]
    if len(found) != 2:
        raise CompletionCountMismatch(len(found))
    first, second = (SupportTauTiltingPair.of(base + [x]) for x in found)
    return first, second


@dataclass
class HassePoset:
    nodes: list[SupportTauTiltingPair]
    edges: list[tuple[int, int]]  # (upper, lower) covering arrows
    max_len: int
    objects: list[RigidObject] = field(default_factory=list)

    def neighbours(self) -> dict[int, set[int]]:
        nb = defaultdict(set)
        for a, b in self.edges:
            nb[a].add(b)
            nb[b].add(a)
        return nb

    def sources(self) -> list[int]:
        targets = {b for _, b in self.edges}
        return [i for i in range(len(self.nodes)) if i not in targets]

    def sinks(self) -> list[int]:
        tails = {a for a, _ in self.edges}
        return [i for i in range(len(self.nodes)) if i not in tails]

    @property
    def top(self) -> int:
        return next(i for i, p in enumerate(self.nodes)
                    if not p.shifted_vertices and all(x.key.is_trivial for x in p.members))

    @property
    def bottom(self) -> int:
        return next(i for i, p in enumerate(self.nodes) if not p.strings)


def mutation_graph(pairs: list[SupportTauTiltingPair]) -> list[tuple[int, int]]:
    """Unordered index pairs of pairs sharing all but one member."""
    groups = defaultdict(list)
    for idx, p in enumerate(pairs):
        for k in range(len(p.members)):
            groups[p.members[:k] + p.members[k + 1:]].append(idx)
    edges = set()
    for members in groups.values():
        for a in members:
            for b in members:
                if a < b:
                    edges.add((a, b))
    return sorted(edges)


def is_regular_connected(n_nodes: int, edges: list[tuple[int, int]], degree: int) -> bool:
    nb = defaultdict(set)
    for a, b in edges:
        nb[a].add(b)
        nb[b].add(a)
    if n_nodes == 0 or any(len(nb[i]) != degree for i in range(n_nodes)):
        return False
    seen, todo = {0}, deque([0])
    while todo:
        for w in nb[todo.popleft()]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return len(seen) == n_nodes


def orient(algebra: AlgebraPresentation, pairs: list[SupportTauTiltingPair], edges: list[tuple[int, int]],
           config: RigidityConfig = DEFAULT) -> list[tuple[int, int]]:
    out = []
    for a, b in edges:
        a_leq_b = order_leq(algebra, pairs[a], pairs[b], config)
        b_leq_a = order_leq(algebra, pairs[b], pairs[a], config)
        if a_leq_b == b_leq_a:
            raise AlgebraError("OrderInconsistent", f"neighbours {a} and {b} are not strictly comparable")
        out.append((b, a) if a_leq_b else (a, b))
    return sorted(out)


def build_hasse(algebra: AlgebraPresentation, config: EnumerationConfig = EnumerationConfig()) -> HassePoset:
    """Iterative deepening until the mutation graph is |A|-regular and connected."""
    length = config.initial_len or algebra.dimension
    n = len(algebra.vertices)
    while True:
        objs = rigid_objects(algebra, length, config.rigidity)
        pairs = support_tau_tilting_pairs(algebra, length, config.rigidity, config.threads, objs)
        edges = mutation_graph(pairs)
        if is_regular_connected(len(pairs), edges, n):
            return HassePoset(pairs, orient(algebra, pairs, edges, config.rigidity), length, objs)
        log.info("length %d gives %d pairs, not yet complete", length, len(pairs))
        if length >= config.cap:
            raise LengthCapExceeded(config.cap)
        length = min(2 * length, config.cap)


__all__ = [
    "CompletionCountMismatch", "LengthCapExceeded", "EnumerationConfig", "rigid_objects",
    "SupportTauTiltingPair", "compatibility_matrix", "support_tau_tilting_pairs", "order_leq",
    "mutation_completions", "HassePoset", "mutation_graph", "is_regular_connected", "orient", "build_hasse",
]
