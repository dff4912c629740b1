"""Combinatorial rigidity: when is D C-rigid, and which rigid objects are compatible."""
from __future__ import annotations

from dataclasses import dataclass, field

from .presentation import AlgebraPresentation
from .strings import (LOWER, UPPER, HookData, StringWord, cached_hook_data,
                      support_vertices)


@dataclass(frozen=True)
class RigidityConfig:
    # Coincidences at index 0 of either hook closure are required to match the
    # homological verdicts; False restricts to indices 1..m and 1..n.
    include_index_zero: bool = True


DEFAULT = RigidityConfig()


def _starts(w: tuple[str, ...], b: tuple[str, ...]) -> bool:
    return w[:len(b)] == b


def _ends(w: tuple[str, ...], b: tuple[str, ...]) -> bool:
    return len(w) >= len(b) and w[len(w) - len(b):] == b


def _maps_factor(algebra: AlgebraPresentation, c: HookData, d: HookData) -> bool:
    """Every direct string from an upper point of D' to a lower point of C' factors
    through an adjacent directed string at one of its ends."""
    for lo in c.points:
        if lo.kind != LOWER:
            continue
        c_bars = c.bars_at(lo.index)
        for up in d.points:
            if up.kind != UPPER:
                continue
            d_bars = d.bars_at(up.index)
            for w in algebra.path_basis.get((up.vertex, lo.vertex), ()):
                if not (any(_starts(w.arrows, b) for b in d_bars) or any(_ends(w.arrows, b) for b in c_bars)):
                    return False
    return True


def _orientation_constraints(c: HookData, i: int, d: HookData, j: int) -> tuple[bool, bool]:
    """(satisfied, non_vacuous) for the anchoring rule at the coincidence (i, j)."""
    m, n = c.m, d.m
    checked = False
    if i + 1 <= m and j + 1 <= n:
        checked = True
        if c.factors[i].letters[0] != d.factors[j].letters[0]:
            return False, True
    if i > 0 and j > 0:
        checked = True
        if c.factors[i - 1].letters[-1] != d.factors[j - 1].letters[-1]:
            return False, True
    return True, checked


def _window_ok(c: HookData, i: int, d: HookData, j: int) -> bool:
    """Whether the matching run from one oriented coincidence ends in an allowed way, in either direction."""
    m, n = c.m, d.m
    for sigma in (1, -1):
        t = 1 if sigma == 1 else 0
        e = 0
        while True:
            ni, nj = i + sigma * (e + 1), j + sigma * (e + 1)
            if not (0 <= ni <= m and 0 <= nj <= n):
                break
            if c.factors[i + sigma * e + t - 1] != d.factors[j + sigma * e + t - 1]:
                break
            e += 1
        k, kd = i + sigma * e, j + sigma * e
        c_rim = i + sigma * (e + 1) in (-1, m + 1)
        d_rim = j + sigma * (e + 1) in (-1, n + 1)
        kind = c.points[k].kind
        if kind == UPPER:
            if c_rim:
                return True
            if not d_rim:
                cb = c.factors[k + t - 1].bar()
                db = d.factors[kd + t - 1].bar()
                if len(cb) > len(db) and _starts(cb, db):
                    return True
        else:
            if d_rim:
                return True
            if not c_rim:
                cb = c.factors[k + t - 1].bar()
                db = d.factors[kd + t - 1].bar()
                if len(db) > len(cb) and _ends(db, cb):
                    return True
    return False


def _coincidences_ok(c: HookData, d: HookData, config: RigidityConfig) -> bool:
    lo = 0 if config.include_index_zero else 1
    d_inv = d.inverse()
    n = d.m
    for pc in c.points[lo:]:
        for pd in d.points[lo:]:
            if pc.vertex != pd.vertex or pc.kind != pd.kind:
                continue
            i, j = pc.index, pd.index
            options = []
            for dd, jj in ((d, j), (d_inv, n - j)):
                sat, checked = _orientation_constraints(c, i, dd, jj)
                if sat:
                    options.append((checked, dd, jj))
            if any(checked for checked, _, _ in options):
                options = [o for o in options if o[0]]
            if not any(_window_ok(c, i, dd, jj) for _, dd, jj in options):
                return False
    return True


def is_c_rigid(algebra: AlgebraPresentation, c: StringWord, d: StringWord,
               config: RigidityConfig = DEFAULT) -> bool:
    """True iff D is C-rigid, i.e. Hom(T(C), T(D)[1]) vanishes."""
    hc = cached_hook_data(algebra, c)
    hd = cached_hook_data(algebra, d)
    return _maps_factor(algebra, hc, hd) and _coincidences_ok(hc, hd, config)


def is_self_rigid(algebra: AlgebraPresentation, c: StringWord, config: RigidityConfig = DEFAULT) -> bool:
    return is_c_rigid(algebra, c, c, config)


@dataclass(frozen=True)
class RigidObject:
    """A self-rigid string class (``key`` a canonical hook closure) or a shifted projective."""

    kind: str
    key: StringWord | None
    vertex: str | None
    g: tuple[int, ...]
    support: frozenset[str] = field(default=frozenset(), compare=False)
    representative: StringWord | None = field(default=None, compare=False)

    STRING = "string"
    SHIFTED = "shifted"

    @property
    def is_shifted(self) -> bool:
        return self.kind == self.SHIFTED

    def sort_key(self):
        return (tuple(-x for x in self.g), self.kind)


def compatible(algebra: AlgebraPresentation, x: RigidObject, y: RigidObject,
               config: RigidityConfig = DEFAULT) -> bool:
    if x.is_shifted and y.is_shifted:
        return True
    if x.is_shifted:
        x, y = y, x
    if y.is_shifted:
        return y.vertex not in x.support
    cx, cy = x.representative, y.representative
    return is_c_rigid(algebra, cx, cy, config) and is_c_rigid(algebra, cy, cx, config)


def string_object(algebra: AlgebraPresentation, c: StringWord) -> RigidObject:
    from .strings import g_vector, module_key
    return RigidObject(RigidObject.STRING, module_key(algebra, c), None, g_vector(algebra, c),
                       support_vertices(algebra, c), c)


def shifted_object(algebra: AlgebraPresentation, vertex: str) -> RigidObject:
    g = [0] * len(algebra.vertices)
    g[algebra.vertex_index[vertex]] = -1
    return RigidObject(RigidObject.SHIFTED, None, vertex, tuple(g))
