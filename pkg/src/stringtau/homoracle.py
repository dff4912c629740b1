"""Homological verdicts by exact linear algebra, independent of the string predicates.

A two-term complex ``P^{-1} -> P^0`` of projectives is stored summand by summand.
``Hom(P_u, P_w)`` has the nonzero paths from ``w`` to ``u`` as a basis, and a
composite of basis maps is the concatenated path (or zero).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable

from .presentation import AlgebraPresentation
from .strings import (LOWER, UPPER, StringWord, enumerate_strings, factor_directed,
                      hook_closure, intermediate_points, letter_source, letter_target,
                      module_key, render, support_vertices)

Combination = dict[tuple[str, ...], int]


@dataclass(frozen=True)
class TwoTermComplex:
    """``differential[r][c]`` maps summand ``deg_minus1[c]`` into ``deg0[r]``."""

    deg_minus1: tuple[str, ...]
    deg0: tuple[str, ...]
    differential: tuple[tuple[tuple[tuple[tuple[str, ...], int], ...], ...], ...] = ()

    def entry(self, r: int, c: int) -> Combination:
        return dict(self.differential[r][c])

    @staticmethod
    def build(deg_minus1: Iterable[str], deg0: Iterable[str],
              entries: dict[tuple[int, int], Combination]) -> "TwoTermComplex":
        lo, up = tuple(deg_minus1), tuple(deg0)
        rows = tuple(tuple(tuple(sorted(entries.get((r, c), {}).items())) for c in range(len(lo)))
                     for r in range(len(up)))
        return TwoTermComplex(lo, up, rows)

    def is_radical(self) -> bool:
        return all(len(w) > 0 for row in self.differential for cell in row for w, k in cell if k)

    def __add__(self, other: "TwoTermComplex") -> "TwoTermComplex":
        entries = {}
        for r in range(len(self.deg0)):
            for c in range(len(self.deg_minus1)):
                entries[r, c] = self.entry(r, c)
        r0, c0 = len(self.deg0), len(self.deg_minus1)
        for r in range(len(other.deg0)):
            for c in range(len(other.deg_minus1)):
                entries[r0 + r, c0 + c] = other.entry(r, c)
        return TwoTermComplex.build(self.deg_minus1 + other.deg_minus1, self.deg0 + other.deg0, entries)


def presentation_complex(algebra: AlgebraPresentation, c: StringWord) -> TwoTermComplex:
    """The minimal presentation of M(C) read off the hook closure."""
    closure = hook_closure(algebra, c)
    points = intermediate_points(algebra, closure)
    if closure.is_trivial:
        return TwoTermComplex.build((), (closure.vertex,), {})
    up_idx = {p.index: n for n, p in enumerate(q for q in points if q.kind == UPPER)}
    lo_idx = {p.index: n for n, p in enumerate(q for q in points if q.kind == LOWER)}
    entries = {}
    for k, f in enumerate(factor_directed(closure), start=1):
        # factor k joins points k-1 and k, one of each kind
        u, l = (k - 1, k) if (k - 1) in up_idx else (k, k - 1)
        entries[up_idx[u], lo_idx[l]] = {f.bar(): 1}
    return TwoTermComplex.build((p.vertex for p in points if p.kind == LOWER),
                                (p.vertex for p in points if p.kind == UPPER), entries)


def shifted_projective(vertex: str) -> TwoTermComplex:
    """``P_e`` sitting in degree -1."""
    return TwoTermComplex.build((vertex,), (), {})


def stalk_projective(vertex: str) -> TwoTermComplex:
    """``P_e`` sitting in degree 0."""
    return TwoTermComplex.build((), (vertex,), {})


@dataclass
class LinearMapMatrix:
    rows: list[tuple]
    cols: list[tuple]
    entries: list[list[int]] = field(default_factory=list)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)


def _hom_labels(algebra: AlgebraPresentation, src: tuple[str, ...], dst: tuple[str, ...]):
    """Basis of Hom(⊕P_src, ⊕P_dst) as (src slot, dst slot, path)."""
    out = []
    for a, u in enumerate(src):
        for b, w in enumerate(dst):
            for p in algebra.path_basis.get((w, u), ()):
                out.append((a, b, p.arrows))
    return out


def _compose(algebra: AlgebraPresentation, first: tuple[str, ...], second: tuple[str, ...]) -> tuple[str, ...] | None:
    """Path for the map ``first ∘ second`` (apply ``second`` then ``first``)."""
    word = first + second
    if first and second and not algebra.is_nonzero(word):
        return None
    return word


def shift_hom_matrix(algebra: AlgebraPresentation, tc: TwoTermComplex, td: TwoTermComplex) -> LinearMapMatrix:
    """Matrix of (X, Y) ↦ Y∘d_C − d_D∘X into Hom(C^{-1}, D^0)."""
    rows = _hom_labels(algebra, tc.deg_minus1, td.deg0)
    row_index = {r: n for n, r in enumerate(rows)}
    x_basis = _hom_labels(algebra, tc.deg_minus1, td.deg_minus1)
    y_basis = _hom_labels(algebra, tc.deg0, td.deg0)
    cols = [("X",) + x for x in x_basis] + [("Y",) + y for y in y_basis]
    mat = [[0] * len(cols) for _ in rows]
    for j, (a, b, p) in enumerate(x_basis):
        # X: C^{-1}[a] -> D^{-1}[b]; then d_D from D^{-1}[b] to each D^0[r]
        for r in range(len(td.deg0)):
            for q, k in td.entry(r, b).items():
                w = _compose(algebra, q, p)
                if w is not None:
                    mat[row_index[(a, r, w)]][j] -= k
    off = len(x_basis)
    for j, (a, b, p) in enumerate(y_basis):
        # Y: C^0[a] -> D^0[b]; precomposed with d_C from each C^{-1}[c] to C^0[a]
        for c in range(len(tc.deg_minus1)):
            for q, k in tc.entry(a, c).items():
                w = _compose(algebra, p, q)
                if w is not None:
                    mat[row_index[(c, b, w)]][off + j] += k
    return LinearMapMatrix(rows, cols, mat)


def rank_bareiss(mat: list[list[int]]) -> int:
    """Rank over the rationals by dense fraction-free (Bareiss) elimination."""
    a = [list(r) for r in mat]
    if not a or not a[0]:
        return 0
    nrows, ncols = len(a), len(a[0])
    rank, prev = 0, 1
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if a[r][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][col]
        for r in range(rank + 1, nrows):
            arc = a[r][col]
            row, top = a[r], a[rank]
            for c in range(col, ncols):
                row[c] = (p * row[c] - arc * top[c]) // prev
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def _sparse_rows(mat: list[list[int]]) -> list[dict[int, int]]:
    return [r for r in ({c: x for c, x in enumerate(row) if x} for row in mat) if r]


def rank_exact(mat: list[list[int]]) -> int:
    """Rank over the rationals by sparse integer elimination.

    Rows are combined as ``p*r - a*top`` and divided by their content, so no
    fractions appear and entries stay small on these ±1 matrices.
    """
    rows = _sparse_rows(mat)
    rank = 0
    while rows:
        top = min(rows, key=len)
        rows.remove(top)
        col = min(top)
        p = top[col]
        rank += 1
        rest = []
        for row in rows:
            a = row.get(col)
            if a is not None:
                new = {c: p * row.get(c, 0) for c in row.keys() | top.keys()}
                for c, x in top.items():
                    new[c] -= a * x
                row = {c: x for c, x in new.items() if x}
                if row:
                    g = gcd(*row.values())
                    if g > 1:
                        row = {c: x // g for c, x in row.items()}
            if row:
                rest.append(row)
        rows = rest
    return rank


def rank_mod(mat: list[list[int]], prime: int) -> int:
    """Rank over the prime field with ``prime`` elements."""
    rows = [r for r in ({c: x % prime for c, x in row.items() if x % prime} for row in _sparse_rows(mat)) if r]
    rank = 0
    while rows:
        top = min(rows, key=len)
        rows.remove(top)
        col = min(top)
        inv = pow(top[col], -1, prime)
        rank += 1
        rest = []
        for row in rows:
            a = row.get(col)
            if a is not None:
                f = a * inv % prime
                row = dict(row)
                for c, x in top.items():
                    v = (row.get(c, 0) - f * x) % prime
                    if v:
                        row[c] = v
                    else:
                        row.pop(c, None)
            if row:
                rest.append(row)
        rows = rest
    return rank


def hom_shift_vanishes(algebra: AlgebraPresentation, tc: TwoTermComplex, td: TwoTermComplex) -> bool:
    """Hom(Tc, Td[1]) = 0, i.e. the matrix above is onto."""
    m = shift_hom_matrix(algebra, tc, td)
    return rank_exact(m.entries) == len(m.rows)


def oracle_support_vanishes(algebra: AlgebraPresentation, e: str, c: StringWord) -> bool:
    return hom_shift_vanishes(algebra, shifted_projective(e), presentation_complex(algebra, c))


def cokernel_dimension_vector(algebra: AlgebraPresentation, t: TwoTermComplex) -> tuple[int, ...]:
    """dim e_v H^0(T) for each vertex v, via Hom(P_v, -)."""
    dims = []
    for v in algebra.vertices:
        probe = stalk_projective(v)
        # columns: Hom(P_v, T^{-1}); rows: Hom(P_v, T^0); map x ↦ d∘x
        rows = _hom_labels(algebra, probe.deg0, t.deg0)
        cols = _hom_labels(algebra, probe.deg0, t.deg_minus1)
        index = {r: n for n, r in enumerate(rows)}
        mat = [[0] * len(cols) for _ in rows]
        for j, (_, b, p) in enumerate(cols):
            for r in range(len(t.deg0)):
                for q, k in t.entry(r, b).items():
                    w = _compose(algebra, q, p)
                    if w is not None:
                        mat[index[(0, r, w)]][j] += k
        dims.append(len(rows) - rank_exact(mat))
    return tuple(dims)


def string_dimension_vector(algebra: AlgebraPresentation, c: StringWord) -> tuple[int, ...]:
    """Vertex multiplicities along the walk of C."""
    dims = [0] * len(algebra.vertices)
    if c.is_trivial:
        walk = [c.vertex]
    else:
        walk = [letter_source(algebra, c.letters[0])] + [letter_target(algebra, x) for x in c.letters]
    for v in walk:
        dims[algebra.vertex_index[v]] += 1
    return tuple(dims)


@dataclass
class OracleReport:
    algebra: str
    max_len: int
    strings: int = 0
    rigidity_checks: int = 0
    support_checks: int = 0
    rank_checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        status = "ok" if self.ok else f"{len(self.failures)} discrepancies"
        return (f"{self.algebra}: {self.strings} strings, {self.rigidity_checks} rigidity pairs, "
                f"{self.support_checks} support pairs, {self.rank_checks} field checks: {status}")


def hooked_representatives(algebra: AlgebraPresentation, max_len: int) -> list[StringWord]:
    """One string per distinct canonical hook closure, from strings up to ``max_len``."""
    seen: dict[StringWord, StringWord] = {}
    for c in enumerate_strings(algebra, max_len):
        seen.setdefault(module_key(algebra, c), c)
    return list(seen.values())


def oracle_cross_check(algebra: AlgebraPresentation, max_len: int, fields: tuple[int, ...] = (),
                       config=None) -> OracleReport:
    """Compare the combinatorial predicates with the rank verdicts on every pair."""
    from .rigidity import DEFAULT, is_c_rigid
    config = config or DEFAULT
    report = OracleReport(algebra.name, max_len)
    reps = hooked_representatives(algebra, max_len)
    report.strings = len(reps)
    complexes = {}
    def show(c):
        return f"[{render(algebra, c)}]"

    for c in reps:
        t = presentation_complex(algebra, c)
        complexes[c] = t
        if not t.is_radical():
            report.failures.append(f"non-minimal presentation for {show(c)}")
        if cokernel_dimension_vector(algebra, t) != string_dimension_vector(algebra, c):
            report.failures.append(f"cokernel mismatch for {show(c)}")
    for c in reps:
        for d in reps:
            m = shift_hom_matrix(algebra, complexes[c], complexes[d])
            r = rank_exact(m.entries)
            for p in fields:
                report.rank_checks += 1
                if rank_mod(m.entries, p) != r:
                    report.failures.append(f"rank over F_{p} differs for ({show(c)}, {show(d)})")
            combo = is_c_rigid(algebra, c, d, config)
            report.rigidity_checks += 1
            if combo != (r == len(m.rows)):
                report.failures.append(f"rigidity ({show(c)}, {show(d)}): predicate {combo}, oracle {r == len(m.rows)}")
    for c in reps:
        supp = support_vertices(algebra, c)
        for e in algebra.vertices:
            report.support_checks += 1
            oracle = oracle_support_vanishes(algebra, e, c)
            if (e not in supp) != oracle:
                report.failures.append(f"support ({e}, {show(c)}): predicate {e not in supp}, oracle {oracle}")
    return report


__all__ = [
    "TwoTermComplex", "LinearMapMatrix", "presentation_complex", "shifted_projective", "stalk_projective",
    "shift_hom_matrix", "rank_exact", "rank_bareiss", "rank_mod", "hom_shift_vanishes", "oracle_support_vanishes",
    "cokernel_dimension_vector", "string_dimension_vector", "OracleReport", "hooked_representatives",
    "oracle_cross_check",
]
