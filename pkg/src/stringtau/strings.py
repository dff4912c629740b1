"""Strings over a string algebra and the combinatorics built on them.

A letter is a pair ``(arrow_name, sign)`` with sign ``+1`` for the arrow and
``-1`` for its formal inverse.  A string is either a nonempty reduced walk of
letters or a trivial string sitting at a vertex.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .presentation import AlgebraError, AlgebraPresentation

DIRECT = 1
INVERSE = -1

Letter = tuple[str, int]


class IllegalWord(AlgebraError):
    def __init__(self, clause: str, message: str = ""):
        self.clause = clause
        super().__init__("IllegalWord", f"{clause}: {message}" if message else clause)


@dataclass(frozen=True)
class StringWord:
    """``letters`` is empty exactly for trivial strings, which then carry ``vertex``."""

    letters: tuple[Letter, ...] = ()
    vertex: str | None = None
    polarity: int = DIRECT

    @property
    def is_trivial(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def inverse(self) -> "StringWord":
        if self.is_trivial:
            return StringWord((), self.vertex, -self.polarity)
        return StringWord(tuple((a, -s) for a, s in reversed(self.letters)))

    @property
    def sign(self) -> int:
        """Orientation of a directed (or trivial) string."""
        if self.is_trivial:
            return self.polarity
        signs = {s for _, s in self.letters}
        if len(signs) != 1:
            raise ValueError("string is not directed")
        return signs.pop()

    def bar(self) -> tuple[str, ...]:
        """Arrow names of the direct version of a directed string."""
        if self.sign == DIRECT:
            return tuple(a for a, _ in self.letters)
        return tuple(a for a, _ in reversed(self.letters))

    def sort_key(self):
        if self.is_trivial:
            return (0, (), self.vertex)
        return (len(self.letters), tuple((a, 0 if s == DIRECT else 1) for a, s in self.letters), "")

    def __add__(self, other: "StringWord") -> "StringWord":
        if self.is_trivial:
            return other
        if other.is_trivial:
            return self
        return StringWord(self.letters + other.letters)


def trivial(vertex: str, polarity: int = DIRECT) -> StringWord:
    return StringWord((), vertex, polarity)


def letter_source(algebra: AlgebraPresentation, letter: Letter) -> str:
    arrow = algebra.arrow(letter[0])
    return arrow.source if letter[1] == DIRECT else arrow.target


def letter_target(algebra: AlgebraPresentation, letter: Letter) -> str:
    arrow = algebra.arrow(letter[0])
    return arrow.target if letter[1] == DIRECT else arrow.source


def source(algebra: AlgebraPresentation, c: StringWord) -> str:
    return c.vertex if c.is_trivial else letter_source(algebra, c.letters[0])


def target(algebra: AlgebraPresentation, c: StringWord) -> str:
    return c.vertex if c.is_trivial else letter_target(algebra, c.letters[-1])


def _runs(letters: Sequence[Letter]) -> list[tuple[Letter, ...]]:
    runs: list[list[Letter]] = []
    for letter in letters:
        if runs and runs[-1][-1][1] == letter[1]:
            runs[-1].append(letter)
        else:
            runs.append([letter])
    return [tuple(r) for r in runs]


def check_word(algebra: AlgebraPresentation, letters: Sequence[Letter]) -> str | None:
    """Return the violated clause for a letter word, or None if it is a string."""
    amap = algebra.quiver.arrow_map
    for a, s in letters:
        if a not in amap:
            return "unknown-arrow"
        if s not in (DIRECT, INVERSE):
            return "bad-orientation"
    for x, y in zip(letters, letters[1:]):
        if x[0] == y[0] and x[1] == -y[1]:
            return "inverse-adjacency"
        if letter_target(algebra, x) != letter_source(algebra, y):
            return "junction-mismatch"
    for run in _runs(letters):
        word = tuple(a for a, _ in run) if run[0][1] == DIRECT else tuple(a for a, _ in reversed(run))
        if not algebra.is_nonzero(word):
            return "relation-subword"
    return None


def is_string(algebra: AlgebraPresentation, letters: Sequence[Letter]) -> bool:
    return bool(letters) and check_word(algebra, letters) is None


def make_string(algebra: AlgebraPresentation, word: Iterable[Letter] | str, polarity: int = DIRECT) -> StringWord:
    """Build a validated string from letters, or a trivial string from a vertex id."""
    if isinstance(word, str):
        if word not in algebra.vertex_index:
            raise IllegalWord("unknown-vertex", word)
        return trivial(word, polarity)
    letters = tuple((a, int(s)) for a, s in word)
    if not letters:
        raise IllegalWord("empty-word", "use a vertex id for trivial strings")
    clause = check_word(algebra, letters)
    if clause is not None:
        raise IllegalWord(clause, repr(letters))
    return StringWord(letters)


def canonical(c: StringWord) -> StringWord:
    """Representative of ``{C, C^-1}``; trivial strings lose their polarity."""
    if c.is_trivial:
        return trivial(c.vertex)
    inv = c.inverse()
    return c if c.sort_key() <= inv.sort_key() else inv


def factor_directed(c: StringWord) -> list[StringWord]:
    """Maximal directed factors, alternating direct/inverse; ``[C]`` for a trivial C."""
    if c.is_trivial:
        return [c]
    return [StringWord(run) for run in _runs(c.letters)]


# hook closure

def _loose_left(algebra: AlgebraPresentation, first: StringWord) -> bool:
    if first.sign != INVERSE:
        return False
    path = first.bar()
    return not any(algebra.is_nonzero(path + (a.name,)) for a in algebra.arrows)


def _loose_right(algebra: AlgebraPresentation, last: StringWord) -> bool:
    if last.sign != DIRECT:
        return False
    path = last.bar()
    return not any(algebra.is_nonzero(path + (a.name,)) for a in algebra.arrows)


def _single(options: list, what: str):
    if len(options) > 1:
        raise AlgebraError("ContinuationNotUnique", what)
    return options[0] if options else None


def left_hook(algebra: AlgebraPresentation, c: StringWord) -> StringWord:
    """The one-sided operation at the start of a nontrivial string."""
    factors = factor_directed(c)
    first = factors[0]
    if _loose_left(algebra, first):
        if len(factors) == 1:
            return trivial(target(algebra, first))
        return StringWord(tuple(x for f in factors[1:] for x in f.letters))
    ext = _single([a.name for a in algebra.arrows if is_string(algebra, ((a.name, INVERSE),) + c.letters)],
                  "left extension")
    return StringWord(((ext, INVERSE),) + c.letters) if ext else c


def right_hook(algebra: AlgebraPresentation, c: StringWord) -> StringWord:
    """The one-sided operation at the end of a nontrivial string."""
    factors = factor_directed(c)
    last = factors[-1]
    if _loose_right(algebra, last):
        if len(factors) == 1:
            return trivial(source(algebra, last))
        return StringWord(tuple(x for f in factors[:-1] for x in f.letters))
    ext = _single([a.name for a in algebra.arrows if is_string(algebra, c.letters + ((a.name, DIRECT),))],
                  "right extension")
    return StringWord(c.letters + ((ext, DIRECT),)) if ext else c


def designated_arrow(algebra: AlgebraPresentation, vertex: str) -> str | None:
    outs = sorted(a.name for a in algebra.quiver.out_arrows(vertex))
    return outs[0] if outs else None


def hook_closure(algebra: AlgebraPresentation, c: StringWord) -> StringWord:
    """The string whose factors give the minimal projective presentation of M(C)."""
    if c.is_trivial:
        a = designated_arrow(algebra, c.vertex)
        if a is None:
            return trivial(c.vertex)
        return right_hook(algebra, StringWord(((a, INVERSE),)))
    factors = factor_directed(c)
    if len(factors) == 1 and _loose_left(algebra, factors[0]):
        return left_hook(algebra, right_hook(algebra, c))
    if len(factors) == 1 and _loose_right(algebra, factors[0]):
        return right_hook(algebra, left_hook(algebra, c))
    return right_hook(algebra, left_hook(algebra, c))


def module_key(algebra: AlgebraPresentation, c: StringWord) -> StringWord:
    """Identity of the presented module: the canonical hook closure."""
    return canonical(hook_closure(algebra, c))


# intermediate points and g-vectors

UPPER = "upper"
LOWER = "lower"


@dataclass(frozen=True)
class IntermediatePoint:
    index: int
    vertex: str
    kind: str


def intermediate_points(algebra: AlgebraPresentation, c: StringWord) -> list[IntermediatePoint]:
    if c.is_trivial:
        return [IntermediatePoint(0, c.vertex, UPPER)]
    factors = factor_directed(c)
    m = len(factors)
    points = [IntermediatePoint(0, source(algebra, factors[0]),
                                UPPER if factors[0].sign == DIRECT else LOWER)]
    for k in range(1, m + 1):
        before = factors[k - 1].sign
        points.append(IntermediatePoint(k, target(algebra, factors[k - 1]),
                                        UPPER if before == INVERSE else LOWER))
    return points


def adjacent_bars(factors: list[StringWord], m: int, k: int) -> list[tuple[str, ...]]:
    """Direct versions of the directed factors adjacent to point k."""
    out = []
    if k > 0:
        out.append(factors[k - 1].bar())
    if k < m:
        out.append(factors[k].bar())
    return out


@dataclass(frozen=True)
class HookData:
    """Everything the predicates need about ``_PC_P``, computed once."""

    closure: StringWord
    factors: tuple[StringWord, ...]
    points: tuple[IntermediatePoint, ...]

    @property
    def m(self) -> int:
        return 0 if self.closure.is_trivial else len(self.factors)

    def bars_at(self, k: int) -> list[tuple[str, ...]]:
        return adjacent_bars(list(self.factors), self.m, k)

    def inverse(self) -> "HookData":
        inv = self.closure.inverse()
        m = self.m
        points = tuple(IntermediatePoint(m - p.index, p.vertex, p.kind) for p in reversed(self.points))
        factors = tuple(f.inverse() for f in reversed(self.factors)) if m else self.factors
        return HookData(inv, factors, points)


def hook_data(algebra: AlgebraPresentation, c: StringWord) -> HookData:
    closure = hook_closure(algebra, c)
    factors = () if closure.is_trivial else tuple(factor_directed(closure))
    return HookData(closure, factors, tuple(intermediate_points(algebra, closure)))


def g_vector(algebra: AlgebraPresentation, c: StringWord) -> tuple[int, ...]:
    """Upper points of the hook closure count +1, lower points -1."""
    g = [0] * len(algebra.vertices)
    for p in intermediate_points(algebra, hook_closure(algebra, c)):
        g[algebra.vertex_index[p.vertex]] += 1 if p.kind == UPPER else -1
    return tuple(g)


def support_vertices(algebra: AlgebraPresentation, c: StringWord) -> frozenset[str]:
    data = hook_data(algebra, c)
    m = data.m
    support = set()
    for p in data.points:
        if p.kind == LOWER and 0 < p.index < m:
            support.add(p.vertex)
        if p.kind == UPPER:
            bars = data.bars_at(p.index)
            for w in algebra.paths_from.get(p.vertex, ()):
                if not any(w.arrows[:len(b)] == b for b in bars):
                    support.add(w.target)
    return frozenset(support)


def enumerate_strings(algebra: AlgebraPresentation, max_len: int) -> list[StringWord]:
    """Canonical representatives of all strings of length at most ``max_len``."""
    found = [trivial(v) for v in algebra.vertices]
    letters = [(a.name, s) for a in algebra.arrows for s in (DIRECT, INVERSE)]

    def extend(word: tuple[Letter, ...], run_start: int):
        w = StringWord(word)
        if w.sort_key() <= w.inverse().sort_key():
            found.append(w)
        if len(word) >= max_len:
            return
        last = word[-1]
        t = letter_target(algebra, last)
        for x in letters:
            if x[0] == last[0] and x[1] == -last[1]:
                continue
            if letter_source(algebra, x) != t:
                continue
            start = run_start if x[1] == last[1] else len(word)
            run = word[start:] + (x,)
            path = tuple(a for a, _ in run) if x[1] == DIRECT else tuple(a for a, _ in reversed(run))
            if algebra.is_nonzero(path):
                extend(word + (x,), start)

    if max_len >= 1:
        for x in letters:
            extend((x,), 0)
    return sorted(found, key=StringWord.sort_key)


# rendering

def _label(names: Sequence[str], algebra: AlgebraPresentation) -> str:
    sep = "" if all(len(a.name) == 1 for a in algebra.arrows) else "."
    return sep.join(names)


def render(algebra: AlgebraPresentation, c: StringWord) -> str:
    """Display such as ``1 ←β— 0 —αβ→ 1``."""
    if c.is_trivial:
        return c.vertex
    factors = factor_directed(c)
    parts = [source(algebra, factors[0])]
    for f in factors:
        lab = _label(f.bar(), algebra)
        parts.append(f"—{lab}→" if f.sign == DIRECT else f"←{lab}—")
        parts.append(target(algebra, f))
    return " ".join(parts)


def _split_label(algebra: AlgebraPresentation, label: str) -> list[str]:
    if "." in label:
        return label.split(".")
    names = algebra.quiver.arrow_map
    if label in names:
        return [label]
    if all(ch in names for ch in label):
        return list(label)
    raise IllegalWord("unknown-arrow", label)


def parse_display(algebra: AlgebraPresentation, text: str) -> StringWord:
    """Inverse of ``render``; also accepts ASCII ``-x->`` and ``<-x-`` segments."""
    toks = text.split()
    if len(toks) == 1:
        return make_string(algebra, toks[0])
    if len(toks) % 2 == 0:
        raise IllegalWord("bad-display", text)
    letters: list[Letter] = []
    for k in range(1, len(toks), 2):
        seg, left, right = toks[k], toks[k - 1], toks[k + 1]
        if seg.startswith("—") and seg.endswith("→") or seg.startswith("-") and seg.endswith("->"):
            lab = seg.strip("—→").removesuffix(">").strip("-")
            names = _split_label(algebra, lab)
            piece = [(a, DIRECT) for a in names]
        elif seg.startswith("←") and seg.endswith("—") or seg.startswith("<-") and seg.endswith("-"):
            lab = seg.strip("←—").removeprefix("<").strip("-")
            names = _split_label(algebra, lab)
            piece = [(a, INVERSE) for a in reversed(names)]
        else:
            raise IllegalWord("bad-display", seg)
        w = make_string(algebra, piece)
        if source(algebra, w) != left or target(algebra, w) != right:
            raise IllegalWord("junction-mismatch", seg)
        letters.extend(piece)
    return make_string(algebra, letters)


@lru_cache(maxsize=None)
def _cached_hook(algebra: AlgebraPresentation, c: StringWord) -> HookData:
    return hook_data(algebra, c)


def cached_hook_data(algebra: AlgebraPresentation, c: StringWord) -> HookData:
    return _cached_hook(algebra, c)

