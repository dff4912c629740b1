"""Hypothesis strategies for small random string algebras."""
from __future__ import annotations

from hypothesis import strategies as st

from stringtau.presentation import AlgebraError, Arrow, build_algebra

GREEK = "αβγδεζηθικλμ"


@st.composite
def string_algebras(draw, max_vertices: int = 3, max_arrows: int = 5):
    """A valid string algebra: random quiver with in/out degree at most 2, then
    length-2 relations that restore unique continuation, then random extras."""
    n = draw(st.integers(1, max_vertices))
    vertices = [str(i) for i in range(n)]
    out_deg, in_deg = [0] * n, [0] * n
    arrows = []
    for k in range(draw(st.integers(0, max_arrows))):
        s = draw(st.integers(0, n - 1))
        t = draw(st.integers(0, n - 1))
        if out_deg[s] < 2 and in_deg[t] < 2:
            out_deg[s] += 1
            in_deg[t] += 1
            arrows.append(Arrow(GREEK[len(arrows)], str(s), str(t)))
    relations = set()
    for a in arrows:
        succ = [b for b in arrows if b.source == a.target]
        if len(succ) == 2:
            relations.add((a.name, draw(st.sampled_from(succ)).name))
        for b in succ:
            if draw(st.integers(0, 3)) == 0:
                relations.add((a.name, b.name))
    for b in arrows:
        pred = [a for a in arrows if a.target == b.source and (a.name, b.name) not in relations]
        if len(pred) == 2:
            relations.add((draw(st.sampled_from(pred)).name, b.name))
    # longer relations kill cycles without touching the quadratic structure
    for _ in range(draw(st.integers(0, 2))):
        if not arrows:
            break
        word = [draw(st.sampled_from(arrows))]
        for _ in range(draw(st.integers(2, 3))):
            nxt = [b for b in arrows if b.source == word[-1].target and (word[-1].name, b.name) not in relations]
            if not nxt:
                break
            word.append(nxt[0])
        if len(word) >= 3:
            relations.add(tuple(a.name for a in word))
    try:
        return build_algebra("random", vertices, arrows, sorted(relations))
    except AlgebraError:
        # most failures are infinite-dimensional cycles; close every 2-step
        rels = sorted(relations | {(a.name, b.name) for a in arrows for b in arrows if a.target == b.source})
        return build_algebra("random", vertices, arrows, rels)
