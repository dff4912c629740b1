import pytest
from hypothesis import given, settings, strategies as st

from stringtau.presentation import build_algebra
from stringtau.strings import (DIRECT, INVERSE, LOWER, UPPER, IllegalWord, StringWord, canonical,
                               enumerate_strings, factor_directed, g_vector, hook_closure, intermediate_points,
                               make_string, module_key, parse_display, render, support_vertices, trivial)
from strategies import string_algebras

D, I = DIRECT, INVERSE


def s(alg, *letters):
    return make_string(alg, [(a, sign) for a, sign in letters])


@pytest.fixture
def k():
    return build_algebra("k", ["0"], [], [])


def test_make_string_valid(r2ab):
    p0 = s(r2ab, ("β", I), ("α", D), ("β", D))
    assert render(r2ab, p0) == "1 ←β— 0 —αβ→ 1"


@pytest.mark.parametrize("letters,clause", [
    ([("γ", D), ("β", D)], "relation-subword"),
    ([("α", D), ("α", I)], "inverse-adjacency"),
    ([("β", D), ("α", D)], "junction-mismatch"),
    ([("ω", D)], "unknown-arrow"),
])
def test_make_string_rejects(r2ab, letters, clause):
    with pytest.raises(IllegalWord) as err:
        make_string(r2ab, letters)
    assert err.value.clause == clause


def test_junction_rule(w2b):
    with pytest.raises(IllegalWord) as err:
        s(w2b, ("β", D), ("γ", I))
    assert err.value.clause == "junction-mismatch"


def test_canonical(r2ab):
    assert canonical(s(r2ab, ("β", D))) == canonical(s(r2ab, ("β", I)))
    xv = s(r2ab, ("γ", D), ("α", I), ("γ", I))
    assert canonical(xv) == canonical(xv.inverse())
    assert canonical(trivial("0", INVERSE)) == trivial("0", DIRECT)


def test_factor_directed(r2ab):
    f = factor_directed(s(r2ab, ("β", I), ("α", D), ("β", D)))
    assert [x.letters for x in f] == [(("β", I),), (("α", D), ("β", D))]
    f = factor_directed(s(r2ab, ("γ", D), ("α", I), ("γ", I)))
    assert [x.bar() for x in f] == [("γ",), ("γ", "α")]
    assert factor_directed(trivial("0")) == [trivial("0")]


def test_hook_closure_examples(r2ab):
    x = s(r2ab, ("α", D))
    assert canonical(hook_closure(r2ab, x)) == canonical(s(r2ab, ("β", I), ("α", D), ("β", D)))
    assert hook_closure(r2ab, s(r2ab, ("γ", D), ("α", D))) == trivial("1")
    assert canonical(hook_closure(r2ab, s(r2ab, ("α", D), ("β", D)))) == canonical(s(r2ab, ("β", D)))


def test_hook_of_simple_presents_simple(r2ab):
    # S_0 is presented by P_0 ⊕ P_1 -> P_0 with entries α and β
    h = hook_closure(r2ab, trivial("0"))
    assert canonical(h) == canonical(s(r2ab, ("α", I), ("β", D)))


def test_intermediate_points(r2ab, w2b):
    pts = intermediate_points(r2ab, s(r2ab, ("β", I), ("α", D), ("β", D)))
    assert [(p.index, p.vertex, p.kind) for p in pts] == [(0, "1", LOWER), (1, "0", UPPER), (2, "1", LOWER)]
    assert [(p.vertex, p.kind) for p in intermediate_points(r2ab, trivial("0"))] == [("0", UPPER)]
    assert [(p.vertex, p.kind) for p in intermediate_points(w2b, s(w2b, ("β", D)))] == [("0", UPPER), ("1", LOWER)]


def test_g_vectors(r2ab, k):
    assert g_vector(r2ab, s(r2ab, ("α", D))) == (1, -2)
    assert g_vector(r2ab, s(r2ab, ("α", D), ("β", D))) == (1, -1)
    assert g_vector(k, trivial("0")) == (1,)


def test_support(r2ab, k):
    assert support_vertices(r2ab, s(r2ab, ("α", D))) == {"0"}
    assert support_vertices(k, trivial("0")) == {"0"}


def test_enumerate_strings(r2ab, w2b, k):
    assert len(enumerate_strings(w2b, 3)) == 4
    assert [render(r2ab, c) for c in enumerate_strings(r2ab, 1)] == ["0", "1", "0 —α→ 0", "0 —β→ 1", "1 —γ→ 0"]
    assert enumerate_strings(k, 5) == [trivial("0")]


def test_enumeration_counts_stabilise(r2ab):
    assert [len(enumerate_strings(r2ab, n)) for n in range(1, 9)] == [5, 9, 12, 12, 12, 12, 12, 12]


def test_render_parse_round_trip(r2ab):
    for c in enumerate_strings(r2ab, 6):
        assert parse_display(r2ab, render(r2ab, c)) == c
    assert parse_display(r2ab, "0 -αβ-> 1") == s(r2ab, ("α", D), ("β", D))
    assert parse_display(r2ab, "1 <-β- 0") == s(r2ab, ("β", I))


def test_multi_letter_names_render_with_dots():
    alg = build_algebra("", ["0", "1", "2"], [("ab", "0", "1"), ("cd", "1", "2")], [])
    c = make_string(alg, [("ab", D), ("cd", D)])
    assert render(alg, c) == "0 —ab.cd→ 2"
    assert parse_display(alg, render(alg, c)) == c


@settings(max_examples=60)
@given(string_algebras(max_arrows=4), st.integers(0, 5))
def test_string_invariants(alg, max_len):
    reach = {v: {p.target for p in alg.paths_from.get(v, ())} for v in alg.vertices}
    for c in enumerate_strings(alg, max_len):
        h = hook_closure(alg, c)
        assert canonical(hook_closure(alg, c.inverse())) == canonical(h)
        pts = intermediate_points(alg, h)
        g = [0] * len(alg.vertices)
        for p in pts:
            g[alg.vertex_index[p.vertex]] += 1 if p.kind == UPPER else -1
        assert g_vector(alg, c) == g_vector(alg, c.inverse()) == tuple(g)
        kinds = [p.kind for p in pts]
        assert all(a != b for a, b in zip(kinds, kinds[1:]))
        assert kinds.count(UPPER) - kinds.count(LOWER) in (-1, 0, 1)
        bound = set().union(*(reach[p.vertex] for p in pts))
        assert support_vertices(alg, c) <= bound
        assert module_key(alg, c) == module_key(alg, c.inverse())
        assert canonical(c) in (c, c.inverse())


def test_string_word_basics():
    c = StringWord((("α", D), ("β", I)))
    assert c.inverse().inverse() == c
    assert len(c) == 2 and not c.is_trivial
    with pytest.raises(ValueError):
        _ = c.sign
