import json
from itertools import product

import pytest
from hypothesis import given, settings

from stringtau.presentation import (AlgebraError, Arrow, ParseError, Quiver, build_algebra, parse_algebra,
                                    validate_string_algebra)
from strategies import string_algebras

W2B = {"name": "W(2B)", "vertices": ["0", "1"],
       "arrows": [{"name": "β", "source": "0", "target": "1"}, {"name": "γ", "source": "1", "target": "0"}],
       "relations": [["β", "γ"], ["γ", "β"]]}


def codes(vertices, arrows, relations):
    return validate_string_algebra(Quiver(tuple(vertices), tuple(Arrow(*a) for a in arrows)), relations).codes


def test_parse_w2b():
    alg = parse_algebra(json.dumps(W2B))
    assert alg.vertices == ("0", "1")
    assert alg.dimension == 4


def test_single_vertex_has_dimension_one():
    alg = parse_algebra('{"vertices": ["0"], "arrows": [], "relations": []}')
    assert alg.dimension == 1
    assert alg.hom_basis("0", "0")[0].is_trivial


def test_loop_with_square_zero():
    alg = build_algebra("", ["0"], [("α", "0", "0")], [["α", "α"]])
    assert alg.dimension == 2


@pytest.mark.parametrize("vertices,arrows,relations,code", [
    (["0"], [("α", "0", "0")], [], "InfiniteDimensional"),
    (["0", "1"], [("β", "0", "1")], [["β"]], "RelationTooShort"),
    (["0", "1"], [("a", "0", "1"), ("b", "0", "1"), ("c", "0", "1")], [], "TooManyArrowsOut"),
    (["0", "1", "2"], [("a", "0", "1"), ("b", "0", "1"), ("c", "2", "1")], [], "TooManyArrowsIn"),
    (["0", "1", "2"], [("a", "0", "1"), ("b", "1", "2"), ("c", "1", "2")], [], "ContinuationNotUnique"),
    (["0", "1"], [("a", "0", "1")], [["a", "z"]], "UnknownArrow"),
    (["0", "1"], [("a", "0", "1"), ("b", "0", "1")], [["a", "b"]], "RelationNotComposable"),
    (["0", "0"], [], [], "DuplicateVertex"),
])
def test_validation_codes(vertices, arrows, relations, code):
    assert code in codes(vertices, arrows, relations)
    with pytest.raises(AlgebraError) as err:
        build_algebra("", vertices, arrows, relations)
    assert err.value.code in codes(vertices, arrows, relations)


def test_every_violation_is_reported():
    found = codes(["0", "1"], [("a", "0", "1"), ("b", "0", "1"), ("c", "0", "1")], [])
    assert {"TooManyArrowsOut", "TooManyArrowsIn"} <= set(found)


@pytest.mark.parametrize("text,code", [
    ("{", "SyntaxError"),
    ('{"vertices": [], "arrows": [], "relations": [], "extra": 1}', "UnknownField"),
    ('{"vertices": ["0"], "arrows": []}', "MissingField"),
    ('{"vertices": ["0"], "arrows": [{"name": "a"}], "relations": []}', "SyntaxError"),
])
def test_parse_errors(text, code):
    with pytest.raises(ParseError) as err:
        parse_algebra(text)
    assert err.value.code == code


def test_r2ab_path_basis(r2ab):
    assert [str(p) for p in r2ab.path_basis[("0", "0")]] == ["e_0", "α"]
    assert [str(p) for p in r2ab.path_basis[("0", "1")]] == ["β", "αβ"]
    assert [str(p) for p in r2ab.hom_basis("0", "0")] == ["e_0", "α"]


def test_hom_basis(w2b):
    assert [str(p) for p in w2b.hom_basis("0", "1")] == ["β"]
    with pytest.raises(AlgebraError):
        w2b.hom_basis("0", "9")


def test_multiply_respects_relations(r2ab):
    gamma, alpha, beta = (r2ab.path([a]) for a in "γαβ")
    ga = r2ab.multiply(gamma, alpha)
    assert str(ga) == "γα"
    assert r2ab.multiply(ga, beta) is None
    assert r2ab.multiply(beta, beta) is None


def test_round_trip(r2ab):
    again = parse_algebra(json.dumps(r2ab.to_dict()))
    assert again == r2ab


def _brute_force_dimension(alg):
    """Count relation-free words by trying every arrow word up to a safe length."""
    names = [a.name for a in alg.arrows]
    count = len(alg.vertices)
    for n in range(1, alg.longest_path + 2):
        count += sum(alg.is_nonzero(w) for w in product(names, repeat=n))
    return count


@settings(max_examples=60)
@given(string_algebras(max_arrows=4))
def test_path_basis_invariants(alg):
    rels = alg.relations
    for p in alg.all_paths:
        w = p.arrows
        assert not any(w[i:j] in rels for i in range(len(w)) for j in range(i + 2, len(w) + 1))
        right = [a for a in alg.arrows if p.arrows and alg.is_nonzero(w + (a.name,))]
        left = [a for a in alg.arrows if p.arrows and alg.is_nonzero((a.name,) + w)]
        assert len(right) <= 1 and len(left) <= 1
    assert alg.dimension == _brute_force_dimension(alg)
