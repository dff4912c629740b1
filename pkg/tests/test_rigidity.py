import pytest
from hypothesis import given, settings

from stringtau.catalog import NAMES, catalog_algebra, golden_results
from stringtau.presentation import build_algebra
from stringtau.rigidity import (RigidityConfig, compatible, is_c_rigid, is_self_rigid, shifted_object,
                                string_object)
from stringtau.strings import DIRECT as D, INVERSE as I, make_string, parse_display, support_vertices, trivial
from strategies import string_algebras


@pytest.fixture
def fig1(r2ab):
    def mk(*letters):
        return make_string(r2ab, letters)
    return {
        "P0": mk(("β", I), ("α", D), ("β", D)),
        "P1": mk(("γ", D), ("α", D)),
        "X": mk(("α", D)),
        "Xv": mk(("γ", D), ("α", I), ("γ", I)),
        "Y": mk(("α", D), ("β", D)),
        "Yv": trivial("1"),
    }


def test_fig1_examples(r2ab, fig1):
    assert is_c_rigid(r2ab, fig1["X"], fig1["Y"]) and is_c_rigid(r2ab, fig1["Y"], fig1["X"])
    assert is_c_rigid(r2ab, fig1["P0"], fig1["X"])
    assert not is_c_rigid(r2ab, fig1["X"], fig1["P0"])
    assert not is_c_rigid(r2ab, fig1["X"], fig1["Xv"])


def test_self_rigidity(r2ab, fig1):
    assert all(is_self_rigid(r2ab, c) for c in fig1.values())
    assert not is_self_rigid(r2ab, trivial("0"))
    assert is_self_rigid(build_algebra("k", ["0"], [], []), trivial("0"))


def test_compatible(r2ab, fig1):
    x, y = string_object(r2ab, fig1["X"]), string_object(r2ab, fig1["Y"])
    p1v, p0v = shifted_object(r2ab, "1"), shifted_object(r2ab, "0")
    assert compatible(r2ab, x, y) and compatible(r2ab, y, x)
    assert compatible(r2ab, x, p1v) and compatible(r2ab, p1v, x)
    assert not compatible(r2ab, x, p0v)
    assert compatible(r2ab, p0v, p1v)
    assert compatible(r2ab, x, x)


def test_shifted_object_g(r2ab):
    assert shifted_object(r2ab, "1").g == (0, -1)


@pytest.mark.parametrize("name", NAMES)
def test_rigidity_lists_match_reference(name):
    """D in C's list iff D is C-rigid; shifted P_e listed iff e is off the support."""
    alg, gold = catalog_algebra(name), golden_results(name)
    strings = {r.name: parse_display(alg, r.display) for r in gold.rigid}
    for row in gold.rigid:
        c = strings[row.name]
        listed = {n for n in row.compatible if n in strings}
        assert listed == {n for n, d in strings.items() if n != row.name and is_c_rigid(alg, c, d)}
        shifted = {n for n in row.compatible if n not in strings}
        assert shifted == {f"P{e}v" for e in alg.vertices if e not in support_vertices(alg, c)}


@pytest.mark.parametrize("name", NAMES)
def test_literal_index_range_is_weaker(name):
    """Dropping index-0 coincidences never rejects more pairs than the default."""
    alg, gold = catalog_algebra(name), golden_results(name)
    strings = [parse_display(alg, r.display) for r in gold.rigid]
    literal = RigidityConfig(include_index_zero=False)
    for c in strings:
        for d in strings:
            if is_c_rigid(alg, c, d):
                assert is_c_rigid(alg, c, d, literal)


def test_literal_index_range_contradicts_reference():
    # at least one non-rigid reference pair is accepted by the literal range
    alg, gold = catalog_algebra("R(3ABD)"), golden_results("R(3ABD)")
    strings = {r.name: parse_display(alg, r.display) for r in gold.rigid}
    literal = RigidityConfig(include_index_zero=False)
    wrong = [(r.name, n) for r in gold.rigid for n, d in strings.items()
             if n != r.name and n not in r.compatible and is_c_rigid(alg, strings[r.name], d, literal)]
    assert wrong


@settings(max_examples=40)
@given(string_algebras(max_arrows=4))
def test_compatible_is_symmetric(alg):
    from stringtau.enumeration import rigid_objects
    objs = rigid_objects(alg, 4)
    for x in objs:
        for y in objs:
            assert compatible(alg, x, y) == compatible(alg, y, x)
