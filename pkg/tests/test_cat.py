import pytest
from hypothesis import given, settings, strategies as st

from eqlab.cat import (CapExceeded, Category, FinMap, MorphismPair, TableCategory, audit_category_laws,
                       check_equalizer, check_product, check_pullback, is_jointly_monic,
                       jointly_monic_by_probes, pullback_of_cospan)
from eqlab.fintop import TOP, chain, discrete, indiscrete, point, sierpinski
from eqlab.pasm import PASM, assembly


def test_identity_only_context_has_no_violations():
    C = TableCategory(["*"], {"id": ("*", "*")}, {"*": "id"}, {("id", "id"): "id"})
    rep = audit_category_laws(C)
    assert rep.ok and rep.checked > 0


def test_three_named_spaces_pass_the_audit():
    rep = audit_category_laws(TOP, [sierpinski(), discrete(2), chain(3)])
    assert rep.ok


def test_corrupted_composition_is_reported():
    # two parallel arrows f, g: a -> b, with the wrong composite id_b . f = g
    morphisms = {"1a": ("a", "a"), "1b": ("b", "b"), "f": ("a", "b"), "g": ("a", "b")}
    comp = {("1a", "1a"): "1a", ("1b", "1b"): "1b", ("f", "1a"): "f", ("g", "1a"): "g",
            ("1b", "f"): "g", ("1b", "g"): "g"}
    C = TableCategory(["a", "b"], morphisms, {"a": "1a", "b": "1b"}, comp)
    rep = audit_category_laws(C)
    assert rep.violations == [("left-unit", "f")]


def test_identities_are_jointly_monic():
    s = sierpinski()
    assert is_jointly_monic(TOP, MorphismPair(TOP.identity(s), TOP.identity(s)))


def test_total_relation_legs_are_jointly_monic():
    A0, A1 = discrete(2), discrete(4)
    p = MorphismPair(FinMap(A1, A0, (0, 0, 1, 1)), FinMap(A1, A0, (0, 1, 0, 1)))
    assert is_jointly_monic(TOP, p)
    assert jointly_monic_by_probes(TOP, p, [point(), discrete(2)])


def test_duplicated_pair_is_not_jointly_monic():
    A0, A1 = discrete(2), discrete(3)
    p = MorphismPair(FinMap(A1, A0, (0, 0, 1)), FinMap(A1, A0, (1, 1, 0)))
    assert not is_jointly_monic(TOP, p)
    assert not jointly_monic_by_probes(TOP, p, [point()])


def test_pullback_of_identities():
    s = sierpinski()
    cone = pullback_of_cospan(TOP, TOP.identity(s), TOP.identity(s))
    assert cone.apex.size == s.size
    assert cone.legs[0].table == cone.legs[1].table == (0, 1)


def test_pullback_over_terminal_is_the_product():
    a, b = assembly([0, 1]), assembly([2, 3])
    cone = PASM.pullback(PASM.to_terminal(a), PASM.to_terminal(b))
    assert cone.apex.size == 4
    assert check_pullback(PASM, cone, PASM.to_terminal(a), PASM.to_terminal(b), [assembly([0])]) == []


def test_composable_pairs_of_total_relation():
    A0, A1 = discrete(2), discrete(4)
    d1, d2 = FinMap(A1, A0, (0, 0, 1, 1)), FinMap(A1, A0, (0, 1, 0, 1))
    assert TOP.pullback(d2, d1).apex.size == 8


def test_generic_and_direct_pullbacks_agree():
    s, c = sierpinski(), chain(3)
    f = FinMap(c, s, (0, 1, 1))
    g = FinMap(s, s, (0, 1))
    direct = TOP.pullback(f, g)
    generic = Category.pullback(TOP, f, g)
    assert direct == generic


def test_universal_properties_in_top():
    s, d = sierpinski(), discrete(2)
    probes = [point(), discrete(2)]
    assert check_product(TOP, TOP.product(s, d), probes) == []
    f, g = FinMap(d, d, (0, 1)), FinMap(d, d, (0, 0))
    assert check_equalizer(TOP, TOP.equalizer(f, g), f, g, probes) == []
    h = FinMap(s, point(), (0, 0))
    assert check_pullback(TOP, TOP.pullback(h, h), h, h, probes) == []


def test_a_wrong_product_cone_is_caught():
    # same legs, but on the discrete apex: maps out of a connected probe do not factor
    s = sierpinski()
    cone = TOP.product(s, s)
    apex = discrete(4)
    fake = type(cone)(apex, tuple(FinMap(apex, leg.target, leg.table) for leg in cone.legs))
    assert check_product(TOP, fake, [s])


def test_search_honours_the_cap():
    with pytest.raises(CapExceeded):
        TOP.hom(discrete(4), discrete(4), cap=10)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=3, max_size=3), st.lists(st.integers(0, 2), min_size=3, max_size=3))
def test_composition_is_associative_on_random_tables(f, g):
    d = discrete(3)
    F, G = FinMap(d, d, tuple(f)), FinMap(d, d, tuple(g))
    H = FinMap(d, d, (2, 0, 1))
    assert TOP.compose(H, TOP.compose(G, F)) == TOP.compose(TOP.compose(H, G), F)
    assert TOP.compose(TOP.identity(d), F) == F == TOP.compose(F, TOP.identity(d))


def test_finmap_rejects_bad_tables():
    with pytest.raises(ValueError):
        FinMap(discrete(2), discrete(2), (0,))
    with pytest.raises(ValueError):
        FinMap(discrete(2), discrete(2), (0, 2))
