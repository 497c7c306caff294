import pytest
from hypothesis import given, settings, strategies as st

from eqlab import tracklang as tl
from eqlab.cat import FinMap, audit_category_laws, check_equalizer, check_product, check_pullback
from eqlab.fixtures import pack, pasm_pack
from eqlab.pasm import (PASM, TERMINAL, NotInPAsm, NotTrackable, assembly, auto_track, check_monic_form,
                        equalizer_pasm, is_morphism, monic_form, product_pasm, triple_is_monic)
from eqlab.spans import compose_homs, homs_identified, identity_hom, is_equivalence_span, span_violations


def test_identity_is_tracked_by_the_input():
    a = assembly([3, 5, 8])
    assert is_morphism(a, a, [0, 1, 2], tl.X, 1)


def test_constant_map_with_constant_tracker():
    a, b = assembly([0, 1]), assembly([7, 3])
    assert is_morphism(a, b, [1, 1], tl.Const(3), 1)


def test_realizer_clash_blocks_every_tracker():
    a, b = assembly([5, 5]), assembly([0, 1])
    for src in ("x", "0", "1", "(succ x)", "(pred x)"):
        assert not is_morphism(a, b, [0, 1], tl.parse(src), 100)
    with pytest.raises(NotTrackable) as info:
        auto_track(a, b, [0, 1])
    assert info.value.pair == (0, 1)


def test_auto_track_examples():
    a, b = assembly([4, 9, 2]), assembly([1, 1, 6])
    for f in ([0, 0, 0], [2, 1, 0], [1, 2, 2]):
        m = auto_track(a, b, f)
        assert PASM.is_morphism(m) and m.tracker is not None
    assert PASM.is_morphism(auto_track(a, a, [0, 1, 2]))


def test_product_examples():
    a = assembly([1, 4])
    cone = product_pasm(a, TERMINAL)
    assert cone.apex.size == 2 and cone.legs[0].table == (0, 1)
    assert product_pasm(assembly([1]), assembly([2])).apex.xi == (8,)
    b = assembly([0, 2, 3])
    f, g = auto_track(b, a, [0, 1, 1]), auto_track(b, assembly([6]), [0, 0, 0])
    cone = product_pasm(a, assembly([6]))
    u = PASM.pair(cone, f, g)
    assert PASM.is_morphism(u)
    assert auto_track(b, cone.apex, u.table).table == u.table


def test_equalizer_examples():
    a, b = assembly([0, 1]), assembly([0, 1])
    f = auto_track(a, b, [0, 1])
    assert equalizer_pasm(f, f).apex.size == 2
    g = auto_track(a, b, [1, 0])
    assert equalizer_pasm(f, g).apex.size == 0
    h = auto_track(a, b, [0, 0])
    assert equalizer_pasm(f, h).apex.xi == (0,)


def test_universal_properties():
    a, b = assembly([0, 1]), assembly([2, 2])
    probes = [assembly([0]), assembly([5, 6])]
    assert check_product(PASM, product_pasm(a, b), probes) == []
    f, g = auto_track(a, b, [0, 1]), auto_track(a, b, [0, 0])
    assert check_equalizer(PASM, equalizer_pasm(f, g), f, g, probes) == []
    k = auto_track(assembly([7, 8]), b, [1, 1])
    assert check_pullback(PASM, PASM.pullback(f, k), f, k, probes) == []


def test_category_laws():
    assert audit_category_laws(PASM, [assembly([0]), assembly([0, 1]), assembly([3, 3])]).ok


def test_monic_span_is_unchanged():
    sp = pack().pasm_spans["d2-total"]
    assert triple_is_monic(sp)
    mf = monic_form(sp)
    assert mf.E.size == sp.A1.size
    assert PASM.compose(mf.section, mf.f).table == tuple(range(sp.A1.size))
    assert PASM.compose(mf.f, mf.section).table == tuple(range(mf.E.size))


def test_parallel_edges_with_equal_realizers_collapse():
    sp = pack().pasm_spans["pt-dup-loops"]
    mf = monic_form(sp)
    assert mf.E.size < sp.A1.size
    rep = check_monic_form(mf)
    assert rep.ok


def test_monic_form_needs_assemblies():
    with pytest.raises(NotInPAsm):
        monic_form(pack().subspatial["d2-total"])


def test_pack_has_enough_small_spans():
    spans = pasm_pack()
    assert len(spans) >= 20
    assert all(sp.A0.size <= 5 and sp.A1.size <= 5 for sp in spans)


@pytest.mark.parametrize("sp", pasm_pack(), ids=lambda s: s.name)
def test_monic_form_of_every_fixture(sp):
    mf = monic_form(sp)
    assert triple_is_monic(mf.span)
    # validated on the span itself, with no reference to the section
    assert is_equivalence_span(mf.span) and span_violations(mf.span) == []
    rep = check_monic_form(mf)
    assert rep.ok
    assert homs_identified(compose_homs(mf.from_monic(), mf.to_monic()), identity_hom(sp)) is not None


realizers = st.lists(st.integers(0, 6), min_size=1, max_size=4)


@settings(max_examples=100, deadline=None)
@given(realizers, realizers, st.data())
def test_auto_track_succeeds_exactly_on_consistent_maps(xi, zeta, data):
    a, b = assembly(xi), assembly(zeta)
    f = data.draw(st.lists(st.integers(0, b.size - 1), min_size=a.size, max_size=a.size))
    consistent = all(zeta[f[x]] == zeta[f[y]] for x in range(a.size) for y in range(a.size) if xi[x] == xi[y])
    if consistent:
        m = auto_track(a, b, f)
        assert is_morphism(a, b, f, m.tracker, m.budget)
    else:
        with pytest.raises(NotTrackable):
            auto_track(a, b, f)


@settings(max_examples=60, deadline=None)
@given(realizers, realizers, st.data())
def test_composite_trackers_track_the_composite(xi, zeta, data):
    a, b = assembly(xi), assembly(zeta)
    f = data.draw(st.lists(st.integers(0, b.size - 1), min_size=a.size, max_size=a.size))
    g = data.draw(st.lists(st.integers(0, a.size - 1), min_size=b.size, max_size=b.size))
    F, G = PASM.make_if_morphism(a, b, f), PASM.make_if_morphism(b, a, g)
    if F is None or G is None:
        return
    GF = PASM.compose(G, F)
    assert is_morphism(a, a, GF.table, GF.tracker, GF.budget)
