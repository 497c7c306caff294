import dataclasses
import itertools

import pytest
from hypothesis import given, settings, strategies as st

from eqlab.fixtures import numeric_pack, pack, pasm_pack
from eqlab.pasm import monic_form
from eqlab.spans import compose_homs, homs_identified, hom_violations
from eqlab.twogroupoid import (Cylinder, CylinderCell, InvalidZigzag, NumericTwoGroupoid, TwoFunctor,
                               U_map, U_underlying, ZigzagBase, alpha_wedge, base_to_dot, check_numeric,
                               compose_two_functors, concat, cylinder_violations, dagger,
                               enumerate_two_functors, enumerate_zigzags, essential_surjectivity_check,
                               free_dagger_numeric, homotopy_from_identification, homotopy_quotient_check_N,
                               identity_two_functor, interval_base, interval_two_groupoid, is_valid,
                               lift_to_2functor, materialize, search_homotopy, singleton,
                               truncation_complete, two_functor_violations, two_groupoid_violations,
                               zigzag_to_dot, Zigzag)

U_EDGE = Zigzag(0, ((0, 0, 1),))  # the generator u of the interval


def base(name):
    return pack().bases[name]


def test_singleton_codes():
    b = ZigzagBase((4,), ())
    assert alpha_wedge(singleton(0), b) == 14
    assert alpha_wedge(singleton(0), ZigzagBase((0,), ())) == 0


def test_codes_are_injective_on_a_two_edge_base():
    b = ZigzagBase((0, 1), ((0, 1, 0), (1, 0, 1)))
    zs = enumerate_zigzags(b, 2)
    codes = [alpha_wedge(z, b) for z in zs]
    assert len(set(codes)) == len(codes)


def test_invalid_zigzags_have_no_code():
    with pytest.raises(InvalidZigzag):
        alpha_wedge(Zigzag(0, ((5, 0, 1),)), interval_base())


def test_dagger_examples():
    assert dagger(singleton(3)) == singleton(3)
    assert dagger(U_EDGE) == Zigzag(1, ((0, 1, 0),))


def test_dagger_reverses_composites():
    b = base("path3")
    zs = enumerate_zigzags(b, 3)
    for z in zs:
        assert dagger(dagger(z)) == z
        for w in zs:
            if z.end == w.start and len(z) + len(w) <= 3:
                assert dagger(concat(z, w)) == concat(dagger(w), dagger(z))


def test_empty_edge_set_gives_only_identities():
    G = NumericTwoGroupoid(base("two"), 3)
    assert G.cells1 == [singleton(0), singleton(1)]
    assert check_numeric(G).ok


def test_one_edge_base_with_L_two():
    G = interval_two_groupoid(2)
    assert G.homs[0, 0] == [singleton(0), Zigzag(0, ((0, 0, 1), (0, 1, 0)))]
    assert G.homs[1, 1] == [singleton(1), Zigzag(1, ((0, 1, 0), (0, 0, 1)))]
    assert G.homs[0, 1] == [U_EDGE]


@pytest.mark.parametrize("name", ["interval", "pt", "loop", "two", "diag2", "path3"])
def test_numeric_laws_on_the_pack(name):
    rep = check_numeric(NumericTwoGroupoid(base(name), 3, name), 2)
    assert rep.ok, rep.problems[:5]
    assert rep.q_orientation == "to identity"


def test_broken_symmetry_is_caught():
    tg, _, _ = materialize(interval_two_groupoid(2))
    bad = dataclasses.replace(tg, s1=list(range(len(tg.s1))))
    assert not two_groupoid_violations(bad).ok


def test_U_of_the_interval_connects_everything():
    US = U_underlying(interval_two_groupoid(3)).span
    assert set(US.edges()) == {(0, 0), (0, 1), (1, 0), (1, 1)}


def test_U_of_a_diagonal_base_only_connects_points_to_themselves():
    US = U_underlying(NumericTwoGroupoid(base("diag2"), 3)).span
    assert all(x == y for x, y in US.edges())
    assert truncation_complete(U_underlying(NumericTwoGroupoid(base("diag2"), 3)))


def test_U_preserves_composition():
    gs = [NumericTwoGroupoid(base(n), 3, n) for n in ("interval", "loop", "path3")]
    Us = {G.name: U_underlying(G) for G in gs}
    for A, B, C in itertools.product(gs, repeat=3):
        for F in enumerate_two_functors(A, B)[:3]:
            for P in enumerate_two_functors(B, C)[:3]:
                PF = compose_two_functors(P, F)
                got = U_map(PF, Us[A.name], Us[C.name])
                want = compose_homs(U_map(P, Us[B.name], Us[C.name]), U_map(F, Us[A.name], Us[B.name]))
                assert got.f0.table == want.f0.table and got.f1.table == want.f1.table


@pytest.mark.parametrize("name", ["d2-diag", "d2-total-const", "d3-pair"])
def test_essential_surjectivity_examples(name):
    rep = essential_surjectivity_check(pack().pasm_spans[name], 3)
    assert rep.ok, rep.problems


def test_interval_two_groupoid():
    I = interval_two_groupoid(3)
    assert list(I.objects) == [0, 1]
    assert [z for z in I.cells1 if len(z) == 1] == [U_EDGE, dagger(U_EDGE)]
    for zs in I.homs.values():
        for z, w in itertools.product(zs, repeat=2):
            assert sum(1 for a in I.cells2() if a == (z, w)) == 1


def test_identity_lifts_to_the_identity():
    G = NumericTwoGroupoid(base("path3"), 3)
    U = U_underlying(G)
    h = U_map(identity_two_functor(G), U, U)
    assert lift_to_2functor(h, U, U) == identity_two_functor(G)


def test_swapped_endpoint_inclusions_are_2_functors():
    I, P = interval_two_groupoid(3), NumericTwoGroupoid(base("pt"), 3)
    swap = TwoFunctor(I, I, (1, 0), (dagger(U_EDGE),))
    assert two_functor_violations(swap) == []
    for j in (0, 1):
        inc = TwoFunctor(P, I, (j,), ())
        assert two_functor_violations(inc) == []
        assert two_functor_violations(compose_two_functors(swap, inc)) == []


def test_collapsing_arrow_lifts_to_connecting_zigzags():
    I, L_ = interval_two_groupoid(3), NumericTwoGroupoid(base("loop"), 3)
    loop = Zigzag(0, ((0, 0, 0),))
    F = TwoFunctor(I, L_, (0, 0), (loop,))
    UI, UL = U_underlying(I), U_underlying(L_)
    lifted = lift_to_2functor(U_map(F, UI, UL), UI, UL)
    assert lifted.gen == (loop,)
    assert two_functor_violations(lifted) == []


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["interval", "loop", "two", "diag2", "path3"]),
       st.sampled_from(["interval", "loop", "two", "diag2", "path3"]))
def test_lifting_inverts_U_on_short_functors(a, b):
    G, H = NumericTwoGroupoid(base(a), 3), NumericTwoGroupoid(base(b), 3)
    UG, UH = U_underlying(G), U_underlying(H)
    for F in enumerate_two_functors(G, H):
        h = U_map(F, UG, UH)
        assert hom_violations(h) == []
        assert lift_to_2functor(h, UG, UH) == F


def test_constant_homotopy_is_the_projection():
    G = NumericTwoGroupoid(base("path3"), 3)
    F = identity_two_functor(G)
    K = homotopy_from_identification(F, F, [singleton(x) for x in G.objects])
    for z in G.cells1:
        for w in K.I.cells1:
            if len(z) + len(w) <= 3:
                assert K.K1(CylinderCell(z, w)) == F.f1(z)


def test_interval_self_homotopy():
    I = interval_two_groupoid(3)
    ident = identity_two_functor(I)
    swap = TwoFunctor(I, I, (1, 0), (dagger(U_EDGE),))
    K = homotopy_from_identification(ident, swap, [U_EDGE, dagger(U_EDGE)])
    rep = cylinder_violations(K)
    assert rep.ok
    assert rep.strict_failures == rep.comparison_cells


def test_no_homotopy_between_disconnected_constants():
    P, T = NumericTwoGroupoid(base("pt"), 3), NumericTwoGroupoid(base("two"), 3)
    F, F2 = TwoFunctor(P, T, (0,), ()), TwoFunctor(P, T, (1,), ())
    UP, UT = U_underlying(P), U_underlying(T)
    assert homs_identified(U_map(F, UP, UT), U_map(F2, UP, UT)) is None
    assert T.homs.get((0, 1), []) == []
    assert search_homotopy(F, F2) is None
    with pytest.raises(ValueError):
        homotopy_from_identification(F, F2, [singleton(0)])


def test_quotient_of_N_on_two_point_bases():
    suite = [NumericTwoGroupoid(base(n), 3, n) for n in ("interval", "two", "diag2")]
    rep = homotopy_quotient_check_N(suite, 3)
    assert rep.ok and rep.identified_pairs > 0


def test_quotient_of_N_on_an_identity_only_suite():
    rep = homotopy_quotient_check_N([NumericTwoGroupoid(base("pt"), 3, "pt")], 3)
    assert rep.ok and rep.pairs_checked == 1


def test_quotient_of_N_with_the_interval_as_target():
    suite = [NumericTwoGroupoid(base("loop"), 3, "loop"), interval_two_groupoid(3)]
    assert homotopy_quotient_check_N(suite, 3).ok


def test_free_dagger_from_a_span_uses_the_monic_form():
    sp = pack().pasm_spans["d2-total-dup"]
    G = free_dagger_numeric(sp, 2)
    assert G.base.triples == monic_form(sp).triples


def test_dot_output():
    dot = base_to_dot(interval_base())
    assert dot.count("->") == 1 and 'label="u"' in dot
    zd = zigzag_to_dot(Zigzag(0, ((0, 0, 1), (0, 1, 0))), interval_base())
    assert zd.count("->") == 2 and "dir=back" in zd


bases = st.sampled_from(["interval", "loop", "diag2", "path3"])


@settings(max_examples=50, deadline=None)
@given(bases, st.data())
def test_codes_are_injective_and_determine_the_zigzag(name, data):
    b = base(name)
    zs = enumerate_zigzags(b, 3)
    z = data.draw(st.sampled_from(zs))
    w = data.draw(st.sampled_from(zs))
    assert is_valid(z, b)
    assert (alpha_wedge(z, b) == alpha_wedge(w, b)) == (z == w)
