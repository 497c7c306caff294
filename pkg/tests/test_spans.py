import pytest
from hypothesis import given, settings, strategies as st

from eqlab.cat import FinMap
from eqlab.equ import Equilogical, EquMap, embed_T0, hom_set, identity, terminal, total
from eqlab.fintop import TOP, discrete, indiscrete, point, sierpinski
from eqlab.fixtures import equilogical_pack, small_subspatial, subspatial_pack
from eqlab.spans import (F_bijection, FG_identity_on_objects, GraphHom, NotASpan, auto_span, compose_homs,
                         functor_F, functor_F_mor, functor_G, graph_homs, homs_identified, identity_hom,
                         is_equivalence_span, is_graph_hom, is_subspatial, make_span, span_violations,
                         structure_solutions, to_dot)


def diagonal_span(space):
    n = space.size
    ids = list(range(n))
    return make_span(TOP, space, space, ids, ids, ids, ids, ids, "diag")


def total_span():
    # arcs 0..3 are the pairs (0,0), (0,1), (1,0), (1,1)
    A0, A1 = discrete(2), discrete(4)
    d1, d2 = [0, 0, 1, 1], [0, 1, 0, 1]
    pb = TOP.pullback(FinMap(A1, A0, tuple(d2)), FinMap(A1, A0, tuple(d1)))
    q1, q2 = pb.legs
    t = [2 * d1[q1(k)] + d2[q2(k)] for k in range(pb.apex.size)]
    return make_span(TOP, A1, A0, d1, d2, [0, 3], [0, 2, 1, 3], t, "total")


def test_diagonal_span_is_an_equivalence_span():
    assert is_equivalence_span(diagonal_span(sierpinski()))


def test_total_span_is_an_equivalence_span():
    assert is_equivalence_span(total_span())


def test_wrong_composition_is_detected():
    sp = total_span()
    bad = FinMap(sp.t.source, sp.A1, tuple((v + 1) % 4 for v in sp.t.table))
    broken = type(sp)(TOP, sp.d1, sp.d2, sp.r, sp.s, bad)
    assert not is_equivalence_span(broken)
    assert any("compatibility" in v for v in span_violations(broken))


def test_symmetric_graph_without_composites_is_not_a_span():
    # the relation {00, 01, 10, 11, 12, 21, 22} on 3 points is not transitive
    A0 = discrete(3)
    edges = [(0, 0), (0, 1), (1, 0), (1, 1), (1, 2), (2, 1), (2, 2)]
    A1 = discrete(len(edges))
    d1 = FinMap(A1, A0, tuple(e[0] for e in edges))
    d2 = FinMap(A1, A0, tuple(e[1] for e in edges))
    with pytest.raises(NotASpan, match="t"):
        auto_span(TOP, d1, d2)


def test_identical_homs_are_identified_by_reflexivity():
    sp = total_span()
    h = identity_hom(sp)
    w = homs_identified(h, h)
    assert w is not None
    assert all(sp.d1(w(x)) == x == sp.d2(w(x)) for x in range(2))


def test_homs_into_the_total_span_are_identified():
    S, T = diagonal_span(discrete(2)), total_span()
    homs = list(graph_homs(S, T))
    assert len(homs) == 4
    for h in homs:
        for k in homs:
            assert homs_identified(h, k) is not None


def test_distinct_homs_into_a_diagonal_span_are_not_identified():
    S = T = diagonal_span(discrete(2))
    homs = list(graph_homs(S, T))
    for h in homs:
        for k in homs:
            assert (homs_identified(h, k) is not None) == (h.f0 == k.f0)


def test_subspatial_examples():
    e = Equilogical(sierpinski(), total(2))
    assert is_subspatial(functor_G(e))
    assert is_subspatial(diagonal_span(sierpinski()))
    sp = total_span()
    coarse = indiscrete(4)
    d1 = FinMap(coarse, sp.A0, sp.d1.table)
    d2 = FinMap(coarse, sp.A0, sp.d2.table)
    assert not is_subspatial(type(sp)(TOP, d1, d2, sp.r, sp.s, sp.t))


def test_F_examples():
    assert functor_F(diagonal_span(sierpinski())) == embed_T0(sierpinski())
    assert functor_F(total_span()) == Equilogical(discrete(2), total(2))
    sp = total_span()
    assert functor_F_mor(identity_hom(sp)) == identity(functor_F(sp))


def test_G_examples():
    g = functor_G(terminal())
    assert g.A0 == point() and g.A1 == point() and is_equivalence_span(g)
    g = functor_G(Equilogical(discrete(2), total(2)))
    assert g.A1 == discrete(4)
    assert g.edges() == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_F_after_G_is_the_identity_on_the_pack():
    pack = equilogical_pack()
    assert len(pack) >= 20
    assert all(FG_identity_on_objects(e) for e in pack)


def test_structure_solutions_of_the_total_graph():
    sp = total_span()
    rs, ss, ts = structure_solutions(TOP, sp.d1, sp.d2)
    assert [r.table for r in rs] == [(0, 3)]
    assert [s.table for s in ss] == [(0, 2, 1, 3)]
    assert len(ts) == 1


def test_dot_for_diagonal_and_total_spans():
    dot = to_dot(diagonal_span(discrete(2)))
    assert dot.count("->") == 2 and "n0 -> n0" in dot and "n1 -> n1" in dot
    assert to_dot(total_span()).count("->") == 4


small = small_subspatial(3)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(small), st.sampled_from(small))
def test_F_is_a_bijection_on_hom_sets(S, T):
    r = F_bijection(S, T)
    assert r.ok, r.problems
    assert r.span_classes == r.equ_classes == len(hom_set(functor_F(S), functor_F(T)))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(small), st.sampled_from(small), st.sampled_from(small))
def test_F_preserves_composition(S, T, U):
    for f in list(graph_homs(S, T))[:4]:
        for g in list(graph_homs(T, U))[:4]:
            gf = compose_homs(g, f)
            assert is_graph_hom(gf)
            Ff, Fg = functor_F_mor(f), functor_F_mor(g)
            table = tuple(Fg.canonical(v) for v in Ff.canonical.table)
            assert functor_F_mor(gf) == EquMap.of(FinMap(Ff.source, Fg.target, table))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(small), st.sampled_from(small))
def test_identification_is_an_equivalence_relation(S, T):
    homs = list(graph_homs(S, T))[:8]
    rel = {(i, j) for i, h in enumerate(homs) for j, k in enumerate(homs) if homs_identified(h, k) is not None}
    n = len(homs)
    assert all((i, i) in rel for i in range(n))
    assert all((j, i) in rel for i, j in rel)
    assert all((i, k) in rel for i, j in rel for j2, k in rel if j == j2)


def test_pack_spans_are_subspatial():
    pack = subspatial_pack()
    assert len(pack) >= 20 and all(sp.A0.size <= 4 for sp in pack)
    for sp in pack:
        assert is_equivalence_span(sp) and is_subspatial(sp)


def test_hom_components_must_commute():
    S = T = total_span()
    bad = GraphHom(S, T, TOP.identity(S.A1), FinMap(S.A0, T.A0, (1, 0)))
    assert not is_graph_hom(bad)
