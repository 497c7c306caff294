import pytest
from hypothesis import given, settings, strategies as st

from eqlab.cat import FinMap
from eqlab.fintop import (TOP, FinSpace, NotATopology, all_topologies, chain, discrete, indiscrete,
                          is_continuous, is_continuous_by_opens, is_subspace_inclusion, is_T0, point,
                          product_space, sierpinski, subspace)

# number of topologies on n labelled points
LABELLED = {0: 1, 1: 1, 2: 4, 3: 29}


def test_sierpinski_is_T0():
    s = sierpinski()
    assert s.open_sets() == [[], [1], [0, 1]]
    assert is_T0(s)


def test_indiscrete_is_not_T0():
    assert not is_T0(indiscrete(2))


def test_discrete_is_T0():
    assert is_T0(discrete(3))


def test_continuity_examples():
    s = sierpinski()
    assert is_continuous(TOP.identity(s))
    assert not is_continuous(FinMap(s, s, (1, 0)))
    for a in (s, chain(3), discrete(2)):
        for b in (s, chain(3), indiscrete(2)):
            for v in range(b.size):
                assert is_continuous(FinMap(a, b, (v,) * a.size))


def test_product_with_a_point_is_the_space():
    s = sierpinski()
    assert product_space(s, point()).apex == s


def test_sierpinski_squared_has_six_opens():
    # the opens are the up-sets of the 2x2 grid: {}, {11}, {01,11}, {10,11}, {01,10,11}, all
    sq = product_space(sierpinski(), sierpinski()).apex
    assert sq.size == 4
    assert len(sq.open_sets()) == 6


def test_product_of_discretes_is_discrete():
    assert product_space(discrete(2), discrete(2)).apex == discrete(4)


def test_subspace_examples():
    s = sierpinski()
    full = subspace(s, [0, 1])
    assert full.apex == s and is_subspace_inclusion(full.legs[0])
    assert subspace(s, [1]).apex == point()
    sq = product_space(s, s).apex
    diag = subspace(sq, [0, 3])
    assert diag.apex.open_sets() == [[], [1], [0, 1]]


def test_injection_from_discrete_into_indiscrete_is_not_an_embedding():
    assert not is_subspace_inclusion(FinMap(discrete(2), indiscrete(2), (0, 1)))


def test_non_injective_map_is_not_an_embedding():
    assert not is_subspace_inclusion(FinMap(discrete(2), discrete(2), (0, 0)))


def test_non_topologies_are_rejected():
    with pytest.raises(NotATopology, match="union"):
        FinSpace.from_sets(3, [[], [0], [1], [0, 1, 2]], "bad")
    with pytest.raises(NotATopology, match="empty"):
        FinSpace.from_sets(2, [[0, 1]])
    with pytest.raises(NotATopology):
        FinSpace(2, (0b10, 0b10))  # the neighbourhood of 0 must contain 0
    with pytest.raises(NotATopology):
        FinSpace.from_sets(2, [[], [5], [0, 1]])


def test_topology_counts():
    for n, k in LABELLED.items():
        assert len(all_topologies(n)) == k


spaces = st.integers(1, 3).flatmap(lambda n: st.sampled_from(all_topologies(n)))


@st.composite
def maps(draw):
    a, b = draw(spaces), draw(spaces)
    return FinMap(a, b, tuple(draw(st.lists(st.integers(0, b.size - 1), min_size=a.size, max_size=a.size))))


@settings(max_examples=200, deadline=None)
@given(maps())
def test_neighbourhood_criterion_matches_the_definition(m):
    assert is_continuous(m) == is_continuous_by_opens(m)


@settings(max_examples=60, deadline=None)
@given(spaces)
def test_opens_are_a_topology(s):
    opens = set(s.opens())
    assert 0 in opens and s.full in opens
    for u in opens:
        for v in opens:
            assert u | v in opens and u & v in opens


@settings(max_examples=60, deadline=None)
@given(spaces, spaces)
def test_projections_are_continuous_and_the_topology_is_the_product(a, b):
    cone = product_space(a, b)
    p1, p2 = cone.legs
    assert TOP.is_morphism(p1) and TOP.is_morphism(p2)
    # every open rectangle is open
    for u in a.opens():
        for v in b.opens():
            rect = sum(1 << (i * b.size + j) for i in range(a.size) for j in range(b.size)
                       if u >> i & 1 and v >> j & 1)
            assert cone.apex.is_open(rect)


def test_from_sets_round_trip():
    for s in all_topologies(3):
        assert FinSpace.from_sets(3, s.open_sets()) == s
