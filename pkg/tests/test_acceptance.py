"""The eight acceptance criteria, each against its own time limit."""
import itertools
import random
import time
from contextlib import contextmanager

from conftest import ACCEPTANCE
from eqlab import tracklang as tl
from eqlab.fixtures import numeric_pack, pack, pasm_pack, subspatial_pack
from eqlab.groupoid import (check_homotopy_relation, graph_hom_is_functor, groupoid_from_jointly_monic,
                            groupoid_violations, homotopy_quotient_equals_Equ, interval_groupoid_data,
                            setoid_samples, verify_interval_structure)
from eqlab.pasm import check_monic_form, monic_form
from eqlab.spans import FG_identity_on_objects, F_bijection, graph_homs, is_equivalence_span
from eqlab.twogroupoid import (alpha_wedge, enumerate_zigzags, essential_surjectivity_check,
                               free_dagger_numeric, homotopy_quotient_check_N, interval_two_groupoid_data,
                               presentation_samples)


@contextmanager
def criterion(n: int, title: str, limit: float):
    t = time.perf_counter()
    status, note = "FAIL", ""
    try:
        yield
        secs = time.perf_counter() - t
        status = "PASS" if secs < limit else "FAIL"
        note = "" if secs < limit else " over the time limit"
    finally:
        secs = time.perf_counter() - t
        line = f"criterion {n}: {status}  {title}  [{secs:.1f} s / {limit:.0f} s]{note}"
        ACCEPTANCE[n] = line
        print(line)
    assert secs < limit, line


def test_1_F_is_an_equivalence():
    suite = subspatial_pack()
    assert len(suite) >= 20 and all(S.A0.size <= 4 for S in suite)
    with criterion(1, "F bijective on hom classes, F.G identity on objects", 60):
        bad = [r for S, T in itertools.product(suite, repeat=2) if not (r := F_bijection(S, T)).ok]
        assert bad == []
        assert all(FG_identity_on_objects(e) for e in pack().equilogical.values())


def test_2_subspatial_spans_are_groupoids():
    suite = subspatial_pack()
    with criterion(2, "subspatial spans are groupoids, homs are functors", 10):
        gs = [groupoid_from_jointly_monic(S) for S in suite]
        assert all(groupoid_violations(G) == [] for G in gs)
        for (S, GS), (T, GT) in itertools.product(zip(suite, gs), repeat=2):
            for h in graph_homs(S, T):
                graph_hom_is_functor(GS, GT, h.f1, h.f0)


def test_3_homotopy_quotient():
    suite = subspatial_pack()
    small = [S for S in suite if S.A0.size <= 3]
    targets = [S for S in suite if S.A0.size <= 2]
    with criterion(3, "homotopic = identified = F-equivalent; homotopy is a congruence", 120):
        rep = homotopy_quotient_equals_Equ(suite, cylinder_limit=2)
        assert rep.ok, rep.counterexamples[:5]
        bad = []
        for S, T in itertools.product(suite, repeat=2):
            if S in small and T in small:
                for U in targets:
                    bad += check_homotopy_relation(S, T, U)
            else:
                bad += check_homotopy_relation(S, T)
        assert bad == []


def test_4_interval_contracts():
    with criterion(4, "interval objects for groupoids and 2-groupoids", 30):
        for data, samples in ((interval_groupoid_data(), setoid_samples()),
                              (interval_two_groupoid_data(), presentation_samples())):
            assert len(samples) >= 5
            rep = verify_interval_structure(data, samples)
            assert rep.ok, rep.failures
            names = [n for n, _ in rep.checks]
            assert any("universal" in n for n in names) and any("stable" in n for n in names)


def test_5_monic_forms():
    spans = pasm_pack()
    assert len(spans) >= 20 and all(S.A1.size <= 5 and S.A0.size <= 5 for S in spans)
    with criterion(5, "monic forms are injective, valid and quotient-isomorphic", 30):
        for S in spans:
            mf = monic_form(S)
            # validity is judged on the span alone; the section plays no part
            assert is_equivalence_span(mf.span)
            assert check_monic_form(mf).ok


def test_6_essential_surjectivity():
    with criterion(6, "U is essentially surjective (L = 3)", 120):
        for S in pasm_pack():
            rep = essential_surjectivity_check(S, 3)
            assert rep.ok, (S.name, rep.problems)


def test_7_quotient_of_N():
    suite = numeric_pack(3)
    assert all(len(G.objects) <= 3 for G in suite)
    with criterion(7, "homotopy = U-identification on N, with law-passing homotopies", 300):
        rep = homotopy_quotient_check_N(suite, 3)
        assert rep.counterexamples == [] and rep.construction_failures == []
        assert rep.identified_pairs > 0


def test_8_encodings():
    bases = list(pack().bases.values())
    bases += [free_dagger_numeric(S, 3).base for S in pasm_pack() if len(set(S.A0.xi)) == S.A0.size]
    rng = random.Random(0)
    with criterion(8, "pairing, zigzag codes and budget monotonicity", 30):
        assert all(tl.cantor_pair(*tl.cantor_unpair(k)) == k for k in range(10001))
        assert all(tl.cantor_unpair(tl.cantor_pair(n, m)) == (n, m) for n in range(101) for m in range(101))
        for b in bases:
            zs = enumerate_zigzags(b, 3)
            assert len({alpha_wedge(z, b) for z in zs}) == len(zs)
        for _ in range(1000):
            p, n = tl.random_program(rng), rng.randrange(50)
            assert tl.budget_monotone(p, n, 40, 4000), (p, n)
