"""Groupoids in an ambient, the interval groupoid, and homotopy of functors.

A groupoid has the same shape of data as an equivalence span: arrows
``G1 => G0``, identities ``i``, composition ``c`` on consecutive pairs and an
involution ``s``.  All laws are checked pointwise on the value tables, and
every structure map must also be a morphism of the ambient.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Any, Callable, Iterable, Sequence

from .cat import Category, Cone, FinMap, MorphismPair, is_jointly_monic
from .equ import Equilogical, diagonal, embed_T0, from_partition, hom_reps, is_rep, maps_equivalent, total
from .fintop import TOP, FinSpace, discrete, is_T0, point, product_space
from .spans import (EquivalenceSpan, GraphHom, functor_F, functor_G, graph_homs, homs_identified,
                    is_equivalence_span, join_witness, span_violations)


class InternalInvariantBreach(AssertionError):
    """A construction that is guaranteed to succeed did not."""


@dataclass(frozen=True)
class Groupoid:
    ctx: Any = field(compare=False, repr=False)
    d1: FinMap
    d2: FinMap
    i: FinMap
    c: FinMap
    s: FinMap
    name: str | None = field(default=None, compare=False)

    @property
    def G1(self):
        return self.d1.source

    @property
    def G0(self):
        return self.d1.target

    # span-shaped aliases, so identification searches apply unchanged
    A1 = G1
    A0 = G0

    def edges(self) -> list[tuple[int, int]]:
        return list(zip(self.d1.table, self.d2.table))

    @cached_property
    def composable(self) -> Cone:
        return self.ctx.pullback(self.d2, self.d1)

    @cached_property
    def _cindex(self) -> dict:
        q1, q2 = self.composable.legs
        return {(q1(k), q2(k)): k for k in range(self.composable.apex.size)}

    def comp(self, a: int, b: int) -> int:
        """``a`` followed by ``b`` (requires d2 a = d1 b)."""
        return self.c(self._cindex[a, b])

    def as_span(self) -> EquivalenceSpan:
        return EquivalenceSpan(self.ctx, self.d1, self.d2, self.i, self.s, self.c, name=self.name)


def from_span(sp: EquivalenceSpan) -> Groupoid:
    return Groupoid(sp.ctx, sp.d1, sp.d2, sp.r, sp.t, sp.s, name=sp.name)


def groupoid_violations(g: Groupoid) -> list[str]:
    out = span_violations(g.as_span())
    if out:
        return out
    d1, d2 = g.d1, g.d2
    for a in range(g.G1.size):
        x, y = d1(a), d2(a)
        if g.comp(g.i(x), a) != a or g.comp(a, g.i(y)) != a:
            out.append(f"unit law fails at {a}")
        if g.s(g.s(a)) != a:
            out.append(f"s is not an involution at {a}")
        if g.comp(a, g.s(a)) != g.i(x) or g.comp(g.s(a), a) != g.i(y):
            out.append(f"s does not invert {a}")
    for a, b in g._cindex:
        for cc in range(g.G1.size):
            if d1(cc) == d2(b):
                if g.comp(g.comp(a, b), cc) != g.comp(a, g.comp(b, cc)):
                    out.append(f"associativity fails at {(a, b, cc)}")
    return out


def is_groupoid(g: Groupoid) -> bool:
    return not groupoid_violations(g)


def groupoid_from_jointly_monic(sp: EquivalenceSpan) -> Groupoid:
    if span_violations(sp):
        raise ValueError(f"{sp.name or 'span'}: structure diagrams do not commute")
    if not is_jointly_monic(sp.ctx, sp.pair):
        raise ValueError(f"{sp.name or 'span'}: legs are not jointly monic")
    g = from_span(sp)
    bad = groupoid_violations(g)
    if bad:
        raise InternalInvariantBreach(f"jointly monic span failed groupoid laws: {bad[:3]}")
    return g


# -- functors and transformations --------------------------------------------

@dataclass(frozen=True)
class GroupoidFunctor:
    source: Groupoid
    target: Groupoid
    f1: FinMap
    f0: FinMap


def functor_violations(F: GroupoidFunctor) -> list[str]:
    H, G = F.source, F.target
    out = []
    ctx = H.ctx
    if not ctx.is_morphism(F.f1) or not ctx.is_morphism(F.f0):
        out.append("component is not a morphism of the ambient")
    f1, f0 = F.f1, F.f0
    for a in range(H.G1.size):
        if G.d1(f1(a)) != f0(H.d1(a)) or G.d2(f1(a)) != f0(H.d2(a)):
            out.append(f"endpoints not preserved at {a}")
            continue
        if f1(H.s(a)) != G.s(f1(a)):
            out.append(f"involution not preserved at {a}")
    if out:
        return out
    for x in range(H.G0.size):
        if f1(H.i(x)) != G.i(f0(x)):
            out.append(f"identity not preserved at {x}")
    for a, b in H._cindex:
        if f1(H.comp(a, b)) != G.comp(f1(a), f1(b)):
            out.append(f"composition not preserved at {(a, b)}")
    return out


def is_functor(F: GroupoidFunctor) -> bool:
    return not functor_violations(F)


def graph_hom_is_functor(H: Groupoid, G: Groupoid, f1: FinMap, f0: FinMap) -> GroupoidFunctor:
    if not is_jointly_monic(G.ctx, MorphismPair(G.d1, G.d2)):
        raise ValueError("target legs are not jointly monic")
    h = GraphHom(H.as_span(), G.as_span(), f1, f0)
    from .spans import hom_violations
    bad = hom_violations(h)
    if bad:
        raise ValueError(f"not a graph homomorphism: {bad[:3]}")
    F = GroupoidFunctor(H, G, f1, f0)
    bad = functor_violations(F)
    if bad:
        raise InternalInvariantBreach(f"graph homomorphism into a jointly monic groupoid is not a functor: {bad[:3]}")
    return F


def identity_functor(G: Groupoid) -> GroupoidFunctor:
    return GroupoidFunctor(G, G, G.ctx.identity(G.G1), G.ctx.identity(G.G0))


def compose_functors(G: GroupoidFunctor, F: GroupoidFunctor) -> GroupoidFunctor:
    ctx = F.source.ctx
    return GroupoidFunctor(F.source, G.target, ctx.compose(G.f1, F.f1), ctx.compose(G.f0, F.f0))


def nat_trans_check(F: GroupoidFunctor, G: GroupoidFunctor, a: FinMap) -> bool:
    """The triangle d1 a = f0, d2 a = g0, with a a morphism of the ambient."""
    T = F.target
    if a.source != F.source.G0 or a.target != T.G1 or not T.ctx.is_morphism(a):
        return False
    return all(T.d1(a(x)) == F.f0(x) and T.d2(a(x)) == G.f0(x) for x in range(a.source.size))


def is_natural(F: GroupoidFunctor, G: GroupoidFunctor, a: FinMap) -> bool:
    """Full naturality, checked square by square."""
    if not nat_trans_check(F, G, a):
        return False
    H, T = F.source, F.target
    for m in range(H.G1.size):
        x, y = H.d1(m), H.d2(m)
        if T.comp(a(x), G.f1(m)) != T.comp(F.f1(m), a(y)):
            return False
    return True


def nat_trans_witness(F: GroupoidFunctor, G: GroupoidFunctor, cap=None) -> FinMap | None:
    return join_witness(F.target, F.f0, G.f0, cap)


# -- products and the interval -------------------------------------------------

def product_groupoid(H: Groupoid, K: Groupoid) -> Groupoid:
    ctx = H.ctx
    obj = ctx.product(H.G0, K.G0)
    arr = ctx.product(H.G1, K.G1)
    n0, n1 = K.G0.size, K.G1.size
    pairs1 = [(a, b) for a in range(H.G1.size) for b in range(n1)]
    d1 = ctx.make(arr.apex, obj.apex, [H.d1(a) * n0 + K.d1(b) for a, b in pairs1])
    d2 = ctx.make(arr.apex, obj.apex, [H.d2(a) * n0 + K.d2(b) for a, b in pairs1])
    i = ctx.make(obj.apex, arr.apex, [H.i(x) * n1 + K.i(y) for x in range(H.G0.size) for y in range(n0)])
    s = ctx.make(arr.apex, arr.apex, [H.s(a) * n1 + K.s(b) for a, b in pairs1])
    pb = ctx.pullback(d2, d1)
    q1, q2 = pb.legs
    ctab = []
    for k in range(pb.apex.size):
        (a1, b1), (a2, b2) = pairs1[q1(k)], pairs1[q2(k)]
        ctab.append(H.comp(a1, a2) * n1 + K.comp(b1, b2))
    c = ctx.make(pb.apex, arr.apex, ctab)
    return Groupoid(ctx, d1, d2, i, c, s, name=f"{H.name}x{K.name}" if H.name and K.name else None)


INTERVAL = Equilogical(discrete(2), total(2), "I")


def interval_groupoid() -> Groupoid:
    """Two discrete objects, one arrow in each hom-set."""
    return from_span(functor_G(INTERVAL, "I"))


def terminal_groupoid() -> Groupoid:
    return from_span(functor_G(embed_T0(point()), "1"))


def _endpoint_functor(H: Groupoid, HI: Groupoid, I: Groupoid, end: int) -> GroupoidFunctor:
    """<id, end>: H -> H x I."""
    ctx = H.ctx
    n0, n1 = I.G0.size, I.G1.size
    f0 = ctx.make(H.G0, HI.G0, [x * n0 + end for x in range(H.G0.size)])
    f1 = ctx.make(H.G1, HI.G1, [a * n1 + I.i(end) for a in range(H.G1.size)])
    return GroupoidFunctor(H, HI, f1, f0)


@lru_cache(maxsize=64)
def _cylinder_base(H: Groupoid) -> tuple[Groupoid, Groupoid]:
    I = interval_groupoid()
    return I, product_groupoid(H, I)


def cylinder_homotopy(F: GroupoidFunctor, G: GroupoidFunctor, cap=None) -> GroupoidFunctor | None:
    """A functor K: H x I -> T restricting to F at 0 and to G at 1, if one exists."""
    H, T = F.source, F.target
    I, HI = _cylinder_base(H)
    ctx = H.ctx
    n0, n1 = I.G0.size, I.G1.size
    k0 = [F.f0(x) if j == 0 else G.f0(x) for x in range(H.G0.size) for j in range(n0)]
    K0 = ctx.make(HI.G0, T.G0, k0)
    by_ends: dict = {}
    for b, e in enumerate(T.edges()):
        by_ends.setdefault(e, []).append(b)
    id0, id1 = I.i(0), I.i(1)
    cands = []
    for a in range(H.G1.size):
        for j in range(n1):
            src, tgt = k0[HI.d1(a * n1 + j)], k0[HI.d2(a * n1 + j)]
            if j == id0:
                cands.append([F.f1(a)])
            elif j == id1:
                cands.append([G.f1(a)])
            else:
                cands.append(by_ends.get((src, tgt), []))
    for K1 in ctx.search(HI.G1, T.G1, cands, cap=cap):
        K = GroupoidFunctor(HI, T, K1, K0)
        if is_functor(K):
            return K
    return None


@dataclass
class Homotopy:
    witness: FinMap | None
    cylinder: GroupoidFunctor | None

    @property
    def exists(self) -> bool:
        return self.witness is not None


def homotopic_functors(F: GroupoidFunctor, G: GroupoidFunctor, both_ways: bool = True, cap=None) -> Homotopy:
    """Transformation witness, and (optionally) the corresponding cylinder functor.

    Raises InternalInvariantBreach when the two descriptions disagree.
    """
    a = nat_trans_witness(F, G, cap)
    if a is not None and not nat_trans_check(F, G, a):
        raise InternalInvariantBreach("witness search returned an invalid transformation")
    if not both_ways:
        return Homotopy(a, None)
    K = cylinder_homotopy(F, G, cap)
    if (a is None) != (K is None):
        raise InternalInvariantBreach("transformations and cylinder functors disagree")
    return Homotopy(a, K)


def reverse_witness(T: Groupoid, a: FinMap) -> FinMap:
    return T.ctx.compose(T.s, a)


def concat_witness(T: Groupoid, a: FinMap, b: FinMap) -> FinMap:
    """Pointwise composite of two transformations F => G => H."""
    return T.ctx.make(a.source, T.G1, [T.comp(a(x), b(x)) for x in range(a.source.size)])


# -- interval-object contract ---------------------------------------------------

@dataclass(frozen=True)
class IntervalObjectData:
    ambient: Any
    I: Any
    e0: Any  # T -> I
    e1: Any  # T -> I
    pushout: Any  # cocone (apex, (0', 1')) on the span I <-e1- T -e0-> I
    gamma: Any  # I -> I +_T I
    iota: Any  # I -> I


@dataclass
class IntervalReport:
    failures: list = field(default_factory=list)
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, name: str, ok: bool, detail=None):
        self.checks.append((name, ok))
        if not ok:
            self.failures.append((name, detail))


def verify_interval_structure(d: IntervalObjectData, samples: Sequence, probes: Sequence | None = None) -> IntervalReport:
    """Check the co-span equations, the pushout and its stability under products.

    ``ambient`` must offer terminal, compose, identity, pushout, copair,
    product, times (id_X x f), hom and is_iso.
    """
    amb = d.ambient
    rep = IntervalReport()
    c = amb.compose
    zero_p, one_p = d.pushout.legs
    rep.record("iota . 0 = 1", c(d.iota, d.e0) == d.e1)
    rep.record("iota . 1 = 0", c(d.iota, d.e1) == d.e0)
    rep.record("gamma . 0 = 0' . 0", c(d.gamma, d.e0) == c(zero_p, d.e0))
    rep.record("gamma . 1 = 1' . 1", c(d.gamma, d.e1) == c(one_p, d.e1))
    rep.record("pushout square commutes", c(zero_p, d.e1) == c(one_p, d.e0))
    probes = list(samples if probes is None else probes)
    for Y in probes:
        bad = check_pushout(amb, d.e1, d.e0, d.pushout, Y)
        rep.record(f"pushout universal against {amb.describe(Y)}", not bad, bad[:3])
    T = amb.terminal()
    for X in samples:
        XI = amb.product(X, d.I)
        XT = amb.product(X, T)
        l = amb.times(X, d.e1, XT, XI)
        r = amb.times(X, d.e0, XT, XI)
        Q = amb.pushout(l, r)
        XP = amb.product(X, d.pushout.apex)
        a = amb.times(X, zero_p, XI, XP)
        b = amb.times(X, one_p, XI, XP)
        if c(a, l) != c(b, r):
            rep.record(f"comparison cocone commutes for {amb.describe(X)}", False)
            continue
        comp = amb.copair(Q, a, b)
        rep.record(f"pushout stable under {amb.describe(X)} x -", amb.is_iso(comp))
    return rep


def check_pushout(amb, f, g, cocone, Y) -> list:
    """Failures of the pushout property of ``cocone`` on f: T -> A, g: T -> B against Y."""
    u, v = cocone.legs
    out = []
    for a in amb.hom(f.target, Y):
        for b in amb.hom(g.target, Y):
            if amb.compose(a, f) != amb.compose(b, g):
                continue
            ms = [m for m in amb.hom(cocone.apex, Y) if amb.compose(m, u) == a and amb.compose(m, v) == b]
            if len(ms) != 1:
                out.append((a, b, len(ms)))
            elif amb.copair(cocone, a, b) != ms[0]:
                out.append((a, b, "copairing"))
    return out


class SetoidAmbient:
    """T0 spaces with an equivalence relation and continuous relation-preserving maps.

    This is the category of subspatial spans (through ``functor_G``), where
    the interval groupoid lives.
    """

    def __init__(self, cap: int | None = None):
        self.cap = cap or TOP.cap

    def describe(self, X) -> str:
        return X.name or f"<{X.size} points, {len(X.partition())} classes>"

    def terminal(self) -> Equilogical:
        return embed_T0(point())

    def identity(self, X) -> FinMap:
        return FinMap(X, X, tuple(range(X.size)))

    def compose(self, g: FinMap, f: FinMap) -> FinMap:
        return FinMap(f.source, g.target, tuple(g(v) for v in f.table))

    def hom(self, X, Y) -> list[FinMap]:
        return hom_reps(X, Y, self.cap)

    def point_of(self, X, x: int) -> FinMap:
        return FinMap(self.terminal(), X, (x,))

    def product(self, X, Y) -> Equilogical:
        from .equ import product_equ
        return product_equ(X, Y)[0]

    def times(self, X, f: FinMap, XA, XB) -> FinMap:
        """id_X x f : X x A -> X x B."""
        na, nb = f.source.size, f.target.size
        return FinMap(XA, XB, tuple(x * nb + f(a) for x in range(X.size) for a in range(na)))

    def pushout(self, f: FinMap, g: FinMap) -> Cone:
        """Pushout of A <-f- C -g-> B: glued disjoint union, T0 reflection, generated relation."""
        A, B = f.target, g.target
        n = A.size + B.size
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for c_ in range(f.source.size):
            ra, rb = find(f(c_)), find(A.size + g(c_))
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        # quotient topology on the glued carrier, then T0 reflection
        roots = sorted({find(x) for x in range(n)})
        q = [roots.index(find(x)) for x in range(n)]
        m = len(roots)
        nb_a = [A.space.nbhd[x] for x in range(A.size)]
        nb_b = [B.space.nbhd[x] for x in range(B.size)]

        def is_open_q(mask: int) -> bool:
            pa = sum(1 << x for x in range(A.size) if mask >> q[x] & 1)
            pb = sum(1 << x for x in range(B.size) if mask >> q[A.size + x] & 1)
            return A.space.is_open(pa) and B.space.is_open(pb)

        # least open neighbourhood of a class: grow until saturated
        nbhd = []
        for k in range(m):
            u = 1 << k
            while True:
                w = u
                for x in range(A.size):
                    if u >> q[x] & 1:
                        for y in range(A.size):
                            if nb_a[x] >> y & 1:
                                w |= 1 << q[y]
                for x in range(B.size):
                    if u >> q[A.size + x] & 1:
                        for y in range(B.size):
                            if nb_b[x] >> y & 1:
                                w |= 1 << q[A.size + y]
                if w == u:
                    break
                u = w
            assert is_open_q(u)
            nbhd.append(u)
        # Kolmogorov quotient: points with equal neighbourhoods are identified
        kq = [min(j for j in range(m) if nbhd[j] == nbhd[k]) for k in range(m)]
        reps = sorted(set(kq))
        final = [reps.index(kq[k]) for k in range(m)]
        M = len(reps)
        fnb = []
        for r_ in reps:
            fnb.append(sum(1 << final[j] for j in range(m) if nbhd[r_] >> j & 1))
        space = FinSpace(M, tuple(fnb))
        to = [final[q[x]] for x in range(n)]
        # generated equivalence relation
        par = list(range(M))

        def fnd(x):
            while par[x] != x:
                par[x] = par[par[x]]
                x = par[x]
            return x

        for a, b in A.rel:
            ra, rb = fnd(to[a]), fnd(to[b])
            if ra != rb:
                par[max(ra, rb)] = min(ra, rb)
        for a, b in B.rel:
            ra, rb = fnd(to[A.size + a]), fnd(to[A.size + b])
            if ra != rb:
                par[max(ra, rb)] = min(ra, rb)
        rel = frozenset((x, y) for x in range(M) for y in range(M) if fnd(x) == fnd(y))
        P = Equilogical(space, rel)
        return Cone(P, (FinMap(A, P, tuple(to[:A.size])), FinMap(B, P, tuple(to[A.size:]))))

    def copair(self, cocone: Cone, a: FinMap, b: FinMap) -> FinMap:
        u, v = cocone.legs
        table = [None] * cocone.apex.size
        for x in range(u.source.size):
            table[u(x)] = a(x)
        for x in range(v.source.size):
            if table[v(x)] is not None and table[v(x)] != b(x):
                raise ValueError("cocone legs disagree on the glued points")
            table[v(x)] = b(x)
        if any(t is None for t in table):
            raise ValueError("pushout legs are not jointly surjective")
        return FinMap(cocone.apex, a.target, tuple(table))

    def is_iso(self, m: FinMap) -> bool:
        if not is_rep(m) or not m.is_injective() or len(set(m.table)) != m.target.size:
            return False
        inv = [0] * m.target.size
        for x, v in enumerate(m.table):
            inv[v] = x
        return is_rep(FinMap(m.target, m.source, tuple(inv)))


def interval_groupoid_data() -> IntervalObjectData:
    amb = SetoidAmbient()
    T = amb.terminal()
    e0, e1 = amb.point_of(INTERVAL, 0), amb.point_of(INTERVAL, 1)
    po = amb.pushout(e1, e0)
    # 0' . 0 and 1' . 1 are the two far ends
    far0, far1 = po.legs[0](0), po.legs[1](1)
    gamma = FinMap(INTERVAL, po.apex, (far0, far1))
    iota = FinMap(INTERVAL, INTERVAL, (1, 0))
    return IntervalObjectData(amb, INTERVAL, e0, e1, po, gamma, iota)


def setoid_samples() -> list[Equilogical]:
    from .fintop import chain, sierpinski
    return [
        embed_T0(point()),
        embed_T0(sierpinski()),
        Equilogical(discrete(2), total(2), "(discrete-2, total)"),
        Equilogical(discrete(2), diagonal(2), "(discrete-2, =)"),
        Equilogical(chain(3), from_partition([[0, 2], [1]]), "(chain-3, {0,2}{1})"),
        Equilogical(sierpinski(), total(2), "(sierpinski, total)"),
    ]


# -- homotopy quotient = Equ -----------------------------------------------------

@dataclass
class QuotientReport:
    pairs_checked: int = 0
    homotopic_pairs: int = 0
    counterexamples: list = field(default_factory=list)
    hom_counts: dict = field(default_factory=dict)
    relation_failures: list = field(default_factory=list)
    cylinder_checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.counterexamples and not self.relation_failures


def homotopy_quotient_equals_Equ(suite: Sequence[EquivalenceSpan], cylinder_limit: int = 0,
                                 cap: int | None = None) -> QuotientReport:
    """Three-way comparison of homotopy, identification and F-image equivalence.

    ``cylinder_limit`` bounds how many pairs per hom-set are additionally
    checked through the cylinder description of homotopy.
    """
    rep = QuotientReport()
    gs = [groupoid_from_jointly_monic(sp) for sp in suite]
    for S, T, GS, GT in ((S, T, GS, GT) for S, GS in zip(suite, gs) for T, GT in zip(suite, gs)):
        homs = list(graph_homs(S, T, cap=cap))
        rep.hom_counts[S.name, T.name] = len(homs)
        FS, FT = functor_F(S), functor_F(T)
        funcs = [graph_hom_is_functor(GS, GT, h.f1, h.f0) for h in homs]
        images = [FinMap(FS, FT, h.f0.table) for h in homs]
        cyl = 0
        for (h, F, fi), (k, G, gi) in itertools.product(zip(homs, funcs, images), repeat=2):
            rep.pairs_checked += 1
            both = cyl < cylinder_limit
            cyl += both
            hom = homotopic_functors(F, G, both_ways=both, cap=cap)
            rep.cylinder_checked += both
            ident = homs_identified(h, k, cap) is not None
            equiv = maps_equivalent(fi, gi)
            rep.homotopic_pairs += hom.exists
            if not (hom.exists == ident == equiv):
                rep.counterexamples.append((S.name, T.name, h.f0.table, k.f0.table, hom.exists, ident, equiv))
    return rep


def check_homotopy_relation(S: EquivalenceSpan, T: EquivalenceSpan, U: EquivalenceSpan | None = None,
                            cap: int | None = None) -> list:
    """Reflexivity, symmetry, transitivity and composition-compatibility of homotopy.

    Witnesses are built from i, s and c and then validated.
    """
    GS, GT = groupoid_from_jointly_monic(S), groupoid_from_jointly_monic(T)
    homs = list(graph_homs(S, T, cap=cap))
    funcs = [graph_hom_is_functor(GS, GT, h.f1, h.f0) for h in homs]
    out = []
    wit = {}
    for p, F in enumerate(funcs):
        a = GT.ctx.compose(GT.i, F.f0)
        if not nat_trans_check(F, F, a):
            out.append(("reflexivity", p))
        for q, G in enumerate(funcs):
            w = nat_trans_witness(F, G, cap)
            if w is not None:
                wit[p, q] = w
                if not nat_trans_check(G, F, reverse_witness(GT, w)):
                    out.append(("symmetry", p, q))
    # transitivity over every chain p => q => r; composites are checked on
    # their tables, and continuity once per distinct table
    d1t, d2t = GT.d1.table, GT.d2.table
    cont: dict = {}
    by_first: dict = {}
    for (q, r), b in wit.items():
        by_first.setdefault(q, []).append((r, b.table))
    for (p, q), a in wit.items():
        f0 = funcs[p].f0.table
        for r, b in by_first.get(q, ()):
            tab = tuple(GT.comp(u, v) for u, v in zip(a.table, b))
            h0 = funcs[r].f0.table
            ok = all(d1t[v] == f0[x] and d2t[v] == h0[x] for x, v in enumerate(tab))
            if ok:
                if tab not in cont:
                    cont[tab] = GT.ctx.is_morphism(FinMap(a.source, GT.G1, tab))
                ok = cont[tab]
            if not ok:
                out.append(("transitivity", p, q, r))
    if U is not None:
        GU = groupoid_from_jointly_monic(U)
        posts = [graph_hom_is_functor(GT, GU, h.f1, h.f0) for h in graph_homs(T, U, cap=cap)]
        pres = [graph_hom_is_functor(GS, GS, h.f1, h.f0) for h in graph_homs(S, S, cap=cap)]
        for (p, q), a in wit.items():
            F, G = funcs[p], funcs[q]
            for P in posts:
                whisk = GT.ctx.compose(P.f1, a)
                if not nat_trans_check(compose_functors(P, F), compose_functors(P, G), whisk):
                    out.append(("post-composition", p, q))
            for E in pres:
                whisk = GT.ctx.compose(a, E.f0)
                if not nat_trans_check(compose_functors(F, E), compose_functors(G, E), whisk):
                    out.append(("pre-composition", p, q))
    return out
