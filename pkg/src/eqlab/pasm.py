"""Partitioned assemblies, tracked maps, finite limits and the monic form of spans.

An assembly is a finite carrier ``0..n-1`` with a realizer ``xi[x]``.  A map
is a function on carriers together with a tracker program sending the
realizer of ``x`` to the realizer of ``f(x)``; the tracker is evidence only
and plays no part in equality.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from . import tracklang as tl
from .cat import Category, Cone, FinMap
from .spans import EquivalenceSpan, GraphHom, homs_identified, is_equivalence_span, span_violations

DEFAULT_BUDGET = 10_000


@dataclass(frozen=True)
class PartitionedAssembly:
    xi: tuple[int, ...]
    name: str | None = field(default=None, compare=False)
    labels: tuple | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if any(v < 0 for v in self.xi):
            raise ValueError("realizers must be natural numbers")

    @property
    def size(self) -> int:
        return len(self.xi)


def assembly(xi: Sequence[int], name=None, labels=None) -> PartitionedAssembly:
    return PartitionedAssembly(tuple(xi), name, tuple(labels) if labels is not None else None)


TERMINAL = PartitionedAssembly((0,), "1")


class NotTrackable(ValueError):
    """The function separates two points with the same realizer."""

    def __init__(self, a: int, b: int):
        super().__init__(f"points {a} and {b} share a realizer but their images do not")
        self.pair = (a, b)


def is_morphism(src: PartitionedAssembly, tgt: PartitionedAssembly, f: Sequence[int],
                tracker: tl.Program, budget: int) -> bool:
    """Does ``tracker`` carry xi(x) to zeta(f(x)) within budget for every x?"""
    for x in range(src.size):
        if tl.run(tracker, src.xi[x], budget) != tgt.xi[f[x]]:
            return False
    return True


def inconsistency(src: PartitionedAssembly, tgt: PartitionedAssembly, f: Sequence[int]):
    """A pair of points that no tracker can handle, or None."""
    seen: dict[int, int] = {}
    for x in range(src.size):
        r = src.xi[x]
        if r in seen and tgt.xi[f[seen[r]]] != tgt.xi[f[x]]:
            return seen[r], x
        seen.setdefault(r, x)
    return None


def auto_track(src: PartitionedAssembly, tgt: PartitionedAssembly, f: Sequence[int]) -> FinMap:
    bad = inconsistency(src, tgt, f)
    if bad is not None:
        raise NotTrackable(*bad)
    io = {(src.xi[x], tgt.xi[f[x]]) for x in range(src.size)}
    return FinMap(src, tgt, tuple(f), tl.synthesize_table_tracker(io), tl.table_budget(len(io)))


class PAsmCat(Category):
    """Partitioned assemblies and tracked maps."""

    name = "pasm"

    def __init__(self, cap: int | None = None):
        if cap is not None:
            self.cap = cap

    def is_morphism(self, m: FinMap) -> bool:
        if not isinstance(m.source, PartitionedAssembly) or not isinstance(m.target, PartitionedAssembly):
            return False
        if m.tracker is not None:
            return is_morphism(m.source, m.target, m.table, m.tracker, m.budget or DEFAULT_BUDGET)
        return inconsistency(m.source, m.target, m.table) is None

    def compatible(self, a, b, x, y, fx, fy) -> bool:
        return a.xi[x] != a.xi[y] or b.xi[fx] == b.xi[fy]

    def make(self, a, b, table) -> FinMap:
        return auto_track(a, b, table)

    def make_if_morphism(self, a, b, table):
        if inconsistency(a, b, table) is not None:
            return None
        return auto_track(a, b, table)

    def identity(self, a) -> FinMap:
        return FinMap(a, a, tuple(range(a.size)), tl.X, 1)

    def compose(self, g: FinMap, f: FinMap) -> FinMap:
        if f.target != g.source:
            raise ValueError("morphisms are not composable")
        table = tuple(g.table[v] for v in f.table)
        if f.tracker is None or g.tracker is None:
            return auto_track(f.source, g.target, table)
        return FinMap(f.source, g.target, table, tl.Compose(g.tracker, f.tracker),
                      (f.budget or DEFAULT_BUDGET) + (g.budget or DEFAULT_BUDGET) + 1)

    def terminal(self) -> PartitionedAssembly:
        return TERMINAL

    def to_terminal(self, a) -> FinMap:
        return FinMap(a, TERMINAL, (0,) * a.size, tl.Const(0), 1)

    def product(self, a: PartitionedAssembly, b: PartitionedAssembly) -> Cone:
        return product_pasm(a, b)

    def pair(self, cone: Cone, f: FinMap, g: FinMap) -> FinMap:
        n = cone.legs[1].target.size
        table = tuple(f(x) * n + g(x) for x in range(f.source.size))
        if f.tracker is None or g.tracker is None:
            return auto_track(f.source, cone.apex, table)
        return FinMap(f.source, cone.apex, table, tl.Pair(f.tracker, g.tracker),
                      (f.budget or DEFAULT_BUDGET) + (g.budget or DEFAULT_BUDGET) + 1)

    def equalizer(self, f: FinMap, g: FinMap) -> Cone:
        return equalizer_pasm(f, g)

    def equalizer_factor(self, cone: Cone, h: FinMap) -> FinMap:
        index = {v: i for i, v in enumerate(cone.legs[0].table)}
        try:
            table = tuple(index[v] for v in h.table)
        except KeyError:
            raise ValueError("morphism does not factor through the equalizer") from None
        # realizers are inherited, so the tracker of h still works
        if h.tracker is None:
            return auto_track(h.source, cone.apex, table)
        return FinMap(h.source, cone.apex, table, h.tracker, h.budget)

    def pullback(self, f: FinMap, g: FinMap) -> Cone:
        # same carrier, realizers and legs as the equalizer of the product
        # composites, without materializing the whole product first
        if f.target != g.target:
            raise ValueError("a cospan needs a shared codomain")
        A, B = f.source, g.source
        over: dict[int, list[int]] = {}
        for b in range(B.size):
            over.setdefault(g(b), []).append(b)
        pairs = tuple((a, b) for a in range(A.size) for b in over.get(f(a), ()))
        apex = PartitionedAssembly(tuple(tl.cantor_pair(A.xi[a], B.xi[b]) for a, b in pairs), None, pairs)
        return Cone(apex, (FinMap(apex, A, tuple(a for a, _ in pairs), tl.Fst(tl.X), 2),
                           FinMap(apex, B, tuple(b for _, b in pairs), tl.Snd(tl.X), 2)))

    def pullback_factor(self, cone: Cone, h1: FinMap, h2: FinMap) -> FinMap:
        index = {(a, b): i for i, (a, b) in enumerate(zip(cone.legs[0].table, cone.legs[1].table))}
        try:
            table = tuple(index[h1(x), h2(x)] for x in range(h1.source.size))
        except KeyError:
            raise ValueError("the pair does not factor through the pullback") from None
        if h1.tracker is None or h2.tracker is None:
            return auto_track(h1.source, cone.apex, table)
        return FinMap(h1.source, cone.apex, table, tl.Pair(h1.tracker, h2.tracker),
                      (h1.budget or DEFAULT_BUDGET) + (h2.budget or DEFAULT_BUDGET) + 1)


PASM = PAsmCat()


def product_pasm(a: PartitionedAssembly, b: PartitionedAssembly) -> Cone:
    k = b.size
    xi = tuple(tl.cantor_pair(a.xi[i], b.xi[j]) for i in range(a.size) for j in range(k))
    labels = tuple((i, j) for i in range(a.size) for j in range(k))
    p = PartitionedAssembly(xi, None, labels)
    p1 = FinMap(p, a, tuple(i for i, _ in labels), tl.Fst(tl.X), 2)
    p2 = FinMap(p, b, tuple(j for _, j in labels), tl.Snd(tl.X), 2)
    return Cone(p, (p1, p2))


def equalizer_pasm(f: FinMap, g: FinMap) -> Cone:
    if f.source != g.source or f.target != g.target:
        raise ValueError("equalizer needs a parallel pair")
    src = f.source
    keep = [x for x in range(src.size) if f(x) == g(x)]
    labels = tuple(src.labels[x] for x in keep) if src.labels else tuple(keep)
    e = PartitionedAssembly(tuple(src.xi[x] for x in keep), None, labels)
    return Cone(e, (FinMap(e, src, tuple(keep), tl.X, 1),))


# -- monic form -----------------------------------------------------------------

@dataclass(frozen=True)
class MonicFormSpan:
    """A span rewritten on the image of its triple (d1, d2, realizer)."""

    original: EquivalenceSpan
    span: EquivalenceSpan
    triples: tuple[tuple[int, int, int], ...]
    f: FinMap  # A1 -> E, factoring surjection
    section: FinMap  # E -> A1, least preimage

    @property
    def E(self) -> PartitionedAssembly:
        return self.span.A1

    @property
    def A0(self) -> PartitionedAssembly:
        return self.span.A0

    def to_monic(self) -> GraphHom:
        return GraphHom(self.original, self.span, self.f, PASM.identity(self.A0))

    def from_monic(self) -> GraphHom:
        return GraphHom(self.span, self.original, self.section, PASM.identity(self.A0))


class NotInPAsm(ValueError):
    pass


def _well_defined(images: dict, what: str) -> dict:
    out = {}
    for k, vs in images.items():
        if len(vs) != 1:
            raise AssertionError(f"{what} is not well defined on the image at {k}: {sorted(vs)}")
        out[k] = next(iter(vs))
    return out


def monic_form(sp: EquivalenceSpan) -> MonicFormSpan:
    """Image span of (d1, d2, realizer) with structure induced without a section."""
    if not isinstance(sp.ctx, PAsmCat):
        raise NotInPAsm("monic form is computed for spans of assemblies")
    if not is_equivalence_span(sp):
        raise ValueError(f"{sp.name or 'span'} is not an equivalence span: {span_violations(sp)}")
    A1, A0 = sp.A1, sp.A0
    trip = [(sp.d1(a), sp.d2(a), A1.xi[a]) for a in range(A1.size)]
    triples = tuple(sorted(set(trip)))
    index = {t: i for i, t in enumerate(triples)}
    E = PartitionedAssembly(tuple(n for _, _, n in triples), f"E({sp.name})" if sp.name else None, triples)
    f = FinMap(A1, E, tuple(index[t] for t in trip), tl.X, 1)
    e1 = auto_track(E, A0, [x for x, _, _ in triples])
    e2 = auto_track(E, A0, [y for _, y, _ in triples])
    r = auto_track(A0, E, [f(sp.r(x)) for x in range(A0.size)])
    s_img: dict[int, set] = {}
    for a in range(A1.size):
        s_img.setdefault(f(a), set()).add(f(sp.s(a)))
    s = _well_defined(s_img, "symmetry")
    sE = auto_track(E, E, [s[i] for i in range(E.size)])
    pb = PASM.pullback(e2, e1)
    q1, q2 = pb.legs
    t_img: dict[tuple[int, int], set] = {}
    for k, (a, b) in enumerate(sp.t_pairs()):
        t_img.setdefault((f(a), f(b)), set()).add(f(sp.t(k)))
    t = _well_defined(t_img, "composition")
    tE = auto_track(pb.apex, E, [t[q1(k), q2(k)] for k in range(pb.apex.size)])
    span = EquivalenceSpan(PASM, e1, e2, r, sE, tE, name=E.name)
    first = {}
    for a in range(A1.size):
        first.setdefault(f(a), a)
    section = FinMap(E, A1, tuple(first[i] for i in range(E.size)), tl.X, 1)
    return MonicFormSpan(sp, span, triples, f, section)


def triple_is_monic(sp: EquivalenceSpan) -> bool:
    trip = [(sp.d1(a), sp.d2(a), sp.A1.xi[a]) for a in range(sp.A1.size)]
    return len(set(trip)) == len(trip)


@dataclass
class MonicFormReport:
    injective: bool
    span_ok: bool
    homs_ok: bool
    round_trip_exact: bool
    monic_round_trip_witness: FinMap | None
    original_round_trip_witness: FinMap | None

    @property
    def ok(self) -> bool:
        return (self.injective and self.span_ok and self.homs_ok and self.round_trip_exact
                and self.monic_round_trip_witness is not None
                and self.original_round_trip_witness is not None)


def check_monic_form(mf: MonicFormSpan) -> MonicFormReport:
    from .spans import compose_homs, hom_violations, identity_hom

    injective = triple_is_monic(mf.span)
    span_ok = is_equivalence_span(mf.span)
    there, back = mf.to_monic(), mf.from_monic()
    homs_ok = not hom_violations(there) and not hom_violations(back)
    on_monic = compose_homs(there, back)
    on_original = compose_homs(back, there)
    exact = on_monic.f1 == PASM.identity(mf.E) and on_monic.f0 == PASM.identity(mf.A0)
    w1 = homs_identified(on_monic, identity_hom(mf.span))
    w2 = homs_identified(on_original, identity_hom(mf.original))
    return MonicFormReport(injective, span_ok, homs_ok, exact, w1, w2)
