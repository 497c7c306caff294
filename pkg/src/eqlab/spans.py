"""Graphs and equivalence spans in an ambient, and the exact-completion quotient.

A span ``A1 => A0`` is stored with its legs ``d1, d2`` and explicit structure
maps ``r: A0 -> A1``, ``s: A1 -> A1`` and ``t: A1 x_A0 A1 -> A1``, where the
pullback is the canonical one of ``d2`` against ``d1`` (pairs of consecutive
arcs).  Homomorphisms are identified when some ``h: A0 -> B1`` joins their
object components.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Iterator

from .cat import Category, Cone, FinMap, MorphismPair, is_jointly_monic
from .equ import EquMap, Equilogical
from .fintop import TopCat, is_subspace_inclusion, product_space, subspace


class NotASpan(ValueError):
    pass


@dataclass(frozen=True)
class EquivalenceSpan:
    ctx: Any = field(compare=False, repr=False)
    d1: FinMap
    d2: FinMap
    r: FinMap
    s: FinMap
    t: FinMap
    # inclusion of t's domain into the pullback when t is only partial
    t_dom: FinMap | None = None
    name: str | None = field(default=None, compare=False)

    @property
    def A1(self):
        return self.d1.source

    @property
    def A0(self):
        return self.d1.target

    @property
    def pair(self) -> MorphismPair:
        return MorphismPair(self.d1, self.d2)

    @cached_property
    def composable(self) -> Cone:
        """Pullback of d2 against d1: pairs (a, b) with d2 a = d1 b."""
        return self.ctx.pullback(self.d2, self.d1)

    def edges(self) -> list[tuple[int, int]]:
        return list(zip(self.d1.table, self.d2.table))

    def is_truncated(self) -> bool:
        return self.t_dom is not None

    def t_pairs(self) -> list[tuple[int, int]]:
        """The (a, b) pairs on which t is defined, in t's source order."""
        q1, q2 = self.composable.legs
        idx = range(self.composable.apex.size) if self.t_dom is None else self.t_dom.table
        return [(q1(k), q2(k)) for k in idx]


def span_violations(sp: EquivalenceSpan) -> list[str]:
    ctx = sp.ctx
    out = []
    A1, A0 = sp.A1, sp.A0
    typing = [("d1", sp.d1, A1, A0), ("d2", sp.d2, A1, A0), ("r", sp.r, A0, A1), ("s", sp.s, A1, A1)]
    for nm, m, src, tgt in typing:
        if m.source != src or m.target != tgt:
            out.append(f"{nm} has the wrong endpoints")
    if out:
        return out
    for nm, m in [("d1", sp.d1), ("d2", sp.d2), ("r", sp.r), ("s", sp.s), ("t", sp.t)]:
        if not ctx.is_morphism(m):
            out.append(f"{nm} is not a morphism of the ambient")
    if sp.t_dom is not None and not ctx.is_morphism(sp.t_dom):
        out.append("domain inclusion of t is not a morphism")
    d1, d2 = sp.d1, sp.d2
    for x in range(A0.size):
        if d1(sp.r(x)) != x or d2(sp.r(x)) != x:
            out.append(f"reflexivity fails at {x}")
    for a in range(A1.size):
        if d1(sp.s(a)) != d2(a) or d2(sp.s(a)) != d1(a):
            out.append(f"symmetry fails at {a}")
    expected = sp.composable.apex if sp.t_dom is None else sp.t_dom.source
    if sp.t.source != expected or sp.t.target != A1:
        out.append("t has the wrong endpoints")
        return out
    if sp.t_dom is not None and sp.t_dom.target != sp.composable.apex:
        out.append("domain of t is not a subobject of the composable pairs")
        return out
    for k, (a, b) in enumerate(sp.t_pairs()):
        c = sp.t(k)
        if d1(c) != d1(a) or d2(c) != d2(b):
            out.append(f"compatibility fails at {(a, b)}")
    return out


def is_equivalence_span(sp: EquivalenceSpan) -> bool:
    return sp.t_dom is None and not span_violations(sp)


def make_span(ctx: Category, A1, A0, d1, d2, r, s, t, name=None) -> EquivalenceSpan:
    """Build a span from value tables; ``t`` is indexed by the canonical pullback."""
    d1m = ctx.make(A1, A0, d1)
    d2m = ctx.make(A1, A0, d2)
    pb = ctx.pullback(d2m, d1m)
    return EquivalenceSpan(ctx, d1m, d2m, ctx.make(A0, A1, r), ctx.make(A1, A1, s),
                           ctx.make(pb.apex, A1, t), name=name)


# -- structure solving ------------------------------------------------------

def _structure_searches(ctx: Category, d1: FinMap, d2: FinMap):
    A1, A0 = d1.source, d1.target
    edges = list(zip(d1.table, d2.table))
    by_ends: dict[tuple[int, int], list[int]] = {}
    for a, e in enumerate(edges):
        by_ends.setdefault(e, []).append(a)
    pb = ctx.pullback(d2, d1)
    q1, q2 = pb.legs
    tc = [by_ends.get((d1(q1(k)), d2(q2(k))), []) for k in range(pb.apex.size)]
    return (ctx.search(A0, A1, [by_ends.get((x, x), []) for x in range(A0.size)]),
            ctx.search(A1, A1, [by_ends.get((y, x), []) for x, y in edges]),
            ctx.search(pb.apex, A1, tc))


def structure_solutions(ctx: Category, d1: FinMap, d2: FinMap):
    """All valid r, all valid s and all valid t for the graph d1, d2."""
    return tuple(list(it) for it in _structure_searches(ctx, d1, d2))


def least_structure(ctx: Category, d1: FinMap, d2: FinMap):
    """The lexicographically least valid r, s and t (None where there is none).

    The search visits tables in lexicographic order, so the first hit is least.
    """
    return tuple(next(iter(it), None) for it in _structure_searches(ctx, d1, d2))


def auto_span(ctx: Category, d1: FinMap, d2: FinMap, name=None) -> EquivalenceSpan:
    """Span on d1, d2 with the least valid structure maps."""
    r, s, t = least_structure(ctx, d1, d2)
    if r is None or s is None or t is None:
        missing = [n for n, m in (("r", r), ("s", s), ("t", t)) if m is None]
        raise NotASpan(f"{name or 'graph'}: no valid {', '.join(missing)}")
    return EquivalenceSpan(ctx, d1, d2, r, s, t, name=name)


# -- homomorphisms and identification ---------------------------------------

@dataclass(frozen=True)
class GraphHom:
    source: EquivalenceSpan
    target: EquivalenceSpan
    f1: FinMap
    f0: FinMap


def hom_violations(h: GraphHom) -> list[str]:
    S, T = h.source, h.target
    out = []
    if h.f1.source != S.A1 or h.f1.target != T.A1 or h.f0.source != S.A0 or h.f0.target != T.A0:
        return ["components have the wrong endpoints"]
    ctx = S.ctx
    if not ctx.is_morphism(h.f1) or not ctx.is_morphism(h.f0):
        out.append("component is not a morphism of the ambient")
    for a in range(S.A1.size):
        if T.d1(h.f1(a)) != h.f0(S.d1(a)):
            out.append(f"first square fails at {a}")
        if T.d2(h.f1(a)) != h.f0(S.d2(a)):
            out.append(f"second square fails at {a}")
    return out


def is_graph_hom(h: GraphHom) -> bool:
    return not hom_violations(h)


def compose_homs(g: GraphHom, f: GraphHom) -> GraphHom:
    ctx = f.source.ctx
    return GraphHom(f.source, g.target, ctx.compose(g.f1, f.f1), ctx.compose(g.f0, f.f0))


def identity_hom(S: EquivalenceSpan) -> GraphHom:
    return GraphHom(S, S, S.ctx.identity(S.A1), S.ctx.identity(S.A0))


def join_witness(T: EquivalenceSpan, f0: FinMap, g0: FinMap, cap: int | None = None) -> FinMap | None:
    """Some h: A0 -> B1 with e1 h = f0 and e2 h = g0, searched exhaustively."""
    by_ends: dict[tuple[int, int], list[int]] = {}
    for b, e in enumerate(T.edges()):
        by_ends.setdefault(e, []).append(b)
    cands = [by_ends.get((f0(x), g0(x)), []) for x in range(f0.source.size)]
    return next(iter(T.ctx.search(f0.source, T.A1, cands, cap=cap)), None)


def homs_identified(h1: GraphHom, h2: GraphHom, cap: int | None = None) -> FinMap | None:
    """The joining witness when h1 and h2 are identified, else None."""
    if h1.source != h2.source or h1.target != h2.target:
        raise ValueError("homomorphisms are not parallel")
    return join_witness(h1.target, h1.f0, h2.f0, cap)


def graph_homs(S: EquivalenceSpan, T: EquivalenceSpan, cap: int | None = None) -> Iterator[GraphHom]:
    """Every homomorphism S -> T."""
    ctx = S.ctx
    by_ends: dict[tuple[int, int], list[int]] = {}
    for b, e in enumerate(T.edges()):
        by_ends.setdefault(e, []).append(b)
    for f0 in ctx.search(S.A0, T.A0, cap=cap):
        cands = [by_ends.get((f0(x), f0(y)), []) for x, y in S.edges()]
        for f1 in ctx.search(S.A1, T.A1, cands, cap=cap):
            yield GraphHom(S, T, f1, f0)


def identification_classes(homs: list[GraphHom], cap: int | None = None) -> list[list[GraphHom]]:
    classes: list[list[GraphHom]] = []
    for h in homs:
        for cls in classes:
            if homs_identified(cls[0], h, cap) is not None:
                cls.append(h)
                break
        else:
            classes.append([h])
    return classes


# -- subspatial spans and the comparison with equilogical spaces ------------

def tupled(sp: EquivalenceSpan) -> FinMap:
    cone = product_space(sp.A0, sp.A0)
    return TopCat().pair(cone, sp.d1, sp.d2)


def is_subspatial(sp: EquivalenceSpan) -> bool:
    if not isinstance(sp.ctx, TopCat):
        raise TypeError("subspatial spans live over finite spaces")
    return is_subspace_inclusion(tupled(sp))


def functor_F(sp: EquivalenceSpan) -> Equilogical:
    if not is_subspatial(sp):
        raise ValueError(f"{sp.name or 'span'} is not subspatial")
    return Equilogical(sp.A0, frozenset(sp.edges()), sp.name)


def functor_F_mor(h: GraphHom) -> EquMap:
    S, T = functor_F(h.source), functor_F(h.target)
    return EquMap.of(FinMap(S, T, h.f0.table))


@dataclass
class BijectionReport:
    """How F acts on one hom-set: identification classes against Equ classes."""

    source: str | None
    target: str | None
    span_classes: int
    equ_classes: int
    problems: list

    @property
    def ok(self) -> bool:
        return not self.problems


def F_bijection(S: EquivalenceSpan, T: EquivalenceSpan, cap: int | None = None) -> BijectionReport:
    """Whether F is well defined, injective and surjective from classes of S -> T."""
    from .equ import hom_set

    classes = identification_classes(list(graph_homs(S, T, cap=cap)), cap)
    FS, FT = functor_F(S), functor_F(T)
    problems = []
    images = []
    for cls in classes:
        ims = {functor_F_mor(h) for h in cls}
        if len(ims) != 1:
            problems.append(("not well defined", cls[0].f0.table))
        images.append(min(ims, key=lambda m: m.canonical.table))
    if len(set(images)) != len(images):
        problems.append(("not injective",))
    target = hom_set(FS, FT) if cap is None else hom_set(FS, FT, cap)
    missing = set(target) - set(images)
    if missing:
        problems.append(("not surjective", sorted(m.canonical.table for m in missing)))
    return BijectionReport(S.name, T.name, len(classes), len(target), problems)


def FG_identity_on_objects(e: Equilogical) -> bool:
    back = functor_F(functor_G(e))
    return back.space == e.space and back.rel == e.rel


def functor_G(e: Equilogical, name: str | None = None) -> EquivalenceSpan:
    """Relation with the subspace topology over the product, and its projections."""
    n = e.size
    ctx = TopCat()
    pairs = sorted(e.rel)
    cone = subspace(product_space(e.space, e.space).apex, [a * n + b for a, b in pairs])
    A1 = cone.apex
    index = {p: i for i, p in enumerate(pairs)}
    d1 = FinMap(A1, e.space, tuple(a for a, _ in pairs))
    d2 = FinMap(A1, e.space, tuple(b for _, b in pairs))
    r = FinMap(e.space, A1, tuple(index[x, x] for x in range(n)))
    s = FinMap(A1, A1, tuple(index[b, a] for a, b in pairs))
    pb = ctx.pullback(d2, d1)
    q1, q2 = pb.legs
    t = FinMap(pb.apex, A1, tuple(index[pairs[q1(k)][0], pairs[q2(k)][1]] for k in range(pb.apex.size)))
    return EquivalenceSpan(ctx, d1, d2, r, s, t, name=name or e.name)


def forced_f1(S: EquivalenceSpan, T: EquivalenceSpan, f0: FinMap) -> FinMap | None:
    """The unique arc component over f0 into a jointly monic target, if any."""
    index = {e: b for b, e in enumerate(T.edges())}
    table = []
    for x, y in S.edges():
        b = index.get((f0(x), f0(y)))
        if b is None:
            return None
        table.append(b)
    f1 = FinMap(S.A1, T.A1, tuple(table))
    return f1 if S.ctx.is_morphism(f1) else None


def jointly_monic(sp: EquivalenceSpan) -> bool:
    return is_jointly_monic(sp.ctx, sp.pair)


def to_dot(sp: EquivalenceSpan, name: str = "G", edge_labels=None) -> str:
    lines = [f"digraph {name} {{"]
    for x in range(sp.A0.size):
        lines.append(f"  n{x};")
    for a, (x, y) in enumerate(sp.edges()):
        label = edge_labels[a] if edge_labels else str(a)
        lines.append(f'  n{x} -> n{y} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
