"""2-groupoids in assemblies: zigzags, free dagger categories and numeric 2-groupoids.

The free dagger category on a graph is infinite, so every check works on the
truncation to zigzags of length at most ``L``; composition is partial past
the bound.  A numeric 2-groupoid has exactly one 2-cell between any two
parallel 1-cells, so 2-cells are represented as pairs of zigzags.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from . import tracklang as tl
from .cat import Cone, FinMap, Unsupported
from .pasm import PASM, MonicFormSpan, PartitionedAssembly, assembly, auto_track, monic_form
from .spans import (EquivalenceSpan, GraphHom, compose_homs, hom_violations, homs_identified,
                    identity_hom, is_equivalence_span, join_witness, span_violations)

DEFAULT_L = 3


class InvalidZigzag(ValueError):
    pass


class TruncationError(ValueError):
    """A composite needed by a construction lies beyond the length bound."""


# -- bases and zigzags -----------------------------------------------------------

@dataclass(frozen=True)
class ZigzagBase:
    """A graph of assemblies whose edges are triples (source, target, realizer)."""

    alpha0: tuple[int, ...]
    triples: tuple[tuple[int, int, int], ...]
    name: str | None = field(default=None, compare=False)
    edge_names: tuple = field(default=(), compare=False)

    def __post_init__(self):
        n = len(self.alpha0)
        for x, y, _ in self.triples:
            if not (0 <= x < n and 0 <= y < n):
                raise ValueError(f"{self.name or 'base'}: edge {(x, y)} mentions a missing node")
        if len(set(self.triples)) != len(self.triples):
            raise ValueError(f"{self.name or 'base'}: repeated edge triple")

    @property
    def size(self) -> int:
        return len(self.alpha0)

    @classmethod
    def from_monic(cls, mf: MonicFormSpan, name: str | None = None) -> "ZigzagBase":
        return cls(tuple(mf.A0.xi), tuple(mf.triples), name or mf.original.name)

    @classmethod
    def from_span(cls, sp: EquivalenceSpan) -> "ZigzagBase":
        return cls.from_monic(monic_form(sp))

    @cached_property
    def steps_from(self) -> dict[int, list[tuple[int, int, int]]]:
        """Steps (edge realizer, mark, next node) leaving each node."""
        out: dict[int, list] = {x: [] for x in range(self.size)}
        for x, y, n in self.triples:
            out[x].append((n, 0, y))
            out[y].append((n, 1, x))
        return {x: sorted(v) for x, v in out.items()}

    def edge_label(self, n: int) -> str:
        names = dict(self.edge_names)
        return names.get(n, str(n))

    def edge_index(self, x: int, y: int, n: int) -> int:
        return self.triples.index((x, y, n))


@dataclass(frozen=True, order=True)
class Zigzag:
    """A path from ``start`` whose steps are (edge realizer, mark, next node)."""

    start: int
    steps: tuple[tuple[int, int, int], ...] = ()

    @property
    def end(self) -> int:
        return self.steps[-1][2] if self.steps else self.start

    def __len__(self) -> int:
        return len(self.steps)

    def nodes(self) -> list[int]:
        return [self.start] + [x for _, _, x in self.steps]

    def to_list(self) -> list[int]:
        """Flat list <x0, e1, i1, x1, ...>."""
        out = [self.start]
        for n, i, x in self.steps:
            out += [n, i, x]
        return out

    @classmethod
    def from_list(cls, xs: Sequence[int]) -> "Zigzag":
        if len(xs) % 3 != 1:
            raise InvalidZigzag("a zigzag list has length 1 mod 3")
        return cls(xs[0], tuple((xs[k], xs[k + 1], xs[k + 2]) for k in range(1, len(xs), 3)))


def singleton(x: int) -> Zigzag:
    return Zigzag(x)


def concat(z: Zigzag, w: Zigzag) -> Zigzag:
    if z.end != w.start:
        raise InvalidZigzag(f"cannot concatenate: {z.end} != {w.start}")
    return Zigzag(z.start, z.steps + w.steps)


def dagger(z: Zigzag) -> Zigzag:
    """Reverse the path and swap every mark."""
    nodes = z.nodes()
    steps = tuple((n, 1 - i, nodes[k]) for k, (n, i, _) in reversed(list(enumerate(z.steps))))
    return Zigzag(z.end, steps)


def zigzag_problem(z: Zigzag, base: ZigzagBase) -> str | None:
    trip = set(base.triples)
    if not 0 <= z.start < base.size:
        return f"node {z.start} is not in the base"
    x = z.start
    for k, (n, i, y) in enumerate(z.steps, 1):
        if i not in (0, 1):
            return f"mark {i} at step {k} is not 0 or 1"
        if not 0 <= y < base.size:
            return f"node {y} is not in the base"
        edge = (x, y, n) if i == 0 else (y, x, n)
        if edge not in trip:
            return f"step {k}: no edge {edge}"
        x = y
    return None


def is_valid(z: Zigzag, base: ZigzagBase) -> bool:
    return zigzag_problem(z, base) is None


def alpha_wedge(z: Zigzag, base: ZigzagBase) -> int:
    """Numeric code of a zigzag, built from its prefixes with cantor pairing."""
    bad = zigzag_problem(z, base)
    if bad:
        raise InvalidZigzag(bad)
    a0 = base.alpha0
    pair = tl.cantor_pair
    code = pair(0, a0[z.start])
    for ell, (n, i, x) in enumerate(z.steps, 1):
        code = pair(ell, pair(code, pair(pair(n, i), a0[x])))
    return code


def pretty(z: Zigzag, base: ZigzagBase | None = None) -> str:
    out = str(z.start)
    for n, i, x in z.steps:
        lab = base.edge_label(n) if base else str(n)
        out += f" -{lab},{i}-> {x}"
    return out


def enumerate_zigzags(base: ZigzagBase, L: int) -> list[Zigzag]:
    """Every valid zigzag of length <= L, by length then lexicographically."""
    layer = [singleton(x) for x in range(base.size)]
    out = list(layer)
    for _ in range(L):
        nxt = []
        for z in layer:
            for st in base.steps_from[z.end]:
                nxt.append(Zigzag(z.start, z.steps + (st,)))
        nxt.sort()
        out += nxt
        layer = nxt
    return out


def base_to_dot(base: ZigzagBase, name: str = "G") -> str:
    lines = [f"digraph {name} {{"]
    for x in range(base.size):
        lines.append(f'  n{x} [label="{x}"];')
    for x, y, n in base.triples:
        lines.append(f'  n{x} -> n{y} [label="{base.edge_label(n)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def zigzag_to_dot(z: Zigzag, base: ZigzagBase, name: str = "Z") -> str:
    """A zigzag as a labelled path; backward steps are drawn against the edge."""
    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    for k, x in enumerate(z.nodes()):
        lines.append(f'  p{k} [label="{x}"];')
    for k, (n, i, _) in enumerate(z.steps):
        lines.append(f'  p{k} -> p{k + 1} [label="{base.edge_label(n)},{i}"{", dir=back" if i else ""}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- numeric 2-groupoids -----------------------------------------------------------

@dataclass(frozen=True)
class NumericTwoGroupoid:
    """Free dagger category on ``base`` with the total relation on each 1-hom-set.

    1-cells are zigzags and 2-cells are pairs of parallel zigzags.  Cells are
    produced on demand; ``cells1`` and ``cells2`` enumerate the truncation.
    """

    base: ZigzagBase
    L: int = DEFAULT_L
    name: str | None = field(default=None, compare=False)

    @property
    def objects(self) -> range:
        return range(self.base.size)

    @cached_property
    def cells1(self) -> list[Zigzag]:
        return enumerate_zigzags(self.base, self.L)

    @cached_property
    def index1(self) -> dict[Zigzag, int]:
        return {z: k for k, z in enumerate(self.cells1)}

    @cached_property
    def homs(self) -> dict[tuple[int, int], list[Zigzag]]:
        out: dict = {}
        for z in self.cells1:
            out.setdefault((z.start, z.end), []).append(z)
        return out

    def cells2(self, bound: int | None = None) -> Iterator[tuple[Zigzag, Zigzag]]:
        bound = self.L if bound is None else bound
        for zs in self.homs.values():
            zs = [z for z in zs if len(z) <= bound]
            yield from itertools.product(zs, repeat=2)

    def contains1(self, z: Zigzag) -> bool:
        return is_valid(z, self.base)

    # structure, on cells of any length
    def d11(self, z: Zigzag) -> int:
        return z.start

    def d12(self, z: Zigzag) -> int:
        return z.end

    def r1(self, x: int) -> Zigzag:
        return singleton(x)

    def c1(self, z: Zigzag, w: Zigzag) -> Zigzag:
        return concat(z, w)

    def s1(self, z: Zigzag) -> Zigzag:
        return dagger(z)

    @staticmethod
    def d21(a):
        return a[0]

    @staticmethod
    def d22(a):
        return a[1]

    def r2(self, z: Zigzag):
        return (z, z)

    def c2(self, a, b):
        if a[1] != b[0]:
            raise InvalidZigzag("2-cells are not vertically composable")
        return (a[0], b[1])

    def c2h(self, a, b):
        return (concat(a[0], b[0]), concat(a[1], b[1]))

    def s2(self, a):
        return (a[1], a[0])

    def q(self, z: Zigzag):
        """The 2-cell from z followed by its dagger to the identity on its start."""
        return (concat(z, dagger(z)), singleton(z.start))

    def two_cell(self, z: Zigzag, w: Zigzag):
        """The unique 2-cell z => w, or None when they are not parallel."""
        if (z.start, z.end) != (w.start, w.end):
            return None
        return (z, w)

    # codes
    def code1(self, z: Zigzag) -> int:
        return alpha_wedge(z, self.base)

    def code2(self, a) -> int:
        return tl.cantor_pair(self.code1(a[0]), self.code1(a[1]))

    def ambient_code1(self, z: Zigzag) -> tuple[int, int, int]:
        """Image in G0 x G0 x N."""
        return (z.start, z.end, self.code1(z))

    def ambient_code2(self, a) -> tuple[int, int, int, int]:
        """Image in G0 x G0 x N x N."""
        return (a[0].start, a[0].end, self.code1(a[0]), self.code1(a[1]))


def free_dagger_numeric(base: MonicFormSpan | ZigzagBase | EquivalenceSpan, L: int = DEFAULT_L,
                        name: str | None = None) -> NumericTwoGroupoid:
    if isinstance(base, MonicFormSpan):
        base = ZigzagBase.from_monic(base)
    elif isinstance(base, EquivalenceSpan):
        base = ZigzagBase.from_span(base)
    return NumericTwoGroupoid(base, L, name or base.name)


def interval_base() -> ZigzagBase:
    """Two nodes with realizers 0 and 1 and one edge u between them."""
    return ZigzagBase((0, 1), ((0, 1, 0),), "I", ((0, "u"),))


def interval_two_groupoid(L: int = DEFAULT_L) -> NumericTwoGroupoid:
    return NumericTwoGroupoid(interval_base(), L, "I")


# -- finite 2-groupoids and their validator ----------------------------------------

@dataclass
class TwoGroupoid:
    """A finite (possibly truncated) 2-groupoid given by tables.

    Composition tables are dicts on composable pairs; with ``partial`` set,
    missing entries mean the composite lies beyond the truncation.
    """

    n0: int
    d11: list[int]
    d12: list[int]
    d21: list[int]
    d22: list[int]
    r1: list[int]
    c1: dict
    s1: list[int]
    r2: dict
    c2: dict
    c2h: dict
    s2: list[int]
    q: dict
    partial: bool = False


@dataclass
class TwoGroupoidReport:
    violations: list = field(default_factory=list)
    q_orientation: str | None = None
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations


def two_groupoid_violations(g: TwoGroupoid) -> TwoGroupoidReport:
    rep = TwoGroupoidReport()
    bad = rep.violations
    n1, n2 = len(g.d11), len(g.d21)
    d11, d12, d21, d22 = g.d11, g.d12, g.d21, g.d22

    def get(table, key, what):
        if key in table:
            return table[key]
        if not g.partial:
            bad.append(f"{what} undefined at {key}")
        return None

    for a in range(n2):
        rep.checked += 1
        if d11[d21[a]] != d11[d22[a]] or d12[d21[a]] != d12[d22[a]]:
            bad.append(f"globularity fails at 2-cell {a}")
    # 1-category
    for x in range(g.n0):
        if d11[g.r1[x]] != x or d12[g.r1[x]] != x:
            bad.append(f"r1 has wrong faces at {x}")
    comp1 = [(f, h) for f in range(n1) for h in range(n1) if d12[f] == d11[h]]
    for f, h in comp1:
        rep.checked += 1
        fh = get(g.c1, (f, h), "c1")
        if fh is None:
            continue
        if d11[fh] != d11[f] or d12[fh] != d12[h]:
            bad.append(f"c1 has wrong faces at {(f, h)}")
    for f in range(n1):
        if g.c1.get((g.r1[d11[f]], f), f) != f or g.c1.get((f, g.r1[d12[f]]), f) != f:
            bad.append(f"unit law for c1 fails at {f}")
        if g.s1[g.s1[f]] != f:
            bad.append(f"s1 is not an involution at {f}")
        if d11[g.s1[f]] != d12[f] or d12[g.s1[f]] != d11[f]:
            bad.append(f"s1 has wrong faces at {f}")
    for (f, h) in comp1:
        fh = g.c1.get((f, h))
        if fh is None:
            continue
        for k in range(n1):
            if d11[k] != d12[h]:
                continue
            hk = g.c1.get((h, k))
            if hk is None:
                continue
            left, right = g.c1.get((fh, k)), g.c1.get((f, hk))
            if left is not None and right is not None and left != right:
                bad.append(f"c1 is not associative at {(f, h, k)}")
    # vertical composition
    for f, a in g.r2.items():
        if d21[a] != f or d22[a] != f:
            bad.append(f"r2 has wrong faces at {f}")
    vert = [(a, b) for a in range(n2) for b in range(n2) if d22[a] == d21[b]]
    for a, b in vert:
        rep.checked += 1
        ab = get(g.c2, (a, b), "c2")
        if ab is None:
            continue
        if d21[ab] != d21[a] or d22[ab] != d22[b]:
            bad.append(f"c2 has wrong faces at {(a, b)}")
    for a in range(n2):
        if g.c2.get((g.r2[d21[a]], a), a) != a or g.c2.get((a, g.r2[d22[a]]), a) != a:
            bad.append(f"unit law for c2 fails at {a}")
        if g.s2[g.s2[a]] != a:
            bad.append(f"s2 is not an involution at {a}")
        if g.c2.get((a, g.s2[a]), g.r2[d21[a]]) != g.r2[d21[a]] or \
                g.c2.get((g.s2[a], a), g.r2[d22[a]]) != g.r2[d22[a]]:
            bad.append(f"s2 does not invert {a}")
    for a, b in vert:
        ab = g.c2.get((a, b))
        if ab is None:
            continue
        for c in range(n2):
            if d21[c] != d22[b]:
                continue
            bc = g.c2.get((b, c))
            left = g.c2.get((ab, c))
            right = g.c2.get((a, bc)) if bc is not None else None
            if left is not None and right is not None and left != right:
                bad.append(f"c2 is not associative at {(a, b, c)}")
    # horizontal composition and interchange
    horiz = [(a, b) for a in range(n2) for b in range(n2) if d12[d22[a]] == d11[d21[b]]]
    for a, b in horiz:
        rep.checked += 1
        ab = get(g.c2h, (a, b), "c2'")
        if ab is None:
            continue
        top, bot = g.c1.get((d21[a], d21[b])), g.c1.get((d22[a], d22[b]))
        if top is not None and d21[ab] != top or bot is not None and d22[ab] != bot:
            bad.append(f"c2' has wrong faces at {(a, b)}")
    for f, h in comp1:
        fh = g.c1.get((f, h))
        if f not in g.r2 or h not in g.r2:
            continue
        got = g.c2h.get((g.r2[f], g.r2[h]))
        if fh is not None and got is not None and got != g.r2.get(fh, got):
            bad.append(f"c2' does not preserve identities at {(f, h)}")
    for a, b in horiz:
        for a2 in range(n2):
            if d21[a2] != d22[a]:
                continue
            for b2 in range(n2):
                if d21[b2] != d22[b]:
                    continue
                v1, v2 = g.c2.get((a, a2)), g.c2.get((b, b2))
                h1, h2 = g.c2h.get((a, b)), g.c2h.get((a2, b2))
                if None in (v1, v2, h1, h2):
                    continue
                left, right = g.c2h.get((v1, v2)), g.c2.get((h1, h2))
                if left is not None and right is not None and left != right:
                    bad.append(f"interchange fails at {(a, a2, b, b2)}")
    # q: every 1-arrow is an equivalence
    seen = set()
    for f, a in g.q.items():
        fs = g.c1.get((f, g.s1[f]))
        if fs is None:
            continue
        ident = g.r1[d11[f]]
        if (d21[a], d22[a]) == (fs, ident):
            seen.add("to identity")
        elif (d21[a], d22[a]) == (ident, fs):
            seen.add("from identity")
        else:
            bad.append(f"q({f}) does not connect f s1(f) with the identity")
    if len(seen) > 1:
        bad.append("q mixes orientations")
    rep.q_orientation = next(iter(seen), None)
    if not g.partial and set(g.q) != set(range(n1)):
        bad.append("q is not total")
    return rep


def materialize(G: NumericTwoGroupoid, L2: int | None = None) -> tuple[TwoGroupoid, list, list]:
    """Tables of the truncation: 1-cells of length <= L, 2-cells on 1-cells of length <= L2."""
    L2 = min(G.L, 2 if L2 is None else L2)
    c1s = G.cells1
    i1 = G.index1
    c2s = list(G.cells2(L2))
    i2 = {a: k for k, a in enumerate(c2s)}
    by_start: dict = {}
    for h, w in enumerate(c1s):
        by_start.setdefault(w.start, []).append(h)
    c1 = {}
    for f, z in enumerate(c1s):
        for h in by_start[z.end]:
            zw = concat(z, c1s[h])
            if zw in i1:
                c1[f, h] = i1[zw]
    c2 = {}
    c2h = {}
    for a, x in enumerate(c2s):
        for b, y in enumerate(c2s):
            if x[1] == y[0]:
                c2[a, b] = i2[G.c2(x, y)]
            if x[0].end == y[0].start:
                hc = G.c2h(x, y)
                if hc in i2:
                    c2h[a, b] = i2[hc]
    q = {}
    for f, z in enumerate(c1s):
        qa = G.q(z)
        if qa in i2:
            q[f] = i2[qa]
    g = TwoGroupoid(
        n0=G.base.size,
        d11=[z.start for z in c1s], d12=[z.end for z in c1s],
        d21=[i1[a[0]] for a in c2s], d22=[i1[a[1]] for a in c2s],
        r1=[i1[singleton(x)] for x in G.objects], c1=c1, s1=[i1[dagger(z)] for z in c1s],
        r2={f: i2[z, z] for f, z in enumerate(c1s) if len(z) <= L2}, c2=c2, c2h=c2h,
        s2=[i2[G.s2(a)] for a in c2s], q=q, partial=True)
    return g, c1s, c2s


@dataclass
class NumericReport:
    ok: bool
    problems: list
    cells1: int
    cells2: int
    q_orientation: str | None


def check_numeric(G: NumericTwoGroupoid, L2: int | None = None) -> NumericReport:
    """Free-dagger laws, the embedding into G0 x G0 x N (x N) and the 2-groupoid laws."""
    problems = []
    for z in G.cells1:
        if not G.contains1(z):
            problems.append(f"invalid cell {pretty(z, G.base)}")
        if dagger(dagger(z)) != z:
            problems.append(f"dagger is not an involution at {pretty(z, G.base)}")
        if (dagger(z).start, dagger(z).end) != (z.end, z.start):
            problems.append(f"dagger does not swap endpoints at {pretty(z, G.base)}")
    for z in G.cells1:
        for w in G.cells1:
            if z.end == w.start and len(z) + len(w) <= G.L:
                if dagger(concat(z, w)) != concat(dagger(w), dagger(z)):
                    problems.append("dagger is not contravariant")
    codes = [G.ambient_code1(z) for z in G.cells1]
    if len(set(codes)) != len(codes):
        problems.append("1-cell codes collide")
    # full at level 2: every code pair over a 1-hom-set is a 2-cell, exactly once
    faces = {}
    for a in G.cells2():
        faces.setdefault((a[0], a[1]), 0)
        faces[a[0], a[1]] += 1
    if any(v != 1 for v in faces.values()):
        problems.append("some 2-hom-set has more than one element")
    for zs in G.homs.values():
        for z, w in itertools.product(zs, repeat=2):
            if (z, w) not in faces:
                problems.append("embedding is not full at level 2")
    tg, c1s, c2s = materialize(G, L2)
    rep = two_groupoid_violations(tg)
    problems += rep.violations
    return NumericReport(not problems, problems, len(c1s), len(c2s), rep.q_orientation)


# -- the underlying span -------------------------------------------------------------

@dataclass(frozen=True)
class USpan:
    """U of a numeric 2-groupoid with the cell order used for A1."""

    G: NumericTwoGroupoid
    span: EquivalenceSpan

    def cell(self, k: int) -> Zigzag:
        return self.G.cells1[k]

    def index(self, z: Zigzag) -> int:
        try:
            return self.G.index1[z]
        except KeyError:
            raise TruncationError(f"{pretty(z, self.G.base)} is longer than {self.G.L}") from None


def U_underlying(G: NumericTwoGroupoid) -> USpan:
    """Span G1 => G0 with r = r1, s = s1 and t = c1 where the composite fits within L."""
    base = G.base
    cells = G.cells1
    idx = G.index1
    A0 = assembly(base.alpha0, f"{G.name or 'G'}0")
    A1 = assembly([G.code1(z) for z in cells], f"{G.name or 'G'}1", cells)
    d1 = auto_track(A1, A0, [z.start for z in cells])
    d2 = auto_track(A1, A0, [z.end for z in cells])
    r = auto_track(A0, A1, [idx[singleton(x)] for x in G.objects])
    s = auto_track(A1, A1, [idx[dagger(z)] for z in cells])
    pb = PASM.pullback(d2, d1)
    q1, q2 = pb.legs
    keep = [k for k in range(pb.apex.size) if len(cells[q1(k)]) + len(cells[q2(k)]) <= G.L]
    dom = PartitionedAssembly(tuple(pb.apex.xi[k] for k in keep), None,
                              tuple(pb.apex.labels[k] for k in keep))
    t_dom = FinMap(dom, pb.apex, tuple(keep), tl.X, 1)
    t = auto_track(dom, A1, [idx[concat(cells[q1(k)], cells[q2(k)])] for k in keep])
    sp = EquivalenceSpan(PASM, d1, d2, r, s, t, t_dom, name=f"U({G.name})" if G.name else None)
    sp.__dict__["composable"] = pb  # reuse the pullback just built
    return USpan(G, sp)


def truncation_complete(u: USpan) -> bool:
    """t is defined exactly on the consecutive pairs whose composite has length <= L."""
    G = u.G
    want = {(a, b) for a, z in enumerate(G.cells1) for b, w in enumerate(G.cells1)
            if z.end == w.start and len(z) + len(w) <= G.L}
    return set(u.span.t_pairs()) == want


# -- 2-functors ------------------------------------------------------------------------

@dataclass(frozen=True)
class TwoFunctor:
    """A 2-functor out of a free dagger category: object map plus generator images.

    ``gen`` sends each edge triple of the source base (by index) to a zigzag
    of the target; f1 extends it by freeness and f2 is forced.
    """

    source: NumericTwoGroupoid
    target: NumericTwoGroupoid
    f0: tuple[int, ...]
    gen: tuple[Zigzag, ...]

    def f1(self, z: Zigzag) -> Zigzag:
        base = self.source.base
        out = singleton(self.f0[z.start])
        x = z.start
        for n, i, y in z.steps:
            e = base.edge_index(x, y, n) if i == 0 else base.edge_index(y, x, n)
            out = concat(out, self.gen[e] if i == 0 else dagger(self.gen[e]))
            x = y
        return out

    def f2(self, a):
        return (self.f1(a[0]), self.f1(a[1]))


def two_functor_violations(F: TwoFunctor, L: int | None = None) -> list[str]:
    G, H = F.source, F.target
    out = []
    if len(F.f0) != G.base.size or any(not 0 <= v < H.base.size for v in F.f0):
        return ["object map has the wrong shape"]
    if len(F.gen) != len(G.base.triples):
        return ["one generator image per edge is required"]
    bad = [x for x in G.objects for y in G.objects
           if G.base.alpha0[x] == G.base.alpha0[y] and H.base.alpha0[F.f0[x]] != H.base.alpha0[F.f0[y]]]
    if bad:
        out.append("object map is not realizer consistent")
    for (x, y, n), z in zip(G.base.triples, F.gen):
        if not is_valid(z, H.base):
            out.append(f"image of edge {(x, y, n)} is not a zigzag of the target")
        elif (z.start, z.end) != (F.f0[x], F.f0[y]):
            out.append(f"image of edge {(x, y, n)} has the wrong endpoints")
    if out:
        return out
    L = G.L if L is None else L
    cells = [z for z in G.cells1 if len(z) <= L]
    for x in G.objects:
        if F.f1(singleton(x)) != singleton(F.f0[x]):
            out.append(f"identity at {x} is not preserved")
    images = {z: F.f1(z) for z in cells}
    codes = {}
    for z, fz in images.items():
        if (fz.start, fz.end) != (F.f0[z.start], F.f0[z.end]):
            out.append(f"endpoints not preserved at {pretty(z, G.base)}")
        if F.f1(dagger(z)) != dagger(fz):
            out.append(f"dagger not preserved at {pretty(z, G.base)}")
        codes.setdefault(G.code1(z), set()).add(H.code1(fz))
    if any(len(v) > 1 for v in codes.values()):
        out.append("f1 is not realizer consistent")
    for z in cells:
        for w in cells:
            if z.end == w.start and len(z) + len(w) <= L:
                if images[concat(z, w)] != concat(images[z], images[w]):
                    out.append("composition not preserved")
    for a in G.cells2(min(L, 2)):
        fa = F.f2(a)
        if H.two_cell(*fa) != fa:
            out.append("2-cells are not sent to 2-cells")
    return out


def identity_two_functor(G: NumericTwoGroupoid) -> TwoFunctor:
    gen = tuple(Zigzag(x, ((n, 0, y),)) for x, y, n in G.base.triples)
    return TwoFunctor(G, G, tuple(G.objects), gen)


def compose_two_functors(P: TwoFunctor, F: TwoFunctor) -> TwoFunctor:
    return TwoFunctor(F.source, P.target, tuple(P.f0[v] for v in F.f0), tuple(P.f1(z) for z in F.gen))


def max_generator_length(F: TwoFunctor) -> int:
    return max((len(z) for z in F.gen), default=0)


def U_map(F: TwoFunctor, US: USpan, UT: USpan) -> GraphHom:
    """U(F) between the truncated underlying spans; images must fit in UT's bound."""
    f1 = PASM.make(US.span.A1, UT.span.A1, [UT.index(F.f1(z)) for z in US.G.cells1])
    f0 = PASM.make(US.span.A0, UT.span.A0, list(F.f0))
    return GraphHom(US.span, UT.span, f1, f0)


def enumerate_two_functors(G: NumericTwoGroupoid, H: NumericTwoGroupoid, gen_bound: int = 1) -> list[TwoFunctor]:
    """Every 2-functor G -> H whose generator images have length <= gen_bound."""
    short = [z for z in H.cells1 if len(z) <= gen_bound] if gen_bound <= H.L else \
        enumerate_zigzags(H.base, gen_bound)
    by_ends: dict = {}
    for z in short:
        by_ends.setdefault((z.start, z.end), []).append(z)
    out = []
    for f0 in itertools.product(range(H.base.size), repeat=G.base.size):
        if any(G.base.alpha0[x] == G.base.alpha0[y] and H.base.alpha0[f0[x]] != H.base.alpha0[f0[y]]
               for x in G.objects for y in G.objects):
            continue
        choices = [by_ends.get((f0[x], f0[y]), []) for x, y, _ in G.base.triples]
        for gen in itertools.product(*choices):
            out.append(TwoFunctor(G, H, tuple(f0), tuple(gen)))
    return out


def lift_to_2functor(h: GraphHom, US: USpan, UT: USpan) -> TwoFunctor:
    """A 2-functor representing the Eff arrow [h]: U(G) -> U(H).

    Generators go to the images of their length-one zigzags; the result has the
    same object part as h, so it represents the same arrow.
    """
    G, H = US.G, UT.G
    if hom_violations(h):
        raise ValueError(f"not a homomorphism of underlying spans: {hom_violations(h)[:3]}")
    gen = []
    for x, y, n in G.base.triples:
        k = US.index(Zigzag(x, ((n, 0, y),)))
        gen.append(UT.cell(h.f1(k)))
    F = TwoFunctor(G, H, tuple(h.f0.table), tuple(gen))
    bad = two_functor_violations(F)
    if bad:
        from .groupoid import InternalInvariantBreach
        raise InternalInvariantBreach(f"lifted representative is not a 2-functor: {bad[:3]}")
    return F


# -- essential surjectivity ---------------------------------------------------------------

@dataclass
class EssentialSurjectivityReport:
    ok: bool
    problems: list
    to_U: GraphHom | None = None
    from_U: GraphHom | None = None
    witnesses: tuple = ()
    cells: int = 0


def essential_surjectivity_check(S: EquivalenceSpan, L: int = DEFAULT_L, cap: int | None = None) -> EssentialSurjectivityReport:
    """Rebuild S from U of the free dagger 2-groupoid on its monic form.

    The iso pair is S -> E -> U(G) (edge to one-step zigzag) and
    U(G) -> E -> S (zigzag folded with the structure of E).
    """
    problems = []
    if not is_equivalence_span(S):
        raise ValueError(f"{S.name or 'span'} is not an equivalence span")
    mf = monic_form(S)
    E = mf.span
    G = free_dagger_numeric(mf, L, S.name)
    U = U_underlying(G)
    US = U.span
    if span_violations(US):
        problems.append(f"U(G) fails the span laws: {span_violations(US)[:3]}")
    if not truncation_complete(U):
        problems.append("U(G) composition is not defined on the whole truncation")
    tri = {t: k for k, t in enumerate(mf.triples)}
    tE = {ab: E.t(k) for k, ab in enumerate(E.t_pairs())}
    # U(G) -> E by folding
    # t need not have units, so a path is folded from its first edge and
    # only the empty path uses r
    fold = []
    for z in G.cells1:
        acc = None
        x = z.start
        for n, i, y in z.steps:
            e = tri[(x, y, n)] if i == 0 else E.s(tri[(y, x, n)])
            acc = e if acc is None else tE[acc, e]
            x = y
        fold.append(E.r(z.start) if acc is None else acc)
    ident0 = PASM.identity(E.A0)
    phi = GraphHom(US, E, PASM.make(US.A1, E.A1, fold), PASM.make(US.A0, E.A0, list(range(E.A0.size))))
    psi = GraphHom(E, US, PASM.make(E.A1, US.A1, [U.index(Zigzag(x, ((n, 0, y),))) for x, y, n in mf.triples]),
                   PASM.make(E.A0, US.A0, list(range(E.A0.size))))
    for nm, hm in (("fold", phi), ("unfold", psi)):
        bad = hom_violations(hm)
        if bad:
            problems.append(f"{nm} is not a span homomorphism: {bad[:3]}")
    if problems:
        return EssentialSurjectivityReport(False, problems, cells=len(G.cells1))
    on_E = compose_homs(phi, psi)
    if on_E.f1.table != tuple(range(E.A1.size)) or on_E.f0.table != ident0.table:
        problems.append("fold after unfold is not the identity of E")
    to_U = compose_homs(psi, mf.to_monic())
    from_U = compose_homs(mf.from_monic(), phi)
    w_S = homs_identified(compose_homs(from_U, to_U), identity_hom(S), cap)
    w_U = homs_identified(compose_homs(to_U, from_U), identity_hom(US), cap)
    if w_S is None:
        problems.append("round trip on S is not identified with the identity")
    if w_U is None:
        problems.append("round trip on U(G) is not identified with the identity")
    return EssentialSurjectivityReport(not problems, problems, to_U, from_U, (w_S, w_U), len(G.cells1))


# -- products with the interval and homotopies ---------------------------------------------

@dataclass(frozen=True)
class CylinderCell:
    """A 1-cell of G x I: a pair of zigzags."""

    g: Zigzag
    i: Zigzag


@dataclass(frozen=True)
class Cylinder:
    """The pseudo-functor K: G x I -> H of a homotopy, with its data."""

    F: TwoFunctor
    F2: TwoFunctor
    k: tuple[Zigzag, ...]
    I: NumericTwoGroupoid

    def K0(self, x: int, j: int) -> int:
        return (self.F if j == 0 else self.F2).f0[x]

    def _along_interval(self, x: int, w: Zigzag) -> Zigzag:
        out = singleton(self.K0(x, w.start))
        for n, i, _ in w.steps:
            out = concat(out, self.k[x] if i == 0 else dagger(self.k[x]))
        return out

    def K1(self, c: CylinderCell) -> Zigzag:
        # first along G at the starting end, then along I at the far node of G
        FG = self.F if c.i.start == 0 else self.F2
        return concat(FG.f1(c.g), self._along_interval(c.g.end, c.i))


def cylinder_cells(G: NumericTwoGroupoid, I: NumericTwoGroupoid, L: int) -> list[CylinderCell]:
    return [CylinderCell(z, w) for z in G.cells1 for w in I.cells1 if len(z) + len(w) <= L]


def cylinder_compose(a: CylinderCell, b: CylinderCell) -> CylinderCell:
    return CylinderCell(concat(a.g, b.g), concat(a.i, b.i))


@dataclass
class CylinderReport:
    ok: bool
    problems: list
    strict_failures: int
    comparison_cells: int


def cylinder_violations(K: Cylinder, L: int | None = None) -> CylinderReport:
    """K restricts to F and F', sends the generators to k, and is a normal pseudo-functor.

    Comparison 2-cells K(a) K(b) => K(ab) are the unique 2-cells of the
    target; they exist exactly when the two sides are parallel zigzags.
    """
    G, H = K.F.source, K.F.target
    L = G.L if L is None else L
    problems = []
    I = K.I
    for x in G.objects:
        if (K.k[x].start, K.k[x].end) != (K.F.f0[x], K.F2.f0[x]):
            problems.append(f"k({x}) does not run from F0({x}) to F'0({x})")
        if not is_valid(K.k[x], H.base):
            problems.append(f"k({x}) is not a cell of the target")
    if problems:
        return CylinderReport(False, problems, 0, 0)
    u = Zigzag(0, ((0, 0, 1),))
    for x in G.objects:
        if K.K1(CylinderCell(singleton(x), u)) != K.k[x]:
            problems.append(f"generator at {x} is not sent to k({x})")
    cells = cylinder_cells(G, I, L)
    for c in cells:
        img = K.K1(c)
        if not is_valid(img, H.base):
            problems.append("image is not a cell of the target")
        if (img.start, img.end) != (K.K0(c.g.start, c.i.start), K.K0(c.g.end, c.i.end)):
            problems.append("endpoints not preserved")
        if len(c.i) == 0:
            want = (K.F if c.i.start == 0 else K.F2).f1(c.g)
            if img != want:
                problems.append("restriction to an end differs from the given functor")
        if len(c.g) == 0 and len(c.i) == 0 and img != singleton(K.K0(c.g.start, c.i.start)):
            problems.append("identities are not preserved")
    strict = 0
    comparisons = 0
    for a in cells:
        for b in cells:
            if a.g.end != b.g.start or a.i.end != b.i.start or len(a.g) + len(a.i) + len(b.g) + len(b.i) > L:
                continue
            lhs = K.K1(cylinder_compose(a, b))
            rhs = concat(K.K1(a), K.K1(b))
            if lhs != rhs:
                strict += 1
                if H.two_cell(rhs, lhs) is None:
                    problems.append("no comparison 2-cell for a composite")
                else:
                    comparisons += 1
            da = K.K1(CylinderCell(dagger(a.g), dagger(a.i)))
            if H.two_cell(dagger(K.K1(a)), da) is None:
                problems.append("no comparison 2-cell for a dagger")
    return CylinderReport(not problems, problems, strict, comparisons)


def homotopy_from_identification(F: TwoFunctor, F2: TwoFunctor, k: Sequence[Zigzag], L: int | None = None) -> Cylinder:
    """The homotopy G x I -> H built from k by freeness, after checking it."""
    if len(k) != F.source.base.size:
        raise ValueError("k needs one 1-cell per object")
    for x, z in enumerate(k):
        if z.start != F.f0[x] or z.end != F2.f0[x]:
            raise ValueError(f"k({x}) does not satisfy the endpoint equations")
    K = Cylinder(F, F2, tuple(k), interval_two_groupoid(max(1, F.source.L)))
    rep = cylinder_violations(K, L)
    if not rep.ok:
        from .groupoid import InternalInvariantBreach
        raise InternalInvariantBreach(f"homotopy built from k fails: {rep.problems[:3]}")
    return K


def search_homotopy(F: TwoFunctor, F2: TwoFunctor, L: int | None = None) -> Cylinder | None:
    """Look for a cylinder directly: a generator image per object, then validate."""
    H = F.target
    choices = [H.homs.get((F.f0[x], F2.f0[x]), []) for x in F.source.objects]
    for k in itertools.product(*choices):
        K = Cylinder(F, F2, tuple(k), interval_two_groupoid(max(1, F.source.L)))
        if cylinder_violations(K, L).ok:
            return K
    return None


@dataclass
class NQuotientReport:
    pairs_checked: int = 0
    identified_pairs: int = 0
    functors: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)
    construction_failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples and not self.construction_failures


def homotopy_quotient_check_N(suite: Sequence[NumericTwoGroupoid], L: int = DEFAULT_L, gen_bound: int = 1,
                              check_L: int = 2, cap: int | None = None) -> NQuotientReport:
    """U-identification against existence of a homotopy, for every parallel pair.

    2-functors are those with generator images of length <= gen_bound;
    homotopies are validated on cylinder cells of total length <= check_L.
    """
    rep = NQuotientReport()
    Us = {id(G): U_underlying(G) for G in suite}
    for G in suite:
        for H in suite:
            UG, UH = Us[id(G)], Us[id(H)]
            if gen_bound * G.L > H.L:
                UH = U_underlying(NumericTwoGroupoid(H.base, gen_bound * G.L, H.name))
            fs = enumerate_two_functors(G, H, gen_bound)
            rep.functors[G.name, H.name] = len(fs)
            ufs = [U_map(F, UG, UH) for F in fs]
            K_cache: dict = {}
            for (F, uf), (F2, uf2) in itertools.product(zip(fs, ufs), repeat=2):
                rep.pairs_checked += 1
                w = homs_identified(uf, uf2, cap)
                key = (F, F2)
                K = search_homotopy(F, F2, check_L)
                if (w is not None) != (K is not None):
                    rep.counterexamples.append((G.name, H.name, F.f0, F2.f0, w is not None, K is not None))
                if w is not None:
                    rep.identified_pairs += 1
                    k = [UH.cell(w(x)) for x in G.objects]
                    try:
                        homotopy_from_identification(F, F2, k, check_L)
                    except Exception as exc:  # recorded, not swallowed
                        rep.construction_failures.append((G.name, H.name, F.f0, F2.f0, str(exc)))
    return rep


# -- dagger categories by presentation (ambient for the interval contract) ----------------

Word = tuple  # tuple of (generator, mark)


def _dagger_word(w: Word) -> Word:
    return tuple((g, 1 - m) for g, m in reversed(w))


@dataclass(frozen=True)
class DaggerPresentation:
    """Dagger category presented by generators and length-preserving relations.

    Every 2-hom-set is a singleton on parallel 1-cells, so this also presents a
    2-groupoid of the kind the numeric ones are.
    """

    n_objects: int
    gens: tuple[tuple[int, int], ...]
    relations: tuple[tuple[Word, Word], ...] = ()
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        for l, r in self.relations:
            if len(l) != len(r):
                raise Unsupported("relations must preserve length")

    def ends(self, g: int, m: int) -> tuple[int, int]:
        s, t = self.gens[g]
        return (s, t) if m == 0 else (t, s)

    def walk(self, start: int, w: Word) -> int | None:
        x = start
        for g, m in w:
            s, t = self.ends(g, m)
            if s != x:
                return None
            x = t
        return x

    @cached_property
    def _rules(self) -> list[tuple[Word, Word]]:
        rules = set()
        for l, r in self.relations:
            for a, b in ((l, r), (_dagger_word(l), _dagger_word(r))):
                rules.add((a, b))
                rules.add((b, a))
        return sorted(rules)

    def normal(self, w: Word) -> Word:
        """Least word equivalent to w."""
        w = tuple(w)
        return min(self._class(w))

    def _class(self, w: Word) -> set:
        seen = {w}
        todo = deque([w])
        while todo:
            v = todo.popleft()
            for l, r in self._rules:
                k = len(l)
                for p in range(len(v) - k + 1):
                    if v[p:p + k] == l:
                        u = v[:p] + r + v[p + k:]
                        if u not in seen:
                            seen.add(u)
                            todo.append(u)
        return seen

    def paths(self, x: int, y: int, bound: int) -> list[Word]:
        """Normal forms of the morphisms x -> y of length <= bound."""
        out = set()
        layer = [((), x)]
        for depth in range(bound + 1):
            for w, end in layer:
                if end == y:
                    out.add(self.normal(w))
            if depth == bound:
                break
            nxt = []
            for w, end in layer:
                for g in range(len(self.gens)):
                    for m in (0, 1):
                        s, t = self.ends(g, m)
                        if s == end:
                            nxt.append((w + ((g, m),), t))
            layer = nxt
        return sorted(out)


def presentation_of(base: ZigzagBase, name: str | None = None) -> DaggerPresentation:
    """The free dagger category on a base graph."""
    return DaggerPresentation(base.size, tuple((x, y) for x, y, _ in base.triples), (), name or base.name)


@dataclass(frozen=True)
class DaggerFunctor:
    source: DaggerPresentation
    target: DaggerPresentation
    obj: tuple[int, ...]
    gen: tuple[Word, ...]  # normal forms

    def apply(self, w: Word) -> Word:
        out: tuple = ()
        for g, m in w:
            out += self.gen[g] if m == 0 else _dagger_word(self.gen[g])
        return self.target.normal(out)


def make_functor(src: DaggerPresentation, tgt: DaggerPresentation, obj, gen) -> DaggerFunctor:
    return DaggerFunctor(src, tgt, tuple(obj), tuple(tgt.normal(tuple(w)) for w in gen))


def dagger_functor_problems(F: DaggerFunctor) -> list[str]:
    S, T = F.source, F.target
    out = []
    for g, ((s, t), w) in enumerate(zip(S.gens, F.gen)):
        if T.walk(F.obj[s], w) != F.obj[t]:
            out.append(f"generator {g} is not sent to a morphism {F.obj[s]} -> {F.obj[t]}")
    if out:
        return out
    for l, r in S.relations:
        if F.apply(l) != F.apply(r):
            out.append(f"relation {l} = {r} is not respected")
    return out


class PresentationAmbient:
    """Dagger categories with codiscrete 2-cells, presented by generators and relations.

    Products add the interchange relations; pushouts glue generators, so they
    are supported along maps that send generators to generators.  Hom-sets
    are enumerated with generator images of length <= ``image_bound``.
    """

    def __init__(self, image_bound: int = 2):
        self.image_bound = image_bound

    def describe(self, X) -> str:
        return X.name or f"<{X.n_objects} objects, {len(X.gens)} generators>"

    def terminal(self) -> DaggerPresentation:
        return DaggerPresentation(1, (), (), "T")

    def identity(self, X) -> DaggerFunctor:
        return make_functor(X, X, range(X.n_objects), [((g, 0),) for g in range(len(X.gens))])

    def compose(self, g: DaggerFunctor, f: DaggerFunctor) -> DaggerFunctor:
        return DaggerFunctor(f.source, g.target, tuple(g.obj[v] for v in f.obj), tuple(g.apply(w) for w in f.gen))

    def point_of(self, X, x: int) -> DaggerFunctor:
        return make_functor(self.terminal(), X, (x,), ())

    def hom(self, X, Y) -> list[DaggerFunctor]:
        out = []
        for obj in itertools.product(range(Y.n_objects), repeat=X.n_objects):
            choices = [Y.paths(obj[s], obj[t], self.image_bound) for s, t in X.gens]
            for gen in itertools.product(*choices):
                F = DaggerFunctor(X, Y, obj, gen)
                if not dagger_functor_problems(F):
                    out.append(F)
        return out

    def product(self, X, Y) -> DaggerPresentation:
        nY = Y.n_objects
        gens = []
        left = {}
        right = {}
        for g, (s, t) in enumerate(X.gens):
            for y in range(nY):
                left[g, y] = len(gens)
                gens.append((s * nY + y, t * nY + y))
        for x in range(X.n_objects):
            for h, (s, t) in enumerate(Y.gens):
                right[x, h] = len(gens)
                gens.append((x * nY + s, x * nY + t))
        rels = []
        for l, r in X.relations:
            for y in range(nY):
                rels.append((tuple((left[g, y], m) for g, m in l), tuple((left[g, y], m) for g, m in r)))
        for l, r in Y.relations:
            for x in range(X.n_objects):
                rels.append((tuple((right[x, h], m) for h, m in l), tuple((right[x, h], m) for h, m in r)))
        for g in range(len(X.gens)):
            for h in range(len(Y.gens)):
                for mg in (0, 1):
                    for mh in (0, 1):
                        xs, xt = X.ends(g, mg)
                        ys, yt = Y.ends(h, mh)
                        # (g, ys) then (xt, h)  =  (xs, h) then (g, yt)
                        rels.append((((left[g, ys], mg), (right[xt, h], mh)),
                                     ((right[xs, h], mh), (left[g, yt], mg))))
        name = f"{X.name}x{Y.name}" if X.name and Y.name else None
        return DaggerPresentation(X.n_objects * nY, tuple(gens), tuple(rels), name)

    def _gen_index(self, X, Y):
        nY = Y.n_objects
        left = {(g, y): g * nY + y for g in range(len(X.gens)) for y in range(nY)}
        base = len(X.gens) * nY
        right = {(x, h): base + x * len(Y.gens) + h for x in range(X.n_objects) for h in range(len(Y.gens))}
        return left, right

    def times(self, X, f: DaggerFunctor, XA, XB) -> DaggerFunctor:
        """id_X x f."""
        A, B = f.source, f.target
        la, ra = self._gen_index(X, A)
        lb, rb = self._gen_index(X, B)
        nA, nB = A.n_objects, B.n_objects
        obj = [x * nB + f.obj[a] for x in range(X.n_objects) for a in range(nA)]
        gen = [None] * len(XA.gens)
        for (g, a), k in la.items():
            gen[k] = ((lb[g, f.obj[a]], 0),)
        for (x, h), k in ra.items():
            gen[k] = tuple((rb[x, h2], m) for h2, m in f.gen[h])
        return make_functor(XA, XB, obj, gen)

    def pushout(self, f: DaggerFunctor, g: DaggerFunctor) -> Cone:
        A, B = f.target, g.target
        for F in (f, g):
            if any(len(w) != 1 or w[0][1] != 0 for w in F.gen):
                raise Unsupported("pushouts are glued along maps sending generators to generators")
        nA = A.n_objects

        def glue(n, pairs):
            parent = list(range(n))

            def find(v):
                while parent[v] != v:
                    parent[v] = parent[parent[v]]
                    v = parent[v]
                return v

            for a, b in pairs:
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
            roots = sorted({find(v) for v in range(n)})
            return [roots.index(find(v)) for v in range(n)], len(roots)

        oq, no = glue(nA + B.n_objects, [(f.obj[c], nA + g.obj[c]) for c in range(f.source.n_objects)])
        gA = len(A.gens)
        gq, ng = glue(gA + len(B.gens), [(f.gen[c][0][0], gA + g.gen[c][0][0]) for c in range(len(f.source.gens))])
        gens = [None] * ng
        for k, (s, t) in enumerate(A.gens):
            gens[gq[k]] = (oq[s], oq[t])
        for k, (s, t) in enumerate(B.gens):
            gens[gq[gA + k]] = (oq[nA + s], oq[nA + t])
        rels = set()
        for off, X in ((0, A), (gA, B)):
            for l, r in X.relations:
                rels.add((tuple((gq[off + h], m) for h, m in l), tuple((gq[off + h], m) for h, m in r)))
        P = DaggerPresentation(no, tuple(gens), tuple(sorted(rels)))
        inA = make_functor(A, P, oq[:nA], [((gq[k], 0),) for k in range(gA)])
        inB = make_functor(B, P, oq[nA:], [((gq[gA + k], 0),) for k in range(len(B.gens))])
        return Cone(P, (inA, inB))

    def copair(self, cocone: Cone, a: DaggerFunctor, b: DaggerFunctor) -> DaggerFunctor:
        u, v = cocone.legs
        P = cocone.apex
        obj = [None] * P.n_objects
        gen = [None] * len(P.gens)
        for leg, m in ((u, a), (v, b)):
            for x, px in enumerate(leg.obj):
                if obj[px] is not None and obj[px] != m.obj[x]:
                    raise ValueError("cocone legs disagree on glued objects")
                obj[px] = m.obj[x]
            for h, w in enumerate(leg.gen):
                (pg, _), = w
                img = m.gen[h]
                if gen[pg] is not None and gen[pg] != img:
                    raise ValueError("cocone legs disagree on glued generators")
                gen[pg] = img
        if None in obj or None in gen:
            raise ValueError("pushout legs are not jointly surjective")
        return DaggerFunctor(P, a.target, tuple(obj), tuple(gen))

    def is_iso(self, m: DaggerFunctor) -> bool:
        S, T = m.source, m.target
        if dagger_functor_problems(m):
            return False
        if sorted(m.obj) != list(range(T.n_objects)) or len(m.obj) != S.n_objects:
            return False
        if any(len(w) != 1 for w in m.gen):
            return False
        targets = [w[0][0] for w in m.gen]
        if sorted(targets) != list(range(len(T.gens))):
            return False
        inv_obj = [0] * T.n_objects
        for x, v in enumerate(m.obj):
            inv_obj[v] = x
        inv_gen = [None] * len(T.gens)
        for g, ((h, mk),) in enumerate(m.gen):
            inv_gen[h] = ((g, mk),)
        d = make_functor(T, S, inv_obj, inv_gen)
        if dagger_functor_problems(d):
            return False
        return self.compose(d, m) == self.identity(S) and self.compose(m, d) == self.identity(T)


def interval_two_groupoid_data(image_bound: int = 2):
    from .groupoid import IntervalObjectData
    amb = PresentationAmbient(image_bound)
    I = presentation_of(interval_base(), "I")
    e0, e1 = amb.point_of(I, 0), amb.point_of(I, 1)
    po = amb.pushout(e1, e0)
    zero_p, one_p = po.legs
    gamma = make_functor(I, po.apex, (zero_p.obj[0], one_p.obj[1]), [zero_p.gen[0] + one_p.gen[0]])
    iota = make_functor(I, I, (1, 0), [((0, 1),)])
    return IntervalObjectData(amb, I, e0, e1, po, gamma, iota)


def presentation_samples() -> list[DaggerPresentation]:
    amb = PresentationAmbient()
    I = presentation_of(interval_base(), "I")
    return [
        amb.terminal(),
        I,
        DaggerPresentation(1, ((0, 0),), (), "loop"),
        DaggerPresentation(3, ((0, 1), (1, 2)), (), "path-2"),
        DaggerPresentation(2, ((0, 1), (0, 1)), (), "parallel-2"),
        amb.product(I, I),
    ]
