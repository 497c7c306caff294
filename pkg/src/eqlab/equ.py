"""Equilogical spaces: T0 spaces with an equivalence relation on points."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable

from .cat import CapExceeded, FinMap, DEFAULT_CAP
from .fintop import FinSpace, TopCat, is_T0, is_continuous, point, product_space


class InvalidEquilogical(ValueError):
    pass


class Mismatch(ValueError):
    pass


@dataclass(frozen=True)
class Equilogical:
    space: FinSpace
    rel: frozenset
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        n = self.space.size
        label = self.name or "equilogical space"
        if not is_T0(self.space):
            raise InvalidEquilogical(f"{label}: underlying space is not T0")
        for a, b in self.rel:
            if not (0 <= a < n and 0 <= b < n):
                raise InvalidEquilogical(f"{label}: pair {(a, b)} mentions a missing point")
        for x in range(n):
            if (x, x) not in self.rel:
                raise InvalidEquilogical(f"{label}: relation is not reflexive at {x}")
        for a, b in self.rel:
            if (b, a) not in self.rel:
                raise InvalidEquilogical(f"{label}: relation is not symmetric at {(a, b)}")
        for a, b in self.rel:
            for c in self.classes_of(b):
                if (a, c) not in self.rel:
                    raise InvalidEquilogical(f"{label}: relation is not transitive at {(a, b, c)}")

    def classes_of(self, x: int) -> list[int]:
        return [y for y in range(self.space.size) if (x, y) in self.rel]

    @property
    def size(self) -> int:
        return self.space.size

    def related(self, x: int, y: int) -> bool:
        return (x, y) in self.rel

    def partition(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for x in range(self.size):
            if x not in seen:
                cls = tuple(self.classes_of(x))
                seen.update(cls)
                out.append(cls)
        return out


def diagonal(n: int) -> frozenset:
    return frozenset((x, x) for x in range(n))


def total(n: int) -> frozenset:
    return frozenset(itertools.product(range(n), repeat=2))


def from_partition(blocks: Iterable[Iterable[int]]) -> frozenset:
    return frozenset((a, b) for blk in blocks for a in blk for b in blk)


def embed_T0(s: FinSpace) -> Equilogical:
    if not is_T0(s):
        raise InvalidEquilogical(f"{s.name or 'space'} is not T0")
    return Equilogical(s, diagonal(s.size), s.name)


def terminal() -> Equilogical:
    return embed_T0(point())


def is_rep(f: FinMap) -> bool:
    """Continuous and relation preserving."""
    if not is_continuous(FinMap(f.source.space, f.target.space, f.table)):
        return False
    return all(f.target.related(f(a), f(b)) for a, b in f.source.rel)


def rep(e: Equilogical, f: Equilogical, table) -> FinMap:
    m = FinMap(e, f, tuple(table))
    if not is_rep(m):
        raise ValueError(f"{table} is not a continuous relation-preserving map")
    return m


def maps_equivalent(f: FinMap, g: FinMap) -> bool:
    if f.source != g.source or f.target != g.target:
        raise Mismatch("maps have different source or target")
    return all(f.target.related(f(x), g(x)) for x in range(f.source.size))


def _reps_near(f: FinMap, cap: int = DEFAULT_CAP) -> list[FinMap]:
    """All representatives equivalent to ``f``."""
    e, t = f.source, f.target
    cands = [t.classes_of(f(x)) for x in range(e.size)]
    out = []
    count = 0
    for table in itertools.product(*cands):
        count += 1
        if count > cap:
            raise CapExceeded("class enumeration", cap)
        m = FinMap(e, t, table)
        if is_rep(m):
            out.append(m)
    return out


@dataclass(frozen=True, eq=False)
class EquMap:
    """A map of equilogical spaces: the class of a representative.

    Stored by its least representative (lexicographic on value tables).
    """

    canonical: FinMap

    @classmethod
    def of(cls, f: FinMap) -> "EquMap":
        if not is_rep(f):
            raise ValueError("representative must be continuous and relation preserving")
        least = min(_reps_near(f), key=lambda m: m.table)
        return cls(least)

    @property
    def source(self) -> Equilogical:
        return self.canonical.source

    @property
    def target(self) -> Equilogical:
        return self.canonical.target

    def contains(self, f: FinMap) -> bool:
        return maps_equivalent(self.canonical, f)

    def __eq__(self, other):
        return isinstance(other, EquMap) and self.canonical == other.canonical

    def __hash__(self):
        return hash(self.canonical)

    def __repr__(self):
        return f"EquMap({list(self.canonical.table)})"


def identity(e: Equilogical) -> EquMap:
    return EquMap.of(FinMap(e, e, tuple(range(e.size))))


def compose(g: EquMap, f: EquMap) -> EquMap:
    if f.target != g.source:
        raise Mismatch("maps are not composable")
    cf, cg = f.canonical, g.canonical
    return EquMap.of(FinMap(cf.source, cg.target, tuple(cg(v) for v in cf.table)))


def product_equ(e: Equilogical, f: Equilogical):
    """Product object and the two projection representatives."""
    cone = product_space(e.space, f.space)
    k = f.size
    rel = frozenset((a * k + b, c * k + d)
                    for a, c in e.rel for b, d in f.rel)
    p = Equilogical(cone.apex, rel)
    p1 = FinMap(p, e, cone.legs[0].table)
    p2 = FinMap(p, f, cone.legs[1].table)
    return p, p1, p2


def pair_rep(p: Equilogical, f: FinMap, g: FinMap) -> FinMap:
    k = g.target.size
    return FinMap(f.source, p, tuple(f(x) * k + g(x) for x in range(f.source.size)))


def hom_reps(e: Equilogical, f: Equilogical, cap: int = DEFAULT_CAP) -> list[FinMap]:
    top = TopCat(cap)
    out = []
    for m in top.search(e.space, f.space):
        r = FinMap(e, f, m.table)
        if all(f.related(r(a), r(b)) for a, b in e.rel):
            out.append(r)
    return out


def hom_set(e: Equilogical, f: Equilogical, cap: int = DEFAULT_CAP) -> list[EquMap]:
    """Every map e -> f, one entry per class, ordered by canonical table."""
    reps = hom_reps(e, f, cap)
    classes: list[FinMap] = []
    for r in sorted(reps, key=lambda m: m.table):
        if not any(maps_equivalent(c, r) for c in classes):
            classes.append(r)
    return [EquMap(c) for c in classes]
