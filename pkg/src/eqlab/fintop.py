"""Finite topological spaces and continuous maps.

A finite topology is closed under arbitrary intersections, so it is fixed by
the least open neighbourhood ``U_x`` of each point.  Spaces store those
neighbourhoods as bit masks over ``0..n-1``; the full family of opens (all
unions of neighbourhoods) is only materialized on request.  Families given
as explicit open sets are validated and rejected when they are not
topologies.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .cat import Category, Cone, FinMap


class NotATopology(ValueError):
    pass


def _mask(points: Iterable[int]) -> int:
    m = 0
    for p in points:
        m |= 1 << p
    return m


def _points(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class FinSpace:
    """Finite space given by the least open neighbourhood of each point."""

    size: int
    nbhd: tuple[int, ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.nbhd) != self.size:
            raise NotATopology(f"{self._label()}: need one neighbourhood per point")
        full = (1 << self.size) - 1
        for x, u in enumerate(self.nbhd):
            if u & ~full or not u >> x & 1:
                raise NotATopology(f"{self._label()}: bad neighbourhood of point {x}")
            for y in _points(u):
                if self.nbhd[y] & ~u:
                    raise NotATopology(f"{self._label()}: neighbourhoods of {x} and {y} are not nested")

    def _label(self) -> str:
        return self.name or f"space on {self.size} points"

    @classmethod
    def from_sets(cls, size: int, opens: Iterable[Iterable[int]], name: str | None = None) -> "FinSpace":
        """Space from an explicit family of opens, which must be a topology."""
        label = name or f"space on {size} points"
        ms = set()
        for o in opens:
            o = list(o)
            if any(not 0 <= p < size for p in o):
                raise NotATopology(f"{label}: open {o} mentions a missing point")
            ms.add(_mask(o))
        full = (1 << size) - 1
        if 0 not in ms:
            raise NotATopology(f"{label}: the empty set is not open")
        if full not in ms:
            raise NotATopology(f"{label}: the whole space is not open")
        for u in ms:
            for v in ms:
                if u | v not in ms:
                    raise NotATopology(f"{label}: union of {_points(u)} and {_points(v)} is not open")
                if u & v not in ms:
                    raise NotATopology(f"{label}: intersection of {_points(u)} and {_points(v)} is not open")
        nb = []
        for x in range(size):
            u = full
            for o in ms:
                if o >> x & 1:
                    u &= o
            nb.append(u)
        return cls(size, tuple(nb), name)

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    def is_open(self, mask: int) -> bool:
        return all(not self.nbhd[x] & ~mask for x in _points(mask))

    def opens(self, limit: int = 1 << 16) -> Iterator[int]:
        """Every open set as a bit mask (unions of neighbourhoods)."""
        seen = {0}
        frontier = [0]
        yield 0
        while frontier:
            nxt = []
            for u in frontier:
                for b in self.nbhd:
                    w = u | b
                    if w not in seen:
                        seen.add(w)
                        if len(seen) > limit:
                            raise OverflowError("too many opens to list")
                        nxt.append(w)
                        yield w
            frontier = nxt

    def open_sets(self) -> list[list[int]]:
        return sorted((_points(u) for u in self.opens()), key=lambda s: (len(s), s))

    def specializes(self, x: int, y: int) -> bool:
        """x lies in the closure of {y}: every open containing x contains y."""
        return bool(self.nbhd[x] >> y & 1)

    def __repr__(self):
        return f"FinSpace({self.size}, {self.open_sets() if self.size <= 6 else list(self.nbhd)})"


def discrete(n: int) -> FinSpace:
    return FinSpace(n, tuple(1 << x for x in range(n)), f"discrete-{n}")


def indiscrete(n: int) -> FinSpace:
    return FinSpace(n, ((1 << n) - 1,) * n, f"indiscrete-{n}")


def sierpinski() -> FinSpace:
    return FinSpace.from_sets(2, [[], [1], [0, 1]], "sierpinski")


def point() -> FinSpace:
    return discrete(1)


def chain(n: int) -> FinSpace:
    """Points 0 < 1 < ... < n-1; the opens are the up-sets."""
    return FinSpace(n, tuple(_mask(range(k, n)) for k in range(n)), f"chain-{n}")


def _union(masks: Sequence[int], of: int) -> int:
    m = 0
    for p in _points(of):
        m |= masks[p]
    return m


def is_T0(s: FinSpace) -> bool:
    for x in range(s.size):
        for y in range(x + 1, s.size):
            if s.specializes(x, y) and s.specializes(y, x):
                return False
    return True


def preimage(m: FinMap, mask: int) -> int:
    return _mask(x for x, v in enumerate(m.table) if mask >> v & 1)


def is_continuous(m: FinMap) -> bool:
    # for Alexandrov spaces: f is continuous iff f(U_x) lies inside U_f(x)
    tab, tn = m.table, m.target.nbhd
    for x, u in enumerate(m.source.nbhd):
        v = tn[tab[x]]
        y = 0
        while u:
            if u & 1 and not v >> tab[y] & 1:
                return False
            u >>= 1
            y += 1
    return True


def is_continuous_by_opens(m: FinMap) -> bool:
    """Reference check straight from the definition: preimages of opens are open."""
    return all(m.source.is_open(preimage(m, u)) for u in m.target.opens())


def product_space(a: FinSpace, b: FinSpace) -> Cone:
    """Product with carrier ordered lexicographically; (i, j) is point i*|b|+j."""
    n, k = a.size, b.size
    nb = []
    for i in range(n):
        for j in range(k):
            nb.append(_mask(p * k + q for p in _points(a.nbhd[i]) for q in _points(b.nbhd[j])))
    name = f"{a.name}x{b.name}" if a.name and b.name else None
    p = FinSpace(n * k, tuple(nb), name)
    p1 = FinMap(p, a, tuple(i for i in range(n) for _ in range(k)))
    p2 = FinMap(p, b, tuple(j for _ in range(n) for j in range(k)))
    return Cone(p, (p1, p2))


def subspace(s: FinSpace, subset: Iterable[int]) -> Cone:
    """Subspace on ``subset`` (in increasing order) with its inclusion."""
    pts = sorted(set(subset))
    if any(not 0 <= p < s.size for p in pts):
        raise ValueError("subset is not contained in the space")
    nb = tuple(_mask(i for i, q in enumerate(pts) if s.nbhd[p] >> q & 1) for p in pts)
    sub = FinSpace(len(pts), nb)
    return Cone(sub, (FinMap(sub, s, tuple(pts)),))


def is_subspace_inclusion(m: FinMap) -> bool:
    if not m.is_injective():
        return False
    # the traced topology has least neighbourhoods m^-1(U_{m(x)})
    return all(preimage(m, m.target.nbhd[m(x)]) == m.source.nbhd[x] for x in range(m.source.size))


class TopCat(Category):
    """Finite spaces and continuous maps."""

    name = "top"

    def __init__(self, cap: int | None = None):
        if cap is not None:
            self.cap = cap

    def is_morphism(self, m: FinMap) -> bool:
        return isinstance(m.source, FinSpace) and isinstance(m.target, FinSpace) and is_continuous(m)

    def compatible(self, a, b, x, y, fx, fy) -> bool:
        # continuous maps of finite spaces preserve specialization
        if a.specializes(x, y) and not b.specializes(fx, fy):
            return False
        if a.specializes(y, x) and not b.specializes(fy, fx):
            return False
        return True

    def terminal(self) -> FinSpace:
        return point()

    def product(self, a: FinSpace, b: FinSpace) -> Cone:
        return product_space(a, b)

    def pullback(self, f: FinMap, g: FinMap) -> Cone:
        # the subspace of the product on pairs agreeing over the base, built
        # without materializing the product; points are listed lexicographically
        if f.target != g.target:
            raise ValueError("a cospan needs a shared codomain")
        A, B = f.source, g.source
        over: dict[int, list[int]] = {}
        for b in range(B.size):
            over.setdefault(g(b), []).append(b)
        pairs = [(a, b) for a in range(A.size) for b in over.get(f(a), ())]
        first, second = [0] * A.size, [0] * B.size
        for k, (a, b) in enumerate(pairs):
            first[a] |= 1 << k
            second[b] |= 1 << k
        up_a = [_union(first, A.nbhd[a]) for a in range(A.size)]
        up_b = [_union(second, B.nbhd[b]) for b in range(B.size)]
        apex = FinSpace(len(pairs), tuple(up_a[a] & up_b[b] for a, b in pairs))
        return Cone(apex, (FinMap(apex, A, tuple(a for a, _ in pairs)),
                           FinMap(apex, B, tuple(b for _, b in pairs))))

    def equalizer(self, f: FinMap, g: FinMap) -> Cone:
        if f.source != g.source or f.target != g.target:
            raise ValueError("equalizer needs a parallel pair")
        return subspace(f.source, [x for x in range(f.source.size) if f(x) == g(x)])


TOP = TopCat()


def all_topologies(n: int) -> list[FinSpace]:
    """Every topology on n labelled points, as transitive reflexive relations."""
    pairs = [(x, y) for x in range(n) for y in range(n) if x != y]
    out = []

    def closed(rel: set) -> bool:
        return all((x, z) in rel for x, y in rel for y2, z in rel if y == y2 and x != z)

    def rec(i: int, rel: set):
        if i == len(pairs):
            if closed(rel):
                nb = tuple(_mask([x] + [y for (a, y) in rel if a == x]) for x in range(n))
                out.append(FinSpace(n, nb))
            return
        rec(i + 1, rel)
        rel.add(pairs[i])
        rec(i + 1, rel)
        rel.discard(pairs[i])

    rec(0, set())
    return out


def all_spaces(n: int) -> list[FinSpace]:
    return [s for k in range(n + 1) for s in all_topologies(k)]


def map_from(source: FinSpace, target: FinSpace, table: Sequence[int]) -> FinMap:
    return FinMap(source, target, tuple(table))
