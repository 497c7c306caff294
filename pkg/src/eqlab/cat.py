"""Finite categories with finite limits, as used by every construction here.

Both concrete ambients (finite spaces, partitioned assemblies) have objects
with a finite set of points ``0..n-1`` and morphisms given by a value table on
those points.  :class:`Category` writes limits, hom-set enumeration and the
law audits once for all of them; subclasses say what a morphism is.

Limits are canonical: the product carrier lists pairs lexicographically, an
equalizer keeps the agreeing points in increasing order, and a pullback is
the equalizer of the two composites out of the product.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Iterator, Sequence

DEFAULT_CAP = 100_000


class CapExceeded(RuntimeError):
    """An exhaustive enumeration would exceed the configured cap."""

    def __init__(self, what: str, cap: int):
        super().__init__(f"{what} exceeds the enumeration cap of {cap}")
        self.what = what
        self.cap = cap


class Unsupported(RuntimeError):
    pass


@dataclass(frozen=True)
class FinMap:
    """A morphism of a concrete ambient: a value table between point sets.

    ``tracker`` and ``budget`` carry realizability evidence in the assembly
    ambient; they never take part in equality.
    """

    source: Any
    target: Any
    table: tuple[int, ...]
    tracker: Any = field(default=None, compare=False, repr=False)
    budget: int | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if len(self.table) != self.source.size:
            raise ValueError(
                f"table has {len(self.table)} entries for a source of size {self.source.size}")
        n = self.target.size
        for v in self.table:
            if not 0 <= v < n:
                raise ValueError(f"value {v} outside a target of size {n}")

    def __call__(self, x: int) -> int:
        return self.table[x]

    def is_injective(self) -> bool:
        return len(set(self.table)) == len(self.table)


@dataclass(frozen=True)
class MorphismPair:
    d1: FinMap
    d2: FinMap

    def __post_init__(self):
        if self.d1.source != self.d2.source or self.d1.target != self.d2.target:
            raise ValueError("a parallel pair needs a shared source and target")


@dataclass(frozen=True)
class Cone:
    apex: Any
    legs: tuple


class Category:
    """Shared machinery for the concrete point-table ambients."""

    name = "abstract"
    cap = DEFAULT_CAP

    # -- to be provided by the ambient -----------------------------------
    def is_morphism(self, m: FinMap) -> bool:
        raise NotImplementedError

    def compatible(self, a, b, x: int, y: int, fx: int, fy: int) -> bool:
        """Pairwise necessary condition used to prune hom-set searches."""
        return True

    def make(self, a, b, table: Sequence[int]) -> FinMap:
        """The morphism with this table, with whatever evidence it needs."""
        return FinMap(a, b, tuple(table))

    def terminal(self):
        raise NotImplementedError

    def product(self, a, b) -> Cone:
        raise NotImplementedError

    def equalizer(self, f: FinMap, g: FinMap) -> Cone:
        raise NotImplementedError

    # -- generic ------------------------------------------------------------
    def identity(self, a) -> FinMap:
        return self.make(a, a, range(a.size))

    def compose(self, g: FinMap, f: FinMap) -> FinMap:
        """``g`` after ``f``."""
        if f.target != g.source:
            raise ValueError("morphisms are not composable")
        return FinMap(f.source, g.target, tuple(g.table[v] for v in f.table))

    def to_terminal(self, a) -> FinMap:
        return self.make(a, self.terminal(), [0] * a.size)

    def pair(self, cone: Cone, f: FinMap, g: FinMap) -> FinMap:
        """Mediating morphism into a canonical product cone."""
        n = cone.legs[1].target.size
        return self.make(f.source, cone.apex,
                         [f.table[x] * n + g.table[x] for x in range(f.source.size)])

    def equalizer_factor(self, cone: Cone, h: FinMap) -> FinMap:
        inc = cone.legs[0]
        index = {v: i for i, v in enumerate(inc.table)}
        try:
            table = [index[v] for v in h.table]
        except KeyError:
            raise ValueError("morphism does not factor through the equalizer") from None
        return self.make(h.source, cone.apex, table)

    def pullback(self, f: FinMap, g: FinMap) -> Cone:
        """Canonical pullback of the cospan f: A -> C <- B: g."""
        if f.target != g.target:
            raise ValueError("a cospan needs a shared codomain")
        prod = self.product(f.source, g.source)
        p1, p2 = prod.legs
        eq = self.equalizer(self.compose(f, p1), self.compose(g, p2))
        inc = eq.legs[0]
        return Cone(eq.apex, (self.compose(p1, inc), self.compose(p2, inc)))

    def pullback_factor(self, cone: Cone, h1: FinMap, h2: FinMap) -> FinMap:
        index = {(a, b): i for i, (a, b) in enumerate(zip(cone.legs[0].table, cone.legs[1].table))}
        try:
            table = [index[h1.table[x], h2.table[x]] for x in range(h1.source.size)]
        except KeyError:
            raise ValueError("the pair does not factor through the pullback") from None
        return self.make(h1.source, cone.apex, table)

    # -- enumeration ----------------------------------------------------------
    def search(self, a, b, candidates: Sequence[Iterable[int]] | None = None,
               cap: int | None = None) -> Iterator[FinMap]:
        """Morphisms a -> b whose value at each x lies in ``candidates[x]``.

        Backtracking with the pairwise ``compatible`` filter, then a full
        ``is_morphism`` check on every complete table.
        """
        cap = self.cap if cap is None else cap
        n = a.size
        if candidates is None:
            candidates = [range(b.size)] * n
        cands = [list(c) for c in candidates]
        if any(not c for c in cands):
            return
        table: list[int] = []
        visited = 0

        def extend(x: int):
            nonlocal visited
            if x == n:
                m = self.make_if_morphism(a, b, table)
                if m is not None:
                    yield m
                return
            for v in cands[x]:
                visited += 1
                if visited > cap:
                    raise CapExceeded(f"search for morphisms of size {n} -> {b.size}", cap)
                if all(self.compatible(a, b, y, x, table[y], v) for y in range(x)):
                    table.append(v)
                    yield from extend(x + 1)
                    table.pop()

        yield from extend(0)

    def make_if_morphism(self, a, b, table) -> FinMap | None:
        m = FinMap(a, b, tuple(table))
        if not self.is_morphism(m):
            return None
        return self.make(a, b, table)

    def hom(self, a, b, cap: int | None = None) -> list[FinMap]:
        return list(self.search(a, b, cap=cap))


# -- law audits -------------------------------------------------------------

@dataclass
class LawReport:
    violations: list = field(default_factory=list)
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations


def audit_category_laws(ctx, objects: Sequence | None = None, cap: int | None = None) -> LawReport:
    """Exhaustively check unit and associativity laws over ``objects``.

    ``ctx`` needs ``hom``, ``identity`` and ``compose``.
    """
    if objects is None:
        objects = list(ctx.objects())
    cap = getattr(ctx, "cap", DEFAULT_CAP) if cap is None else cap
    homs = {}
    for a in objects:
        for b in objects:
            hs = list(ctx.hom(a, b))
            if len(hs) > cap:
                raise CapExceeded(f"hom-set of size {len(hs)}", cap)
            homs[a, b] = hs
    report = LawReport()
    for a in objects:
        ida = ctx.identity(a)
        for b in objects:
            idb = ctx.identity(b)
            for f in homs[a, b]:
                report.checked += 2
                if ctx.compose(f, ida) != f:
                    report.violations.append(("right-unit", f))
                if ctx.compose(idb, f) != f:
                    report.violations.append(("left-unit", f))
    for a, b, c, d in itertools.product(objects, repeat=4):
        for f in homs[a, b]:
            for g in homs[b, c]:
                gf = ctx.compose(g, f)
                for h in homs[c, d]:
                    report.checked += 1
                    if report.checked > cap * 100:
                        raise CapExceeded("associativity audit", cap * 100)
                    if ctx.compose(h, gf) != ctx.compose(ctx.compose(h, g), f):
                        report.violations.append(("associativity", (f, g, h)))
    return report


class TableCategory:
    """A finite category given by explicit tables.

    ``morphisms`` maps a name to ``(dom, cod)``; ``identities`` maps each object
    to the name of its identity; ``composites`` maps ``(g, f)`` to ``g . f``.
    """

    def __init__(self, objects, morphisms: dict, identities: dict, composites: dict):
        self._objects = list(objects)
        self.morphisms = dict(morphisms)
        self.identities = dict(identities)
        self.composites = dict(composites)

    def objects(self):
        return list(self._objects)

    def hom(self, a, b):
        return [m for m, (d, c) in self.morphisms.items() if d == a and c == b]

    def identity(self, a):
        return self.identities[a]

    def compose(self, g, f):
        return self.composites[g, f]


# -- joint monicity and universal properties -------------------------------

def is_jointly_monic(ctx, p: MorphismPair) -> bool:
    """Joint monicity of a parallel pair, as injectivity of x -> (d1 x, d2 x)."""
    pairs = list(zip(p.d1.table, p.d2.table))
    return len(set(pairs)) == len(pairs)


def jointly_monic_by_probes(ctx: Category, p: MorphismPair, probes: Iterable) -> bool:
    """Joint monicity tested against every pair of maps out of each probe."""
    for x in probes:
        maps = ctx.hom(x, p.d1.source)
        seen = {}
        for u in maps:
            key = (ctx.compose(p.d1, u), ctx.compose(p.d2, u))
            if key in seen and seen[key] != u:
                return False
            seen[key] = u
    return True


def pullback_of_cospan(ctx: Category, f: FinMap, g: FinMap) -> Cone:
    if not hasattr(ctx, "product") or not hasattr(ctx, "equalizer"):
        raise Unsupported(f"{type(ctx).__name__} has no pullbacks")
    return ctx.pullback(f, g)


def _count_mediators(ctx: Category, x, apex, constraint: Callable[[FinMap], bool]) -> int:
    return sum(1 for u in ctx.search(x, apex) if constraint(u))


def check_product(ctx: Category, cone: Cone, probes: Iterable) -> list:
    """Failures of the product universal property against each probe object."""
    p1, p2 = cone.legs
    failures = []
    for x in probes:
        for f in ctx.hom(x, p1.target):
            for g in ctx.hom(x, p2.target):
                n = _count_mediators(ctx, x, cone.apex,
                                     lambda u: ctx.compose(p1, u) == f and ctx.compose(p2, u) == g)
                if n != 1:
                    failures.append((x, f, g, n))
                else:
                    u = ctx.pair(cone, f, g)
                    if ctx.compose(p1, u) != f or ctx.compose(p2, u) != g:
                        failures.append((x, f, g, "factorizer"))
    return failures


def check_equalizer(ctx: Category, cone: Cone, f: FinMap, g: FinMap, probes: Iterable) -> list:
    inc = cone.legs[0]
    failures = []
    if ctx.compose(f, inc) != ctx.compose(g, inc):
        failures.append(("cone does not commute",))
    for x in probes:
        for h in ctx.hom(x, f.source):
            if ctx.compose(f, h) != ctx.compose(g, h):
                continue
            n = _count_mediators(ctx, x, cone.apex, lambda u: ctx.compose(inc, u) == h)
            if n != 1:
                failures.append((x, h, n))
            elif ctx.compose(inc, ctx.equalizer_factor(cone, h)) != h:
                failures.append((x, h, "factorizer"))
    return failures


def check_pullback(ctx: Category, cone: Cone, f: FinMap, g: FinMap, probes: Iterable) -> list:
    q1, q2 = cone.legs
    failures = []
    if ctx.compose(f, q1) != ctx.compose(g, q2):
        failures.append(("square does not commute",))
    for x in probes:
        for h1 in ctx.hom(x, f.source):
            for h2 in ctx.hom(x, g.source):
                if ctx.compose(f, h1) != ctx.compose(g, h2):
                    continue
                n = _count_mediators(ctx, x, cone.apex,
                                     lambda u: ctx.compose(q1, u) == h1 and ctx.compose(q2, u) == h2)
                if n != 1:
                    failures.append((x, h1, h2, n))
                else:
                    u = ctx.pullback_factor(cone, h1, h2)
                    if ctx.compose(q1, u) != h1 or ctx.compose(q2, u) != h2:
                        failures.append((x, h1, h2, "factorizer"))
    return failures
