"""Instance files: named spaces, spans, assemblies, morphisms and 2-groupoid bases.

Files are YAML.  Every declaration is validated while loading, and errors
carry the file, line and dotted path of the offending entry.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any

import yaml

from . import tracklang as tl
from .cat import FinMap
from .equ import Equilogical, diagonal, from_partition, is_rep, total
from .fintop import TOP, FinSpace, NotATopology, chain, discrete, indiscrete, point, product_space, sierpinski, subspace
from .pasm import PASM, PartitionedAssembly, assembly, is_morphism as pasm_is_morphism, monic_form
from .spans import (EquivalenceSpan, NotASpan, auto_span, functor_G, is_equivalence_span, is_subspatial,
                    least_structure, span_violations)
from .twogroupoid import NumericTwoGroupoid, ZigzagBase

DEFAULT_CONFIG = {"budget": 10_000, "cap": 100_000, "zigzag_bound": 3, "seed": 0}
SECTIONS = ("config", "spaces", "equilogical", "subspatial", "groupoids", "assemblies",
            "morphisms", "pasm_spans", "bases")


class InstanceError(ValueError):
    pass


class UnresolvedReference(InstanceError):
    pass


@dataclass
class Instance:
    source: str
    config: dict
    spaces: dict = field(default_factory=dict)
    equilogical: dict = field(default_factory=dict)
    subspatial: dict = field(default_factory=dict)
    groupoids: dict = field(default_factory=dict)
    assemblies: dict = field(default_factory=dict)
    morphisms: dict = field(default_factory=dict)
    pasm_spans: dict = field(default_factory=dict)
    bases: dict = field(default_factory=dict)

    def numeric(self, L: int | None = None) -> dict[str, NumericTwoGroupoid]:
        L = self.config["zigzag_bound"] if L is None else L
        return {k: NumericTwoGroupoid(b, L, k) for k, b in self.bases.items()}

    LOOKUP_ORDER = ("subspatial", "pasm_spans", "bases", "groupoids", "equilogical", "spaces",
                    "assemblies", "morphisms")

    def lookup(self, name: str):
        """Find ``name``, searching sections in a fixed order; ``section:name`` picks one."""
        sec, _, rest = name.partition(":")
        if rest and sec in self.LOOKUP_ORDER:
            if rest in getattr(self, sec):
                return sec, getattr(self, sec)[rest]
            raise UnresolvedReference(f"unknown object {rest!r} in {sec}")
        for sec in self.LOOKUP_ORDER:
            got = getattr(self, sec)
            if name in got:
                return sec, got[name]
        raise UnresolvedReference(f"unknown object {name!r}")


def bundled_pack_path() -> Path:
    return Path(str(resources.files("eqlab") / "data" / "pack.yaml"))


def load(path: str | Path, overrides: dict | None = None) -> Instance:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise InstanceError(f"{p}: cannot read: {exc.strerror}") from None
    return loads(text, str(p), overrides)


def _lines(node, path=(), out=None) -> dict:
    """Line number (1-based) of every mapping entry, keyed by path."""
    out = {} if out is None else out
    out[path] = node.start_mark.line + 1
    if isinstance(node, yaml.MappingNode):
        for k, v in node.value:
            _lines(v, path + (k.value,), out)
    elif isinstance(node, yaml.SequenceNode):
        for i, v in enumerate(node.value):
            _lines(v, path + (i,), out)
    return out


class _Loader:
    def __init__(self, source: str, data: dict, lines: dict):
        self.source = source
        self.data = data
        self.lines = lines

    def err(self, path: tuple, msg: str, cls=InstanceError):
        while path and path not in self.lines:
            path = path[:-1]
        line = self.lines.get(path, 1)
        dotted = ".".join(str(p) for p in path)
        return cls(f"{self.source}:{line}: {dotted}: {msg}")

    def need(self, entry: dict, key: str, path: tuple):
        if not isinstance(entry, dict) or key not in entry:
            raise self.err(path, f"missing field {key!r}")
        return entry[key]

    def ints(self, v, path: tuple) -> list[int]:
        if not isinstance(v, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
            raise self.err(path, "expected a list of integers")
        return v

    def ref(self, table: dict, name, what: str, path: tuple):
        if name not in table:
            raise self.err(path, f"unknown {what} {name!r}", UnresolvedReference)
        return table[name]


def loads(text: str, source: str = "<string>", overrides: dict | None = None) -> Instance:
    try:
        node = yaml.compose(text, Loader=yaml.SafeLoader)
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        where = f"{source}:{mark.line + 1}:{mark.column + 1}" if mark else source
        raise InstanceError(f"{where}: {getattr(exc, 'problem', None) or exc}") from None
    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise InstanceError(f"{source}:1: top level must be a mapping")
    L = _Loader(source, data, _lines(node) if node is not None else {})
    for k in data:
        if k not in SECTIONS:
            raise L.err((k,), f"unknown section (expected one of {', '.join(SECTIONS)})")
    cfg = dict(DEFAULT_CONFIG)
    for k, v in (data.get("config") or {}).items():
        if k not in DEFAULT_CONFIG:
            raise L.err(("config", k), "unknown setting")
        if not isinstance(v, int) or v < 0:
            raise L.err(("config", k), "settings are natural numbers")
        cfg[k] = v
    cfg.update({k: v for k, v in (overrides or {}).items() if v is not None})
    inst = Instance(source, cfg)
    for name, e in (data.get("spaces") or {}).items():
        inst.spaces[name] = _space(L, inst, name, e, ("spaces", name))
    for name, e in (data.get("equilogical") or {}).items():
        inst.equilogical[name] = _equilogical(L, inst, name, e, ("equilogical", name))
    for name, e in (data.get("subspatial") or {}).items():
        inst.subspatial[name] = _subspatial(L, inst, name, e, ("subspatial", name))
    for name, e in (data.get("groupoids") or {}).items():
        from .groupoid import groupoid_from_jointly_monic
        path = ("groupoids", name)
        sp = L.ref(inst.subspatial, L.need(e, "span", path), "subspatial span", path + ("span",))
        inst.groupoids[name] = groupoid_from_jointly_monic(sp)
    for name, e in (data.get("assemblies") or {}).items():
        inst.assemblies[name] = _assembly(L, name, e, ("assemblies", name))
    for name, e in (data.get("morphisms") or {}).items():
        inst.morphisms[name] = _morphism(L, inst, name, e, ("morphisms", name))
    for name, e in (data.get("pasm_spans") or {}).items():
        inst.pasm_spans[name] = _pasm_span(L, inst, name, e, ("pasm_spans", name))
    for name, e in (data.get("bases") or {}).items():
        inst.bases[name] = _base(L, inst, name, e, ("bases", name))
    return inst


def _space(L: _Loader, inst: Instance, name: str, e, path) -> FinSpace:
    if not isinstance(e, dict) or len(e) == 0:
        raise L.err(path, "a space needs a description")
    try:
        if "opens" in e:
            n = L.need(e, "points", path)
            opens = L.need(e, "opens", path)
            if not isinstance(opens, list) or not all(isinstance(o, list) for o in opens):
                raise L.err(path + ("opens",), "opens are lists of points")
            return FinSpace.from_sets(n, opens, name)
        if "discrete" in e:
            return _renamed(discrete(e["discrete"]), name)
        if "indiscrete" in e:
            return _renamed(indiscrete(e["indiscrete"]), name)
        if "chain" in e:
            return _renamed(chain(e["chain"]), name)
        if "sierpinski" in e:
            return _renamed(sierpinski(), name)
        if "point" in e:
            return _renamed(point(), name)
        if "product" in e:
            a, b = (L.ref(inst.spaces, r, "space", path + ("product",)) for r in e["product"])
            return _renamed(product_space(a, b).apex, name)
        if "sum" in e:
            a, b = (L.ref(inst.spaces, r, "space", path + ("sum",)) for r in e["sum"])
            nb = tuple(a.nbhd) + tuple(u << a.size for u in b.nbhd)
            return FinSpace(a.size + b.size, nb, name)
    except NotATopology as exc:
        raise L.err(path, f"space {name!r} is not a topology: {exc}") from None
    raise L.err(path, "unknown space description")


def _renamed(s: FinSpace, name: str) -> FinSpace:
    return FinSpace(s.size, s.nbhd, name)


def _equilogical(L: _Loader, inst: Instance, name: str, e, path) -> Equilogical:
    sp = L.ref(inst.spaces, L.need(e, "space", path), "space", path + ("space",))
    if "relation" in e:
        kind = e["relation"]
        if kind not in ("diagonal", "total"):
            raise L.err(path + ("relation",), "relation is 'diagonal' or 'total'")
        rel = diagonal(sp.size) if kind == "diagonal" else total(sp.size)
    elif "partition" in e:
        rel = from_partition(e["partition"])
    elif "pairs" in e:
        rel = frozenset(tuple(p) for p in e["pairs"])
    else:
        raise L.err(path, "give a relation, a partition or pairs")
    try:
        return Equilogical(sp, rel, name)
    except ValueError as exc:
        raise L.err(path, str(exc)) from None


def _subspatial(L: _Loader, inst: Instance, name: str, e, path) -> EquivalenceSpan:
    if "of" in e:
        eq = L.ref(inst.equilogical, e["of"], "equilogical space", path + ("of",))
        sp = functor_G(eq, name)
    else:
        A0 = L.ref(inst.spaces, L.need(e, "A0", path), "space", path + ("A0",))
        edges = [tuple(p) for p in L.need(e, "edges", path)]
        if any(len(p) != 2 or not all(0 <= v < A0.size for v in p) for p in edges):
            raise L.err(path + ("edges",), "edges are pairs of points")
        sq = product_space(A0, A0)
        sub = subspace(sq.apex, sorted({x * A0.size + y for x, y in edges}))
        inc = sub.legs[0]
        d1 = TOP.compose(sq.legs[0], inc)
        d2 = TOP.compose(sq.legs[1], inc)
        try:
            sp = auto_span(TOP, d1, d2, name)
        except NotASpan as exc:
            raise L.err(path, str(exc)) from None
    if not is_equivalence_span(sp) or not is_subspatial(sp):
        raise L.err(path, f"{name} is not a subspatial equivalence span")
    return sp


def _assembly(L: _Loader, name: str, e, path) -> PartitionedAssembly:
    xi = L.ints(L.need(e, "xi", path), path + ("xi",))
    n = e.get("carrier", len(xi))
    if n != len(xi):
        raise L.err(path, f"carrier has {n} points but {len(xi)} realizers are given")
    try:
        return assembly(xi, name)
    except ValueError as exc:
        raise L.err(path, str(exc)) from None


def _asm_ref(L: _Loader, inst: Instance, v, path, name: str) -> PartitionedAssembly:
    if isinstance(v, dict):
        return _assembly(L, name, v, path)
    return L.ref(inst.assemblies, v, "assembly", path)


def _morphism(L: _Loader, inst: Instance, name: str, e, path) -> FinMap:
    cat = L.need(e, "category", path)
    table = L.ints(L.need(e, "table", path), path + ("table",))
    if cat == "top":
        a = L.ref(inst.spaces, L.need(e, "source", path), "space", path + ("source",))
        b = L.ref(inst.spaces, L.need(e, "target", path), "space", path + ("target",))
        m = _table_map(L, a, b, table, path)
        if not TOP.is_morphism(m):
            raise L.err(path, f"{name} is not continuous")
        return m
    if cat == "equ":
        a = L.ref(inst.equilogical, L.need(e, "source", path), "equilogical space", path + ("source",))
        b = L.ref(inst.equilogical, L.need(e, "target", path), "equilogical space", path + ("target",))
        m = _table_map(L, a, b, table, path)
        if not is_rep(m):
            raise L.err(path, f"{name} is not continuous and relation preserving")
        return m
    if cat == "pasm":
        a = _asm_ref(L, inst, L.need(e, "source", path), path + ("source",), f"{name}.source")
        b = _asm_ref(L, inst, L.need(e, "target", path), path + ("target",), f"{name}.target")
        m = _table_map(L, a, b, table, path)
        if "tracker" in e:
            try:
                prog = tl.parse(str(e["tracker"]))
            except tl.ParseError as exc:
                raise L.err(path + ("tracker",), str(exc)) from None
            budget = e.get("budget", inst.config["budget"])
            if not pasm_is_morphism(a, b, table, prog, budget):
                raise L.err(path + ("tracker",), f"tracker does not track {name} within budget {budget}")
            return FinMap(a, b, tuple(table), prog, budget)
        got = PASM.make_if_morphism(a, b, table)
        if got is None:
            raise L.err(path, f"{name} separates points with equal realizers; no tracker exists")
        return got
    raise L.err(path + ("category",), "category is 'top', 'equ' or 'pasm'")


def _table_map(L: _Loader, a, b, table, path) -> FinMap:
    try:
        return FinMap(a, b, tuple(table))
    except ValueError as exc:
        raise L.err(path + ("table",), str(exc)) from None


def _pasm_span(L: _Loader, inst: Instance, name: str, e, path) -> EquivalenceSpan:
    A0 = _asm_ref(L, inst, L.need(e, "A0", path), path + ("A0",), f"{name}.A0")
    A1 = _asm_ref(L, inst, L.need(e, "A1", path), path + ("A1",), f"{name}.A1")
    maps = {}
    for k, (src, tgt) in (("d1", (A1, A0)), ("d2", (A1, A0))):
        tab = L.ints(L.need(e, k, path), path + (k,))
        m = _table_map(L, src, tgt, tab, path + (k,))
        got = PASM.make_if_morphism(src, tgt, tab)
        if got is None:
            raise L.err(path + (k,), f"{k} separates edges with equal realizers")
        maps[k] = got
    least = dict(zip("rst", least_structure(PASM, maps["d1"], maps["d2"])))
    pb = PASM.pullback(maps["d2"], maps["d1"])
    chosen = {}
    for k, (src, tgt) in (("r", (A0, A1)), ("s", (A1, A1)), ("t", (pb.apex, A1))):
        if k in e:
            tab = L.ints(e[k], path + (k,))
            _table_map(L, src, tgt, tab, path + (k,))
            got = PASM.make_if_morphism(src, tgt, tab)
            if got is None:
                raise L.err(path + (k,), f"{k} separates points with equal realizers")
            chosen[k] = got
        elif least[k] is not None:
            chosen[k] = least[k]
        else:
            raise L.err(path, f"{name}: no valid {k}")
    sp = EquivalenceSpan(PASM, maps["d1"], maps["d2"], chosen["r"], chosen["s"], chosen["t"], name=name)
    bad = span_violations(sp)
    if bad:
        raise L.err(path, f"{name} is not an equivalence span: {'; '.join(bad[:3])}")
    return sp


def _base(L: _Loader, inst: Instance, name: str, e, path) -> ZigzagBase:
    if "span" in e:
        sp = L.ref(inst.pasm_spans, e["span"], "span of assemblies", path + ("span",))
        return ZigzagBase.from_monic(monic_form(sp), name)
    alpha0 = L.ints(L.need(e, "alpha0", path), path + ("alpha0",))
    edges = L.need(e, "edges", path)
    if not isinstance(edges, list) or any(not isinstance(t, list) or len(t) != 3 for t in edges):
        raise L.err(path + ("edges",), "edges are triples [source, target, realizer]")
    names = tuple(sorted((e.get("names") or {}).items()))
    try:
        return ZigzagBase(tuple(alpha0), tuple(tuple(t) for t in edges), name, names)
    except ValueError as exc:
        raise L.err(path, str(exc)) from None
