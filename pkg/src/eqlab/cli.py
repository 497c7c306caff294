"""Command line front end: load an instance file, run check suites, emit graphs.

Exit status: 0 when every check passes, 1 when some check has a
counterexample, 2 on usage or instance-file errors, 3 when an enumeration
hits the configured cap.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass, field

from . import tracklang as tl
from .cat import CapExceeded, audit_category_laws
from .equ import EquMap, is_rep
from .fintop import TOP, FinSpace
from .groupoid import (InternalInvariantBreach, check_homotopy_relation, groupoid_from_jointly_monic,
                       groupoid_violations, graph_hom_is_functor, homotopy_quotient_equals_Equ,
                       interval_groupoid_data, setoid_samples, verify_interval_structure)
from .instance import Instance, InstanceError, bundled_pack_path, load
from .pasm import PASM, PartitionedAssembly, check_monic_form, monic_form
from .spans import (FG_identity_on_objects, F_bijection, graph_homs, is_equivalence_span, is_subspatial,
                    jointly_monic, span_violations, to_dot)
from .twogroupoid import (alpha_wedge, base_to_dot, check_numeric, enumerate_zigzags,
                          essential_surjectivity_check, homotopy_quotient_check_N,
                          interval_two_groupoid_data, presentation_samples)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
SUITES = ("axioms", "equ-equivalence", "eff-quotient")
SHOWN = 5  # counterexamples printed per check in text reports


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""
    counterexamples: list = field(default_factory=list)


@dataclass
class CheckReport:
    suite: str
    checks: list = field(default_factory=list)
    # seconds per suite; kept out of the rendered report so output stays byte-stable
    timing: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failed(self) -> list:
        return [c for c in self.checks if not c.ok]

    def add(self, name: str, ok: bool, detail: str = "", counterexamples=()):
        self.checks.append(Check(name, bool(ok), detail, list(counterexamples)))

    def to_text(self) -> str:
        lines = [f"suite: {self.suite}"]
        for c in self.checks:
            tail = f"  ({c.detail})" if c.detail else ""
            lines.append(f"{'PASS' if c.ok else 'FAIL'}  {c.name}{tail}")
            for x in c.counterexamples[:SHOWN]:
                lines.append(f"      counterexample: {x!r}")
            if len(c.counterexamples) > SHOWN:
                lines.append(f"      ... {len(c.counterexamples) - SHOWN} more")
        lines.append(f"{len(self.checks)} checks, {len(self.failed)} failed")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        doc = {
            "suite": self.suite,
            "ok": self.ok,
            "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail,
                        "counterexamples": [_plain(x) for x in c.counterexamples]} for c in self.checks],
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _plain(x):
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    return repr(x)


# -- suites -------------------------------------------------------------------

def suite_axioms(inst: Instance, rep: CheckReport) -> None:
    """Every validator over every declared object, plus the encoding checks."""
    cap = inst.config["cap"]
    for name, sp in inst.subspatial.items():
        bad = span_violations(sp)
        rep.add(f"span laws: {name}", not bad, counterexamples=bad)
        rep.add(f"subspatial: {name}", is_subspatial(sp) and jointly_monic(sp))
        try:
            g = groupoid_from_jointly_monic(sp)
            bad = groupoid_violations(g)
        except (ValueError, InternalInvariantBreach) as exc:
            bad = [str(exc)]
        rep.add(f"groupoid laws: {name}", not bad, counterexamples=bad)
    for name, e in inst.equilogical.items():
        rep.add(f"F.G is the identity: {name}", FG_identity_on_objects(e))
    for name, g in inst.groupoids.items():
        bad = groupoid_violations(g)
        rep.add(f"groupoid laws: {name}", not bad, counterexamples=bad)
    for name, m in inst.morphisms.items():
        if isinstance(m.source, PartitionedAssembly):
            ok = PASM.is_morphism(m)
        elif isinstance(m.source, FinSpace):
            ok = TOP.is_morphism(m)
        else:
            ok = is_rep(m) and EquMap.of(m).contains(m)
        rep.add(f"morphism: {name}", ok)
    for name, sp in inst.pasm_spans.items():
        bad = span_violations(sp)
        rep.add(f"span laws: {name}", not bad, counterexamples=bad)
        r = check_monic_form(monic_form(sp))
        rep.add(f"monic form: {name}", r.ok)
    for name, G in inst.numeric().items():
        r = check_numeric(G, min(2, G.L))
        rep.add(f"numeric 2-groupoid: {name}", r.ok, f"{r.cells1} 1-cells, {r.cells2} 2-cells",
                r.problems)
    for label, data, samples in (("interval groupoid", interval_groupoid_data(), setoid_samples()),
                                 ("interval 2-groupoid", interval_two_groupoid_data(), presentation_samples())):
        r = verify_interval_structure(data, samples)
        rep.add(f"interval contract: {label}", r.ok, f"{len(r.checks)} equations", r.failures)
    small = [s for s in inst.spaces.values() if s.size <= 2]
    r = audit_category_laws(TOP, small, cap)
    rep.add("category laws: top", r.ok, f"{r.checked} instances", r.violations)
    r = audit_category_laws(PASM, list(inst.assemblies.values()), cap)
    rep.add("category laws: pasm", r.ok, f"{r.checked} instances", r.violations)
    bad = [n for n in range(10_001) if tl.cantor_pair(*tl.cantor_unpair(n)) != n
           or tl.cantor_unpair(tl.cantor_pair(n % 101, n // 101)) != (n % 101, n // 101)]
    rep.add("cantor pairing round trip", not bad, "0..10000", bad)
    for name, G in inst.numeric().items():
        codes = {}
        clash = []
        for z in enumerate_zigzags(G.base, G.L):
            c = alpha_wedge(z, G.base)
            if c in codes:
                clash.append((codes[c].to_list(), z.to_list()))
            codes[c] = z
        rep.add(f"zigzag codes injective: {name}", not clash, f"{len(codes)} zigzags", clash)
    rng = random.Random(inst.config["seed"])
    bad = []
    for _ in range(1000):
        p, n = tl.random_program(rng), rng.randrange(1000)
        low = rng.randrange(1, 64)
        if not tl.budget_monotone(p, n, low, inst.config["budget"]):
            bad.append((tl.to_source(p), n, low))
    rep.add("evaluation budget monotone", not bad, f"1000 samples, seed {inst.config['seed']}", bad)


def suite_equ_equivalence(inst: Instance, rep: CheckReport) -> None:
    """F on hom-sets, F.G on objects, groupoid upgrade and the homotopy quotient."""
    cap = inst.config["cap"]
    suite = list(inst.subspatial.values())
    for S in suite:
        for T in suite:
            r = F_bijection(S, T, cap)
            rep.add(f"F bijection {S.name} -> {T.name}", r.ok,
                    f"{r.span_classes} classes, {r.equ_classes} maps", r.problems)
    bad = [n for n, e in inst.equilogical.items() if not FG_identity_on_objects(e)]
    rep.add("F.G is the identity on objects", not bad, f"{len(inst.equilogical)} spaces", bad)
    groupoids = {}
    for S in suite:
        try:
            groupoids[S.name] = groupoid_from_jointly_monic(S)
            ok = not groupoid_violations(groupoids[S.name])
        except (ValueError, InternalInvariantBreach):
            ok = False
        rep.add(f"groupoid: {S.name}", ok)
    bad = []
    for S in suite:
        for T in suite:
            GS, GT = groupoids.get(S.name), groupoids.get(T.name)
            if GS is None or GT is None:
                continue
            for h in graph_homs(S, T, cap):
                try:
                    graph_hom_is_functor(GS, GT, h.f1, h.f0)
                except (ValueError, InternalInvariantBreach) as exc:
                    bad.append((S.name, T.name, h.f0.table, str(exc)))
    rep.add("homomorphisms are functors", not bad, counterexamples=bad)
    q = homotopy_quotient_equals_Equ(suite, cylinder_limit=2, cap=cap)
    rep.add("homotopic = identified = F-equivalent", q.ok,
            f"{q.pairs_checked} pairs, {q.homotopic_pairs} homotopic, {q.cylinder_checked} via cylinders",
            q.counterexamples)
    bad = relation_failures(suite, cap)
    rep.add("homotopy is a congruence", not bad, counterexamples=bad)


def relation_failures(suite, cap=None) -> list:
    """Equivalence-relation laws on every ordered pair; composition on small triples."""
    bad = []
    small = [s for s in suite if s.A0.size <= 3]
    targets = [s for s in suite if s.A0.size <= 2]
    for S in suite:
        for T in suite:
            if S in small and T in small:
                for U in targets:
                    bad += [(S.name, T.name, U.name) + f for f in check_homotopy_relation(S, T, U, cap)]
            else:
                bad += [(S.name, T.name) + f for f in check_homotopy_relation(S, T, None, cap)]
    return bad


def suite_eff_quotient(inst: Instance, rep: CheckReport) -> None:
    """Monic forms, essential surjectivity of U, and the quotient of N."""
    cap = inst.config["cap"]
    L = inst.config["zigzag_bound"]
    for name, sp in inst.pasm_spans.items():
        if not is_equivalence_span(sp):
            rep.add(f"equivalence span: {name}", False)
            continue
        r = check_monic_form(monic_form(sp))
        rep.add(f"monic form: {name}", r.ok)
        e = essential_surjectivity_check(sp, L, cap)
        rep.add(f"essentially surjective: {name}", e.ok, f"{e.cells} zigzags", e.problems)
    r = homotopy_quotient_check_N(list(inst.numeric(L).values()), L, cap=cap)
    rep.add("homotopic = U-identified on N", r.ok,
            f"{r.pairs_checked} pairs, {r.identified_pairs} identified",
            r.counterexamples + r.construction_failures)


RUNNERS = {"axioms": suite_axioms, "equ-equivalence": suite_equ_equivalence, "eff-quotient": suite_eff_quotient}


def run(path, suite: str = "all", overrides: dict | None = None) -> CheckReport:
    """Load ``path`` and run the selected suites, in a fixed order."""
    inst = load(path, overrides)
    names = SUITES if suite == "all" else (suite,)
    rep = CheckReport(suite)
    for nm in names:
        t = time.perf_counter()
        RUNNERS[nm](inst, rep)
        rep.timing[nm] = time.perf_counter() - t
    return rep


def emit_dot(inst: Instance, name: str) -> str:
    section, obj = inst.lookup(name)
    title = '"' + name.split(":")[-1].replace('"', "'") + '"'
    if section in ("subspatial", "pasm_spans"):
        return to_dot(obj, title)
    if section == "groupoids":
        return to_dot(obj.as_span(), title)
    if section == "bases":
        return base_to_dot(obj, title)
    raise InstanceError(f"{name} is in {section}, not a span, groupoid or base")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="eqlab", description=__doc__.splitlines()[0])
    ap.add_argument("instance", nargs="?", help="instance file (default: the bundled fixture pack)")
    ap.add_argument("--suite", choices=SUITES + ("all",), default="all")
    ap.add_argument("--budget", type=int, help="evaluation step budget")
    ap.add_argument("--zigzag-bound", type=int, help="maximum zigzag length L")
    ap.add_argument("--cap", type=int, help="enumeration cap")
    ap.add_argument("--seed", type=int, help="seed for randomized samples")
    ap.add_argument("--emit-dot", metavar="NAME", help="print the named span, groupoid or base as DOT")
    ap.add_argument("--format", choices=("text", "json"), default="text")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    path = args.instance or bundled_pack_path()
    overrides = {"budget": args.budget, "zigzag_bound": args.zigzag_bound, "cap": args.cap, "seed": args.seed}
    for k, v in overrides.items():
        if v is not None and v < 0:
            print(f"eqlab: --{k.replace('_', '-')} must be a natural number", file=sys.stderr)
            return EXIT_USAGE
    try:
        if args.emit_dot:
            sys.stdout.write(emit_dot(load(path, overrides), args.emit_dot))
            return EXIT_OK
        rep = run(path, args.suite, overrides)
    except InstanceError as exc:
        print(f"eqlab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"eqlab: cap exceeded: {exc.what} (cap {exc.cap})", file=sys.stderr)
        return EXIT_CAP
    sys.stdout.write(rep.to_json() if args.format == "json" else rep.to_text())
    for nm, secs in rep.timing.items():
        print(f"{nm}: {secs:.2f} s", file=sys.stderr)
    return EXIT_OK if rep.ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
