"""A tiny expression language over the naturals used as the computability model.

Programs are immutable expression trees.  Evaluation is budgeted: every node
visited costs one step, and running out of steps yields an ``Exhausted``
outcome instead of a value.  Loops are bounded by a fuel expression, so
partiality only ever shows up as budget exhaustion.

Surface syntax (s-expressions)::

    x                  the input
    17                 a constant
    (succ p) (pred p)  successor / predecessor (pred 0 = 0)
    (sub p q)          truncated subtraction
    (pair p q)         Cantor pairing of the two values
    (fst p) (snd p)    components of the Cantor-unpaired value
    (ifz c t e)        t if c evaluates to 0, else e
    (comp outer inner) outer applied to the value of inner
    (loop body fuel)   apply body to the input fuel-many times
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from math import isqrt
from typing import Iterable, Union


def cantor_pair(n: int, m: int) -> int:
    if n < 0 or m < 0:
        raise ValueError("cantor_pair is defined on naturals only")
    s = n + m
    return s * (s + 1) // 2 + m


def cantor_unpair(k: int) -> tuple[int, int]:
    if k < 0:
        raise ValueError("cantor_unpair is defined on naturals only")
    w = (isqrt(8 * k + 1) - 1) // 2
    m = k - w * (w + 1) // 2
    return w - m, m


class Program:
    """Base class of expression nodes."""

    __slots__ = ()

    def __str__(self) -> str:
        return to_source(self)


@dataclass(frozen=True)
class Input(Program):
    pass


@dataclass(frozen=True)
class Const(Program):
    value: int


@dataclass(frozen=True)
class Succ(Program):
    arg: Program


@dataclass(frozen=True)
class Pred(Program):
    arg: Program


@dataclass(frozen=True)
class Sub(Program):
    left: Program
    right: Program


@dataclass(frozen=True)
class Pair(Program):
    left: Program
    right: Program


@dataclass(frozen=True)
class Fst(Program):
    arg: Program


@dataclass(frozen=True)
class Snd(Program):
    arg: Program


@dataclass(frozen=True)
class IfZero(Program):
    cond: Program
    then: Program
    orelse: Program


@dataclass(frozen=True)
class Compose(Program):
    outer: Program
    inner: Program


@dataclass(frozen=True)
class Loop(Program):
    body: Program
    fuel: Program


X = Input()


@dataclass(frozen=True)
class Value:
    value: int
    steps: int


@dataclass(frozen=True)
class Exhausted:
    steps: int


EvalOutcome = Union[Value, Exhausted]


class _OutOfFuel(Exception):
    pass


class _Machine:
    __slots__ = ("budget", "steps")

    def __init__(self, budget: int):
        self.budget = budget
        self.steps = 0

    def tick(self) -> None:
        self.steps += 1
        if self.steps > self.budget:
            raise _OutOfFuel

    def run(self, p: Program, n: int) -> int:
        self.tick()
        t = type(p)
        if t is Input:
            return n
        if t is Const:
            return p.value
        if t is Succ:
            return self.run(p.arg, n) + 1
        if t is Pred:
            return max(self.run(p.arg, n) - 1, 0)
        if t is Sub:
            return max(self.run(p.left, n) - self.run(p.right, n), 0)
        if t is Pair:
            return cantor_pair(self.run(p.left, n), self.run(p.right, n))
        if t is Fst:
            return cantor_unpair(self.run(p.arg, n))[0]
        if t is Snd:
            return cantor_unpair(self.run(p.arg, n))[1]
        if t is IfZero:
            if self.run(p.cond, n) == 0:
                return self.run(p.then, n)
            return self.run(p.orelse, n)
        if t is Compose:
            return self.run(p.outer, self.run(p.inner, n))
        if t is Loop:
            v = n
            for _ in range(self.run(p.fuel, n)):
                v = self.run(p.body, v)
            return v
        raise TypeError(f"not a program node: {p!r}")


def evaluate(p: Program, n: int, budget: int) -> EvalOutcome:
    """Run ``p`` on input ``n`` with at most ``budget`` steps."""
    if budget <= 0:
        raise ValueError("budget must be positive")
    if n < 0:
        raise ValueError("input must be a natural number")
    m = _Machine(budget)
    try:
        v = m.run(p, n)
    except _OutOfFuel:
        return Exhausted(m.steps - 1)
    return Value(v, m.steps)


def run(p: Program, n: int, budget: int) -> int | None:
    """Value of ``p`` at ``n``, or None when the budget runs out."""
    out = evaluate(p, n, budget)
    return out.value if isinstance(out, Value) else None


def size(p: Program) -> int:
    if isinstance(p, (Input, Const)):
        return 1
    return 1 + sum(size(c) for c in _children(p))


def depth(p: Program) -> int:
    if isinstance(p, (Input, Const)):
        return 1
    return 1 + max(depth(c) for c in _children(p))


def _children(p: Program) -> tuple[Program, ...]:
    if isinstance(p, (Succ, Pred, Fst, Snd)):
        return (p.arg,)
    if isinstance(p, (Sub, Pair)):
        return (p.left, p.right)
    if isinstance(p, IfZero):
        return (p.cond, p.then, p.orelse)
    if isinstance(p, Compose):
        return (p.outer, p.inner)
    if isinstance(p, Loop):
        return (p.body, p.fuel)
    return ()


def step_bound(p: Program) -> int:
    """Upper bound on the steps of a loop-free program (every node once)."""
    if isinstance(p, Loop):
        raise ValueError("loops have no static step bound")
    if isinstance(p, Compose):
        return 1 + step_bound(p.outer) + step_bound(p.inner)
    return 1 + sum(step_bound(c) for c in _children(p))


class ConflictingTable(ValueError):
    def __init__(self, key: int, outs: tuple[int, int]):
        super().__init__(f"input {key} is mapped to both {outs[0]} and {outs[1]}")
        self.key = key
        self.outs = outs


def synthesize_table_tracker(io: Iterable[tuple[int, int]]) -> Program:
    """A program agreeing with the finite table ``io``.

    The result is a balanced comparison tree over the sorted inputs, so a
    lookup costs O(log |io|) steps.  Off the table the value is unspecified.
    """
    table: dict[int, int] = {}
    for k, v in io:
        if k in table and table[k] != v:
            raise ConflictingTable(k, (table[k], v))
        table[k] = v
    if not table:
        return Const(0)
    keys = sorted(table)

    def build(lo: int, hi: int) -> Program:
        if hi - lo == 1:
            return Const(table[keys[lo]])
        mid = (lo + hi) // 2
        # input <= keys[mid-1] iff input - keys[mid-1] == 0
        return IfZero(Sub(X, Const(keys[mid - 1])), build(lo, mid), build(mid, hi))

    prog = build(0, len(keys))
    bound = table_budget(len(keys))
    for k, v in table.items():
        got = run(prog, k, bound)
        if got != v:
            raise AssertionError(f"table tracker self-test failed at {k}: {got} != {v}")
    return prog


def table_budget(n: int) -> int:
    """Step budget sufficient for a synthesized tracker over ``n`` entries."""
    return 4 * max(n, 1).bit_length() + 4


# -- surface syntax -------------------------------------------------------

_UNARY = {"succ": Succ, "pred": Pred, "fst": Fst, "snd": Snd}
_BINARY = {"sub": Sub, "pair": Pair, "comp": Compose, "loop": Loop}
_TOKEN = re.compile(r"\s*(?:(\()|(\))|([^\s()]+))")


class ParseError(ValueError):
    pass


def parse(text: str) -> Program:
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"bad character at offset {pos}")
        tokens.append((m.group(1) or m.group(2) or m.group(3), m.start()))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    prog, i = _parse_at(tokens, 0)
    if i != len(tokens):
        raise ParseError(f"trailing input at offset {tokens[i][1]}")
    return prog


def _parse_at(tokens, i):
    if i >= len(tokens):
        raise ParseError("unexpected end of program")
    tok, off = tokens[i]
    if tok == ")":
        raise ParseError(f"unexpected ')' at offset {off}")
    if tok != "(":
        if tok == "x":
            return X, i + 1
        if tok.isdigit():
            return Const(int(tok)), i + 1
        raise ParseError(f"unknown atom {tok!r} at offset {off}")
    if i + 1 >= len(tokens):
        raise ParseError("unexpected end of program")
    head, hoff = tokens[i + 1]
    args = []
    j = i + 2
    while j < len(tokens) and tokens[j][0] != ")":
        a, j = _parse_at(tokens, j)
        args.append(a)
    if j >= len(tokens):
        raise ParseError(f"unclosed '(' at offset {off}")
    arity = 1 if head in _UNARY else 2 if head in _BINARY else 3 if head == "ifz" else None
    if arity is None:
        raise ParseError(f"unknown operator {head!r} at offset {hoff}")
    if len(args) != arity:
        raise ParseError(f"{head} takes {arity} argument(s), got {len(args)} at offset {off}")
    if head in _UNARY:
        return _UNARY[head](*args), j + 1
    if head in _BINARY:
        return _BINARY[head](*args), j + 1
    return IfZero(*args), j + 1


_NAMES = {Succ: "succ", Pred: "pred", Fst: "fst", Snd: "snd",
          Sub: "sub", Pair: "pair", Compose: "comp", Loop: "loop", IfZero: "ifz"}


def to_source(p: Program) -> str:
    if isinstance(p, Input):
        return "x"
    if isinstance(p, Const):
        return str(p.value)
    return "(" + " ".join([_NAMES[type(p)]] + [to_source(c) for c in _children(p)]) + ")"


# -- randomized programs and budget monotonicity ----------------------------

def random_program(rng, depth: int = 4) -> Program:
    """A random program from ``rng`` (a ``random.Random``).

    Loop fuel is a small constant and loop bodies avoid pairing, so values
    stay small enough to evaluate quickly.
    """
    return _random(rng, depth, allow_pair=True)


def _random(rng, depth: int, allow_pair: bool) -> Program:
    if depth <= 0 or rng.random() < 0.2:
        return X if rng.random() < 0.5 else Const(rng.randrange(8))
    kinds = ["succ", "pred", "sub", "fst", "snd", "ifz", "comp", "loop"] + (["pair"] if allow_pair else [])
    k = rng.choice(kinds)
    sub = lambda: _random(rng, depth - 1, allow_pair)  # noqa: E731
    if k in _UNARY:
        return _UNARY[k](sub())
    if k == "ifz":
        return IfZero(sub(), sub(), sub())
    if k == "loop":
        return Loop(_random(rng, depth - 1, False), Const(rng.randrange(4)))
    if k == "comp":
        return Compose(sub(), sub())
    return _BINARY[k](sub(), sub())


def budget_monotone(p: Program, n: int, low: int, high: int) -> bool:
    """A run that finishes within ``low`` steps finishes identically within ``high``."""
    if low > high:
        low, high = high, low
    a, b = evaluate(p, n, low), evaluate(p, n, high)
    if isinstance(a, Value):
        return a == b
    return isinstance(b, Exhausted) or b.steps > low
