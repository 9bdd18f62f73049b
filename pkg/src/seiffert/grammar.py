"""Recursive-descent parser and elaborator for mean expressions.

Grammar (LL(1)):

    mean  := IDENT
           | IDENT '(' arg {',' arg} ')'      combinators and constructors
           | 'S' '[' seif ']'                 lift a Seiffert function
    seif  := IDENT
           | 'I' '(' seif ')'
           | 'I' '^' INT '(' seif ')'
           | 'poly' '(' NUM ',' NUM ')'
           | 'series' '(' IDENT ',' INT ',' IDENT ')'
    arg   := mean | NUM

Mean-level call forms: gini(r,s), power(a), shift(m,t), convex(w,m1,m2),
oplus(m1,m2), invariant(m1,m2), halfsq(m), powcomb(m,t), neg(m).
convex(w, K, N) denotes (1-w) K + w N.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from . import algebra, analysis, core, invariant, series, transform

Node = Union["Name", "Num", "Call", "Lift", "Transform", "Poly", "SeriesNode"]


@dataclass(frozen=True)
class Name:
    ident: str


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Call:
    fn: str
    args: tuple


@dataclass(frozen=True)
class Lift:
    inner: Node


@dataclass(frozen=True)
class Transform:
    depth: int
    inner: Node


@dataclass(frozen=True)
class Poly:
    a1: float
    a3: float


@dataclass(frozen=True)
class SeriesNode:
    kind: str
    count: int
    rule: str


class ParseError(ValueError):
    def __init__(self, message: str, pos: int, expected=()):
        self.pos = pos
        self.expected = tuple(expected)
        exp = f" (expected {', '.join(expected)})" if expected else ""
        super().__init__(f"{message} at offset {pos}{exp}")


class ElaborationError(ValueError):
    pass


_TOKEN = re.compile(
    r"\s*(?:(?P<num>[0-9]+(?:\.[0-9]*)?(?:[eE][-+]?[0-9]+)?)"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<sym>[()\[\],^-]))"
)


def _tokenize(src: str):
    toks = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None or m.end() == pos:
            stripped = src[pos:].lstrip()
            if not stripped:
                break
            at = len(src) - len(stripped)
            raise ParseError(f"unrecognized character {src[at]!r}", at)
        if m.lastgroup is None and m.group().strip() == "":
            pos = m.end()
            continue
        kind = m.lastgroup
        text = m.group(kind) if kind else ""
        if kind:
            toks.append((kind, text, m.start(kind)))
        pos = m.end()
    toks.append(("end", "", len(src)))
    return toks


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.toks = _tokenize(src)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def next(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, kind: str, text: str | None = None):
        k, v, pos = self.peek()
        if k != kind or (text is not None and v != text):
            want = text if text is not None else kind
            raise ParseError(f"got {v or 'end of input'!r}", pos, (want,))
        return self.next()

    def number(self) -> float:
        k, v, pos = self.peek()
        sign = 1.0
        if k == "sym" and v == "-":
            self.next()
            sign = -1.0
            k, v, pos = self.peek()
        if k != "num":
            raise ParseError(f"got {v or 'end of input'!r}", pos, ("number",))
        self.next()
        return sign * float(v)

    def mean(self) -> Node:
        k, v, pos = self.peek()
        if k != "ident":
            raise ParseError(f"got {v or 'end of input'!r}", pos, ("identifier", "S["))
        if v == "S":
            self.next()
            self.expect("sym", "[")
            inner = self.seif()
            self.expect("sym", "]")
            return Lift(inner)
        self.next()
        nk, nv, _ = self.peek()
        if nk == "sym" and nv == "(":
            self.next()
            args = [self.arg()]
            while self.peek()[:2] == ("sym", ","):
                self.next()
                args.append(self.arg())
            self.expect("sym", ")")
            return Call(v, tuple(args))
        return Name(v)

    def arg(self) -> Node:
        k, v, _ = self.peek()
        if k == "num" or (k == "sym" and v == "-"):
            return Num(self.number())
        return self.mean()

    def seif(self) -> Node:
        k, v, pos = self.peek()
        if k != "ident":
            raise ParseError(f"got {v or 'end of input'!r}", pos, ("identifier",))
        if v == "I":
            self.next()
            nk, nv, _ = self.peek()
            depth = 1
            if nk == "sym" and nv == "^":
                self.next()
                depth = int(self.number())
            self.expect("sym", "(")
            inner = self.seif()
            self.expect("sym", ")")
            return Transform(depth, inner)
        if v == "poly":
            self.next()
            self.expect("sym", "(")
            a1 = self.number()
            self.expect("sym", ",")
            a3 = self.number()
            self.expect("sym", ")")
            return Poly(a1, a3)
        if v == "series":
            self.next()
            self.expect("sym", "(")
            kind = self.expect("ident")[1]
            self.expect("sym", ",")
            count = int(self.number())
            self.expect("sym", ",")
            rule = self.expect("ident")[1]
            self.expect("sym", ")")
            return SeriesNode(kind, count, rule)
        self.next()
        return Name(v)


def parse(source: str) -> Node:
    """Parse a mean expression; errors carry the byte offset and the
    expected-token set."""
    p = _Parser(source)
    node = p.mean()
    k, v, pos = p.peek()
    if k != "end":
        raise ParseError(f"trailing input {v!r}", pos, ("end of input",))
    return node


def to_source(node: Node) -> str:
    """Render an AST back to parseable text (round-trips structurally)."""
    if isinstance(node, Name):
        return node.ident
    if isinstance(node, Num):
        return f"{node.value:.17g}"
    if isinstance(node, Call):
        return f"{node.fn}({','.join(to_source(a) for a in node.args)})"
    if isinstance(node, Lift):
        return f"S[{to_source(node.inner)}]"
    if isinstance(node, Transform):
        if node.depth == 1:
            return f"I({to_source(node.inner)})"
        return f"I^{node.depth}({to_source(node.inner)})"
    if isinstance(node, Poly):
        return f"poly({node.a1:.17g},{node.a3:.17g})"
    if isinstance(node, SeriesNode):
        return f"series({node.kind},{node.count},{node.rule})"
    raise TypeError(f"not an AST node: {node!r}")


# ---------------------------------------------------------------------------
# elaboration


def _num(node: Node, what: str) -> float:
    if not isinstance(node, Num):
        raise ElaborationError(f"{what} must be a number, got {to_source(node)}")
    return node.value


def elaborate_seiffert(node: Node) -> core.SeiffertFunction:
    if isinstance(node, Name):
        if node.ident in core.SEIFFERT_FUNCTIONS:
            return core.SEIFFERT_FUNCTIONS[node.ident]
        if node.ident in series.COROLLARY_FUNCTIONS:
            return series.COROLLARY_FUNCTIONS[node.ident]
        raise ElaborationError(
            f"unknown Seiffert function {node.ident!r}; "
            f"known: {sorted(core.SEIFFERT_FUNCTIONS)}"
        )
    if isinstance(node, Transform):
        if isinstance(node.inner, Name) and node.inner.ident in transform.FAMILY_SHAPES:
            return transform.family_member(node.inner.ident, node.depth)
        f = elaborate_seiffert(node.inner)
        for _ in range(node.depth):
            f = transform.integral_transform(f)
        return f
    if isinstance(node, Poly):
        if node.a1 != 1.0:
            raise ElaborationError("poly(a1,a3) requires a1 = 1")
        return series.build_series_seiffert(
            series.SeriesSpec("cubic", coefficients=(node.a3,)),
            name=f"poly(1,{node.a3:g})",
        )
    if isinstance(node, SeriesNode):
        if node.rule not in series.RULES:
            raise ElaborationError(
                f"unknown rule {node.rule!r}; known: {sorted(series.RULES)}"
            )
        spec = series.SeriesSpec(
            node.kind, rule=series.RULES[node.rule], truncation=node.count
        )
        return series.build_series_seiffert(
            spec, name=f"series({node.kind},{node.count},{node.rule})"
        )
    raise ElaborationError(f"not a Seiffert-function expression: {to_source(node)}")


def elaborate_mean(node: Node) -> core.Mean:
    if isinstance(node, Name):
        if node.ident in core.MEANS:
            return core.MEANS[node.ident]
        raise ElaborationError(
            f"unknown mean {node.ident!r}; known: {sorted(core.MEANS)}"
        )
    if isinstance(node, Lift):
        return core.mean_from_seiffert(elaborate_seiffert(node.inner))
    if isinstance(node, Call):
        fn, args = node.fn, node.args
        if fn == "gini":
            _arity(node, 2)
            return core.gini(_num(args[0], "gini r"), _num(args[1], "gini s"))
        if fn == "power":
            _arity(node, 1)
            return core.power_mean(_num(args[0], "power exponent"))
        if fn == "shift":
            _arity(node, 2)
            return algebra.shift_mean(elaborate_mean(args[0]), _num(args[1], "shift t"))
        if fn == "convex":
            _arity(node, 3)
            w = _num(args[0], "convex weight")
            if not 0.0 <= w <= 1.0:
                raise ElaborationError(f"convex weight {w:g} outside [0,1]")
            m1 = elaborate_mean(args[1])
            m2 = elaborate_mean(args[2])
            return core.Mean(
                f"convex({w:g},{m1.name},{m2.name})",
                lambda x, y: (1 - w) * m1._fn(x, y) + w * m2._fn(x, y),
                strict=m1.strict or m2.strict,
            )
        if fn == "oplus":
            _arity(node, 2)
            return algebra.oplus_mean(elaborate_mean(args[0]), elaborate_mean(args[1]))
        if fn == "invariant":
            _arity(node, 2)
            return invariant.invariant_mean(
                elaborate_mean(args[0]), elaborate_mean(args[1])
            )
        if fn == "halfsq":
            _arity(node, 1)
            return analysis.combine_half_square(elaborate_mean(args[0]))
        if fn == "powcomb":
            _arity(node, 2)
            return analysis.combine_power(
                elaborate_mean(args[0]), _num(args[1], "powcomb t")
            )
        if fn == "neg":
            _arity(node, 1)
            return algebra.mean_reflect(elaborate_mean(args[0]))
        raise ElaborationError(f"unknown combinator {fn!r}")
    raise ElaborationError(f"not a mean expression: {to_source(node)}")


def _arity(node: Call, n: int) -> None:
    if len(node.args) != n:
        raise ElaborationError(
            f"{node.fn} takes {n} argument(s), got {len(node.args)}: {to_source(node)}"
        )


def mean_expr(source: str) -> core.Mean:
    return elaborate_mean(parse(source))


def seiffert_expr(source: str) -> core.SeiffertFunction:
    """The Seiffert function denoted by the expression: the lift's inner
    function when the expression is a lift, else the representative of the
    denoted mean."""
    node = parse(source)
    if isinstance(node, Lift):
        return elaborate_seiffert(node.inner)
    return core.seiffert_from_mean(elaborate_mean(node))
