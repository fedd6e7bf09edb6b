"""Expression language for products of linear forms and sums of pure powers.

Grammar (whitespace-insensitive)::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '(' expr ')' | INTEGER | VARIABLE ('^' INTEGER)?

Variables are a letter block followed by an optional index, like ``x1`` or
``y12``.  A sum whose addends are all degree-one monomials becomes a
:class:`LinearForm`; a sum whose addends are all pure powers becomes a
:class:`Sum`; anything else (``x1^3 + x1*x2``, a constant term, a scaled
power) is rejected as an unsupported shape.  Standalone integer factors scale
the polynomial without changing its Milnor fiber, so they are dropped after
checking they are nonzero; for the same reason linear forms are canonicalized
to a primitive integer vector with positive leading coefficient.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, NamedTuple, Union

from .errors import NotReducedError, ParseError, UnsupportedShapeError

_VAR_RE = re.compile(r"([A-Za-z]+)([0-9]*)\Z")


def variable_key(name: str) -> tuple[str, int]:
    """Sort key for variable names: letter block, then numeric index."""
    match = _VAR_RE.match(name)
    if match is None:
        raise ParseError(f"not a variable name: {name!r}", 0)
    letters, digits = match.groups()
    return (letters, int(digits) if digits else -1)


@dataclass(frozen=True)
class LinearForm:
    """A nonzero linear form, as (variable, coefficient) terms.

    Terms are sorted by variable and scaled to a primitive integer vector
    with positive leading coefficient, so two proportional forms compare
    equal after construction through :meth:`from_coeffs`.
    """

    terms: tuple[tuple[str, Fraction], ...]

    @classmethod
    def from_coeffs(cls, coeffs: Mapping[str, Fraction | int]) -> "LinearForm":
        items = [(var, Fraction(c)) for var, c in coeffs.items() if c]
        if not items:
            raise UnsupportedShapeError("the zero polynomial has no Milnor fiber")
        items.sort(key=lambda item: variable_key(item[0]))
        scale = Fraction(lcm(*(c.denominator for _, c in items)))
        ints = [int(c * scale) for _, c in items]
        divisor = gcd(*ints)
        if ints[0] < 0:
            divisor = -divisor
        return cls(tuple((var, Fraction(n, divisor)) for (var, _), n in zip(items, ints)))

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(var for var, _ in self.terms)


@dataclass(frozen=True)
class Power:
    """A pure power ``var^exponent`` with exponent >= 2."""

    var: str
    exponent: int


@dataclass(frozen=True)
class Sum:
    """A sum of pure powers in pairwise-distinct variables."""

    terms: tuple[Power, ...]

    def __post_init__(self):
        names = [p.var for p in self.terms]
        if len(set(names)) != len(names):
            raise UnsupportedShapeError("a sum of powers must use pairwise-distinct variables")


@dataclass(frozen=True)
class Product:
    """A flattened product of two or more factors (no nested Product)."""

    factors: tuple["PolyExpr", ...]


PolyExpr = Union[LinearForm, Power, Sum, Product]


def variables(node: PolyExpr) -> set[str]:
    """All variable names occurring in an expression."""
    if isinstance(node, LinearForm):
        return set(node.variables)
    if isinstance(node, Power):
        return {node.var}
    if isinstance(node, Sum):
        return {p.var for p in node.terms}
    return set().union(*(variables(f) for f in node.factors))


class _Token(NamedTuple):
    kind: str
    text: str
    pos: int


_TOKEN_RE = re.compile(r"(?P<ws>\s+)|(?P<int>[0-9]+)|(?P<ident>[A-Za-z]+[0-9]*)|(?P<op>[-+*^()])")


def _tokenize(src: str) -> list[_Token]:
    tokens = []
    i = 0
    while i < len(src):
        match = _TOKEN_RE.match(src, i)
        if match is None:
            raise ParseError(f"unexpected character {src[i]!r}", i)
        if match.lastgroup != "ws":
            kind = match.group() if match.lastgroup == "op" else match.lastgroup
            tokens.append(_Token(kind, match.group(), match.start()))
        i = match.end()
    tokens.append(_Token("end", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str) -> None:
        self.tokens = _tokenize(src)
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        token = self.tokens[self.i]
        self.i += 1
        return token

    def expr(self) -> PolyExpr:
        addends = [(1,) + self.term()]
        while self.peek().kind in ("+", "-"):
            sign = 1 if self.advance().kind == "+" else -1
            addends.append((sign,) + self.term())
        if len(addends) == 1:
            _, scalar, nodes = addends[0]
            return _product_node(scalar, nodes)
        return _sum_node(addends)

    def term(self) -> tuple[int, list[PolyExpr]]:
        scalar = 1
        nodes: list[PolyExpr] = []
        while True:
            factor = self.factor()
            if isinstance(factor, int):
                scalar *= factor
            else:
                nodes.append(factor)
            if self.peek().kind == "*":
                self.advance()
                continue
            return scalar, nodes

    def factor(self) -> PolyExpr | int:
        token = self.peek()
        if token.kind == "(":
            self.advance()
            node = self.expr()
            if self.peek().kind != ")":
                raise ParseError("expected ')'", self.peek().pos)
            self.advance()
            return node
        if token.kind == "int":
            self.advance()
            return int(token.text)
        if token.kind == "ident":
            self.advance()
            if self.peek().kind == "^":
                self.advance()
                exp_token = self.peek()
                if exp_token.kind != "int":
                    raise ParseError("expected an integer exponent after '^'", exp_token.pos)
                self.advance()
                exponent = int(exp_token.text)
                if exponent < 1:
                    raise ParseError("exponents must be >= 1", exp_token.pos)
                if exponent == 1:
                    return LinearForm.from_coeffs({token.text: 1})
                return Power(token.text, exponent)
            return LinearForm.from_coeffs({token.text: 1})
        raise ParseError("expected '(', a variable, or an integer", token.pos)


def _product_node(scalar: int, nodes: list[PolyExpr]) -> PolyExpr:
    if scalar == 0:
        raise NotReducedError("a zero scalar factor makes the polynomial zero")
    if not nodes:
        raise UnsupportedShapeError("a constant polynomial has no Milnor fiber data")
    flat: list[PolyExpr] = []
    for node in nodes:
        flat.extend(node.factors if isinstance(node, Product) else (node,))
    return flat[0] if len(flat) == 1 else Product(tuple(flat))


def _sum_node(addends: list[tuple[int, int, list[PolyExpr]]]) -> PolyExpr:
    if all(len(nodes) == 1 and isinstance(nodes[0], LinearForm) for _, _, nodes in addends):
        coeffs: dict[str, Fraction] = {}
        for sign, scalar, nodes in addends:
            for var, c in nodes[0].terms:
                coeffs[var] = coeffs.get(var, Fraction(0)) + sign * scalar * c
        return LinearForm.from_coeffs(coeffs)
    if all(
        sign == 1 and scalar == 1 and len(nodes) == 1 and isinstance(nodes[0], Power)
        for sign, scalar, nodes in addends
    ):
        return Sum(tuple(nodes[0] for _, _, nodes in addends))
    raise UnsupportedShapeError(
        "a sum must be all degree-one monomials or all pure powers, not a mix"
    )


def parse(src: str) -> PolyExpr:
    """Parse an expression into its AST; see the module docstring for the grammar."""
    parser = _Parser(src)
    node = parser.expr()
    trailing = parser.peek()
    if trailing.kind != "end":
        raise ParseError(f"unexpected {trailing.text!r}", trailing.pos)
    return node


def to_text(node: PolyExpr) -> str:
    """Canonical text form; ``parse(to_text(node)) == node`` for parsed ASTs."""
    if isinstance(node, LinearForm):
        parts = []
        for i, (var, c) in enumerate(node.terms):
            magnitude = f"{var}" if abs(c) == 1 else f"{abs(c)}*{var}"
            if i == 0:
                parts.append(magnitude if c > 0 else f"-{magnitude}")
            else:
                parts.append(f"+{magnitude}" if c > 0 else f"-{magnitude}")
        return "".join(parts)
    if isinstance(node, Power):
        return f"{node.var}^{node.exponent}"
    if isinstance(node, Sum):
        return "+".join(to_text(p) for p in node.terms)
    rendered = []
    for factor in node.factors:
        text = to_text(factor)
        needs_parens = isinstance(factor, Sum) or (
            isinstance(factor, LinearForm) and len(factor.terms) > 1
        )
        rendered.append(f"({text})" if needs_parens else text)
    return "*".join(rendered)
