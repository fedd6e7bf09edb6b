"""Split a parsed polynomial into variable-disjoint blocks and evaluate them.

Two factors belong to the same block when they share a variable (transitively).
A block of linear forms becomes an :class:`ArrangementBlock`; a block that is a
single sum of powers becomes a :class:`BPBlock`.  Eigentables of blocks are
then folded with the product formula, which is exactly the situation it
requires: factors in disjoint variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Union

from .arrangement import Arrangement, line_arrangement_eigentable
from .brieskorn import BrieskornPham, bp_eigentable
from .cyclotomic import ONE
from .eigenspaces import EigenTable, GradedDims, product_formula
from .errors import (
    NonHomogeneousError,
    NotReducedError,
    UnsupportedDimensionError,
    UnsupportedShapeError,
)
from .parser import LinearForm, PolyExpr, Power, Product, Sum, variable_key, variables


@dataclass(frozen=True)
class ArrangementBlock:
    """A product of linear forms in the listed variables (index order)."""

    variables: tuple[str, ...]
    arrangement: Arrangement


@dataclass(frozen=True)
class BPBlock:
    """A homogeneous sum of pure powers in the listed variables (index order)."""

    variables: tuple[str, ...]
    powers: BrieskornPham


Block = Union[ArrangementBlock, BPBlock]


@dataclass(frozen=True)
class ClassifiedInput:
    """Blocks in variable order; their variable sets are pairwise disjoint."""

    blocks: tuple[Block, ...]


def _components(factors: list[PolyExpr]) -> list[list[PolyExpr]]:
    """Group factors into connected components via shared variables."""
    parent: dict[str, str] = {}

    def find(v: str) -> str:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def union(a: str, b: str) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    factor_vars = []
    for factor in factors:
        names = sorted(variables(factor), key=variable_key)
        factor_vars.append(names)
        for name in names:
            parent.setdefault(name, name)
        for name in names[1:]:
            union(names[0], name)

    grouped: dict[str, list[PolyExpr]] = {}
    for factor, names in zip(factors, factor_vars):
        grouped.setdefault(find(names[0]), []).append(factor)
    return sorted(grouped.values(), key=lambda fs: variable_key(min(variables(fs[0]), key=variable_key)))


def classify(expr: PolyExpr) -> ClassifiedInput:
    """Block decomposition of a parsed expression.

    Raises :class:`UnsupportedShapeError` when a sum of powers shares its block
    with other factors, :class:`NotReducedError` for a bare power or for
    proportional linear forms, and :class:`NonHomogeneousError` for a sum of
    powers with mixed exponents.
    """
    factors = list(expr.factors) if isinstance(expr, Product) else [expr]
    blocks: list[Block] = []
    for component in _components(factors):
        names = sorted(set().union(*(variables(f) for f in component)), key=variable_key)
        if any(isinstance(f, Sum) for f in component):
            if len(component) > 1:
                raise UnsupportedShapeError(
                    "a sum of powers cannot share variables with other factors"
                )
            exponent_of = {p.var: p.exponent for p in component[0].terms}
            exponents = [exponent_of[name] for name in names]
            if len(set(exponents)) > 1:
                raise NonHomogeneousError(
                    f"sum of powers with mixed exponents {tuple(exponents)} is not homogeneous"
                )
            blocks.append(BPBlock(tuple(names), BrieskornPham(exponents)))
            continue
        if any(isinstance(f, Power) for f in component):
            raise NotReducedError("a bare power repeats its linear factor and is not reduced")
        index = {name: i for i, name in enumerate(names)}
        rows = []
        for form in component:
            row = [Fraction(0)] * len(names)
            for var, c in form.terms:
                row[index[var]] = c
            rows.append(row)
        blocks.append(ArrangementBlock(tuple(names), Arrangement(len(names), rows)))
    blocks.sort(key=lambda b: variable_key(b.variables[0]))
    return ClassifiedInput(tuple(blocks))


def block_eigentable(block: Block) -> EigenTable:
    """Eigentable of a single block.

    A one-variable block is a single linear factor, whose fiber is a point;
    a two-variable arrangement block uses the line-arrangement rule; higher
    ambient dimensions have no table rule and are rejected.
    """
    if isinstance(block, BPBlock):
        return bp_eigentable(block.powers)
    dim = block.arrangement.ambient_dim
    if dim == 1:
        return EigenTable(1, {ONE: GradedDims((1,))})
    if dim == 2:
        return line_arrangement_eigentable(block.arrangement)
    raise UnsupportedDimensionError(
        f"no eigentable rule for an arrangement block in dimension {dim}"
    )


def evaluate(classified: ClassifiedInput) -> EigenTable:
    """Eigentable of the whole input: block tables folded with the product formula."""
    tables = [block_eigentable(block) for block in classified.blocks]
    return reduce(product_formula, tables)


def combined_arrangement(classified: ClassifiedInput) -> Arrangement:
    """All blocks merged into one arrangement over the union of their variables.

    Only valid when every block is a product of linear forms; used by the
    characteristic-polynomial and lattice routes, which work in any dimension.
    """
    for block in classified.blocks:
        if isinstance(block, BPBlock):
            raise UnsupportedShapeError(
                "the combined arrangement requires a product of linear forms only"
            )
    names = sorted(set().union(*(block.variables for block in classified.blocks)), key=variable_key)
    index = {name: i for i, name in enumerate(names)}
    rows = []
    for block in classified.blocks:
        spots = [index[name] for name in block.variables]
        for hyperplane in block.arrangement.hyperplanes:
            row = [Fraction(0)] * len(names)
            for spot, c in zip(spots, hyperplane.coefficients):
                row[spot] = c
            rows.append(row)
    return Arrangement(len(names), rows)
