"""Shared fixtures: the two worked examples and a randomized corpus of
factor-table pairs (line arrangements crossed with line arrangements or
Fermat-type sums of powers)."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from milnoreig import (
    Arrangement,
    BrieskornPham,
    EigenTable,
    RootOfUnity,
    bp_eigentable,
    line_arrangement_eigentable,
)

EXAMPLE1_F_EXPR = "x1*x2*(x1+x2)*(x1+2*x2)"
EXAMPLE1_G_EXPR = "y1*y2*(y1+y2)*(y1+2*y2)*(y1+3*y2)"
EXAMPLE1_EXPR = f"{EXAMPLE1_F_EXPR}*{EXAMPLE1_G_EXPR}"
EXAMPLE2_F_EXPR = "x1^3+x2^3+x3^3"
EXAMPLE2_G_EXPR = "y1*y2*(y1+y2)*(y1+2*y2)*(y1+3*y2)*(y1+4*y2)"
EXAMPLE2_EXPR = f"({EXAMPLE2_F_EXPR})*({EXAMPLE2_G_EXPR})"


def example1_f_table() -> EigenTable:
    return EigenTable(
        4,
        {
            RootOfUnity(0, 1): (1, 3),
            RootOfUnity(1, 4): (0, 2),
            RootOfUnity(2, 4): (0, 2),
            RootOfUnity(3, 4): (0, 2),
        },
    )


def example1_g_table() -> EigenTable:
    entries = {RootOfUnity(0, 1): (1, 4)}
    entries.update({RootOfUnity(k, 5): (0, 3) for k in range(1, 5)})
    return EigenTable(5, entries)


def example1_product_table() -> EigenTable:
    return EigenTable(9, {RootOfUnity(0, 1): (1, 8, 19, 12)})


def example2_f_table() -> EigenTable:
    return EigenTable(
        3,
        {
            RootOfUnity(0, 1): (1, 0, 2),
            RootOfUnity(1, 3): (0, 0, 3),
            RootOfUnity(2, 3): (0, 0, 3),
        },
    )


def example2_g_table() -> EigenTable:
    entries = {RootOfUnity(0, 1): (1, 5)}
    entries.update({RootOfUnity(k, 6): (0, 4) for k in range(1, 6)})
    return EigenTable(6, entries)


def example2_product_table() -> EigenTable:
    return EigenTable(
        9,
        {
            RootOfUnity(0, 1): (1, 6, 7, 12, 10),
            RootOfUnity(1, 3): (0, 0, 0, 12, 12),
            RootOfUnity(2, 3): (0, 0, 0, 12, 12),
        },
    )


def random_line_arrangement(rng: random.Random, num_lines: int) -> Arrangement:
    """``num_lines`` pairwise non-proportional lines with small rational slopes."""
    seen: set[tuple[Fraction, ...]] = set()
    rows: list[tuple[int, int]] = []
    while len(rows) < num_lines:
        a = rng.randint(-4, 4)
        b = rng.randint(-4, 4)
        if a == 0 and b == 0:
            continue
        lead = next(c for c in (a, b) if c)
        key = (Fraction(a, lead), Fraction(b, lead))
        if key in seen:
            continue
        seen.add(key)
        rows.append((a, b))
    return Arrangement(2, rows)


def random_fermat(rng: random.Random) -> BrieskornPham:
    """x_1^d + ... + x_n^d with d <= 4 and n <= 4."""
    return BrieskornPham([rng.randint(2, 4)] * rng.randint(2, 4))


@pytest.fixture(scope="session")
def table_pair_corpus() -> list[tuple[EigenTable, EigenTable]]:
    """Deterministic corpus of 120 factor-table pairs.

    The left factor is always a line arrangement (1 to 8 lines); the right is
    a line arrangement or a Fermat-type sum of powers, alternating.
    """
    rng = random.Random(20260814)
    pairs = []
    for i in range(120):
        left = line_arrangement_eigentable(random_line_arrangement(rng, rng.randint(1, 8)))
        if i % 2:
            right = bp_eigentable(random_fermat(rng))
        else:
            right = line_arrangement_eigentable(random_line_arrangement(rng, rng.randint(1, 8)))
        pairs.append((left, right))
    return pairs
