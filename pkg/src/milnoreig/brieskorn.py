"""Sums of pure powers x_1^{a_1} + ... + x_n^{a_n} in distinct variables.

The Milnor fiber of such a polynomial has reduced cohomology concentrated in
degree n - 1, of total dimension prod (a_i - 1).  The monodromy eigenvalues
are the products zeta_1 * ... * zeta_n where each zeta_i runs over the a_i-th
roots of unity different from 1; we enumerate those tuples exactly.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterable

from .cyclotomic import ONE, RootOfUnity
from .eigenspaces import EigenTable, GradedDims
from .errors import InvalidInputError, NonHomogeneousError


class BrieskornPham:
    """Exponent vector of a sum of pure powers; every a_i >= 2 and n >= 2.

    An exponent of 1 would make a summand linear and the polynomial either
    non-reduced or not a sum of powers at all, so it is rejected.
    """

    __slots__ = ("exponents",)

    def __init__(self, exponents: Iterable[int]) -> None:
        exps = tuple(int(a) for a in exponents)
        if len(exps) < 2:
            raise InvalidInputError("a sum of powers needs at least two variables")
        for a in exps:
            if a < 2:
                raise InvalidInputError(f"every exponent must be >= 2, got {a}")
        object.__setattr__(self, "exponents", exps)

    def __setattr__(self, name, value):
        raise AttributeError("BrieskornPham is immutable")

    @property
    def num_variables(self) -> int:
        return len(self.exponents)

    @property
    def is_homogeneous(self) -> bool:
        return len(set(self.exponents)) == 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, BrieskornPham):
            return NotImplemented
        return self.exponents == other.exponents

    def __hash__(self) -> int:
        return hash(self.exponents)

    def __repr__(self) -> str:
        return f"BrieskornPham{self.exponents}"


def bp_milnor_number(bp: BrieskornPham) -> int:
    """Total middle-degree dimension: the product of (a_i - 1)."""
    return math.prod(a - 1 for a in bp.exponents)


def bp_spectrum(bp: BrieskornPham) -> dict[RootOfUnity, int]:
    """Multiset of monodromy eigenvalues on the middle cohomology.

    Direct enumeration over the prod (a_i - 1) index tuples (k_1, ..., k_n)
    with 1 <= k_i <= a_i - 1; the eigenvalue of a tuple is
    e(k_1/a_1) * ... * e(k_n/a_n), accumulated exactly over the common
    denominator lcm(a_i).  Works for mixed exponents as well.
    """
    common = math.lcm(*bp.exponents)
    weights = [common // a for a in bp.exponents]
    counts: dict[RootOfUnity, int] = {}
    for tup in itertools.product(*(range(1, a) for a in bp.exponents)):
        total = sum(k * w for k, w in zip(tup, weights))
        eta = RootOfUnity(total, common)
        counts[eta] = counts.get(eta, 0) + 1
    return dict(sorted(counts.items(), key=lambda kv: kv[0].sort_key))


def bp_eigentable(bp: BrieskornPham) -> EigenTable:
    """Eigentable of a homogeneous sum of powers x_1^d + ... + x_n^d.

    The table has degree d, the invariant row (1, 0, ..., 0, c_1), and a row
    (0, ..., 0, c_eta) in degree n - 1 for every other eigenvalue eta in the
    spectrum; eigenvalues of count zero are omitted.
    """
    if not bp.is_homogeneous:
        raise NonHomogeneousError(
            f"mixed exponents {bp.exponents} are not homogeneous; use bp_spectrum instead"
        )
    degree = bp.exponents[0]
    middle = bp.num_variables - 1
    entries: dict[RootOfUnity, GradedDims] = {}
    for eta, count in bp_spectrum(bp).items():
        row = [0] * (middle + 1)
        row[middle] = count
        if eta == ONE:
            row[0] = 1
        entries[eta] = GradedDims(row)
    if ONE not in entries:
        entries[ONE] = GradedDims((1,))
    return EigenTable(degree, entries)
