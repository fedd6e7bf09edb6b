"""Graded dimension vectors, monodromy eigenspace tables, and the two
decomposition formulas for products of polynomials in disjoint variables.

For a homogeneous polynomial f of degree r the monodromy of its Milnor fiber
F = f^{-1}(1) has order dividing r, so its cohomology splits into eigenspaces
H^j(F)_eta indexed by r-th roots of unity eta.  An :class:`EigenTable` records
the dimensions of those eigenspaces.
"""

from __future__ import annotations

import math
from functools import reduce
from typing import Iterable, Iterator, Mapping

from .cyclotomic import ONE, RootOfUnity, roots_of
from .errors import InvalidInputError


class GradedDims:
    """Nonnegative integer dimensions indexed by cohomological degree.

    Trailing zeros are trimmed, so ``GradedDims((1, 2)) == GradedDims((1, 2, 0))``.
    Indexing out of range returns 0.  Addition is degreewise; multiplication is
    the Kunneth convolution ``(a * b)[k] = sum_{i+j=k} a[i] * b[j]``.
    """

    __slots__ = ("_dims",)

    def __init__(self, dims: Iterable[int] = ()) -> None:
        trimmed = list(dims)
        for d in trimmed:
            if not isinstance(d, int) or d < 0:
                raise InvalidInputError(f"dimensions must be nonnegative integers, got {d!r}")
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        object.__setattr__(self, "_dims", tuple(trimmed))

    def __setattr__(self, name, value):
        raise AttributeError("GradedDims is immutable")

    @property
    def dims(self) -> tuple[int, ...]:
        return self._dims

    def __getitem__(self, degree: int) -> int:
        if 0 <= degree < len(self._dims):
            return self._dims[degree]
        return 0

    def __len__(self) -> int:
        return len(self._dims)

    def __iter__(self) -> Iterator[int]:
        return iter(self._dims)

    def __bool__(self) -> bool:
        return bool(self._dims)

    def __add__(self, other: "GradedDims") -> "GradedDims":
        if not isinstance(other, GradedDims):
            return NotImplemented
        n = max(len(self._dims), len(other._dims))
        return GradedDims([self[k] + other[k] for k in range(n)])

    def __mul__(self, other: "GradedDims") -> "GradedDims":
        if not isinstance(other, GradedDims):
            return NotImplemented
        if not self._dims or not other._dims:
            return GradedDims()
        out = [0] * (len(self._dims) + len(other._dims) - 1)
        for i, a in enumerate(self._dims):
            if a:
                for j, b in enumerate(other._dims):
                    out[i + j] += a * b
        return GradedDims(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedDims):
            return NotImplemented
        return self._dims == other._dims

    def __hash__(self) -> int:
        return hash(self._dims)

    def __repr__(self) -> str:
        return f"GradedDims{self._dims}"


#: H^* of the punctured complex line: one dimension each in degrees 0 and 1,
#: all of it in the eta = 1 eigenspace.
CIRCLE_COHOMOLOGY = GradedDims((1, 1))


class EigenTable:
    """Eigenspace dimensions of the monodromy of a degree-``degree`` polynomial.

    Entries map a root of unity eta (with eta**degree == 1) to the graded
    dimensions of its eigenspace.  All-zero entries are dropped, so an absent
    key means the zero eigenspace.  A connected Milnor fiber forces H^0 to be
    one-dimensional and invariant: the eta = 1 entry must have dims[0] == 1 and
    every other entry dims[0] == 0.  The constructor rejects anything else.
    """

    __slots__ = ("_degree", "_entries")

    def __init__(self, degree: int, entries: Mapping[RootOfUnity, GradedDims | Iterable[int]]) -> None:
        if not isinstance(degree, int) or degree < 1:
            raise InvalidInputError(f"degree must be a positive integer, got {degree!r}")
        clean: dict[RootOfUnity, GradedDims] = {}
        for eta, dims in entries.items():
            if not isinstance(eta, RootOfUnity):
                raise InvalidInputError(f"eigenvalues must be RootOfUnity, got {eta!r}")
            if not isinstance(dims, GradedDims):
                dims = GradedDims(dims)
            if not dims:
                continue
            if degree % eta.order:
                raise InvalidInputError(f"eigenvalue {eta} is not a {degree}-th root of unity")
            clean[eta] = dims
        invariant = clean.get(ONE)
        if invariant is None or invariant[0] != 1:
            raise InvalidInputError("a connected fiber needs dimension 1 at eigenvalue 1 in degree 0")
        for eta, dims in clean.items():
            if not eta.is_one and dims[0] != 0:
                raise InvalidInputError(f"degree-0 cohomology is invariant, but {eta} has dims[0] == {dims[0]}")
        ordered = dict(sorted(clean.items(), key=lambda kv: kv[0].sort_key))
        object.__setattr__(self, "_degree", degree)
        object.__setattr__(self, "_entries", ordered)

    def __setattr__(self, name, value):
        raise AttributeError("EigenTable is immutable")

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def support(self) -> tuple[RootOfUnity, ...]:
        """Eigenvalues with a nonzero eigenspace, in (denominator, numerator) order."""
        return tuple(self._entries)

    def get(self, eta: RootOfUnity) -> GradedDims:
        """Stored entry for eta, or the zero GradedDims when eta is off-support."""
        return self._entries.get(eta, GradedDims())

    def items(self) -> Iterator[tuple[RootOfUnity, GradedDims]]:
        return iter(self._entries.items())

    def __contains__(self, eta: RootOfUnity) -> bool:
        return eta in self._entries

    def __eq__(self, other) -> bool:
        if not isinstance(other, EigenTable):
            return NotImplemented
        return self._degree == other._degree and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self._degree, frozenset(self._entries.items())))

    def __repr__(self) -> str:
        rows = ", ".join(f"{eta}: {dims.dims}" for eta, dims in self._entries.items())
        return f"EigenTable(degree={self._degree}, {{{rows}}})"


def product_formula(tf: EigenTable, tg: EigenTable) -> EigenTable:
    """Eigentable of f*g for f, g in disjoint variable sets.

    Eigenspace by eigenspace, the cohomology of the product's fiber is the
    tensor product of the two factor eigenspaces with a copy of H^*(C^*):

        (fg table)_eta = (f table)_eta * (g table)_eta * CIRCLE_COHOMOLOGY

    so the support is the intersection of the factor supports, and the result
    has degree r + s.
    """
    entries = {}
    common = set(tf.support) & set(tg.support)
    for eta in common:
        entries[eta] = tf.get(eta) * tg.get(eta) * CIRCLE_COHOMOLOGY
    return EigenTable(tf.degree + tg.degree, entries)


def betti_formula(tf: EigenTable, tg: EigenTable, literal_index: bool = False) -> GradedDims:
    """Total Betti numbers of the fiber of f*g, summed over eigenvalues.

    result[l] = sum over lam in {l-1, l} of
                sum over eta of
                sum over i+j = lam of  tf_eta[i] * tg_{eta^{-1}}[j].

    The eta index set defaults to the gcd(r, s)-th roots of unity; any
    eigenvalue contributing a nonzero term lies in both supports, hence has
    order dividing gcd(r, s).  With ``literal_index=True`` the sum runs over
    all (r+s)-th roots instead, which is slower but useful as a diagnostic;
    the off-support terms it adds are all zero.
    """
    n = tf.degree + tg.degree if literal_index else math.gcd(tf.degree, tg.degree)
    gamma = GradedDims()
    for eta in roots_of(n):
        gamma = gamma + tf.get(eta) * tg.get(eta.inverse())
    return GradedDims([gamma[ell - 1] + gamma[ell] for ell in range(len(gamma) + 1)])


def total_betti(table: EigenTable) -> GradedDims:
    """Degreewise sum of all eigenspace dimensions."""
    return reduce(lambda a, b: a + b, (dims for _, dims in table.items()), GradedDims())


def euler_char(dims: GradedDims) -> int:
    """Alternating sum of a graded dimension vector."""
    return sum(d if j % 2 == 0 else -d for j, d in enumerate(dims))


def check_conjugation_symmetry(table: EigenTable) -> bool:
    """True when the eta and eta^{-1} eigenspaces match in every degree."""
    return all(table.get(eta) == table.get(eta.inverse()) for eta in table.support)


def check_support_corollary(tf: EigenTable, tg: EigenTable, tfg: EigenTable) -> bool:
    """Consistency of a product table against its factors.

    The product's support must be exactly the intersection of the factor
    supports, and every surviving eigenvalue must be a gcd(r, s)-th root of
    unity.  ``tfg`` is expected to come from ``product_formula(tf, tg)``.
    """
    if set(tfg.support) != set(tf.support) & set(tg.support):
        return False
    g = math.gcd(tf.degree, tg.degree)
    return all((eta ** g).is_one for eta in tfg.support)
