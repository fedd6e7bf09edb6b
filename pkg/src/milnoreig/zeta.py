"""Zeta functions of finite-order monodromy, in factored form.

The zeta function used here is the alternating product of characteristic
polynomials of the monodromy acting on cohomology,

    zeta(t) = prod_j det(1 - t * T | H^j)^((-1)^(j+1)),

so a dimension in odd degree contributes positive exponents and a dimension
in even degree negative ones.  For finite-order monodromy the result is a
product of linear factors (1 - eta * t) with eta roots of unity, and when it
can be bundled into full orbits it collapses to a product of (1 - t^m) powers.
"""

from __future__ import annotations

import math
from typing import Iterator, Mapping

from .cyclotomic import RootOfUnity, roots_of
from .eigenspaces import EigenTable
from .errors import InvalidInputError, NotGroupableError


class LinearFactorProduct:
    """A finite product prod_eta (1 - eta*t)^(e_eta) with integer exponents.

    Zero exponents are dropped; the empty product is the constant 1.
    """

    __slots__ = ("_exponents",)

    def __init__(self, exponents: Mapping[RootOfUnity, int]) -> None:
        clean = {eta: e for eta, e in exponents.items() if e}
        ordered = dict(sorted(clean.items(), key=lambda kv: kv[0].sort_key))
        object.__setattr__(self, "_exponents", ordered)

    def __setattr__(self, name, value):
        raise AttributeError("LinearFactorProduct is immutable")

    def get(self, eta: RootOfUnity) -> int:
        return self._exponents.get(eta, 0)

    def items(self) -> Iterator[tuple[RootOfUnity, int]]:
        return iter(self._exponents.items())

    def __bool__(self) -> bool:
        return bool(self._exponents)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearFactorProduct):
            return NotImplemented
        return self._exponents == other._exponents

    def __hash__(self) -> int:
        return hash(frozenset(self._exponents.items()))

    def __str__(self) -> str:
        if not self._exponents:
            return "1"
        parts = []
        for eta, e in self._exponents.items():
            if eta.is_one:
                base = "(1-t)"
            elif eta.order == 2:
                base = "(1+t)"
            else:
                base = f"(1-{eta}*t)"
            parts.append(base if e == 1 else f"{base}^{e}")
        return "*".join(parts)

    __repr__ = __str__


class ZetaFunction:
    """A product prod_m (1 - t^m)^(e_m); the empty product is the constant 1."""

    __slots__ = ("_exponents",)

    def __init__(self, exponents: Mapping[int, int]) -> None:
        clean = {}
        for m, e in exponents.items():
            if not isinstance(m, int) or m < 1:
                raise InvalidInputError(f"factor orders must be positive integers, got {m!r}")
            if e:
                clean[m] = e
        object.__setattr__(self, "_exponents", dict(sorted(clean.items())))

    def __setattr__(self, name, value):
        raise AttributeError("ZetaFunction is immutable")

    def get(self, m: int) -> int:
        return self._exponents.get(m, 0)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(self._exponents.items())

    def to_json(self) -> list[list[int]]:
        """Sorted [m, e] pairs."""
        return [[m, e] for m, e in self._exponents.items()]

    def __bool__(self) -> bool:
        return bool(self._exponents)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZetaFunction):
            return NotImplemented
        return self._exponents == other._exponents

    def __hash__(self) -> int:
        return hash(frozenset(self._exponents.items()))

    def __str__(self) -> str:
        if not self._exponents:
            return "1"
        parts = []
        for m, e in self._exponents.items():
            base = "(1-t)" if m == 1 else f"(1-t^{m})"
            parts.append(base if e == 1 else f"{base}^{e}")
        return "*".join(parts)

    __repr__ = __str__


def zeta_from_table(table: EigenTable) -> LinearFactorProduct:
    """Zeta function of the monodromy recorded in an eigentable.

    The factor (1 - eta*t) appears with exponent
    sum_j (-1)^(j+1) * dim H^j_eta, following the convention stated in the
    module docstring.
    """
    exponents = {}
    for eta, dims in table.items():
        exponents[eta] = sum((-1) ** (j + 1) * d for j, d in enumerate(dims))
    return LinearFactorProduct(exponents)


def group_cyclotomic(product: LinearFactorProduct) -> ZetaFunction:
    """Bundle linear factors into cyclotomic ones via
    prod over eta with eta^m = 1 of (1 - eta*t) = 1 - t^m.

    Greedy, largest order first: for each divisor m of the lcm of the orders
    present, if every m-th root of unity carries a nonzero exponent and all
    those exponents share a sign, extract the sign-consistent minimum k and
    emit (1 - t^m)^k.  Raises :class:`NotGroupableError`, with the leftover
    factors attached, if anything remains at the end.  Conjugation-symmetric
    tables of homogeneous polynomials always group; arbitrary hand-built
    products may not.
    """
    remaining = {eta: e for eta, e in product.items()}
    if not remaining:
        return ZetaFunction({})
    common = math.lcm(*(eta.order for eta in remaining))
    divisors = sorted((m for m in range(1, common + 1) if common % m == 0), reverse=True)
    grouped: dict[int, int] = {}
    for m in divisors:
        orbit = roots_of(m)
        exps = [remaining.get(eta, 0) for eta in orbit]
        if all(e > 0 for e in exps):
            k = min(exps)
        elif all(e < 0 for e in exps):
            k = max(exps)
        else:
            continue
        for eta in orbit:
            remaining[eta] -= k
            if not remaining[eta]:
                del remaining[eta]
        grouped[m] = k
    if remaining:
        raise NotGroupableError(
            "leftover linear factors do not form full cyclotomic orbits",
            LinearFactorProduct(remaining),
        )
    return ZetaFunction(grouped)


def zeta_homogeneous(degree: int, euler: int) -> ZetaFunction:
    """Zeta function of a degree-d homogeneous polynomial from its fiber Euler
    characteristic: (1 - t^d)^(-chi/d).

    Every iterate of the geometric monodromy short of the identity is
    fixed-point free on the fiber, which forces this single-factor shape and
    in particular d | chi.
    """
    if not isinstance(degree, int) or degree < 1:
        raise InvalidInputError(f"degree must be a positive integer, got {degree!r}")
    if euler % degree:
        raise InvalidInputError(
            f"Euler characteristic {euler} is not divisible by the degree {degree}"
        )
    exponent = -(euler // degree)
    return ZetaFunction({degree: exponent} if exponent else {})
