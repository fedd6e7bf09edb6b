"""Exact arithmetic with roots of unity.

A root of unity is stored as the reduced fraction k/n of its argument, so
exp(2*pi*i*k/n) is represented without any floating point.  The group law is
addition in Q/Z.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InvalidOrderError


class RootOfUnity:
    """The complex number exp(2*pi*i * k/n), kept as the reduced fraction k/n mod 1.

    Instances are immutable and hashable, and equality is exact:
    ``RootOfUnity(2, 6) == RootOfUnity(1, 3)`` and
    ``RootOfUnity(-1, 4) == RootOfUnity(3, 4)``.
    """

    __slots__ = ("_frac",)

    def __init__(self, numerator: int, denominator: int = 1) -> None:
        if denominator == 0:
            raise InvalidOrderError("a root of unity needs a nonzero order")
        object.__setattr__(self, "_frac", Fraction(numerator, denominator) % 1)

    @classmethod
    def _from_frac(cls, frac: Fraction) -> "RootOfUnity":
        obj = object.__new__(cls)
        object.__setattr__(obj, "_frac", frac % 1)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("RootOfUnity is immutable")

    @property
    def numerator(self) -> int:
        return self._frac.numerator

    @property
    def denominator(self) -> int:
        return self._frac.denominator

    @property
    def order(self) -> int:
        """Multiplicative order: the least n >= 1 with self**n == 1."""
        return self._frac.denominator

    @property
    def is_one(self) -> bool:
        return not self._frac

    @property
    def sort_key(self) -> tuple[int, int]:
        """(denominator, numerator); emitters list eigenvalues in this order."""
        return (self._frac.denominator, self._frac.numerator)

    def inverse(self) -> "RootOfUnity":
        return RootOfUnity._from_frac(-self._frac)

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        if not isinstance(other, RootOfUnity):
            return NotImplemented
        return RootOfUnity._from_frac(self._frac + other._frac)

    def __pow__(self, exponent: int) -> "RootOfUnity":
        if not isinstance(exponent, int):
            return NotImplemented
        return RootOfUnity._from_frac(self._frac * exponent)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RootOfUnity):
            return NotImplemented
        return self._frac == other._frac

    def __hash__(self) -> int:
        return hash(self._frac)

    def __str__(self) -> str:
        if not self._frac:
            return "1"
        if self._frac == Fraction(1, 2):
            return "-1"
        return f"e({self._frac.numerator}/{self._frac.denominator})"

    __repr__ = __str__


ONE = RootOfUnity(0, 1)


def roots_of(n: int) -> list[RootOfUnity]:
    """All n distinct n-th roots of unity, ordered by increasing argument."""
    if n <= 0:
        raise InvalidOrderError(f"order must be a positive integer, got {n}")
    return [RootOfUnity(k, n) for k in range(n)]
