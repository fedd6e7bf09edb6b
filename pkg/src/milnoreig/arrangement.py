"""Central hyperplane arrangements over Q: intersection lattice, Mobius
function, characteristic polynomial, Euler characteristics, and the monodromy
eigentable of a line arrangement.

A flat is an intersection of hyperplanes.  We represent it by the reduced row
echelon basis of the linear forms vanishing on it, which is canonical for the
row space, so two flats are equal exactly when their bases are equal tuples.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .cyclotomic import ONE, roots_of
from .eigenspaces import EigenTable, GradedDims
from .errors import (
    InternalConsistencyError,
    InvalidInputError,
    NotReducedError,
    UnsupportedDimensionError,
)

Vector = tuple[Fraction, ...]


def _rref(rows: Iterable[Sequence[Fraction]]) -> tuple[Vector, ...]:
    """Reduced row echelon form over Q; returns the nonzero rows as tuples."""
    mat = [list(row) for row in rows]
    if not mat:
        return ()
    ncols = len(mat[0])
    pivot = 0
    for col in range(ncols):
        source = next((r for r in range(pivot, len(mat)) if mat[r][col]), None)
        if source is None:
            continue
        mat[pivot], mat[source] = mat[source], mat[pivot]
        lead = mat[pivot][col]
        mat[pivot] = [x / lead for x in mat[pivot]]
        for r in range(len(mat)):
            if r != pivot and mat[r][col]:
                factor = mat[r][col]
                mat[r] = [a - factor * b for a, b in zip(mat[r], mat[pivot])]
        pivot += 1
        if pivot == len(mat):
            break
    return tuple(tuple(row) for row in mat[:pivot] if any(row))


def _in_rowspan(basis: tuple[Vector, ...], vector: Sequence[Fraction]) -> bool:
    """Membership test against an RREF basis: reduce and check for zero."""
    v = list(vector)
    for row in basis:
        lead = next(i for i, x in enumerate(row) if x)
        c = v[lead]
        if c:
            v = [a - c * b for a, b in zip(v, row)]
    return not any(v)


class Hyperplane:
    """A linear hyperplane through the origin, as the coefficients of its form."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[Fraction | int | str]) -> None:
        coeffs = tuple(Fraction(c) for c in coefficients)
        if not any(coeffs):
            raise InvalidInputError("a hyperplane needs at least one nonzero coefficient")
        object.__setattr__(self, "coefficients", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("Hyperplane is immutable")

    def normalized(self) -> Vector:
        """Coefficients rescaled so the first nonzero one is 1 (proportionality key)."""
        lead = next(c for c in self.coefficients if c)
        return tuple(c / lead for c in self.coefficients)

    def __len__(self) -> int:
        return len(self.coefficients)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hyperplane):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        return f"Hyperplane({list(self.coefficients)})"


class Arrangement:
    """An ordered, reduced central arrangement in a fixed ambient dimension.

    Reduced means no two hyperplanes are proportional; the constructor checks
    this and raises :class:`NotReducedError` otherwise.  The defining
    polynomial is the product of the linear forms, so ``degree`` is the number
    of hyperplanes.
    """

    __slots__ = ("ambient_dim", "hyperplanes")

    def __init__(self, ambient_dim: int, hyperplanes: Iterable[Hyperplane | Iterable]) -> None:
        if not isinstance(ambient_dim, int) or ambient_dim < 1:
            raise InvalidInputError(f"ambient dimension must be a positive integer, got {ambient_dim!r}")
        planes = tuple(h if isinstance(h, Hyperplane) else Hyperplane(h) for h in hyperplanes)
        for h in planes:
            if len(h) != ambient_dim:
                raise InvalidInputError(
                    f"hyperplane {h!r} has {len(h)} coefficients in ambient dimension {ambient_dim}"
                )
        seen: dict[Vector, int] = {}
        for i, h in enumerate(planes):
            key = h.normalized()
            if key in seen:
                raise NotReducedError(
                    f"hyperplanes {seen[key]} and {i} are proportional; the product is not reduced"
                )
            seen[key] = i
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "hyperplanes", planes)

    def __setattr__(self, name, value):
        raise AttributeError("Arrangement is immutable")

    @property
    def degree(self) -> int:
        return len(self.hyperplanes)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Arrangement):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.hyperplanes == other.hyperplanes

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.hyperplanes))

    def __repr__(self) -> str:
        return f"Arrangement(dim={self.ambient_dim}, {len(self.hyperplanes)} hyperplanes)"


@dataclass(frozen=True)
class Flat:
    """One intersection subspace.

    ``basis`` is the canonical RREF basis of the forms vanishing on the flat,
    ``codim`` its codimension, ``mobius`` the Mobius value mu(ambient, flat),
    and ``generators`` the indices of the hyperplanes containing the flat.
    """

    basis: tuple[Vector, ...]
    codim: int
    mobius: int
    generators: frozenset[int]


class IntersectionLattice:
    """All intersections of subarrangements, ordered by increasing codimension."""

    __slots__ = ("ambient_dim", "flats")

    def __init__(self, ambient_dim: int, flats: Iterable[Flat]) -> None:
        ordered = tuple(sorted(flats, key=lambda f: (f.codim, f.basis)))
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "flats", ordered)

    def __setattr__(self, name, value):
        raise AttributeError("IntersectionLattice is immutable")

    @property
    def ambient(self) -> Flat:
        return self.flats[0]

    def __len__(self) -> int:
        return len(self.flats)

    def __iter__(self) -> Iterator[Flat]:
        return iter(self.flats)

    def __repr__(self) -> str:
        return f"IntersectionLattice(dim={self.ambient_dim}, {len(self.flats)} flats)"


def build_lattice(arrangement: Arrangement) -> IntersectionLattice:
    """Intersection lattice by breadth-first closure.

    Starting from the ambient space, intersect every known flat with every
    hyperplane; the RREF basis deduplicates flats.  Mobius values then follow
    the defining recursion mu(ambient) = 1 and, for every other flat X,
    sum of mu(Y) over all flats Y containing X (including X) equals 0.
    """
    normals = [h.coefficients for h in arrangement.hyperplanes]
    seen: set[tuple[Vector, ...]] = {()}
    frontier: list[tuple[Vector, ...]] = [()]
    while frontier:
        grown: list[tuple[Vector, ...]] = []
        for basis in frontier:
            for normal in normals:
                candidate = _rref(list(basis) + [list(normal)])
                if candidate not in seen:
                    seen.add(candidate)
                    grown.append(candidate)
        frontier = grown

    bases = sorted(seen, key=lambda basis: (len(basis), basis))
    mobius: dict[tuple[Vector, ...], int] = {}
    for basis in bases:
        if not basis:
            mobius[basis] = 1
            continue
        above = sum(
            mobius[other]
            for other in bases
            if len(other) < len(basis) and all(_in_rowspan(basis, row) for row in other)
        )
        mobius[basis] = -above

    flats = [
        Flat(
            basis=basis,
            codim=len(basis),
            mobius=mobius[basis],
            generators=frozenset(i for i, normal in enumerate(normals) if _in_rowspan(basis, normal)),
        )
        for basis in bases
    ]
    return IntersectionLattice(arrangement.ambient_dim, flats)


@dataclass(frozen=True)
class CharPoly:
    """Characteristic polynomial of an arrangement; coefficients from t^0 up, monic."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        if not self.coefficients or self.coefficients[-1] != 1:
            raise InternalConsistencyError(f"characteristic polynomial is not monic: {self.coefficients}")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, t: int) -> int:
        value = 0
        for c in reversed(self.coefficients):
            value = value * t + c
        return value

    def __str__(self) -> str:
        return _format_int_poly(self.coefficients)


def _format_int_poly(coefficients: Sequence[int]) -> str:
    parts = []
    for k in range(len(coefficients) - 1, -1, -1):
        c = coefficients[k]
        if c == 0:
            continue
        magnitude = abs(c)
        if k == 0:
            body = str(magnitude)
        else:
            power = "t" if k == 1 else f"t^{k}"
            body = power if magnitude == 1 else f"{magnitude}*{power}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{' + ' if c > 0 else ' - '}{body}")
    return "".join(parts) if parts else "0"


def char_poly(lattice: IntersectionLattice) -> CharPoly:
    """chi(A, t) = sum over flats of mobius(X) * t^dim(X)."""
    n = lattice.ambient_dim
    coeffs = [0] * (n + 1)
    for flat in lattice:
        coeffs[n - flat.codim] += flat.mobius
    return CharPoly(tuple(coeffs))


def poincare_poly(lattice: IntersectionLattice) -> tuple[int, ...]:
    """Poincare polynomial of the complement, pi(A, t) = sum mobius(X) * (-t)^codim(X).

    Sign alternation of the Mobius function makes every coefficient positive,
    so pi(A, 1) equals the sum of |mobius| over all flats.
    """
    coeffs = [0] * (lattice.ambient_dim + 1)
    for flat in lattice:
        coeffs[flat.codim] += flat.mobius * (-1) ** flat.codim
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _divide_by_one_plus_t(coeffs: Sequence[int]) -> tuple[list[int], int]:
    """Quotient and remainder of an integer polynomial by (1 + t)."""
    top = len(coeffs) - 1
    quotient = [0] * top
    for k in range(top, 0, -1):
        quotient[k - 1] = coeffs[k] - (quotient[k] if k < top else 0)
    remainder = coeffs[0] - (quotient[0] if quotient else 0)
    return quotient, remainder


def proj_complement_euler(arrangement: Arrangement) -> int:
    """Euler characteristic of the projectivized complement of the arrangement.

    Computed exactly as pi(A, t) / (1 + t) evaluated at t = -1; a central
    arrangement always has (1 + t) dividing pi, so a nonzero remainder means
    the lattice is corrupt.
    """
    if not arrangement.hyperplanes:
        raise InvalidInputError("the empty arrangement has no projectivized complement quotient")
    pi = poincare_poly(build_lattice(arrangement))
    quotient, remainder = _divide_by_one_plus_t(pi)
    if remainder:
        raise InternalConsistencyError(f"pi(A, t) = {pi} is not divisible by 1 + t")
    return sum(c if k % 2 == 0 else -c for k, c in enumerate(quotient))


def milnor_fiber_euler(arrangement: Arrangement) -> int:
    """Euler characteristic of the Milnor fiber: degree times the projective one.

    The fiber is a degree-d cyclic cover of the projectivized complement,
    where d is the number of hyperplanes.
    """
    if not arrangement.hyperplanes:
        raise InvalidInputError("the empty arrangement has no Milnor fiber")
    return arrangement.degree * proj_complement_euler(arrangement)


def line_arrangement_eigentable(arrangement: Arrangement) -> EigenTable:
    """Monodromy eigenspace table of d distinct lines through the origin of C^2.

    The projectivized fiber is the projective line minus d points.  The
    invariant part carries (1, d-1).  For eta != 1 with eta^d = 1 the
    eigenspace is the cohomology of a rank-one local system with monodromy
    eta around every puncture: no sections, and h^1 = d - 2.  For d <= 2
    those eigenspaces vanish and only the eta = 1 row remains.
    """
    if arrangement.ambient_dim != 2:
        raise UnsupportedDimensionError(
            f"eigentables are only computed for line arrangements in dimension 2, "
            f"not {arrangement.ambient_dim}"
        )
    d = arrangement.degree
    if d < 1:
        raise InvalidInputError("an empty arrangement has no eigentable")
    entries: dict = {ONE: GradedDims((1, d - 1))}
    if d >= 3:
        for eta in roots_of(d):
            if not eta.is_one:
                entries[eta] = GradedDims((0, d - 2))
    return EigenTable(d, entries)


def generic_line_arrangement(num_lines: int) -> Arrangement:
    """A standard reduced arrangement of ``num_lines`` lines in the plane:
    x, y, x + y, x + 2y, ..., x + (d-2)y."""
    if num_lines < 1:
        raise InvalidInputError("need at least one line")
    rows: list[tuple[int, int]] = [(1, 0)]
    if num_lines >= 2:
        rows.append((0, 1))
    rows.extend((1, k) for k in range(1, num_lines - 1))
    return Arrangement(2, rows)


def arrangement_from_text(text: str) -> Arrangement:
    """Parse an arrangement from text: one hyperplane per line, coefficients as
    whitespace-separated rationals; ``#`` starts a comment; blank lines are
    ignored.  The ambient dimension is the length of the first row."""
    rows: list[tuple[Fraction, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        try:
            rows.append(tuple(Fraction(token) for token in stripped.split()))
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInputError(f"bad rational on line {lineno}: {exc}") from exc
    if not rows:
        raise InvalidInputError("no hyperplanes found in input")
    return Arrangement(len(rows[0]), rows)


def arrangement_from_file(path: str | os.PathLike) -> Arrangement:
    with open(path, "r", encoding="utf-8") as handle:
        return arrangement_from_text(handle.read())
