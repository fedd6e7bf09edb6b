"""Intersection lattices, characteristic polynomials, Euler characteristics,
and line arrangement eigentables, checked against a subset-enumeration oracle."""

import random
from fractions import Fraction

import pytest

from milnoreig import (
    Arrangement,
    EigenTable,
    GradedDims,
    Hyperplane,
    InvalidInputError,
    NotReducedError,
    ONE,
    UnsupportedDimensionError,
    arrangement_from_file,
    arrangement_from_text,
    build_lattice,
    char_poly,
    generic_line_arrangement,
    line_arrangement_eigentable,
    milnor_fiber_euler,
    poincare_poly,
    proj_complement_euler,
    roots_of,
    total_betti,
)
from conftest import random_line_arrangement
from oracles import brute_force_lattice, charpoly_from_brute_force


def boolean_arrangement(n: int) -> Arrangement:
    """The coordinate hyperplanes of C^n."""
    rows = [[int(i == j) for j in range(n)] for i in range(n)]
    return Arrangement(n, rows)


def assert_lattice_matches_oracle(arrangement: Arrangement) -> None:
    """Compare lattice flats with the oracle via their generator sets."""
    normals = [h.coefficients for h in arrangement.hyperplanes]
    expected = brute_force_lattice(normals)
    lattice = build_lattice(arrangement)
    assert len(lattice) == len(expected)
    for flat in lattice:
        data = expected[frozenset(flat.generators)]
        assert flat.codim == data["codim"]
        assert flat.mobius == data["mobius"]


# -------------------------------------------------------------- constructors

def test_hyperplane_rejects_the_zero_form():
    with pytest.raises(InvalidInputError):
        Hyperplane((0, 0))


def test_arrangement_rejects_proportional_hyperplanes():
    with pytest.raises(NotReducedError):
        Arrangement(2, [(1, 2), (2, 4)])
    with pytest.raises(NotReducedError):
        Arrangement(2, [(1, 0), (0, 1), (-3, 0)])


def test_arrangement_rejects_mismatched_lengths():
    with pytest.raises(InvalidInputError):
        Arrangement(2, [(1, 0, 0)])
    with pytest.raises(InvalidInputError):
        Arrangement(0, [])


def test_generic_line_arrangement_shapes():
    assert [h.coefficients for h in generic_line_arrangement(4).hyperplanes] == [
        (1, 0),
        (0, 1),
        (1, 1),
        (1, 2),
    ]
    assert generic_line_arrangement(1).degree == 1
    with pytest.raises(InvalidInputError):
        generic_line_arrangement(0)


# -------------------------------------------------------------- the lattice

def test_lattice_of_four_generic_lines():
    lattice = build_lattice(generic_line_arrangement(4))
    assert len(lattice) == 6
    assert lattice.ambient.mobius == 1
    by_codim = {0: [], 1: [], 2: []}
    for flat in lattice:
        by_codim[flat.codim].append(flat.mobius)
    assert by_codim[0] == [1]
    assert by_codim[1] == [-1, -1, -1, -1]
    assert by_codim[2] == [3]


def test_lattice_matches_oracle_on_small_arrangements():
    assert_lattice_matches_oracle(generic_line_arrangement(4))
    for n in (1, 2, 3, 4):
        assert_lattice_matches_oracle(boolean_arrangement(n))
    assert_lattice_matches_oracle(Arrangement(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)]))


def test_lattice_matches_oracle_on_random_line_arrangements():
    rng = random.Random(41)
    for _ in range(12):
        assert_lattice_matches_oracle(random_line_arrangement(rng, rng.randint(1, 7)))


def test_lattice_of_empty_arrangement_is_just_the_ambient_space():
    lattice = build_lattice(Arrangement(3, []))
    assert len(lattice) == 1
    assert lattice.ambient.codim == 0 and lattice.ambient.mobius == 1


def test_mobius_recursion_and_sign_alternation():
    rng = random.Random(42)
    arrangements = [
        generic_line_arrangement(5),
        boolean_arrangement(4),
        Arrangement(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)]),
    ]
    arrangements += [random_line_arrangement(rng, rng.randint(2, 8)) for _ in range(8)]
    for arrangement in arrangements:
        lattice = build_lattice(arrangement)
        flats = list(lattice)
        for flat in flats:
            assert (-1) ** flat.codim * flat.mobius > 0
            containing = [
                other
                for other in flats
                if set(other.generators) <= set(flat.generators)
                and other.codim <= flat.codim
            ]
            if flat.codim == 0:
                assert flat.mobius == 1
            else:
                assert sum(other.mobius for other in containing) == 0


def test_lattice_is_stable_under_reordering_and_rescaling():
    base = Arrangement(2, [(1, 0), (0, 1), (1, 1), (1, 2)])
    shuffled = Arrangement(2, [(2, 4), (0, -3), (5, 5), (1, 0)])
    key = lambda lattice: sorted((f.basis, f.codim, f.mobius) for f in lattice)
    assert key(build_lattice(base)) == key(build_lattice(shuffled))


# ------------------------------------------------- characteristic polynomial

def test_char_poly_of_four_generic_lines():
    poly = char_poly(build_lattice(generic_line_arrangement(4)))
    assert poly.coefficients == (3, -4, 1)
    assert str(poly) == "t^2 - 4*t + 3"
    assert poly(1) == 0
    assert poly(4) == 3


def test_char_poly_of_generic_lines_matches_formula_and_oracle():
    for d in range(2, 9):
        arrangement = generic_line_arrangement(d)
        poly = char_poly(build_lattice(arrangement))
        assert poly.coefficients == (d - 1, -d, 1)
        if d <= 6:
            normals = [h.coefficients for h in arrangement.hyperplanes]
            assert poly.coefficients == charpoly_from_brute_force(normals, 2)


def test_char_poly_of_boolean_arrangement_is_shifted_power():
    # chi factors as (t - 1)^n when the normals are the coordinate axes.
    poly = char_poly(build_lattice(boolean_arrangement(3)))
    assert poly.coefficients == (-1, 3, -3, 1)
    assert str(poly) == "t^3 - 3*t^2 + 3*t - 1"


def test_char_poly_of_empty_arrangement():
    poly = char_poly(build_lattice(Arrangement(3, [])))
    assert poly.coefficients == (0, 0, 0, 1)
    assert str(poly) == "t^3"


def test_poincare_poly_values():
    lattice = build_lattice(generic_line_arrangement(4))
    pi = poincare_poly(lattice)
    assert pi == (1, 4, 3)
    assert sum(pi) == sum(abs(flat.mobius) for flat in lattice)


# ------------------------------------------------------ Euler characteristics

def test_projective_complement_euler_values():
    # P^1 minus d points has Euler characteristic 2 - d.
    for d in (1, 2, 3, 4, 5):
        assert proj_complement_euler(generic_line_arrangement(d)) == 2 - d
    assert proj_complement_euler(Arrangement(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)])) == 1


def test_milnor_fiber_euler_values():
    assert milnor_fiber_euler(generic_line_arrangement(4)) == -8
    assert milnor_fiber_euler(generic_line_arrangement(6)) == -24
    assert milnor_fiber_euler(generic_line_arrangement(1)) == 1
    assert milnor_fiber_euler(generic_line_arrangement(2)) == 0


def test_euler_of_empty_arrangement_is_rejected():
    with pytest.raises(InvalidInputError):
        proj_complement_euler(Arrangement(2, []))
    with pytest.raises(InvalidInputError):
        milnor_fiber_euler(Arrangement(2, []))


# ------------------------------------------------------------ the eigentable

def test_eigentable_of_four_lines():
    table = line_arrangement_eigentable(generic_line_arrangement(4))
    expected = {eta: (0, 2) for eta in roots_of(4)}
    expected[ONE] = (1, 3)
    assert table == EigenTable(4, expected)
    assert len(table.support) == 4


def test_eigentable_small_degrees():
    assert line_arrangement_eigentable(generic_line_arrangement(1)) == EigenTable(1, {ONE: (1,)})
    assert line_arrangement_eigentable(generic_line_arrangement(2)) == EigenTable(2, {ONE: (1, 1)})


def test_eigentable_total_betti_and_euler():
    for d in range(1, 9):
        table = line_arrangement_eigentable(generic_line_arrangement(d))
        assert total_betti(table) == GradedDims((1, (d - 1) ** 2))
        euler = sum(
            (-1) ** j * dims[j]
            for _, dims in table.items()
            for j in range(len(dims))
        )
        assert euler == milnor_fiber_euler(generic_line_arrangement(d))


def test_eigentable_requires_dimension_two():
    with pytest.raises(UnsupportedDimensionError):
        line_arrangement_eigentable(Arrangement(3, [(1, 0, 0), (0, 1, 0)]))


def test_eigentable_ignores_the_particular_lines():
    rng = random.Random(7)
    for _ in range(6):
        d = rng.randint(1, 8)
        assert line_arrangement_eigentable(random_line_arrangement(rng, d)) == (
            line_arrangement_eigentable(generic_line_arrangement(d))
        )


# --------------------------------------------------------------- file parsing

ARRANGEMENT_TEXT = """\
# four generic lines
1 0
0 1

1 1   # the diagonal
1/1 2
"""


def test_arrangement_from_text():
    arrangement = arrangement_from_text(ARRANGEMENT_TEXT)
    assert arrangement == generic_line_arrangement(4)
    assert arrangement.hyperplanes[3].coefficients == (Fraction(1), Fraction(2))


def test_arrangement_from_text_errors():
    with pytest.raises(InvalidInputError, match="line 2"):
        arrangement_from_text("1 0\n0 oops\n")
    with pytest.raises(InvalidInputError, match="line 1"):
        arrangement_from_text("1/0 2\n")
    with pytest.raises(InvalidInputError):
        arrangement_from_text("# nothing here\n\n")
    with pytest.raises(InvalidInputError):
        arrangement_from_text("1 0\n1 0 0\n")


def test_arrangement_from_file(tmp_path):
    path = tmp_path / "lines.txt"
    path.write_text(ARRANGEMENT_TEXT, encoding="utf-8")
    assert arrangement_from_file(path) == generic_line_arrangement(4)
