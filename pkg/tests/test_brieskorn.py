"""Sums of pure powers: Milnor number, eigenvalue spectrum, eigentable."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from milnoreig import (
    BrieskornPham,
    EigenTable,
    GradedDims,
    InvalidInputError,
    NonHomogeneousError,
    ONE,
    RootOfUnity,
    bp_eigentable,
    bp_milnor_number,
    bp_spectrum,
    check_conjugation_symmetry,
    euler_char,
    total_betti,
)
from conftest import example2_f_table
from oracles import bp_spectrum_by_fractions


def spectrum_as_pairs(bp: BrieskornPham) -> dict[tuple[int, int], int]:
    return {(eta.numerator, eta.denominator): c for eta, c in bp_spectrum(bp).items()}


# ---------------------------------------------------------------- the oracle

def test_oracle_spectrum_of_cubic_fermat():
    # Hand count: index tuples in {1, 2}^3 grouped by their coordinate sum.
    assert bp_spectrum_by_fractions((3, 3, 3)) == {(0, 1): 2, (1, 3): 3, (2, 3): 3}


def test_oracle_spectrum_of_mixed_powers():
    # All six tuples land on distinct eigenvalues.
    assert bp_spectrum_by_fractions((2, 3, 4)) == {
        (1, 12): 1,
        (1, 3): 1,
        (5, 12): 1,
        (7, 12): 1,
        (2, 3): 1,
        (11, 12): 1,
    }


# --------------------------------------------------------------- constructor

def test_constructor_rejects_small_inputs():
    with pytest.raises(InvalidInputError):
        BrieskornPham([3])
    with pytest.raises(InvalidInputError):
        BrieskornPham([])
    with pytest.raises(InvalidInputError):
        BrieskornPham([2, 1])
    with pytest.raises(InvalidInputError):
        BrieskornPham([0, 3])


def test_constructor_accessors():
    bp = BrieskornPham([2, 3, 4])
    assert bp.exponents == (2, 3, 4)
    assert bp.num_variables == 3
    assert not bp.is_homogeneous
    assert BrieskornPham([3, 3]).is_homogeneous


# ------------------------------------------------------------------ spectrum

def test_spectrum_matches_oracle_on_fixed_shapes():
    for exponents in [(2, 2), (2, 2, 2), (3, 3), (3, 3, 3), (2, 3), (2, 3, 4), (4, 4, 4), (5, 2)]:
        bp = BrieskornPham(exponents)
        assert spectrum_as_pairs(bp) == bp_spectrum_by_fractions(exponents)
        assert sum(bp_spectrum(bp).values()) == bp_milnor_number(bp)


@settings(max_examples=40)
@given(st.lists(st.integers(2, 6), min_size=2, max_size=4))
def test_spectrum_matches_oracle_on_random_shapes(exponents):
    bp = BrieskornPham(exponents)
    assert spectrum_as_pairs(bp) == bp_spectrum_by_fractions(tuple(exponents))


def test_spectrum_small_cases():
    assert bp_spectrum(BrieskornPham([2, 2])) == {ONE: 1}
    assert bp_spectrum(BrieskornPham([2, 2, 2])) == {RootOfUnity(1, 2): 1}
    assert bp_spectrum(BrieskornPham([2, 3])) == {
        RootOfUnity(5, 6): 1,
        RootOfUnity(1, 6): 1,
    }


def test_milnor_numbers():
    assert bp_milnor_number(BrieskornPham([3, 3, 3])) == 8
    assert bp_milnor_number(BrieskornPham([2, 2])) == 1
    assert bp_milnor_number(BrieskornPham([2, 3, 4])) == 6
    assert bp_milnor_number(BrieskornPham([7, 5])) == 24


# ---------------------------------------------------------------- eigentable

def test_eigentable_of_cubic_fermat():
    assert bp_eigentable(BrieskornPham([3, 3, 3])) == example2_f_table()


def test_eigentable_of_two_squares():
    # x^2 + y^2 factors into two lines, and the table agrees with that picture.
    assert bp_eigentable(BrieskornPham([2, 2])) == EigenTable(2, {ONE: (1, 1)})


def test_eigentable_of_three_squares():
    table = bp_eigentable(BrieskornPham([2, 2, 2]))
    assert table == EigenTable(2, {ONE: (1,), RootOfUnity(1, 2): (0, 0, 1)})
    assert table.get(ONE) == GradedDims((1,))


def test_eigentable_of_quartic_fermat_surface():
    table = bp_eigentable(BrieskornPham([4, 4, 4]))
    assert table.degree == 4
    assert total_betti(table) == GradedDims((1, 0, 27))
    assert table.get(ONE) == GradedDims((1, 0, 6))
    assert table.get(RootOfUnity(1, 4))[2] == 7
    assert table.get(RootOfUnity(1, 2))[2] == 7
    assert table.get(RootOfUnity(3, 4))[2] == 7
    assert check_conjugation_symmetry(table)


def test_eigentable_rejects_mixed_exponents():
    with pytest.raises(NonHomogeneousError):
        bp_eigentable(BrieskornPham([2, 3]))


@settings(max_examples=30)
@given(st.integers(2, 6), st.integers(2, 4))
def test_eigentable_euler_identity(d, n):
    # chi of the fiber is 1 + (-1)^(n-1) * mu for a homogeneous sum of powers.
    bp = BrieskornPham([d] * n)
    table = bp_eigentable(bp)
    assert euler_char(total_betti(table)) == 1 + (-1) ** (n - 1) * bp_milnor_number(bp)
    assert check_conjugation_symmetry(table)
