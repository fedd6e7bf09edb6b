"""Exact eigenspace decompositions of Milnor fiber monodromy for homogeneous
polynomials: products of linear forms (central hyperplane arrangements), sums
of pure powers, and products of such pieces in disjoint variables.

Everything is computed over exact rational arithmetic; no floating point.
"""

from .arrangement import (
    Arrangement,
    CharPoly,
    Flat,
    Hyperplane,
    IntersectionLattice,
    arrangement_from_file,
    arrangement_from_text,
    build_lattice,
    char_poly,
    generic_line_arrangement,
    line_arrangement_eigentable,
    milnor_fiber_euler,
    poincare_poly,
    proj_complement_euler,
)
from .brieskorn import BrieskornPham, bp_eigentable, bp_milnor_number, bp_spectrum
from .classify import (
    ArrangementBlock,
    BPBlock,
    ClassifiedInput,
    block_eigentable,
    classify,
    combined_arrangement,
    evaluate,
)
from .cyclotomic import ONE, RootOfUnity, roots_of
from .eigenspaces import (
    CIRCLE_COHOMOLOGY,
    EigenTable,
    GradedDims,
    betti_formula,
    check_conjugation_symmetry,
    check_support_corollary,
    euler_char,
    product_formula,
    total_betti,
)
from .errors import (
    InternalConsistencyError,
    InvalidInputError,
    InvalidOrderError,
    MilnorEigError,
    NonHomogeneousError,
    NotGroupableError,
    NotReducedError,
    ParseError,
    UnsupportedDimensionError,
    UnsupportedShapeError,
)
from .parser import (
    LinearForm,
    PolyExpr,
    Power,
    Product,
    Sum,
    parse,
    to_text,
    variable_key,
    variables,
)
from .render import render, table_from_json, table_to_json_dict
from .zeta import (
    LinearFactorProduct,
    ZetaFunction,
    group_cyclotomic,
    zeta_from_table,
    zeta_homogeneous,
)

__version__ = "0.1.0"

__all__ = [
    "Arrangement",
    "ArrangementBlock",
    "BPBlock",
    "BrieskornPham",
    "CIRCLE_COHOMOLOGY",
    "CharPoly",
    "ClassifiedInput",
    "EigenTable",
    "Flat",
    "GradedDims",
    "Hyperplane",
    "IntersectionLattice",
    "InternalConsistencyError",
    "InvalidInputError",
    "InvalidOrderError",
    "LinearFactorProduct",
    "LinearForm",
    "MilnorEigError",
    "NonHomogeneousError",
    "NotGroupableError",
    "NotReducedError",
    "ONE",
    "ParseError",
    "PolyExpr",
    "Power",
    "Product",
    "RootOfUnity",
    "Sum",
    "UnsupportedDimensionError",
    "UnsupportedShapeError",
    "ZetaFunction",
    "arrangement_from_file",
    "arrangement_from_text",
    "betti_formula",
    "block_eigentable",
    "bp_eigentable",
    "bp_milnor_number",
    "bp_spectrum",
    "build_lattice",
    "char_poly",
    "check_conjugation_symmetry",
    "check_support_corollary",
    "classify",
    "combined_arrangement",
    "euler_char",
    "evaluate",
    "generic_line_arrangement",
    "group_cyclotomic",
    "line_arrangement_eigentable",
    "milnor_fiber_euler",
    "parse",
    "poincare_poly",
    "product_formula",
    "proj_complement_euler",
    "render",
    "roots_of",
    "table_from_json",
    "table_to_json_dict",
    "to_text",
    "total_betti",
    "variable_key",
    "variables",
    "zeta_from_table",
    "zeta_homogeneous",
]
