"""Command-line driver.

Exit codes: 0 on success, 2 for parse or classification errors, 3 for
unsupported shapes or dimensions, 4 for internal consistency failures.
"""

from __future__ import annotations

import argparse
import sys
from functools import reduce

from .arrangement import (
    arrangement_from_file,
    build_lattice,
    char_poly,
    milnor_fiber_euler,
)
from .brieskorn import BrieskornPham, bp_milnor_number
from .classify import ArrangementBlock, BPBlock, ClassifiedInput, block_eigentable, classify, combined_arrangement, evaluate
from .eigenspaces import (
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
    NonHomogeneousError,
    NotGroupableError,
    NotReducedError,
    ParseError,
    UnsupportedDimensionError,
    UnsupportedShapeError,
)
from .parser import parse
from .render import FORMATS, render
from .zeta import ZetaFunction, group_cyclotomic, zeta_from_table, zeta_homogeneous

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_UNSUPPORTED = 3
EXIT_INTERNAL = 4

_INPUT_ERRORS = (ParseError, NotReducedError, NonHomogeneousError, InvalidInputError, InvalidOrderError)
_UNSUPPORTED_ERRORS = (UnsupportedShapeError, UnsupportedDimensionError)
_INTERNAL_ERRORS = (InternalConsistencyError, NotGroupableError)


def _classified_input(args: argparse.Namespace) -> ClassifiedInput:
    bp_spec = getattr(args, "bp", None)
    if bp_spec is not None and args.expr is not None:
        raise InvalidInputError("give either an expression or --bp, not both")
    if bp_spec is not None:
        try:
            exponents = [int(token) for token in bp_spec.split(",")]
        except ValueError as exc:
            raise InvalidInputError(f"--bp expects comma-separated integers: {exc}") from exc
        names = tuple(f"x{i}" for i in range(1, len(exponents) + 1))
        return ClassifiedInput((BPBlock(names, BrieskornPham(exponents)),))
    if args.expr is None:
        raise InvalidInputError("an expression is required (or --bp)")
    return classify(parse(args.expr))


def _block_degree(block: ArrangementBlock | BPBlock) -> int:
    if isinstance(block, BPBlock):
        return block.powers.exponents[0]
    return block.arrangement.degree


def _is_tableable(block: ArrangementBlock | BPBlock) -> bool:
    return isinstance(block, BPBlock) or block.arrangement.ambient_dim <= 2


def cmd_table(args: argparse.Namespace) -> int:
    table = evaluate(_classified_input(args))
    print(render(table, args.format))
    return EXIT_OK


def cmd_betti(args: argparse.Namespace) -> int:
    tables = [block_eigentable(b) for b in _classified_input(args).blocks]
    if len(tables) == 1:
        betti = total_betti(tables[0])
    else:
        betti = betti_formula(reduce(product_formula, tables[:-1]), tables[-1])
    print(" ".join(str(d) for d in betti) or "0")
    return EXIT_OK


def cmd_zeta(args: argparse.Namespace) -> int:
    classified = _classified_input(args)
    blocks = classified.blocks
    if all(_is_tableable(b) for b in blocks):
        table = evaluate(classified)
        result = group_cyclotomic(zeta_from_table(table))
        try:
            shortcut = zeta_homogeneous(table.degree, euler_char(total_betti(table)))
        except InvalidInputError as exc:
            raise InternalConsistencyError(f"Euler shortcut failed: {exc}") from exc
        if result != shortcut:
            raise InternalConsistencyError(
                f"zeta routes disagree: table gives {result}, Euler shortcut gives {shortcut}"
            )
        if len(blocks) == 1 and isinstance(blocks[0], ArrangementBlock) and blocks[0].arrangement.ambient_dim == 2:
            lattice_route = zeta_homogeneous(table.degree, milnor_fiber_euler(blocks[0].arrangement))
            if result != lattice_route:
                raise InternalConsistencyError(
                    f"zeta routes disagree: table gives {result}, lattice gives {lattice_route}"
                )
    elif all(isinstance(b, ArrangementBlock) for b in blocks):
        merged = combined_arrangement(classified)
        result = zeta_homogeneous(merged.degree, milnor_fiber_euler(merged))
    else:
        # a product of blocks in disjoint variables fibers over C^*, so its
        # fiber Euler characteristic vanishes and the zeta function is 1
        result = ZetaFunction({})
    print(str(result))
    return EXIT_OK


def cmd_charpoly(args: argparse.Namespace) -> int:
    if args.file is not None and args.expr is not None:
        raise InvalidInputError("give either an expression or --file, not both")
    if args.file is not None:
        arrangement = arrangement_from_file(args.file)
    elif args.expr is not None:
        arrangement = combined_arrangement(classify(parse(args.expr)))
    else:
        raise InvalidInputError("an expression or --file is required")
    print(str(char_poly(build_lattice(arrangement))))
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    classified = _classified_input(args)
    tables = [block_eigentable(b) for b in classified.blocks]
    results: list[tuple[str, bool]] = []
    for i, table in enumerate(tables, 1):
        results.append((f"conjugation symmetry [block {i}]", check_conjugation_symmetry(table)))
    if len(tables) >= 2:
        tf = reduce(product_formula, tables[:-1])
        tg = tables[-1]
        tfg = product_formula(tf, tg)
        results.append(("conjugation symmetry [product]", check_conjugation_symmetry(tfg)))
        results.append(("support corollary", check_support_corollary(tf, tg, tfg)))
        results.append(("product vs betti totals", total_betti(tfg) == betti_formula(tf, tg)))
        results.append(
            ("betti literal index set agrees", betti_formula(tf, tg, literal_index=True) == betti_formula(tf, tg))
        )
        results.append(("zeta of the product is 1", not zeta_from_table(tfg)))
    else:
        table = tables[0]
        block = classified.blocks[0]
        table_route = group_cyclotomic(zeta_from_table(table))
        if isinstance(block, ArrangementBlock) and block.arrangement.ambient_dim == 2:
            lattice_route = zeta_homogeneous(table.degree, milnor_fiber_euler(block.arrangement))
            results.append(("zeta dual route (table vs lattice)", table_route == lattice_route))
        elif isinstance(block, BPBlock):
            n = block.powers.num_variables
            chi = 1 + (-1) ** (n - 1) * bp_milnor_number(block.powers)
            results.append(("zeta dual route (table vs euler)", table_route == zeta_homogeneous(table.degree, chi)))
    for label, ok in results:
        print(f"{label}: {'PASS' if ok else 'FAIL'}")
    return EXIT_OK if all(ok for _, ok in results) else EXIT_INTERNAL


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="milnoreig",
        description="Exact monodromy eigenspace tables for Milnor fibers of homogeneous polynomials.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, func, with_bp: bool = True):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("expr", nargs="?", default=None, help="polynomial expression, e.g. 'x1*x2*(x1+x2)'")
        if with_bp:
            p.add_argument("--bp", metavar="A1,A2,...", help="sum-of-powers shortcut, e.g. --bp 3,3,3")
        p.set_defaults(func=func)
        return p

    table = add("table", "print the eigenspace table", cmd_table)
    table.add_argument("--format", choices=FORMATS, default="text")
    add("betti", "print total Betti numbers via the eigenvalue sum", cmd_betti)
    add("zeta", "print the monodromy zeta function", cmd_zeta)
    charpoly = add("charpoly", "print the characteristic polynomial of an arrangement", cmd_charpoly, with_bp=False)
    charpoly.add_argument("--file", metavar="PATH", help="read hyperplane coefficients from a file")
    add("check", "run the internal consistency checks and report pass/fail", cmd_check)
    return top


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except _UNSUPPORTED_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except _INTERNAL_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def run() -> None:
    sys.exit(main())
