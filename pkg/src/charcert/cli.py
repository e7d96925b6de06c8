"""Command-line front end: each subcommand runs one certificate and prints its report.

Exit codes: 0 all verified, 1 refuted or counterexample found, 2 usage,
parse or internal error, 3 evidence only, unmet hypotheses or not checked.
"""
from __future__ import annotations

import argparse
import sys

from . import algebras, groupfix, octonion, symfun, tables
from .grammar import ParseError
from .polynomials import parse_poly
from .report import emit, combined_exit_code


def _verify_charpoly(a):
    return groupfix.paired_charpoly_check(groupfix.AbelianGroupSpec.parse(a.group))


def _verify_commutation(a):
    return groupfix.commutation_check(groupfix.AbelianGroupSpec.parse(a.group))


def _verify_basis(a):
    return groupfix.basis_check(groupfix.AbelianGroupSpec.parse(a.group))


def _verify_equal_sigma(a):
    group = groupfix.AbelianGroupSpec.parse(a.group)
    return groupfix.equal_sigma_product_certificate(group, a.m, a.i, a.j)


def _verify_root_condition(a):
    return groupfix.root_of_unity_condition_check(
        parse_poly(a.poly), a.i, a.j, a.u, a.d, groupfix.AbelianGroupSpec.parse(a.group))


def _verify_two_block_trace(a):
    return groupfix.sn_fixed_point_certificate(a.n1, a.n2, a.m1, a.m2)


def _verify_characters(a):
    return groupfix.character_decomposition_check(a.n1, a.n2)


def _verify_cyclic(a):
    return groupfix.cyclic_counterexample_check()


def _verify_high_powers(a):
    return symfun.high_powers_check(a.n, include_c=not a.no_c)


def _verify_octonion(a):
    return octonion.octonion_sign_system_certificate(a.m, a.s, a.poly)


def _verify_quadratic(a):
    spec = octonion.OctonionSpec()
    x = octonion.parse_octonion(spec, a.poly) if a.poly else None
    return octonion.quadratic_identity_check(spec, x)


def _verify_composition(a):
    return octonion.composition_check(trials=a.trials, seed=a.seed)


# name -> (runner, required flags, optional flags with defaults)
VERIFY = {
    "charpoly": (_verify_charpoly, ["group"], {}),
    "commutation": (_verify_commutation, ["group"], {}),
    "basis": (_verify_basis, ["group"], {}),
    "equal-sigma": (_verify_equal_sigma, ["group", "m", "i", "j"], {}),
    "root-condition": (_verify_root_condition, ["group", "poly", "i", "j", "u"], {"d": None}),
    "two-block-trace": (_verify_two_block_trace, ["n1", "n2", "m1", "m2"], {}),
    "characters": (_verify_characters, ["n1", "n2"], {}),
    "cyclic-witness": (_verify_cyclic, [], {}),
    "high-powers": (_verify_high_powers, ["n"], {"no_c": False}),
    "octonion": (_verify_octonion, ["m", "s", "poly"], {}),
    "quadratic": (_verify_quadratic, [], {"poly": None}),
    "composition": (_verify_composition, [], {"trials": 50, "seed": 0}),
}

# short names kept for compatibility with existing scripts
ALIASES = {"equal-sigma": "thm3", "root-condition": "thm3a", "two-block-trace": "thm1",
           "cyclic-witness": "cyclic-remark"}
CANONICAL = {alias: name for name, alias in ALIASES.items()}

_INT_FLAGS = ("m", "i", "j", "s", "u", "d", "n", "n1", "n2", "m1", "m2", "trials", "seed")

_HELP = {
    "group": "abelian group as cyclic orders, e.g. 2x3 (use 1 for the trivial group)",
    "poly": "polynomial, octonion expression or octonion 8-tuple, depending on the command",
}


def _add_output_flags(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--out", help="write the report to this file instead of stdout")
    p.add_argument("--timing", action="store_true", help="include duration_ms in the output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="charcert",
                                     description="Exact certificates for sigma^(i) systems.")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run one certificate")
    vsub = verify.add_subparsers(dest="target", required=True)
    for name, (_, required, optional) in VERIFY.items():
        p = vsub.add_parser(name, aliases=[ALIASES[name]] if name in ALIASES else [])
        for flag in required:
            p.add_argument(f"--{flag.replace('_', '-')}", dest=flag, required=True,
                           type=int if flag in _INT_FLAGS else str, help=_HELP.get(flag))
        for flag, default in optional.items():
            if isinstance(default, bool):
                p.add_argument(f"--{flag.replace('_', '-')}", dest=flag, action="store_true")
            else:
                p.add_argument(f"--{flag.replace('_', '-')}", dest=flag, default=default,
                               type=int if flag in _INT_FLAGS else str, help=_HELP.get(flag))
        _add_output_flags(p)

    table = sub.add_parser("table", help="reproduce the degree 5 or 6 table")
    table.add_argument("degree", choices=["deg5", "deg6"])
    _add_output_flags(table)

    search = sub.add_parser("search", help="seeded random search (evidence only)")
    ssub = search.add_subparsers(dest="target", required=True)
    ce = ssub.add_parser("counterexample")
    ce.add_argument("--algebra", required=True,
                    help="e.g. 'symbol 2 z w' or 'symbol 2 z1 w1 (x) symbol 3 z2 w2'")
    ce.add_argument("--predicate", required=True, help="trace0-norm1 or sigma-zero:<i>")
    ce.add_argument("--trials", type=int, required=True)
    ce.add_argument("--seed", type=int, required=True)
    ce.add_argument("--degree-bound", dest="degree_bound", type=int, default=1)
    _add_output_flags(ce)
    return parser


def _dispatch(args):
    if args.command == "verify":
        return VERIFY[CANONICAL.get(args.target, args.target)][0](args)
    if args.command == "table":
        return tables.table_deg(int(args.degree[3:]))
    spec = algebras.TensorSpec.parse(args.algebra)
    return algebras.evidence_search(spec, args.predicate, args.trials, args.seed,
                                    args.degree_bound)


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    try:
        report = _dispatch(args)
    except ParseError as e:
        print(f"parse error: {e.annotated()}", file=stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=stderr)
        return 2
    except Exception as e:  # anything else is a bug, still exit 2
        print(f"internal error: {type(e).__name__}: {e}", file=stderr)
        return 2
    text = emit(report, args.format, args.timing)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return combined_exit_code(report)


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
