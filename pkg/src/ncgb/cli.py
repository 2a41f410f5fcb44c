"""Command-line entry point: ``ncgb <command> [options] [problem-file]``.

Exit codes: 0 success, 1 input error, 2 guard hit (partial result printed),
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import completion, division, mingen, oracle, stdbasis
from .parser import ParseError, ProblemFile, format_problem, parse, parse_poly
from .poly import format_poly

EXIT_OK, EXIT_INPUT, EXIT_GUARD, EXIT_INTERNAL = 0, 1, 2, 3


def _read_problem(path: str) -> ProblemFile:
    if path == "-":
        return parse(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def _print_polys(polys, out) -> None:
    for g in polys:
        print(format_poly(g), file=out)


def _by_degree(polys):
    return sorted(polys, key=lambda g: g.degree)


def cmd_gb(args, pf: ProblemFile, out) -> int:
    if args.max_deg is None and args.max_elems is None:
        raise ValueError("gb needs --max-deg or --max-elems")
    res = completion.buchberger(pf.generators, max_degree=args.max_deg, max_elements=args.max_elems)
    basis = _by_degree(res.basis)
    if args.as_problem:
        out.write(format_problem(pf, basis))
    else:
        _print_polys(basis, out)
    if res.complete:
        print("status: Complete", file=sys.stderr)
        return EXIT_OK
    print(f"status: GuardHit ({res.pending} obstructions pending)", file=sys.stderr)
    return EXIT_GUARD


def cmd_truncate(args, pf: ProblemFile, out) -> int:
    tb = completion.truncated_gb(pf.generators, args.deg)
    if args.as_problem:
        out.write(format_problem(pf, tb.elements))
    else:
        _print_polys(tb.elements, out)
    return EXIT_OK


def cmd_mingen(args, pf: ProblemFile, out) -> int:
    res = mingen.min_gen_set(pf.generators)
    print("kept:", file=out)
    for k in res.kept:
        print(f"  [{k}] {format_poly(pf.generators[k])}", file=out)
    print("profile:", file=out)
    for q, n in res.degree_profile.items():
        print(f"  degree {q}: {n}", file=out)
    if args.with_basis:
        print(f"basis (truncation degree {res.basis.truncation_degree}):", file=out)
        for g in res.basis:
            print(f"  {format_poly(g)}", file=out)
    return EXIT_OK


def cmd_stdbasis(args, pf: ProblemFile, out) -> int:
    GB = pf.generators
    if args.certify_deg is not None:
        check = stdbasis.certify(GB, args.certify_deg)
        if not check:
            print(f"input is not a Gröbner basis through degree {args.certify_deg}; "
                  f"nonzero remainder {format_poly(check.witness)}", file=sys.stderr)
            return EXIT_INPUT
    res = stdbasis.min_standard_basis(GB)
    print("kept: " + " ".join(str(k) for k in res.kept), file=out)
    print("minimal standard basis:", file=out)
    for k in res.kept:
        print(f"  [{k}] {format_poly(GB[k])}", file=out)
    print("LH profile:", file=out)
    for q, n in res.lh_profile.items():
        print(f"  degree {q}: {n}", file=out)
    if args.certify_deg is not None:
        eq = stdbasis.is_standard_basis(res.basis, GB, args.certify_deg)
        if not eq:
            raise completion.InvariantError("selected subset does not span the LH ideal")
        print(f"certified through degree {args.certify_deg}", file=out)
    return EXIT_OK


def cmd_reduce(args, pf: ProblemFile, out) -> int:
    f = parse_poly(args.poly, pf.ring)
    rep = division.remainder(f, pf.generators)
    print(format_poly(rep.remainder), file=out)
    if args.certificate:
        sig, fld = pf.signature, pf.field
        print("certificate:", file=out)
        for c, left, i, right in rep.summands:
            print(f"  {fld.format(c)} * {sig.format_word(left)} * [{i}] * {sig.format_word(right)}", file=out)
    return EXIT_OK


def cmd_dims(args, pf: ProblemFile, out) -> int:
    rep = oracle.dims(pf.generators, args.deg, ring=pf.ring)
    if args.json:
        json.dump(rep.as_dict(), out, indent=2)
        out.write("\n")
        return EXIT_OK
    header = ("degree", "ambient", "ideal", "quotient", "betti")
    rows = [
        (q, rep.ambient_dims[q], rep.ideal_dims[q], rep.quotient_dims[q], rep.betti[q])
        for q in range(args.deg + 1)
    ]
    widths = [max(len(str(r[k])) for r in rows + [header]) for k in range(len(header))]
    for r in [header] + rows:
        print("  ".join(str(v).rjust(w) for v, w in zip(r, widths)), file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ncgb", description="Gröbner bases, minimal generating sets and "
                                "standard bases in free associative algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("problem", nargs="?", default="-", help="problem file (default: stdin)")
        sp.set_defaults(func=func)
        return sp

    sp = add("gb", cmd_gb, "complete to a Gröbner basis, bounded by a guard")
    sp.add_argument("--max-deg", type=int)
    sp.add_argument("--max-elems", type=int)
    sp.add_argument("--as-problem", action="store_true", help="emit a problem file instead of bare lines")

    sp = add("truncate", cmd_truncate, "degree-truncated Gröbner basis of a graded ideal")
    sp.add_argument("--deg", type=int, required=True)
    sp.add_argument("--as-problem", action="store_true")

    sp = add("mingen", cmd_mingen, "minimal homogeneous generating subset")
    sp.add_argument("--with-basis", action="store_true")

    sp = add("stdbasis", cmd_stdbasis, "minimal standard basis from a Gröbner basis")
    sp.add_argument("--certify-deg", type=int)

    sp = add("reduce", cmd_reduce, "remainder of a polynomial modulo the generators")
    sp.add_argument("--poly", required=True)
    sp.add_argument("--certificate", action="store_true")

    sp = add("dims", cmd_dims, "brute-force dimensions and Betti numbers")
    sp.add_argument("--deg", type=int, required=True)
    sp.add_argument("--json", action="store_true")
    return p


def main(argv=None, out=None) -> int:
    args = build_parser().parse_args(argv)
    out = out or sys.stdout
    try:
        pf = _read_problem(args.problem)
        return args.func(args, pf, out)
    except completion.InvariantError as e:
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ParseError, ValueError, OSError, ZeroDivisionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
