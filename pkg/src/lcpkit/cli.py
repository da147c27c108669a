"""Command-line surface: file-based workflows over the shared text formats.

Exit codes: 0 success, 1 malformed input, 2 mathematically impossible
request (an obstruction, not a bug), 3 enumeration budget exhausted.
Runs are deterministic: randomized searches take --seed with a fixed
default, and output bytes depend only on inputs, flags, and seed.
All indices in files (sigma image lists, swap positions) are 0-based.
"""

from __future__ import annotations

import argparse
import sys

from . import codes, constructions, lcp, search
from .gf2 import BitMatrix, MatrixFormatError, format_matrix_text, parse_matrix_text
from .codes import LinearCode

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_IMPOSSIBLE = 2
EXIT_BUDGET = 3


class InputError(Exception):
    pass


def _read_matrix(path: str) -> BitMatrix:
    try:
        with open(path, "r", encoding="ascii") as fh:
            return parse_matrix_text(fh.read())
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    except (MatrixFormatError, UnicodeDecodeError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _read_code(path: str) -> LinearCode:
    return codes.from_generator(_read_matrix(path))


def _write_text(path: str | None, text: str, out) -> None:
    if path is None:
        out.write(text)
    else:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(text)


def _obstruction_report(exc: lcp.ConditionViolated) -> str:
    return (
        "error: condition-violated\n"
        f"all_one_in_c1_and_c2perp: {'true' if exc.one_in_c1_c2dual else 'false'}\n"
        f"all_one_in_c2_and_c1perp: {'true' if exc.one_in_c2_c1dual else 'false'}\n"
        f"intersection_dim: {exc.intersection_dim}\n"
    )


def cmd_build_lcp(args, out) -> int:
    c1 = _read_code(args.g1)
    c2 = _read_code(args.g2)
    try:
        if args.pad:
            cert = lcp.build_lcp_padded(c1, c2)
            if args.security:
                cert = lcp.with_security_parameter(cert, c1, c2)
        else:
            cert = lcp.build_lcp(c1, c2)
            if args.security:
                cert = lcp.with_security_parameter(cert, c1, c2)
    except lcp.ConditionViolated as exc:
        out.write(_obstruction_report(exc))
        return EXIT_IMPOSSIBLE
    _write_text(args.output, lcp.format_certificate(cert), out)
    return EXIT_OK


def cmd_ell_pair(args, out) -> int:
    c1 = _read_code(args.g1)
    c2 = _read_code(args.g2)
    try:
        cert = lcp.ell_pair(c1, c2, args.ell)
    except lcp.ConditionViolated as exc:
        out.write(_obstruction_report(exc))
        return EXIT_IMPOSSIBLE
    except ValueError as exc:
        out.write(f"error: {exc}\n")
        return EXIT_IMPOSSIBLE
    _write_text(args.output, lcp.format_certificate(cert), out)
    return EXIT_OK


def cmd_hull(args, out) -> int:
    c = _read_code(args.g)
    h = codes.hull(c)
    text = f"# hull dimension {h.k}\n" + format_matrix_text(h.generator)
    _write_text(args.output, text, out)
    return EXIT_OK


def cmd_mindist(args, out) -> int:
    c = _read_code(args.g)
    try:
        d = codes.min_distance(c, args.max_dim)
    except codes.EnumerationBoundExceeded as exc:
        out.write(f"error: {exc}\n")
        return EXIT_BUDGET
    out.write(f"{d}\n")
    return EXIT_OK


def cmd_dual(args, out) -> int:
    c = _read_code(args.g)
    _write_text(args.output, format_matrix_text(codes.dual(c).generator), out)
    return EXIT_OK


def cmd_ss(args, out) -> int:
    try:
        if args.lcp:
            cert, pair = constructions.ss_lcp(args.k, args.d)
            code = pair[0]
        else:
            spec = constructions.solomon_stiffler_spec(args.k, args.d)
            code = constructions.solomon_stiffler_code(spec)
            cert = None
    except constructions.SolomonStifflerError as exc:
        out.write(f"error: {exc}\n")
        return EXIT_IMPOSSIBLE
    header = f"# [{code.n},{code.k},{args.d}] code meeting the Griesmer bound\n"
    _write_text(args.output, header + format_matrix_text(code.generator), out)
    if cert is not None:
        _write_text(args.cert, lcp.format_certificate(cert), out)
    return EXIT_OK


def cmd_table(args, out) -> int:
    table = search.DlTable()
    if args.dl_table:
        try:
            table = search.DlTable.load(args.dl_table)
        except (OSError, ValueError) as exc:
            raise InputError(f"{args.dl_table}: {exc}") from None
    lines = ["n,k,d_L,d_LCP,status,witness_file"]
    for n in range(args.n_min, args.n_max + 1):
        for k in range(args.k_min, min(args.k_max, n) + 1):
            if search.gaussian_binomial(n, k) <= args.budget:
                res = search.d_lcp_exact_tiny(n, k, args.budget)
                witness_file = ""
                if res.certificate is not None and args.witness_dir:
                    witness_file = f"{args.witness_dir}/lcp_{n}_{k}.cert"
                    with open(witness_file, "w", encoding="ascii") as fh:
                        fh.write(lcp.format_certificate(res.certificate))
                        fh.write("# witness generator\n")
                        fh.write(format_matrix_text(res.witness.generator))
                lines.append(f"{n},{k},{res.d_l},{res.d_lcp},computed,{witness_file}")
            elif table.get(n, k) is not None:
                lines.append(f"{n},{k},{table.get(n, k)},,{table.provenance(n, k)},")
            else:
                lines.append(f"{n},{k},,,unknown,")
    _write_text(args.output, "\n".join(lines) + "\n", out)
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    try:
        count = 0
        chunks = []
        for code in search.enumerate_subspaces(args.n, args.k, args.budget):
            if args.distance is not None and codes.min_distance(code) != args.distance:
                continue
            count += 1
            if args.print_codes:
                chunks.append(format_matrix_text(code.generator))
    except search.BudgetExceeded as exc:
        out.write(f"error: {exc}\n")
        return EXIT_BUDGET
    out.write(f"count: {count}\n")
    if args.print_codes:
        out.write("\n".join(chunks))
    return EXIT_OK


def cmd_verify(args, out) -> int:
    try:
        with open(args.cert, "r", encoding="ascii") as fh:
            cert = lcp.parse_certificate(fh.read())
    except OSError as exc:
        raise InputError(f"{args.cert}: {exc.strerror}") from None
    except lcp.CertificateFormatError as exc:
        raise InputError(f"{args.cert}: {exc}") from None
    c1 = _read_code(args.g1)
    c2 = _read_code(args.g2)
    recomputed = lcp.cross_intersection(c1, codes.permute(c2, cert.sigma)).k
    match = recomputed == cert.final_dim
    out.write(f"final_dim: {recomputed}\n")
    out.write(f"match: {'true' if match else 'false'}\n")
    return EXIT_OK if match else EXIT_INPUT


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lcpkit",
        description="binary linear complementary pairs: build, construct, enumerate, verify",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build-lcp", help="permutation closing a pair to intersection zero")
    p.add_argument("g1")
    p.add_argument("g2")
    p.add_argument("--pad", action="store_true", help="prepend a zero coordinate to both codes")
    p.add_argument("--security", action="store_true", help="attach the security parameter")
    p.add_argument("-o", "--output", default=None, help="certificate file (default stdout)")
    p.set_defaults(func=cmd_build_lcp)

    p = sub.add_parser("ell-pair", help="permutation reaching a target intersection dimension")
    p.add_argument("g1")
    p.add_argument("g2")
    p.add_argument("ell", type=int)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_ell_pair)

    p = sub.add_parser("hull", help="generator and dimension of C meet dual(C)")
    p.add_argument("g")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_hull)

    p = sub.add_parser("mindist", help="exact minimum distance by enumeration")
    p.add_argument("g")
    p.add_argument("--max-dim", type=int, default=codes.DEFAULT_ENUMERATION_BOUND)
    p.set_defaults(func=cmd_mindist)

    p = sub.add_parser("dual", help="generator of the dual code")
    p.add_argument("g")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("ss", help="Griesmer code from a punctured repeated simplex")
    p.add_argument("k", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--lcp", action="store_true", help="also close the code into a verified pair")
    p.add_argument("-o", "--output", default=None, help="generator file (default stdout)")
    p.add_argument("--cert", default=None, help="certificate file with --lcp (default stdout)")
    p.set_defaults(func=cmd_ss)

    p = sub.add_parser("table", help="CSV of d_L / d_LCP over an (n, k) rectangle")
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--k-min", type=int, default=1)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--budget", type=int, default=search.DEFAULT_SUBSPACE_BUDGET)
    p.add_argument("--dl-table", default=None, help="user-supplied 'n k d provenance' file")
    p.add_argument("--witness-dir", default=None, help="write witness certificates here")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("enumerate", help="stream the k-dimensional subspaces of F_2^n")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--distance", type=int, default=None, help="keep only this exact distance")
    p.add_argument("--budget", type=int, default=search.DEFAULT_SUBSPACE_BUDGET)
    p.add_argument("--print-codes", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="recompute a certificate from generators and sigma alone")
    p.add_argument("cert")
    p.add_argument("g1")
    p.add_argument("g2")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, lcp.UnequalDimensions) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except search.BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
