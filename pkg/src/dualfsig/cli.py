"""Command-line interface.

Usage:
    dualfsig decompose --n 2 --d 2 --p 3 --e 1
    dualfsig signature --n 2 --d 3 --p 7 --e-max 4 --format json
    dualfsig verify-minors --n 3 --r 3 --certificates certs.json
    dualfsig chain --n 3 --d 5
    dualfsig fsig --n 2 --d 3 --p 5 --e-max 6

Exit codes: 0 success, 1 a checked identity failed, 2 bad input,
3 resource guard exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .determinantal import DEFAULT_MAX_MINORS, certify_all, verify_minor_ideal
from .errors import CertificateError, GuardError, PaperAmbiguityError
from .frobenius import (
    DEFAULT_MAX_ENUM,
    FrobeniusParams,
    decompose_roots,
    decompose_roots_general,
    enumerate_oracle,
    pinch_holds,
    pinch_values,
    splitting_number,
)
from .signature import (
    closed_form_prop,
    closed_form_thm,
    convergence_table,
    surjection_chain,
)
from .veronese import VeroneseContext, canonical_class

SCHEMA_VERSION = "1"

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_GUARD = 0, 1, 2, 3


class Outcome:
    """Rows plus metadata for one command, rendered in any output format."""

    def __init__(self, command: str, params: dict, rows: list[dict], flags: dict,
                 summary: dict | None = None, failed: bool = False):
        self.command = command
        self.params = params
        self.rows = rows
        self.flags = flags
        self.summary = summary or {}
        self.failed = failed


def exact_str(v) -> object:
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, int):
        return str(v)
    return v


def render_json(out: Outcome) -> str:
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": out.command,
        "params": {k: exact_str(v) for k, v in out.params.items()},
        "results": {
            "rows": [{k: exact_str(v) for k, v in row.items()} for row in out.rows],
            **{k: exact_str(v) for k, v in out.summary.items()},
        },
        "paper_flags": {k: exact_str(v) for k, v in out.flags.items()},
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def render_csv(out: Outcome) -> str:
    buf = io.StringIO()
    if out.rows:
        writer = csv.DictWriter(buf, fieldnames=list(out.rows[0]), lineterminator="\n")
        writer.writeheader()
        for row in out.rows:
            writer.writerow({k: _csv_cell(v) for k, v in row.items()})
    return buf.getvalue()


def _csv_cell(v) -> str:
    v = exact_str(v)
    if isinstance(v, bool):
        return "true" if v else "false"
    return "" if v is None else str(v)


def render_table(out: Outcome) -> str:
    lines = [f"# {out.command}"]
    for k, v in out.params.items():
        lines.append(f"# {k} = {_csv_cell(v)}")
    for k, v in {**out.summary, **out.flags}.items():
        lines.append(f"# {k} = {_csv_cell(v)}" + _decimal_hint(v))
    if out.rows:
        header = list(out.rows[0])
        cells = [[_csv_cell(row[h]) + _decimal_hint(row[h]) for h in header] for row in out.rows]
        widths = [max(len(h), *(len(c[i]) for c in cells)) for i, h in enumerate(header)]
        lines.append("  ".join(h.rjust(w) for h, w in zip(header, widths)))
        for c in cells:
            lines.append("  ".join(x.rjust(w) for x, w in zip(c, widths)))
    return "\n".join(lines) + "\n"


def _decimal_hint(v) -> str:
    # advisory only; never part of csv/json
    if isinstance(v, Fraction) and v.denominator != 1:
        return f" (~{float(v):.6g})"
    return ""


RENDERERS = {"json": render_json, "csv": render_csv, "table": render_table}


def cmd_decompose(args) -> Outcome:
    params = FrobeniusParams.of(args.n, args.d, args.p, args.e)
    source = canonical_class(params.ctx) if args.source is None else args.source
    params.ctx.check_class(source)
    if args.method == "enumerate":
        dec = enumerate_oracle(params, source, max_enum=args.max_enum)
    elif params.coprime:
        dec = decompose_roots(params, source)
    else:
        dec = decompose_roots_general(params, source)
    flags = {"experimental": dec.experimental}
    failed = False
    if params.coprime:
        lo, hi = pinch_values(params)
        flags["multiplicity_pinch_holds"] = pinch_holds(params, dec)
        flags["pinch_low"], flags["pinch_high"] = lo, hi
        failed = not flags["multiplicity_pinch_holds"]
    rows = [{"class": m, "multiplicity": v} for m, v in enumerate(dec.multiplicities)]
    return Outcome(
        "decompose",
        {"n": args.n, "d": args.d, "p": args.p, "e": args.e, "source": source, "method": args.method},
        rows,
        flags,
        {"total": dec.total, "rank": params.rank, "k_e": params.k_e},
        failed,
    )


def cmd_signature(args) -> Outcome:
    ctx = VeroneseContext(args.n, args.d)
    table = convergence_table(ctx, args.p, args.e_max)
    rows = [
        {
            "e": r.e,
            "rank": r.rank,
            "upper_N": r.upper_bound_N,
            "lower_N": r.lower_bound_N,
            "upper_normalized": r.upper_normalized,
            "lower_normalized": r.lower_normalized,
            "gap": r.gap,
        }
        for r in table
    ]
    prop, thm = closed_form_prop(ctx), closed_form_thm(ctx)
    return Outcome(
        "signature",
        {"n": args.n, "d": args.d, "p": args.p, "e_max": args.e_max},
        rows,
        {"closed_forms_agree": prop == thm},
        {"k": canonical_class(ctx), "closed_form_prop": prop, "closed_form_thm": thm},
    )


def cmd_verify_minors(args) -> Outcome:
    verdict = verify_minor_ideal(args.n, args.r, max_minors=args.max_minors)
    flags = {"minor_ideal_holds": verdict.holds}
    failed = not verdict.holds
    summary = {
        "rank_found": verdict.rank_found,
        "expected_rank": verdict.expected_rank,
        "minor_count": verdict.minor_count,
        "homogeneous": verdict.homogeneous,
    }
    rows = []
    if args.certificates:
        try:
            certs = certify_all(args.n, args.r)
        except CertificateError as exc:
            flags["certificates_verified"] = False
            summary["certificate_error"] = f"{exc} (alpha={exc.alpha})"
            failed = True
        else:
            verified = all(c.verify() for c in certs.values())
            flags["certificates_verified"] = verified
            failed = failed or not verified
            rows = [
                {"target": _mono_str(t), "terms": len(c.terms), "pivot_sign": c.pivot_sign, "verified": c.verify()}
                for t, c in certs.items()
            ]
            dump = {
                "schema_version": SCHEMA_VERSION,
                "n": str(args.n),
                "r": str(args.r),
                "certificates": [
                    {
                        "target": [str(a) for a in t],
                        "pivot_sign": str(c.pivot_sign),
                        "terms": [
                            {"coefficient": exact_str(coeff.coeff((0,) * args.n)), "alpha": [str(a) for a in sel.alpha]}
                            for coeff, sel in c.terms
                        ],
                    }
                    for t, c in certs.items()
                ],
            }
            with open(args.certificates, "w") as fh:
                json.dump(dump, fh, indent=2, sort_keys=True)
                fh.write("\n")
            summary["certificate_count"] = len(certs)
    return Outcome("verify-minors", {"n": args.n, "r": args.r}, rows, flags, summary, failed)


def _mono_str(m) -> str:
    return "*".join(f"x{i + 1}^{a}" for i, a in enumerate(m) if a) or "1"


def cmd_chain(args) -> Outcome:
    ctx = VeroneseContext(args.n, args.d)
    chain = surjection_chain(ctx)
    rows = [{"i": link.i, "e_i": link.e, "f_i": link.f, "ratio": link.ratio} for link in chain.links]
    return Outcome(
        "chain",
        {"n": args.n, "d": args.d},
        rows,
        {"closed_forms_agree": closed_form_prop(ctx) == closed_form_thm(ctx)},
        {"k": chain.k},
    )


def cmd_fsig(args) -> Outcome:
    ctx = VeroneseContext(args.n, args.d)
    rows = []
    for e in range(1, args.e_max + 1):
        params = FrobeniusParams(ctx, args.p, e)
        a_e = splitting_number(params)
        rows.append({"e": e, "a_e": a_e, "rank": params.rank, "estimate": Fraction(a_e, params.rank)})
    return Outcome(
        "fsig",
        {"n": args.n, "d": args.d, "p": args.p, "e_max": args.e_max},
        rows,
        {"closed_forms_agree": closed_form_prop(ctx) == closed_form_thm(ctx)},
        {"limit": Fraction(1, args.d)},
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dualfsig", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=sorted(RENDERERS), default="table")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", parents=[common], help="multiplicities of a Frobenius root module")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--source", type=int, default=None, help="source class (default: canonical class)")
    p.add_argument("--method", choices=["convolution", "enumerate"], default="convolution")
    p.add_argument("--max-enum", type=int, default=DEFAULT_MAX_ENUM)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("signature", parents=[common], help="dual F-signature bounds per e")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--e-max", type=int, required=True)
    p.set_defaults(func=cmd_signature)

    p = sub.add_parser("verify-minors", parents=[common], help="check I_r(M(n,r)) = (x)^r")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--max-minors", type=int, default=DEFAULT_MAX_MINORS)
    p.add_argument("--certificates", metavar="PATH", help="build, verify and dump minor certificates")
    p.set_defaults(func=cmd_verify_minors)

    p = sub.add_parser("chain", parents=[common], help="surjection chain (e_i, f_i)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("fsig", parents=[common], help="F-signature estimates a_e / p^(ne)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--e-max", type=int, required=True)
    p.set_defaults(func=cmd_fsig)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        outcome = args.func(args)
    except GuardError as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (PaperAmbiguityError, CertificateError) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except (ValueError, IndexError) as exc:
        print(f"bad input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = RENDERERS[args.format](outcome)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_FAILED if outcome.failed else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
