"""Command-line surface: moments, ratios, comparisons, limits, verification.

Subcommands
-----------
moments     closed moment determinants for one or both ensembles, with the
            exact enumeration value as an oracle column when n is small
ratios      closed ratio determinants (and the kernel-composition route)
            against the enumeration oracle
compare     scan the (k, l) grid and report where the two ensembles' moments
            agree (the square k, l <= n) and where they diverge
verify      run the invariant suites from acue_lab.verify
zeta-limit  scaled large-n limit determinants and the contour average

Complex inputs are parsed at the target working precision straight from the
decimal strings; no double-precision intermediate is involved.  Lists accept
either comma-separated entries in "a+bi" form ("2", "-1.5i", "0.3-0.2i") or
semicolon-separated entries where each entry may also be a "re,im" pair
("0.5,0.2;-0.3,0.1").

Exit codes: 0 success, 1 usage error, 2 mathematical precondition violated
(pole, coincidence, capacity), 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Any, Sequence

from .ensembles import acue_expect
from .errors import AcueLabError
from .formulas import (
    MomentSpec,
    acue_moment,
    acue_ratio,
    bos_compose,
    cue_moment,
    cue_ratio,
)
from .numeric import ComplexValue, DEFAULT_PRECISION_BITS
from .verify import (
    VerifyParams,
    agreement_scan,
    available_suites,
    hybrid_err,
    moment_observable,
    ratio_observable,
    run_suite,
)
from .zetalimits import (
    DEFAULT_QUADRATURE_POINTS,
    ScaledShifts,
    averaged_acue_limit,
    ratio_limit_det,
)

__all__ = ["main", "parse_complex", "parse_complex_list"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MATH = 2
EXIT_VERIFY = 3

DEFAULT_SEED = 20260819
DEFAULT_ORACLE_CAP = 6

CSV_COLUMNS = [
    "formula_id",
    "definition",
    "n",
    "k",
    "l",
    "j",
    "value_re",
    "value_im",
    "oracle_re",
    "oracle_im",
    "rel_err",
]


class UsageError(Exception):
    """Bad flags or unparseable values; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    """argparse that raises instead of calling sys.exit(2) on bad flags."""

    def error(self, message: str) -> None:
        raise UsageError(message)


# ---------------------------------------------------------------------------
# Complex parsing at full precision


def _make_complex(re_str: str, im_str: str, bits: int, original: str) -> ComplexValue:
    try:
        return ComplexValue.make(re_str.strip() or "0", im_str.strip() or "0", bits)
    except (ValueError, TypeError):
        raise UsageError("cannot parse complex number {!r}".format(original))


def parse_complex(text: str, precision_bits: int) -> ComplexValue:
    """One complex number: 'a+bi', 'a', 'bi', 'i', or a 're,im' pair.

    The decimal parts are handed to the working-precision constructor as
    strings, so inputs keep all their digits.
    """
    s = text.strip()
    if not s:
        raise UsageError("empty complex number")
    if "," in s:
        parts = s.split(",")
        if len(parts) != 2:
            raise UsageError("expected 're,im' with one comma, got {!r}".format(text))
        return _make_complex(parts[0], parts[1], precision_bits, text)
    if s[-1] in "ij":
        body = s[:-1].strip()
        # split off the trailing imaginary term at the last sign that is
        # not an exponent sign and not the leading sign of the real part
        for pos in range(len(body) - 1, 0, -1):
            if body[pos] in "+-" and body[pos - 1] not in "eE":
                re_part = body[:pos]
                im_part = body[pos:].strip()
                if im_part in ("+", "-"):
                    im_part += "1"
                return _make_complex(re_part, im_part, precision_bits, text)
        if body in ("", "+"):
            body = "1"
        elif body == "-":
            body = "-1"
        return _make_complex("0", body, precision_bits, text)
    return _make_complex(s, "0", precision_bits, text)


def parse_complex_list(text: str, precision_bits: int) -> tuple[ComplexValue, ...]:
    """Semicolon-separated entries (each 'a+bi' or 're,im'), or
    comma-separated 'a+bi' entries when no semicolon is present."""
    s = text.strip()
    if not s:
        raise UsageError("empty list of complex numbers")
    sep = ";" if ";" in s else ","
    items = [item.strip() for item in s.split(sep)]
    items = [item for item in items if item]
    if not items:
        raise UsageError("empty list of complex numbers")
    return tuple(parse_complex(item, precision_bits) for item in items)


# ---------------------------------------------------------------------------
# Output rows and serialization


def _result_row(
    formula_id: str,
    definition: str,
    value: ComplexValue | None = None,
    oracle: ComplexValue | None = None,
    n: int | None = None,
    k: int | None = None,
    l: int | None = None,
    j: int | None = None,
) -> dict:
    rel_err = None
    if value is not None and oracle is not None:
        rel_err = hybrid_err(value, oracle)
    return {
        "formula_id": formula_id,
        "definition": definition,
        "n": n,
        "k": k,
        "l": l,
        "j": j,
        "value": value,
        "oracle": oracle,
        "rel_err": rel_err,
    }


def _row_to_json(row: dict) -> dict:
    out = dict(row)
    for key in ("value", "oracle"):
        v = out.get(key)
        out[key] = v.to_json_dict() if isinstance(v, ComplexValue) else None
    return out


def _row_to_csv(row: dict) -> dict:
    out = {col: "" for col in CSV_COLUMNS}
    for col in ("formula_id", "definition", "n", "k", "l", "j"):
        if row.get(col) is not None:
            out[col] = row[col]
    value = row.get("value")
    if isinstance(value, ComplexValue):
        d = value.to_json_dict()
        out["value_re"], out["value_im"] = d["re"], d["im"]
    oracle = row.get("oracle")
    if isinstance(oracle, ComplexValue):
        d = oracle.to_json_dict()
        out["oracle_re"], out["oracle_im"] = d["re"], d["im"]
    if row.get("rel_err") is not None:
        out["rel_err"] = repr(row["rel_err"])
    return out


def _fmt_value(value: ComplexValue | None) -> str:
    if value is None:
        return "-"
    z = value.to_complex()
    return "{:.12g}{}{:.12g}i".format(z.real, "+" if z.imag >= 0 else "-", abs(z.imag))


def _emit_rows(rows: list[dict], fmt: str, header: dict) -> None:
    if fmt == "json":
        payload = dict(header)
        payload["results"] = [_row_to_json(row) for row in rows]
        print(json.dumps(payload, indent=2))
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        for row in rows:
            writer.writerow(_row_to_csv(row))
        sys.stdout.write(buf.getvalue())
    else:
        for row in rows:
            cells = [
                "{:22s}".format(str(row["formula_id"])),
                "value={}".format(_fmt_value(row.get("value"))),
            ]
            if row.get("oracle") is not None:
                cells.append("oracle={}".format(_fmt_value(row.get("oracle"))))
            if row.get("rel_err") is not None:
                cells.append("rel_err={:.3e}".format(row["rel_err"]))
            print("  ".join(cells))


# ---------------------------------------------------------------------------
# Subcommand implementations


def _resolve_bits(args: argparse.Namespace) -> int:
    if args.precision_bits is not None:
        return args.precision_bits
    env = os.environ.get("ACUE_LAB_PRECISION_BITS")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise UsageError(
                "ACUE_LAB_PRECISION_BITS must be an integer, got {!r}".format(env)
            )
    return DEFAULT_PRECISION_BITS


def _header(args: argparse.Namespace, bits: int, **extra: Any) -> dict:
    head = {"command": args.command, "precision_bits": bits}
    head.update(extra)
    return head


def cmd_moments(args: argparse.Namespace) -> int:
    bits = _resolve_bits(args)
    shifts = parse_complex_list(args.shifts, bits)
    spec = MomentSpec(args.n, args.k, args.l, shifts, precision_bits=bits)

    oracle = None
    if args.ensemble in ("acue", "both") and args.n <= args.enumeration_cap:
        observable = moment_observable(spec.shifts, args.k)
        oracle = acue_expect(args.n, observable, bits, cap=args.enumeration_cap)

    rows = []
    acue_value = cue_value = None
    if args.ensemble in ("acue", "both"):
        acue_value = acue_moment(spec)
        rows.append(
            _result_row(
                "acue_moment",
                "moment determinant over the finite root ensemble",
                acue_value,
                oracle,
                n=args.n,
                k=args.k,
                l=args.l,
            )
        )
    if args.ensemble in ("cue", "both"):
        cue_value = cue_moment(spec)
        rows.append(
            _result_row(
                "cue_moment",
                "moment determinant over the unitary group (rectangular Schur value)",
                cue_value,
                None,
                n=args.n,
                k=args.k,
                l=args.l,
            )
        )
    if acue_value is not None and cue_value is not None:
        rows.append(
            _result_row(
                "difference",
                "acue_moment minus cue_moment",
                acue_value - cue_value,
                None,
                n=args.n,
                k=args.k,
                l=args.l,
            )
        )
    _emit_rows(
        rows,
        args.format,
        _header(
            args,
            bits,
            parameters={
                "ensemble": args.ensemble,
                "n": args.n,
                "k": args.k,
                "l": args.l,
                "shifts": [s.to_json_dict() for s in shifts],
            },
        ),
    )
    return EXIT_OK


def cmd_ratios(args: argparse.Namespace) -> int:
    bits = _resolve_bits(args)
    vs = parse_complex_list(args.v, bits)
    us = parse_complex_list(args.u, bits)
    if args.j is not None and (len(vs) != args.j or len(us) != args.j):
        raise UsageError(
            "-j {} does not match the shift lists (|v|={}, |u|={})".format(
                args.j, len(vs), len(us)
            )
        )

    oracle = None
    if args.ensemble in ("acue", "both") and args.n <= args.enumeration_cap:
        oracle = acue_expect(
            args.n, ratio_observable(vs, us), bits, cap=args.enumeration_cap
        )

    rows = []
    if args.ensemble in ("acue", "both"):
        value = acue_ratio(args.n, vs, us, precision_bits=bits)
        rows.append(
            _result_row(
                "acue_ratio",
                "ratio determinant over the finite root ensemble",
                value,
                oracle,
                n=args.n,
                j=len(vs),
            )
        )
        composed = bos_compose(args.n, vs, us, precision_bits=bits)
        rows.append(
            _result_row(
                "bos_compose",
                "same ratio assembled from the one-ratio kernel entrywise",
                composed,
                oracle,
                n=args.n,
                j=len(vs),
            )
        )
    if args.ensemble in ("cue", "both"):
        value = cue_ratio(args.n, vs, us, precision_bits=bits)
        rows.append(
            _result_row(
                "cue_ratio",
                "ratio determinant over the unitary group",
                value,
                None,
                n=args.n,
                j=len(vs),
            )
        )
    _emit_rows(
        rows,
        args.format,
        _header(
            args,
            bits,
            parameters={
                "ensemble": args.ensemble,
                "n": args.n,
                "v": [s.to_json_dict() for s in vs],
                "u": [s.to_json_dict() for s in us],
            },
        ),
    )
    return EXIT_OK


def cmd_compare(args: argparse.Namespace) -> int:
    if not args.tao_scan:
        raise UsageError("compare requires --tao-scan (grid scan is the only mode)")
    bits = _resolve_bits(args)
    scan = agreement_scan(
        args.n, args.kmax, args.lmax, args.trials, args.seed, precision_bits=bits
    )
    boundary_ok = all(row["agree"] == row["in_agreement_regime"] for row in scan)

    if args.format == "json":
        payload = _header(
            args,
            bits,
            parameters={
                "n": args.n,
                "kmax": args.kmax,
                "lmax": args.lmax,
                "trials": args.trials,
                "seed": args.seed,
            },
            boundary_matches_square=boundary_ok,
        )
        payload["results"] = scan
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        rows = [
            _result_row(
                "moment-agreement",
                "max relative difference of the two moment determinants",
                None,
                None,
                n=args.n,
                k=row["k"],
                l=row["l"],
            )
            for row in scan
        ]
        for out_row, row in zip(rows, scan):
            out_row["rel_err"] = row["max_rel_diff"]
        _emit_rows(rows, "csv", {})
    else:
        print("agreement grid for n={} (trials={}):".format(args.n, args.trials))
        for row in scan:
            mark = "agree " if row["agree"] else "differ"
            regime = "expected-agree" if row["in_agreement_regime"] else "expected-differ"
            print(
                "  k={:2d} l={:2d}  {}  max_rel_diff={:.3e}  [{}]".format(
                    row["k"], row["l"], mark, row["max_rel_diff"], regime
                )
            )
        print("boundary matches the square k,l <= n: {}".format(boundary_ok))
    return EXIT_OK if boundary_ok else EXIT_VERIFY


def cmd_verify(args: argparse.Namespace) -> int:
    bits = _resolve_bits(args)
    known = available_suites()
    if args.suite == "all":
        chosen = known
    else:
        chosen = [name.strip() for name in args.suite.split(",") if name.strip()]
        unknown = [name for name in chosen if name not in known]
        if unknown:
            raise UsageError(
                "unknown suite(s) {}; available: {}".format(
                    ", ".join(unknown), ", ".join(known)
                )
            )
    params = VerifyParams(
        n_max=args.n,
        trials=args.trials,
        precision_bits=bits,
        seed=args.seed,
        cap=args.enumeration_cap,
    )
    results = []
    for name in chosen:
        result = run_suite(name, params)
        results.append(result)
        print(
            "suite {:24s} {}  checks={:6d}  max_err={:.3e}".format(
                result.name,
                "PASS" if result.passed else "FAIL",
                result.checks,
                result.max_err,
            ),
            file=sys.stderr,
        )
    all_passed = all(r.passed for r in results)

    if args.format == "json":
        payload = _header(
            args,
            bits,
            parameters={
                "suite": args.suite,
                "n_max": args.n,
                "trials": args.trials,
                "seed": args.seed,
            },
            all_passed=all_passed,
        )
        payload["suites"] = [r.as_dict() for r in results]
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        rows = []
        for r in results:
            row = _result_row("suite:" + r.name, "invariant suite")
            row["rel_err"] = r.max_err
            rows.append(row)
        _emit_rows(rows, "csv", {})
    else:
        for r in results:
            print(
                "{:24s} {}  checks={:6d}  max_err={:.3e}  {:6.2f}s".format(
                    r.name,
                    "PASS" if r.passed else "FAIL",
                    r.checks,
                    r.max_err,
                    r.elapsed_seconds,
                )
            )
            for failure in r.failures:
                print("    failure: {}".format(failure))
    return EXIT_OK if all_passed else EXIT_VERIFY


def cmd_zeta_limit(args: argparse.Namespace) -> int:
    bits = _resolve_bits(args)
    mus = parse_complex_list(args.mus, bits)
    nus = parse_complex_list(args.nus, bits)
    shifts = ScaledShifts(mus, nus, precision_bits=bits)

    rows = []
    det_value = ratio_limit_det(shifts, kernel=args.kernel)
    rows.append(
        _result_row(
            "ratio_limit_det",
            "scaled-shift limit of the ratio determinant ({} kernel)".format(
                args.kernel
            ),
            det_value,
            None,
            j=shifts.j,
        )
    )
    if args.avg:
        avg_value = averaged_acue_limit(shifts, quadrature_points=args.quadrature_points)
        rows.append(
            _result_row(
                "averaged_acue_limit",
                "contour average of the limit determinant over a global rotation",
                avg_value,
                None,
                j=shifts.j,
            )
        )
    _emit_rows(
        rows,
        args.format,
        _header(
            args,
            bits,
            parameters={
                "kernel": args.kernel,
                "mus": [s.to_json_dict() for s in mus],
                "nus": [s.to_json_dict() for s in nus],
                "quadrature_points": args.quadrature_points if args.avg else None,
            },
        ),
    )
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser assembly


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--precision-bits",
        type=int,
        default=None,
        help="working precision in bits (default: ACUE_LAB_PRECISION_BITS or {})".format(
            DEFAULT_PRECISION_BITS
        ),
    )
    parser.add_argument(
        "--format",
        choices=["json", "csv", "table"],
        default="json",
        help="output format (default json)",
    )
    parser.add_argument(
        "--enumeration-cap",
        type=int,
        default=DEFAULT_ORACLE_CAP,
        help="largest n for which the exact enumeration oracle is computed",
    )
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="acue-lab",
        description="Moments and ratios of characteristic polynomials over the "
        "finite 2n-point root ensemble and the unitary group, with exact "
        "enumeration oracles and invariant verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    moments = sub.add_parser(
        "moments", help="closed moment determinants with enumeration oracle"
    )
    moments.add_argument("-n", type=int, required=True, help="ensemble size")
    moments.add_argument("-k", type=int, required=True, help="inverse determinant power")
    moments.add_argument(
        "-l", type=int, required=True, help="extra characteristic polynomial count"
    )
    moments.add_argument(
        "--shifts", required=True, help="k+l complex shifts (list syntax in module help)"
    )
    moments.add_argument(
        "--ensemble", choices=["acue", "cue", "both"], default="both"
    )
    _add_common(moments)
    moments.set_defaults(func=cmd_moments)

    ratios = sub.add_parser(
        "ratios", help="closed ratio determinants with enumeration oracle"
    )
    ratios.add_argument("-n", type=int, required=True, help="ensemble size")
    ratios.add_argument("-j", type=int, default=None, help="expected list length")
    ratios.add_argument("--v", required=True, help="numerator shifts")
    ratios.add_argument("--u", required=True, help="denominator shifts")
    ratios.add_argument(
        "--ensemble", choices=["acue", "cue", "both"], default="acue"
    )
    _add_common(ratios)
    ratios.set_defaults(func=cmd_ratios)

    compare = sub.add_parser(
        "compare", help="scan the (k, l) grid for moment agreement between ensembles"
    )
    compare.add_argument("-n", type=int, required=True, help="ensemble size")
    compare.add_argument("--tao-scan", action="store_true", help="run the grid scan")
    compare.add_argument("--kmax", type=int, default=4)
    compare.add_argument("--lmax", type=int, default=4)
    compare.add_argument("--trials", type=int, default=5)
    _add_common(compare)
    compare.set_defaults(func=cmd_compare)

    verify = sub.add_parser("verify", help="run invariant verification suites")
    verify.add_argument(
        "--suite",
        default="all",
        help="comma-separated suite names or 'all' (available: {})".format(
            ", ".join(available_suites())
        ),
    )
    verify.add_argument(
        "-n", type=int, default=None, help="cap the ensemble size used by the suites"
    )
    verify.add_argument(
        "--trials", type=int, default=None, help="override per-case trial counts"
    )
    _add_common(verify)
    verify.set_defaults(func=cmd_verify)

    zeta = sub.add_parser(
        "zeta-limit", help="scaled large-n limits of the ratio determinants"
    )
    zeta.add_argument("--mus", required=True, help="denominator scaled shifts")
    zeta.add_argument("--nus", required=True, help="numerator scaled shifts")
    zeta.add_argument("--kernel", choices=["cue", "acue"], default="acue")
    zeta.add_argument(
        "--avg", action="store_true", help="also compute the contour-averaged value"
    )
    zeta.add_argument(
        "--quadrature-points", type=int, default=DEFAULT_QUADRATURE_POINTS
    )
    _add_common(zeta)
    zeta.set_defaults(func=cmd_zeta_limit)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print("usage error: {}".format(exc), file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print("usage error: {}".format(exc), file=sys.stderr)
        return EXIT_USAGE
    except AcueLabError as exc:
        print("error: {}".format(exc), file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
