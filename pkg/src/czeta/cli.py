"""Command-line front end.

Exit codes: 0 on success, 1 on usage or parameter errors, 2 when an identity
verification fails.  Exact commands accept rationals only as "p/q" or integer
strings (decimals would silently round); `find-zeros` takes floats.  Output
goes to stdout as text (default), json, or csv; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import asdict, dataclass, field

from .classify import classify
from .errors import ParameterError, VerificationError
from .exact import det_exact, format_rational, parse_rational
from .hankel import (
    bernoulli_hankel_det,
    build_coulomb_hankel,
    build_rayleigh_hankel,
    det_coulomb_closed,
    det_coulomb_via_moments,
    det_rayleigh_closed,
    det_rayleigh_dj,
    det_rayleigh_ell2,
    det_rayleigh_ell3,
    genocchi_hankel_det,
)
from .numeric import Rect, default_search_region, find_complex_zeros
from .verify import run_verification
from .zeta import CoulombParams, zeta_table


@dataclass
class OutputRecord:
    """Machine-readable result envelope: echoed command, parameters, payload."""

    command: str
    parameters: dict = field(default_factory=dict)
    results: dict = field(default_factory=dict)
    verification: dict | None = None

    def to_dict(self) -> dict:
        out = {"command": self.command, "parameters": self.parameters, "results": self.results}
        if self.verification is not None:
            out["verification"] = self.verification
        return out


def _flatten(obj, prefix=""):
    """Depth-first (key, scalar) pairs with dotted paths; shared by csv and text."""
    if isinstance(obj, dict):
        for key, value in obj.items():
            yield from _flatten(value, f"{prefix}.{key}" if prefix else str(key))
    elif isinstance(obj, (list, tuple)):
        for i, value in enumerate(obj):
            yield from _flatten(value, f"{prefix}.{i}")
    else:
        yield prefix, obj


def _render(record: OutputRecord, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(record.to_dict(), indent=2)
    rows = list(_flatten(record.to_dict()))
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["field", "value"])
        for key, value in rows:
            writer.writerow([key, json.dumps(value) if isinstance(value, bool) else value])
        return buf.getvalue().rstrip("\n")
    width = max((len(k) for k, _ in rows), default=0)
    return "\n".join(f"{k:<{width}}  {v}" for k, v in rows)


class _Parser(argparse.ArgumentParser):
    """argparse variant that exits 1 on usage errors and accepts -p/q values."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")

    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _complex_pair(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}


def _cmd_zeta(args) -> tuple[OutputRecord, int]:
    params = CoulombParams(parse_rational(args.L), parse_rational(args.eta))
    if args.kmax < 2:
        raise ParameterError(f"--kmax must be >= 2, got {args.kmax}")
    table = zeta_table(params, args.kmax)
    record = OutputRecord(
        command="zeta",
        parameters={"L": str(params.L), "eta": str(params.eta), "kmax": args.kmax},
        results={"zeta": {str(k): format_rational(table.value(k)) for k in range(2, args.kmax + 1)}},
    )
    return record, 0


def _cmd_hankel_det(args) -> tuple[OutputRecord, int]:
    params = CoulombParams(parse_rational(args.L), parse_rational(args.eta))
    if args.n < 1:
        raise ParameterError(f"--n must be >= 1, got {args.n}")
    direct = det_exact(build_coulomb_hankel(params, args.n).matrix)
    record = OutputRecord(
        command="hankel-det",
        parameters={"L": str(params.L), "eta": str(params.eta), "n": args.n},
        results={"det": format_rational(direct)},
    )
    code = 0
    if args.verify:
        closed = det_coulomb_closed(params, args.n)
        moments = det_coulomb_via_moments(params, args.n)
        record.results["closed"] = format_rational(closed)
        record.results["moments"] = format_rational(moments)
        equal = direct == closed == moments
        record.verification = {"routes_equal": equal}
        if not equal:
            code = 2
    return record, code


def _cmd_rayleigh_det(args) -> tuple[OutputRecord, int]:
    nu = parse_rational(args.nu)
    if args.n < 1:
        raise ParameterError(f"--n must be >= 1, got {args.n}")
    if args.ell < 0:
        raise ParameterError(f"--ell must be >= 0, got {args.ell}")
    if args.method == "direct":
        value = det_exact(build_rayleigh_hankel(nu, args.ell, args.n).matrix)
    elif args.method == "dj":
        value = det_rayleigh_dj(nu, args.ell, args.n)
    else:  # closed
        if args.ell in (0, 1):
            value = det_rayleigh_closed(nu, args.ell, args.n)
        elif args.ell == 2:
            value = det_rayleigh_ell2(nu, args.n)
        elif args.ell == 3:
            value = det_rayleigh_ell3(nu, args.n)
        else:
            raise ParameterError(
                f"no closed form for ell = {args.ell}; use --method direct or dj"
            )
    record = OutputRecord(
        command="rayleigh-det",
        parameters={"nu": str(nu), "ell": args.ell, "n": args.n, "method": args.method},
        results={"det": format_rational(value)},
    )
    return record, 0


def _cmd_factorial_det(args, name, fn) -> tuple[OutputRecord, int]:
    if args.n < 1:
        raise ParameterError(f"--n must be >= 1, got {args.n}")
    value = fn(args.ell, args.n)  # VerificationError -> exit 2 in main()
    record = OutputRecord(
        command=name,
        parameters={"ell": args.ell, "n": args.n},
        results={"det": format_rational(value)},
        verification={"closed_form_equal": True},
    )
    return record, 0


def _cmd_classify(args) -> tuple[OutputRecord, int]:
    params = CoulombParams(parse_rational(args.L), parse_rational(args.eta))
    if args.nmax == "auto":
        nmax = "auto"
    else:
        try:
            nmax = int(args.nmax)
        except ValueError:
            raise ParameterError(f"--nmax must be an integer or 'auto', got {args.nmax!r}")
    result = classify(params, nmax)
    record = OutputRecord(
        command="classify",
        parameters={"L": str(params.L), "eta": str(params.eta), "nmax": args.nmax},
        results={
            "pair_count": result.pair_count,
            "all_real": result.all_real,
            "sign_sequence": list(result.sign_sequence),
        },
    )
    return record, 0


def _cmd_find_zeros(args) -> tuple[OutputRecord, int]:
    if args.tol <= 0:
        raise ParameterError(f"--tol must be positive, got {args.tol}")
    bounds = (args.re_min, args.re_max, args.im_min, args.im_max)
    if any(b is not None for b in bounds):
        if any(b is None for b in bounds):
            raise ParameterError("pass all four of --re-min/--re-max/--im-min/--im-max or none")
        search = Rect(*bounds)
    else:
        search = None
    report = find_complex_zeros(args.L, args.eta, search=search, tol=args.tol)
    record = OutputRecord(
        command="find-zeros",
        parameters={"L": args.L, "eta": args.eta, "tol": args.tol},
        results={
            "region": asdict(report.region),
            "zeros": [_complex_pair(z) for z in report.zeros],
            "residuals": list(report.residuals),
            "counts": dict(report.counts),
            "unresolved_cells": len(report.unresolved),
        },
    )
    return record, 0


def _cmd_verify_all(args) -> tuple[OutputRecord, int]:
    results = run_verification(quick=args.quick)
    families = [
        {"name": r.name, "passed": r.passed, "cases": r.cases, "detail": r.detail}
        for r in results
    ]
    all_passed = all(r.passed for r in results)
    record = OutputRecord(
        command="verify-all",
        parameters={"quick": args.quick},
        results={"families": families},
        verification={"all_passed": all_passed},
    )
    return record, 0 if all_passed else 2


def _render_verify_text(record: OutputRecord) -> str:
    lines = []
    for fam in record.results["families"]:
        status = "PASS" if fam["passed"] else "FAIL"
        lines.append(f"{status} {fam['name']} ({fam['cases']} cases): {fam['detail']}")
    total = "PASS" if record.verification["all_passed"] else "FAIL"
    lines.append(f"{total} overall")
    return "\n".join(lines)


def build_parser() -> _Parser:
    parser = _Parser(prog="czeta", description=__doc__)
    parser.add_argument(
        "--format", choices=("text", "json", "csv"), default="text", help="output format"
    )
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def add_parser(name, **kwargs):
        p = sub.add_parser(name, **kwargs)
        # accepted after the subcommand too; SUPPRESS keeps a pre-subcommand
        # --format from being clobbered by the subparser default
        p.add_argument(
            "--format", choices=("text", "json", "csv"), default=argparse.SUPPRESS
        )
        return p

    p = add_parser("zeta", help="spectral zeta table zeta_L(2..kmax)")
    p.add_argument("--L", required=True, help="orbital parameter, rational p/q")
    p.add_argument("--eta", required=True, help="Coulomb strength, rational p/q")
    p.add_argument("--kmax", type=int, required=True)

    p = add_parser("hankel-det", help="determinant of the zeta Hankel matrix")
    p.add_argument("--L", required=True)
    p.add_argument("--eta", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="also evaluate closed and moment routes")

    p = add_parser("rayleigh-det", help="determinant of the Rayleigh Hankel matrix")
    p.add_argument("--nu", required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("direct", "closed", "dj"), default="direct")

    for name in ("bernoulli-det", "genocchi-det"):
        p = add_parser(name, help=f"factorially normalized {name.split('-')[0]} Hankel determinant")
        p.add_argument("--ell", type=int, choices=(0, 1), required=True)
        p.add_argument("--n", type=int, required=True)

    p = add_parser("classify", help="count complex-conjugate zero pairs algebraically")
    p.add_argument("--L", required=True)
    p.add_argument("--eta", required=True)
    p.add_argument("--nmax", default="auto", help="largest index of the sign sequence, or 'auto'")

    p = add_parser("find-zeros", help="locate zeros numerically in a rectangle")
    p.add_argument("--L", type=float, required=True)
    p.add_argument("--eta", type=float, required=True)
    p.add_argument("--re-min", type=float, default=None)
    p.add_argument("--re-max", type=float, default=None)
    p.add_argument("--im-min", type=float, default=None)
    p.add_argument("--im-max", type=float, default=None)
    p.add_argument("--tol", type=float, default=1e-12)

    p = add_parser("verify-all", help="run the pinned identity grids, report per family")
    p.add_argument("--quick", action="store_true", help="trimmed grid, completes in seconds")

    return parser


_HANDLERS = {
    "zeta": _cmd_zeta,
    "hankel-det": _cmd_hankel_det,
    "rayleigh-det": _cmd_rayleigh_det,
    "classify": _cmd_classify,
    "find-zeros": _cmd_find_zeros,
    "verify-all": _cmd_verify_all,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.subcommand == "bernoulli-det":
            record, code = _cmd_factorial_det(args, "bernoulli-det", bernoulli_hankel_det)
        elif args.subcommand == "genocchi-det":
            record, code = _cmd_factorial_det(args, "genocchi-det", genocchi_hankel_det)
        else:
            record, code = _HANDLERS[args.subcommand](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ParameterError as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return 1
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        # numeric failure (contour through a zero, series out of range)
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1

    if args.subcommand == "verify-all" and args.format == "text":
        print(_render_verify_text(record))
    else:
        print(_render(record, args.format))
    return code


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
