"""Command-line front end.

Exit codes: 0 when every verdict is PASS (or the command has no verdict),
1 when at least one FAIL or INDETERMINATE was produced, 2 on usage or
internal errors. Big integers are always serialized as decimal strings.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from . import __version__
from .cache import SpectrumCache
from .classes import (
    DEFAULT_SPECTRUM_CAP,
    GroupKind,
    Spectrum,
    moved_class_sizes,
    phi_set,
    psi_set,
    spectrum,
)
from .divgraph import CONVENTIONS, VERTICES, height
from .errors import DomainError
from .primes import bound_report, factorial_ratio, omega_set
from .verify import (
    CSV_FIELDS,
    DEFAULT_SUPPORT_CAP,
    PASS,
    certificate_csv_row,
    check_case,
    check_omega_lemma,
    hz_table,
    scan_range,
)


def dump_json(obj, compact: bool = True) -> str:
    if compact:
        return json.dumps(obj, sort_keys=True, separators=(",", ":"))
    return json.dumps(obj, sort_keys=True, indent=2)


def _parse_kinds(text: str) -> tuple[GroupKind, ...]:
    kinds = tuple(GroupKind.parse(part) for part in text.split(",") if part.strip())
    if not kinds:
        raise DomainError("no group kinds given")
    return kinds


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="class-spectrum",
        description="Exact class-size spectra, divisibility-chain heights, and verification scans",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="class-size families of Sym_n / Alt_n")
    sp.add_argument("--kind", required=True, type=GroupKind.parse)
    sp.add_argument("--n", required=True, type=int)
    sp.add_argument("--family", choices=["full", "moved", "phi", "psi"], default="full")
    sp.add_argument("--t", type=int, default=None, help="required for phi and psi")
    sp.add_argument("--format", choices=["json", "csv", "text"], default="text")
    sp.add_argument("--cap", type=int, default=DEFAULT_SPECTRUM_CAP, help="full-spectrum degree cap")
    sp.add_argument("--cache-dir", type=Path, default=None)
    sp.add_argument("--no-cache", action="store_true")

    hp = sub.add_parser("height", help="divisibility-chain height of integers from a file")
    hp.add_argument("--input", required=True, type=Path, help="one decimal integer per line")
    hp.add_argument("--convention", choices=list(CONVENTIONS), default=VERTICES)

    op = sub.add_parser("omega", help="half-interval primes and the 2^|omega| vs n!/p! check")
    op.add_argument("--n", required=True, type=int)
    op.add_argument("--format", choices=["json", "text"], default="text")

    zp = sub.add_parser("hz-table", help="summed chain heights of fixed-point-free class sizes")
    zp.add_argument("--max-m", required=True, type=int)
    zp.add_argument("--kinds", type=_parse_kinds, default=(GroupKind.SYM, GroupKind.ALT))
    zp.add_argument("--format", choices=["json", "csv", "text"], default="text")

    vp = sub.add_parser("verify", help="certificate-emitting case checks")
    vsub = vp.add_subparsers(dest="verify_command", required=True)

    vc = vsub.add_parser("case", help="single-degree certificate")
    vc.add_argument("--n", required=True, type=int)
    vc.add_argument("--kind", required=True, type=GroupKind.parse)
    vc.add_argument("--support-cap", type=int, default=DEFAULT_SUPPORT_CAP)
    vc.add_argument("--format", choices=["json", "text"], default="text")

    vs = vsub.add_parser("scan", help="certificates for a degree range")
    vs.add_argument("--from", dest="start", required=True, type=int)
    vs.add_argument("--to", dest="stop", required=True, type=int)
    vs.add_argument("--kinds", type=_parse_kinds, default=(GroupKind.SYM, GroupKind.ALT))
    vs.add_argument("--jobs", type=int, default=1)
    vs.add_argument("--out", type=Path, default=None, help="directory for summary.json / certificates.csv")
    vs.add_argument("--support-cap", type=int, default=DEFAULT_SUPPORT_CAP)

    bp = sub.add_parser("bounds", help="pi(x) envelope and prime-gap diagnostics")
    bp.add_argument("--x", required=True, type=int)
    bp.add_argument("--format", choices=["json", "text"], default="text")

    return parser


def _compute_family(args) -> Spectrum:
    if args.family in ("phi", "psi") and args.t is None:
        raise DomainError(f"--family {args.family} requires --t")
    if args.family == "full":
        return spectrum(args.kind, args.n, cap=args.cap)
    if args.family == "moved":
        return moved_class_sizes(args.kind, args.n)
    if args.family == "phi":
        return phi_set(args.kind, args.n, args.t)
    return psi_set(args.kind, args.n, args.t)


def _cmd_spectrum(args) -> int:
    cache = SpectrumCache(root=args.cache_dir, enabled=not args.no_cache)
    key = {
        "op": "spectrum",
        "family": args.family,
        "kind": args.kind.value,
        "n": args.n,
        "t": args.t,
        "cap": args.cap if args.family == "full" else None,
        "version": __version__,
    }
    payload = cache.get(key)
    if payload is None:
        family = _compute_family(args)
        payload = {"values": [str(v) for v in family.values]}
        cache.put(key, payload)
    values = payload["values"]
    if args.format == "json":
        print(dump_json({"values": values}))
    elif args.format == "csv":
        print("value")
        for v in values:
            print(v)
    else:
        for v in values:
            print(v)
    return 0


def _cmd_height(args) -> int:
    values = []
    for line in args.input.read_text().splitlines():
        line = line.strip()
        if line:
            values.append(int(line))
    result = height(values, args.convention)
    print(result.height)
    print("witness:", " ".join(str(v) for v in result.witness))
    return 0


def _cmd_omega(args) -> int:
    data = omega_set(args.n)
    check = check_omega_lemma(args.n)
    verdict = PASS if check.holds else "FAIL"
    if args.format == "json":
        print(
            dump_json(
                {
                    "n": data.n,
                    "omega": [str(t) for t in data.omega],
                    "p": data.p,
                    "count": data.count,
                    "ratio_bits": check.ratio_bits,
                    "pow2_bits": check.pow2_bits,
                    "verdict": verdict,
                }
            )
        )
    else:
        print(f"n: {data.n}")
        print(f"p: {data.p}")
        print(f"count: {data.count}")
        print("omega:", " ".join(str(t) for t in data.omega))
        ratio = factorial_ratio(data.n, data.p)
        shown = str(ratio) if check.ratio_bits <= 64 else f"~2^{check.ratio_bits - 1}"
        print(f"comparison: 2^{data.count} ({check.pow2_bits} bits) vs n!/p! = {shown} ({check.ratio_bits} bits)")
        print(f"verdict: {verdict}")
    return 0 if check.holds else 1


def _cmd_hz_table(args) -> int:
    rows = hz_table(args.max_m, kinds=args.kinds)
    combos = [(kind, conv) for kind in args.kinds for conv in CONVENTIONS]
    headers = ["m", "bound"] + [f"{k.value}/{c}" for k, c in combos] + ["exceeds"]
    table_rows = []
    for row in rows:
        exceeds = [
            f"{k.value}/{c}"
            for (k, c) in combos
            if row.reference_bound is not None and row.computed[(k, c)] > row.reference_bound
        ]
        table_rows.append(
            [str(row.m), "-" if row.reference_bound is None else str(row.reference_bound)]
            + [str(row.computed[(k, c)]) for k, c in combos]
            + [",".join(exceeds) or "-"]
        )
    if args.format == "json":
        print(
            dump_json(
                [
                    {
                        "m": row.m,
                        "reference_bound": row.reference_bound,
                        "computed": {f"{k.value}/{c}": v for (k, c), v in row.computed.items()},
                    }
                    for row in rows
                ]
            )
        )
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(headers)
        writer.writerows(table_rows)
    else:
        widths = [max(len(h), max(len(r[i]) for r in table_rows)) for i, h in enumerate(headers)]
        print("  ".join(h.ljust(w) for h, w in zip(headers, widths)))
        for r in table_rows:
            print("  ".join(c.ljust(w) for c, w in zip(r, widths)))
    return 0


def _cmd_verify_case(args) -> int:
    cert = check_case(args.n, args.kind, support_cap=args.support_cap)
    if args.format == "json":
        print(dump_json(cert.to_json_dict()))
    else:
        d = cert.to_json_dict()
        for key in CSV_FIELDS:
            value = d[key]
            if key == "witness_chain":
                value = " ".join(d[key]) or "-"
            print(f"{key}: {value}")
        print(f"witness_cycle_types: {' '.join('+'.join(map(str, t)) or 'e' for t in d['witness_cycle_types']) or '-'}")
    return 0 if cert.verdict == PASS else 1


def _cmd_verify_scan(args) -> int:
    report = scan_range(
        args.start,
        args.stop,
        kinds=args.kinds,
        jobs=args.jobs,
        support_cap=args.support_cap,
    )
    summary = report.summary_dict()
    counts = report.counts
    print(
        f"scanned n in [{report.start}, {report.stop}] "
        f"kinds={','.join(k.value for k in report.kinds)} support_cap={report.support_cap}"
    )
    print(
        f"certificates: {summary['total']}  "
        f"PASS: {counts['PASS']}  FAIL: {counts['FAIL']}  INDETERMINATE: {counts['INDETERMINATE']}"
    )
    for problem in summary["problems"]:
        print(
            f"{problem['verdict']} n={problem['n']} kind={problem['kind']} "
            f"h={problem['h_value']} omega={problem['omega_count']} "
            f"witness={'|'.join(problem['witness_chain']) or '-'} reason={problem['reason'] or '-'}"
        )
    print(f"RESULT: {'PASS' if report.all_passed else 'FAIL'}")
    if args.out is not None:
        args.out.mkdir(parents=True, exist_ok=True)
        (args.out / "summary.json").write_text(dump_json(summary, compact=False) + "\n")
        with (args.out / "certificates.csv").open("w", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(CSV_FIELDS)
            for cert in report.certificates:
                writer.writerow(certificate_csv_row(cert))
        with (args.out / "certificates.jsonl").open("w") as handle:
            for cert in report.certificates:
                handle.write(dump_json(cert.to_json_dict()) + "\n")
    return 0 if report.all_passed else 1


def _cmd_bounds(args) -> int:
    report = bound_report(args.x)
    if args.format == "json":
        print(
            dump_json(
                {
                    "x": report.x,
                    "pi_exact": report.pi_exact,
                    "lower": report.lower,
                    "upper": report.upper,
                    "lower_holds": report.lower_holds,
                    "upper_holds": report.upper_holds,
                    "p": report.p,
                    "gap": report.gap,
                    "gap_bound_holds": report.gap_bound_holds,
                }
            )
        )
    else:
        print(f"x: {report.x}")
        print(f"pi_exact: {report.pi_exact}")
        print(f"lower: {report.lower:.6f}  lower_holds: {report.lower_holds}")
        print(f"upper: {report.upper:.6f}  upper_holds: {report.upper_holds}")
        print(f"p: {report.p}  gap: {report.gap}  gap_bound_holds: {report.gap_bound_holds}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        if args.command == "spectrum":
            return _cmd_spectrum(args)
        if args.command == "height":
            return _cmd_height(args)
        if args.command == "omega":
            return _cmd_omega(args)
        if args.command == "hz-table":
            return _cmd_hz_table(args)
        if args.command == "verify":
            if args.verify_command == "case":
                return _cmd_verify_case(args)
            return _cmd_verify_scan(args)
        if args.command == "bounds":
            return _cmd_bounds(args)
        parser.error(f"unknown command {args.command!r}")
        return 2
    except (DomainError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
