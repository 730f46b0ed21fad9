"""Command-line front end: classify, prove, scan, sweep, verify.

Exit codes: verdicts are data, never failures (prove exits 0 for any
verdict); 1 means a certificate failed verification; 2 means bad input
(unparseable number, out-of-range value, malformed document).
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .arith import MAX_MAGNITUDE
from .certify import (
    Certificate,
    CertificateError,
    certificate_from_json,
    certificate_to_json,
    decide,
    verify,
)
from .classify import classify
from .report import render_difference_table, render_scan_table, sweep_csv
from .represent import representations
from .scan import expand_branches, initial_quadratic, scan_branch


def _natural(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError("value must be nonnegative")
    if value > MAX_MAGNITUDE:
        raise argparse.ArgumentTypeError("value exceeds the supported magnitude 2**63 - 1")
    return value


def _write_out(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _eligibility_text(n: int) -> str:
    elig = classify(n)
    lines = [
        f"n = {n}",
        f"status: {elig.status.value}",
        f"n mod 4 = {elig.n_mod4}, last digit = {elig.last_digit}, n mod 25 = {elig.n_mod25}",
    ]
    if elig.is_eligible:
        roots = "/".join(str(r) for r in elig.roots_mod25) or "none (non-residue mod 25)"
        lines.append(f"square roots of n mod 25: {roots}")
    return "\n".join(lines) + "\n"


def _eligibility_json(n: int) -> str:
    elig = classify(n)
    doc = {
        "n": str(n),
        "status": elig.status.value,
        "n_mod4": str(elig.n_mod4),
        "last_digit": str(elig.last_digit),
        "n_mod25": str(elig.n_mod25),
        "roots_mod25": [str(r) for r in elig.roots_mod25],
    }
    return json.dumps(doc, indent=2) + "\n"


def _branch_reports(n: int) -> str:
    elig = classify(n)
    if not elig.is_eligible:
        return f"n = {n} is not eligible ({elig.status.value}); nothing to scan\n"
    if not elig.roots_mod25:
        return (
            f"n = {n} is a non-residue mod 25: no representation exists, "
            "nothing to scan\n"
        )
    root = initial_quadratic(n, elig.roots_mod25[0])
    blocks = [f"n = {n}, substitution x = 25 t + {elig.roots_mod25[0]}", root.describe(), ""]
    for leaf in expand_branches(root):
        if not leaf.scannable:
            blocks.append(leaf.describe())
            blocks.append("")
            continue
        hits, rows = scan_branch(leaf)
        blocks.append(render_difference_table(leaf, rows).rstrip("\n"))
        blocks.append("")
        blocks.append(render_scan_table(leaf, rows, hits).rstrip("\n"))
        for hit in hits:
            blocks.append(f"hit: t = {hit.t}, value = {hit.value} = {hit.root}^2")
        blocks.append("")
    reps = representations(n)
    if reps:
        listed = ", ".join(f"({r.a}, {r.b})" for r in reps)
        blocks.append(f"representations: {listed}")
    else:
        blocks.append("representations: none")
    return "\n".join(blocks) + "\n"


def _certificate_text(cert: Certificate) -> str:
    lines = [f"n = {cert.n}", f"verdict: {cert.verdict.value}"]
    if cert.representations:
        listed = ", ".join(f"({r.a}, {r.b})" for r in cert.representations)
        lines.append(f"representations: {listed}")
    if cert.factors:
        lines.append(f"factors: {cert.factors[0]} * {cert.factors[1]} = {cert.n}")
    if cert.witness:
        w = cert.witness
        lines.append(
            f"witness: u={w.u} v={w.v} k={w.k} l={w.l} m={w.m} n={w.n}"
        )
    lines.append(f"notes: {cert.notes}")
    return "\n".join(lines) + "\n"


def cmd_classify(args: argparse.Namespace) -> int:
    if args.format == "json":
        sys.stdout.write(_eligibility_json(args.n))
    else:
        sys.stdout.write(_eligibility_text(args.n))
    return 0


def cmd_prove(args: argparse.Namespace) -> int:
    cert = decide(args.n)
    if args.format == "text":
        text = _certificate_text(cert)
        if args.emit_tables:
            text += "\n" + _branch_reports(args.n)
    else:
        text = certificate_to_json(cert)
        if args.emit_tables:
            doc = json.loads(text)
            doc["tables"] = _branch_reports(args.n)
            text = json.dumps(doc, indent=2) + "\n"
    _write_out(text, args.out)
    return 0


def cmd_scan(args: argparse.Namespace) -> int:
    sys.stdout.write(_branch_reports(args.n))
    return 0


def _eligible_range(lo: int, hi: int) -> list[int]:
    return [n for n in range(lo, hi + 1) if classify(n).is_eligible]


def cmd_sweep(args: argparse.Namespace) -> int:
    ns = _eligible_range(args.start, args.stop)
    if args.jobs > 1 and ns:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            certs = list(pool.map(decide, ns, chunksize=64))
    else:
        certs = [decide(n) for n in ns]
    _write_out(sweep_csv(certs), args.out)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            cert = certificate_from_json(fh.read())
    except (OSError, CertificateError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if verify(cert):
        print(f"certificate for {cert.n} is valid ({cert.verdict.value})")
        return 0
    print(f"certificate for {cert.n} REJECTED", file=sys.stderr)
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twosquares",
        description=(
            "Decide primality of N = 1 (mod 4) ending in 1 or 9 by "
            "exhaustive two-square representation search"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="eligibility and mod-25 roots")
    p.add_argument("n", type=_natural)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("prove", help="decide n and emit a certificate")
    p.add_argument("n", type=_natural)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--emit-tables", action="store_true")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("scan", help="show all branches and their tables")
    p.add_argument("n", type=_natural)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("sweep", help="decide every eligible n in a range, emit CSV")
    p.add_argument("start", type=_natural)
    p.add_argument("stop", type=_natural)
    p.add_argument("--out", metavar="FILE")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="check a certificate file independently")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
