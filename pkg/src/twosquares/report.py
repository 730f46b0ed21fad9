"""Text renderings of scan tables and the sweep CSV.

Two table styles: the subtrahend/difference table (what gets
subtracted for each step away from the start, with first differences
growing by 2*gamma), and the running-subtraction table (the successive
branch values themselves, squares marked with '*').

The side whose subtrahends grow more slowly (linear term working
against the quadratic) is rendered first, matching the hand layout.
All output is plain decimal, LF line endings, locale-independent.
"""

from __future__ import annotations

import csv
import io

from .certify import Certificate
from .scan import ScanBranch, ScanHit, TableRow


def _split_sides(
    branch: ScanBranch, rows: list[TableRow]
) -> tuple[TableRow, list[TableRow], list[TableRow]]:
    """(head row, near side, far side), each side ordered outward.

    The near side is the direction where the linear term works against
    the quadratic, so subtrahends grow more slowly (negative t when
    beta > 0, positive t otherwise).
    """
    head = next(r for r in rows if r.difference is None)
    plus = [r for r in rows if r.t > head.t]
    minus = sorted((r for r in rows if r.t < head.t), key=lambda r: -r.t)
    if branch.quadratic.beta > 0:
        return head, minus, plus
    return head, plus, minus


def _side_label(branch: ScanBranch, near: bool) -> str:
    g, b = branch.quadratic.gamma, branch.quadratic.beta
    if b == 0:
        return f"{g}c^2"
    sign = "-" if near else "+"
    return f"{g}c^2{sign}{abs(b)}c"


def render_difference_table(branch: ScanBranch, rows: list[TableRow]) -> str:
    """Fixed-width table of per-step subtrahends and their differences,
    near side then far side, one row per distance c from the start."""
    title = branch.describe()
    if not rows:
        return title + "\n  (no rows)\n"
    head, near, far = _split_sides(branch, rows)
    labels = (_side_label(branch, True), _side_label(branch, False))
    sides = (near, far)

    cwidth = max(1, *(len(str(abs(r.t - head.t))) for r in rows))
    swidths = []
    dwidths = []
    for label, side in zip(labels, sides):
        swidths.append(max(len(label), *(len(str(r.subtrahend)) for r in [head] + side)))
        dwidths.append(max(4, *(len(str(r.difference)) for r in side)) if side else 4)

    def cell(text: str, width: int) -> str:
        return text.rjust(width)

    lines = [title]
    header = cell("c", cwidth)
    for label, sw, dw in zip(labels, swidths, dwidths):
        header += " | " + cell(label, sw) + " | " + cell("diff", dw)
    lines.append(header)
    depth = max(len(near), len(far))
    for i in range(depth + 1):
        line = cell(str(i), cwidth)
        for side, sw, dw in zip(sides, swidths, dwidths):
            if i == 0:
                row, diff = head, ""
            elif i <= len(side):
                row, diff = side[i - 1], str(side[i - 1].difference)
            else:
                row = None
                diff = ""
            sub = str(row.subtrahend) if row else ""
            line += " | " + cell(sub, sw) + " | " + cell(diff, dw)
        lines.append(line.rstrip())
    return "\n".join(lines) + "\n"


def render_scan_table(branch: ScanBranch, rows: list[TableRow], hits: list[ScanHit]) -> str:
    """Running-subtraction columns: the branch values with the first
    differences between them, squares marked with '*'."""
    title = branch.describe()
    if not rows:
        return title + "\n  (no rows)\n"
    head, near, far = _split_sides(branch, rows)
    hit_ts = {h.t for h in hits}
    width = max(len(str(r.running_value)) for r in rows)

    def value_line(row: TableRow) -> str:
        mark = "* " if row.t in hit_ts else "  "
        return mark + str(row.running_value).rjust(width)

    lines = [title]
    for label, side in zip(
        (_side_label(branch, True), _side_label(branch, False)), (near, far)
    ):
        lines.append(f"side {label}:")
        lines.append(value_line(head))
        for row in side:
            lines.append("  " + str(row.difference).rjust(width))
            lines.append(value_line(row))
    return "\n".join(lines) + "\n"


def sweep_csv(certs: list[Certificate]) -> str:
    """One CSV row per certificate: n, verdict, representation count and
    the factor pair (blank when absent).  Rows sorted by n."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "verdict", "rep_count", "factor1", "factor2"])
    for cert in sorted(certs, key=lambda c: c.n):
        f1, f2 = cert.factors if cert.factors else ("", "")
        writer.writerow([cert.n, cert.verdict.value, len(cert.representations), f1, f2])
    return buf.getvalue()
