from pathlib import Path

from twosquares.certify import decide
from twosquares.classify import classify
from twosquares.report import render_difference_table, render_scan_table, sweep_csv
from twosquares.scan import expand_branches, initial_quadratic, scan_branch

GOLDEN = Path(__file__).parent / "golden"


def branch_named(n, name):
    root = initial_quadratic(n, classify(n).roots_mod25[0])
    return next(b for b in expand_branches(root) if b.name == name)


def golden_check(name, text):
    assert text == (GOLDEN / name).read_text(encoding="utf-8")


def test_difference_table_worked_composite():
    br = branch_named(1000009, "B")
    _, rows = scan_branch(br)
    text = render_difference_table(br, rows)
    golden_check("b_1000009_diff.txt", text)
    # the slow side's subtrahends and first differences, per the hand table
    minus = sorted((r for r in rows if r.t < 0), key=lambda r: -r.t)
    assert [r.subtrahend for r in minus[:4]] == [176, 1152, 2928, 5504]
    assert [r.difference for r in minus[:4]] == [176, 976, 1776, 2576]


def test_scan_table_worked_composite():
    br = branch_named(1000009, "B")
    hits, rows = scan_branch(br)
    text = render_scan_table(br, rows, hits)
    golden_check("b_1000009_scan.txt", text)
    assert "*  2209" in text
    assert text.count("*") == 1


def test_scan_table_no_hits():
    br = branch_named(1000081, "C")
    hits, rows = scan_branch(br)
    text = render_scan_table(br, rows, hits)
    golden_check("c_1000081_scan.txt", text)
    assert "1273" in text
    assert "*" not in text


def test_tables_reduced_even_branch():
    br = branch_named(1000081, "A.e0")
    hits, rows = scan_branch(br)
    diff = render_difference_table(br, rows)
    scan = render_scan_table(br, rows, hits)
    golden_check("a_e0_1000081_diff.txt", diff)
    golden_check("a_e0_1000081_scan.txt", scan)
    # ends at 45; the only square is the head value 2500
    assert scan.count("*") == 2  # head is shown atop both sides
    assert "* 2500" in scan
    assert scan.rstrip().splitlines()[-1].endswith("864")
    assert "    45" in scan


def test_tables_odd_branch_prime_case():
    br = branch_named(1000081, "A.o3")
    hits, rows = scan_branch(br)
    golden_check("a_o3_1000081_scan.txt", render_scan_table(br, rows, hits))
    assert hits == []


def test_every_hit_marked_and_every_mark_square():
    from twosquares.arith import is_perfect_square

    for n in (1000009, 1000081, 481, 81):
        root = initial_quadratic(n, classify(n).roots_mod25[0])
        for br in expand_branches(root):
            if not br.scannable:
                continue
            hits, rows = scan_branch(br)
            text = render_scan_table(br, rows, hits)
            starred = [
                int(line.replace("*", "").strip())
                for line in text.splitlines()
                if line.startswith("*")
            ]
            for v in starred:
                assert is_perfect_square(v) is not None
            for h in hits:
                assert h.value in starred


def test_empty_rows_render_header_only():
    br = initial_quadratic(21, 11)
    assert render_difference_table(br, []).splitlines()[0].startswith("branch Q")
    assert "(no rows)" in render_difference_table(br, [])
    assert "(no rows)" in render_scan_table(br, [], [])


def test_rendering_is_pure():
    br = branch_named(1000009, "B")
    hits, rows = scan_branch(br)
    assert render_scan_table(br, rows, hits) == render_scan_table(br, rows, hits)
    assert render_difference_table(br, rows) == render_difference_table(br, rows)


def test_sweep_csv_golden():
    certs = [decide(1000009), decide(1000081)]
    text = sweep_csv(certs)
    assert text == (
        "n,verdict,rep_count,factor1,factor2\n"
        "1000009,composite_with_factors,2,293,3413\n"
        "1000081,prime,1,,\n"
    )


def test_sweep_csv_sorted_and_edge_cases():
    assert sweep_csv([]) == "n,verdict,rep_count,factor1,factor2\n"
    text = sweep_csv([decide(1000081), decide(21)])
    lines = text.splitlines()
    assert lines[1] == "21,composite_no_representation,0,,"
    assert lines[2] == "1000081,prime,1,,"
