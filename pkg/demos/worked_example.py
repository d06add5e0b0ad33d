#!/usr/bin/env python3
"""Tilings of one skew shape, and the same polynomial computed four ways.

The pair (111111, 211212) has a small skew region.  We list every tiling by
ballot strips that obeys Rule I, print each strip's weight, and then compare
the total with the Hecke-module canonical basis and the binary-tree sum.
"""
from ballotkl import CASE_A, PLUS, case_b, enumerate_conf, p_polynomial, q_polynomial, r_polynomial, skew
from ballotkl.ballot import strip_weight

ALPHA, BETA = "111111", "211212"


def show_tilings(case):
    region = skew(ALPHA, BETA)
    confs = enumerate_conf(ALPHA, BETA, PLUS, "I", case)
    print(f"case {case}: {len(region)} boxes, {len(confs)} Rule-I tilings")
    for k, conf in enumerate(confs, start=1):
        big = [s for s in conf if len(s) > 1]
        parts = ", ".join(f"{s.shape} -> {strip_weight(s, case, 'I')}" for s in big) or "single boxes"
        print(f"  {k}. {parts}")


def compare_routes(case):
    q = q_polynomial(ALPHA, BETA, PLUS, "I", case)
    p = p_polynomial(ALPHA, BETA, PLUS, case)
    r = r_polynomial(ALPHA, BETA, case)
    verdict = "agree" if q == p == r else "DISAGREE"
    print(f"case {case}: tilings {q} | canonical basis {p} | trees {r} -> {verdict}")


if __name__ == "__main__":
    for case in (CASE_A, case_b(1), case_b(2)):
        show_tilings(case)
    print()
    for case in (CASE_A, case_b(1), case_b(2), case_b(3)):
        compare_routes(case)
