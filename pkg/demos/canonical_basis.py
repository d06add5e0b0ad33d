#!/usr/bin/env python3
"""Link patterns give the canonical basis of M^- in closed form.

For each string of length 4 we draw its link pattern as text, expand the
tensor product of its blocks, and check the result against the canonical
basis built by the bar-invariance algorithm.  Case A also factors as a
product of (T_i + t^-1) along the coset word.
"""
from ballotkl import CASE_A, HeckeAction, MINUS, all_strings, canonical_basis, case_b, link_pattern, varpi
from ballotkl.hecke import factorized_A_minus


def describe(beta, case):
    lp = link_pattern(beta, case)
    parts = [f"arcs {list(lp.arcs)}"]
    if case.kind == "A":
        parts.append(f"o {list(lp.o_marks)} e {list(lp.e_marks)}")
    else:
        parts.append(f"verticals {dict(sorted(lp.labeled_verticals.items()))} dotted {list(lp.dotted_pairs)}")
    return "; ".join(parts)


def main(n=4):
    for case in (CASE_A, case_b(2)):
        action = HeckeAction(MINUS, case)
        same = 0
        for beta in all_strings(n):
            v = varpi(beta, case)
            same += v == canonical_basis(beta, action)
        print(f"case {case}: link-pattern expansion equals the canonical basis for {same}/{2 ** n} strings")
    beta = "1212"
    print(f"\n{beta}: {describe(beta, CASE_A)}")
    print(f"  expansion       {varpi(beta, CASE_A)}")
    print(f"  product formula {factorized_A_minus(beta)}")


if __name__ == "__main__":
    main()
