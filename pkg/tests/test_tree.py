import pytest

from ballotkl.ballot import configuration_weight, enumerate_conf, q_polynomial
from ballotkl.laurent import CASE_A, ONE, T, TN, case_b
from ballotkl.linkpattern import link_pattern
from ballotkl.strings import PLUS, all_strings, bruhat_leq, flip, skew
from ballotkl.tree import (
    LabellingOptions, build_tree, capacities, configuration_to_labelling,
    enumerate_labellings, labelling_to_configuration, labelling_weight,
    link_labels, r_polynomial,
)

CASES = [CASE_A, case_b(1), case_b(2), case_b(3)]


def _shape(tree):
    return [(e.kind, e.pos, e.mark, e.parent) for e in tree.edges]


def test_case_A_example_tree():
    t = build_tree("2211211", CASE_A)
    assert _shape(t) == [("vertical", (3,), "o", None), ("arc", (4, 5), None, 0),
                         ("vertical", (6,), "e", 0), ("vertical", (7,), "o", 2)]
    assert t.arrows == []


def test_case_B_example_trees():
    t1, t2, t3 = (build_tree("22111211", case_b(m)) for m in (1, 2, 3))
    # m=1: a plus root with an arc and a plus vertical below it
    assert _shape(t1) == [("pair11", (4, 7), "+", None), ("arc", (5, 6), None, 0),
                          ("vertical", (8,), "+", 0)]
    # m=2: the plus edge continues to a further vertical, with one arrow
    assert _shape(t2) == [("pair11", (3, 4), "+", None), ("arc", (5, 6), None, 0),
                          ("vertical", (7,), "+", 0), ("vertical", (8,), None, 2)]
    assert t2.arrows == [(2, 1)]
    # m=3: only the root carries a plus
    assert [e.mark for e in t3.edges] == ["+", None, None, None]
    assert t1.arrows == t3.arrows == []


def test_staircase_has_empty_tree():
    for n in range(1, 6):
        t = build_tree("2" * n, CASE_A)
        assert len(t) == 0
        assert enumerate_labellings(t) == [()]


def test_capacities_example():
    t = capacities("2211211", "1111111", CASE_A)
    assert [e.capacity for e in t.edges] == [None, 2, None, 3]
    with pytest.raises(ValueError):
        capacities("1111", "2222")


def test_capacities_of_diagonal_pair_vanish():
    for case in CASES:
        for b in all_strings(5):
            t = capacities(b, b, case)
            assert all(e.capacity == 0 for e in t.edges if e.is_leaf)
            assert enumerate_labellings(t) == [(0,) * len(t)]
            assert r_polynomial(b, b, case) == ONE


def test_capacity_nonnegative_and_vertical_leaf_counts_anchors():
    for n in range(1, 7):
        for b in all_strings(n):
            for a in all_strings(n):
                if not bruhat_leq(a, b):
                    continue
                t = capacities(b, a, CASE_A)
                anchors = len(skew(a, b).anchors)
                for e in t.edges:
                    if e.is_leaf:
                        assert e.capacity >= 0
                    if e.is_leaf and e.kind == "vertical":
                        assert e.pos == (n,)
                        assert e.capacity == anchors


def test_labelling_counts():
    t = capacities("2211211", "1111111", CASE_A)
    labs = enumerate_labellings(t)
    assert (0, 0, 0, 0) in labs
    assert len(labs) == len(enumerate_conf("1111111", "2211211", PLUS, "I", CASE_A))


def test_labelling_rules():
    for case in CASES[1:]:
        for b in all_strings(6):
            tree = capacities(b, "111111", case)
            for lab in enumerate_labellings(tree):
                for e in tree.edges:
                    if e.parent is not None:
                        assert lab[e.index] >= lab[e.parent]
                    if e.is_leaf:
                        assert lab[e.index] <= e.capacity
                    if e.mark == "+":
                        assert lab[e.index] % 2 == 0
                    preds = tree.predecessors(e.index)
                    if preds and all(lab[e.index] <= lab[p] for p in preds):
                        assert lab[e.index] % 2 == 0


def test_example_labelling_weight():
    # root o = 1, arc = 2, e = 1, lower o = 2
    t = capacities("2211211", "1111111", CASE_A)
    assert labelling_weight(t, (1, 2, 1, 2)) == T ** 6 * TN ** 4


def test_r_polynomial_examples():
    assert r_polynomial("111111", "211212", CASE_A) == (
        1 + 2 * T ** 2 + 2 * T ** 4 + T ** 6 - TN ** 2 * T ** 4 - TN ** 2 * T ** 6)
    assert r_polynomial("111111", "211212", case_b(1)) == 1 + 2 * T ** 2 + 2 * T ** 4 + T ** 6


def test_case_B_positivity():
    for case in CASES[1:]:
        for b in all_strings(5):
            for a in all_strings(5):
                if bruhat_leq(a, b):
                    assert all(c > 0 for _, c in r_polynomial(a, b, case).items())


def test_precedence_is_transitive():
    immediate = LabellingOptions(transitive=False)
    for case, a, b in ((case_b(1), "111111", "212121"), (case_b(2), "1111111", "2121211")):
        q = q_polynomial(a, b, PLUS, "I", case)
        assert r_polynomial(a, b, case) == q
        assert r_polynomial(a, b, case, immediate) != q


def test_figure_labelling():
    tree = capacities("22111211", "11111111", case_b(2))
    assert [e.capacity for e in tree.edges] == [None, 2, None, 3]
    lab = (2, 2, 2, 3)
    assert lab in enumerate_labellings(tree)
    assert link_labels(tree, lab) == [2, 0, 0, 1]
    conf = labelling_to_configuration(tree, lab)
    assert conf in set(enumerate_conf("11111111", "22111211", PLUS, "I", case_b(2)))
    assert configuration_to_labelling(tree, conf) == lab
    assert configuration_weight(conf, case_b(2), "I") == labelling_weight(tree, lab)


def test_zero_labelling_gives_single_boxes():
    for case in CASES:
        for b in all_strings(5):
            for a in all_strings(5):
                if bruhat_leq(a, b):
                    tree = capacities(b, a, case)
                    conf = labelling_to_configuration(tree, (0,) * len(tree))
                    assert all(len(s) == 1 for s in conf)
                    assert conf.boxes() == set(skew(a, b).boxes)


def test_bijection_n5():
    for case in CASES:
        for b in all_strings(5):
            for a in all_strings(5):
                if not bruhat_leq(a, b):
                    continue
                tree = capacities(b, a, case)
                confs = set(enumerate_conf(a, b, PLUS, "I", case))
                images = set()
                for lab in enumerate_labellings(tree):
                    conf = labelling_to_configuration(tree, lab)
                    assert conf in confs
                    assert configuration_to_labelling(tree, conf) == lab
                    assert configuration_weight(conf, case, "I") == labelling_weight(tree, lab)
                    images.add(conf)
                assert images == confs


def _tree_links(tree):
    out = set()
    for e in tree.edges:
        if e.kind == "arc":
            out.add(("arc", e.pos))
        elif tree.case.kind == "A":
            out.add((e.mark, e.pos))
        elif e.kind == "pair11":
            out.add(("pair", e.pos))
        else:
            out.add(("v1" if e.mark == "+" else "v", e.pos))
    return out


def _pattern_links(beta, case):
    lp = link_pattern(flip(beta), case)
    out = {("arc", a) for a in lp.arcs}
    if case.kind == "A":
        out |= {("o", (i,)) for i in lp.o_marks} | {("e", (i,)) for i in lp.e_marks}
    else:
        out |= {("v1" if p == 1 else "v", (i,)) for i, p in lp.labeled_verticals.items()}
        out |= {("pair", d) for d in lp.dotted_pairs}
    return out


def test_tree_is_dual_to_link_pattern_of_flip():
    for case in CASES:
        for n in range(1, 7):
            for b in all_strings(n):
                assert _tree_links(build_tree(b, case)) == _pattern_links(b, case)
