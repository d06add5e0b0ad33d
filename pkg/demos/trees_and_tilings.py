#!/usr/bin/env python3
"""From a tree labelling to a tiling and back, with figures.

Takes the string 22111211 with tN = t^2, builds its binary tree against
11111111, maps the labelling (2, 2, 2, 3) to a ballot-strip tiling and
writes TikZ and SVG figures of the tree, its link pattern and the tiling
into ./figures.
"""
from pathlib import Path

from ballotkl import PLUS, case_b, enumerate_labellings
from ballotkl.ballot import configuration_weight
from ballotkl.render import render_configuration, render_link_pattern, render_tree
from ballotkl.strings import flip
from ballotkl.tree import capacities, configuration_to_labelling, labelling_to_configuration, labelling_weight, link_labels

ALPHA, BETA, CASE = "11111111", "22111211", case_b(2)


def main(out=Path("figures")):
    tree = capacities(BETA, ALPHA, CASE)
    for e in tree.edges:
        print(f"edge {e.index}: {e.kind} at {e.pos}, mark {e.mark}, parent {e.parent}, capacity {e.capacity}")
    print(f"arrows: {tree.arrows}")
    labs = enumerate_labellings(tree)
    print(f"{len(labs)} labellings")

    lab = (2, 2, 2, 3)
    conf = labelling_to_configuration(tree, lab)
    print(f"labelling {lab} -> link labels {link_labels(tree, lab)}")
    print(f"strips: {sorted(s.shape for s in conf if len(s) > 1)}")
    print(f"weights: tree {labelling_weight(tree, lab)}, tiling {configuration_weight(conf, CASE, 'I')}")
    print(f"round trip: {configuration_to_labelling(tree, conf)}")

    out.mkdir(exist_ok=True)
    for fmt in ("tikz", "svg"):
        (out / f"tree.{fmt}").write_text(render_tree(tree, lab, fmt))
        (out / f"linkpattern.{fmt}").write_text(render_link_pattern(flip(BETA), CASE, fmt))
        (out / f"tiling.{fmt}").write_text(render_configuration(conf, ALPHA, BETA, PLUS, fmt))
    print(f"figures written to {out}/")


if __name__ == "__main__":
    main()
