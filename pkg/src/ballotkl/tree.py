"""Labelled binary trees and their correspondence with ballot-strip tilings.

For a string beta (read with 1 = up step), every pair "1 ... 2" matched like
brackets and every unpaired 1 gives an edge, except that in case B two
unpaired 1s may share one edge (an 11-pair) and one leftover unpaired 1 may
get no edge at all.  An arc edge hangs below the innermost arc enclosing it,
or, failing that, below the edge of the nearest unpaired 1 to its left.  The
unpaired-1 edges form a chain from left to right.

Leaves carry capacities measured against a second string alpha <= beta, and
a labelling puts non-negative integers on the edges, non-increasing towards
the root and bounded by the capacities at the leaves.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .ballot import Configuration, Strip
from .laurent import CASE_A, Case, Laurent, ONE, T, TN, case_b
from .strings import PLUS, all_strings, bruhat_leq, check_string, heights, skew

__all__ = [
    "Edge", "Tree", "build_tree", "capacities", "LabellingOptions",
    "DEFAULT_LABELLING", "enumerate_labellings", "labelling_weight",
    "r_polynomial", "link_labels", "labelling_to_configuration",
    "configuration_to_labelling", "unpaired_ones",
]


@dataclass
class Edge:
    """One edge of A(beta).

    kind is "arc" (a matched 1...2 at positions ``pos``), "vertical" (an
    unpaired 1) or "pair11" (two unpaired 1s sharing an edge).  ``start`` is
    the leftmost string position of the link.
    """
    index: int
    kind: str
    pos: tuple[int, ...]
    mark: str | None = None
    parent: int | None = None
    children: list[int] = field(default_factory=list)
    capacity: int | None = None

    @property
    def start(self) -> int:
        return self.pos[0]

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def to_json(self) -> dict:
        return {"index": self.index, "kind": self.kind, "pos": list(self.pos),
                "mark": self.mark, "parent": self.parent,
                "capacity": self.capacity}


@dataclass
class Tree:
    beta: str
    case: Case
    edges: list[Edge]
    arrows: list[tuple[int, int]] = field(default_factory=list)
    alpha: str | None = None

    def __len__(self):
        return len(self.edges)

    @property
    def n(self) -> int:
        return len(self.beta)

    def roots(self) -> list[int]:
        return [e.index for e in self.edges if e.parent is None]

    def leaves(self) -> list[int]:
        return [e.index for e in self.edges if e.is_leaf]

    def ancestors(self, i: int) -> list[int]:
        out = []
        p = self.edges[i].parent
        while p is not None:
            out.append(p)
            p = self.edges[p].parent
        return out

    def predecessors(self, i: int, transitive: bool = True) -> set[int]:
        """Edges with an arrow into i (followed backwards if transitive)."""
        direct: dict[int, set[int]] = {}
        for a, b in self.arrows:
            direct.setdefault(b, set()).add(a)
        out: set[int] = set()
        todo = list(direct.get(i, ()))
        while todo:
            a = todo.pop()
            if a in out:
                continue
            out.add(a)
            if transitive:
                todo.extend(direct.get(a, ()))
        return out

    def to_json(self) -> dict:
        return {"beta": self.beta, "alpha": self.alpha, "case": str(self.case),
                "edges": [e.to_json() for e in self.edges],
                "arrows": [list(a) for a in self.arrows]}


def _match(beta: str):
    """Arcs (i, j) with beta_i = 1, beta_j = 2, and the unpaired 1 positions."""
    stack, arcs = [], []
    for pos, c in enumerate(beta, start=1):
        if c == "1":
            stack.append(pos)
        elif stack:
            arcs.append((stack.pop(), pos))
    return sorted(arcs), stack


def unpaired_ones(beta: str) -> list[int]:
    return _match(beta)[1]


def build_tree(beta: str, case: Case = CASE_A) -> Tree:
    check_string(beta)
    arcs, ones = _match(beta)
    from_right = ones[::-1]
    # classify unpaired 1s: position -> (kind, mark) ; second 1 of an 11-pair
    # maps onto the pair's edge
    links: list[tuple[str, tuple[int, ...], str | None]] = []
    owner_of_one: dict[int, int] = {}
    if case.kind == "A":
        for q, p in enumerate(from_right, start=1):
            links.append(("vertical", (p,), "o" if q % 2 else "e"))
    else:
        m = case.m
        for q, p in enumerate(from_right, start=1):
            if q <= m:
                links.append(("vertical", (p,), "+" if q == m else None))
        rest = from_right[m:]
        for k in range(0, len(rest) - 1, 2):
            links.append(("pair11", (rest[k + 1], rest[k]), "+"))
    links += [("arc", a, None) for a in arcs]
    links.sort(key=lambda x: x[1][0])
    edges = [Edge(i, kind, pos, mark) for i, (kind, pos, mark) in enumerate(links)]
    for e in edges:
        if e.kind != "arc":
            for p in e.pos:
                owner_of_one[p] = e.index
    # unpaired-1 edge in force at each position (the nearest one to the left)
    chain_at = {}
    current = None
    for pos in range(1, len(beta) + 1):
        if pos in owner_of_one:
            current = owner_of_one[pos]
        chain_at[pos] = current
    vertical_edges = sorted({owner_of_one[p] for p in owner_of_one},
                            key=lambda i: edges[i].start)
    for a, b in zip(vertical_edges, vertical_edges[1:]):
        edges[b].parent = a
    arc_edges = [e for e in edges if e.kind == "arc"]
    for e in arc_edges:
        i, j = e.pos
        enclosing = [f for f in arc_edges if f.pos[0] < i and j < f.pos[1]]
        if enclosing:
            e.parent = max(enclosing, key=lambda f: f.pos[0]).index
        else:
            e.parent = chain_at[i]
    for e in edges:
        if e.parent is not None:
            edges[e.parent].children.append(e.index)
    tree = Tree(beta, case, edges)
    if case.kind == "B":
        tree.arrows = _arrows(beta, case.m, edges, ones, arcs, owner_of_one)
    return tree


def _arrows(beta, m, edges, ones, arcs, owner_of_one) -> list[tuple[int, int]]:
    """Precedence arrows: for r >= 0 take the (m+2r)-th unpaired 1 from the
    right and the balanced block z immediately to its left; the edge of that 1
    precedes the rightmost irreducible factor of z, which precedes the next
    one to its left, and so on."""
    arc_edge = {e.pos: e.index for e in edges if e.kind == "arc"}
    top_arcs = [a for a in arcs
                if not any(b[0] < a[0] and a[1] < b[1] for b in arcs)]
    from_right = ones[::-1]
    out = []
    q = m
    while q <= len(from_right):
        k = from_right[q - 1]
        # irreducible factors of the maximal balanced block ending at k-1
        factors = []
        end = k - 1
        while True:
            f = next((a for a in top_arcs if a[1] == end), None)
            if f is None:
                break
            factors.append(f)
            end = f[0] - 1
        if factors:
            chain = [owner_of_one[k]] + [arc_edge[f] for f in factors]
            out += list(zip(chain, chain[1:]))
        q += 2
    return out


def capacities(beta: str, alpha: str, case: Case = CASE_A) -> Tree:
    """A(beta/alpha): the tree of beta with capacities on its leaves."""
    if len(alpha) != len(beta):
        raise ValueError("strings must have the same length")
    if not bruhat_leq(alpha, beta, PLUS):
        raise ValueError(f"{alpha} is not below {beta}")
    tree = build_tree(beta, case)
    tree.alpha = alpha
    n = len(beta)
    for e in tree.edges:
        if not e.is_leaf:
            continue
        if e.kind == "arc":
            i = e.pos[0]
            e.capacity = alpha[:i].count("1") - beta[:i].count("1")
        else:
            e.capacity = alpha.count("1") - beta.count("1")
            if e.pos[-1] != n:
                raise AssertionError("a leaf unpaired 1 must be the last letter")
    return tree


@dataclass(frozen=True)
class LabellingOptions:
    """transitive: rule on preceding edges quantifies over all predecessors
    along arrow chains, not only the immediate ones."""
    transitive: bool = True


DEFAULT_LABELLING = LabellingOptions()


def _bounds(tree: Tree) -> list[int]:
    """Largest admissible label of each edge: the smallest capacity below it."""
    bound = [0] * len(tree.edges)

    def visit(i: int) -> int:
        e = tree.edges[i]
        if e.is_leaf:
            b = e.capacity
        else:
            b = min(visit(c) for c in e.children)
        bound[i] = b
        return b

    for r in tree.roots():
        visit(r)
    return bound


def enumerate_labellings(tree: Tree,
                         opts: LabellingOptions = DEFAULT_LABELLING) -> list[tuple[int, ...]]:
    """All labellings, as tuples indexed like ``tree.edges``."""
    if tree.edges and tree.alpha is None:
        raise ValueError("capacities are not set")
    bound = _bounds(tree)
    order = sorted(range(len(tree.edges)), key=lambda i: len(tree.ancestors(i)))
    plus = [e.mark == "+" for e in tree.edges] if tree.case.kind == "B" else None
    preds = [tree.predecessors(i, opts.transitive) for i in range(len(tree.edges))]
    out = []
    lab = [0] * len(tree.edges)

    def rec(k: int):
        if k == len(order):
            out.append(tuple(lab))
            return
        i = order[k]
        p = tree.edges[i].parent
        lo = lab[p] if p is not None else 0
        for v in range(lo, bound[i] + 1):
            if plus is not None and plus[i] and v % 2:
                continue
            lab[i] = v
            rec(k + 1)

    rec(0)
    if tree.case.kind == "B" and tree.arrows:
        out = [lab for lab in out if _rule_preceding(lab, preds)]
    return out


def _rule_preceding(lab, preds) -> bool:
    for i, ps in enumerate(preds):
        if ps and lab[i] % 2 and all(lab[i] <= lab[p] for p in ps):
            return False
    return True


def labelling_weight(tree: Tree, lab) -> Laurent:
    if tree.case.kind == "B":
        return T ** (2 * sum(lab))
    sigma = sum(v for e, v in zip(tree.edges, lab) if e.mark is None)
    so = sum(v for e, v in zip(tree.edges, lab) if e.mark == "o")
    se = sum(v for e, v in zip(tree.edges, lab) if e.mark == "e")
    return T ** (2 * sigma) * (-(TN ** 2)) ** so * (-(T ** 2 * TN ** -2)) ** se


def r_polynomial(alpha: str, beta: str, case: Case = CASE_A,
                 opts: LabellingOptions = DEFAULT_LABELLING) -> Laurent:
    tree = capacities(beta, alpha, case)
    total = Laurent()
    for lab in enumerate_labellings(tree, opts):
        total = total + labelling_weight(tree, lab)
    return total


def link_labels(tree: Tree, lab) -> list[int]:
    """Label of each link: its edge label minus its parent's."""
    return [v - (lab[e.parent] if e.parent is not None else 0)
            for e, v in zip(tree.edges, lab)]


def _column_range(e: Edge, n: int) -> tuple[int, int]:
    if e.kind == "arc":
        return e.pos[0] - 1, e.pos[1]
    return e.pos[0] - 1, n


def labelling_to_configuration(tree: Tree, lab) -> Configuration:
    """Stack parallel ballot paths above beta, one bunch per link, and fill
    the rest of the skew region with single boxes."""
    n = tree.n
    h = heights(tree.beta, PLUS)
    region = skew(tree.alpha, tree.beta, PLUS).boxes
    own = link_labels(tree, lab)
    paths: list[list[tuple[int, int]]] = []
    for e in tree.edges:
        a, b = _column_range(e, n)
        base = lab[e.parent] if e.parent is not None else 0
        for c in range(1, own[e.index] + 1):
            layer = base + c
            if a < 1:
                raise ValueError("path leaves the diagram on the left")
            paths.append([(x, h[x] + 2 * layer - 1) for x in range(a, b + 1)])
    # merge paths sharing an end box with another path's start box
    by_start = {p[0]: p for p in paths}
    starts_taken = {p[-1] for p in paths if p[-1] in by_start}
    strips = []
    for p in paths:
        if p[0] in starts_taken:
            continue
        full = list(p)
        while full[-1] in by_start:
            full.extend(by_start[full[-1]][1:])
        strips.append(Strip(tuple(full)))
    used = [b for s in strips for b in s.boxes]
    if len(used) != len(set(used)) or not set(used) <= region:
        raise ValueError("paths overlap or leave the skew region")
    strips += [Strip((b,)) for b in region - set(used)]
    return Configuration(n, frozenset(strips))


def configuration_to_labelling(tree: Tree, conf: Configuration) -> tuple[int, ...]:
    """Inverse of ``labelling_to_configuration``."""
    n = tree.n
    starting = {}
    for e in tree.edges:
        a, b = _column_range(e, n)
        starting[a] = (e.index, b)
    own = [0] * len(tree.edges)
    for s in conf.strips:
        if len(s) == 1:
            continue
        x, last = s.start[0], s.end[0]
        while x < last:
            if x not in starting:
                raise ValueError("strip does not decompose into links")
            i, b = starting[x]
            own[i] += 1
            x = b
        if x != last:
            raise ValueError("strip does not decompose into links")
    lab = [0] * len(tree.edges)
    for i in sorted(range(len(tree.edges)), key=lambda i: len(tree.ancestors(i))):
        p = tree.edges[i].parent
        lab[i] = own[i] + (lab[p] if p is not None else 0)
    return tuple(lab)
