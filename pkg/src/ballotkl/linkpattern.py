"""Link patterns and the closed-form canonical basis of M^-.

A link pattern joins each 2 with the 1 it closes (reading 2 as an opening
bracket and 1 as a closing one).  Whatever is left reads 1...12...2.  The
unpaired 2s are decorated by counting from the right:

* case A: odd positions are ``o``, even positions are ``e``;
* case B: the j-th one (j <= m) is a vertical labelled m+1-j, the following
  ones are joined two at a time into dotted pairs, and a leftover is circled.

Every arc, vertical or dotted pair is a block with a small vector attached;
``varpi`` expands the tensor product of the blocks.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .hecke import bold_t
from .laurent import CASE_A, Case, Laurent, ONE, T, TN, case_b
from .strings import check_string, flip
from .vector import ModuleVector

__all__ = [
    "match_arcs", "LinkPatternA", "LinkPatternB", "link_pattern_A",
    "link_pattern_B", "link_pattern", "blocks", "varpi", "varpi_A",
    "varpi_B", "p_minus_closed_form_A", "p_minus_closed_form_B",
    "p_minus_closed_form", "p_minus_A", "p_minus_B",
]


def match_arcs(alpha: str) -> tuple[list[tuple[int, int]], list[int], list[int]]:
    """One stack pass: (arcs (i, j) with alpha_i=2, alpha_j=1, unpaired 1s, unpaired 2s).

    Positions are 1-based.
    """
    check_string(alpha)
    stack: list[int] = []
    arcs, ones = [], []
    for pos, c in enumerate(alpha, start=1):
        if c == "2":
            stack.append(pos)
        elif stack:
            arcs.append((stack.pop(), pos))
        else:
            ones.append(pos)
    return sorted(arcs), ones, stack


@dataclass(frozen=True)
class LinkPatternA:
    n: int
    arcs: tuple[tuple[int, int], ...]
    o_marks: tuple[int, ...]
    e_marks: tuple[int, ...]
    circled_ones: tuple[int, ...]

    def to_json(self) -> dict:
        return {"case": "A", "n": self.n, "arcs": [list(a) for a in self.arcs],
                "o": list(self.o_marks), "e": list(self.e_marks),
                "circled_ones": list(self.circled_ones)}


@dataclass(frozen=True)
class LinkPatternB:
    n: int
    m: int
    arcs: tuple[tuple[int, int], ...]
    labeled_verticals: dict = field(hash=False)
    dotted_pairs: tuple[tuple[int, int], ...]
    circled_ones: tuple[int, ...]
    circled_twos: tuple[int, ...]

    def to_json(self) -> dict:
        return {"case": "B", "m": self.m, "n": self.n,
                "arcs": [list(a) for a in self.arcs],
                "verticals": {str(k): v for k, v in sorted(self.labeled_verticals.items())},
                "dotted": [list(d) for d in self.dotted_pairs],
                "circled_ones": list(self.circled_ones),
                "circled_twos": list(self.circled_twos)}


def link_pattern_A(alpha: str) -> LinkPatternA:
    arcs, ones, twos = match_arcs(alpha)
    from_right = twos[::-1]
    o = sorted(from_right[0::2])
    e = sorted(from_right[1::2])
    return LinkPatternA(len(alpha), tuple(arcs), tuple(o), tuple(e), tuple(ones))


def link_pattern_B(alpha: str, m: int) -> LinkPatternB:
    if m < 1:
        raise ValueError("m must be a positive integer")
    arcs, ones, twos = match_arcs(alpha)
    from_right = twos[::-1]
    verticals = {pos: m - j for j, pos in enumerate(from_right[:m])}
    rest = from_right[m:]
    dotted = [(rest[k + 1], rest[k]) for k in range(0, len(rest) - 1, 2)]
    circled = [rest[-1]] if len(rest) % 2 else []
    return LinkPatternB(len(alpha), m, tuple(arcs), verticals,
                        tuple(sorted(dotted)), tuple(ones), tuple(circled))


def link_pattern(alpha: str, case: Case):
    return link_pattern_A(alpha) if case.kind == "A" else link_pattern_B(alpha, case.m)


# A block is (positions, kind, coefficient of the flipped letters).
# Unflipped letters are those of the string itself with coefficient 1.
Block = tuple[tuple[int, ...], str, Laurent]


def blocks(alpha: str, case: Case) -> list[Block]:
    """The non-trivial blocks of the link pattern of alpha with their flip weights."""
    lp = link_pattern(alpha, case)
    out: list[Block] = [((i, j), "arc", T ** -1) for i, j in lp.arcs]
    if case.kind == "A":
        out += [((i,), "o", TN ** -1) for i in lp.o_marks]
        out += [((i,), "e", T ** -1 * TN) for i in lp.e_marks]
    else:
        m = case.m
        for i, p in lp.labeled_verticals.items():
            out.append(((i,), f"v{p}", T ** -p * (-1) ** (m - p)))
        out += [(pair, "dot", T ** -1) for pair in lp.dotted_pairs]
    return sorted(out, key=lambda b: b[0])


def varpi(beta: str, case: Case) -> ModuleVector:
    """Expansion of the tensor product of the blocks of beta."""
    acc = {beta: ONE}
    for pos, _, w in blocks(beta, case):
        nxt = dict(acc)
        for s, c in acc.items():
            letters = list(s)
            for p in pos:
                letters[p - 1] = "1" if letters[p - 1] == "2" else "2"
            nxt["".join(letters)] = c * w
        acc = nxt
    return ModuleVector(acc)


def varpi_A(beta: str) -> ModuleVector:
    return varpi(beta, CASE_A)


def varpi_B(beta: str, m: int) -> ModuleVector:
    return varpi(beta, case_b(m))


def p_minus_closed_form(alpha: str, beta: str, case: Case) -> Laurent:
    """The m_alpha coefficient of varpi(beta), from flip counts alone.

    Returns 0 unless alpha is beta with some blocks flipped as a whole.
    """
    if len(alpha) != len(beta):
        raise ValueError("strings must have the same length")
    bl = blocks(beta, case)
    covered = {p for pos, _, _ in bl for p in pos}
    if any(alpha[p] != beta[p] for p in range(len(beta)) if p + 1 not in covered):
        return Laurent()
    d = d_e = d_o = 0
    d_p: dict[int, int] = {}
    for pos, kind, _ in bl:
        a = "".join(alpha[p - 1] for p in pos)
        b = "".join(beta[p - 1] for p in pos)
        if a == b:
            continue
        if a != flip(b):
            return Laurent()
        if kind in ("arc", "dot"):
            d += 1
        elif kind == "o":
            d_o += 1
        elif kind == "e":
            d_e += 1
        else:
            p = int(kind[1:])
            d_p[p] = d_p.get(p, 0) + 1
    if case.kind == "A":
        return Laurent.mono(-d - d_e, -d_o + d_e)
    m = case.m
    sign = (-1) ** sum((m - p) * k for p, k in d_p.items())
    return Laurent.mono(-(d + sum(p * k for p, k in d_p.items())), 0, sign)


def p_minus_closed_form_A(alpha: str, beta: str) -> Laurent:
    return p_minus_closed_form(alpha, beta, CASE_A)


def p_minus_closed_form_B(alpha: str, beta: str, m: int) -> Laurent:
    return p_minus_closed_form(alpha, beta, case_b(m))


def _strip(coeff: Laurent, alpha: str, beta: str, case: Case) -> Laurent:
    if not coeff:
        return coeff
    return coeff * bold_t(beta, case) * bold_t(alpha, case) ** -1


def p_minus_A(alpha: str, beta: str) -> Laurent:
    """P^{A,-}_{alpha,beta} itself, with the length prefactor removed."""
    return _strip(p_minus_closed_form_A(alpha, beta), alpha, beta, CASE_A)


def p_minus_B(alpha: str, beta: str, m: int) -> Laurent:
    case = case_b(m)
    return _strip(p_minus_closed_form_B(alpha, beta, m), alpha, beta, case)
