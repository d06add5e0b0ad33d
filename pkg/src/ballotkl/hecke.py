"""The parabolic modules M^+ and M^- and their canonical bases.

Both modules have basis m_alpha indexed by strings of length N.  The
generators act by

* i < N:  T_i m_alpha = eps t^eps m_alpha          if alpha_i = alpha_{i+1}
                      = m_{s_i alpha}              if alpha_i alpha_{i+1} = 12
                      = m_{s_i alpha} + (t - 1/t) m_alpha   if it is 21
* i = N:  T_N m_alpha = m_{s_N alpha}              if alpha_N = 1
                      = m_{s_N alpha} + (tN - 1/tN) m_alpha if alpha_N = 2

with tN = t^m in case B.  The canonical basis C_beta is the unique
bar-invariant vector m_beta + sum_{alpha < beta} c_alpha m_alpha with every
c_alpha strictly below 1 in the lexicographic order.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .laurent import CASE_A, Case, Laurent, ONE, T, bracket
from .strings import (
    PLUS, all_strings, box_count, bruhat_leq, check_sign, check_string,
    coset_word, diagram, lengths,
)
from .vector import ModuleVector, basis

__all__ = [
    "HeckeAction", "bold_t", "bar_module", "canonical_basis",
    "canonical_table", "extract_P", "p_polynomial", "p_table",
    "factorized_A_minus", "capacity_table", "factorized_tilde_C",
    "tilde_C_factors",
]


@dataclass(frozen=True)
class HeckeAction:
    eps: int = PLUS
    case: Case = CASE_A

    def __post_init__(self):
        check_sign(self.eps)

    def param(self, i: int, n: int) -> Laurent:
        """The quadratic-relation parameter of T_i: t, or tN for i = N."""
        return self.case.tN if i == n else T

    def _apply_basis(self, i: int, alpha: str) -> dict[str, Laurent]:
        n = len(alpha)
        if not 1 <= i <= n:
            raise ValueError(f"generator index {i} out of range for N={n}")
        if i < n:
            a, b = alpha[i - 1], alpha[i]
            if a == b:
                return {alpha: Laurent.mono(self.eps) * self.eps}
            swapped = alpha[: i - 1] + b + a + alpha[i + 1:]
            if a == "1":
                return {swapped: ONE}
            return {swapped: ONE, alpha: T - T ** -1}
        tn = self.case.tN
        other = alpha[:-1] + ("2" if alpha[-1] == "1" else "1")
        if alpha[-1] == "1":
            return {other: ONE}
        return {other: ONE, alpha: tn - tn ** -1}

    def apply(self, i: int, v: ModuleVector) -> ModuleVector:
        out: dict[str, Laurent] = {}
        for alpha, c in v.items():
            for beta, d in self._apply_basis(i, alpha).items():
                p = c * d
                out[beta] = out[beta] + p if beta in out else p
        return ModuleVector._raw(out)

    def apply_inv(self, i: int, v: ModuleVector) -> ModuleVector:
        """T_i^{-1} = T_i - (q - 1/q) with q the parameter of T_i."""
        n = len(next(iter(v))) if v else 1
        q = self.param(i, n)
        return self.apply(i, v) - v.scale(q - q ** -1)

    def apply_word(self, word, v: ModuleVector) -> ModuleVector:
        """T_{w_1} ... T_{w_k} v (the rightmost letter acts first)."""
        for i in reversed(list(word)):
            v = self.apply(i, v)
        return v


def bold_t(alpha: str, case: Case) -> Laurent:
    """The monomial t^{l'} tN^{l_N} attached to the coset of alpha."""
    _, lp, ln = lengths(alpha)
    if case.kind == "A":
        return Laurent.mono(lp, ln)
    return Laurent.mono(lp + case.m * ln)


@lru_cache(maxsize=None)
def _bar_basis(alpha: str, action: HeckeAction) -> ModuleVector:
    v = basis("1" * len(alpha))
    for i in reversed(coset_word(alpha)):
        v = action.apply_inv(i, v)
    return v


def bar_module(v: ModuleVector, action: HeckeAction) -> ModuleVector:
    """The bar involution, with bar(m_{1..1}) = m_{1..1} and bar(T_i) = T_i^{-1}."""
    out = ModuleVector()
    for alpha, c in v.items():
        out = out + _bar_basis(alpha, action).scale(c.bar())
    return out


def _descent(beta: str) -> tuple[int, str]:
    """A generator i and a string alpha < beta with m_beta = T_i m_alpha."""
    n = len(beta)
    if beta[-1] == "2":
        return n, beta[:-1] + "1"
    for i in range(1, n):
        if beta[i - 1] == "2" and beta[i] == "1":
            return i, beta[: i - 1] + "12" + beta[i + 1:]
    raise ValueError(f"{beta} has no descent")


_CANON: dict[tuple[str, HeckeAction], ModuleVector] = {}


def canonical_basis(beta: str, action: HeckeAction) -> ModuleVector:
    """The canonical basis vector C_beta of the module selected by ``action``."""
    check_string(beta)
    key = (beta, action)
    if key in _CANON:
        return _CANON[key]
    n = len(beta)
    if beta == "1" * n:
        v = basis(beta)
    else:
        i, alpha = _descent(beta)
        q = action.param(i, n)
        lower = canonical_basis(alpha, action)
        v = action.apply(i, lower) + lower.scale(q ** -1)
        while True:
            bad = [g for g, c in v.items()
                   if g != beta and not c.in_gamma_minus()]
            if not bad:
                break
            g = max(bad, key=lambda s: (box_count(s), s))
            plus, one, _ = v[g].gamma_split()
            mu = one + plus + plus.bar()
            v = v - canonical_basis(g, action).scale(mu)
    _CANON[key] = v
    return v


def canonical_table(n: int, action: HeckeAction) -> dict[str, ModuleVector]:
    return {beta: canonical_basis(beta, action) for beta in all_strings(n)}


def extract_P(C: ModuleVector, alpha: str, beta: str, case: Case) -> Laurent:
    """P_{alpha,beta}: the m_alpha coefficient of C_beta over bold t^{l(alpha)-l(beta)}."""
    c = C[alpha]
    if not c:
        return c
    return c * bold_t(beta, case) * bold_t(alpha, case) ** -1


def p_polynomial(alpha: str, beta: str, eps: int, case: Case) -> Laurent:
    if len(alpha) != len(beta):
        raise ValueError("strings must have the same length")
    if not bruhat_leq(alpha, beta):
        return Laurent()
    return extract_P(canonical_basis(beta, HeckeAction(eps, case)), alpha, beta, case)


def p_table(n: int, eps: int, case: Case) -> dict[tuple[str, str], Laurent]:
    """All nonzero P_{alpha,beta} for strings of length n."""
    out = {}
    action = HeckeAction(eps, case)
    for beta in all_strings(n):
        C = canonical_basis(beta, action)
        for alpha in C:
            out[alpha, beta] = extract_P(C, alpha, beta, case)
    return out


def factorized_A_minus(alpha: str) -> ModuleVector:
    """prod (T_i + t^{-1}) ... (T_N + tN^{-1}) m_{1..1} along the coset word, on M^-."""
    action = HeckeAction(-1, CASE_A)
    n = len(alpha)
    v = basis("1" * n)
    for i in reversed(coset_word(alpha)):
        v = action.apply(i, v) + v.scale(action.param(i, n) ** -1)
    return v


def capacity_table(alpha: str) -> dict[tuple[int, int], int]:
    """r on the boxes of the + diagram: one more than the larger lower neighbour."""
    boxes = diagram(alpha, PLUS).boxes
    r: dict[tuple[int, int], int] = {}
    for (i, j) in sorted(boxes, key=lambda b: (b[1], b[0])):
        r[i, j] = max(r.get((i - 1, j - 1), 0), r.get((i + 1, j - 1), 0)) + 1
    return r


def tilde_C_factors(alpha: str) -> list[tuple[int, int]]:
    """(generator, capacity) pairs of the ordered product, left to right."""
    d = diagram(alpha, PLUS)
    n = d.n
    r = capacity_table(alpha)
    runs = []
    for (_, j) in d.anchors:
        k = 0
        while (n - k, j - k) in d.boxes:
            k += 1
        runs.append((k, j))
    out = []
    for k, j in sorted(runs):
        for q in range(k - 1, -1, -1):
            out.append((n - q, r[n - q, j - q]))
    return out


def factorized_tilde_C(alpha: str, eps: int = PLUS) -> ModuleVector:
    """prod T_i(r) m_{1..1} over the capacity table, case A.

    T_i(p) = T_i + t^{-p}/[p] for i < N and
    T_N(p) = T_N - tN + ([ceil(p/2)]/[p]) (tN t^{floor(p/2)} + tN^{-1} t^{-floor(p/2)}).
    The numerator and a common t-only denominator are carried separately;
    the final division must be exact.
    """
    action = HeckeAction(eps, CASE_A)
    n = len(alpha)
    tn = CASE_A.tN
    num = basis("1" * n)
    den = ONE
    for i, p in reversed(tilde_C_factors(alpha)):
        b = bracket(p)
        if i < n:
            a = T ** -p
        else:
            h = p // 2
            a = bracket(p - h) * (tn * T ** h + tn ** -1 * T ** -h) - b * tn
        num = action.apply(i, num).scale(b) + num.scale(a)
        den = den * b
    if den == ONE:
        return num
    return num.map_coeffs(lambda c: c.exact_div(den))
