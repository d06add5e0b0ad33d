"""Exhaustive cross-checks between the four constructions of P.

Every suite returns a :class:`Report`; a suite passes when it records no
violations.  Suites run over all string lengths 1..n.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .ballot import check_inversion, configuration_weight, enumerate_conf, q_polynomial
from .hecke import (
    HeckeAction, canonical_basis, factorized_A_minus, factorized_tilde_C,
    p_polynomial, p_table,
)
from .laurent import CASE_A, Case, Laurent, ONE, T, TN
from .linkpattern import varpi
from .strings import MINUS, PLUS, all_strings, box_count, bruhat_leq, flip
from .tree import (
    capacities, configuration_to_labelling, enumerate_labellings,
    labelling_to_configuration, labelling_weight, r_polynomial,
)

__all__ = ["Report", "SUITES", "run_suite", "inversion_ballot", "inversion_kl",
           "q_equals_r", "varpi_equals_canonical", "factorization",
           "recurrences", "bijection_roundtrip"]


@dataclass
class Report:
    suite: str
    n: int
    case: Case
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def fail(self, *item) -> None:
        self.violations.append(item)

    def summary(self) -> str:
        verdict = "PASS" if self.ok else "FAIL"
        return (f"{self.suite} n<={self.n} case={self.case}: {verdict} "
                f"({self.checked} checked, {len(self.violations)} violations)")

    def to_json(self) -> dict:
        return {"suite": self.suite, "n": self.n, "case": str(self.case),
                "checked": self.checked, "ok": self.ok,
                "violations": [[str(x) for x in v] for v in self.violations]}


def _pairs(n: int, eps: int = PLUS):
    strings = all_strings(n)
    for b in strings:
        for a in strings:
            if bruhat_leq(a, b, eps):
                yield a, b


def inversion_ballot(n: int, case: Case = CASE_A) -> Report:
    """sum_beta Q^I Q^II (-1)^{|beta|+|gamma|} = delta on the minus side."""
    rep = Report("inversion-ballot", n, case)
    for k in range(1, n + 1):
        r = check_inversion(k, case, eps=MINUS)
        rep.checked += r.pairs_checked
        rep.violations += r.violations
    return rep


def inversion_kl(n: int, case: Case = CASE_A) -> Report:
    """sum_alpha (-1)^{|alpha|+|beta|} P^-_{alpha,beta} P^+_{flip alpha,gamma} = delta.

    The identity pairs beta with flip(beta) on the plus side.
    """
    rep = Report("inversion-KL", n, case)
    for k in range(1, n + 1):
        pm = p_table(k, MINUS, case)
        pp = p_table(k, PLUS, case)
        strings = all_strings(k)
        for b in strings:
            for g in strings:
                rep.checked += 1
                total = Laurent()
                for a in strings:
                    x, y = pm.get((a, b)), pp.get((flip(a), g))
                    if x and y:
                        total = total + x * y * (-1) ** (box_count(a) + box_count(b))
                want = ONE if g == flip(b) else Laurent()
                if total != want:
                    rep.fail(b, g, total)
    return rep


def q_equals_r(n: int, case: Case = CASE_A) -> Report:
    """Ballot tilings (Rule I, plus side) and tree labellings give the same sum."""
    rep = Report("Q-equals-R", n, case)
    for k in range(1, n + 1):
        for a, b in _pairs(k):
            rep.checked += 1
            q = q_polynomial(a, b, PLUS, "I", case)
            r = r_polynomial(a, b, case)
            if q != r:
                rep.fail(a, b, q, r)
    return rep


def varpi_equals_canonical(n: int, case: Case = CASE_A) -> Report:
    """The link-pattern expansion is the canonical basis of M^-."""
    rep = Report("varpi-equals-canonical", n, case)
    action = HeckeAction(MINUS, case)
    for k in range(1, n + 1):
        for b in all_strings(k):
            rep.checked += 1
            if varpi(b, case) != canonical_basis(b, action):
                rep.fail(b)
    return rep


def factorization(n: int, case: Case = CASE_A) -> Report:
    """Both product formulas (case A only; ``case`` is ignored).

    The plain product along the coset word gives varpi on M^-, and the
    capacity-weighted product gives the canonical basis of M^+.
    """
    rep = Report("factorization", n, CASE_A)
    plus = HeckeAction(PLUS, CASE_A)
    for k in range(1, n + 1):
        for a in all_strings(k):
            rep.checked += 1
            if factorized_A_minus(a) != varpi(a, CASE_A):
                rep.fail("minus", a)
            try:
                ok = factorized_tilde_C(a, PLUS) == canonical_basis(a, plus)
            except ValueError:
                ok = False
            if not ok:
                rep.fail("tilde", a)
    return rep


def _p(a: str, b: str, case: Case) -> Laurent:
    return ONE if a == "" else p_polynomial(a, b, PLUS, case)


def recurrences(n: int, case: Case = CASE_A) -> Report:
    """Deletion of a leaf pair 12, and (case A) of a trailing unpaired 1.

    With v1 = v12v' and w1 = w12w' (pair at positions i, i+1) and c1 the
    number of 1s in v1[:i] minus those in w1[:i]:
        P(v1, w1) = t^{2 c1} P(vv', ww') + P(v21v', w1).
    With v2 = v + "1", w2 = w + "1" and c2 = #1(v2) - #1(w2), in case A:
        P(v2, w2) = (-tN^2)^{c2} P(v, w)|_{tN -> t/tN} + P(v + "2", w2).
    """
    rep = Report("recurrences", n, case)
    for k in range(2, n + 1):
        for v1, w1 in _pairs(k):
            for i in range(1, k):
                if v1[i - 1:i + 1] != "12" or w1[i - 1:i + 1] != "12":
                    continue
                rep.checked += 1
                c1 = v1[:i].count("1") - w1[:i].count("1")
                vv, ww = v1[:i - 1] + v1[i + 1:], w1[:i - 1] + w1[i + 1:]
                other = v1[:i - 1] + "21" + v1[i + 1:]
                rhs = T ** (2 * c1) * _p(vv, ww, case) + _p(other, w1, case)
                if _p(v1, w1, case) != rhs:
                    rep.fail("pair", v1, w1, i)
            if case.kind != "A" or v1[-1] != "1" or w1[-1] != "1":
                continue
            rep.checked += 1
            c2 = v1.count("1") - w1.count("1")
            v, w = v1[:-1], w1[:-1]
            rhs = (-(TN ** 2)) ** c2 * _p(v, w, case).swap_tN() + _p(v + "2", w1, case)
            if _p(v1, w1, case) != rhs:
                rep.fail("tail", v1, w1)
    return rep


def bijection_roundtrip(n: int, case: Case = CASE_A) -> Report:
    """Labellings <-> Rule-I tilings: inverse maps, equal weights, onto."""
    rep = Report("bijection-roundtrip", n, case)
    for k in range(1, n + 1):
        for a, b in _pairs(k):
            tree = capacities(b, a, case)
            confs = set(enumerate_conf(a, b, PLUS, "I", case))
            seen = set()
            for lab in enumerate_labellings(tree):
                rep.checked += 1
                conf = labelling_to_configuration(tree, lab)
                if conf not in confs:
                    rep.fail("not-valid", a, b, lab)
                    continue
                seen.add(conf)
                if configuration_to_labelling(tree, conf) != tuple(lab):
                    rep.fail("roundtrip", a, b, lab)
                if configuration_weight(conf, case, "I") != labelling_weight(tree, lab):
                    rep.fail("weight", a, b, lab)
            if seen != confs:
                rep.fail("not-onto", a, b, len(confs) - len(seen))
    return rep


SUITES = {
    "inversion-ballot": inversion_ballot,
    "inversion-KL": inversion_kl,
    "Q-equals-R": q_equals_r,
    "varpi-equals-canonical": varpi_equals_canonical,
    "factorization": factorization,
    "recurrences": recurrences,
    "bijection-roundtrip": bijection_roundtrip,
}


def run_suite(name: str, n: int, case: Case = CASE_A) -> Report:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}") from None
    return fn(n, case)
