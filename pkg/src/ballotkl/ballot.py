"""Ballot strips, their stacking rules, and the generating functions Q.

A ballot strip is a run of boxes, one per column, whose centres follow a path
with steps (1, +1) or (1, -1) that never goes below its starting height.  A
strip with k boxes that ends l' above its start has length (l, l') with
2l + l' = k - 1.

Configurations tile a skew region exactly.  They are generated canonically:
the lowest (then leftmost) uncovered box is always the first box of the next
strip, so every tiling is produced once.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .laurent import CASE_A, Case, Laurent, ONE, T, TN
from .strings import PLUS, all_strings, box_count, bruhat_leq, check_sign, skew

__all__ = [
    "Strip", "Configuration", "RuleOptions", "DEFAULT_RULES", "tilings",
    "rule0_ok", "validate_rule_I", "validate_rule_II", "enumerate_conf",
    "strip_weight", "configuration_weight", "q_polynomial", "q_table",
    "InversionReport", "check_inversion",
]

Box = tuple[int, int]


@dataclass(frozen=True, order=True)
class Strip:
    """A placed strip, given by its boxes from left to right."""
    boxes: tuple[Box, ...]

    @property
    def start(self) -> Box:
        return self.boxes[0]

    @property
    def end(self) -> Box:
        return self.boxes[-1]

    @property
    def l_prime(self) -> int:
        return self.end[1] - self.start[1]

    @property
    def l(self) -> int:
        return (len(self.boxes) - 1 - self.l_prime) // 2

    @property
    def shape(self) -> tuple[int, int]:
        return self.l, self.l_prime

    def __len__(self):
        return len(self.boxes)

    def to_json(self) -> list[int]:
        """[l, l', start_i, start_j] plus the full trace."""
        return [self.l, self.l_prime, self.start[0], self.start[1],
                [list(b) for b in self.boxes]]


@dataclass(frozen=True)
class Configuration:
    n: int
    strips: frozenset

    def __iter__(self):
        return iter(sorted(self.strips))

    def __len__(self):
        return len(self.strips)

    def owner(self) -> dict[Box, Strip]:
        return {b: s for s in self.strips for b in s.boxes}

    def boxes(self) -> set[Box]:
        return {b for s in self.strips for b in s.boxes}

    def to_json(self) -> list:
        return [s.to_json() for s in self]


@lru_cache(maxsize=None)
def _strips_from(start: Box, region: frozenset, n: int) -> tuple[Strip, ...]:
    """All strips inside ``region`` starting at ``start`` that obey Rule 0."""
    x0, y0 = start
    out = []
    path = [start]

    def grow():
        x, y = path[-1]
        if y == y0 or x == n:
            out.append(Strip(tuple(path)))
        for dy in (1, -1):
            nb = (x + 1, y + dy)
            if nb[1] >= y0 and nb in region:
                path.append(nb)
                grow()
                path.pop()

    grow()
    return tuple(out)


def rule0_ok(strip: Strip, n: int) -> bool:
    return strip.l_prime == 0 or strip.end[0] == n


@lru_cache(maxsize=None)
def tilings(region: frozenset, n: int) -> tuple[Configuration, ...]:
    """Every tiling of ``region`` by strips obeying Rule 0."""
    out: list[Configuration] = []
    chosen: list[Strip] = []

    def rec(free: frozenset):
        if not free:
            out.append(Configuration(n, frozenset(chosen)))
            return
        b = min(free, key=lambda p: (p[1], p[0]))
        for s in _strips_from(b, free, n):
            chosen.append(s)
            rec(free.difference(s.boxes))
            chosen.pop()

    rec(region)
    return tuple(out)


@dataclass(frozen=True)
class RuleOptions:
    """Readings of the stacking rules where the wording admits more than one.

    outside_I, outside_II: how Rule I(a) / II(a) treat a neighbour box that
        lies outside the skew region.  ``"ignore"`` skips it, ``"all"``
        counts it as a violation, and ``"ambient"`` counts it only when it
        lies in the full staircase (columns 1..N, |j| < i).
    rule_Ib_per_shape: in case B count strips per (l, l') rather than per l'.
    rule_IIb_all_boxes: "just above D" means every box of D has the partner
        strip directly above it, rather than at least one box.
    """
    outside_I: str = "columns"
    outside_II: str = "columns"
    rule_Ib_per_shape: bool = True
    rule_IIb_all_boxes: bool = False


DEFAULT_RULES = RuleOptions()


def _outside_violation(boxes, region, n: int, mode: str) -> bool:
    if mode == "ignore":
        return False
    out = [b for b in boxes if b not in region]
    if mode == "all":
        return bool(out)
    if mode == "ambient":
        return any(1 <= x <= n and abs(y) < x for x, y in out)
    if mode == "columns":
        return any(1 <= x <= n for x, y in out)
    if mode == "left":
        return any(x <= n for x, y in out)
    raise ValueError(f"unknown outside mode {mode!r}")


def _rule_Ia(conf: Configuration, region: frozenset, opts: RuleOptions) -> bool:
    owner = conf.owner()
    for top in conf.strips:
        below = [(x, y - 2) for x, y in top.boxes]
        holders = {owner.get(b) for b in below if b in region}
        holders.discard(None)
        if not holders:
            continue
        if len(holders) > 1:
            return False
        if _outside_violation(below, region, conf.n, opts.outside_I):
            return False
    return True


def _rule_IIa(conf: Configuration, region: frozenset, opts: RuleOptions) -> bool:
    owner = conf.owner()
    for low in conf.strips:
        nbrs = set()
        for x, y in low.boxes:
            nbrs |= {(x, y + 2), (x - 1, y + 1), (x + 1, y + 1)}
        nbrs -= set(low.boxes)
        holders = {owner.get(b) for b in nbrs if b in region}
        holders.discard(None)
        if not holders:
            continue
        if len(holders) > 1:
            return False
        if _outside_violation(nbrs, region, conf.n, opts.outside_II):
            return False
    return True


def _rule_Ib(conf: Configuration, m: int, opts: RuleOptions) -> bool:
    counts: dict = {}
    for s in conf.strips:
        if s.l_prime >= m:
            key = s.shape if opts.rule_Ib_per_shape else s.l_prime
            counts[key] = counts.get(key, 0) + 1
    for key, c in counts.items():
        lp = key[1] if opts.rule_Ib_per_shape else key
        if (lp - m) % 2 or c % 2:
            return False
    return True


def _touches(a: Strip, b: Strip, dy: int, all_boxes: bool) -> bool:
    """Is ``b`` directly above (dy=2) or below (dy=-2) ``a``?"""
    target = set(b.boxes)
    hits = [(x, y + dy) in target for x, y in a.boxes]
    return all(hits) if all_boxes else any(hits)


def _rule_IIb(conf: Configuration, m: int, opts: RuleOptions) -> bool:
    for s in conf.strips:
        l, lp = s.shape
        if lp < m:
            continue
        if (lp - m) % 2 == 0:
            ok = any(o.l_prime == lp + 1 and o.l >= l
                     and _touches(s, o, 2, opts.rule_IIb_all_boxes)
                     for o in conf.strips)
        else:
            ok = any(o.l_prime == lp - 1 and o.l <= l
                     and _touches(s, o, -2, opts.rule_IIb_all_boxes)
                     for o in conf.strips)
        if not ok:
            return False
    return True


def validate_rule_I(conf: Configuration, case: Case, region=None,
                    opts: RuleOptions = DEFAULT_RULES) -> bool:
    region = frozenset(conf.boxes()) if region is None else region
    if not all(rule0_ok(s, conf.n) for s in conf.strips):
        return False
    if not _rule_Ia(conf, region, opts):
        return False
    return case.kind == "A" or _rule_Ib(conf, case.m, opts)


def validate_rule_II(conf: Configuration, case: Case, region=None,
                     opts: RuleOptions = DEFAULT_RULES) -> bool:
    region = frozenset(conf.boxes()) if region is None else region
    if not all(rule0_ok(s, conf.n) for s in conf.strips):
        return False
    if not _rule_IIa(conf, region, opts):
        return False
    return case.kind == "A" or _rule_IIb(conf, case.m, opts)


def enumerate_conf(alpha: str, beta: str, eps: int, rule: str, case: Case,
                   opts: RuleOptions = DEFAULT_RULES) -> list[Configuration]:
    check_sign(eps)
    region = skew(alpha, beta, eps)
    check = validate_rule_I if rule == "I" else validate_rule_II
    if rule not in ("I", "II"):
        raise ValueError(f"unknown rule {rule!r}")
    return [c for c in tilings(region.boxes, region.n)
            if check(c, case, region.boxes, opts)]


def strip_weight(strip: Strip | tuple[int, int], case: Case, rule: str) -> Laurent:
    l, lp = strip.shape if isinstance(strip, Strip) else strip
    sigma = 1 if rule == "I" else -1
    if case.kind == "A":
        if lp % 2 == 0:
            return T ** (2 * l + lp)
        return T ** (2 * l + lp - 1) * TN ** 2 * (-sigma)
    m = case.m
    if lp <= m - 1:
        return T ** (2 * l + 2 * lp) * sigma ** lp
    if (lp - m) % 2 == 0:
        return T ** (m + lp + 2 * l)
    return T ** (m + lp + 2 * l - 1)


def configuration_weight(conf: Configuration, case: Case, rule: str) -> Laurent:
    w = ONE
    for s in conf.strips:
        w = w * strip_weight(s, case, rule)
    return w


def q_polynomial(alpha: str, beta: str, eps: int, rule: str, case: Case,
                 opts: RuleOptions = DEFAULT_RULES) -> Laurent:
    """Sum over valid configurations of the product of strip weights."""
    total = Laurent()
    for c in enumerate_conf(alpha, beta, eps, rule, case, opts):
        total = total + configuration_weight(c, case, rule)
    return total


def q_table(n: int, eps: int, rule: str, case: Case,
            opts: RuleOptions = DEFAULT_RULES) -> dict[tuple[str, str], Laurent]:
    out = {}
    strings = all_strings(n)
    for a in strings:
        for b in strings:
            if bruhat_leq(a, b, eps):
                q = q_polynomial(a, b, eps, rule, case, opts)
                if q:
                    out[a, b] = q
    return out


@dataclass
class InversionReport:
    n: int
    case: Case
    pairs_checked: int
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations


def check_inversion(n: int, case: Case = CASE_A, eps: int = -1,
                    opts: RuleOptions = DEFAULT_RULES) -> InversionReport:
    """sum_beta Q^I_{alpha,beta} Q^II_{beta,gamma} (-1)^{|beta|+|gamma|} = delta."""
    q1 = q_table(n, eps, "I", case, opts)
    q2 = q_table(n, eps, "II", case, opts)
    strings = all_strings(n)
    violations = []
    checked = 0
    for a in strings:
        for g in strings:
            if not bruhat_leq(a, g, eps):
                continue
            checked += 1
            total = Laurent()
            for b in strings:
                x, y = q1.get((a, b)), q2.get((b, g))
                if x and y:
                    sign = (-1) ** (box_count(b) + box_count(g))
                    total = total + x * y * sign
            want = ONE if a == g else Laurent()
            if total != want:
                violations.append((a, g, total))
    return InversionReport(n, case, checked, violations)
