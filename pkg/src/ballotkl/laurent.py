"""Sparse integer Laurent polynomials in ``t`` and ``tN``.

A polynomial is stored as a map ``(i, j) -> c`` meaning ``c * t**i * tN**j``.
Case B values (``tN = t**m``) simply never carry a nonzero ``j``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

__all__ = [
    "Case", "CASE_A", "case_b", "Laurent",
    "T", "TN", "ONE", "ZERO", "bracket", "angle", "in_gamma_minus",
]


@dataclass(frozen=True)
class Case:
    """Hecke parameter regime: ``A`` (t, tN independent) or ``B`` (tN = t**m)."""
    kind: str
    m: int | None = None

    def __post_init__(self):
        if self.kind not in ("A", "B"):
            raise ValueError(f"unknown case {self.kind!r}")
        if (self.kind == "B") != (self.m is not None):
            raise ValueError("m is required for case B and forbidden for case A")
        if self.m is not None and self.m < 1:
            raise ValueError("m must be a positive integer")

    @property
    def tN(self) -> "Laurent":
        return TN if self.kind == "A" else Laurent.mono(self.m)

    def __str__(self):
        return "A" if self.kind == "A" else f"B(m={self.m})"


CASE_A = Case("A")


def case_b(m: int) -> Case:
    return Case("B", m)


class Laurent:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        self._terms = {k: int(c) for k, c in (terms or {}).items() if c}
        self._hash = None

    @classmethod
    def const(cls, c: int) -> "Laurent":
        return cls({(0, 0): c})

    @classmethod
    def mono(cls, i: int = 0, j: int = 0, c: int = 1) -> "Laurent":
        return cls({(i, j): c})

    @classmethod
    def _lift(cls, other) -> "Laurent":
        if isinstance(other, Laurent):
            return other
        if isinstance(other, int):
            return cls.const(other)
        return NotImplemented

    # -- container-ish access -------------------------------------------
    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        return iter(sorted(self._terms.items()))

    def __getitem__(self, exp: tuple[int, int]) -> int:
        return self._terms.get(exp, 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_case_b(self) -> bool:
        return all(j == 0 for _, j in self._terms)

    # -- ring operations --------------------------------------------------
    def __add__(self, other):
        other = Laurent._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return Laurent(out)

    __radd__ = __add__

    def __neg__(self):
        return Laurent({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = Laurent._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = Laurent._lift(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return Laurent(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial():
                raise ValueError("only monomials have Laurent inverses")
            ((i, j), c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial coefficient must be a unit")
            return Laurent({(i * n, j * n): c ** -n})
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        other = Laurent._lift(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- substitutions ----------------------------------------------------
    def bar(self) -> "Laurent":
        """t -> 1/t and tN -> 1/tN."""
        return Laurent({(-i, -j): c for (i, j), c in self._terms.items()})

    def specialize(self, m: int) -> "Laurent":
        """Substitute tN = t**m."""
        out: dict[tuple[int, int], int] = {}
        for (i, j), c in self._terms.items():
            k = (i + m * j, 0)
            out[k] = out.get(k, 0) + c
        return Laurent(out)

    def swap_tN(self) -> "Laurent":
        """Substitute tN -> t/tN (an involution)."""
        return Laurent({(i + j, -j): c for (i, j), c in self._terms.items()})

    def in_gamma_minus(self, allow_one: bool = False) -> bool:
        """True iff every monomial lies strictly below 1 in the lex order.

        The order compares the t-exponent first and the tN-exponent second,
        which covers both cases since case B values have no tN part.
        """
        for (i, j) in self._terms:
            if (i, j) == (0, 0) and allow_one:
                continue
            if not (i < 0 or (i == 0 and j < 0)):
                return False
        return True

    def gamma_split(self) -> tuple["Laurent", "Laurent", "Laurent"]:
        """Split into (Gamma_+ part, constant part, Gamma_- part)."""
        plus, one, minus = {}, {}, {}
        for (i, j), c in self._terms.items():
            if (i, j) == (0, 0):
                one[i, j] = c
            elif i > 0 or (i == 0 and j > 0):
                plus[i, j] = c
            else:
                minus[i, j] = c
        return Laurent(plus), Laurent(one), Laurent(minus)

    def exact_div(self, d: "Laurent") -> "Laurent":
        """Divide by a polynomial in t alone whose leading coefficient is a unit.

        Raises ValueError when the division leaves a remainder.
        """
        if not d or not d.is_case_b():
            raise ValueError("divisor must be a nonzero polynomial in t alone")
        dterms = {i: c for (i, _), c in d._terms.items()}
        dlo, dhi = min(dterms), max(dterms)
        lead = dterms[dhi]
        if lead not in (1, -1):
            raise ValueError("divisor leading coefficient must be +-1")
        by_j: dict[int, dict[int, int]] = {}
        for (i, j), c in self._terms.items():
            by_j.setdefault(j, {})[i] = c
        out: dict[tuple[int, int], int] = {}
        for j, rem in by_j.items():
            floor = min(rem) - dlo
            while rem:
                top = max(rem)
                if top - dhi < floor:
                    raise ValueError(f"{self} is not divisible by {d}")
                q = rem[top] * lead
                shift = top - dhi
                out[shift, j] = q
                for di, dc in dterms.items():
                    k = di + shift
                    v = rem.get(k, 0) - q * dc
                    if v:
                        rem[k] = v
                    else:
                        rem.pop(k, None)
        return Laurent(out)

    # -- formatting -------------------------------------------------------
    def sorted_terms(self) -> list[tuple[tuple[int, int], int]]:
        return sorted(self._terms.items(), key=lambda kv: (kv[0][0], kv[0][1]))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in self.sorted_terms():
            factors = []
            if i:
                factors.append("t" if i == 1 else f"t^{i}")
            if j:
                factors.append("tN" if j == 1 else f"tN^{j}")
            body = "*".join(factors)
            mag = abs(c)
            if not body:
                term = str(mag)
            elif mag == 1:
                term = body
            else:
                term = f"{mag}*{body}"
            parts.append(("-" if c < 0 else "+", term))
        sign, first = parts[0]
        text = ("-" if sign == "-" else "") + first
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text

    def __repr__(self):
        return f"Laurent({str(self)!r})"

    def to_json(self) -> list[list[int]]:
        return [[i, j, c] for (i, j), c in self.sorted_terms()]

    @classmethod
    def from_json(cls, triples) -> "Laurent":
        out: dict[tuple[int, int], int] = {}
        for i, j, c in triples:
            out[i, j] = out.get((i, j), 0) + c
        return cls(out)


ZERO = Laurent()
ONE = Laurent.const(1)
T = Laurent.mono(1, 0)
TN = Laurent.mono(0, 1)


def bracket(m: int) -> Laurent:
    """The t-integer [m] = (t^m - t^-m)/(t - 1/t)."""
    if m < 0:
        return -bracket(-m)
    return Laurent({(k, 0): 1 for k in range(1 - m, m, 2)})


def angle(m: int) -> Laurent:
    """<0> = 1 and <m> = t^m + t^-m."""
    if m < 0:
        raise ValueError("angle is defined for m >= 0")
    if m == 0:
        return ONE
    return Laurent({(m, 0): 1, (-m, 0): 1})


def in_gamma_minus(p: Laurent, case: Case | None = None, allow_one: bool = False) -> bool:
    if case is not None and case.kind == "B" and not p.is_case_b():
        raise ValueError("case B polynomials carry no tN")
    return p.in_gamma_minus(allow_one=allow_one)
