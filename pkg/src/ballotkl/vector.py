"""Finitely supported vectors sum c_alpha m_alpha with Laurent coefficients."""
from __future__ import annotations

from typing import Iterable, Mapping

from .laurent import Laurent

__all__ = ["ModuleVector", "basis", "tensor"]


class ModuleVector:
    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[str, Laurent | int] | None = None):
        c = {}
        for k, v in (coeffs or {}).items():
            v = Laurent._lift(v) if not isinstance(v, Laurent) else v
            if v:
                c[k] = v
        self._c = c

    @classmethod
    def _raw(cls, c: dict) -> "ModuleVector":
        out = cls.__new__(cls)
        out._c = {k: v for k, v in c.items() if v}
        return out

    def __getitem__(self, alpha: str) -> Laurent:
        return self._c.get(alpha, Laurent())

    def __contains__(self, alpha):
        return alpha in self._c

    def __iter__(self):
        return iter(sorted(self._c))

    def items(self):
        return sorted(self._c.items())

    def support(self) -> list[str]:
        return sorted(self._c)

    def __len__(self):
        return len(self._c)

    def __bool__(self):
        return bool(self._c)

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out[k] + v if k in out else v
        return ModuleVector._raw(out)

    def __neg__(self):
        return ModuleVector._raw({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, p: Laurent | int) -> "ModuleVector":
        if not isinstance(p, Laurent):
            p = Laurent.const(p)
        return ModuleVector._raw({k: v * p for k, v in self._c.items()})

    __rmul__ = scale

    def map_coeffs(self, f) -> "ModuleVector":
        return ModuleVector._raw({k: f(v) for k, v in self._c.items()})

    def __eq__(self, other):
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __str__(self):
        if not self._c:
            return "0"
        return " + ".join(f"({v})*m_{k}" for k, v in self.items())

    def __repr__(self):
        return f"ModuleVector({self})"

    def to_json(self) -> dict[str, list[list[int]]]:
        return {k: v.to_json() for k, v in self.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, Iterable]) -> "ModuleVector":
        return cls({k: Laurent.from_json(v) for k, v in data.items()})


def basis(alpha: str) -> ModuleVector:
    return ModuleVector._raw({alpha: Laurent.const(1)})


def tensor(factors: Iterable[Mapping[str, Laurent]]) -> ModuleVector:
    """Expand a tensor product of small vectors given as {word: coeff} maps."""
    acc: dict[str, Laurent] = {"": Laurent.const(1)}
    for f in factors:
        nxt: dict[str, Laurent] = {}
        for w1, c1 in acc.items():
            for w2, c2 in f.items():
                k = w1 + w2
                p = c1 * c2
                nxt[k] = nxt[k] + p if k in nxt else p
        acc = nxt
    return ModuleVector(acc)
