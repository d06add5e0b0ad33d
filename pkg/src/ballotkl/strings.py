"""Binary strings, lattice paths, shifted diagrams and coset words.

A string ``alpha`` in ``{1,2}^N`` is stored as a plain ``str`` such as
``"221121"``.  The sign ``eps`` (``+1`` or ``-1``) is always passed
explicitly.

Path conventions: reading letters left to right, for ``eps=+1`` a ``1`` is an
up step and a ``2`` a down step; for ``eps=-1`` the steps are swapped.  The
path starts at height 0.  The diagram of ``(alpha, +1)`` is the set of lattice
points ``(i, j)`` with ``i + j`` odd lying strictly between the path and the
all-up path; for ``eps=-1`` it is the mirror image below the path.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

__all__ = [
    "PLUS", "MINUS", "check_string", "check_sign", "all_strings", "flip",
    "heights", "Diagram", "diagram", "box_count", "anchors", "coset_word",
    "bruhat_leq", "skew", "string_from_boxes", "n_twos", "lengths",
    "sign_str", "parse_sign",
]

PLUS = 1
MINUS = -1


def check_string(alpha: str, n: int | None = None) -> str:
    if not alpha or any(c not in "12" for c in alpha):
        raise ValueError(f"not a binary string over {{1,2}}: {alpha!r}")
    if n is not None and len(alpha) != n:
        raise ValueError(f"expected length {n}, got {alpha!r}")
    return alpha


def check_sign(eps: int) -> int:
    if eps not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {eps!r}")
    return eps


def parse_sign(text: str) -> int:
    table = {"+": 1, "plus": 1, "+1": 1, "1": 1, "-": -1, "minus": -1, "-1": -1}
    try:
        return table[text.strip().lower()]
    except KeyError:
        raise ValueError(f"unknown sign {text!r}") from None


def sign_str(eps: int) -> str:
    return "+" if check_sign(eps) == 1 else "-"


def all_strings(n: int) -> list[str]:
    """All strings of length n in lexicographic order (1 < 2)."""
    if n < 1:
        raise ValueError("N must be at least 1")
    return ["".join(p) for p in product("12", repeat=n)]


def flip(alpha: str) -> str:
    return alpha.translate(str.maketrans("12", "21"))


def n_twos(alpha: str) -> int:
    return alpha.count("2")


def heights(alpha: str, eps: int = PLUS) -> list[int]:
    """Path heights h(0), ..., h(N)."""
    check_sign(eps)
    up = "1" if eps == PLUS else "2"
    h = [0]
    for c in alpha:
        h.append(h[-1] + (1 if c == up else -1))
    return h


@lru_cache(maxsize=None)
def _boxes_plus(alpha: str) -> frozenset[tuple[int, int]]:
    h = heights(alpha, PLUS)
    out = set()
    for i in range(1, len(alpha) + 1):
        for j in range(h[i] + 1, i):
            if (i + j) % 2:
                out.add((i, j))
    return frozenset(out)


def _boxes(alpha: str, eps: int) -> frozenset[tuple[int, int]]:
    check_string(alpha)
    check_sign(eps)
    plus = _boxes_plus(alpha)
    if eps == PLUS:
        return plus
    return frozenset((i, -j) for i, j in plus)


@dataclass(frozen=True)
class Diagram:
    """Boxes of a shifted diagram (or of a skew region) of width ``n``."""
    n: int
    eps: int
    boxes: frozenset

    def __len__(self):
        return len(self.boxes)

    def __contains__(self, box):
        return box in self.boxes

    def __iter__(self):
        return iter(sorted(self.boxes))

    @property
    def anchors(self) -> list[tuple[int, int]]:
        return sorted(b for b in self.boxes if b[0] == self.n)

    def sorted_boxes(self) -> list[tuple[int, int]]:
        return sorted(self.boxes)

    def to_text(self) -> str:
        """One ``i j`` pair per line, sorted."""
        return "".join(f"{i} {j}\n" for i, j in self.sorted_boxes())


def diagram(alpha: str, eps: int = PLUS) -> Diagram:
    return Diagram(len(alpha), eps, _boxes(alpha, eps))


def box_count(alpha: str, eps: int = PLUS) -> int:
    """|alpha|: the sum over 2s at position p of N - p + 1."""
    check_string(alpha)
    check_sign(eps)
    n = len(alpha)
    return sum(n - p for p, c in enumerate(alpha) if c == "2")


def anchors(alpha: str, eps: int = PLUS) -> list[tuple[int, int]]:
    return diagram(alpha, eps).anchors


def lengths(alpha: str) -> tuple[int, int, int]:
    """(l, l', l_N) of the minimal coset representative of alpha."""
    l = box_count(alpha)
    ln = n_twos(alpha)
    return l, l - ln, ln


def coset_word(alpha: str, eps: int = PLUS) -> list[int]:
    """Reduced word w with T_w m_{1..1} = m_alpha, read left to right.

    Each anchor box starts a diagonal run of k boxes heading down-left
    (up-left for eps=-1) which contributes s_{N-k+1} ... s_N.  Runs are
    concatenated from the shortest to the longest, so the longest run acts
    first on m_{1..1}.
    """
    d = diagram(alpha, eps)
    n = d.n
    step = -1 if eps == PLUS else 1
    runs = []
    for (_, j) in d.anchors:
        k = 0
        while (n - k, j + step * k) in d.boxes:
            k += 1
        runs.append(k)
    word: list[int] = []
    for k in sorted(runs):
        word.extend(range(n - k + 1, n + 1))
    return word


def bruhat_leq(alpha: str, beta: str, eps: int = PLUS) -> bool:
    """alpha <= beta, i.e. the diagram of alpha sits inside that of beta."""
    check_string(alpha)
    check_string(beta)
    if len(alpha) != len(beta):
        raise ValueError("strings must have the same length")
    return _boxes(alpha, eps) <= _boxes(beta, eps)


def skew(alpha: str, beta: str, eps: int = PLUS) -> Diagram:
    """The region diagram(beta) minus diagram(alpha); requires alpha <= beta."""
    if not bruhat_leq(alpha, beta, eps):
        raise ValueError(f"{alpha} is not below {beta}; the skew region is undefined")
    return Diagram(len(alpha), eps, _boxes(beta, eps) - _boxes(alpha, eps))


def string_from_boxes(boxes, n: int, eps: int = PLUS) -> str:
    """Recover the string whose diagram is ``boxes`` (inverse of ``diagram``)."""
    check_sign(eps)
    pts = {(i, eps * j) for i, j in boxes}
    # lowest box of column i sits at h(i)+1 when the column is nonempty
    h = [0]
    for i in range(1, n + 1):
        col = [j for (x, j) in pts if x == i]
        h.append(min(col) - 1 if col else i)
    letters = []
    for i in range(1, n + 1):
        d = h[i] - h[i - 1]
        if d not in (1, -1):
            raise ValueError("box set is not a shifted diagram")
        letters.append("1" if d == 1 else "2")
    alpha = "".join(letters)
    if _boxes(alpha, PLUS) != frozenset(pts):
        raise ValueError("box set is not a shifted diagram")
    return alpha
