"""Brute-force model of the hyperoctahedral group, used as a test oracle.

Elements are signed permutations stored as tuples (the window
``w(1), ..., w(N)``).  For i < N the generator s_i swaps positions i and i+1;
s_N negates the last entry.  Right multiplication by s_i acts on positions.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "MAX_N", "identity", "generator", "mul_gen", "evaluate", "Group",
    "group", "LengthTriple", "length_triple", "bruhat_leq_oracle",
    "act_on_string", "min_coset_reps", "is_min_coset_rep", "subword_products",
]

MAX_N = 5


def identity(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def mul_gen(w: tuple[int, ...], i: int) -> tuple[int, ...]:
    """w * s_i."""
    n = len(w)
    if not 1 <= i <= n:
        raise ValueError(f"generator index {i} out of range for N={n}")
    v = list(w)
    if i < n:
        v[i - 1], v[i] = v[i], v[i - 1]
    else:
        v[-1] = -v[-1]
    return tuple(v)


def generator(n: int, i: int) -> tuple[int, ...]:
    return mul_gen(identity(n), i)


def evaluate(word, n: int) -> tuple[int, ...]:
    w = identity(n)
    for i in word:
        w = mul_gen(w, i)
    return w


@dataclass(frozen=True)
class LengthTriple:
    l: int
    l_prime: int
    l_N: int


class Group:
    """All 2^N N! elements with one shortest word each (found by BFS)."""

    def __init__(self, n: int):
        if n < 1 or n > MAX_N:
            raise ValueError(f"oracle supports 1 <= N <= {MAX_N}")
        self.n = n
        words = {identity(n): ()}
        queue = deque([identity(n)])
        while queue:
            w = queue.popleft()
            for i in range(1, n + 1):
                v = mul_gen(w, i)
                if v not in words:
                    words[v] = words[w] + (i,)
                    queue.append(v)
        self.words = words

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def word(self, w) -> tuple[int, ...]:
        return self.words[tuple(w)]

    def length(self, w) -> int:
        return len(self.words[tuple(w)])


@lru_cache(maxsize=None)
def group(n: int) -> Group:
    return Group(n)


def length_triple(w) -> LengthTriple:
    w = tuple(w)
    word = group(len(w)).word(w)
    ln = sum(1 for i in word if i == len(w))
    return LengthTriple(len(word), len(word) - ln, ln)


def subword_products(word, n: int) -> set[tuple[int, ...]]:
    """Every element obtainable as a subexpression of ``word``."""
    out = {identity(n)}
    for i in word:
        out |= {mul_gen(w, i) for w in out}
    return out


def bruhat_leq_oracle(u, v, word=None) -> bool:
    """u <= v in Bruhat order, via subexpressions of a reduced word of v."""
    u, v = tuple(u), tuple(v)
    n = len(v)
    if word is None:
        word = group(n).word(v)
    return u in subword_products(word, n)


def act_on_string(w, n: int) -> str:
    """Image of the base string 1..1 under w, read as a string in {1,2}^N.

    The window entry w(k) carries a sign; position |w(k)| of the result is 2
    exactly when w(k) < 0.
    """
    out = ["1"] * n
    for x in w:
        if x < 0:
            out[-x - 1] = "2"
    return "".join(out)


def is_min_coset_rep(w) -> bool:
    """No right descent among s_1..s_{N-1}."""
    w = tuple(w)
    g = group(len(w))
    lw = g.length(w)
    return all(g.length(mul_gen(w, i)) > lw for i in range(1, len(w)))


def min_coset_reps(n: int) -> list[tuple[int, ...]]:
    return [w for w in group(n) if is_min_coset_rep(w)]
