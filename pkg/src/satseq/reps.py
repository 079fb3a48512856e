"""Multiplicities of irreducibles in Sym^m S_d (Cayley-Sylvester counting)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import List, Tuple


@lru_cache(maxsize=None)
def box_partitions(d: int, m: int) -> Tuple[int, ...]:
    """Coefficients of the Gaussian binomial [m+d choose m]_q.

    Entry k counts partitions of k into at most m parts, each at most d,
    i.e. monomials of degree m in a_0..a_d whose index sum is k.
    """
    # dp over part sizes 0..d: number of multisets of size m with given sum
    # table[j][k] = multisets of size j from allowed values with sum k
    table = [[0] * (m * d + 1) for _ in range(m + 1)]
    table[0][0] = 1
    for v in range(d + 1):
        for j in range(1, m + 1):
            row, prev = table[j], table[j - 1]
            for k in range(v, m * d + 1):
                row[k] += prev[k - v]
    return tuple(table[m])


def weight_count(d: int, m: int, k: int) -> int:
    if k < 0 or k > m * d:
        return 0
    return box_partitions(d, m)[k]


def multiplicity(d: int, m: int, n: int) -> int:
    """Multiplicity of S_n in Sym^m S_d (number of covariants of degree m, order n)."""
    if d < 0 or m < 0 or n < 0:
        return 0
    diff = m * d - n
    if diff < 0 or diff % 2:
        return 0
    k = diff // 2
    return weight_count(d, m, k) - weight_count(d, m, k - 1)


@dataclass(frozen=True)
class IsotypicDecomposition:
    d: int
    m: int
    parts: Tuple[Tuple[int, int], ...]  # (order n, multiplicity), n decreasing

    def dimension(self) -> int:
        return sum(mult * (n + 1) for n, mult in self.parts)

    def __str__(self) -> str:
        out = []
        for n, mult in self.parts:
            out.append(f"S_{n}" if mult == 1 else f"S_{n}^{mult}")
        return " ⊕ ".join(out)


def decompose_sym(d: int, m: int) -> IsotypicDecomposition:
    parts = []
    for n in range(m * d, -1, -2):
        mult = multiplicity(d, m, n)
        if mult:
            parts.append((n, mult))
    dec = IsotypicDecomposition(d, m, tuple(parts))
    assert dec.dimension() == comb(m + d, d)
    return dec


def dim_graded_ring(d: int, m: int) -> int:
    """dim R_m = binom(m+d, d)."""
    return comb(m + d, d)


def quartic_invariant_count(d: int) -> int:
    """dim of degree-4 invariants of the d-ic, from d = 6e + k."""
    if d < 1:
        raise ValueError("d must be >= 1")
    e, k = divmod(d, 6)
    return e + (0 if k == 1 else 1)


def quartic_invariant_count_brute(d: int) -> int:
    """#{(a, b) in N^2 : 2a + 3b = d}."""
    return sum(1 for b in range(d // 3 + 1) if (d - 3 * b) % 2 == 0)


def orders(dec: IsotypicDecomposition) -> List[int]:
    return [n for n, mult in dec.parts for _ in range(mult)]
