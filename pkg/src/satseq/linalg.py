"""Exact rank of sparse integer matrices.

Two independent routes:

* :func:`rank_mod_p` -- rank over F_p via FLINT's dense nmod_mat.  Wide
  matrices are first multiplied by a random dense matrix mod p so the
  eliminated matrix is square.  The result is always a lower bound for the
  rational rank.
* :func:`rank_exact` -- incremental fraction-free elimination over Z with
  sparse rows and content removal.  No division, no Fraction.

:func:`bareiss_rank` is the textbook dense Bareiss scheme, kept as a
small-matrix cross-check for :func:`rank_exact`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, List, Sequence

import flint
import numpy as np

PRIME_LOW, PRIME_HIGH = 2**30, 2**31


class ResourceLimitExceeded(RuntimeError):
    pass


@dataclass
class RankProblem:
    """Sparse integer matrix stored by columns: ``columns[j] = {row: value}``."""

    nrows: int
    columns: List[Dict[int, int]] = field(default_factory=list)

    @property
    def ncols(self) -> int:
        return len(self.columns)

    def nnz(self) -> int:
        return sum(len(c) for c in self.columns)

    def dense(self) -> List[List[int]]:
        rows = [[0] * self.ncols for _ in range(self.nrows)]
        for j, col in enumerate(self.columns):
            for i, v in col.items():
                rows[i][j] = v
        return rows

    def transpose(self) -> "RankProblem":
        cols: List[Dict[int, int]] = [dict() for _ in range(self.nrows)]
        for j, col in enumerate(self.columns):
            for i, v in col.items():
                cols[i][j] = v
        return RankProblem(self.ncols, cols)


def random_primes(seed: int, count: int = 2) -> List[int]:
    """``count`` distinct primes in (2^30, 2^31), reproducible from ``seed``."""
    rng = random.Random(seed)
    out: List[int] = []
    while len(out) < count:
        n = rng.randrange(PRIME_LOW + 1, PRIME_HIGH) | 1
        if n not in out and flint.fmpz(n).is_prime():
            out.append(n)
    return out


def rank_mod_p(problem: RankProblem, p: int, seed: int = 0, compress: bool = True) -> int:
    nrows, ncols = problem.nrows, problem.ncols
    if nrows == 0 or ncols == 0:
        return 0
    if compress and ncols > nrows + 16:
        # B = A S with S uniform mod p; rank(B) = rank(A) except with
        # probability <= nrows / p
        width = nrows
        rng = np.random.default_rng([seed, p])
        B = np.zeros((nrows, width), dtype=np.int64)
        for col in problem.columns:
            if not col:
                continue
            s = rng.integers(0, p, size=width, dtype=np.int64)
            idx = np.fromiter(col.keys(), dtype=np.int64, count=len(col))
            vals = np.fromiter((v % p for v in col.values()), dtype=np.int64, count=len(col))
            B[idx] = (B[idx] + (vals[:, None] * s[None, :]) % p) % p
        M = flint.nmod_mat(B.tolist(), p)
        return M.rank()
    M = flint.nmod_mat(nrows, ncols, [v % p for row in problem.dense() for v in row], p)
    return M.rank()


def _primitive(row: Dict[int, int]) -> Dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {k: v // g for k, v in row.items()}
    return row


def rank_exact(problem: RankProblem) -> int:
    """Rank over Q by fraction-free echelon reduction of the columns.

    Each column is reduced against the pivots found so far by cross
    multiplication ``piv[c] * v - v[c] * piv`` followed by removal of the
    integer content.
    """
    pivots: Dict[int, Dict[int, int]] = {}
    full = problem.nrows
    for col in sorted(problem.columns, key=len):
        v = {i: x for i, x in col.items() if x}
        while v:
            c = min(v)
            piv = pivots.get(c)
            if piv is None:
                pivots[c] = _primitive(v)
                break
            a, b = piv[c], v[c]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {k: a * x for k, x in v.items()}
            for k, x in piv.items():
                y = new.get(k, 0) - b * x
                if y:
                    new[k] = y
                else:
                    new.pop(k, None)
            v = _primitive(new)
        if len(pivots) == full:
            break
    return len(pivots)


def bareiss_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Dense Bareiss elimination; exact divisions keep entries integral."""
    A = [list(map(int, row)) for row in matrix]
    nrows = len(A)
    ncols = len(A[0]) if A else 0
    prev = 1
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if A[i][c]), None)
        if pivot is None:
            continue
        A[r], A[pivot] = A[pivot], A[r]
        pr = A[r]
        pv = pr[c]
        for i in range(r + 1, nrows):
            row = A[i]
            f = row[c]
            for j in range(c + 1, ncols):
                row[j] = (pv * row[j] - f * pr[j]) // prev
            row[c] = 0
        prev = pv
        r += 1
        if r == nrows:
            break
    return r


def det_fraction(matrix) -> Fraction:
    """Determinant of a small square matrix of Fractions by Gaussian elimination."""
    A = [[Fraction(x) for x in row] for row in matrix]
    n = len(A)
    det = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if A[i][c]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            A[c], A[pivot] = A[pivot], A[c]
            det = -det
        pv = A[c][c]
        det *= pv
        for i in range(c + 1, n):
            f = A[i][c] / pv
            if f:
                for j in range(c, n):
                    A[i][j] -= f * A[c][j]
    return det


def rank_fraction(vectors) -> int:
    """Rank of a short list of Fraction vectors (used for small coefficient checks)."""
    rows = [[Fraction(x) for x in v] for v in vectors]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c] / rows[r][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return r
