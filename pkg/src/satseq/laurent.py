"""Laurent polynomials in one variable over Q, small matrices of them, and
Birkhoff factorization Q = E^{-1} D F.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .linalg import rank_fraction


class LaurentPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[int, Fraction]] = None):
        self.terms = {e: Fraction(c) for e, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, c, e: int = 0) -> "LaurentPoly":
        return cls({e: Fraction(c)})

    @classmethod
    def coerce(cls, x) -> "LaurentPoly":
        return x if isinstance(x, LaurentPoly) else cls.monomial(x)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return self.terms == LaurentPoly.coerce(other).terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other) -> "LaurentPoly":
        out = dict(self.terms)
        for e, c in LaurentPoly.coerce(other).terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        other = LaurentPoly.coerce(other)
        out: Dict[int, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e + k: c for e, c in self.terms.items()})

    def coefficient(self, e: int) -> Fraction:
        return self.terms.get(e, Fraction(0))

    def max_degree(self) -> Optional[int]:
        return max(self.terms) if self.terms else None

    def min_degree(self) -> Optional[int]:
        return min(self.terms) if self.terms else None

    def as_monomial(self) -> Optional[Tuple[Fraction, int]]:
        if len(self.terms) != 1:
            return None
        (e, c), = self.terms.items()
        return c, e

    def invert_variable(self) -> "LaurentPoly":
        """lambda -> 1/lambda."""
        return LaurentPoly({-e: c for e, c in self.terms.items()})

    def __repr__(self) -> str:
        return f"LaurentPoly({format_laurent(self)})"


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_laurent(p: LaurentPoly, var: str = "L") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for e in sorted(p.terms, reverse=True):
        c = p.terms[e]
        if e == 0:
            parts.append(_fmt(c))
        else:
            mon = var if e == 1 else f"{var}^{e}"
            parts.append(mon if c == 1 else f"-{mon}" if c == -1 else f"{_fmt(c)}*{mon}")
    return " + ".join(parts).replace("+ -", "- ")


Matrix = List[List[LaurentPoly]]


def as_matrix(rows) -> Matrix:
    return [[LaurentPoly.coerce(x) for x in row] for row in rows]


def identity(n: int) -> Matrix:
    return [[LaurentPoly.monomial(1 if i == j else 0) for j in range(n)] for i in range(n)]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    n, k, m = len(A), len(B), len(B[0]) if B else 0
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = LaurentPoly()
            for t in range(k):
                if not A[i][t].is_zero() and not B[t][j].is_zero():
                    acc = acc + A[i][t] * B[t][j]
            row.append(acc)
        out.append(row)
    return out


def scale(A: Matrix, c: LaurentPoly) -> Matrix:
    return [[x * c for x in row] for row in A]


def mat_equal(A: Matrix, B: Matrix) -> bool:
    return len(A) == len(B) and all(a == b for ra, rb in zip(A, B) for a, b in zip(ra, rb))


def determinant(A: Matrix) -> LaurentPoly:
    """Laplace expansion along the first row, memoized on column sets."""
    n = len(A)
    if n == 0:
        return LaurentPoly.monomial(1)

    @lru_cache(maxsize=None)
    def minor(row: int, cols: Tuple[int, ...]) -> LaurentPoly:
        if row == n:
            return LaurentPoly.monomial(1)
        acc = LaurentPoly()
        for idx, c in enumerate(cols):
            if A[row][c].is_zero():
                continue
            rest = cols[:idx] + cols[idx + 1:]
            term = A[row][c] * minor(row + 1, rest)
            acc = acc + (term if idx % 2 == 0 else -term)
        return acc

    return minor(0, tuple(range(n)))


def _submatrix(A: Matrix, skip_row: int, skip_col: int) -> Matrix:
    return [[x for j, x in enumerate(row) if j != skip_col] for i, row in enumerate(A) if i != skip_row]


class NotInvertible(ValueError):
    pass


def unit_determinant(A: Matrix) -> Tuple[Fraction, int]:
    det = determinant(A).as_monomial()
    if det is None or det[0] == 0:
        raise NotInvertible("determinant is not a unit c*L^k")
    return det


def inverse(A: Matrix) -> Matrix:
    c, k = unit_determinant(A)
    inv_det = LaurentPoly.monomial(1 / c, -k)
    n = len(A)
    out = [[LaurentPoly() for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            cof = determinant(_submatrix(A, i, j))
            if (i + j) % 2:
                cof = -cof
            out[j][i] = cof * inv_det
    return out


def invert_variable(A: Matrix) -> Matrix:
    return [[x.invert_variable() for x in row] for row in A]


def is_polynomial(A: Matrix, negative: bool = False) -> bool:
    """Entries in Q[L] (or Q[1/L] with ``negative``)."""
    for row in A:
        for x in row:
            if x.is_zero():
                continue
            if negative and x.max_degree() > 0:
                return False
            if not negative and x.min_degree() < 0:
                return False
    return True


def is_invertible_over(A: Matrix, negative: bool = False) -> bool:
    """A is a unit in GL(Q[L]) (or GL(Q[1/L])): polynomial with constant determinant."""
    if not is_polynomial(A, negative):
        return False
    det = determinant(A).as_monomial()
    return det is not None and det[1] == 0


def format_matrix(A: Matrix, var: str = "L") -> List[List[str]]:
    return [[format_laurent(x, var) for x in row] for row in A]


# -- Birkhoff factorization ------------------------------------------------------


@dataclass
class Birkhoff:
    E: Matrix  # in GL(Q[L])
    D: Matrix  # diag(L^k_i)
    F: Matrix  # in GL(Q[1/L])
    exponents: List[int]


def _left_null_vector(L: List[List[Fraction]]) -> Optional[List[Fraction]]:
    """A nonzero c with c L = 0, or None."""
    n = len(L)
    # solve L^T c = 0 by Gauss-Jordan
    rows = [[L[i][j] for i in range(n)] for j in range(len(L[0]))]
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][col]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    if not free:
        return None
    fcol = free[0]
    c = [Fraction(0)] * n
    c[fcol] = Fraction(1)
    for i, pcol in enumerate(pivots):
        c[pcol] = -rows[i][fcol]
    return c


def birkhoff_factorize(Q: Matrix) -> Birkhoff:
    """Q = E^{-1} D F by row reduction to row-reduced (row proper) form.

    A = L^N Q is polynomial.  While the matrix of leading row coefficients is
    singular, a row of maximal degree among those in a left null combination
    is replaced by that combination, which lowers its degree.  The finished
    E A equals diag(L^r_i) H with H invertible over Q[1/L].
    """
    n = len(Q)
    unit_determinant(Q)
    low = min((x.min_degree() for row in Q for x in row if not x.is_zero()), default=0)
    N = max(0, -low)
    A = [[x.shift(N) for x in row] for row in Q]
    E = identity(n)
    for _ in range(10_000):
        degs = [max(x.max_degree() for x in row if not x.is_zero()) for row in A]
        lead = [[A[i][j].coefficient(degs[i]) for j in range(n)] for i in range(n)]
        if rank_fraction(lead) == n:
            break
        c = _left_null_vector(lead)
        i0 = max((i for i in range(n) if c[i]), key=lambda i: (degs[i], i))
        new_A, new_E = [LaurentPoly() for _ in range(n)], [LaurentPoly() for _ in range(n)]
        for i in range(n):
            if not c[i]:
                continue
            m = LaurentPoly.monomial(c[i], degs[i0] - degs[i])
            new_A = [a + m * x for a, x in zip(new_A, A[i])]
            new_E = [a + m * x for a, x in zip(new_E, E[i])]
        A[i0], E[i0] = new_A, new_E
    else:  # pragma: no cover
        raise RuntimeError("row reduction did not terminate")
    F = [[x.shift(-degs[i]) for x in A[i]] for i in range(n)]
    ks = [degs[i] - N for i in range(n)]
    D = [[LaurentPoly.monomial(1, ks[i]) if i == j else LaurentPoly() for j in range(n)] for i in range(n)]
    return Birkhoff(E, D, F, ks)


def reassemble(b: Birkhoff) -> Matrix:
    return matmul(matmul(inverse(b.E), b.D), b.F)
