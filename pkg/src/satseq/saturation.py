"""Graded pieces of the Hessian ideals and the saturation sequence.

J_{2q} is the ideal of R = Q[a0..ad] generated by the coefficients of
H_2, ..., H_{2q}; I_C is the ideal of the rational normal curve.

Everything is computed one weight block at a time.  Giving a_i weight i, the
multiplication map W (x) R_{m-2} -> R_m preserves weight, so its rank is the
sum of the ranks of its weight blocks.  Both J_{2q} and I_C are SL_2-stable,
hence the dimension of the central block (k = floor(md/2)) of an invariant
subspace of R_m equals its number of irreducible summands.  Two nested
invariant subspaces are therefore equal iff their central blocks have the
same dimension, which is all the saturation sequence needs.
"""

from __future__ import annotations

import logging
import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Dict, List, Optional, Tuple

from .bounds import Zeta
from .linalg import RankProblem, ResourceLimitExceeded, random_primes, rank_exact, rank_mod_p
from .reps import weight_count
from .transvectants import coefficient_list, hessian_covariant

log = logging.getLogger(__name__)

Counts = Tuple[int, ...]  # multiplicity of a_0..a_d in a monomial


class CacheMismatch(RuntimeError):
    """A cached rank disagreed with a fresh recomputation."""


@dataclass(frozen=True)
class RankConfig:
    method: str = "modular"  # or "rational"
    seed: int = 0
    max_primes: int = 3
    max_rows: int = 6000
    max_cols: int = 60000
    guard_degrees: int = 2
    guard_max_rows: int = 2500
    recheck_rate: float = 0.1

    def __post_init__(self):
        if self.method not in ("modular", "rational"):
            raise ValueError(f"unknown rank method {self.method!r}")
        if self.max_primes < 2:
            raise ValueError("need at least two primes")


@dataclass(frozen=True)
class GradedPieceDim:
    d: int
    q: Optional[int]  # None stands for the whole of I_C
    m: int
    dim: int
    method: str  # modular | rational | formula
    certified: bool = True


@dataclass(frozen=True)
class BlockRank:
    dim: int
    method: str
    certified: bool  # exact, or modular rank reached a structural upper bound
    primes: Tuple[int, ...] = ()
    disagreement: bool = False


@dataclass
class SaturationRecord:
    d: int
    alphas: List[Optional[int]]
    satieties: List[Optional[int]]
    big_s: Optional[int]
    zeta: Zeta
    methods: List[str] = field(default_factory=list)
    certified: List[bool] = field(default_factory=list)
    guards: List[dict] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    seed: int = 0

    def as_dict(self) -> dict:
        return {
            "d": self.d,
            "alphas": self.alphas,
            "satieties": self.satieties,
            "big_s": self.big_s,
            "zeta": self.zeta.as_dict(),
            "methods": self.methods,
            "certified": self.certified,
            "guards": self.guards,
            "notes": self.notes,
            "seed": self.seed,
        }


# -- monomials and generators ----------------------------------------------


@lru_cache(maxsize=None)
def _counts(top: int, m: int, k: int) -> Tuple[Counts, ...]:
    """Monomials of degree m and weight k in a_0..a_top, as count tuples."""
    if k < 0 or k > m * top:
        return ()
    if top == 0:
        return ((m,),)
    out = []
    for c in range(min(m, k // top) + 1):
        for rest in _counts(top - 1, m - c, k - c * top):
            out.append(rest + (c,))
    return tuple(out)


def monomials(d: int, m: int, k: int) -> Tuple[Counts, ...]:
    return _counts(d, m, k)


@lru_cache(maxsize=None)
def hessian_generators(d: int, i: int) -> Tuple[Tuple[int, Tuple[Tuple[Counts, int], ...]], ...]:
    """Coefficients of H_{2i} as (weight, integer terms), denominators cleared."""
    out = []
    for phi in coefficient_list(hessian_covariant(d, i)):
        if phi.is_zero():
            continue
        den = phi.denominator_lcm()
        terms = tuple((e, int(c * den)) for e, c in phi.terms.items())
        weights = {sum(j * n for j, n in enumerate(e)) for e, _ in terms}
        assert len(weights) == 1, "coefficient of a covariant is weight-homogeneous"
        out.append((weights.pop(), terms))
    return tuple(out)


def generators(d: int, q: int):
    if not 1 <= q <= d // 2:
        raise ValueError(f"q={q} outside 1..{d // 2}")
    for i in range(1, q + 1):
        yield from hessian_generators(d, i)


def block_shape(d: int, q: int, m: int, k: int) -> Tuple[int, int]:
    nrows = weight_count(d, m, k)
    ncols = sum(weight_count(d, m - 2, k - w) for w, _ in generators(d, q))
    return nrows, ncols


def assemble_block(d: int, q: int, m: int, k: int) -> RankProblem:
    """Weight-k block of (W_2 + ... + W_{2q}) (x) R_{m-2} -> R_m."""
    rows = {e: i for i, e in enumerate(monomials(d, m, k))}
    cols = []
    for w, terms in generators(d, q):
        for mu in monomials(d, m - 2, k - w):
            col = {}
            for e, c in terms:
                r = rows[tuple(a + b for a, b in zip(e, mu))]
                col[r] = col.get(r, 0) + c
            cols.append(col)
    return RankProblem(len(rows), cols)


# -- I_C by formula ----------------------------------------------------------


def ic_dim(d: int, m: int) -> int:
    """dim (I_C)_m from the Hilbert function md + 1 of the curve."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return comb(m + d, d) - (m * d + 1)


def ic_block_dim(d: int, m: int, k: int) -> int:
    """The curve has exactly one monomial image in each weight 0..md."""
    n = weight_count(d, m, k)
    return n - 1 if 0 <= k <= m * d else n


def central_weight(d: int, m: int) -> int:
    return (m * d) // 2


# -- the engine ----------------------------------------------------------------


class SaturationEngine:
    def __init__(self, config: RankConfig | None = None, cache=None):
        self.config = config or RankConfig()
        self.cache = cache
        self._memo: Dict[tuple, BlockRank] = {}
        self._rng = random.Random(self.config.seed)
        self.primes = tuple(random_primes(self.config.seed, self.config.max_primes))
        self.deadline: Optional[float] = None

    def set_budget(self, seconds: Optional[float]) -> None:
        """Wall-clock budget for the following computations (None lifts it)."""
        self.deadline = None if seconds is None else time.monotonic() + seconds

    # blocks

    def _cache_key(self, d, q, m, k) -> str:
        c = self.config
        return f"{d}:{q}:{m}:{k}:{c.method}:{c.seed}"

    def block_rank(self, d: int, q: int, m: int, k: int) -> BlockRank:
        key = (d, q, m, k)
        if key in self._memo:
            return self._memo[key]
        if self.cache is not None:
            hit = self.cache.get(self._cache_key(d, q, m, k))
            if hit is not None:
                if self._rng.random() < self.config.recheck_rate:
                    fresh = self._compute(d, q, m, k)
                    if fresh.dim != hit["dim"]:
                        raise CacheMismatch(f"block {key}: cached {hit['dim']}, recomputed {fresh.dim}")
                res = BlockRank(hit["dim"], hit["method"], hit["certified"],
                                tuple(hit.get("primes", ())), hit.get("disagreement", False))
                self._memo[key] = res
                return res
        res = self._compute(d, q, m, k)
        self._memo[key] = res
        if self.cache is not None:
            self.cache.put(self._cache_key(d, q, m, k), {
                "dim": res.dim, "method": res.method, "certified": res.certified,
                "primes": list(res.primes), "disagreement": res.disagreement,
            })
        return res

    def _compute(self, d, q, m, k) -> BlockRank:
        cfg = self.config
        if m < 2:
            return BlockRank(0, "formula", True)
        nrows, ncols = block_shape(d, q, m, k)
        upper = min(ncols, ic_block_dim(d, m, k))
        if upper == 0:
            return BlockRank(0, "formula", True)
        if nrows > cfg.max_rows or ncols > cfg.max_cols:
            raise ResourceLimitExceeded(
                f"block d={d} q={q} m={m} k={k} is {nrows}x{ncols}, limits {cfg.max_rows}x{cfg.max_cols}")
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise ResourceLimitExceeded("time budget exhausted")
        problem = assemble_block(d, q, m, k)
        if cfg.method == "rational":
            return BlockRank(rank_exact(problem), "rational", True)
        ranks: List[int] = []
        for p in self.primes:
            ranks.append(rank_mod_p(problem, p, seed=cfg.seed))
            if ranks[-1] == upper:
                # a mod-p rank never exceeds the rational rank
                return BlockRank(upper, "modular", True, tuple(self.primes[: len(ranks)]),
                                 len(set(ranks)) > 1)
            if len(ranks) >= 2 and ranks[-1] == ranks[-2]:
                return BlockRank(ranks[-1], "modular", False, tuple(self.primes[: len(ranks)]),
                                 len(set(ranks)) > 1)
        log.warning("primes disagree on block d=%d q=%d m=%d k=%d: %s", d, q, m, k, ranks)
        return BlockRank(max(ranks), "modular", False, self.primes, True)

    # graded pieces

    def central_dim(self, d: int, q: int, m: int) -> BlockRank:
        return self.block_rank(d, q, m, central_weight(d, m))

    def ideal_dim(self, d: int, q: int, m: int) -> GradedPieceDim:
        if not 1 <= q <= d // 2:
            raise ValueError(f"q={q} outside 1..{d // 2}")
        if m < 2:
            raise ValueError("m must be >= 2")
        total = 0
        certified = True
        method = "formula"
        top = m * d
        for k in range(top // 2 + 1):
            b = self.block_rank(d, q, m, k)
            total += b.dim if 2 * k == top else 2 * b.dim  # dim V_k = dim V_{md-k}
            certified &= b.certified
            if b.method != "formula":
                method = b.method
        return GradedPieceDim(d, q, m, total, method, certified)

    # the sequence

    def saturation_sequence(self, d: int) -> SaturationRecord:
        if d < 4:
            raise ValueError("d must be >= 4")
        e = d // 2
        alphas: Dict[int, int] = {}
        tags: Dict[int, BlockRank] = {}
        notes: List[str] = []

        # degree 2 is never tight: W_{2q+2} adds a new irreducible summand
        for q in range(1, e):
            if self.central_dim(d, q, 2).dim == self.central_dim(d, q + 1, 2).dim:
                notes.append(f"q={q}: equality already in degree 2")

        for m in range(3, d + 3):
            above = ic_block_dim(d, m, central_weight(d, m))
            for q in range(e - 1, 0, -1):
                if q in alphas:
                    continue  # propagation: equal at alpha_q, equal beyond
                b = self.central_dim(d, q, m)
                if b.dim == above:
                    alphas[q] = m
                    tags[q] = b
                above = b.dim
            if len(alphas) == e - 1:
                break

        alpha_list = [alphas.get(q) for q in range(1, e)]
        for q, a in enumerate(alpha_list, start=1):
            if a is None:
                notes.append(f"q={q}: no agreement up to degree {d + 2}")

        guards = []
        for q, a in enumerate(alpha_list, start=1):
            if a is None:
                continue
            for t in range(a + 1, a + 1 + self.config.guard_degrees):
                guards.append(self._guard(d, q, t))

        satieties = []
        for i in range(len(alpha_list)):
            tail = alpha_list[i:]
            satieties.append(None if None in tail else max(tail))
        big_s = satieties[0] if satieties else None
        return SaturationRecord(
            d=d,
            alphas=alpha_list,
            satieties=satieties,
            big_s=big_s,
            zeta=Zeta(d),
            methods=[tags[q].method if q in tags else "none" for q in range(1, e)],
            certified=[tags[q].certified if q in tags else False for q in range(1, e)],
            guards=guards,
            notes=notes,
            seed=self.config.seed,
        )

    def _guard(self, d, q, t) -> dict:
        k = central_weight(d, t)
        rows = weight_count(d, t, k)
        entry = {"q": q, "m": t, "rows": rows}
        if rows > self.config.guard_max_rows:
            entry["status"] = "skipped"
            return entry
        b = self.block_rank(d, q, t, k)
        if b.dim == ic_block_dim(d, t, k):
            entry["status"] = "ok"
        elif b.dim == self.block_rank(d, q + 1, t, k).dim:
            entry["status"] = "ok"
        else:
            entry["status"] = "failed"
        return entry


_DEFAULT: Optional[SaturationEngine] = None


def default_engine() -> SaturationEngine:
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = SaturationEngine()
    return _DEFAULT


def ideal_dim(d: int, q: int, m: int) -> int:
    return default_engine().ideal_dim(d, q, m).dim


def saturation_sequence(d: int) -> SaturationRecord:
    return default_engine().saturation_sequence(d)


def full_rank(d: int, q: int, m: int, method: str = "modular", seed: int = 0) -> int:
    """Rank of the whole multiplication map, no weight splitting (for cross-checks)."""
    rows: Dict[Counts, int] = {}
    for k in range(m * d + 1):
        for e in monomials(d, m, k):
            rows[e] = len(rows)
    cols = []
    for w, terms in generators(d, q):
        for k in range((m - 2) * d + 1):
            for mu in monomials(d, m - 2, k):
                col = {}
                for e, c in terms:
                    r = rows[tuple(a + b for a, b in zip(e, mu))]
                    col[r] = col.get(r, 0) + c
                cols.append(col)
    problem = RankProblem(len(rows), cols)
    if method == "rational":
        return rank_exact(problem)
    return rank_mod_p(problem, random_primes(seed, 1)[0], seed=seed)
