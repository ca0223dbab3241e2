"""SL2(Z/n): standard congruence subgroups and the factorization oracle.

Both directions use right multiplication by L and R, matching the
left-to-right composition of :mod:`modcong.permutation`.
"""
from __future__ import annotations

import os
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from . import _kernels
from .errors import OracleTooLarge, PredicateNotSubgroup
from .modgroup import SubgroupRep, canonicalize, validate

ORACLE_ENV = "MODCONG_ORACLE_MAX"
DEFAULT_ORACLE_MAX = 10**6


@dataclass(frozen=True)
class MatModN:
    n: int
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        n = self.n
        if n < 1:
            raise ValueError("modulus must be positive")
        if any(not 0 <= x < n for x in (self.a, self.b, self.c, self.d)):
            raise ValueError("entries must be reduced residues")
        if (self.a * self.d - self.b * self.c - 1) % n:
            raise ValueError(f"determinant of {self} is not 1 mod {n}")

    @classmethod
    def of(cls, n: int, a: int, b: int, c: int, d: int) -> MatModN:
        return cls(n, a % n, b % n, c % n, d % n)

    @classmethod
    def identity(cls, n: int) -> MatModN:
        return cls.of(n, 1, 0, 0, 1)

    @classmethod
    def gen_l(cls, n: int) -> MatModN:
        return cls.of(n, 1, 0, 1, 1)

    @classmethod
    def gen_r(cls, n: int) -> MatModN:
        return cls.of(n, 1, 1, 0, 1)

    def is_identity(self) -> bool:
        return self == MatModN.identity(self.n)


def mat_mul(x: MatModN, y: MatModN) -> MatModN:
    if x.n != y.n:
        raise ValueError(f"modulus mismatch: {x.n} != {y.n}")
    return MatModN.of(
        x.n,
        x.a * y.a + x.b * y.c,
        x.a * y.b + x.b * y.d,
        x.c * y.a + x.d * y.c,
        x.c * y.b + x.d * y.d,
    )


def mat_inv(x: MatModN) -> MatModN:
    return MatModN.of(x.n, x.d, -x.b, -x.c, x.a)


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def sl2_order(n: int) -> int:
    """``|SL2(Z/n)| = n^3 * prod(1 - p^-2)``."""
    num, den = n**3, 1
    for p in _prime_factors(n):
        num *= p * p - 1
        den *= p * p
    return num // den


def p1_size(n: int) -> int:
    """``|P^1(Z/n)| = n * prod(1 + 1/p)``, the index of Gamma0(n)."""
    num, den = n, 1
    for p in _prime_factors(n):
        num *= p + 1
        den *= p
    return num // den


class CayleyTable:
    """All of SL2(Z/n), indexed, with right multiplication by L and R.

    Elements are encoded as ``((a*n + b)*n + c)*n + d`` and stored sorted.
    ``order``/``parent``/``via`` describe a breadth-first spanning tree
    rooted at the identity (``via`` is 0 for an L-edge, 1 for an R-edge);
    ``level_starts`` holds the offsets in ``order`` where each level after
    the root begins, followed by ``len(order)``.
    """

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("modulus must be positive")
        self.n = n
        a, b, c, d = _enumerate_sl2(n)
        self.keys = self._encode(a, b, c, d)
        sort = np.argsort(self.keys)
        self.keys = self.keys[sort]
        a, b, c, d = a[sort], b[sort], c[sort], d[sort]
        self.entries = np.stack([a, b, c, d], axis=1)
        self.next_l = self.lookup((a + b) % n, b, (c + d) % n, d)
        self.next_r = self.lookup(a, (a + b) % n, c, (c + d) % n)
        self._spanning_tree()

    def _encode(self, a, b, c, d):
        n = self.n
        return ((a * n + b) * n + c) * n + d

    def lookup(self, a, b, c, d) -> np.ndarray:
        keys = self._encode(np.asarray(a, np.int64), np.asarray(b, np.int64),
                            np.asarray(c, np.int64), np.asarray(d, np.int64))
        idx = np.searchsorted(self.keys, keys)
        if np.any(idx >= len(self.keys)) or np.any(self.keys[np.minimum(idx, len(self.keys) - 1)] != keys):
            raise KeyError("matrix not in SL2(Z/n)")
        return idx.astype(np.int32)

    def index(self, m: MatModN) -> int:
        return int(self.lookup(m.a, m.b, m.c, m.d))

    def matrix(self, i: int) -> MatModN:
        return MatModN(self.n, *(int(x) for x in self.entries[i]))

    def __len__(self):
        return len(self.keys)

    def _spanning_tree(self):
        size = len(self)
        root = self.index(MatModN.identity(self.n))
        visited = np.zeros(size, dtype=bool)
        parent = np.full(size, -1, dtype=np.int32)
        via = np.zeros(size, dtype=np.int8)
        visited[root] = True
        levels = [np.array([root], dtype=np.int32)]
        frontier = levels[0]
        while frontier.size:
            cand = np.concatenate([self.next_l[frontier], self.next_r[frontier]])
            src = np.concatenate([frontier, frontier])
            gen = np.repeat(np.array([0, 1], dtype=np.int8), frontier.size)
            fresh = ~visited[cand]
            cand, src, gen = cand[fresh], src[fresh], gen[fresh]
            uniq, first = np.unique(cand, return_index=True)
            visited[uniq] = True
            parent[uniq] = src[first]
            via[uniq] = gen[first]
            frontier = uniq.astype(np.int32)
            if frontier.size:
                levels.append(frontier)
        self.order = np.ascontiguousarray(np.concatenate(levels), dtype=np.int32)
        if len(self.order) != size:
            raise AssertionError("L and R failed to generate SL2(Z/n)")
        self.parent = parent
        self.via = via
        self.level_starts = np.cumsum([len(x) for x in levels]).tolist()
        self.next_l = np.ascontiguousarray(self.next_l)
        self.next_r = np.ascontiguousarray(self.next_r)


def _enumerate_sl2(n: int):
    if n == 1:
        z = np.zeros(1, dtype=np.int64)
        return z, z, z, z
    a, b, c = (x.ravel() for x in np.indices((n, n, n), dtype=np.int64))
    rhs = (1 + b * c) % n
    parts = []
    for d in range(n):
        hit = (a * d) % n == rhs
        parts.append((a[hit], b[hit], c[hit], np.full(int(hit.sum()), d, dtype=np.int64)))
    return tuple(np.concatenate([p[i] for p in parts]) for i in range(4))


@lru_cache(maxsize=6)
def cayley_table(n: int) -> CayleyTable:
    return CayleyTable(n)


def subgroup_from_predicate(
    n: int,
    pred: Callable[[MatModN], bool],
    *,
    samples: int = 200,
    seed: int = 0,
) -> SubgroupRep:
    """Preimage in SL2(Z) of ``{x in SL2(Z/n) : pred(x)}``, as a coset action.

    Right cosets ``H g`` are formed by sweeping ``g`` over the group in
    breadth-first order and claiming ``{h g : h in H}``. Closure of ``H``
    is spot-checked on ``samples`` random pairs; overlapping cosets are
    also reported as :class:`PredicateNotSubgroup`.
    """
    table = cayley_table(n)
    size = len(table)
    member = np.fromiter((bool(pred(table.matrix(i))) for i in range(size)), dtype=bool, count=size)
    h_idx = np.flatnonzero(member)
    root = int(table.order[0])
    if not member[root]:
        raise PredicateNotSubgroup("predicate rejects the identity")
    rng = random.Random(seed)
    for _ in range(samples):
        x = table.matrix(int(rng.choice(h_idx)))
        y = table.matrix(int(rng.choice(h_idx)))
        if not (member[table.index(mat_mul(x, y))] and member[table.index(mat_inv(x))]):
            raise PredicateNotSubgroup(f"not closed: {x}, {y}")

    ha, hb, hc, hd = (table.entries[h_idx, k] for k in range(4))
    label = np.full(size, -1, dtype=np.int64)
    reps = []
    for g in table.order:
        if label[g] >= 0:
            continue
        ga, gb, gc, gd = (int(x) for x in table.entries[g])
        coset = table.lookup((ha * ga + hb * gc) % n, (ha * gb + hb * gd) % n,
                             (hc * ga + hd * gc) % n, (hc * gb + hd * gd) % n)
        if np.any(label[coset] >= 0):
            raise PredicateNotSubgroup("right cosets overlap")
        label[coset] = len(reps)
        reps.append(int(g))
    reps_arr = np.array(reps, dtype=np.int64)
    sigma_l = label[table.next_l[reps_arr]].tolist()
    sigma_r = label[table.next_r[reps_arr]].tolist()
    return canonicalize(validate(len(reps), sigma_l, sigma_r))


def _is_gamma0(m: MatModN) -> bool:
    return m.c == 0


def _is_gamma1(m: MatModN) -> bool:
    one = 1 % m.n
    return m.c == 0 and m.a == one and m.d == one


def _is_gamma(m: MatModN) -> bool:
    return m.is_identity()


@lru_cache(maxsize=None)
def gamma0(n: int) -> SubgroupRep:
    return subgroup_from_predicate(n, _is_gamma0)


@lru_cache(maxsize=None)
def gamma1(n: int) -> SubgroupRep:
    return subgroup_from_predicate(n, _is_gamma1)


@lru_cache(maxsize=None)
def gamma_full(n: int) -> SubgroupRep:
    """The principal congruence subgroup of level ``n``."""
    return subgroup_from_predicate(n, _is_gamma)


def oracle_bound() -> int:
    raw = os.environ.get(ORACLE_ENV)
    return int(raw) if raw else DEFAULT_ORACLE_MAX


def oracle_factors_through(g: SubgroupRep, n: int, *, max_order: int | None = None) -> bool:
    """Does ``L -> sigma_l, R -> sigma_r`` descend to a map on SL2(Z/n)?

    Brute force over the whole Cayley graph of SL2(Z/n): each element gets
    the permutation of its spanning-tree word, and every L- and R-edge must
    then agree with the generators. True iff the subgroup contains the
    principal congruence subgroup of level ``n``.
    """
    if n < 1:
        raise ValueError("modulus must be positive")
    bound = oracle_bound() if max_order is None else max_order
    size = sl2_order(n)
    if size > bound:
        raise OracleTooLarge(f"|SL2(Z/{n})| = {size} exceeds the bound {bound}")
    table = cayley_table(n)
    return bool(_kernels.labels_consistent(table, g.sigma_l.images, g.sigma_r.images))
