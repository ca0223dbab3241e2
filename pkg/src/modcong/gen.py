"""Random and exhaustive corpora of finite-index subgroups.

Subgroups are built from the torsion generators S = L R^-1 L and U = S R,
for which the SL2(Z) relations reduce to ``S^4 = U^6 = 1`` and
``S^2 = U^3``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import RetryBudgetExhausted
from .modgroup import SubgroupRep, amalgam_generators, canonicalize
from .permutation import Permutation, compose, inverse, is_transitive, power

DEFAULT_RETRIES = 10_000
MAX_ENUM_DEGREE = 12


@dataclass(frozen=True)
class AmalgamPair:
    sigma_s: Permutation
    sigma_u: Permutation

    @property
    def degree(self) -> int:
        return self.sigma_s.degree

    def is_valid(self) -> bool:
        s, u = self.sigma_s, self.sigma_u
        return (
            power(s, 4).is_identity()
            and power(u, 6).is_identity()
            and power(s, 2) == power(u, 3)
            and is_transitive([s, u])
        )


def to_subgroup(p: AmalgamPair) -> SubgroupRep:
    """R = S^-1 U and L = S R^-1 S^-1."""
    s_inv = inverse(p.sigma_s)
    sigma_r = compose(s_inv, p.sigma_u)
    sigma_l = compose(compose(p.sigma_s, inverse(sigma_r)), s_inv)
    return SubgroupRep(sigma_l, sigma_r)


def from_subgroup(g: SubgroupRep) -> AmalgamPair:
    return AmalgamPair(*amalgam_generators(g))


def _random_pairing(items, rng):
    items = list(items)
    rng.shuffle(items)
    return [tuple(items[i:i + 2]) for i in range(0, len(items) - 1, 2)]


def _sample(degree: int, rng: random.Random) -> AmalgamPair:
    pts = list(range(degree))
    rng.shuffle(pts)
    s = list(range(degree))
    u = list(range(degree))
    # -1 acts as the identity or fixed-point-freely (anything in between is
    # never transitive); odd subgroups need S to be a product of 4-cycles
    if degree % 4 == 0 and rng.random() < 0.5:
        swaps = [(pts[i], pts[i + 1]) for i in range(0, degree, 2)]
        for (a, b), (c, d) in _random_pairing(swaps, rng):
            s[a], s[c], s[b], s[d] = c, b, d, a
        rng.shuffle(swaps)
        n6 = rng.randint(0, len(swaps) // 3)
        for i in range(n6):
            (a, b), (c, d), (e, f) = swaps[3 * i:3 * i + 3]
            cyc = (a, c, e, b, d, f)
            for j in range(6):
                u[cyc[j]] = cyc[(j + 1) % 6]
        for a, b in swaps[3 * n6:]:
            u[a], u[b] = b, a
    else:
        n2 = rng.randint(0, degree // 2)
        for i in range(n2):
            a, b = pts[2 * i], pts[2 * i + 1]
            s[a], s[b] = b, a
        rng.shuffle(pts)
        n3 = rng.randint(0, degree // 3)
        for i in range(n3):
            a, b, c = pts[3 * i:3 * i + 3]
            u[a], u[b], u[c] = b, c, a
    return AmalgamPair(Permutation(s, check=False), Permutation(u, check=False))


def random_subgroup(degree: int, seed: int, *, retries: int = DEFAULT_RETRIES) -> SubgroupRep:
    """A random subgroup of index ``degree``, deterministic in ``(degree, seed)``.

    Both even and odd subgroups are produced (odd ones only when 4 divides
    the degree). The base point is left where the sampler put it.
    """
    if degree < 1:
        raise ValueError("degree must be positive")
    rng = random.Random(f"modcong:{degree}:{seed}")
    for _ in range(retries):
        pair = _sample(degree, rng)
        if is_transitive([pair.sigma_s, pair.sigma_u]):
            return to_subgroup(pair)
    raise RetryBudgetExhausted(f"no transitive sample of degree {degree} in {retries} tries")


def _chain_length(fwd, bwd, q):
    """Points on the chain through ``q``; negative if it closes into a cycle."""
    k = 1
    x = q
    while fwd[x] >= 0:
        x = fwd[x]
        if x == q:
            return -k
        k += 1
    y = q
    while bwd[y] >= 0:
        y = bwd[y]
        k += 1
    return k


def _actions_of_degree(n: int):
    """Yield every transitive (S, U) action on ``n`` points in BFS-canonical form.

    Images are assigned in breadth-first order from 0 (S before U) and a new
    point always receives the next unused label, so each pointed action
    arises exactly once and no isomorphism test is needed.
    """
    fwd = ([-1] * n, [-1] * n)
    bwd = ([-1] * n, [-1] * n)
    closed_ok = ({1, 2, 4}, {1, 2, 3, 6})
    open_max = (4, 6)

    def square_cube_clash(x):
        s, u = fwd
        a = s[x]
        a = s[a] if a >= 0 else -1
        b = u[x]
        b = u[b] if b >= 0 else -1
        b = u[b] if b >= 0 else -1
        return a >= 0 and b >= 0 and a != b

    def rec(pos, used):
        if pos == 2 * n:
            if used == n:
                s, u = fwd
                if all(s[s[x]] == u[u[u[x]]] for x in range(n)):
                    yield tuple(s), tuple(u)
            return
        p, gen = divmod(pos, 2)
        if p >= used:
            return
        f, b = fwd[gen], bwd[gen]
        cands = [q for q in range(used) if b[q] < 0]
        if used < n:
            cands.append(used)
        for q in cands:
            f[p], b[q] = q, p
            k = _chain_length(f, b, q)
            ok = (-k in closed_ok[gen]) if k < 0 else k <= open_max[gen]
            if ok:
                ok = not any(square_cube_clash(x) for x in range(used + (q == used)))
            if ok:
                yield from rec(pos + 1, used + (q == used))
            f[p], b[q] = -1, -1

    yield from rec(0, 1)


def enumerate_subgroups(max_degree: int, *, bound: int = MAX_ENUM_DEGREE) -> list[SubgroupRep]:
    """Every subgroup of index at most ``max_degree``, each exactly once.

    Sorted by ``(degree, sigma_L, sigma_R)`` of the canonical forms.
    """
    if max_degree < 1 or max_degree > bound:
        raise ValueError(f"max_degree must lie in 1..{bound}")
    out = []
    for n in range(1, max_degree + 1):
        for s, u in _actions_of_degree(n):
            pair = AmalgamPair(Permutation(s, check=False), Permutation(u, check=False))
            out.append(canonicalize(to_subgroup(pair)))
    out.sort(key=SubgroupRep.key)
    return out
