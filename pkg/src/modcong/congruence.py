"""Congruence test for finite-index subgroups of SL2(Z).

Let ``d`` be the lcm of the cusp widths and ``N = d`` for even subgroups,
``N = 2d`` for odd ones.  The subgroup is congruence iff its coset action
kills a short explicit list of words that normally generate the principal
congruence subgroup of level ``N``.  The action always satisfies
``sigma_L^N = sigma_R^N = 1``, so exponents may be taken mod ``N``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import NotInvertible
from .modgroup import SubgroupRep, cusp_data
from .permutation import L, R, S, Word, evaluate_word, power


class Case(enum.Enum):
    ODD = "OddN"
    POWER_OF_TWO = "PowerOfTwo"
    MIXED = "Mixed"


@dataclass(frozen=True)
class RelationSet:
    case: Case
    n: int
    relators: tuple[tuple[str, Word], ...]

    def names(self) -> list[str]:
        return [name for name, _ in self.relators]


@dataclass(frozen=True)
class Verdict:
    congruence: bool
    candidate_level: int
    d: int
    even: bool
    failed_relator: str | None = None
    exact_level: int | None = None


def mod_inverse(a: int, n: int) -> int:
    if n < 1:
        raise ValueError("modulus must be positive")
    if n == 1:
        return 0
    try:
        return pow(a, -1, n)
    except ValueError:
        raise NotInvertible(f"{a} is not invertible mod {n}") from None


def split_even_odd(n: int) -> tuple[int, int]:
    """``n = e * m`` with ``e`` a power of two and ``m`` odd."""
    if n < 1:
        raise ValueError("n must be positive")
    e = n & -n
    return e, n // e


def crt_constants(e: int, m: int) -> tuple[int, int]:
    """Idempotents ``(c1, c2)`` mod ``e*m``: c1 = (0 mod e, 1 mod m), c2 = (1 mod e, 0 mod m)."""
    if e < 2 or m < 2 or e & (e - 1) or m % 2 == 0:
        raise ValueError(f"need e a power of 2 and m odd, both > 1; got {e}, {m}")
    n = e * m
    return e * mod_inverse(e, m) % n, m * mod_inverse(m, e) % n


def _two_power_relators(l: Word, r: Word, inv5: int, assume_even: bool) -> list[Word]:
    s = l * r.inverse() * l
    w = l**20 * r**inv5 * l**-4 * r.inverse()
    third = (w * r**5 * s) ** 3
    if not assume_even:
        third = third * (s**2).inverse()
    return [s.inverse() * w * s * w, w.inverse() * r * w * r**-25, third]


def relation_set(n: int, *, assume_even: bool = False, signed_odd: bool = False) -> RelationSet:
    """The relators to test at modulus ``n``.

    With ``assume_even`` the last relator of the 2-power families drops its
    ``(L R^-1 L)^-2`` factor, which is only sound when -1 is in the group.

    For odd ``n`` the single relator ``(R^2 L^-1/2)^3`` is congruent to -1,
    not 1, mod ``n``: it only detects ``+-Gamma(n)``, which is all the main
    test needs because odd ``n`` only arises for even subgroups.
    ``signed_odd`` appends ``(L R^-1 L)^-2`` so that the relator normally
    generates ``Gamma(n)`` itself, as needed for the level of odd subgroups.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n % 2:
        half = mod_inverse(2, n)
        case = Case.ODD
        words = [(R**2 * L**-half) ** 3]
        if signed_odd:
            words[0] = words[0] * (S**2).inverse()
        names = ["odd.1"]
    else:
        e, m = split_even_odd(n)
        if m == 1:
            case = Case.POWER_OF_TWO
            words = _two_power_relators(L, R, mod_inverse(5, n), assume_even)
            names = ["pow2.1", "pow2.2", "pow2.3"]
        else:
            case = Case.MIXED
            c1, c2 = crt_constants(e, m)
            a, b = L**c1, R**c1
            aba = a * b.inverse() * a
            half = mod_inverse(2, m)
            words = [
                a * R**c2 * a.inverse() * (R**c2).inverse(),
                aba**4,
                aba**2 * ((b.inverse() * a) ** 3).inverse(),
                aba**2 * ((b**2 * a**-half) ** 3).inverse(),
            ]
            pow2 = _two_power_relators(L**c2, R**c2, mod_inverse(5, e), assume_even)
            # the last relation reads (l r^-1 l)^2 = (s r^5 l r^-1 l)^3
            pow2[2] = pow2[2].inverse()
            words += pow2
            names = [f"gen.{i}" for i in range(1, 8)]
    if n > 1:
        words = [w.reduced(n) for w in words]
    return RelationSet(case, n, tuple(zip(names, words)))


def first_failure(g: SubgroupRep, rels: RelationSet) -> str | None:
    for name, w in rels.relators:
        if not evaluate_word(w, g.sigma_l, g.sigma_r).is_identity():
            return name
    return None


def exact_level(g: SubgroupRep, d: int, even: bool) -> int:
    """Level of a subgroup already known to be congruence: ``d`` or ``2d``."""
    if even:
        return d
    # R^d lies in the level-d principal subgroup, so it must act trivially
    if not power(g.sigma_r, d).is_identity():
        return 2 * d
    return d if first_failure(g, relation_set(d, signed_odd=True)) is None else 2 * d


def is_congruence(g: SubgroupRep, *, assume_even: bool = False) -> Verdict:
    cusps = cusp_data(g)
    n = cusps.d if cusps.even else 2 * cusps.d
    failed = first_failure(g, relation_set(n, assume_even=assume_even))
    if failed is not None:
        return Verdict(False, n, cusps.d, cusps.even, failed_relator=failed)
    return Verdict(True, n, cusps.d, cusps.even, exact_level=exact_level(g, cusps.d, cusps.even))
