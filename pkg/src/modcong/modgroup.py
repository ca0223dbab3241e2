"""Finite-index subgroups of SL2(Z) as permutation pairs.

A subgroup of index ``n`` is stored as the right action of the generators

    L = [[1, 0], [1, 1]],    R = [[1, 1], [0, 1]]

on its ``n`` right cosets, with the coset of the identity at point 0.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .errors import BadAmalgam, BadBraid, BadOrder4, NotTransitive
from .permutation import (
    L,
    R,
    S,
    Permutation,
    Word,
    compose,
    cycles,
    evaluate_word,
    identity,
    is_transitive,
    order,
    power,
    quotient_by_involution,
)


@dataclass(frozen=True)
class SubgroupRep:
    """Coset action of a finite-index subgroup; build through :func:`validate`."""

    sigma_l: Permutation
    sigma_r: Permutation

    @property
    def degree(self) -> int:
        return self.sigma_l.degree

    def key(self) -> tuple:
        """Sort key; meaningful across subgroups only after :func:`canonicalize`."""
        return (self.degree, self.sigma_l.images, self.sigma_r.images)


def validate(degree: int, sigma_l, sigma_r) -> SubgroupRep:
    """Check that ``(sigma_l, sigma_r)`` is a transitive action of SL2(Z).

    Raises one of the :class:`~modcong.errors.InvalidSubgroup` subclasses
    naming the first violated relation, or ``ValueError`` when the arrays
    are not permutations of the stated degree.
    """
    sl = sigma_l if isinstance(sigma_l, Permutation) else Permutation(sigma_l)
    sr = sigma_r if isinstance(sigma_r, Permutation) else Permutation(sigma_r)
    if sl.degree != degree or sr.degree != degree:
        raise ValueError(f"expected two permutations of degree {degree}")
    if not is_transitive([sl, sr]):
        raise NotTransitive()
    ss = evaluate_word(S, sl, sr)
    if not power(ss, 4).is_identity():
        raise BadOrder4()
    if power(ss, 2) != power(compose(ss, sr), 3):
        raise BadAmalgam()
    if ss != evaluate_word(R.inverse() * L * R.inverse(), sl, sr):
        raise BadBraid()
    return SubgroupRep(sl, sr)


def full_group() -> SubgroupRep:
    """SL2(Z) itself, the unique subgroup of index 1."""
    return SubgroupRep(identity(1), identity(1))


def minus_one(g: SubgroupRep) -> Permutation:
    """The image of -1 = (L R^-1 L)^2; central, an involution or the identity."""
    return power(evaluate_word(S, g.sigma_l, g.sigma_r), 2)


def is_even(g: SubgroupRep) -> bool:
    """True iff -1 lies in the subgroup."""
    return minus_one(g).is_identity()


@dataclass(frozen=True)
class CuspData:
    widths: tuple[int, ...]
    d: int
    even: bool


def projective_r(g: SubgroupRep) -> Permutation:
    """The action of R on cosets of the projective image of ``g``."""
    return quotient_by_involution(g.sigma_r, minus_one(g))


def cusp_data(g: SubgroupRep) -> CuspData:
    """Cusp widths (ascending), their lcm ``d``, and evenness.

    Widths are cycle lengths of R on the projective cosets, i.e. after
    identifying each coset with its image under -1.
    """
    iota = minus_one(g)
    rbar = quotient_by_involution(g.sigma_r, iota)
    widths = tuple(sorted(len(c) for c in cycles(rbar)))
    return CuspData(widths=widths, d=order(rbar), even=iota.is_identity())


def contains_word(g: SubgroupRep, w: Word) -> bool:
    return evaluate_word(w, g.sigma_l, g.sigma_r).images[0] == 0


@dataclass(frozen=True)
class MatZ:
    """An integer matrix ``[[a, b], [c, d]]`` of determinant 1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"determinant of {self} is not 1")

    def __matmul__(self, o: MatZ) -> MatZ:
        return MatZ(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def inverse(self) -> MatZ:
        return MatZ(self.d, -self.b, -self.c, self.a)

    @classmethod
    def identity(cls) -> MatZ:
        return cls(1, 0, 0, 1)


def l_power(k: int) -> MatZ:
    return MatZ(1, 0, k, 1)


def r_power(k: int) -> MatZ:
    return MatZ(1, k, 0, 1)


def word_matrix(w: Word) -> MatZ:
    """Multiply out ``w`` over the integers."""
    m = MatZ.identity()
    for gen, exp in w:
        m = m @ (l_power(exp) if gen == "L" else r_power(exp))
    return m


def decompose_matrix(m: MatZ) -> Word:
    """Write ``m`` as a word in L and R by Euclidean reduction of its first column.

    Left multiplication by ``R^k`` adds ``k*c`` to ``a`` and by ``L^k`` adds
    ``k*a`` to ``c``; we shrink the larger of ``|a|``, ``|c|`` until ``c == 0``.
    What is left is ``R^b`` or ``-R^-b``; the sign is spelled ``(L R^-1 L)^2``.
    """
    if not isinstance(m, MatZ):
        m = MatZ(*m)
    a, b, c, d = m.a, m.b, m.c, m.d
    peeled: list[tuple[str, int]] = []
    while c != 0:
        if a == 0:
            # c = +-1 here; R^c makes a = 1
            k, gen = c, "R"
        elif abs(c) >= abs(a):
            k, gen = -(c // a), "L"
        else:
            k, gen = -(a // c), "R"
        if gen == "R":
            a, b = a + k * c, b + k * d
        else:
            c, d = c + k * a, d + k * b
        peeled.append((gen, k))
    # m = G_1^-1 ... G_k^-1 * rest, where G_i were applied in order
    prefix = Word((gen, -k) for gen, k in peeled)
    if a == 1:
        rest = Word.gen("R", b)
    else:
        rest = S**2 * Word.gen("R", -b)
    return prefix * rest


def contains_matrix(g: SubgroupRep, m: MatZ) -> bool:
    return contains_word(g, decompose_matrix(m))


def relabel(g: SubgroupRep, new: list[int]) -> SubgroupRep:
    """Rename point ``x`` to ``new[x]`` in both generators."""
    n = g.degree
    sl = [0] * n
    sr = [0] * n
    for x in range(n):
        sl[new[x]] = new[g.sigma_l.images[x]]
        sr[new[x]] = new[g.sigma_r.images[x]]
    return SubgroupRep(Permutation(sl, check=False), Permutation(sr, check=False))


def canonicalize(g: SubgroupRep) -> SubgroupRep:
    """Relabel points in breadth-first order from 0, L-edge before R-edge.

    Two representations describe the same subgroup iff their canonical
    forms are equal.
    """
    return relabel(g, _kernels.bfs_relabel(g.sigma_l.images, g.sigma_r.images))


def rebase(g: SubgroupRep, point: int) -> SubgroupRep:
    """Move the base point to ``point`` (the stabilizer becomes a conjugate)."""
    n = g.degree
    swap = list(range(n))
    swap[0], swap[point] = point, 0
    return canonicalize(relabel(g, swap))


def intersect(g1: SubgroupRep, g2: SubgroupRep) -> SubgroupRep:
    """The intersection, as the orbit of (0, 0) in the product action."""
    l1, r1 = g1.sigma_l.images, g1.sigma_r.images
    l2, r2 = g2.sigma_l.images, g2.sigma_r.images
    index = {(0, 0): 0}
    pairs = [(0, 0)]
    sl: list[int] = []
    sr: list[int] = []
    head = 0
    while head < len(pairs):
        x, y = pairs[head]
        head += 1
        for img, out in (((l1[x], l2[y]), sl), ((r1[x], r2[y]), sr)):
            if img not in index:
                index[img] = len(pairs)
                pairs.append(img)
            out.append(index[img])
    g = SubgroupRep(Permutation(sl, check=False), Permutation(sr, check=False))
    return canonicalize(g)


def conjugate_by_word(g: SubgroupRep, w: Word) -> SubgroupRep:
    """The subgroup ``w^-1 g w``, canonicalized."""
    p = evaluate_word(w, g.sigma_l, g.sigma_r).images[0]
    return rebase(g, p)


def amalgam_generators(g: SubgroupRep) -> tuple[Permutation, Permutation]:
    """Images of S = L R^-1 L and U = S R."""
    ss = evaluate_word(S, g.sigma_l, g.sigma_r)
    return ss, compose(ss, g.sigma_r)


__all__ = [
    "CuspData",
    "MatZ",
    "SubgroupRep",
    "amalgam_generators",
    "canonicalize",
    "conjugate_by_word",
    "contains_matrix",
    "contains_word",
    "cusp_data",
    "decompose_matrix",
    "full_group",
    "intersect",
    "is_even",
    "minus_one",
    "projective_r",
    "rebase",
    "relabel",
    "validate",
    "word_matrix",
]
