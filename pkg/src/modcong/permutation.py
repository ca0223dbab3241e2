"""Permutations of ``{0, ..., n-1}`` and words in the generators L and R.

Composition is left to right throughout: ``compose(a, b)`` applies ``a``
first, then ``b``.  With this convention evaluating a word is a
homomorphism for the right action of SL2(Z) on right cosets.
"""
from __future__ import annotations

import math
import re
from typing import Iterable, Sequence

from . import _kernels


class Permutation:
    """An immutable bijection on ``range(degree)``.

    >>> p = Permutation([1, 2, 0])
    >>> p(0), p.degree
    (1, 3)
    """

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int], check: bool = True):
        images = tuple(int(x) for x in images)
        if check:
            n = len(images)
            if n == 0:
                raise ValueError("permutation degree must be at least 1")
            if sorted(images) != list(range(n)):
                raise ValueError(f"not a bijection on range({n}): {list(images)}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __len__(self):
        return len(self.images)

    def __eq__(self, other):
        if isinstance(other, Permutation):
            return self.images == other.images
        return NotImplemented

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({list(self.images)})"

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))


def _trusted(images) -> Permutation:
    return Permutation(images, check=False)


def _same_degree(*perms: Permutation) -> int:
    degrees = {p.degree for p in perms}
    if len(degrees) != 1:
        raise ValueError(f"degree mismatch: {sorted(degrees)}")
    return degrees.pop()


def identity(degree: int) -> Permutation:
    if degree < 1:
        raise ValueError("degree must be at least 1")
    return _trusted(range(degree))


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Apply ``a`` then ``b``."""
    _same_degree(a, b)
    return _trusted(_kernels.compose_images(a.images, b.images))


def inverse(p: Permutation) -> Permutation:
    out = [0] * p.degree
    for i, x in enumerate(p.images):
        out[x] = i
    return _trusted(out)


def power(p: Permutation, k: int) -> Permutation:
    """``p`` composed with itself ``k`` times; O(degree) for any ``k``."""
    return _trusted(_kernels.power_images(p.images, k))


def cycles(p: Permutation) -> list[list[int]]:
    """Cycles of ``p``, each starting at its least point, sorted by that point.

    Fixed points are included as 1-cycles.
    """
    seen = [False] * p.degree
    out = []
    for start in range(p.degree):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        x = p.images[start]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = p.images[x]
        out.append(cyc)
    return out


def order(p: Permutation) -> int:
    return math.lcm(*(len(c) for c in cycles(p)))


def is_transitive(gens: Sequence[Permutation]) -> bool:
    if not gens:
        raise ValueError("need at least one generator")
    n = _same_degree(*gens)
    invs = [inverse(g) for g in gens]
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for g in (*gens, *invs):
            y = g.images[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n


def quotient_by_involution(p: Permutation, iota: Permutation) -> Permutation:
    """The permutation induced by ``p`` on the orbits of ``iota``.

    Orbits are labelled by their least element, then renumbered densely in
    increasing order.
    """
    _same_degree(p, iota)
    if not power(iota, 2).is_identity():
        raise ValueError("iota is not an involution")
    if compose(p, iota) != compose(iota, p):
        raise ValueError("iota does not commute with p")
    reps = sorted({min(x, iota.images[x]) for x in range(p.degree)})
    label = {r: i for i, r in enumerate(reps)}
    images = []
    for r in reps:
        y = p.images[r]
        images.append(label[min(y, iota.images[y])])
    return _trusted(images)


GENERATORS = ("L", "R")
_TOKEN = re.compile(r"\s*([LR])(?:\s*\^\s*\(?\s*(-?\d+)\s*\)?)?\s*")


class Word:
    """A product of powers of L and R, kept in reduced form.

    Zero exponents are dropped and adjacent powers of the same generator
    merged, so equal words compare equal.

    >>> Word.parse("L R^-1 L") ** 2
    Word('L R^-1 L^2 R^-1 L')
    """

    __slots__ = ("factors",)

    def __init__(self, factors: Iterable[tuple[str, int]] = ()):
        out: list[list] = []
        for gen, exp in factors:
            if gen not in GENERATORS:
                raise ValueError(f"unknown generator {gen!r}")
            exp = int(exp)
            if out and out[-1][0] == gen:
                out[-1][1] += exp
                if out[-1][1] == 0:
                    out.pop()
            elif exp:
                out.append([gen, exp])
        object.__setattr__(self, "factors", tuple((g, e) for g, e in out))

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def gen(cls, name: str, exp: int = 1) -> Word:
        return cls([(name, exp)])

    @classmethod
    def parse(cls, text: str) -> Word:
        """Parse e.g. ``"L R^-1 L"`` or ``"L^20 R^5"``; ``"1"`` or ``""`` is empty."""
        text = text.strip()
        if text in ("", "1"):
            return cls()
        pos = 0
        factors = []
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse word at {text[pos:]!r}")
            factors.append((m.group(1), int(m.group(2) or 1)))
            pos = m.end()
        return cls(factors)

    def __mul__(self, other: Word) -> Word:
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self.factors + other.factors)

    def inverse(self) -> Word:
        return Word((g, -e) for g, e in reversed(self.factors))

    def __pow__(self, k: int) -> Word:
        base = self if k >= 0 else self.inverse()
        return Word(base.factors * abs(k))

    def reduced(self, n: int) -> Word:
        """Reduce every exponent to its least nonnegative residue mod ``n``."""
        if n < 1:
            raise ValueError("modulus must be positive")
        w = self
        while True:
            nxt = Word((g, e % n) for g, e in w.factors)
            if nxt == w:
                return w
            w = nxt

    def length(self) -> int:
        """Total number of letters, i.e. the sum of absolute exponents."""
        return sum(abs(e) for _, e in self.factors)

    def __len__(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __bool__(self):
        return bool(self.factors)

    def __eq__(self, other):
        if isinstance(other, Word):
            return self.factors == other.factors
        return NotImplemented

    def __hash__(self):
        return hash(self.factors)

    def __str__(self):
        if not self.factors:
            return "1"
        return " ".join(g if e == 1 else f"{g}^{e}" for g, e in self.factors)

    def __repr__(self):
        return f"Word({str(self)!r})"


L = Word.gen("L")
R = Word.gen("R")
S = L * R.inverse() * L


def evaluate_word(w: Word, sigma_l: Permutation, sigma_r: Permutation) -> Permutation:
    """Substitute ``sigma_l`` for L and ``sigma_r`` for R and multiply out."""
    _same_degree(sigma_l, sigma_r)
    factors = [(0 if g == "L" else 1, e) for g, e in w.factors]
    return _trusted(_kernels.word_images(factors, sigma_l.images, sigma_r.images))
