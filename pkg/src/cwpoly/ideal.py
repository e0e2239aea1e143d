"""Monomial ideals represented by their minimal generators."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterable, Sequence

from . import monomial as mono
from .monomial import ExponentVector


def _minimal(n: int, vectors: Iterable[Sequence[int]]) -> tuple[ExponentVector, ...]:
    cands = set()
    for v in vectors:
        v = mono.vector(v)
        if len(v) != n:
            raise ValueError(f"generator {v} does not have length {n}")
        cands.add(v)
    kept: list[ExponentVector] = []
    # a divisor of v has smaller degree, so scanning by degree suffices
    for v in sorted(cands, key=mono.sort_key):
        dv = sum(v)
        if not any(sum(g) < dv and all(x <= y for x, y in zip(g, v)) for g in kept):
            kept.append(v)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal in ``n`` variables, stored as its minimal generators.

    ``gens`` is always an antichain in repo order. The zero ideal has no
    generators; the unit ideal has the single generator ``(0, ..., 0)``.
    Build instances with :meth:`from_vectors` (or :func:`minimalize`).
    """

    n: int
    gens: tuple[ExponentVector, ...]

    @classmethod
    def from_vectors(cls, n: int, vectors: Iterable[Sequence[int]]) -> "MonomialIdeal":
        return cls(n, _minimal(n, vectors))

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, (mono.zero(n),))

    @classmethod
    def maximal(cls, n: int) -> "MonomialIdeal":
        return cls.from_vectors(n, (mono.unit(n, i) for i in range(n)))

    @classmethod
    def maximal_power(cls, n: int, d: int) -> "MonomialIdeal":
        return cls(n, tuple(mono.sorted_vectors(mono.enumerate_degree(n, d))))

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __contains__(self, a) -> bool:
        return contains(self, a)

    def __str__(self) -> str:
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(mono.format_monomial(g) for g in self.gens) + ")"

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == (mono.zero(self.n),)

    @cached_property
    def gen_set(self) -> frozenset[ExponentVector]:
        return frozenset(self.gens)

    @property
    def equidegree(self) -> int | None:
        """The common generator degree, or None if generated in several degrees."""
        degs = {sum(g) for g in self.gens}
        return degs.pop() if len(degs) == 1 else None

    def degrees(self) -> list[int]:
        return sorted({sum(g) for g in self.gens})


def minimalize(n: int, vectors: Iterable[Sequence[int]]) -> MonomialIdeal:
    return MonomialIdeal.from_vectors(n, vectors)


def _same_ring(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.n != J.n:
        raise ValueError(f"ideals live in different rings ({I.n} vs {J.n} variables)")


def contains(I: MonomialIdeal, a: Sequence[int]) -> bool:
    if len(a) != I.n:
        raise ValueError(f"length mismatch: {len(a)} != {I.n}")
    return any(all(x <= y for x, y in zip(g, a)) for g in I.gens)


def degree_range(I: MonomialIdeal) -> tuple[int, int]:
    """(initial degree, largest generator degree)."""
    if I.is_zero:
        raise ValueError("degree range of the zero ideal is undefined")
    degs = [sum(g) for g in I.gens]
    return min(degs), max(degs)


def component(I: MonomialIdeal, j: int) -> MonomialIdeal:
    """The ideal generated by the degree-``j`` monomials of ``I``."""
    if j < 0:
        raise ValueError("degree must be nonnegative")
    out: set[ExponentVector] = set()
    for g in I.gens:
        dg = sum(g)
        if dg <= j:
            for m in mono.enumerate_degree(I.n, j - dg):
                out.add(mono.add(g, m))
    # all candidates have degree j, so they already form an antichain
    return MonomialIdeal(I.n, tuple(mono.sorted_vectors(out)))


def colon_by_monomial(I: MonomialIdeal, v: Sequence[int]) -> MonomialIdeal:
    """``(I : x^v)``."""
    if len(v) != I.n:
        raise ValueError(f"length mismatch: {len(v)} != {I.n}")
    return MonomialIdeal.from_vectors(I.n, (mono.excess(g, v) for g in I.gens))


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal.from_vectors(I.n, (mono.join(g, h) for g in I.gens for h in J.gens))


def colon_by_maximal(I: MonomialIdeal) -> MonomialIdeal:
    """``(I : m)`` where ``m = (x1, ..., xn)``."""
    parts = [colon_by_monomial(I, mono.unit(I.n, i)) for i in range(I.n)]
    return reduce(intersect, parts)


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal.from_vectors(I.n, (mono.add(g, h) for g in I.gens for h in J.gens))


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 1:
        raise ValueError("power exponent must be at least 1")
    out = I
    for _ in range(k - 1):
        out = product(out, I)
    return out


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal.from_vectors(I.n, I.gens + J.gens)


def is_subideal(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """True iff ``I`` is contained in ``J``."""
    _same_ring(I, J)
    return all(contains(J, g) for g in I.gens)


def divide_out_common_factor(I: MonomialIdeal) -> tuple[ExponentVector, MonomialIdeal]:
    """Split ``I = x^w * I'`` with ``w`` the gcd of all generators."""
    if I.is_zero:
        raise ValueError("the zero ideal has no common factor")
    w = reduce(mono.meet, I.gens)
    return w, MonomialIdeal(I.n, tuple(mono.subtract(g, w) for g in I.gens))


def multiply_by_monomial(I: MonomialIdeal, w: Sequence[int]) -> MonomialIdeal:
    return MonomialIdeal(I.n, tuple(mono.add(g, w) for g in I.gens))


def members_of_degree(I: MonomialIdeal, d: int) -> list[ExponentVector]:
    """All degree-``d`` monomials lying in ``I``, in repo order."""
    return list(component(I, d).gens)


def support(I: MonomialIdeal) -> tuple[int, ...]:
    """0-based indices of the variables occurring in some generator."""
    return tuple(i for i in range(I.n) if any(g[i] for g in I.gens))


def restrict(I: MonomialIdeal, keep: Sequence[int]) -> MonomialIdeal:
    """View ``I`` as an ideal in the variables ``keep`` (0-based, increasing)."""
    keep = tuple(keep)
    dropped = [i for i in range(I.n) if i not in keep]
    if any(g[i] for g in I.gens for i in dropped):
        raise ValueError("a generator involves a dropped variable")
    return MonomialIdeal(len(keep), tuple(mono.sorted_vectors(tuple(g[i] for i in keep) for g in I.gens)))


def extend(I: MonomialIdeal, n: int, positions: Sequence[int]) -> MonomialIdeal:
    """Inverse of :func:`restrict`: place variable ``k`` of ``I`` at index ``positions[k]``."""
    def lift(g):
        a = [0] * n
        for k, e in zip(positions, g):
            a[k] = e
        return tuple(a)
    return MonomialIdeal(n, tuple(mono.sorted_vectors(lift(g) for g in I.gens)))
