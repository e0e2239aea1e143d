"""Builders for the standard families of (componentwise) polymatroidal ideals."""
from __future__ import annotations

import warnings
from functools import reduce
from typing import Iterable, Sequence

from . import ideal as ideals
from . import monomial as mono
from .ideal import MonomialIdeal
from .monomial import ExponentVector
from .polymatroid import is_polymatroidal


class LayeringError(ValueError):
    """The layers of a layered sum violate the degree or inclusion conditions."""


class UnionConditionWarning(UserWarning):
    """Fat-point sets do not pairwise cover all variables."""


def veronese_type(bound: Sequence[int], d: int) -> MonomialIdeal:
    """Degree-``d`` monomials whose exponents are capped by ``bound``."""
    bound = mono.vector(bound)
    if d < 1:
        raise ValueError("degree must be at least 1")
    gens = [b for b in mono.enumerate_degree(len(bound), d)
            if all(x <= y for x, y in zip(b, bound))]
    return MonomialIdeal(len(bound), tuple(mono.sorted_vectors(gens)))


def _index_multiset(a: Sequence[int]) -> list[int]:
    return [i for i, e in enumerate(a) for _ in range(e)]


def borel_leq(v: Sequence[int], u: Sequence[int]) -> bool:
    """Borel order: the sorted variable indices of ``v`` are positionwise <= those of ``u``."""
    if len(v) != len(u):
        raise ValueError("length mismatch")
    if sum(v) != sum(u):
        raise ValueError(f"degree mismatch: {sum(v)} != {sum(u)}")
    return all(j <= i for j, i in zip(_index_multiset(v), _index_multiset(u)))


def principal_borel(u: Sequence[int]) -> MonomialIdeal:
    u = mono.vector(u)
    if sum(u) < 1:
        raise ValueError("principal Borel ideal needs a generator of positive degree")
    gens = [v for v in mono.enumerate_degree(len(u), sum(u)) if borel_leq(v, u)]
    return MonomialIdeal(len(u), tuple(mono.sorted_vectors(gens)))


def borel_maximum(E: MonomialIdeal) -> ExponentVector | None:
    """The generator above all others in the Borel order, if there is one."""
    for g in E.gens:
        if all(borel_leq(h, g) for h in E.gens):
            return g
    return None


def is_componentwise_principal_borel(I: MonomialIdeal) -> bool:
    if I.is_zero:
        return True
    lo, hi = ideals.degree_range(I)
    tops: list[ExponentVector] = []
    for j in range(lo, hi + 1):
        comp = ideals.component(I, j)
        top = borel_maximum(comp)
        if top is None or sum(top) == 0 or principal_borel(top) != comp:
            return False
        tops.append(top)
    last = I.n - 1
    for a, b in zip(tops, tops[1:]):
        grown = list(a)
        grown[last] += sum(b) - sum(a)
        if not borel_leq(grown, b):
            return False
    return True


def prime_power(n: int, subset: Iterable[int], k: int) -> MonomialIdeal:
    """``P_A^k``: all degree-``k`` monomials in the variables of ``A`` (0-based indices)."""
    A = sorted(set(subset))
    if not A:
        raise ValueError("variable subset must be nonempty")
    if A[0] < 0 or A[-1] >= n:
        raise ValueError(f"variable subset {A} out of range for {n} variables")
    if k < 1:
        raise ValueError("exponent must be positive")
    gens = []
    for small in mono.enumerate_degree(len(A), k):
        a = [0] * n
        for idx, e in zip(A, small):
            a[idx] = e
        gens.append(tuple(a))
    return MonomialIdeal(n, tuple(mono.sorted_vectors(gens)))


def fat_point_ideal(n: int, subsets: Sequence[Iterable[int]], powers: Sequence[int]) -> MonomialIdeal:
    """Intersection of ``P_{A_i}^{k_i}``; subsets use 0-based variable indices.

    Emits :class:`UnionConditionWarning` when two subsets fail to cover all
    variables together; the ideal is still returned.
    """
    subsets = [frozenset(A) for A in subsets]
    if len(subsets) != len(powers):
        raise ValueError("need one exponent per subset")
    if not subsets:
        raise ValueError("need at least one subset")
    everything = frozenset(range(n))
    for a in range(len(subsets)):
        for b in range(a + 1, len(subsets)):
            if subsets[a] | subsets[b] != everything:
                warnings.warn(
                    f"subsets {sorted(x + 1 for x in subsets[a])} and "
                    f"{sorted(x + 1 for x in subsets[b])} do not cover all variables; "
                    "componentwise polymatroidality is not guaranteed",
                    UnionConditionWarning, stacklevel=2)
    parts = [prime_power(n, A, k) for A, k in zip(subsets, powers)]
    return reduce(ideals.intersect, parts)


def layered_sum(layers: Sequence[MonomialIdeal], validate: bool = True) -> MonomialIdeal:
    """Sum of equigenerated layers ``J_1 + ... + J_t`` with increasing degrees.

    With ``validate`` each layer must be polymatroidal and
    ``m^(d_{i+1} - d_i) J_i`` must lie in ``J_{i+1}``.
    """
    if not layers:
        raise LayeringError("need at least one layer")
    degs = []
    for J in layers:
        d = J.equidegree
        if d is None:
            raise LayeringError("every layer must be generated in a single degree")
        degs.append(d)
    if any(a >= b for a, b in zip(degs, degs[1:])):
        raise LayeringError(f"layer degrees must increase strictly, got {degs}")
    n = layers[0].n
    if validate:
        for k, J in enumerate(layers):
            v = is_polymatroidal(J)
            if not v:
                raise LayeringError(f"layer {k + 1} is not polymatroidal: {v.witness.describe()}")
        for k in range(len(layers) - 1):
            grown = ideals.product(MonomialIdeal.maximal_power(n, degs[k + 1] - degs[k]), layers[k])
            if not ideals.is_subideal(grown, layers[k + 1]):
                missing = next(g for g in grown.gens if not ideals.contains(layers[k + 1], g))
                raise LayeringError(
                    f"m^{degs[k + 1] - degs[k]} * J{k + 1} is not inside J{k + 2}: "
                    f"{mono.format_monomial(missing)} is missing")
    return reduce(ideals.ideal_sum, layers)


def layered_component(layers: Sequence[MonomialIdeal], j: int) -> MonomialIdeal:
    """Graded component of a valid layered sum, by the case formula on layer degrees."""
    n = layers[0].n
    degs = [J.equidegree for J in layers]
    if j < degs[0]:
        return MonomialIdeal.zero(n)
    k = max(idx for idx, d in enumerate(degs) if d <= j)
    if j == degs[k]:
        return layers[k]
    return ideals.product(MonomialIdeal.maximal_power(n, j - degs[k]), layers[k])


def socle(E: MonomialIdeal) -> MonomialIdeal:
    """Degree ``d-1`` part of ``(E : m)`` for ``E`` generated in degree ``d >= 1``."""
    d = E.equidegree
    if E.is_zero:
        return E
    if d is None or d < 1:
        raise ValueError("socle needs an ideal generated in one positive degree")
    return ideals.component(ideals.colon_by_maximal(E), d - 1)
