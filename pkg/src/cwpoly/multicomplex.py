"""Simplicial multicomplexes stored by their facets.

A multicomplex on ``[n]`` is a finite down-closed set of exponent vectors
containing every unit vector. Faces are never materialized except inside the
truncation sums, whose sizes stay small at the degrees used here.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

from . import ideal as ideals
from . import monomial as mono
from .ideal import MonomialIdeal
from .monomial import ExponentVector
from .polymatroid import is_componentwise_polymatroidal, is_polymatroidal


class VertexCoverError(ValueError):
    """Some vertex index is zero in every facet, so ``e_i`` is not a face."""


def _leq(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def maximal_elements(vectors: Iterable[Sequence[int]]) -> list[ExponentVector]:
    """Maximal elements under the componentwise order, in repo order."""
    cands = sorted({tuple(v) for v in vectors}, key=mono.sort_key, reverse=True)
    kept: list[ExponentVector] = []
    for v in cands:
        if not any(v != k and _leq(v, k) for k in kept):
            kept.append(v)
    return mono.sorted_vectors(kept)


@dataclass(frozen=True)
class Multicomplex:
    n: int
    facets: tuple[ExponentVector, ...]

    def __str__(self) -> str:
        return "<" + ", ".join(map(str, self.facets)) + ">"

    def contains(self, a: Sequence[int]) -> bool:
        return any(_leq(a, f) for f in self.facets)

    def uncovered(self) -> list[int]:
        return [i for i in range(self.n) if all(f[i] == 0 for f in self.facets)]


def _from_maximal(n: int, vectors: Iterable[Sequence[int]]) -> Multicomplex:
    return Multicomplex(n, tuple(maximal_elements(vectors)))


def from_facet_candidates(n: int, vectors: Iterable[Sequence[int]]) -> Multicomplex:
    """The smallest multicomplex containing ``vectors``."""
    vecs = [mono.vector(v) for v in vectors]
    if not vecs:
        raise ValueError("need at least one facet candidate")
    for v in vecs:
        if len(v) != n:
            raise ValueError(f"vector {v} does not have length {n}")
        if not any(v):
            raise ValueError("the zero vector cannot be a facet candidate")
    M = _from_maximal(n, vecs)
    missing = M.uncovered()
    if missing:
        raise VertexCoverError(
            "unit vectors missing from the multicomplex: "
            + ", ".join(f"e{i + 1}" for i in missing))
    return M


def ideal_to_multicomplex(I: MonomialIdeal) -> Multicomplex:
    if I.is_zero or I.is_unit:
        raise ValueError("need a proper nonzero ideal")
    return from_facet_candidates(I.n, I.gens)


def restrict_to_support(I: MonomialIdeal) -> tuple[MonomialIdeal, tuple[int, ...]]:
    """Drop the variables no generator uses; returns the ideal and the kept indices."""
    keep = ideals.support(I)
    return ideals.restrict(I, keep), keep


def facet_ideal(M: Multicomplex) -> MonomialIdeal:
    return MonomialIdeal(M.n, tuple(mono.sorted_vectors(M.facets)))


@dataclass(frozen=True)
class Stats:
    dim: int
    alpha: int
    omega: int
    pure: bool


def stats(M: Multicomplex) -> Stats:
    degs = [sum(f) for f in M.facets]
    lo, hi = min(degs), max(degs)
    return Stats(hi - 1, lo, hi, lo == hi)


@dataclass(frozen=True)
class ShellingResult:
    order: tuple[ExponentVector, ...]
    valid: bool
    certificate: tuple[tuple[int, tuple[ExponentVector, ...]], ...]
    failed_at: int | None = None

    def __bool__(self) -> bool:
        return self.valid


def _check_order(M: Multicomplex, order: Sequence[Sequence[int]]) -> tuple[ExponentVector, ...]:
    order = tuple(tuple(a) for a in order)
    if sorted(order) != sorted(M.facets):
        raise ValueError("order is not a permutation of the facets")
    return order


def _meet_rule(order: Sequence[ExponentVector]):
    """Each new facet must meet the earlier ones in facets one degree lower."""
    cert = []
    for j in range(1, len(order)):
        a = order[j]
        inter = tuple(maximal_elements(mono.meet(order[i], a) for i in range(j)))
        cert.append((j + 1, inter))
        if any(sum(b) != sum(a) - 1 for b in inter):
            return tuple(cert), j + 1
    return tuple(cert), None


def verify_meet_shelling(M: Multicomplex, order: Sequence[Sequence[int]]) -> ShellingResult:
    """``<a_1..a_{j-1}> ∩ <a_j>`` must have all facets of degree ``|a_j| - 1``.

    This is the rule read literally on the facets themselves. It matches
    linear quotients of the ideal generated by the complements ``c - a``
    rather than of the facet ideal; see :func:`verify_shelling`.
    """
    order = _check_order(M, order)
    cert, failed = _meet_rule(order)
    return ShellingResult(order, failed is None, cert, failed)


def verify_shelling(M: Multicomplex, order: Sequence[Sequence[int]]) -> ShellingResult:
    """Shelling test matching linear quotients of the facet ideal.

    Facets are reflected through their bounding box ``c = join(F)``,
    ``a -> c - a``, and the meet rule is applied to the reflected sequence.
    Reflection turns meets into joins, so the certificate is reported back in
    the original coordinates: for each position, the minimal joins
    ``join(a_i, a_j)``, each of which must sit exactly one degree above ``a_j``.
    """
    order = _check_order(M, order)
    c = reduce(mono.join, order)
    reflected = [mono.subtract(c, a) for a in order]
    cert, failed = _meet_rule(reflected)
    back = tuple((pos, tuple(mono.sorted_vectors(mono.subtract(c, b) for b in inter)))
                 for pos, inter in cert)
    return ShellingResult(order, failed is None, back, failed)


def shelling_order(P: Multicomplex) -> ShellingResult:
    """Shelling of a componentwise discrete polymatroid, from its linear-quotients order."""
    from .linear_quotients import NotComponentwisePolymatroidalError, synthesize_lq_order

    I = facet_ideal(P)
    verdict = is_componentwise_polymatroidal(I)
    if not verdict:
        raise NotComponentwisePolymatroidalError(verdict.witness)
    order = synthesize_lq_order(I, checked=False).order
    result = verify_shelling(P, order)
    assert result.valid, "synthesized order is not a shelling"
    return result


def minkowski_sum(A: Iterable[Sequence[int]], B: Iterable[Sequence[int]]) -> set[ExponentVector]:
    B = [tuple(b) for b in B]
    return {mono.add(a, b) for a in A for b in B}


def simplex_multicomplex(n: int, d: int) -> set[ExponentVector]:
    """``[n]^<d>``: every vector of total degree at most ``d``, including zero."""
    return set(mono.enumerate_up_to(n, d))


def bases_up_to(P: Multicomplex, k: int) -> list[ExponentVector]:
    """Facets (bases) of degree at most ``k``."""
    return [f for f in P.facets if sum(f) <= k]


def truncation_union(P: Multicomplex, j: int) -> set[ExponentVector]:
    """Union over ``k = alpha..j`` of (bases of degree <= k) + ``[n]^<j-k>``."""
    alpha = stats(P).alpha
    out: set[ExponentVector] = set()
    for k in range(alpha, j + 1):
        out |= minkowski_sum(bases_up_to(P, k), simplex_multicomplex(P.n, j - k))
    return out


def truncation_sum(P: Multicomplex, j: int) -> Multicomplex:
    """The multicomplex generated by :func:`truncation_union`, by its facets.

    Its facets are the degree-``j`` multiples of the bases. They need not
    cover every vertex, so no vertex check is made here.
    """
    s = stats(P)
    if not s.alpha <= j <= s.omega:
        raise ValueError(f"degree {j} outside [{s.alpha}, {s.omega}]")
    return _from_maximal(P.n, truncation_union(P, j))


def _union_exchange_holds(P: Multicomplex) -> bool:
    """Exchange condition on the union of all truncation sums up to the top degree."""
    s = stats(P)
    W: set[ExponentVector] = set()
    for ell in range(s.alpha, s.omega + 1):
        W |= truncation_union(P, ell)
    elems = sorted(W, key=mono.sort_key)
    n = P.n
    # rescue[b][i]: bitmask of j with b - e_i + e_j in W
    rescue = {}
    for b in elems:
        row = []
        for i in range(n):
            bits = 0
            if b[i] > 0:
                for j in range(n):
                    if j != i and mono.shift(b, i, j) in W:
                        bits |= 1 << j
            row.append(bits)
        rescue[b] = row
    for a in elems:
        da = sum(a)
        if da < s.alpha:
            continue
        for b in elems:
            if sum(b) < da or _leq(a, b):
                continue
            lower = 0
            for j in range(n):
                if b[j] < a[j]:
                    lower |= 1 << j
            for i in range(n):
                if b[i] > a[i] and not rescue[b][i] & lower:
                    return False
    return True


@dataclass(frozen=True)
class CharacterizationResult:
    by_definition: bool
    by_truncations: bool
    by_exchange: bool

    @property
    def agree(self) -> bool:
        return self.by_definition == self.by_truncations == self.by_exchange

    def __bool__(self) -> bool:
        return self.by_definition


def is_componentwise_discrete_polymatroid(M: Multicomplex) -> CharacterizationResult:
    """Decide the property three ways: facet ideal, truncation sums, union exchange."""
    s = stats(M)
    by_def = bool(is_componentwise_polymatroidal(facet_ideal(M)))
    by_trunc = all(bool(is_polymatroidal(facet_ideal(truncation_sum(M, j))))
                   for j in range(s.alpha, s.omega + 1))
    return CharacterizationResult(by_def, by_trunc, _union_exchange_holds(M))


def is_discrete_polymatroid(M: Multicomplex) -> bool:
    return stats(M).pure and bool(is_componentwise_discrete_polymatroid(M))
