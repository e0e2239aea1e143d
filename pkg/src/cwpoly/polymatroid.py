"""Exchange-property checks for polymatroidal and componentwise polymatroidal ideals.

Every check returns a :class:`Verdict`. On failure the verdict carries the
first violation in a fixed enumeration order, so failures are reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import ideal as ideals
from . import monomial as mono
from .ideal import MonomialIdeal
from .monomial import ExponentVector


@dataclass(frozen=True)
class ExchangeWitness:
    """A failed exchange: ``u``, ``v`` and the 0-based variable index ``i``.

    ``degree`` is the degree of the component (or of ``v``) where the failure
    sits. ``j`` is only set by the strong exchange check.
    """

    u: ExponentVector
    v: ExponentVector
    i: int
    degree: int
    j: int | None = None

    def to_json(self) -> dict:
        out = {"u": list(self.u), "v": list(self.v), "i": self.i + 1, "degree": self.degree}
        if self.j is not None:
            out["j"] = self.j + 1
        return out

    def describe(self) -> str:
        s = (f"u={mono.format_monomial(self.u)} v={mono.format_monomial(self.v)} "
             f"i={self.i + 1} degree={self.degree}")
        return s if self.j is None else f"{s} j={self.j + 1}"


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: ExchangeWitness | None = None

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> dict:
        return {"holds": self.holds,
                "witness": None if self.witness is None else self.witness.to_json()}


HOLDS = Verdict(True)


def _require_equigenerated(E: MonomialIdeal) -> int:
    d = E.equidegree
    if d is None:
        raise ValueError(f"ideal is not generated in a single degree: degrees {E.degrees()}")
    return d


def _exchange_masks(gens: Sequence[ExponentVector], members: frozenset, n: int) -> np.ndarray:
    """``masks[r, i]`` = bitmask of ``j`` with ``gens[r] - e_i + e_j`` in ``members``."""
    masks = np.zeros((len(gens), n), dtype=np.int64)
    for r, u in enumerate(gens):
        for i in range(n):
            if u[i] == 0:
                continue
            bits = 0
            for j in range(n):
                if j != i and mono.shift(u, i, j) in members:
                    bits |= 1 << j
            masks[r, i] = bits
    return masks


def _scan_generators(E: MonomialIdeal, strong: bool) -> Verdict:
    if len(E.gens) <= 1:
        return HOLDS
    d = _require_equigenerated(E)
    n = E.n
    G = np.array(E.gens, dtype=np.int64)
    pow2 = (1 << np.arange(n, dtype=np.int64))
    masks = _exchange_masks(E.gens, E.gen_set, n)
    full = (1 << n) - 1
    for r, u in enumerate(E.gens):
        ua = G[r]
        lower = G < ua                      # v[i] < u[i]: i admissible
        upper_bits = (G > ua).astype(np.int64) @ pow2   # j with u[j] < v[j]
        if strong:
            bad = lower & ((upper_bits[:, None] & (full ^ masks[r])[None, :]) != 0)
        else:
            bad = lower & ((upper_bits[:, None] & masks[r][None, :]) == 0)
        if bad.any():
            s, i = divmod(int(np.argmax(bad.ravel())), n)
            j = None
            if strong:
                missing = int(upper_bits[s]) & (full ^ int(masks[r, i]))
                j = (missing & -missing).bit_length() - 1
            return Verdict(False, ExchangeWitness(u, E.gens[s], i, d, j))
    return HOLDS


def is_polymatroidal(E: MonomialIdeal) -> Verdict:
    """Symmetric exchange on the generators of an equigenerated ideal.

    For all generators ``u, v`` and every ``i`` with ``u[i] > v[i]`` some ``j``
    with ``u[j] < v[j]`` must give ``u - e_i + e_j`` in ``G(E)``. Zero and unit
    ideals hold vacuously.
    """
    return _scan_generators(E, strong=False)


def has_strong_exchange(E: MonomialIdeal) -> Verdict:
    """Like :func:`is_polymatroidal`, but the exchange must work for every admissible ``j``."""
    return _scan_generators(E, strong=True)


def is_componentwise_polymatroidal(I: MonomialIdeal) -> Verdict:
    """Check every graded component between the initial and the top generator degree.

    Components above the top degree are ``m^k`` times the top one, hence
    polymatroidal whenever that one is.
    """
    if I.is_zero:
        return HOLDS
    lo, hi = ideals.degree_range(I)
    for j in range(lo, hi + 1):
        v = is_polymatroidal(ideals.component(I, j))
        if not v:
            return v
    return HOLDS


def _members_table(I: MonomialIdeal, cap: int):
    """Members of ``I`` up to degree ``cap`` and the same-degree shift table.

    ``T[r, a, b]`` is True when ``W[r] - e_a + e_b`` lies in ``I``.
    """
    W: list[ExponentVector] = []
    lo = ideals.degree_range(I)[0]
    for d in range(lo, cap + 1):
        W.extend(ideals.members_of_degree(I, d))
    index = set(W)
    n = I.n
    T = np.zeros((len(W), n, n), dtype=bool)
    for r, w in enumerate(W):
        for a in range(n):
            if w[a] == 0:
                continue
            for b in range(n):
                if b != a and mono.shift(w, a, b) in index:
                    T[r, a, b] = True
    return W, T


def _check_cap(I: MonomialIdeal, cap: int) -> None:
    hi = ideals.degree_range(I)[1]
    if cap < hi:
        raise ValueError(f"cap {cap} is below the top generator degree {hi}")


_CHUNK = 32


def _bounded_scan(I: MonomialIdeal, cap: int, dual: bool) -> Verdict:
    if I.is_zero:
        return HOLDS
    _check_cap(I, cap)
    W, T = _members_table(I, cap)
    if not W:
        return HOLDS
    V = np.array(W, dtype=np.int64)
    deg = V.sum(axis=1)
    if dual:
        # x_i moves into v from a j where v exceeds u: need T[v, j, i]
        T = np.ascontiguousarray(T.transpose(0, 2, 1))
    Tf = T.astype(np.int32)
    n = I.n
    for start in range(0, len(W), _CHUNK):
        U = V[start:start + _CHUNK]
        sel = deg[None, :] >= deg[start:start + _CHUNK, None]          # (u, v)
        if dual:
            admissible = V[None, :, :] < U[:, None, :]                  # v[i] < u[i]
            helpers = V[None, :, :] > U[:, None, :]                     # v[j] > u[j]
            gate = sel
        else:
            admissible = V[None, :, :] > U[:, None, :]                  # v[i] > u[i]
            helpers = U[:, None, :] > V[None, :, :]                     # v[j] < u[j]
            gate = sel & helpers.any(axis=2)                            # u does not divide v
        rescued = np.einsum("uvj,vij->uvi", helpers.astype(np.int32), Tf) > 0
        bad = gate[:, :, None] & admissible & ~rescued
        if bad.any():
            flat = int(np.argmax(bad.ravel()))
            du, rest = divmod(flat, len(W) * n)
            s, i = divmod(rest, n)
            u, v = W[start + du], W[s]
            return Verdict(False, ExchangeWitness(u, v, i, sum(v)))
    return HOLDS


def verify_exchange_condition_bounded(I: MonomialIdeal, cap: int) -> Verdict:
    """Bounded check of the exchange characterization of componentwise polymatroidality.

    Scans all monomials ``u, v`` of ``I`` with ``deg u <= deg v <= cap`` and
    ``u`` not dividing ``v``; for every ``i`` with ``v[i] > u[i]`` it looks for
    ``j`` with ``v[j] < u[j]`` and ``v - e_i + e_j`` in ``I``. The property
    quantifies over all of ``I``, so a pass is evidence only up to ``cap``;
    :func:`is_componentwise_polymatroidal` is the decision procedure.
    Violations are reported in (u, v, i) order.
    """
    return _bounded_scan(I, cap, dual=False)


def verify_dual_exchange_bounded(I: MonomialIdeal, cap: int) -> Verdict:
    """Bounded check of the dual exchange property.

    For ``u, v`` in ``I`` with ``deg u <= deg v <= cap`` and every ``i`` with
    ``v[i] < u[i]`` some ``j`` with ``v[j] > u[j]`` must give
    ``v - e_j + e_i`` in ``I``.
    """
    return _bounded_scan(I, cap, dual=True)
