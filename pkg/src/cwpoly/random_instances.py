"""Seeded random instances from the componentwise polymatroidal families.

Every generator takes a :class:`random.Random` and returns an
:class:`Instance` whose ``params`` are JSON-serializable, so a draw can be
recorded and rebuilt.
"""
from __future__ import annotations

import random
import warnings
from dataclasses import dataclass, field

from . import constructors as cons
from . import ideal as ideals
from .ideal import MonomialIdeal


@dataclass(frozen=True)
class Instance:
    family: str
    ideal: MonomialIdeal
    params: dict = field(default_factory=dict)


def _random_vector(rng: random.Random, n: int, d: int) -> tuple[int, ...]:
    a = [0] * n
    for _ in range(d):
        a[rng.randrange(n)] += 1
    return tuple(a)


def random_veronese(rng: random.Random, n: int, d: int) -> Instance:
    while True:
        bound = tuple(rng.randint(0, d) for _ in range(n))
        if sum(bound) >= d:
            break
    return Instance("veronese", cons.veronese_type(bound, d), {"bound": list(bound), "d": d})


def random_borel(rng: random.Random, n: int, d: int) -> Instance:
    u = _random_vector(rng, n, d)
    return Instance("borel", cons.principal_borel(u), {"u": list(u)})


def random_prime_power(rng: random.Random, n: int, d: int) -> Instance:
    A = sorted(rng.sample(range(n), rng.randint(1, n)))
    return Instance("prime_power", cons.prime_power(n, A, d), {"subset": A, "k": d})


def random_polymatroidal(rng: random.Random, n: int, d: int) -> Instance:
    """An equigenerated polymatroidal ideal of degree ``d``."""
    kind = rng.choice(["veronese", "borel", "prime_power", "product", "shifted"])
    if kind == "veronese":
        return random_veronese(rng, n, d)
    if kind == "borel":
        return random_borel(rng, n, d)
    if kind == "prime_power":
        return random_prime_power(rng, n, d)
    if kind == "product" and d >= 2:
        d1 = rng.randint(1, d - 1)
        a = random_polymatroidal(rng, n, d1)
        b = random_polymatroidal(rng, n, d - d1)
        return Instance("product", ideals.product(a.ideal, b.ideal),
                        {"left": a.params | {"family": a.family},
                         "right": b.params | {"family": b.family}})
    if kind == "shifted" and d >= 2:
        w = _random_vector(rng, n, rng.randint(1, d - 1))
        inner = random_veronese(rng, n, d - sum(w))
        return Instance("shifted_veronese", ideals.multiply_by_monomial(inner.ideal, w),
                        {"w": list(w)} | inner.params)
    return random_veronese(rng, n, d)


def random_layered(rng: random.Random, n: int, top: int) -> Instance:
    t = rng.randint(2, min(3, top))
    degs = sorted(rng.sample(range(1, top + 1), t))
    layers = [random_polymatroidal(rng, n, degs[0]).ideal]
    for d in degs[1:]:
        base = ideals.product(MonomialIdeal.maximal_power(n, d - layers[-1].equidegree), layers[-1])
        nxt = None
        for _ in range(4):
            cand = random_polymatroidal(rng, n, d).ideal
            if ideals.is_subideal(base, cand):
                nxt = cand
                break
        if nxt is None and rng.random() < 0.6:
            hull = [max(g[i] for g in base.gens) for i in range(n)]
            bound = [h + rng.randint(0, 1) for h in hull]
            nxt = cons.veronese_type(bound, d)
        if nxt is None:
            nxt = base
        layers.append(nxt)
    I = cons.layered_sum(layers, validate=False)
    return Instance("layered", I, {"layers": [[list(g) for g in J.gens] for J in layers]})


def random_borel_chain(rng: random.Random, n: int, top: int) -> Instance:
    """``B(u_1) + ... + B(u_t)`` with ``u_i x_n^(d_{i+1}-d_i)`` Borel-below ``u_{i+1}``."""
    t = rng.randint(1, min(3, top))
    degs = sorted(rng.sample(range(1, top + 1), t))
    us = [_random_vector(rng, n, degs[0])]
    for d in degs[1:]:
        u = list(us[-1])
        u[n - 1] += d - sum(u)
        for _ in range(rng.randint(0, 3)):
            # moving a factor to a higher variable goes up in the Borel order
            i = rng.randrange(n - 1) if n > 1 else 0
            if n > 1 and u[i] > 0:
                u[i] -= 1
                u[i + 1] += 1
        us.append(tuple(u))
    I = cons.layered_sum([cons.principal_borel(u) for u in us], validate=False)
    return Instance("borel_chain", I, {"us": [list(u) for u in us]})


def random_fat_points(rng: random.Random, n: int, top: int) -> Instance:
    """Intersection of prime powers whose subsets pairwise cover all variables."""
    while True:
        t = rng.randint(1, 3)
        # variables in bin k > 0 are left out of A_k only, so A_i ∪ A_j = [n]
        bins = [rng.randint(0, t) for _ in range(n)]
        subsets = [[i for i in range(n) if bins[i] != k] for k in range(1, t + 1)]
        if any(not A for A in subsets):
            continue
        ks = [rng.randint(1, 3) for _ in range(t)]
        with warnings.catch_warnings():
            warnings.simplefilter("error", cons.UnionConditionWarning)
            I = cons.fat_point_ideal(n, subsets, ks)
        if ideals.degree_range(I)[1] <= top:
            return Instance("fatpoints", I, {"subsets": subsets, "k": ks})


CWP_FAMILIES = {
    "veronese": lambda rng, n, top: random_veronese(rng, n, rng.randint(1, top)),
    "borel": lambda rng, n, top: random_borel_chain(rng, n, top),
    "layered": random_layered,
    "fatpoints": random_fat_points,
}


def random_cwp(rng: random.Random, family: str, n_max: int = 5, top: int = 6,
               max_gens: int | None = None) -> Instance:
    """A componentwise polymatroidal ideal from ``family`` with ``n <= n_max``, top degree <= ``top``."""
    make = CWP_FAMILIES[family]
    while True:
        n = rng.randint(2, n_max)
        inst = make(rng, n, top)
        I = inst.ideal
        if I.is_zero or ideals.degree_range(I)[1] > top:
            continue
        if max_gens is not None and len(I) > max_gens:
            continue
        return Instance(inst.family, I, inst.params | {"n": n})


def random_ideal(rng: random.Random, n: int, top: int, max_gens: int) -> MonomialIdeal:
    """Arbitrary monomial ideal from random generators of degree ``1..top``."""
    count = rng.randint(1, max_gens)
    vecs = [_random_vector(rng, n, rng.randint(1, top)) for _ in range(count)]
    return MonomialIdeal.from_vectors(n, vecs)
