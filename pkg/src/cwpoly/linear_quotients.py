"""Linear-quotients orders: verification, synthesis by splitting, and exhaustive search."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from typing import Sequence

from . import ideal as ideals
from . import monomial as mono
from .ideal import MonomialIdeal
from .monomial import ExponentVector
from .polymatroid import ExchangeWitness, is_componentwise_polymatroidal


class NotComponentwisePolymatroidalError(ValueError):
    def __init__(self, witness: ExchangeWitness):
        super().__init__(f"ideal is not componentwise polymatroidal: {witness.describe()}")
        self.witness = witness


@dataclass(frozen=True)
class ColonStep:
    position: int                       # 1-based position in the order
    colon_generators: tuple[ExponentVector, ...]

    @property
    def linear(self) -> bool:
        return all(sum(g) == 1 for g in self.colon_generators)


@dataclass(frozen=True)
class GeneratorOrder:
    ideal: MonomialIdeal
    order: tuple[ExponentVector, ...]
    valid: bool
    certificate: tuple[ColonStep, ...] = ()
    failed_at: int | None = None        # 1-based position of the first non-linear colon

    def __bool__(self) -> bool:
        return self.valid

    def to_json(self) -> dict:
        return {
            "order": [list(u) for u in self.order],
            "valid": self.valid,
            "certificate": [{"position": s.position,
                             "colon_generators": [list(g) for g in s.colon_generators]}
                            for s in self.certificate],
        }


def _check_permutation(I: MonomialIdeal, order: Sequence[Sequence[int]]) -> tuple[ExponentVector, ...]:
    order = tuple(tuple(u) for u in order)
    if sorted(order) != sorted(I.gens):
        raise ValueError("order is not a permutation of the minimal generators")
    return order


def verify_linear_quotients(I: MonomialIdeal, order: Sequence[Sequence[int]]) -> GeneratorOrder:
    """Check that every prefix colon ``(u_1..u_{l-1}) : u_l`` is generated by variables.

    The certificate lists the minimal colon generators for positions
    ``2..m``, stopping at the first failure.
    """
    order = _check_permutation(I, order)
    steps = []
    for pos in range(1, len(order)):
        prefix = MonomialIdeal.from_vectors(I.n, order[:pos])
        colon = ideals.colon_by_monomial(prefix, order[pos])
        step = ColonStep(pos + 1, colon.gens)
        steps.append(step)
        if not step.linear:
            return GeneratorOrder(I, order, False, tuple(steps), pos + 1)
    return GeneratorOrder(I, order, True, tuple(steps))


def split(I: MonomialIdeal, v: int) -> tuple[MonomialIdeal, MonomialIdeal]:
    """``I = x_v * I1 + I2``: generators divisible by ``x_v`` (stripped once) and the rest."""
    first = tuple(g[:v] + (g[v] - 1,) + g[v + 1:] for g in I.gens if g[v] > 0)
    if not first:
        raise ValueError(f"x{v + 1} divides no generator")
    rest = tuple(g for g in I.gens if g[v] == 0)
    return MonomialIdeal(I.n, first), MonomialIdeal(I.n, rest)


def splitting_variable(I: MonomialIdeal) -> int:
    """Smallest variable index dividing a generator of least degree."""
    lo = ideals.degree_range(I)[0]
    return min(i for g in I.gens if sum(g) == lo for i, e in enumerate(g) if e > 0)


@dataclass(frozen=True)
class SplitClaims:
    first_contains_rest: bool
    first_part_cwp: bool
    rest_cwp: bool

    def all(self) -> bool:
        return self.first_contains_rest and self.first_part_cwp and self.rest_cwp


def split_claims(I: MonomialIdeal, v: int) -> SplitClaims:
    """Evaluate the three facts the splitting argument needs for ``I = x_v I1 + I2``.

    ``I2`` is judged in the ring without ``x_v``: componentwise
    polymatroidality depends on the ambient variables.
    """
    I1, I2 = split(I, v)
    shifted = ideals.multiply_by_monomial(I1, mono.unit(I.n, v))
    others = [i for i in range(I.n) if i != v]
    rest_cwp = True if I2.is_zero else bool(is_componentwise_polymatroidal(ideals.restrict(I2, others)))
    return SplitClaims(
        first_contains_rest=ideals.is_subideal(I2, I1),
        first_part_cwp=bool(is_componentwise_polymatroidal(shifted)),
        rest_cwp=rest_cwp,
    )


def _synthesize(n: int, gens: tuple[ExponentVector, ...]) -> list[ExponentVector]:
    if len(gens) <= 1:
        return list(gens)
    w = reduce(mono.meet, gens)
    stripped = MonomialIdeal(n, tuple(mono.subtract(g, w) for g in gens))
    v = splitting_variable(stripped)
    I1, I2 = split(stripped, v)
    ev = mono.unit(n, v)
    head = [mono.add(u, ev) for u in _synthesize(n, I1.gens)]
    tail = _synthesize(n, I2.gens)
    return [mono.add(u, w) for u in head + tail]


def synthesize_lq_order(I: MonomialIdeal, checked: bool = True) -> GeneratorOrder:
    """Linear-quotients order for a componentwise polymatroidal ideal.

    Strip the common factor, split off the generators divisible by the
    splitting variable, order both parts recursively and put the divisible
    block first. In checked mode the input is validated first; the result is
    always verified, so an unchecked call on a bad input comes back with
    ``valid=False`` rather than a wrong claim.
    """
    if checked:
        verdict = is_componentwise_polymatroidal(I)
        if not verdict:
            raise NotComponentwisePolymatroidalError(verdict.witness)
    return verify_linear_quotients(I, _synthesize(I.n, I.gens))


FOUND = "found"
NONE_FOUND = "none found"
EXHAUSTED = "budget exhausted"
DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class SearchResult:
    status: str
    order: GeneratorOrder | None = None
    nodes: int = 0

    def __bool__(self) -> bool:
        return self.status == FOUND


class _BudgetExhausted(Exception):
    pass


@dataclass
class _Search:
    gens: tuple[ExponentVector, ...]
    budget: int
    nodes: int = 0
    dead: set = field(default_factory=set)

    def __post_init__(self):
        m = len(self.gens)
        # support bitmask of x^g / gcd(x^g, x^u), and its variable index when linear
        self.support = [[0] * m for _ in range(m)]
        self.linear_var = [[-1] * m for _ in range(m)]
        for a, g in enumerate(self.gens):
            for b, u in enumerate(self.gens):
                if a == b:
                    continue
                ex = mono.excess(g, u)
                bits = 0
                for k, e in enumerate(ex):
                    if e:
                        bits |= 1 << k
                self.support[a][b] = bits
                if sum(ex) == 1:
                    self.linear_var[a][b] = bits

    def extends(self, prefix: list[int], b: int) -> bool:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExhausted
        variables = 0
        for a in prefix:
            if self.linear_var[a][b] >= 0:
                variables |= self.linear_var[a][b]
        return all(self.support[a][b] & variables for a in prefix)

    def run(self, prefix: list[int], used: int) -> bool:
        m = len(self.gens)
        if len(prefix) == m:
            return True
        if used in self.dead:
            return False
        for b in range(m):
            if used >> b & 1:
                continue
            if prefix and not self.extends(prefix, b):
                continue
            prefix.append(b)
            if self.run(prefix, used | 1 << b):
                return True
            prefix.pop()
        self.dead.add(used)
        return False


def search_lq_order(I: MonomialIdeal, budget: int = DEFAULT_BUDGET) -> SearchResult:
    """Backtracking search for a linear-quotients order.

    Prefixes grow in repo order of the generators; a generator may be appended
    when the colon of the current prefix against it is generated by variables.
    Whether a prefix can be completed depends only on its set of generators,
    so dead sets are memoized. ``NONE_FOUND`` certifies that no order exists.
    ``budget`` caps the number of extension tests.
    """
    search = _Search(I.gens, budget)
    prefix: list[int] = []
    try:
        ok = search.run(prefix, 0)
    except _BudgetExhausted:
        return SearchResult(EXHAUSTED, None, search.nodes)
    if not ok:
        return SearchResult(NONE_FOUND, None, search.nodes)
    found = verify_linear_quotients(I, [I.gens[b] for b in prefix])
    assert found.valid, "search produced an order that fails verification"
    return SearchResult(FOUND, found, search.nodes)


@dataclass(frozen=True)
class ComponentwiseLQ:
    per_degree: dict          # degree -> True / False / None (budget exhausted)
    spot_degree: int | None = None
    spot_result: bool | None = None

    @property
    def holds(self) -> bool | None:
        vals = list(self.per_degree.values())
        if any(v is False for v in vals):
            return False
        if any(v is None for v in vals):
            return None
        return True

    def __bool__(self) -> bool:
        return self.holds is True


def has_componentwise_linear_quotients(I: MonomialIdeal, budget: int = DEFAULT_BUDGET) -> ComponentwiseLQ:
    """Search an order for every component between the initial and top degree.

    The component one above the top degree is also searched as a spot check;
    higher components are not examined.
    """
    if I.is_zero:
        return ComponentwiseLQ({})
    lo, hi = ideals.degree_range(I)

    def status(j: int) -> bool | None:
        res = search_lq_order(ideals.component(I, j), budget)
        return None if res.status == EXHAUSTED else res.status == FOUND

    per = {j: status(j) for j in range(lo, hi + 1)}
    return ComponentwiseLQ(per, hi + 1, status(hi + 1))
