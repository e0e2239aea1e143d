"""Seeded experiment sweeps over the open conjectures.

Targets:

* ``powers``: powers of componentwise polymatroidal ideals, searched for a
  linear-quotients order.
* ``socle``: socles of polymatroidal ideals, tested for polymatroidality.
* ``cwlq-vs-lq``: ideals with componentwise linear quotients, searched for a
  linear-quotients order.

Reports are JSON lines: one header, then one self-contained record per trial
in trial order. A record can be replayed on its own with :func:`replay`.
"""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import __version__
from . import constructors as cons
from . import ideal as ideals
from .formats import ideal_from_json, ideal_to_json
from .linear_quotients import (DEFAULT_BUDGET, EXHAUSTED, NONE_FOUND,
                               has_componentwise_linear_quotients, search_lq_order)
from .polymatroid import is_componentwise_polymatroidal, is_polymatroidal
from .random_instances import CWP_FAMILIES, random_cwp, random_ideal, random_polymatroidal

TARGETS = ("powers", "socle", "cwlq-vs-lq")


@dataclass(frozen=True)
class ExperimentParams:
    target: str
    trials: int
    seed: int
    n_max: int = 5
    degree_max: int = 4
    power_max: int = 3
    max_gens: int = 20
    budget: int = 200_000

    def to_json(self) -> dict:
        return dict(self.__dict__)


def _trial_rng(p: ExperimentParams, index: int) -> random.Random:
    # string seeds hash deterministically across runs and processes
    return random.Random(f"{p.seed}/{p.target}/{index}")


def _powers_outcome(base, k: int, budget: int) -> dict:
    P = ideals.power(base, k)
    res = search_lq_order(P, budget)
    return {
        "power_generators": len(P),
        "power_cwp": bool(is_componentwise_polymatroidal(P)),
        "search": res.status,
        "nodes": res.nodes,
        "order": None if res.order is None else [list(u) for u in res.order.order],
    }


def _socle_outcome(base) -> dict:
    soc = cons.socle(base)
    v = is_polymatroidal(soc)
    return {
        "socle": ideal_to_json(soc),
        "socle_polymatroidal": v.holds,
        "witness": None if v.witness is None else v.witness.to_json(),
    }


def _cwlq_outcome(I, budget: int) -> dict:
    res = search_lq_order(I, budget)
    return {
        "cwp": bool(is_componentwise_polymatroidal(I)),
        "search": res.status,
        "nodes": res.nodes,
        "order": None if res.order is None else [list(u) for u in res.order.order],
    }


def _cwlq_candidate(rng: random.Random, p: ExperimentParams):
    """A random ideal, or a componentwise polymatroidal one with a generator added or dropped."""
    n = rng.randint(2, p.n_max)
    if rng.random() < 0.5:
        return random_ideal(rng, n, p.degree_max, p.max_gens)
    base = random_cwp(rng, rng.choice(sorted(CWP_FAMILIES)), p.n_max, p.degree_max, p.max_gens).ideal
    gens = list(base.gens)
    if len(gens) > 2 and rng.random() < 0.5:
        gens.pop(rng.randrange(len(gens)))
    else:
        extra = [0] * base.n
        for _ in range(rng.randint(1, p.degree_max)):
            extra[rng.randrange(base.n)] += 1
        gens.append(tuple(extra))
    return ideals.minimalize(base.n, gens)


def _is_counterexample(target: str, outcome: dict) -> bool:
    if target == "socle":
        return not outcome["socle_polymatroidal"]
    return outcome["search"] == NONE_FOUND


def run_trial(p: ExperimentParams, index: int) -> dict:
    rng = _trial_rng(p, index)
    rec: dict = {"kind": "record", "trial": index, "target": p.target}
    if p.target == "powers":
        family = rng.choice(sorted(CWP_FAMILIES))
        inst = random_cwp(rng, family, p.n_max, p.degree_max, p.max_gens)
        k = rng.randint(2, p.power_max)
        rec.update(family=inst.family, params=inst.params, instance=ideal_to_json(inst.ideal), k=k)
        rec["outcome"] = _powers_outcome(inst.ideal, k, p.budget)
    elif p.target == "socle":
        n = rng.randint(2, p.n_max)
        d = rng.randint(2, p.degree_max + 1)
        inst = random_polymatroidal(rng, n, d)
        rec.update(family=inst.family, params=inst.params, instance=ideal_to_json(inst.ideal))
        rec["outcome"] = _socle_outcome(inst.ideal)
    elif p.target == "cwlq-vs-lq":
        # rejection sampling; the attempt count is part of the record
        for attempt in range(1, 201):
            I = _cwlq_candidate(rng, p)
            if len(I) >= 3 and has_componentwise_linear_quotients(I, p.budget):
                break
        else:
            rec.update(family="random", instance=None, attempts=attempt,
                       outcome={"search": "no cwlq instance drawn"}, counterexample=False)
            return rec
        rec.update(family="random", instance=ideal_to_json(I), attempts=attempt)
        rec["outcome"] = _cwlq_outcome(I, p.budget)
    else:
        raise ValueError(f"unknown target {p.target!r}")
    rec["budget"] = p.budget
    rec["counterexample"] = _is_counterexample(p.target, rec["outcome"])
    rec["undecided"] = rec["outcome"].get("search") == EXHAUSTED
    return rec


def _run_one(args):
    return run_trial(*args)


def run_experiment(p: ExperimentParams, workers: int = 1):
    """Header plus one record per trial, in trial order whatever the worker count."""
    if p.target not in TARGETS:
        raise ValueError(f"unknown target {p.target!r}")
    if p.trials < 1:
        raise ValueError("need at least one trial")
    header = {"kind": "header", "tool": "cwpoly", "version": __version__, "seed": p.seed,
              "params": p.to_json()}
    jobs = [(p, t) for t in range(p.trials)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_run_one, jobs))
    else:
        records = [_run_one(j) for j in jobs]
    return header, records


def replay(record: dict, budget: int | None = None) -> dict:
    """Recompute a record's outcome from the instance it embeds."""
    if record.get("instance") is None:
        return record["outcome"]
    I = ideal_from_json(record["instance"])
    budget = record.get("budget", DEFAULT_BUDGET) if budget is None else budget
    target = record["target"]
    if target == "powers":
        return _powers_outcome(I, record["k"], budget)
    if target == "socle":
        return _socle_outcome(I)
    if target == "cwlq-vs-lq":
        return _cwlq_outcome(I, budget)
    raise ValueError(f"unknown target {target!r}")


def verdict_of(record: dict, outcome: dict) -> bool:
    return _is_counterexample(record["target"], outcome)
