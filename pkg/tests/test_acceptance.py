"""End-to-end acceptance checks, one test per criterion.

Each test prints a single PASS/FAIL line with its wall time and limit; run
with ``pytest tests/test_acceptance.py -s`` to see them inline (they are also
written through ``capsys.disabled`` so they show without ``-s``).
"""
import json
import random
import time
from contextlib import contextmanager

import pytest

from cwpoly import constructors as cons
from cwpoly import ideal as ideals
from cwpoly import monomial as mono
from cwpoly import multicomplex as mc
from cwpoly.cli import main
from cwpoly.ideal import MonomialIdeal
from cwpoly.linear_quotients import (FOUND, NONE_FOUND, search_lq_order, split,
                                     synthesize_lq_order, verify_linear_quotients)
from cwpoly.polymatroid import (is_componentwise_polymatroidal, is_polymatroidal,
                                verify_dual_exchange_bounded, verify_exchange_condition_bounded)
from cwpoly.random_instances import CWP_FAMILIES, random_cwp, random_ideal, random_polymatroidal

import oracles
from conftest import EXAMPLE_GENS, EXAMPLE_ORDER

PER_FAMILY = 125          # 4 families -> 500 instances
NON_CWP = 200


@contextmanager
def criterion(capsys, number, title, limit):
    start = time.perf_counter()
    ok = False
    try:
        yield
        elapsed = time.perf_counter() - start
        ok = elapsed < limit
        assert ok, f"criterion {number} took {elapsed:.1f}s (limit {limit}s)"
    finally:
        elapsed = time.perf_counter() - start
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} "
                  f"({elapsed:.2f}s, limit {limit}s)")


@pytest.fixture(scope="module")
def corpus():
    rng = random.Random("acceptance-corpus")
    out = []
    for family in sorted(CWP_FAMILIES):
        for _ in range(PER_FAMILY):
            out.append(random_cwp(rng, family, n_max=5, top=6))
    return out


@pytest.fixture(scope="module")
def non_cwp():
    rng = random.Random("acceptance-non-cwp")
    out = []
    while len(out) < NON_CWP:
        I = random_ideal(rng, rng.randint(2, 5), 6, 8)
        if not is_componentwise_polymatroidal(I):
            out.append(I)
    return out


def test_criterion_1_worked_example(capsys):
    with criterion(capsys, 1, "worked example end to end", 1.0):
        code = main(["construct", "fatpoints", "--sets", "1,2,3/1,3,4", "--k", "2,2", "--n", "4"])
        out = capsys.readouterr().out
        assert code == 0
        I = MonomialIdeal.from_vectors(4, json.loads(out)["generators"])
        assert set(I.gens) == set(EXAMPLE_GENS) and len(I) == 6
        assert ideals.degree_range(I) == (2, 4)
        I1, I2 = split(I, 0)
        assert set(I1.gens) == {(1, 0, 0, 0), (0, 0, 1, 0), (0, 1, 0, 1)}
        assert set(I2.gens) == {(0, 0, 2, 0), (0, 1, 1, 1), (0, 2, 0, 2)}
        assert ideals.is_subideal(I2, I1)
        res = synthesize_lq_order(I)
        assert list(res.order) == EXAMPLE_ORDER and res.valid


def test_criterion_2_cwp_implies_linear_quotients(capsys, corpus):
    assert len(corpus) >= 500
    with criterion(capsys, 2, f"{len(corpus)} random cwp ideals have synthesized LQ orders", 60):
        failures = []
        for inst in corpus:
            I = inst.ideal
            assert I.n <= 5 and ideals.degree_range(I)[1] <= 6
            if not is_componentwise_polymatroidal(I):
                failures.append((inst.family, "not cwp"))
                continue
            order = synthesize_lq_order(I)
            if not verify_linear_quotients(I, order.order).valid:
                failures.append((inst.family, "order fails"))
        assert failures == []


def test_criterion_3_exchange_characterizations(capsys, corpus, non_cwp):
    with criterion(capsys, 3, "exchange characterizations agree with the decision procedure", 60):
        for inst in corpus:
            I = inst.ideal
            top = ideals.degree_range(I)[1]
            assert is_componentwise_polymatroidal(I)
            assert verify_exchange_condition_bounded(I, top + 2)
            assert verify_dual_exchange_bounded(I, top + 2)
        for I in non_cwp:
            top = ideals.degree_range(I)[1]
            assert not is_componentwise_polymatroidal(I)
            v = verify_exchange_condition_bounded(I, top)
            assert not v and v.witness.degree <= top


def test_criterion_4_search_oracle(capsys, corpus):
    small = [inst.ideal for inst in corpus if len(inst.ideal) <= 8]
    assert len(small) >= 50
    with criterion(capsys, 4, f"search agrees with synthesis on {len(small)} small ideals", 120):
        for I in small:
            synth = synthesize_lq_order(I).valid
            found = search_lq_order(I)
            assert (found.status == FOUND) == synth
            assert found.status == FOUND
        squares = MonomialIdeal.from_vectors(2, [(2, 0), (0, 2)])
        assert search_lq_order(squares).status == NONE_FOUND


def _multicomplexes(corpus, non_cwp):
    out = []
    for I in [inst.ideal for inst in corpus[::4]] + non_cwp[:60]:
        J, _ = mc.restrict_to_support(I)
        if not J.is_unit and len(J) >= 2:
            out.append(mc.ideal_to_multicomplex(J))
    return out


def test_criterion_5_shelling_correspondence(capsys, corpus, non_cwp):
    complexes = _multicomplexes(corpus, non_cwp)
    assert len(complexes) >= 100
    rng = random.Random("acceptance-shelling")
    with criterion(capsys, 5, f"shelling vs linear quotients on {len(complexes)} multicomplexes", 30):
        disagreements = 0
        for M in complexes:
            I = mc.facet_ideal(M)
            for _ in range(5):
                order = list(M.facets)
                rng.shuffle(order)
                if mc.verify_shelling(M, order).valid != verify_linear_quotients(I, order).valid:
                    disagreements += 1
            if is_componentwise_polymatroidal(I):
                assert mc.shelling_order(M).valid
        assert disagreements == 0


def test_criterion_6_discrete_polymatroid_characterization(capsys, corpus, non_cwp):
    complexes = []
    for I in [inst.ideal for inst in corpus] + non_cwp:
        J, _ = mc.restrict_to_support(I)
        if not J.is_unit:
            complexes.append(mc.ideal_to_multicomplex(J))
    with criterion(capsys, 6, f"three characterizations agree on {len(complexes)} multicomplexes", 60):
        for M in complexes:
            res = mc.is_componentwise_discrete_polymatroid(M)
            assert res.agree, M
            s = mc.stats(M)
            F = mc.facet_ideal(M)
            for j in range(s.alpha, s.omega + 1):
                assert mc.facet_ideal(mc.truncation_sum(M, j)) == ideals.component(F, j)


def test_criterion_7_closure_facts(capsys, corpus):
    rng = random.Random("acceptance-closure")
    with criterion(capsys, 7, "closure facts over seeded instances", 60):
        for _ in range(100):
            n = rng.randint(2, 4)
            a = random_polymatroidal(rng, n, rng.randint(1, 3)).ideal
            b = random_polymatroidal(rng, n, rng.randint(1, 3)).ideal
            assert is_polymatroidal(ideals.product(a, b))
        for inst in corpus[:200]:
            I = inst.ideal
            top = ideals.degree_range(I)[1]
            comp = ideals.component(I, top)
            for j in (top + 1, top + 2):
                grown = ideals.product(MonomialIdeal.maximal_power(I.n, j - top), comp)
                assert ideals.component(I, j) == grown
        for _ in range(100):
            n, d, ell = rng.randint(2, 4), rng.randint(1, 4), rng.randint(1, 3)
            u = rng.choice(mono.enumerate_degree(n, d))
            lifted = u[:-1] + (u[-1] + ell,)
            grown = ideals.product(MonomialIdeal.maximal_power(n, ell), cons.principal_borel(u))
            assert grown == cons.principal_borel(lifted)
        for _ in range(150):
            n, d = rng.randint(2, 4), rng.randint(1, 4)
            u, v = (rng.choice(mono.enumerate_degree(n, d)) for _ in range(2))
            contained = ideals.is_subideal(cons.principal_borel(v), cons.principal_borel(u))
            assert contained == cons.borel_leq(v, u) == oracles.borel_leq_sorted(v, u)


def test_criterion_8_conjecture_harness(capsys, tmp_path):
    with criterion(capsys, 8, "experiment reports are produced and replay", 120):
        for target in ("powers", "socle"):
            report = tmp_path / f"{target}.jsonl"
            code = main(["experiment", "--target", target, "--trials", "30", "--seed", "7",
                         "--out", str(report)])
            err = capsys.readouterr().err
            assert code == 0
            lines = [json.loads(ln) for ln in report.read_text().splitlines()]
            assert lines[0]["kind"] == "header" and len(lines) == 31
            flagged = [r for r in lines[1:] if r["counterexample"]]
            assert err.count("!!! COUNTEREXAMPLE") == len(flagged)
            with capsys.disabled():
                print(f"\n  {target}: {len(flagged)} counterexamples, "
                      f"{sum(r['undecided'] for r in lines[1:])} undecided")
            code = main(["experiment", "--replay", str(report)])
            out = capsys.readouterr().out
            assert code == 0 and json.loads(out) == {"replayed": 30, "mismatches": 0}
