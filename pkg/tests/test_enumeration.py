#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# ./tests/test_enumeration.py

from collections import Counter

import pytest

from enumeration import (MAX_WEIGHT, CrosscheckReport, DiagramEnumerator, alpha, compositions, crosscheck,
                         d_table, enumerate_all, indivisible_counts, iter_matchings, monoid_census,
                         primitive_dimensions)

HFUP_ROWS = [
    [1],
    [2, 2],
    [10, 18, 8],
    [62, 154, 124, 32],
    [462, 1426, 1596, 760, 128],
    [3982, 14506, 20380, 13680, 4336, 512],
    [38646, 161042, 269284, 229448, 104032, 23520, 2048],
]

ALPHAS = [1, 4, 36, 372, 4372, 57396, 828020]


def test_compositions_order():
    assert compositions(0) == [()]
    assert compositions(3) == [(1, 1, 1), (2, 1), (1, 2), (3,)]
    assert len(compositions(6)) == 32


def test_iter_matchings_order():
    matchings = list(iter_matchings((1, 2), {1: [3, 4], 2: [3]}))
    assert matchings == [
        (),
        ((2, 3),),
        ((1, 3),),
        ((1, 4),),
        ((1, 4), (2, 3)),
    ]


def test_weight_one_diagrams_in_order():
    result = [(g.up, g.down) for g in enumerate_all(1)]
    assert result == [((), ()), ((), (1,)), ((1,), ()), ((1,), (1,))]


@pytest.mark.parametrize("p", range(0, 5))
def test_enumeration_is_exhaustive_and_distinct(p):
    found = list(enumerate_all(p))
    assert len(found) == len(set(found)) == ALPHAS[p]
    assert all(g.weight == p for g in found)


@pytest.mark.parametrize("p", range(0, 6))
def test_hf_up_histogram_matches_table(p):
    counts = DiagramEnumerator().histogram(p)
    assert [counts.get(q, 0) for q in range(p + 1)] == HFUP_ROWS[p]


def test_histogram_by_other_statistic():
    counts = DiagramEnumerator().histogram(2, key=lambda g: len(g.edges))
    assert sum(counts.values()) == 36
    assert list(counts) == sorted(counts)
    fast = DiagramEnumerator().histogram(2)
    slow = DiagramEnumerator().histogram(2, key=lambda g: g.stats().hf_up)
    assert fast == slow


def test_worker_pool_keeps_the_order():
    serial = list(DiagramEnumerator(workers=1).enumerate(3))
    pooled = list(DiagramEnumerator(workers=2).enumerate(3))
    assert serial == pooled
    assert DiagramEnumerator(workers=2).histogram(4) == DiagramEnumerator(workers=1).histogram(4)


def test_progress_is_reported_per_shard():
    ticks = []
    list(DiagramEnumerator(progress=ticks.append).enumerate(4))
    assert ticks == [1] * len(compositions(4))


def test_weight_limits():
    with pytest.raises(ValueError):
        DiagramEnumerator(workers=0)
    with pytest.raises(ValueError):
        list(DiagramEnumerator().enumerate(MAX_WEIGHT + 1))
    with pytest.raises(ValueError):
        DiagramEnumerator().histogram(-1)


@pytest.mark.slow
def test_weight_six_row():
    counts = DiagramEnumerator(workers=2).histogram(6)
    assert [counts.get(q, 0) for q in range(7)] == HFUP_ROWS[6]


## ==========================================================================
## Recurrence

def test_recurrence_table():
    assert d_table(6).rows() == HFUP_ROWS


def test_totals():
    assert [alpha(p) for p in range(7)] == ALPHAS
    assert d_table(3).alpha(3) == 372
    with pytest.raises(ValueError):
        d_table(-1)


@pytest.mark.parametrize("p", range(0, 5))
def test_crosscheck_matches(p):
    report = crosscheck(p)
    assert report
    assert report.brute == report.recurrence == HFUP_ROWS[p]
    assert report.to_dict()["total"] == ALPHAS[p]


def test_crosscheck_reports_mismatches():
    report = DiagramEnumerator().crosscheck(2, brute=[10, 17, 8])
    assert not report
    assert report.mismatches == [(1, 17, 18)]
    assert report.to_dict()["mismatches"] == [{"q": 1, "brute": 17, "recurrence": 18}]
    assert isinstance(report, CrosscheckReport)


## ==========================================================================
## Free monoid and free Lie algebra

def test_indivisible_counts():
    assert indivisible_counts(2) == [0, 4, 20]


def test_monoid_census_reproduces_totals():
    counts = indivisible_counts(3)
    assert monoid_census(counts) == ALPHAS[:4]


@pytest.mark.slow
def test_monoid_census_weight_four():
    assert monoid_census(indivisible_counts(4)) == ALPHAS[:5]


def test_primitive_dimensions():
    dims = primitive_dimensions(4)
    assert dims[:3] == [0, 4, 26]
    assert all(d > 0 for d in dims[1:])


def test_factorization_counts_match_juxtapositions():
    factor_lengths = Counter(len(g.factorize()) for g in enumerate_all(2))
    # 16 juxtapositions of two weight-one diagrams, 20 indivisibles
    assert factor_lengths == Counter({1: 20, 2: 16})
