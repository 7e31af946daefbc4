"""Pole engine: spectral points, Baxter multisets, pole-set formulas."""

import random
from fractions import Fraction

import pytest

from ypoles.poles import (
    DrinfeldTuple,
    PoleMultiset,
    SpectralPoint,
    baxter_fundamental,
    baxter_general,
    kr_baxter,
    kr_sigma,
    neg_orbit,
    pt,
    sigma_full,
    sigma_fundamental,
    sigma_irreducible,
    sln_sigma_closed_form,
)
from ypoles.qcartan import qcartan_for

F = Fraction


def test_spectral_point_basics():
    p = pt(F(1, 2))
    assert p == SpectralPoint("0", F(1, 2))
    assert p.shifted(F(3, 2)) == pt(2)
    assert p.negated() == pt(F(-1, 2))
    g = SpectralPoint("x", F(1))
    assert g.negated() == SpectralPoint("-x", F(-1))
    assert g.negated().negated() == g
    assert neg_orbit("0") == "0"
    assert g != pt(1)
    assert SpectralPoint.from_json(p.to_json()) == p


def test_multiset_operations():
    ms = PoleMultiset({pt(0): 2})
    ms.add(pt(1))
    assert ms.multiplicity(pt(0)) == 2 and ms.total() == 3
    merged = ms.merged(PoleMultiset({pt(0): 1, pt(2): 1}))
    assert merged.multiplicity(pt(0)) == 3
    assert ms.union_max(PoleMultiset({pt(0): 5})).multiplicity(pt(0)) == 5
    assert ms.shifted(F(1, 2)).support() == {pt(F(1, 2)), pt(F(3, 2))}
    assert PoleMultiset.from_json(ms.to_json()) == ms
    with pytest.raises(ValueError):
        ms.add(pt(9), 0)


def test_drinfeld_tuple_json():
    tup = DrinfeldTuple({1: PoleMultiset({pt(F(1, 2)): 1}), 3: PoleMultiset({pt(-1): 2})})
    blob = tup.to_json()
    assert DrinfeldTuple.from_json(blob, rank=3) == tup
    with pytest.raises(ValueError):
        DrinfeldTuple.from_json(blob, rank=2)
    assert DrinfeldTuple({}).is_empty()


def test_baxter_fundamental_examples():
    assert baxter_fundamental(qcartan_for("A", 1), 1, 1) == PoleMultiset({pt(0): 1})
    assert baxter_fundamental(qcartan_for("A", 2), 1, 2) == PoleMultiset({pt(F(1, 2)): 1})
    # both routes for sl4 node pair (2,2): v-window multiset vs interval set
    got = baxter_fundamental(qcartan_for("A", 3), 2, 2)
    assert got == PoleMultiset({pt(0): 1, pt(1): 1})
    assert got.support() == sln_sigma_closed_form(4, 2, 2)


def test_sigma_fundamental_examples():
    qc3 = qcartan_for("A", 2)
    assert sigma_fundamental(qc3, 1, 1) == {pt(0)}
    assert sigma_fundamental(qc3, 1, 2) == {pt(F(1, 2))}


@pytest.mark.parametrize("family,rank", [("A", 4), ("B", 3), ("C", 4), ("D", 5), ("G", 2), ("F", 4)])
def test_fundamental_pole_bounds(family, rank):
    qc = qcartan_for(family, rank)
    datum = qc.datum
    for i in datum.nodes:
        for j in datum.nodes:
            lo = F(datum.d_of(i) - datum.d_of(j), 2)
            hi = F(datum.two_kappa - datum.d_of(i) - datum.d_of(j), 2)
            for p in sigma_fundamental(qc, i, j):
                assert p.orbit == "0"
                assert lo <= p.offset <= hi
                assert (2 * p.offset).denominator == 1


def test_baxter_general_reduces_and_shifts():
    qc = qcartan_for("A", 2)
    for j in (1, 2):
        single = DrinfeldTuple.fundamental(j, pt(0))
        for i in (1, 2):
            assert baxter_general(qc, single, i) == baxter_fundamental(qc, i, j)
    rng = random.Random(5)
    for _ in range(25):
        tup = _random_tuple(qc, rng)
        c = F(rng.randint(-4, 4), rng.choice((1, 2, 3)))
        for i in (1, 2):
            assert baxter_general(qc, tup.shifted(c), i) == baxter_general(qc, tup, i).shifted(c)


def test_baxter_general_sl2_example():
    qc = qcartan_for("A", 1)
    tup = DrinfeldTuple({1: PoleMultiset({pt(0): 1, pt(1): 1})})
    assert baxter_general(qc, tup, 1) == PoleMultiset({pt(0): 1, pt(1): 1})


def _random_tuple(qc, rng, orbit="0"):
    polys = {}
    for node in qc.datum.nodes:
        if rng.random() < 0.4:
            continue
        ms = PoleMultiset()
        for _ in range(rng.randint(1, 2)):
            ms.add(SpectralPoint(orbit, F(rng.randint(-8, 8), rng.choice((1, 2, 3, 4)))),
                   rng.randint(1, 2))
        polys[node] = ms
    return DrinfeldTuple(polys)


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 2), ("C", 3), ("D", 4), ("G", 2)])
def test_sigma_equals_baxter_support(family, rank):
    qc = qcartan_for(family, rank)
    rng = random.Random(hash((family, rank)) & 0xFFFF)
    for _ in range(200):
        tup = _random_tuple(qc, rng)
        for i in qc.datum.nodes:
            assert sigma_irreducible(qc, tup, i) == baxter_general(qc, tup, i).support()


def test_generic_orbits_stay_disjoint():
    qc = qcartan_for("A", 2)
    t1 = DrinfeldTuple.fundamental(1, SpectralPoint("x", F(0)))
    t2 = DrinfeldTuple.fundamental(2, SpectralPoint("y", F(0)))
    both = DrinfeldTuple({1: t1.poly(1), 2: t2.poly(2)})
    for i in (1, 2):
        merged = sigma_irreducible(qc, both, i)
        assert merged == sigma_irreducible(qc, t1, i) | sigma_irreducible(qc, t2, i)
        assert not (sigma_irreducible(qc, t1, i) & sigma_irreducible(qc, t2, i))


def test_simple_module_containment():
    # sigma_i(L(P)) within the union of shifted containment bounds
    for family, rank in [("B", 3), ("G", 2)]:
        qc = qcartan_for(family, rank)
        datum = qc.datum
        rng = random.Random(99)
        for _ in range(50):
            tup = _random_tuple(qc, rng)
            for i in datum.nodes:
                bound = set()
                for j in tup.nodes():
                    lo = datum.d_of(i) - datum.d_of(j)
                    hi = datum.two_kappa - datum.d_of(i) - datum.d_of(j)
                    for a, _m in tup.poly(j).items():
                        bound.update(a.shifted(F(k, 2)) for k in range(lo, hi + 1))
                assert sigma_irreducible(qc, tup, i) <= bound


def test_kr_examples():
    qc2 = qcartan_for("A", 1)
    assert kr_sigma(qc2, 1, 1, 1) == sigma_fundamental(qc2, 1, 1)
    assert kr_sigma(qc2, 1, 1, 2) == {pt(0), pt(-1)}
    qcb = qcartan_for("B", 2)
    assert sigma_fundamental(qcb, 2, 1) == kr_sigma(qcb, 1, 2, 2)
    assert baxter_fundamental(qcb, 2, 1) == kr_baxter(qcb, 1, 2, 2)
    with pytest.raises(ValueError):
        kr_sigma(qc2, 1, 1, 0)


def test_sigma_full_is_union():
    qc = qcartan_for("A", 2)
    tup = DrinfeldTuple.fundamental(1, pt(0))
    assert sigma_full(qc, tup) == sigma_irreducible(qc, tup, 1) | sigma_irreducible(qc, tup, 2)


def test_sln_closed_form_examples():
    assert sln_sigma_closed_form(3, 1, 1) == {pt(0)}
    assert sln_sigma_closed_form(4, 2, 2) == {pt(0), pt(1)}
    assert sln_sigma_closed_form(3, 1, 2) == {pt(F(1, 2))}
    with pytest.raises(ValueError):
        sln_sigma_closed_form(3, 3, 1)


@pytest.mark.parametrize("n", range(2, 6))
def test_type_a_window_route_matches_interval(n):
    qc = qcartan_for("A", n - 1)
    for i in range(1, n):
        for j in range(1, n):
            assert sigma_fundamental(qc, i, j) == sln_sigma_closed_form(n, i, j)


@pytest.mark.parametrize("family,rank", [("A", 4), ("B", 3), ("C", 3), ("D", 4), ("F", 4), ("G", 2)])
def test_reflection_identity_spot(family, rank):
    qc = qcartan_for(family, rank)
    datum = qc.datum
    kappa = F(datum.two_kappa, 2)
    for i in datum.nodes:
        for j in datum.nodes:
            jstar = datum.star_of(j)
            got = sigma_fundamental(qc, i, j)
            assert got == frozenset(
                p.negated().shifted(kappa - datum.d_of(j))
                for p in sigma_fundamental(qc, i, jstar)
            )
            assert got == sigma_fundamental(qc, datum.star_of(i), jstar)
