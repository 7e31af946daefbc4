"""Coxeter-element route to the v-coefficients."""

import random

import pytest

from ypoles.cartan import build_cartan
from ypoles.coxeter import (
    alpha,
    coxeter_setup,
    is_positive,
    simple_reflection,
    verify_fuj_her,
    vij_via_coxeter,
)
from ypoles.qcartan import qcartan_for


def test_reflection_examples():
    d = build_cartan("A", 2)
    assert simple_reflection(d, 1, alpha(d, 1)) == (-1, 0)
    assert simple_reflection(d, 1, alpha(d, 2)) == (1, 1)


def test_reflection_involution():
    d = build_cartan("D", 4)
    rng = random.Random(17)
    for _ in range(100):
        v = tuple(rng.randint(-5, 5) for _ in range(4))
        i = rng.randint(1, 4)
        assert simple_reflection(d, i, simple_reflection(d, i, v)) == v


def test_setup_examples():
    a1 = build_cartan("A", 1)
    assert coxeter_setup(a1, 1) == ((1,), (), (1,))
    a2 = build_cartan("A", 2)
    assert coxeter_setup(a2, 1) == ((1,), (2,), (1, 1))
    d4 = build_cartan("D", 4)
    assert coxeter_setup(d4, 2) == ((2,), (1, 3, 4), (1, 1, 1, 1))


def test_setup_rejects_non_simply_laced():
    with pytest.raises(ValueError):
        coxeter_setup(build_cartan("B", 2), 1)


def test_vij_examples():
    a1 = build_cartan("A", 1)
    assert vij_via_coxeter(a1, 1, 1, 1) == 1
    a2 = build_cartan("A", 2)
    assert vij_via_coxeter(a2, 1, 2, 2) == 1
    assert vij_via_coxeter(a2, 1, 1, 2) == 0
    assert vij_via_coxeter(a2, 1, 1, 0) == 0


@pytest.mark.parametrize("family,rank", [("A", 2), ("A", 5), ("D", 4), ("D", 5), ("E", 6)])
def test_verify_fuj_her(family, rank):
    assert verify_fuj_her(build_cartan(family, rank)) is True


@pytest.mark.parametrize("family,rank", [("A", 3), ("D", 4)])
def test_coxeter_matches_windows(family, rank):
    datum = build_cartan(family, rank)
    qc = qcartan_for(family, rank)
    for i in datum.nodes:
        for j in datum.nodes:
            for r in range(0, datum.dual_coxeter + 1):
                assert vij_via_coxeter(datum, i, j, r) == qc.vij(i, j).coefficient(r)


def test_orbit_positivity():
    datum = build_cartan("E", 6)
    for i in datum.nodes:
        sinks, sources, gamma = coxeter_setup(datum, i)
        v = gamma
        for _ in range((datum.dual_coxeter - 2) // 2 + 1):
            assert is_positive(v)
            for k in sinks:
                v = simple_reflection(datum, k, v)
            for k in sources:
                v = simple_reflection(datum, k, v)
