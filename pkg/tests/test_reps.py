"""Explicit modules: builders, relations, resolvent, chains, dominance."""

import random
from fractions import Fraction

import pytest

from ypoles.cartan import build_cartan
from ypoles.poles import PoleMultiset, pt, sigma_fundamental, sln_sigma_closed_form
from ypoles.qcartan import qcartan_for
from ypoles.ratfun import RationalFn, rf_linear_pole
from ypoles.reps import (
    ChainStuck,
    ExplicitModule,
    NotSameDegree,
    PoleMismatch,
    UnsupportedType,
    baxter_from_chain,
    build_sl2_eval,
    build_sln_fundamental,
    current_via_resolvent,
    highest_weight_vector,
    maximal_chain,
    poles_of_module,
    sigma_from_dominant_weights,
    tensor_product,
    verify_relations,
    weight_height,
)

F = Fraction


def test_sln_fundamental_basics():
    mod = build_sln_fundamental(2, 1, 0)
    assert mod.xi[1].entry(0, 0) == RationalFn((1, 1), (0, 1))
    assert mod.xplus[1].entry(0, 1) == rf_linear_pole(1, F(0))
    assert build_sln_fundamental(4, 2, 0).dim == 6
    with pytest.raises(ValueError):
        build_sln_fundamental(3, 3, 0)


@pytest.mark.parametrize("n,m,a", [(3, 1, F(2)), (4, 2, F(-1, 2)), (5, 3, F(0))])
def test_highest_vector_eigenvalue(n, m, a):
    mod = build_sln_fundamental(n, m, a)
    top = highest_weight_vector(mod)
    idx = next(k for k, c in enumerate(top) if c)
    assert mod.labels[idx] == tuple(range(1, m + 1))
    for i in mod.datum.nodes:
        want = RationalFn((1 - a, 1), (-a, 1)) if i == m else RationalFn((1,))
        assert mod.xi[i].entry(idx, idx) == want


def test_sl2_eval_matches_fundamental():
    e = build_sl2_eval(1, 0)
    f = build_sln_fundamental(2, 1, 0)
    assert e.xi[1].entries == f.xi[1].entries
    assert e.xplus[1].entries == f.xplus[1].entries
    assert e.xminus[1].entries == f.xminus[1].entries


def test_sl2_eval_trivial_and_drinfeld_roots():
    triv = build_sl2_eval(0, 3)
    assert triv.dim == 1 and triv.xi[1].entry(0, 0) == RationalFn((1,))
    chain = maximal_chain(build_sl2_eval(2, 0))
    assert baxter_from_chain(chain, 1) == PoleMultiset({pt(0): 1, pt(-1): 1})


def test_relations_clean_and_negative_control():
    for n, m in [(2, 1), (3, 2), (4, 2)]:
        assert verify_relations(build_sln_fundamental(n, m, F(1, 2)), 3) == []
    for r in range(5):
        assert verify_relations(build_sl2_eval(r, F(-3)), 2) == []
    mod = build_sln_fundamental(3, 1, 0)
    key = next(iter(mod.xminus[1].entries))
    mod.xminus[1].entries[key] = mod.xminus[1].entries[key].scaled(-1)
    assert verify_relations(mod, 1) != []


@pytest.mark.parametrize("n,m,a", [(2, 1, F(0)), (3, 1, F(1, 2)), (3, 2, F(-1)), (4, 2, F(0))])
def test_resolvent_reproduces_stored_currents(n, m, a):
    mod = build_sln_fundamental(n, m, a)
    for i in mod.datum.nodes:
        assert current_via_resolvent(mod, i, "+") == mod.xplus[i]
        assert current_via_resolvent(mod, i, "-") == mod.xminus[i]
        assert current_via_resolvent(mod, i, "xi") == mod.xi[i]


def test_resolvent_on_trivial_module():
    triv = build_sl2_eval(0, 7)
    assert current_via_resolvent(triv, 1, "+").entries == {}
    assert current_via_resolvent(triv, 1, "xi") == triv.xi[1]


def test_resolvent_tensor_poles_example():
    prod = tensor_product(build_sl2_eval(1, 0), build_sl2_eval(1, 1))
    assert poles_of_module(prod, 1).support() == {pt(0), pt(1)}


def test_poles_of_module_fundamentals():
    a = F(1, 2)
    mod = build_sln_fundamental(4, 2, a)
    for i in mod.datum.nodes:
        pm = poles_of_module(mod, i)
        assert pm.support() == frozenset(p.shifted(a) for p in sln_sigma_closed_form(4, i, 2))
        assert all(m == 1 for _, m in pm.items())


def test_poles_of_module_eval_strings():
    for r in range(4):
        pm = poles_of_module(build_sl2_eval(r, F(5, 3)), 1)
        assert pm.support() == frozenset(pt(F(5, 3) - k) for k in range(r))
    assert not poles_of_module(build_sl2_eval(0, 0), 1)


def test_pole_mismatch_detection():
    mod = build_sl2_eval(1, 0)
    mod.xminus[1].entries[(1, 0)] = rf_linear_pole(1, F(3))
    with pytest.raises(PoleMismatch):
        poles_of_module(mod, 1)


def test_chain_single_step_and_empty():
    chain = maximal_chain(build_sl2_eval(1, F(-2, 3)))
    assert chain.steps == ((1, pt(F(-2, 3)), 0),)
    assert maximal_chain(build_sl2_eval(0, 0)).steps == ()


@pytest.mark.parametrize("n", (2, 3, 4))
def test_chain_baxter_matches_windows(n):
    qc = qcartan_for("A", n - 1)
    for m in range(1, n):
        chain = maximal_chain(build_sln_fundamental(n, m, 0))
        for i in range(1, n):
            assert baxter_from_chain(chain, i).support() == sigma_fundamental(qc, i, m)


def test_chain_stuck_on_corrupted_module():
    from ypoles.ratfun import RationalFnMatrix

    mod = build_sl2_eval(1, 0)
    mod.xminus[1] = RationalFnMatrix(mod.dim)
    with pytest.raises(ChainStuck):
        maximal_chain(mod)


def test_dominance_matching_examples():
    mod = build_sl2_eval(1, 0)  # carrier for d_i = 1
    dominant = RationalFn((1, 1), (0, 1))        # (u+1)/u
    assert sigma_from_dominant_weights(mod, 1, [dominant]) == {pt(0)}
    # (u-1)/u: the numerator root sits above the denominator root
    not_dom = RationalFn((-1, 1), (0, 1))
    assert sigma_from_dominant_weights(mod, 1, [not_dom]) == frozenset()
    # (u+1)/(u-1) telescopes from the length-two string u(u-1)
    two_string = RationalFn((1, 1), (-1, 1))
    assert sigma_from_dominant_weights(mod, 1, [two_string]) == {pt(0), pt(1)}
    with pytest.raises(NotSameDegree):
        sigma_from_dominant_weights(mod, 1, [RationalFn((0, 1))])


@pytest.mark.parametrize("n", range(2, 7))
def test_dominant_weights_match_closed_form(n):
    for m in range(1, n):
        mod = build_sln_fundamental(n, m, 0)
        for i in mod.datum.nodes:
            assert sigma_from_dominant_weights(mod, i) == sln_sigma_closed_form(n, i, m)


def test_tensor_with_trivial_factor():
    v = build_sl2_eval(2, 1)
    prod = tensor_product(build_sl2_eval(0, 0), v)
    assert prod.xi[1].entries == v.xi[1].entries
    assert prod.xplus[1].entries == v.xplus[1].entries


def test_tensor_eigenvalue_products_sl2():
    va, vb = build_sl2_eval(1, 0), build_sl2_eval(2, F(3, 2))
    prod = tensor_product(va, vb)
    for row in range(prod.dim):
        ra, rb = divmod(row, vb.dim)
        want = va.xi[1].entry(ra, ra) * vb.xi[1].entry(rb, rb)
        assert prod.xi[1].entry(row, row) == want


def test_tensor_subadditivity_sample():
    rng = random.Random(4)
    for _ in range(6):
        n = rng.choice((3, 4))
        va = build_sln_fundamental(n, rng.randint(1, n - 1), F(rng.randint(-3, 3), 2))
        vb = build_sln_fundamental(n, rng.randint(1, n - 1), F(rng.randint(-3, 3), 2))
        prod = tensor_product(va, vb)
        for i in prod.datum.nodes:
            union = poles_of_module(va, i).support() | poles_of_module(vb, i).support()
            assert poles_of_module(prod, i).support() <= union


def test_tensor_rejects_wrong_type():
    mod = build_sl2_eval(1, 0)
    fake = ExplicitModule(
        datum=build_cartan("B", 2), dim=1, labels=(0,), weights=((0, 0),),
        xi={}, xplus={}, xminus={}, xi0={}, xp0={}, xm0={}, t1={},
    )
    with pytest.raises(UnsupportedType):
        tensor_product(fake, fake)
    with pytest.raises(UnsupportedType):
        tensor_product(mod, fake)


def test_weight_height_differences():
    datum = build_cartan("A", 1)
    mod = build_sl2_eval(2, 0)
    hs = [weight_height(datum, w) for w in mod.weights]
    assert hs[0] - hs[1] == 1 and hs[1] - hs[2] == 1
