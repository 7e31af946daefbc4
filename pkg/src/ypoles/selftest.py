"""Acceptance checks: every closed form against an independent route.

Each criterion is a callable that raises AssertionError with a readable
message on failure.  The pytest acceptance module and the CLI `selftest`
subcommand both run this registry, so there is a single source of truth
for what "correct" means.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from ypoles.cartan import catalog, catalog_max_rank
from ypoles.coxeter import verify_fuj_her
from ypoles.criteria import double_admissible, sln_cyclicity_set
from ypoles.laurent import LaurentPoly
from ypoles.poles import (
    DrinfeldTuple,
    PoleMultiset,
    SpectralPoint,
    baxter_fundamental,
    kr_baxter,
    kr_sigma,
    pt,
    sigma_fundamental,
    sln_sigma_closed_form,
)
from ypoles.qcartan import QCartanData, pij, qcartan_data, qcartan_for
from ypoles.reps import (
    baxter_from_chain,
    build_sl2_eval,
    build_sln_fundamental,
    maximal_chain,
    poles_of_module,
    sigma_from_dominant_weights,
    tensor_product,
    verify_relations,
    weight_height,
)


def _each_qc() -> list[QCartanData]:
    return [qcartan_data(datum) for datum in catalog()]


def criterion_1_qcartan_identity() -> None:
    """B(q) C(q) = [2k]_q I with nonnegative, symmetric, palindromic C."""
    from ypoles.laurent import qnum

    for qc in _each_qc():
        n = qc.datum.rank
        target = qnum(qc.datum.two_kappa)
        for i in range(n):
            for j in range(n):
                acc = LaurentPoly.zero()
                for k in range(n):
                    acc = acc + qc.B[i][k] * qc.C[k][j]
                want = target if i == j else LaurentPoly.zero()
                assert acc == want, f"{qc.datum.family}{n}: (BC)[{i+1}][{j+1}] = {acc.text()}"
                entry = qc.C[i][j]
                assert entry.is_nonneg_integral(), f"c_{i+1},{j+1} not in Z>=0[q,q^-1]"
                assert entry == qc.C[j][i], "C not symmetric"
                assert entry == entry.inverted_q(), "C not palindromic"


def criterion_2_vij_laws() -> None:
    """The five coefficient laws of the v-windows, checked on 0..4k."""
    for qc in _each_qc():
        datum = qc.datum
        tk = datum.two_kappa
        top = 2 * tk
        for i in datum.nodes:
            di = datum.d_of(i)
            for j in datum.nodes:
                win = qc.vij(i, j)
                wstar = qc.vij(i, datum.star_of(j))
                # (1) halved-index sum rule when d_j >= d_i
                dj = datum.d_of(j)
                if dj >= di:
                    ratio = dj // di
                    wji = qc.vij(j, i)
                    for r in range(0, top - ratio + 2):
                        lhs = win.coefficient(r)
                        rhs = sum(
                            wji.coefficient(r - ratio + 1 + 2 * b) for b in range(ratio)
                        )
                        assert lhs == rhs, f"{datum.family}{datum.rank} vij(1) at ({i},{j},{r})"
                # (2) antiperiod 2k against the star, period 4k
                for r in range(0, tk + 1):
                    assert win.coefficient(r + tk) == -wstar.coefficient(r), \
                        f"{datum.family}{datum.rank} vij(2) at ({i},{j},{r})"
                assert win.coefficient(top) == win.coefficient(0)
                # (3) reflections
                for r in range(0, tk + 1):
                    assert win.coefficient(tk - r) == wstar.coefficient(r)
                for s in range(0, top + 1):
                    assert win.coefficient(top - s) == -win.coefficient(s)
                # (4) forced zeros near multiples of 2k
                for r in range(0, top + 1):
                    if any(abs(r - tk * b) < di for b in range(0, 3)):
                        assert win.coefficient(r) == 0
                # (5) sign pattern
                for r in range(0, tk + 1):
                    assert win.coefficient(r) >= 0
                for s in range(tk, top + 1):
                    assert win.coefficient(s) <= 0


def _sln_sweep_top() -> int:
    return min(8, catalog_max_rank() + 1)


def criterion_3_type_a_closed_form() -> None:
    """sigma and p_ij of type A match the interval closed forms, n = 2..8."""
    for n in range(2, _sln_sweep_top() + 1):
        qc = qcartan_for("A", n - 1)
        for i in range(1, n):
            for j in range(1, n):
                assert sigma_fundamental(qc, i, j) == sln_sigma_closed_form(n, i, j), (n, i, j)
                lo, hi = max(i + j + 1 - n, 1), min(i, j)
                want = LaurentPoly({-(i + j) + 2 * b: 1 for b in range(lo, hi + 1)})
                assert pij(qc, i, j) == want, (n, i, j)


def criterion_4_simply_laced_full_set() -> None:
    """Full fundamental pole sets are {k/2 : 0 <= k <= h-2} in types ADE,
    and the Coxeter-element route reproduces and fills every window row."""
    for datum in catalog():
        if not datum.simply_laced:
            continue
        qc = qcartan_data(datum)
        h = datum.dual_coxeter
        want = frozenset(pt(Fraction(k, 2)) for k in range(0, h - 1))
        for j in datum.nodes:
            full: set[SpectralPoint] = set()
            for i in datum.nodes:
                full.update(sigma_fundamental(qc, i, j))
            assert full == want, f"{datum.family}{datum.rank} full set at j={j}"
        assert verify_fuj_her(datum), f"{datum.family}{datum.rank} Coxeter check"


def criterion_5_duality_kr() -> None:
    """Reflection symmetry of the fundamental sets and the KR identity."""
    for qc in _each_qc():
        datum = qc.datum
        kappa = Fraction(datum.two_kappa, 2)
        for i in datum.nodes:
            for j in datum.nodes:
                sig = sigma_fundamental(qc, i, j)
                jstar = datum.star_of(j)
                reflected = frozenset(
                    p.negated().shifted(kappa - datum.d_of(j))
                    for p in sigma_fundamental(qc, i, jstar)
                )
                assert sig == reflected, f"{datum.family}{datum.rank} reflection ({i},{j})"
                assert sig == sigma_fundamental(qc, datum.star_of(i), jstar)
                if datum.d_of(j) >= datum.d_of(i):
                    ratio = datum.d_of(j) // datum.d_of(i)
                    assert sig == kr_sigma(qc, j, i, ratio), \
                        f"{datum.family}{datum.rank} KR sigma ({i},{j})"
                    assert baxter_fundamental(qc, i, j) == kr_baxter(qc, j, i, ratio), \
                        f"{datum.family}{datum.rank} KR Baxter ({i},{j})"


_EVAL_POINTS = (Fraction(0), Fraction(1, 2), Fraction(-3))


def criterion_6_relations() -> None:
    """Y1-Y5 hold on all small fundamentals and evaluation modules, R = 3."""
    for n in range(2, 6):
        for m in range(1, n):
            for a in _EVAL_POINTS:
                bad = verify_relations(build_sln_fundamental(n, m, a), 3)
                assert not bad, f"sl{n} m={m} a={a}: {bad[:3]}"
    for r in range(0, 5):
        for a in _EVAL_POINTS:
            bad = verify_relations(build_sl2_eval(r, a), 3)
            assert not bad, f"sl2 eval r={r} a={a}: {bad[:3]}"


def criterion_7_oracle_triangle() -> None:
    """Module poles = chain Baxter = dominant-weight route = window route."""
    for n in range(2, 6):
        qc = qcartan_for("A", n - 1)
        for m in range(1, n):
            for a in (Fraction(0), Fraction(-3, 2)):
                mod = build_sln_fundamental(n, m, a)
                chain = maximal_chain(mod)
                for i in mod.datum.nodes:
                    combinatorial = baxter_fundamental(qc, i, m).shifted(a)
                    from_poles = poles_of_module(mod, i)
                    assert all(mult == 1 for _, mult in from_poles.items()), (n, m, i)
                    assert from_poles == combinatorial, f"poles n={n} m={m} i={i}"
                    assert baxter_from_chain(chain, i) == combinatorial, \
                        f"chain n={n} m={m} i={i}"
                    assert sigma_from_dominant_weights(mod, i) == combinatorial.support(), \
                        f"dominant n={n} m={m} i={i}"


def _sl2_eval_configs() -> list[tuple[tuple[int, Fraction], ...]]:
    points = (Fraction(0), Fraction(1), Fraction(5, 2), Fraction(-2))
    pairs = [(r, a) for r in range(0, 4) for a in points]
    out: list[tuple[tuple[int, Fraction], ...]] = []
    for size in (1, 2, 3):
        out.extend(itertools.combinations_with_replacement(pairs, size))
    return out


def criterion_8_sl2_brute_force() -> None:
    """Pole sets of all small evaluation tensors match the union of strings."""
    for config in _sl2_eval_configs():
        factors = [build_sl2_eval(r, a) for r, a in config]
        mod = factors[0]
        for extra in factors[1:-1]:
            mod = tensor_product(mod, extra, build_currents=False)
        if len(factors) > 1:
            mod = tensor_product(mod, factors[-1])
        expected = frozenset(
            pt(a - k) for r, a in config for k in range(r)
        )
        got = poles_of_module(mod, 1).support()
        assert got == expected, f"config {config}: got {sorted(got)}"


def _random_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-6, 6), rng.choice((1, 2, 3)))


def criterion_9_coproduct_tensors() -> None:
    """Pole subadditivity and multiplicative xi-eigenvalues on random
    two-factor type-A tensors, checked through the weight grading."""
    rng = random.Random(20240901)
    for _ in range(50):
        n = rng.choice((2, 3, 4))
        m1, m2 = rng.randint(1, n - 1), rng.randint(1, n - 1)
        a1, a2 = _random_fraction(rng), _random_fraction(rng)
        va = build_sln_fundamental(n, m1, a1)
        vb = build_sln_fundamental(n, m2, a2)
        prod = tensor_product(va, vb)
        datum = prod.datum
        heights = [weight_height(datum, w) for w in vb.weights]
        for i in datum.nodes:
            union = poles_of_module(va, i).support() | poles_of_module(vb, i).support()
            assert poles_of_module(prod, i).support() <= union, (n, m1, m2, a1, a2, i)
            mat = prod.xi[i]
            for (row, col), entry in mat.entries.items():
                if row == col:
                    ra, rb = divmod(row, vb.dim)
                    want = va.xi[i].entry(ra, ra) * vb.xi[i].entry(rb, rb)
                    assert entry == want, "diagonal is not the product of factors"
                else:
                    rb, cb = row % vb.dim, col % vb.dim
                    assert heights[rb] > heights[cb], \
                        "off-diagonal term does not raise the second factor"


def criterion_10_cyclicity_closed_form() -> None:
    """Type-A cyclicity sets equal the pole sets shifted by one; symmetric."""
    for n in range(2, _sln_sweep_top() + 1):
        qc = qcartan_for("A", n - 1)
        for i in range(1, n):
            for j in range(1, n):
                cset = sln_cyclicity_set(n, i, j)
                shifted = frozenset(p.shifted(1) for p in sigma_fundamental(qc, i, j))
                assert cset == shifted, (n, i, j)
                assert cset == sln_cyclicity_set(n, j, i), (n, i, j)


def criterion_11_double_admissibility() -> None:
    """Spot examples plus random tuples against a direct membership scan."""
    qc3 = qcartan_for("A", 2)
    assert double_admissible(qc3, DrinfeldTuple.fundamental(1, pt(Fraction(-1, 2)))) is False
    assert double_admissible(qc3, DrinfeldTuple.fundamental(1, pt(1))) is True
    rng = random.Random(77002)
    data = [qcartan_for("A", 3), qcartan_for("B", 2), qcartan_for("C", 3), qcartan_for("G", 2)]
    for trial in range(100):
        qc = data[trial % len(data)]
        datum = qc.datum
        polys: dict[int, PoleMultiset] = {}
        for node in datum.nodes:
            if rng.random() < 0.5:
                continue
            ms = PoleMultiset()
            for _ in range(rng.randint(1, 2)):
                ms.add(pt(_random_fraction(rng)), rng.randint(1, 2))
            polys[node] = ms
        tup = DrinfeldTuple(polys)
        direct = True
        for j in tup.nodes():
            for root, _ in tup.poly(j).items():
                neg = root.negated()
                if any(neg in sigma_fundamental(qc, i, j) for i in datum.nodes):
                    direct = False
        assert double_admissible(qc, tup) == direct, f"trial {trial}"


CRITERIA: list[tuple[int, str, object]] = [
    (1, "q-Cartan identity B(q)C(q) = [2k]_q I over the catalog", criterion_1_qcartan_identity),
    (2, "v-coefficient laws on the 0..4k windows", criterion_2_vij_laws),
    (3, "type-A interval closed forms for sigma and p_ij", criterion_3_type_a_closed_form),
    (4, "simply-laced full pole set and Coxeter-element route", criterion_4_simply_laced_full_set),
    (5, "reflection duality and Kirillov-Reshetikhin identities", criterion_5_duality_kr),
    (6, "defining relations on explicit modules", criterion_6_relations),
    (7, "oracle triangle on type-A fundamentals", criterion_7_oracle_triangle),
    (8, "rank-one evaluation-tensor brute force", criterion_8_sl2_brute_force),
    (9, "coproduct tensors: subadditivity and eigenvalue products", criterion_9_coproduct_tensors),
    (10, "type-A cyclicity set equals poles + 1", criterion_10_cyclicity_closed_form),
    (11, "double admissibility against direct membership", criterion_11_double_admissibility),
]


def run_all(verbose: bool = True) -> bool:
    """Run every acceptance criterion; report one line each."""
    ok = True
    for number, title, fn in CRITERIA:
        try:
            fn()
        except AssertionError as exc:
            ok = False
            if verbose:
                print(f"FAIL criterion {number}: {title} -- {exc}")
        else:
            if verbose:
                print(f"PASS criterion {number}: {title}")
    return ok
