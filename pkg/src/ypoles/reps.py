"""Explicit finite-dimensional representations over rational functions.

Builds the type-A fundamental modules on wedge-power bases, the rank-one
evaluation modules, and tensor products via the coproduct; recovers
currents from the generator constants through a Krylov resolvent; and
extracts pole sets, maximal lowering chains and dominant-weight data as
independent oracles for the combinatorial formulas.

Evaluation points are exact rationals (orbit "0"); generic orbits exist
only in the pole-set layer.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from ypoles.cartan import CartanDatum, build_cartan
from ypoles.poles import PoleMultiset, SpectralPoint, pt
from ypoles.ratfun import (
    IrrationalPole,
    Poly,
    RF_ONE,
    RF_ZERO,
    RationalFn,
    RationalFnMatrix,
    SparseMat,
    pnorm,
    rational_roots,
    rf_linear_pole,
    smat_add,
    smat_apply,
    smat_clean,
    smat_commutator,
    smat_eq,
    smat_is_zero,
    smat_kron,
    smat_mul,
    smat_scale,
    smat_sub,
)

__all__ = [
    "ChainStuck",
    "ExplicitModule",
    "IrrationalPole",
    "MaximalChain",
    "NotSameDegree",
    "PoleMismatch",
    "UnsupportedType",
    "baxter_from_chain",
    "build_sl2_eval",
    "build_sln_fundamental",
    "current_via_resolvent",
    "maximal_chain",
    "poles_of_module",
    "sigma_from_dominant_weights",
    "tensor_product",
    "verify_relations",
    "weight_height",
]


class UnsupportedType(ValueError):
    """Tensor products need type-A data with normalized root vectors."""


class PoleMismatch(AssertionError):
    """The three currents at one node disagree on poles (bug indicator)."""


class ChainStuck(RuntimeError):
    """Greedy lowering stalled before the lowest weight space."""


class NotSameDegree(ValueError):
    """A xi-eigenvalue is not a ratio of equal-degree polynomials."""


@dataclass
class ExplicitModule:
    """A representation given by sparse rational-function current matrices.

    `weights[b][i-1]` is the xi_{i,0} eigenvalue of basis vector b, i.e.
    the pairing of its g-weight with alpha_i.  Root-vector matrices are
    populated for type A only, normalized against the trace form so that
    (x_alpha^+, x_alpha^-) = 1.
    """

    datum: CartanDatum
    dim: int
    labels: tuple
    weights: tuple[tuple[int, ...], ...]
    xi: dict[int, RationalFnMatrix]
    xplus: dict[int, RationalFnMatrix]
    xminus: dict[int, RationalFnMatrix]
    xi0: dict[int, SparseMat]
    xp0: dict[int, SparseMat]
    xm0: dict[int, SparseMat]
    t1: dict[int, SparseMat]
    root_vectors: dict[tuple[int, int], tuple[SparseMat, SparseMat]] | None = None
    source: str = ""
    extras: dict = field(default_factory=dict)

    def current(self, i: int, which: str) -> RationalFnMatrix:
        return {"xi": self.xi, "+": self.xplus, "-": self.xminus}[which][i]


def _constants_from_currents(
    datum: CartanDatum,
    xi: dict[int, RationalFnMatrix],
    xplus: dict[int, RationalFnMatrix],
    xminus: dict[int, RationalFnMatrix],
    dim: int,
) -> tuple[dict, dict, dict, dict]:
    """Extract xi_{i,0}, x_{i,0}^± and t_{i,1} from expansions at infinity."""
    xi0, xp0, xm0, t1 = {}, {}, {}, {}
    eye = {(k, k): Fraction(1) for k in range(dim)}
    for i in datum.nodes:
        assert smat_eq(xi[i].value_at_infinity(), eye), "xi(inf) must be identity"
        assert smat_is_zero(xplus[i].value_at_infinity()), "x+(inf) must vanish"
        assert smat_is_zero(xminus[i].value_at_infinity()), "x-(inf) must vanish"
        m0, m1 = xi[i].expansion_matrices(2)
        xi0[i] = m0
        t1[i] = smat_sub(m1, smat_scale(smat_mul(m0, m0), Fraction(1, 2)))
        xp0[i] = xplus[i].expansion_matrices(1)[0]
        xm0[i] = xminus[i].expansion_matrices(1)[0]
    return xi0, xp0, xm0, t1


def _type_a_root_vectors(
    datum: CartanDatum, xp0: dict[int, SparseMat], xm0: dict[int, SparseMat]
) -> dict[tuple[int, int], tuple[SparseMat, SparseMat]]:
    """Matrices for all positive-root vectors of sl_n by iterated brackets.

    The positive root eps_a - eps_b maps to E_ab = [E_{a,a+1}, E_{a+1,b}]
    and E_ba = [E_{b,b-1}-chain brackets], matching the trace-form
    normalization (E_ab, E_ba) = 1.
    """
    n = datum.rank + 1
    out: dict[tuple[int, int], tuple[SparseMat, SparseMat]] = {}
    for a in range(1, n):
        out[(a, a + 1)] = (xp0[a], xm0[a])
    for width in range(2, n):
        for a in range(1, n - width + 1):
            b = a + width
            plus = smat_commutator(out[(a, a + 1)][0], out[(a + 1, b)][0])
            minus = smat_commutator(out[(a + 1, b)][1], out[(a, a + 1)][1])
            out[(a, b)] = (plus, minus)
    return out


def build_sln_fundamental(n: int, m: int, a: Fraction | int) -> ExplicitModule:
    """The m-th fundamental representation of Y(sl_n) at evaluation point a.

    Basis vectors are the increasing m-subsets of {1..n}; the currents act
    through the shifted points b_{i,k} = a + (m + i - 2k)/2.
    """
    if not 1 <= m <= n - 1:
        raise ValueError(f"need 1 <= m <= {n-1}")
    a = Fraction(a)
    datum = build_cartan("A", n - 1)
    labels = tuple(itertools.combinations(range(1, n + 1), m))
    index = {lab: t for t, lab in enumerate(labels)}
    dim = len(labels)

    def bval(i: int, k: int) -> Fraction:
        return a + Fraction(m + i - 2 * k, 2)

    xi: dict[int, RationalFnMatrix] = {}
    xplus: dict[int, RationalFnMatrix] = {}
    xminus: dict[int, RationalFnMatrix] = {}
    weights = []
    for lab in labels:
        weights.append(tuple(
            (1 if i in lab else 0) - (1 if i + 1 in lab else 0)
            for i in datum.nodes
        ))
    for i in datum.nodes:
        xie: dict[tuple[int, int], RationalFn] = {}
        xpe: dict[tuple[int, int], RationalFn] = {}
        xme: dict[tuple[int, int], RationalFn] = {}
        for lab in labels:
            t = index[lab]
            has_i = i in lab
            has_i1 = (i + 1) in lab
            if has_i and not has_i1:
                k = lab.index(i) + 1
                b = bval(i, k)
                xie[(t, t)] = RationalFn((1 - b, 1), (-b, 1))
                dest = tuple(sorted(lab[: k - 1] + (i + 1,) + lab[k:]))
                xme[(index[dest], t)] = rf_linear_pole(1, b)
            elif has_i1 and not has_i:
                k = lab.index(i + 1) + 1
                b = bval(i, k)
                xie[(t, t)] = RationalFn((-1 - b, 1), (-b, 1))
                dest = tuple(sorted(lab[: k - 1] + (i,) + lab[k:]))
                xpe[(index[dest], t)] = rf_linear_pole(1, b)
            else:
                xie[(t, t)] = RF_ONE
        xi[i] = RationalFnMatrix(dim, xie)
        xplus[i] = RationalFnMatrix(dim, xpe)
        xminus[i] = RationalFnMatrix(dim, xme)

    xi0, xp0, xm0, t1 = _constants_from_currents(datum, xi, xplus, xminus, dim)
    mod = ExplicitModule(
        datum=datum, dim=dim, labels=labels, weights=tuple(weights),
        xi=xi, xplus=xplus, xminus=xminus,
        xi0=xi0, xp0=xp0, xm0=xm0, t1=t1,
        root_vectors=_type_a_root_vectors(datum, xp0, xm0),
        source=f"sl{n} fundamental m={m} a={a}",
    )
    return mod


def build_sl2_eval(r: int, a: Fraction | int) -> ExplicitModule:
    """The (r+1)-dimensional evaluation module of Y(sl_2) at point a."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    a = Fraction(a)
    datum = build_cartan("A", 1)
    dim = r + 1
    labels = tuple(range(dim))
    xie: dict[tuple[int, int], RationalFn] = {}
    xpe: dict[tuple[int, int], RationalFn] = {}
    xme: dict[tuple[int, int], RationalFn] = {}
    for s in range(dim):
        # (u-a-1)(u-a+r) / ((u-a+s-1)(u-a+s)), reduced on construction
        num = pnorm((( -a - 1) * (-a + r), (-a - 1) + (-a + r), 1))
        den = pnorm(((-a + s - 1) * (-a + s), (-a + s - 1) + (-a + s), 1))
        xie[(s, s)] = RationalFn(num, den)
        if s >= 1:
            xpe[(s - 1, s)] = rf_linear_pole(r - s + 1, a - s + 1)
        if s <= r - 1:
            xme[(s + 1, s)] = rf_linear_pole(s + 1, a - s)
    xi = {1: RationalFnMatrix(dim, xie)}
    xplus = {1: RationalFnMatrix(dim, xpe)}
    xminus = {1: RationalFnMatrix(dim, xme)}
    weights = tuple((r - 2 * s,) for s in range(dim))
    xi0, xp0, xm0, t1 = _constants_from_currents(datum, xi, xplus, xminus, dim)
    return ExplicitModule(
        datum=datum, dim=dim, labels=labels, weights=weights,
        xi=xi, xplus=xplus, xminus=xminus,
        xi0=xi0, xp0=xp0, xm0=xm0, t1=t1,
        root_vectors={(1, 2): (xp0[1], xm0[1])},
        source=f"sl2 evaluation r={r} a={a}",
    )


# ---------------------------------------------------------------------------
# resolvent reconstruction of the currents


def _krylov_resolvent(t1: SparseMat, w: SparseMat, two_d: int, sign: int) -> tuple[list[SparseMat], Poly]:
    """Krylov data for (u - sign*ad(t1)/two_d)^{-1} w.

    Returns the vectors A^l w for l < deg(mu) and the monic minimal
    polynomial mu of A on w.
    """
    scale = Fraction(sign, two_d)

    def apply_a(x: SparseMat) -> SparseMat:
        return smat_scale(smat_commutator(t1, x), scale)

    vectors: list[SparseMat] = []
    echelon: list[tuple[tuple[int, int], SparseMat, list[Fraction]]] = []
    current = smat_clean(w)
    while True:
        v = dict(current)
        combo = [Fraction(0)] * len(vectors) + [Fraction(1)]
        for pkey, evec, ecombo in echelon:
            c = v.get(pkey)
            if not c:
                continue
            for k, val in evec.items():
                s = v.get(k, 0) - c * val
                if s:
                    v[k] = s
                else:
                    v.pop(k, None)
            for idx, ec in enumerate(ecombo):
                combo[idx] -= c * ec
        if not v:
            # dependency: sum combo_l A^l w = 0, monic in the last slot
            return vectors, pnorm(combo)
        pkey = min(v)
        pval = v[pkey]
        evec = {k: val / pval for k, val in v.items()}
        ecombo = [c / pval for c in combo]
        echelon.append((pkey, evec, ecombo))
        vectors.append(current)
        current = apply_a(current)


def current_via_resolvent(module: ExplicitModule, i: int, which: str) -> RationalFnMatrix:
    """Rebuild a current from the generator constants.

    x_i^±(u) = (u ∓ ad(t_{i,1})/(2 d_i))^{-1} x_{i,0}^± via the minimal
    polynomial of the Krylov operator, and xi_i(u) = 1 + [x_i^+(u), x_{i,0}^-].
    """
    if which == "xi":
        xp = current_via_resolvent(module, i, "+")
        comm = xp.mul_const_right(module.xm0[i]) - xp.mul_const_left(module.xm0[i])
        return RationalFnMatrix.identity(module.dim) + comm
    if which not in ("+", "-"):
        raise ValueError(f"unknown current {which!r}")
    sign = 1 if which == "+" else -1
    w = module.xp0[i] if which == "+" else module.xm0[i]
    if smat_is_zero(w):
        return RationalFnMatrix(module.dim)
    two_d = 2 * module.datum.d_of(i)
    vectors, mu = _krylov_resolvent(module.t1[i], w, two_d, sign)
    roots, rest = rational_roots(mu)
    if len(rest) > 1:
        raise IrrationalPole(f"minimal polynomial has irrational factor of degree {len(rest)-1}")
    deg = len(mu) - 1
    # numerator coefficient matrices: M_l = sum_{k>l} mu_k A^{k-1-l} w
    numers: list[SparseMat] = []
    for l in range(deg):
        acc: SparseMat = {}
        for k in range(l + 1, deg + 1):
            if mu[k]:
                acc = smat_add(acc, smat_scale(vectors[k - 1 - l], mu[k]))
        numers.append(acc)
    keys = set()
    for mat in numers:
        keys.update(mat)
    entries: dict[tuple[int, int], RationalFn] = {}
    for key in keys:
        num = pnorm(mat.get(key, 0) for mat in numers)
        if num:
            entries[key] = RationalFn(num, mu)
    return RationalFnMatrix(module.dim, entries)


# ---------------------------------------------------------------------------
# tensor products (type A)


def _pair_alpha(n: int, i: int, root: tuple[int, int]) -> int:
    """(alpha_i, eps_a - eps_b) in the type-A normalization."""
    a, b = root
    return (
        (1 if a == i else 0) - (1 if b == i else 0)
        - (1 if a == i + 1 else 0) + (1 if b == i + 1 else 0)
    )


def tensor_product(
    mod_a: ExplicitModule, mod_b: ExplicitModule, build_currents: bool = True
) -> ExplicitModule:
    """Tensor product through the coproduct; type A only.

    Generators are primitive except t_{i,1}, which picks up the root-vector
    correction -sum_alpha (alpha_i, alpha) x_alpha^- (x) x_alpha^+.
    """
    datum = mod_a.datum
    if datum.family != "A" or mod_b.datum != datum:
        raise UnsupportedType("tensor products require matching type-A data")
    if mod_a.root_vectors is None or mod_b.root_vectors is None:
        raise UnsupportedType("factors must carry normalized root vectors")
    dim_a, dim_b = mod_a.dim, mod_b.dim
    dim = dim_a * dim_b
    eye_a = {(k, k): Fraction(1) for k in range(dim_a)}
    eye_b = {(k, k): Fraction(1) for k in range(dim_b)}

    def primitive(xa: SparseMat, xb: SparseMat) -> SparseMat:
        return smat_add(smat_kron(xa, eye_b, dim_b), smat_kron(eye_a, xb, dim_b))

    labels = tuple((la, lb) for la in mod_a.labels for lb in mod_b.labels)
    weights = tuple(
        tuple(wa[k] + wb[k] for k in range(datum.rank))
        for wa in mod_a.weights for wb in mod_b.weights
    )
    n = datum.rank + 1
    xi0 = {i: primitive(mod_a.xi0[i], mod_b.xi0[i]) for i in datum.nodes}
    xp0 = {i: primitive(mod_a.xp0[i], mod_b.xp0[i]) for i in datum.nodes}
    xm0 = {i: primitive(mod_a.xm0[i], mod_b.xm0[i]) for i in datum.nodes}
    t1 = {}
    for i in datum.nodes:
        acc = primitive(mod_a.t1[i], mod_b.t1[i])
        for root in mod_a.root_vectors:
            c = _pair_alpha(n, i, root)
            if not c:
                continue
            xam = mod_a.root_vectors[root][1]
            xbp = mod_b.root_vectors[root][0]
            acc = smat_sub(acc, smat_scale(smat_kron(xam, xbp, dim_b), c))
        t1[i] = acc

    mod = ExplicitModule(
        datum=datum, dim=dim, labels=labels, weights=weights,
        xi={}, xplus={}, xminus={},
        xi0=xi0, xp0=xp0, xm0=xm0, t1=t1,
        root_vectors=_type_a_root_vectors(datum, xp0, xm0),
        source=f"({mod_a.source}) (x) ({mod_b.source})",
    )
    if build_currents:
        for i in datum.nodes:
            mod.xplus[i] = current_via_resolvent(mod, i, "+")
            mod.xminus[i] = current_via_resolvent(mod, i, "-")
            comm = mod.xplus[i].mul_const_right(xm0[i]) - mod.xplus[i].mul_const_left(xm0[i])
            mod.xi[i] = RationalFnMatrix.identity(dim) + comm
    return mod


# ---------------------------------------------------------------------------
# relation verification


def _coefficient_matrices(module: ExplicitModule, order: int):
    """xi_{i,r}, x^+_{i,r}, x^-_{i,r} for 0 <= r <= order, per node."""
    xi_c, xp_c, xm_c = {}, {}, {}
    eye = {(k, k): Fraction(1) for k in range(module.dim)}
    for i in module.datum.nodes:
        assert smat_eq(module.xi[i].value_at_infinity(), eye)
        xi_c[i] = module.xi[i].expansion_matrices(order + 1)
        xp_c[i] = module.xplus[i].expansion_matrices(order + 1)
        xm_c[i] = module.xminus[i].expansion_matrices(order + 1)
    return xi_c, xp_c, xm_c


def verify_relations(module: ExplicitModule, R: int) -> list[tuple]:
    """Check the coefficient relations Y1-Y5 for 0 <= r, s <= R.

    Returns violations as (relation, i, j, r, s) tuples; the Serre
    relations hold automatically on finite-dimensional modules and are
    not checked.
    """
    order = max(2 * R, R + 1)
    xi_c, xp_c, xm_c = _coefficient_matrices(module, order)
    datum = module.datum
    bad: list[tuple] = []
    for i in datum.nodes:
        for j in datum.nodes:
            daij = Fraction(datum.d_of(i) * datum.a(i, j))
            half = daij / 2
            for r in range(R + 1):
                for s in range(R + 1):
                    if not smat_is_zero(smat_commutator(xi_c[i][r], xi_c[j][s])):
                        bad.append(("Y1", i, j, r, s))
                    got = smat_commutator(xp_c[i][r], xm_c[j][s])
                    want = xi_c[i][r + s] if i == j else {}
                    if not smat_eq(got, want):
                        bad.append(("Y5", i, j, r, s))
                    for name, xc, sgn in (("+", xp_c, 1), ("-", xm_c, -1)):
                        lhs = smat_sub(
                            smat_commutator(xi_c[i][r + 1], xc[j][s]),
                            smat_commutator(xi_c[i][r], xc[j][s + 1]),
                        )
                        anti = smat_add(
                            smat_mul(xi_c[i][r], xc[j][s]),
                            smat_mul(xc[j][s], xi_c[i][r]),
                        )
                        if not smat_eq(lhs, smat_scale(anti, sgn * half)):
                            bad.append((f"Y3{name}", i, j, r, s))
                        lhs4 = smat_sub(
                            smat_commutator(xc[i][r + 1], xc[j][s]),
                            smat_commutator(xc[i][r], xc[j][s + 1]),
                        )
                        anti4 = smat_add(
                            smat_mul(xc[i][r], xc[j][s]),
                            smat_mul(xc[j][s], xc[i][r]),
                        )
                        if not smat_eq(lhs4, smat_scale(anti4, sgn * half)):
                            bad.append((f"Y4{name}", i, j, r, s))
            for s in range(R + 1):
                for name, xc, sgn in (("+", xp_c, 1), ("-", xm_c, -1)):
                    got = smat_commutator(xi_c[i][0], xc[j][s])
                    if not smat_eq(got, smat_scale(xc[j][s], sgn * daij)):
                        bad.append((f"Y2{name}", i, j, 0, s))
    return bad


# ---------------------------------------------------------------------------
# pole extraction and chains


def poles_of_module(module: ExplicitModule, i: int) -> PoleMultiset:
    """Pole multiset (locations with orders) of the node-i currents.

    Asserts the three currents agree on both locations and orders, which
    is a theorem for any honest module; disagreement raises PoleMismatch.
    """
    per = {which: module.current(i, which).pole_orders() for which in ("xi", "+", "-")}
    if not (per["xi"] == per["+"] == per["-"]):
        raise PoleMismatch(f"node {i}: {per}")
    out = PoleMultiset()
    for b, m in per["xi"].items():
        out.add(pt(b), m)
    return out


def _joint_kernel(mats: list[SparseMat], dim: int) -> list[list[Fraction]]:
    """Basis of the joint kernel of the given matrices."""
    rows: list[list[Fraction]] = []
    for m in mats:
        by_row: dict[int, dict[int, Fraction]] = {}
        for (r, c), v in m.items():
            by_row.setdefault(r, {})[c] = v
        for r in sorted(by_row):
            rows.append([by_row[r].get(c, Fraction(0)) for c in range(dim)])
    # RREF over the rationals
    pivots: list[int] = []
    reduced: list[list[Fraction]] = []
    for row in rows:
        row = list(row)
        for pcol, prow in zip(pivots, reduced):
            if row[pcol]:
                f = row[pcol]
                for c in range(dim):
                    row[c] -= f * prow[c]
        lead = next((c for c in range(dim) if row[c]), None)
        if lead is None:
            continue
        f = row[lead]
        row = [c / f for c in row]
        for pcol, prow in zip(pivots, reduced):
            if prow[lead]:
                g = prow[lead]
                for c in range(dim):
                    prow[c] -= g * row[c]
        pivots.append(lead)
        reduced.append(row)
    free = [c for c in range(dim) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * dim
        vec[fc] = Fraction(1)
        for pcol, prow in zip(pivots, reduced):
            vec[pcol] = -prow[fc]
        basis.append(vec)
    return basis


def highest_weight_vector(module: ExplicitModule) -> list[Fraction]:
    """The vector killed by every raising constant; must be unique."""
    basis = _joint_kernel([module.xp0[i] for i in module.datum.nodes], module.dim)
    if len(basis) != 1:
        raise ValueError(f"highest weight space has dimension {len(basis)}, need 1")
    return basis[0]


def lowest_weight_vector(module: ExplicitModule) -> list[Fraction]:
    basis = _joint_kernel([module.xm0[i] for i in module.datum.nodes], module.dim)
    if len(basis) != 1:
        raise ValueError(f"lowest weight space has dimension {len(basis)}, need 1")
    return basis[0]


@dataclass(frozen=True)
class MaximalChain:
    """Greedy maximal chain of partial-fraction lowering operators.

    Each step is (node k, pole b, order index n), recorded in application
    order from the highest-weight vector down.
    """

    steps: tuple[tuple[int, SpectralPoint, int], ...]


def maximal_chain(module: ExplicitModule) -> MaximalChain:
    """Walk from the highest to the lowest weight vector greedily.

    Tie-breaking is lowest node first, then the pole with the largest
    rational value; the resulting Baxter multiset is chain-independent,
    so any deterministic rule works.
    """
    omega = highest_weight_vector(module)
    low = lowest_weight_vector(module)
    steps: list[tuple[int, SpectralPoint, int]] = []
    datum = module.datum
    while True:
        picked = None
        for k in datum.nodes:
            wvec = module.xminus[k].apply_frac_vec(omega)
            if any(wvec):
                picked = (k, wvec)
                break
        if picked is None:
            if not _proportional(omega, low):
                raise ChainStuck("all lowering currents vanish off the lowest weight space")
            return MaximalChain(tuple(steps))
        k, wvec = picked
        orders: dict[Fraction, int] = {}
        for f in wvec:
            if f:
                for b, mm in f.poles().items():
                    if orders.get(b, 0) < mm:
                        orders[b] = mm
        b = max(orders)
        order = orders[b]
        omega = [f.laurent_top_at(b, order) if f else Fraction(0) for f in wvec]
        steps.append((k, pt(b), order - 1))


def _proportional(v: list[Fraction], w: list[Fraction]) -> bool:
    ratio = None
    for a, b in zip(v, w):
        if not a and not b:
            continue
        if not b:
            return False
        r = a / b
        if ratio is None:
            ratio = r
        elif ratio != r:
            return False
    return ratio is not None


def baxter_from_chain(chain: MaximalChain, i: int) -> PoleMultiset:
    """Root multiset of the node-i Baxter polynomial read off a chain."""
    out = PoleMultiset()
    for k, b, _n in chain.steps:
        if k == i:
            out.add(b, 1)
    return out


# ---------------------------------------------------------------------------
# dominant weights


def _hall_match(left: list[Fraction], right: list[Fraction], d_i: int) -> list[int] | None:
    """Perfect matching pairing left[t] with right[match[t]] where the gap
    (left - right)/d_i is a positive integer; None if no perfect matching."""
    if len(left) != len(right):
        return None
    edges: list[list[int]] = []
    for b in left:
        opts = []
        for idx, nn in enumerate(right):
            gap = (b - nn) / d_i
            if gap.denominator == 1 and gap > 0:
                opts.append(idx)
        edges.append(opts)
    match_right: dict[int, int] = {}

    def augment(t: int, seen: set[int]) -> bool:
        for idx in edges[t]:
            if idx in seen:
                continue
            seen.add(idx)
            if idx not in match_right or augment(match_right[idx], seen):
                match_right[idx] = t
                return True
        return False

    for t in range(len(left)):
        if not augment(t, set()):
            return None
    out = [0] * len(left)
    for idx, t in match_right.items():
        out[t] = idx
    return out


def _roots_with_multiplicity(p: Poly) -> list[Fraction]:
    roots, rest = rational_roots(p)
    if len(rest) > 1:
        raise IrrationalPole(f"polynomial does not split: degree {len(rest)-1} cofactor")
    out: list[Fraction] = []
    for b, m in roots.items():
        out.extend([b] * m)
    return out


def sigma_from_dominant_weights(
    module: ExplicitModule, i: int, eigenvalues: list[RationalFn] | None = None
) -> frozenset[SpectralPoint]:
    """Union of Z(P_mu) over the i-dominant xi-eigenvalues.

    An eigenvalue N(u)/D(u) is i-dominant when the denominator roots can
    be perfectly matched to numerator roots a positive multiple of d_i
    below them; each matched pair contributes its descending string.
    """
    if eigenvalues is None:
        mat = module.xi[i]
        if not mat.is_diagonal():
            raise ValueError("xi_i is not diagonal in the stored basis; pass eigenvalues")
        eigenvalues = [mat.entry(t, t) for t in range(module.dim)]
    d_i = module.datum.d_of(i)
    out: set[Fraction] = set()
    for mu in eigenvalues:
        if len(mu.num) != len(mu.den) or (mu.num and mu.num[-1] != mu.den[-1]):
            raise NotSameDegree(f"eigenvalue {mu.text()} is not 1 at infinity")
        den_roots = _roots_with_multiplicity(mu.den)
        if not den_roots:
            continue
        num_roots = _roots_with_multiplicity(mu.num)
        match = _hall_match(den_roots, num_roots, d_i)
        if match is None:
            continue
        for t, b in enumerate(den_roots):
            ell = int((b - num_roots[match[t]]) / d_i)
            out.update(b - step * d_i for step in range(ell))
    return frozenset(pt(x) for x in out)


# ---------------------------------------------------------------------------
# weight heights


@lru_cache(maxsize=None)
def _height_functional(family: str, rank: int) -> tuple[Fraction, ...]:
    """Row vector h with height(w) = h . w for w in alpha-pairing coordinates."""
    datum = build_cartan(family, rank)
    n = rank
    # M[i][k] = (alpha_k, alpha_i) = d_i a_ik; solve M^T x = (1,...,1)
    m = [[Fraction(datum.d_of(k + 1) * datum.a(k + 1, i + 1)) for k in range(n)] for i in range(n)]
    rhs = [Fraction(1)] * n
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col])
        m[col], m[piv] = m[piv], m[col]
        rhs[col], rhs[piv] = rhs[piv], rhs[col]
        f = m[col][col]
        m[col] = [x / f for x in m[col]]
        rhs[col] /= f
        for r in range(n):
            if r != col and m[r][col]:
                g = m[r][col]
                m[r] = [x - g * y for x, y in zip(m[r], m[col])]
                rhs[r] -= g * rhs[col]
    return tuple(rhs)


def weight_height(datum: CartanDatum, wvec: tuple[int, ...]) -> Fraction:
    """Height of a weight given by its pairings (mu, alpha_i).

    Heights of weights of one module differ by integers; only differences
    are meaningful.
    """
    h = _height_functional(datum.family, datum.rank)
    return sum((hi * wi for hi, wi in zip(h, wvec)), Fraction(0))
