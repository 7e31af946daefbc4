"""Simply-laced root-system walks: Coxeter-element formula and w0 descent.

Root vectors are integer coordinate tuples in the simple-root basis.  In
simply-laced types with the normalization (alpha, alpha) = 2 the pairing
(beta, varpi_j) is just the j-th coordinate.
"""

from __future__ import annotations

from ypoles.cartan import CartanDatum
from ypoles.qcartan import qcartan_data

RootVector = tuple[int, ...]


def simple_reflection(datum: CartanDatum, i: int, v: RootVector) -> RootVector:
    """s_i(v) = v - <v, alpha_i^vee> alpha_i with <alpha_k, alpha_i^vee> = a_ik."""
    row = datum.cartan[i - 1]
    c = sum(row[k] * v[k] for k in range(datum.rank))
    out = list(v)
    out[i - 1] -= c
    return tuple(out)


def is_positive(v: RootVector) -> bool:
    return any(v) and all(c >= 0 for c in v)


def alpha(datum: CartanDatum, i: int) -> RootVector:
    return tuple(1 if k == i - 1 else 0 for k in range(datum.rank))


def coxeter_setup(datum: CartanDatum, i: int) -> tuple[tuple[int, ...], tuple[int, ...], RootVector]:
    """Sink-source bipartition with i a sink, and gamma_i = alpha_i - sum a_ji alpha_j.

    The sum runs over sources j; the Dynkin graph of a simple type is a
    tree, hence bipartite.
    """
    if not datum.simply_laced:
        raise ValueError("coxeter_setup requires a simply-laced type")
    colors = {i: 0}
    stack = [i]
    while stack:
        x = stack.pop()
        for y in datum.nodes:
            if y != x and datum.a(x, y) < 0 and y not in colors:
                colors[y] = 1 - colors[x]
                stack.append(y)
    for x in datum.nodes:
        for y in datum.nodes:
            if x < y and datum.a(x, y) < 0 and colors[x] == colors[y]:
                raise ValueError("Dynkin graph is not bipartite")
    sinks = tuple(sorted(x for x in datum.nodes if colors[x] == 0))
    sources = tuple(sorted(x for x in datum.nodes if colors[x] == 1))
    gamma = list(alpha(datum, i))
    for j in sources:
        gamma[j - 1] -= datum.a(j, i)
    return sinks, sources, tuple(gamma)


def _tau(datum: CartanDatum, sinks, sources, v: RootVector) -> RootVector:
    # tau = (product of source reflections) after (product of sink reflections);
    # reflections within one class commute, so each product is order-free.
    for k in sinks:
        v = simple_reflection(datum, k, v)
    for k in sources:
        v = simple_reflection(datum, k, v)
    return v


def vij_via_coxeter(datum: CartanDatum, i: int, j: int, r: int) -> int:
    """v_ij^{(r)} from the Coxeter orbit of gamma_i.

    (tau^{(r-1)/2} gamma_i, varpi_j) when j is a sink and r is odd,
    (tau^{(r-2)/2} gamma_i, varpi_j) when j is a source and r is even,
    and 0 otherwise.
    """
    if r < 0:
        raise ValueError("series index must be nonnegative")
    if r == 0:
        return 0
    sinks, sources, gamma = coxeter_setup(datum, i)
    if j in sinks and r % 2 == 1:
        power = (r - 1) // 2
    elif j in sources and r % 2 == 0:
        power = (r - 2) // 2
    else:
        return 0
    v = gamma
    for _ in range(power):
        v = _tau(datum, sinks, sources, v)
    return v[j - 1]


def verify_fuj_her(datum: CartanDatum) -> bool:
    """Executable positivity proof: every row of the v-window is hit.

    Checks that the Coxeter orbit of gamma_i consists of positive roots up
    to exponent (h_dual - 2)/2, that for every i and 1 <= r <= h_dual - 1
    some j has v_ij^{(r)} > 0, and that the Coxeter formula reproduces the
    q-Cartan windows on 0 <= r <= h_dual.
    """
    if not datum.simply_laced:
        raise ValueError("verify_fuj_her requires a simply-laced type")
    h = datum.dual_coxeter
    qc = qcartan_data(datum)
    for i in datum.nodes:
        sinks, sources, gamma = coxeter_setup(datum, i)
        v = gamma
        for _ in range((h - 2) // 2 + 1):
            if not is_positive(v):
                return False
            v = _tau(datum, sinks, sources, v)
        for r in range(0, h + 1):
            for j in datum.nodes:
                if vij_via_coxeter(datum, i, j, r) != qc.vij(i, j).coefficient(r):
                    return False
        for r in range(1, h):
            if not any(vij_via_coxeter(datum, i, j, r) > 0 for j in datum.nodes):
                return False
    return True


def w0_word(datum: CartanDatum) -> list[int]:
    """A reduced word for the longest Weyl element, by descent from rho.

    Starting from the regular dominant weight with all fundamental-weight
    coordinates 1, repeatedly reflect at a node with positive coordinate;
    the recorded word, applied left-to-right, is w0.
    """
    r = datum.rank
    v = [1] * r  # coordinates <v, alpha_j^vee> in the fundamental-weight basis
    word: list[int] = []
    while True:
        for j in range(r):
            if v[j] > 0:
                break
        else:
            return word
        cj = v[j]
        for k in range(r):
            # alpha_j has k-th fundamental-weight coordinate a_{kj}
            v[k] -= cj * datum.a(k + 1, j + 1)
        word.append(j + 1)


def star_from_w0(datum: CartanDatum) -> tuple[int, ...]:
    """The involution i -> i* with alpha_{i*} = -w0(alpha_i), computed by walk."""
    word = w0_word(datum)
    out = []
    for i in datum.nodes:
        v = alpha(datum, i)
        for j in word:
            v = simple_reflection(datum, j, v)
        neg = tuple(-c for c in v)
        matches = [k for k in datum.nodes if neg == alpha(datum, k)]
        if len(matches) != 1:
            raise AssertionError(f"-w0(alpha_{i}) is not a simple root: {neg}")
        out.append(matches[0])
    return tuple(out)
