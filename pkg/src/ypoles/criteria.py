"""Decision procedures: cyclicity, irreducibility, double admissibility.

The cyclicity and irreducibility checks certify SUFFICIENT conditions
only: True certifies the structural conclusion, False means the test was
inconclusive (except in the type-A fundamental case, where failure is also
necessary).  Double admissibility is an exact classification.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ypoles.poles import (
    DrinfeldTuple,
    SpectralPoint,
    pt,
    sigma_fundamental,
    sigma_irreducible,
    sln_sigma_closed_form,
)
from ypoles.qcartan import QCartanData, qcartan_for


def cyclic_sufficient(qc: QCartanData, P: DrinfeldTuple, Q: DrinfeldTuple) -> bool:
    """True iff (Z(Q_i) - d_i) avoids sigma_i(L(P)) for every node i.

    True certifies that L(P) tensor L(Q) is a highest weight module.
    """
    datum = qc.datum
    for i in datum.nodes:
        roots = Q.poly(i)
        if not roots:
            continue
        sigma = sigma_irreducible(qc, P, i)
        d_i = datum.d_of(i)
        for a, _ in roots.items():
            if a.shifted(-d_i) in sigma:
                return False
    return True


def irreducible_sufficient(qc: QCartanData, P: DrinfeldTuple, Q: DrinfeldTuple) -> bool:
    """Both cyclicity conditions; True certifies L(P) (x) L(Q) ~ L(PQ)."""
    return cyclic_sufficient(qc, P, Q) and cyclic_sufficient(qc, Q, P)


@lru_cache(maxsize=None)
def _full_fundamental_sigma(family: str, rank: int, j: int) -> frozenset[SpectralPoint]:
    qc = qcartan_for(family, rank)
    out: set[SpectralPoint] = set()
    for i in qc.datum.nodes:
        out.update(sigma_fundamental(qc, i, j))
    return frozenset(out)


def double_admissible(qc: QCartanData, P: DrinfeldTuple) -> bool:
    """True iff -a avoids the full pole set of the j-th fundamental for every
    root a of P_j; such tuples classify the Yangian-double simple modules."""
    datum = qc.datum
    for j in P.nodes():
        full = _full_fundamental_sigma(datum.family, datum.rank, j)
        for a, _ in P.poly(j).items():
            if a.negated() in full:
                return False
    return True


def sln_cyclicity_set(n: int, i: int, j: int) -> frozenset[SpectralPoint]:
    """C_ij(sl_n): shifts s for which L_w_j (x) L_w_i(s) fails to be highest weight.

    For i >= j this is {(i-j)/2 + r : r in [1,j] ∩ [1,n-i]}; the set is
    symmetric in (i, j).  It always equals the type-A fundamental pole set
    shifted by one, which is asserted.
    """
    if not (1 <= i <= n - 1 and 1 <= j <= n - 1):
        raise ValueError(f"nodes ({i},{j}) outside 1..{n-1}")
    a, b = (i, j) if i >= j else (j, i)
    hi = min(b, n - a)
    out = frozenset(pt(Fraction(a - b, 2) + r) for r in range(1, hi + 1))
    shifted_sigma = frozenset(p.shifted(1) for p in sln_sigma_closed_form(n, i, j))
    assert out == shifted_sigma, "cyclicity set must equal sigma + 1 in type A"
    return out
