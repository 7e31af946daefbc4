"""q-Cartan matrix B(q), its scaled inverse C(q), v-windows and p_ij(q).

C(q) is obtained by solving B(q) X = [2k]_q I with a fraction-free
Gauss-Jordan elimination over the Laurent ring (every division is exact by
Bareiss' discipline).  Positivity and palindromicity of the entries are
theorems, so violations are asserted as bugs rather than handled.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ypoles.cartan import CartanDatum, build_cartan
from ypoles.laurent import LaurentPoly, SeriesWindow, exact_div, qnum, series_div_window


class NegativeCoefficient(ArithmeticError):
    """An entry of C(q) failed nonnegative integrality (implementation bug)."""


class SupportViolation(ArithmeticError):
    """p_ij(q) has support outside the interval granted by the theory."""


@dataclass(frozen=True)
class QCartanData:
    """Per-type bundle: B(q), C(q) and all v-windows at width 4*kappa."""

    datum: CartanDatum
    B: tuple[tuple[LaurentPoly, ...], ...]
    C: tuple[tuple[LaurentPoly, ...], ...]
    v: dict[tuple[int, int], SeriesWindow]

    @property
    def two_kappa(self) -> int:
        return self.datum.two_kappa

    def vij(self, i: int, j: int) -> SeriesWindow:
        return self.v[(i, j)]


def qcartan_matrix(datum: CartanDatum) -> list[list[LaurentPoly]]:
    """B(q): entry (i, j) is the q-number [d_i a_ij]_q."""
    return [
        [qnum(datum.d_of(i) * datum.a(i, j)) for j in datum.nodes]
        for i in datum.nodes
    ]


def _montante_solve(
    A: list[list[LaurentPoly]], rhs: list[list[LaurentPoly]]
) -> list[list[LaurentPoly]]:
    """Solve A X = rhs by fraction-free Gauss-Jordan; all divisions exact."""
    n = len(A)
    width = len(rhs[0])
    M = [list(A[r]) + list(rhs[r]) for r in range(n)]
    prev = LaurentPoly.one()
    for k in range(n):
        if not M[k][k]:
            for r in range(k + 1, n):
                if M[r][k]:
                    M[k], M[r] = M[r], M[k]
                    break
            else:
                raise ZeroDivisionError("singular matrix")
        pivot = M[k][k]
        for r in range(n):
            if r == k:
                continue
            lead = M[r][k]
            row = M[r]
            for c in range(n + width):
                if c == k:
                    continue
                row[c] = exact_div(pivot * row[c] - lead * M[k][c], prev)
            row[k] = LaurentPoly.zero()
        prev = pivot
    det = M[n - 1][n - 1]
    return [
        [exact_div(M[r][n + c], det) for c in range(width)] for r in range(n)
    ]


def compute_C(datum: CartanDatum, B: list[list[LaurentPoly]]) -> list[list[LaurentPoly]]:
    """C(q) = [2k]_q B(q)^{-1}, checked nonnegative-integral, symmetric, palindromic."""
    n = datum.rank
    two_k = qnum(datum.two_kappa)
    rhs = [
        [two_k if r == c else LaurentPoly.zero() for c in range(n)]
        for r in range(n)
    ]
    C = _montante_solve(B, rhs)
    for i in range(n):
        for j in range(n):
            entry = C[i][j]
            if not entry.is_nonneg_integral():
                raise NegativeCoefficient(f"c_{i+1},{j+1} = {entry.text()}")
            assert entry == C[j][i], "C(q) must be symmetric"
            assert entry == entry.inverted_q(), "c_ij(q) must be palindromic"
    return C


def _build(datum: CartanDatum) -> QCartanData:
    B = qcartan_matrix(datum)
    C = compute_C(datum, B)
    minus = qnum(1).shifted(1) - qnum(1).shifted(-1)  # q - q^{-1}
    width = 2 * datum.two_kappa
    v: dict[tuple[int, int], SeriesWindow] = {}
    for i in datum.nodes:
        for j in datum.nodes:
            num = minus * qnum(datum.d_of(j)) * C[i - 1][j - 1]
            win = series_div_window(num, datum.two_kappa, width)
            for r in range(datum.d_of(i)):
                assert win.coefficient(r) == 0, "v must vanish below q^{d_i}"
            assert win.coefficient(datum.d_of(i)) == (1 if i == j else 0)
            v[(i, j)] = win
    return QCartanData(
        datum=datum,
        B=tuple(tuple(row) for row in B),
        C=tuple(tuple(row) for row in C),
        v=v,
    )


@lru_cache(maxsize=None)
def qcartan_for(family: str, rank: int) -> QCartanData:
    """Cached QCartanData for a catalog type."""
    return _build(build_cartan(family, rank))


def qcartan_data(datum: CartanDatum) -> QCartanData:
    return qcartan_for(datum.family, datum.rank)


def vij_window(qc: QCartanData, i: int, j: int) -> SeriesWindow:
    """The precomputed window 0..4*kappa of v_ij(q)."""
    return qc.v[(i, j)]


def pij(qc: QCartanData, i: int, j: int) -> LaurentPoly:
    """p_ij(q) = (q^{2d_j}-1)(c_{ij*}(q) + q^{2k} c_ij(q)) / (q^{4k}-1).

    The result is asserted nonnegative-integral with support on exponents
    -r for d_i - d_j <= r <= 2k - d_i - d_j, and its coefficient of q^{-r}
    must match v_ij^{(r + d_j)}.
    """
    datum = qc.datum
    tk = datum.two_kappa
    di, dj = datum.d_of(i), datum.d_of(j)
    jstar = datum.star_of(j)
    num = (LaurentPoly.monomial(2 * dj) - LaurentPoly.one()) * (
        qc.C[i - 1][jstar - 1] + qc.C[i - 1][j - 1].shifted(tk)
    )
    den = LaurentPoly.monomial(2 * tk) - LaurentPoly.one()
    p = exact_div(num, den)
    if not p.is_nonneg_integral():
        raise NegativeCoefficient(f"p_{i},{j} = {p.text()}")
    lo, hi = -(tk - di - dj), dj - di
    for e, c in p.items():
        if e < lo or e > hi:
            raise SupportViolation(f"p_{i},{j} has term q^{e} outside [{lo},{hi}]")
    for r in range(di - dj, tk - di - dj + 1):
        assert int(p.coeff(-r)) == qc.vij(i, j).coefficient(r + dj)
    return p
