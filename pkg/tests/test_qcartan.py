"""q-Cartan data: B(q), C(q), v-windows and p_ij against frozen fixtures."""

import pytest

from ypoles.laurent import LaurentPoly, qnum
from ypoles.qcartan import pij, qcartan_for, qcartan_matrix, vij_window
from ypoles.cartan import build_cartan


def test_b_matrix_small_types():
    b2 = qcartan_matrix(build_cartan("A", 1))
    assert b2 == [[qnum(2)]]
    b3 = qcartan_matrix(build_cartan("A", 2))
    assert b3[0][0] == qnum(2) and b3[0][1] == LaurentPoly({0: -1})
    bb = qcartan_matrix(build_cartan("B", 2))
    assert bb[0] == [qnum(4), qnum(-2)]
    assert bb[1] == [qnum(-2), qnum(2)]


def test_c_sl2_is_one():
    qc = qcartan_for("A", 1)
    assert qc.C == ((LaurentPoly({0: 1}),),)


@pytest.mark.parametrize("n", range(3, 9))
def test_c_sln_closed_form(n):
    # test fixture from the literature: c_ij = [n-i][j] for i >= j
    qc = qcartan_for("A", n - 1)
    for i in range(1, n):
        for j in range(1, n):
            want = qnum(n - i) * qnum(j) if i >= j else qnum(i) * qnum(n - j)
            assert qc.C[i - 1][j - 1] == want, (n, i, j)


def test_c_sl3_entries():
    qc = qcartan_for("A", 2)
    assert qc.C[0][0] == qnum(2)
    assert qc.C[0][1] == LaurentPoly({0: 1})


def test_v_windows_frozen():
    assert vij_window(qcartan_for("A", 1), 1, 1).coeffs == (0, 1, 0, -1, 0)
    qc3 = qcartan_for("A", 2)
    assert vij_window(qc3, 1, 2).coeffs == (0, 0, 1, 0, -1, 0, 0)
    assert vij_window(qc3, 1, 1).coeffs == (0, 1, 0, 0, 0, -1, 0)
    qcb = qcartan_for("B", 2)
    assert vij_window(qcb, 1, 1).coeffs == (0, 0, 1, 0, 1, 0, 0, 0, -1, 0, -1, 0, 0)
    assert vij_window(qcb, 1, 2).coeffs == (0, 0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 0)
    assert vij_window(qcb, 2, 2).coeffs == (0, 1, 0, 0, 0, 1, 0, -1, 0, 0, 0, -1, 0)


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("C", 3), ("G", 2), ("F", 4)])
def test_v_leading_coefficients(family, rank):
    qc = qcartan_for(family, rank)
    for i in qc.datum.nodes:
        for j in qc.datum.nodes:
            win = vij_window(qc, i, j)
            for r in range(qc.datum.d_of(i)):
                assert win.coefficient(r) == 0
            assert win.coefficient(qc.datum.d_of(i)) == (1 if i == j else 0)


def test_pij_examples():
    assert pij(qcartan_for("A", 1), 1, 1) == LaurentPoly({0: 1})
    assert pij(qcartan_for("A", 2), 1, 2) == LaurentPoly({-1: 1})


@pytest.mark.parametrize("n", range(2, 7))
def test_pij_sln_interval(n):
    qc = qcartan_for("A", n - 1)
    for i in range(1, n):
        for j in range(1, n):
            lo, hi = max(i + j + 1 - n, 1), min(i, j)
            want = LaurentPoly({-(i + j) + 2 * b: 1 for b in range(lo, hi + 1)})
            assert pij(qc, i, j) == want, (n, i, j)


def test_identity_and_symmetry_spot():
    for family, rank in [("B", 3), ("F", 4), ("G", 2), ("D", 4)]:
        qc = qcartan_for(family, rank)
        n = rank
        tk = qnum(qc.datum.two_kappa)
        for i in range(n):
            for j in range(n):
                acc = LaurentPoly.zero()
                for k in range(n):
                    acc = acc + qc.B[i][k] * qc.C[k][j]
                assert acc == (tk if i == j else LaurentPoly.zero())
                assert qc.C[i][j] == qc.C[j][i]
                assert qc.C[i][j] == qc.C[i][j].inverted_q()
