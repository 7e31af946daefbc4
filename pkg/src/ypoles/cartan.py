"""Cartan data for the nine simple families, in Bourbaki node labeling.

The bilinear form is normalized so every short root has squared length 2;
the symmetrizers d_i are then the half squared lengths of the simple roots.
2*kappa is half the Casimir eigenvalue on the adjoint representation and
equals m * h_dual, where m is the lacing number.
"""

from __future__ import annotations

import os
from dataclasses import dataclass


class InvalidType(ValueError):
    """(family, rank) does not name a simple Lie type."""


# Lacing number per family: max multiplicity of an edge in the diagram.
_LACING = {"A": 1, "B": 2, "C": 2, "D": 1, "E": 1, "F": 2, "G": 3}

_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


@dataclass(frozen=True)
class CartanDatum:
    """Immutable Cartan datum: matrix, symmetrizers, 2*kappa, involution."""

    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    d: tuple[int, ...]
    two_kappa: int
    dual_coxeter: int
    star: tuple[int, ...]
    simply_laced: bool

    @property
    def nodes(self) -> range:
        """Dynkin nodes, 1-based per Bourbaki."""
        return range(1, self.rank + 1)

    def a(self, i: int, j: int) -> int:
        return self.cartan[i - 1][j - 1]

    def d_of(self, i: int) -> int:
        return self.d[i - 1]

    def star_of(self, i: int) -> int:
        return self.star[i - 1]

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "rank": self.rank,
            "cartan": [list(row) for row in self.cartan],
            "d": list(self.d),
            "two_kappa": self.two_kappa,
            "h_dual": self.dual_coxeter,
            "star": list(self.star),
        }


def _chain_matrix(r: int) -> list[list[int]]:
    return [
        [2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(r)]
        for i in range(r)
    ]


def _dual_coxeter(family: str, rank: int) -> int:
    if family == "A":
        return rank + 1
    if family == "B":
        return 2 * rank - 1
    if family == "C":
        return rank + 1
    if family == "D":
        return 2 * rank - 2
    if family == "E":
        return {6: 12, 7: 18, 8: 30}[rank]
    if family == "F":
        return 9
    return 4  # G2


def build_cartan(family: str, rank: int) -> CartanDatum:
    """Construct the CartanDatum for a simple type; InvalidType otherwise."""
    if family not in _RANK_RANGE:
        raise InvalidType(f"unknown family {family!r}")
    lo, hi = _RANK_RANGE[family]
    if rank < lo or (hi is not None and rank > hi):
        raise InvalidType(f"{family}_{rank} is not a simple type")

    r = rank
    if family == "A":
        a = _chain_matrix(r)
        d = [1] * r
        star = [r + 1 - i for i in range(1, r + 1)]
    elif family == "B":
        # alpha_r is the short root: a_{r,r-1} = -2
        a = _chain_matrix(r)
        a[r - 1][r - 2] = -2
        d = [2] * (r - 1) + [1]
        star = list(range(1, r + 1))
    elif family == "C":
        # alpha_r is the long root: a_{r-1,r} = -2
        a = _chain_matrix(r)
        a[r - 2][r - 1] = -2
        d = [1] * (r - 1) + [2]
        star = list(range(1, r + 1))
    elif family == "D":
        a = _chain_matrix(r)
        a[r - 2][r - 1] = a[r - 1][r - 2] = 0
        a[r - 3][r - 1] = a[r - 1][r - 3] = -1
        d = [1] * r
        star = list(range(1, r + 1))
        if r % 2 == 1:
            star[r - 2], star[r - 1] = r, r - 1
    elif family == "E":
        edges = [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]
        if r >= 7:
            edges.append((6, 7))
        if r == 8:
            edges.append((7, 8))
        a = [[2 if i == j else 0 for j in range(r)] for i in range(r)]
        for x, y in edges:
            a[x - 1][y - 1] = a[y - 1][x - 1] = -1
        d = [1] * r
        star = list(range(1, r + 1))
        if r == 6:
            star = [6, 2, 5, 4, 3, 1]
    elif family == "F":
        a = [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -2, 2, -1], [0, 0, -1, 2]]
        d = [2, 2, 1, 1]
        star = [1, 2, 3, 4]
    else:  # G2, alpha_1 short
        a = [[2, -3], [-1, 2]]
        d = [1, 3]
        star = [1, 2]

    h_dual = _dual_coxeter(family, rank)
    datum = CartanDatum(
        family=family,
        rank=rank,
        cartan=tuple(tuple(row) for row in a),
        d=tuple(d),
        two_kappa=_LACING[family] * h_dual,
        dual_coxeter=h_dual,
        star=tuple(star),
        simply_laced=_LACING[family] == 1,
    )
    _validate(datum)
    return datum


def _validate(datum: CartanDatum) -> None:
    a, d, star = datum.cartan, datum.d, datum.star
    r = datum.rank
    for i in range(r):
        assert a[i][i] == 2
        for j in range(r):
            if i != j:
                assert a[i][j] <= 0
            assert d[i] * a[i][j] == d[j] * a[j][i]
    assert sorted(star) == list(range(1, r + 1))
    for i in range(r):
        assert star[star[i] - 1] == i + 1, "star is not an involution"
        assert d[star[i] - 1] == d[i]
    if datum.simply_laced:
        assert all(x == 1 for x in d)
        assert datum.two_kappa == datum.dual_coxeter


def catalog_max_rank() -> int:
    """Rank bound for sweep tests, from YP_CATALOG_MAX_RANK (default 8)."""
    return int(os.environ.get("YP_CATALOG_MAX_RANK", "8"))


def catalog(max_rank: int | None = None) -> list[CartanDatum]:
    """Every catalog type up to the sweep bound: A1.., B2.., C2.., D4.., E, F4, G2."""
    if max_rank is None:
        max_rank = catalog_max_rank()
    out = []
    for r in range(1, max_rank + 1):
        out.append(build_cartan("A", r))
    for r in range(2, max_rank + 1):
        out.append(build_cartan("B", r))
    for r in range(2, max_rank + 1):
        out.append(build_cartan("C", r))
    for r in range(4, max_rank + 1):
        out.append(build_cartan("D", r))
    for r in (6, 7, 8):
        if r <= max_rank:
            out.append(build_cartan("E", r))
    if max_rank >= 4:
        out.append(build_cartan("F", 4))
    out.append(build_cartan("G", 2))
    return out
