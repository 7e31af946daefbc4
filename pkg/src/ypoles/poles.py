"""Spectral points, root multisets, Baxter polynomials and pole sets.

Monic polynomials in u are represented by their root multisets: every
formula consumed here is stated through roots and rational shifts, so
coefficients are never expanded.  Points of the complex plane are modeled
as (orbit label, exact rational offset); the distinguished orbit "0" is
the rational line through the origin, and two points in different orbits
are never equal.  All shifts are in hbar-units with hbar = 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from ypoles.qcartan import QCartanData


def neg_orbit(orbit: str) -> str:
    """The orbit paired with `orbit` under point negation; "0" is self-paired."""
    if orbit == "0":
        return "0"
    return orbit[1:] if orbit.startswith("-") else "-" + orbit


@dataclass(frozen=True, order=True)
class SpectralPoint:
    """A point of C: an opaque orbit label plus an exact rational offset."""

    orbit: str
    offset: Fraction

    def shifted(self, c: Fraction | int) -> SpectralPoint:
        return SpectralPoint(self.orbit, self.offset + Fraction(c))

    def negated(self) -> SpectralPoint:
        return SpectralPoint(neg_orbit(self.orbit), -self.offset)

    def to_json(self) -> list:
        return [self.orbit, self.offset.numerator, self.offset.denominator]

    @staticmethod
    def from_json(data: list) -> SpectralPoint:
        orbit, num, den = data
        return SpectralPoint(str(orbit), Fraction(num, den))


def pt(offset: Fraction | int | str, orbit: str = "0") -> SpectralPoint:
    """Convenience constructor on the rational orbit."""
    return SpectralPoint(orbit, Fraction(offset))


class PoleMultiset:
    """Finite multiset of spectral points with positive multiplicities."""

    __slots__ = ("_data",)

    def __init__(self, data: dict[SpectralPoint, int] | None = None):
        self._data: dict[SpectralPoint, int] = {}
        if data:
            for p, m in data.items():
                self.add(p, m)

    def add(self, point: SpectralPoint, mult: int = 1) -> None:
        if mult <= 0:
            raise ValueError("multiplicities must be positive")
        self._data[point] = self._data.get(point, 0) + mult

    def multiplicity(self, point: SpectralPoint) -> int:
        return self._data.get(point, 0)

    def support(self) -> frozenset[SpectralPoint]:
        return frozenset(self._data)

    def items(self) -> Iterator[tuple[SpectralPoint, int]]:
        return iter(sorted(self._data.items()))

    def merged(self, other: PoleMultiset) -> PoleMultiset:
        """Multiset sum: the root multiset of the product of the two polynomials."""
        out = PoleMultiset(dict(self._data))
        for p, m in other._data.items():
            out.add(p, m)
        return out

    def union_max(self, other: PoleMultiset) -> PoleMultiset:
        out = PoleMultiset(dict(self._data))
        for p, m in other._data.items():
            if out.multiplicity(p) < m:
                out._data[p] = m
        return out

    def shifted(self, c: Fraction | int) -> PoleMultiset:
        return PoleMultiset({p.shifted(c): m for p, m in self._data.items()})

    def total(self) -> int:
        return sum(self._data.values())

    def __len__(self) -> int:
        return len(self._data)

    def __bool__(self) -> bool:
        return bool(self._data)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PoleMultiset):
            return NotImplemented
        return self._data == other._data

    def __repr__(self) -> str:
        inner = ", ".join(f"{p.orbit}:{p.offset}^{m}" for p, m in self.items())
        return f"PoleMultiset({{{inner}}})"

    def to_json(self) -> list:
        return [[p.orbit, p.offset.numerator, p.offset.denominator, m] for p, m in self.items()]

    @staticmethod
    def from_json(data: Iterable) -> PoleMultiset:
        out = PoleMultiset()
        for orbit, num, den, mult in data:
            out.add(SpectralPoint(str(orbit), Fraction(num, den)), int(mult))
        return out


class DrinfeldTuple:
    """Map from Dynkin node to the root multiset of its monic polynomial."""

    __slots__ = ("polys",)

    def __init__(self, polys: dict[int, PoleMultiset] | None = None):
        self.polys = {i: p for i, p in (polys or {}).items() if p}

    def poly(self, i: int) -> PoleMultiset:
        return self.polys.get(i, PoleMultiset())

    def nodes(self) -> list[int]:
        return sorted(self.polys)

    def shifted(self, c: Fraction | int) -> DrinfeldTuple:
        return DrinfeldTuple({i: p.shifted(c) for i, p in self.polys.items()})

    def is_empty(self) -> bool:
        return not self.polys

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DrinfeldTuple):
            return NotImplemented
        return self.polys == other.polys

    def to_json(self) -> dict:
        return {str(i): p.to_json() for i, p in sorted(self.polys.items())}

    @staticmethod
    def from_json(data: dict, rank: int | None = None) -> DrinfeldTuple:
        polys = {}
        for key, entries in data.items():
            node = int(key)
            if rank is not None and not 1 <= node <= rank:
                raise ValueError(f"node {node} outside 1..{rank}")
            ms = PoleMultiset.from_json(entries)
            if ms:
                polys[node] = ms
        return DrinfeldTuple(polys)

    @staticmethod
    def fundamental(node: int, root: SpectralPoint) -> DrinfeldTuple:
        return DrinfeldTuple({node: PoleMultiset({root: 1})})

    @staticmethod
    def load(path: str, rank: int | None = None) -> DrinfeldTuple:
        with open(path, encoding="utf-8") as fh:
            return DrinfeldTuple.from_json(json.load(fh), rank)


def _check_node(qc: QCartanData, *nodes: int) -> None:
    for node in nodes:
        if not 1 <= node <= qc.datum.rank:
            raise ValueError(f"node {node} outside 1..{qc.datum.rank}")


def baxter_fundamental(qc: QCartanData, i: int, j: int) -> PoleMultiset:
    """Root multiset of the node-i Baxter polynomial of the j-th fundamental.

    Root (s - d_j)/2 with multiplicity v_ij^{(s)} for d_i <= s <= 2k - d_i;
    all window values in that range are nonnegative.
    """
    _check_node(qc, i, j)
    datum = qc.datum
    di, dj = datum.d_of(i), datum.d_of(j)
    win = qc.vij(i, j)
    out = PoleMultiset()
    for s in range(di, datum.two_kappa - di + 1):
        m = win.coefficient(s)
        if m:
            out.add(pt(Fraction(s - dj, 2)), m)
    return out


def _check_tuple(qc: QCartanData, P: DrinfeldTuple) -> None:
    for node in P.nodes():
        _check_node(qc, node)


def sigma_fundamental(qc: QCartanData, i: int, j: int) -> frozenset[SpectralPoint]:
    """The i-th pole set of the j-th fundamental representation."""
    return baxter_fundamental(qc, i, j).support()


def baxter_general(qc: QCartanData, P: DrinfeldTuple, i: int) -> PoleMultiset:
    """Node-i Baxter root multiset of the irreducible with Drinfeld tuple P.

    Every root a of P_j of multiplicity m contributes a + (s - d_j)/2 with
    multiplicity m * v_ij^{(s)}; collisions accumulate.
    """
    _check_node(qc, i)
    _check_tuple(qc, P)
    datum = qc.datum
    di = datum.d_of(i)
    out = PoleMultiset()
    for j in P.nodes():
        dj = datum.d_of(j)
        win = qc.vij(i, j)
        for s in range(di, datum.two_kappa - di + 1):
            vs = win.coefficient(s)
            if not vs:
                continue
            shift = Fraction(s - dj, 2)
            for a, m in P.poly(j).items():
                out.add(a.shifted(shift), m * vs)
    return out


def sigma_irreducible(qc: QCartanData, P: DrinfeldTuple, i: int) -> frozenset[SpectralPoint]:
    """sigma_i of L(P): union over j of Z(P_j) shifted by the fundamental sets."""
    _check_node(qc, i)
    _check_tuple(qc, P)
    out: set[SpectralPoint] = set()
    for j in P.nodes():
        fund = sigma_fundamental(qc, i, j)
        for a, _ in P.poly(j).items():
            # fundamental-set points live on orbit "0", so adding one keeps a's orbit
            out.update(a.shifted(s.offset) for s in fund)
    return frozenset(out)


def sigma_full(qc: QCartanData, P: DrinfeldTuple) -> frozenset[SpectralPoint]:
    """Union of sigma_i over all nodes."""
    out: set[SpectralPoint] = set()
    for i in qc.datum.nodes:
        out.update(sigma_irreducible(qc, P, i))
    return frozenset(out)


def kr_sigma(qc: QCartanData, i: int, j: int, ell: int) -> frozenset[SpectralPoint]:
    """sigma_i of the Kirillov-Reshetikhin module with an ell-string at node j."""
    _check_node(qc, i, j)
    if ell < 1:
        raise ValueError("ell must be a positive integer")
    base = sigma_fundamental(qc, i, j)
    return frozenset(p.shifted(-b) for p in base for b in range(ell))


def kr_baxter(qc: QCartanData, i: int, j: int, ell: int) -> PoleMultiset:
    """Node-i Baxter root multiset of the same Kirillov-Reshetikhin module:
    the fundamental multiset repeated at shifts 0, -1, ..., -(ell-1)."""
    if ell < 1:
        raise ValueError("ell must be a positive integer")
    base = baxter_fundamental(qc, i, j)
    out = PoleMultiset()
    for b in range(ell):
        out = out.merged(base.shifted(-b))
    return out


def sln_sigma_closed_form(n: int, i: int, j: int) -> frozenset[SpectralPoint]:
    """Type-A closed form: {(i+j)/2 - b} over the interval [i+j+1-n, i] ∩ [1, j]."""
    if not (1 <= i <= n - 1 and 1 <= j <= n - 1):
        raise ValueError(f"nodes ({i},{j}) outside 1..{n-1}")
    lo = max(i + j + 1 - n, 1)
    hi = min(i, j)
    return frozenset(pt(Fraction(i + j, 2) - b) for b in range(lo, hi + 1))
