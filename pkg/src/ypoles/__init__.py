"""Exact-arithmetic toolkit for pole sets of finite-dimensional Yangian modules.

The package computes q-Cartan data, Baxter polynomials, pole sets and
cyclicity/admissibility criteria for all nine simple Lie types, and builds
explicit matrix representations over the field of rational functions that
serve as independent brute-force oracles for every closed form.
"""

from ypoles.cartan import CartanDatum, InvalidType, build_cartan, catalog
from ypoles.laurent import LaurentPoly, NonExactDivision, NotTaylor, SeriesWindow, exact_div, qnum
from ypoles.poles import DrinfeldTuple, PoleMultiset, SpectralPoint
from ypoles.qcartan import QCartanData, qcartan_for

__all__ = [
    "CartanDatum",
    "DrinfeldTuple",
    "InvalidType",
    "LaurentPoly",
    "NonExactDivision",
    "NotTaylor",
    "PoleMultiset",
    "QCartanData",
    "SeriesWindow",
    "SpectralPoint",
    "build_cartan",
    "catalog",
    "exact_div",
    "qcartan_for",
    "qnum",
]
