"""Exact Laurent-polynomial arithmetic in q, plus truncated power-series windows.

A Laurent polynomial is a finite map from integer exponents to nonzero
rational coefficients, so every ring operation is exact.  Rational
coefficients are kept throughout because matrix inversion over this ring
transits through rational intermediates even when the end result is
integral; integrality is checked on demand instead of being a type-level
property.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping


class NonExactDivision(ArithmeticError):
    """A quotient in the Laurent ring left a nonzero remainder."""


class NotTaylor(ArithmeticError):
    """A series expansion kept a nonzero coefficient in negative degree."""


class LaurentPoly:
    """Laurent polynomial over the rationals, stored sparsely by exponent."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, Fraction | int] | None = None):
        data: dict[int, Fraction] = {}
        if coeffs:
            for e, c in coeffs.items():
                c = Fraction(c)
                if c:
                    data[int(e)] = c
        self.coeffs = data

    @staticmethod
    def zero() -> LaurentPoly:
        return LaurentPoly()

    @staticmethod
    def one() -> LaurentPoly:
        return LaurentPoly({0: 1})

    @staticmethod
    def monomial(exp: int, coeff: Fraction | int = 1) -> LaurentPoly:
        return LaurentPoly({exp: coeff})

    def coeff(self, exp: int) -> Fraction:
        return self.coeffs.get(exp, Fraction(0))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = LaurentPoly()
        res.coeffs = out
        return res

    def __neg__(self) -> LaurentPoly:
        res = LaurentPoly()
        res.coeffs = {e: -c for e, c in self.coeffs.items()}
        return res

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        out: dict[int, Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        res = LaurentPoly()
        res.coeffs = out
        return res

    def scaled(self, factor: Fraction | int) -> LaurentPoly:
        factor = Fraction(factor)
        if not factor:
            return LaurentPoly()
        res = LaurentPoly()
        res.coeffs = {e: c * factor for e, c in self.coeffs.items()}
        return res

    def shifted(self, k: int) -> LaurentPoly:
        """Multiply by q^k."""
        res = LaurentPoly()
        res.coeffs = {e + k: c for e, c in self.coeffs.items()}
        return res

    def inverted_q(self) -> LaurentPoly:
        """Substitute q -> q^{-1}."""
        res = LaurentPoly()
        res.coeffs = {-e: c for e, c in self.coeffs.items()}
        return res

    def min_exp(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no exponents")
        return min(self.coeffs)

    def max_exp(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no exponents")
        return max(self.coeffs)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs.values())

    def is_nonneg_integral(self) -> bool:
        return all(c.denominator == 1 and c >= 0 for c in self.coeffs.values())

    def items(self) -> Iterator[tuple[int, Fraction]]:
        return iter(sorted(self.coeffs.items()))

    def text(self) -> str:
        """Render as "c_k q^k + ..." with exponents ascending."""
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in sorted(self.coeffs.items()):
            if e == 0:
                parts.append(str(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                sign = "-" if c < 0 else ""
                parts.append(f"{sign}{mag}q^{e}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"LaurentPoly({self.text()})"

    def to_json(self) -> list[list[int]]:
        return [[e, c.numerator, c.denominator] for e, c in sorted(self.coeffs.items())]

    @staticmethod
    def from_json(data: list[list[int]]) -> LaurentPoly:
        return LaurentPoly({e: Fraction(n, d) for e, n, d in data})


def qnum(n: int) -> LaurentPoly:
    """The q-number [n]_q = (q^n - q^{-n})/(q - q^{-1}), expanded exactly.

    [0]_q = 0 and [-n]_q = -[n]_q.
    """
    if n == 0:
        return LaurentPoly()
    sign = 1 if n > 0 else -1
    n = abs(n)
    return LaurentPoly({n - 1 - 2 * k: sign for k in range(n)})


def exact_div(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Exact quotient in the Laurent ring; NonExactDivision on remainder.

    Monomials are units, so divisibility reduces to ordinary polynomial
    division after stripping the lowest powers of q from both operands.
    """
    if not den:
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    if not num:
        return LaurentPoly()
    shift = num.min_exp() - den.min_exp()
    rem = {e - num.min_exp(): c for e, c in num.coeffs.items()}
    dcoeffs = {e - den.min_exp(): c for e, c in den.coeffs.items()}
    dtop = max(dcoeffs)
    dlead = dcoeffs[dtop]
    out: dict[int, Fraction] = {}
    while rem:
        top = max(rem)
        if top < dtop:
            raise NonExactDivision(f"{num!r} is not divisible by {den!r}")
        step = top - dtop
        factor = rem[top] / dlead
        out[step + shift] = factor
        for e, c in dcoeffs.items():
            s = rem.get(e + step, 0) - factor * c
            if s:
                rem[e + step] = s
            else:
                rem.pop(e + step, None)
    res = LaurentPoly()
    res.coeffs = out
    return res


@dataclass(frozen=True)
class SeriesWindow:
    """Coefficients 0..upper of a power series in q, all exact integers."""

    upper: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.upper + 1:
            raise ValueError("window length mismatch")

    def coefficient(self, r: int) -> int:
        """Coefficient of q^r; zero for r < 0, IndexError above the window."""
        if r < 0:
            return 0
        if r > self.upper:
            raise IndexError(f"exponent {r} beyond window 0..{self.upper}")
        return self.coeffs[r]

    def to_json(self) -> list[int]:
        return list(self.coeffs)


def series_div_window(num: LaurentPoly, two_kappa: int, upper: int) -> SeriesWindow:
    """Window 0..upper of num / (q^{2k} - q^{-2k}), which must be Taylor.

    Uses 1/(q^{2k} - q^{-2k}) = -q^{2k} * sum_{m>=0} q^{4km}, so the
    coefficient of q^e in the quotient is -sum_m num_{e - 2k(2m+1)}.
    """
    if two_kappa <= 0:
        raise ValueError("two_kappa must be positive")
    if upper < 0:
        raise ValueError("window upper bound must be nonnegative")
    if not num.is_integral():
        raise ValueError("numerator must have integer coefficients")
    if not num:
        return SeriesWindow(upper, (0,) * (upper + 1))

    lo = num.min_exp()

    def coeff_at(e: int) -> int:
        total = 0
        m = 0
        while e - two_kappa * (2 * m + 1) >= lo:
            total -= int(num.coeff(e - two_kappa * (2 * m + 1)))
            m += 1
        return total

    for e in range(lo + two_kappa, 0):
        if coeff_at(e):
            raise NotTaylor(f"nonzero coefficient at q^{e}")
    return SeriesWindow(upper, tuple(coeff_at(e) for e in range(upper + 1)))
