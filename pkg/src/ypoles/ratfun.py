"""Exact univariate rational functions over Q, and sparse matrix helpers.

Polynomials are coefficient tuples in ascending degree with no trailing
zeros (the zero polynomial is the empty tuple).  Rational functions are
stored reduced with monic denominator, so equality is structural.
Constant sparse matrices are plain dicts {(row, col): Fraction}.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

Poly = tuple[Fraction, ...]
SparseMat = dict[tuple[int, int], Fraction]


class IrrationalPole(ArithmeticError):
    """A denominator failed to split over Q (evaluation point off orbit "0")."""


# ---------------------------------------------------------------------------
# polynomial helpers


def pnorm(coeffs: Iterable[Fraction | int]) -> Poly:
    out = [Fraction(c) for c in coeffs]
    while out and not out[-1]:
        out.pop()
    return tuple(out)


def pdeg(p: Poly) -> int:
    """Degree, with deg 0 = -1."""
    return len(p) - 1


def padd(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return pnorm(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
    )


def pneg(a: Poly) -> Poly:
    return tuple(-c for c in a)


def psub(a: Poly, b: Poly) -> Poly:
    return padd(a, pneg(b))


def pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return pnorm(out)


def pscale(a: Poly, c: Fraction | int) -> Poly:
    c = Fraction(c)
    if not c:
        return ()
    return tuple(x * c for x in a)


def pmonic(a: Poly) -> Poly:
    if not a:
        return ()
    lead = a[-1]
    return tuple(c / lead for c in a)


def pdivmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    quo = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    blead = b[-1]
    while len(rem) >= len(b):
        while rem and not rem[-1]:
            rem.pop()
        if len(rem) < len(b):
            break
        k = len(rem) - len(b)
        f = rem[-1] / blead
        quo[k] = f
        for j, cb in enumerate(b):
            rem[k + j] -= f * cb
        rem.pop()
    return pnorm(quo), pnorm(rem)


def pgcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, pdivmod(a, b)[1]
    return pmonic(a)


def peval(a: Poly, x: Fraction) -> Fraction:
    out = Fraction(0)
    for c in reversed(a):
        out = out * x + c
    return out


def synthetic_div(a: Poly, b: Fraction) -> tuple[Poly, Fraction]:
    """Divide by (u - b): returns (quotient, remainder value)."""
    if not a:
        return (), Fraction(0)
    out = [Fraction(0)] * (len(a) - 1)
    acc = Fraction(0)
    for k in range(len(a) - 1, 0, -1):
        acc = acc * b + a[k]
        out[k - 1] = acc
    rem = acc * b + a[0]
    return pnorm(out), rem


def root_multiplicity(a: Poly, b: Fraction) -> int:
    mult = 0
    while a and len(a) > 1:
        quo, rem = synthetic_div(a, b)
        if rem:
            break
        a = quo
        mult += 1
    return mult


def _int_divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return out


@lru_cache(maxsize=65536)
def _rational_roots_cached(a: Poly) -> tuple[tuple[tuple[Fraction, int], ...], Poly]:
    roots: dict[Fraction, int] = {}
    # strip factors of u
    low = 0
    while low < len(a) - 1 and not a[low]:
        low += 1
    if low:
        roots[Fraction(0)] = low
        a = pnorm(a[low:])
    if len(a) <= 1:
        return tuple(roots.items()), a
    # clear denominators for the rational root theorem
    denlcm = 1
    for c in a:
        denlcm = denlcm * c.denominator // _gcd(denlcm, c.denominator)
    ints = [int(c * denlcm) for c in a]
    candidates: set[Fraction] = set()
    for p in _int_divisors(ints[0]):
        for q in _int_divisors(ints[-1]):
            candidates.add(Fraction(p, q))
            candidates.add(Fraction(-p, q))
    for cand in sorted(candidates):
        m = root_multiplicity(a, cand)
        if m:
            roots[cand] = roots.get(cand, 0) + m
            for _ in range(m):
                a = synthetic_div(a, cand)[0]
            if len(a) <= 1:
                break
    return tuple(sorted(roots.items())), a


def rational_roots(a: Poly) -> tuple[dict[Fraction, int], Poly]:
    """All rational roots with multiplicity, plus the rootless cofactor."""
    if not a:
        raise ValueError("zero polynomial")
    pairs, rest = _rational_roots_cached(a)
    return dict(pairs), rest


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def poly_from_roots(roots: Mapping[Fraction, int]) -> Poly:
    out: Poly = (Fraction(1),)
    for b, m in roots.items():
        lin = pnorm((-b, 1))
        for _ in range(m):
            out = pmul(out, lin)
    return out


def poly_text(a: Poly) -> str:
    if not a:
        return "(0)"
    return "(" + ",".join(str(c) for c in a) + ")"


# ---------------------------------------------------------------------------
# rational functions


class RationalFn:
    """Reduced ratio of polynomials in u; denominator monic and nonzero."""

    __slots__ = ("num", "den")

    def __init__(self, num: Iterable, den: Iterable = (1,)):
        n = pnorm(num)
        d = pnorm(den)
        if not d:
            raise ZeroDivisionError("zero denominator")
        if not n:
            self.num, self.den = (), (Fraction(1),)
            return
        if len(d) == 1:
            self.num = n if d[0] == 1 else tuple(c / d[0] for c in n)
            self.den = (Fraction(1),)
            return
        g = pgcd(n, d)
        if pdeg(g) > 0:
            n = pdivmod(n, g)[0]
            d = pdivmod(d, g)[0]
        lead = d[-1]
        if lead == 1:
            self.num, self.den = n, d
        else:
            self.num = tuple(c / lead for c in n)
            self.den = tuple(c / lead for c in d)

    @staticmethod
    def const(c: Fraction | int) -> RationalFn:
        return RationalFn((Fraction(c),))

    @staticmethod
    def of_poly(p: Iterable) -> RationalFn:
        return RationalFn(p)

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __add__(self, other: RationalFn) -> RationalFn:
        if not self.num:
            return other
        if not other.num:
            return self
        if self.den == other.den:
            return RationalFn(padd(self.num, other.num), self.den)
        return RationalFn(
            padd(pmul(self.num, other.den), pmul(other.num, self.den)),
            pmul(self.den, other.den),
        )

    def __neg__(self) -> RationalFn:
        out = RationalFn.__new__(RationalFn)
        out.num = pneg(self.num)
        out.den = self.den
        return out

    def __sub__(self, other: RationalFn) -> RationalFn:
        return self + (-other)

    def __mul__(self, other: RationalFn) -> RationalFn:
        return RationalFn(pmul(self.num, other.num), pmul(self.den, other.den))

    def __truediv__(self, other: RationalFn) -> RationalFn:
        if not other.num:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFn(pmul(self.num, other.den), pmul(self.den, other.num))

    def scaled(self, c: Fraction | int) -> RationalFn:
        c = Fraction(c)
        out = RationalFn.__new__(RationalFn)
        if not c:
            out.num, out.den = (), (Fraction(1),)
            return out
        out.num = pscale(self.num, c)
        out.den = self.den
        return out

    def eval(self, x: Fraction) -> Fraction:
        d = peval(self.den, x)
        if not d:
            raise ZeroDivisionError(f"pole at u = {x}")
        return peval(self.num, x) / d

    def poles(self) -> dict[Fraction, int]:
        """Pole locations with orders; IrrationalPole if the denominator
        does not split over Q."""
        if pdeg(self.den) == 0:
            return {}
        roots, rest = rational_roots(self.den)
        if pdeg(rest) > 0:
            raise IrrationalPole(f"denominator factor {poly_text(rest)} has no rational root")
        return roots

    def order_at(self, b: Fraction) -> int:
        return root_multiplicity(self.den, b)

    def laurent_top_at(self, b: Fraction, k: int) -> Fraction:
        """lim (u-b)^k f(u): zero when the pole order is below k."""
        m = self.order_at(b)
        if m > k:
            raise ValueError(f"pole order {m} at {b} exceeds requested {k}")
        if m < k:
            return Fraction(0)
        den = self.den
        for _ in range(m):
            den = synthetic_div(den, b)[0]
        return peval(self.num, b) / peval(den, b)

    def value_at_infinity(self) -> Fraction:
        if pdeg(self.num) > pdeg(self.den):
            raise ValueError("not proper at infinity")
        if pdeg(self.num) < pdeg(self.den):
            return Fraction(0)
        return self.num[-1] / self.den[-1]

    def series_at_infinity(self, nterms: int) -> list[Fraction]:
        """Coefficients of u^0, u^{-1}, ..., u^{-(nterms-1)}."""
        dn, dd = pdeg(self.num), pdeg(self.den)
        if dn > dd:
            raise ValueError("not proper at infinity")
        if not self.num:
            return [Fraction(0)] * nterms
        nstar = [Fraction(0)] * (nterms)
        for j, c in enumerate(self.num):
            k = dd - j  # exponent of t = 1/u
            if k < nterms:
                nstar[k] += c
        dstar = [Fraction(0)] * nterms
        for j, c in enumerate(self.den):
            k = dd - j
            if k < nterms:
                dstar[k] += c
        # power-series division nstar / dstar, dstar[0] = 1 (den monic)
        out = [Fraction(0)] * nterms
        for k in range(nterms):
            acc = nstar[k]
            for m in range(k):
                acc -= out[m] * dstar[k - m]
            out[k] = acc / dstar[0]
        return out

    def text(self) -> str:
        return f"{poly_text(self.num)}/{poly_text(self.den)}"

    def __repr__(self) -> str:
        return f"RationalFn{self.text()}"


RF_ZERO = RationalFn(())
RF_ONE = RationalFn((1,))


def rf_linear_pole(coeff: Fraction | int, b: Fraction) -> RationalFn:
    """coeff / (u - b)."""
    return RationalFn((Fraction(coeff),), (-b, 1))


# ---------------------------------------------------------------------------
# sparse constant matrices


def smat_clean(m: SparseMat) -> SparseMat:
    return {k: v for k, v in m.items() if v}


def smat_add(a: SparseMat, b: SparseMat) -> SparseMat:
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, 0) + v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def smat_sub(a: SparseMat, b: SparseMat) -> SparseMat:
    return smat_add(a, smat_scale(b, -1))


def smat_scale(a: SparseMat, c: Fraction | int) -> SparseMat:
    c = Fraction(c)
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}


def smat_mul(a: SparseMat, b: SparseMat) -> SparseMat:
    brows: dict[int, list[tuple[int, Fraction]]] = {}
    for (r, c), v in b.items():
        brows.setdefault(r, []).append((c, v))
    out: SparseMat = {}
    for (r, k), va in a.items():
        row = brows.get(k)
        if not row:
            continue
        for c, vb in row:
            key = (r, c)
            s = out.get(key, 0) + va * vb
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


def smat_commutator(a: SparseMat, b: SparseMat) -> SparseMat:
    return smat_sub(smat_mul(a, b), smat_mul(b, a))


def smat_eye(dim: int) -> SparseMat:
    return {(k, k): Fraction(1) for k in range(dim)}


def smat_is_zero(a: SparseMat) -> bool:
    return not smat_clean(a)


def smat_eq(a: SparseMat, b: SparseMat) -> bool:
    return smat_clean(a) == smat_clean(b)


def smat_apply(a: SparseMat, vec: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * len(vec)
    for (r, c), v in a.items():
        if vec[c]:
            out[r] += v * vec[c]
    return out


def smat_kron(a: SparseMat, b: SparseMat, dim_b: int) -> SparseMat:
    out: SparseMat = {}
    for (ra, ca), va in a.items():
        for (rb, cb), vb in b.items():
            out[(ra * dim_b + rb, ca * dim_b + cb)] = va * vb
    return out


# ---------------------------------------------------------------------------
# matrices of rational functions


class RationalFnMatrix:
    """Sparse square matrix over the field of rational functions in u."""

    __slots__ = ("dim", "entries")

    def __init__(self, dim: int, entries: Mapping[tuple[int, int], RationalFn] | None = None):
        self.dim = dim
        self.entries: dict[tuple[int, int], RationalFn] = {}
        if entries:
            for k, f in entries.items():
                if f:
                    self.entries[k] = f

    @staticmethod
    def identity(dim: int) -> RationalFnMatrix:
        return RationalFnMatrix(dim, {(k, k): RF_ONE for k in range(dim)})

    def entry(self, r: int, c: int) -> RationalFn:
        return self.entries.get((r, c), RF_ZERO)

    def is_diagonal(self) -> bool:
        return all(r == c for (r, c) in self.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalFnMatrix):
            return NotImplemented
        return self.dim == other.dim and self.entries == other.entries

    def __add__(self, other: RationalFnMatrix) -> RationalFnMatrix:
        out = dict(self.entries)
        for k, f in other.entries.items():
            s = out.get(k)
            s = f if s is None else s + f
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return RationalFnMatrix(self.dim, out)

    def __sub__(self, other: RationalFnMatrix) -> RationalFnMatrix:
        return self + other.scaled(-1)

    def scaled(self, c: Fraction | int) -> RationalFnMatrix:
        return RationalFnMatrix(self.dim, {k: f.scaled(c) for k, f in self.entries.items()})

    def mul_const_right(self, m: SparseMat) -> RationalFnMatrix:
        mrows: dict[int, list[tuple[int, Fraction]]] = {}
        for (r, c), v in m.items():
            mrows.setdefault(r, []).append((c, v))
        out: dict[tuple[int, int], RationalFn] = {}
        for (r, k), f in self.entries.items():
            for c, v in mrows.get(k, ()):  # noqa: B020 - tuple default
                key = (r, c)
                term = f.scaled(v)
                s = out.get(key)
                s = term if s is None else s + term
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return RationalFnMatrix(self.dim, out)

    def mul_const_left(self, m: SparseMat) -> RationalFnMatrix:
        rows: dict[int, list[tuple[int, RationalFn]]] = {}
        for (r, c), f in self.entries.items():
            rows.setdefault(r, []).append((c, f))
        out: dict[tuple[int, int], RationalFn] = {}
        for (r, k), v in m.items():
            for c, f in rows.get(k, ()):
                key = (r, c)
                term = f.scaled(v)
                s = out.get(key)
                s = term if s is None else s + term
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return RationalFnMatrix(self.dim, out)

    def apply_frac_vec(self, vec: list[Fraction]) -> list[RationalFn]:
        out: list[RationalFn] = [RF_ZERO] * self.dim
        for (r, c), f in self.entries.items():
            if vec[c]:
                out[r] = out[r] + f.scaled(vec[c])
        return out

    def pole_orders(self) -> dict[Fraction, int]:
        """Maximal pole order at each location, across all entries."""
        out: dict[Fraction, int] = {}
        for f in self.entries.values():
            for b, m in f.poles().items():
                if out.get(b, 0) < m:
                    out[b] = m
        return out

    def value_at_infinity(self) -> SparseMat:
        return smat_clean({k: f.value_at_infinity() for k, f in self.entries.items()})

    def expansion_matrices(self, nterms: int) -> list[SparseMat]:
        """Coefficient matrices of u^{-1}, ..., u^{-nterms} at infinity."""
        mats: list[SparseMat] = [{} for _ in range(nterms)]
        for k, f in self.entries.items():
            coeffs = f.series_at_infinity(nterms + 1)
            for t in range(nterms):
                c = coeffs[t + 1]
                if c:
                    mats[t][k] = c
        return mats

    def to_json(self) -> list:
        out = []
        for (r, c), f in sorted(self.entries.items()):
            out.append([r, c, f.text()])
        return out
