"""Certified real-root isolation for univariate polynomials with rational coefficients.

Sturm chains are built on the square-free part, so sign-variation differences
count *distinct* real roots. Every count uses the half-open convention
``(lo, hi]``: zeros are dropped from the sign sequence, which makes a root that
sits exactly on ``lo`` invisible and one on ``hi`` counted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from kreinscan._rational import is_exact, sign, to_fraction


class ZeroPolynomialError(ValueError):
    pass


@dataclass(frozen=True)
class RationalPolynomial:
    """Polynomial with exact rational coefficients in ascending order.

    Trailing zeros are stripped; the zero polynomial has ``coeffs == ()``.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = [to_fraction(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def from_iterable(cls, coeffs: Iterable) -> "RationalPolynomial":
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if self.is_zero:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, x):
        if is_exact(x):
            acc = Fraction(0)
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        x = float(x)
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def derivative(self) -> "RationalPolynomial":
        return RationalPolynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def scale(self, factor) -> "RationalPolynomial":
        return RationalPolynomial(tuple(c * factor for c in self.coeffs))

    def monic(self) -> "RationalPolynomial":
        return self.scale(1 / self.leading)

    def divmod(self, other: "RationalPolynomial"):
        if other.is_zero:
            raise ZeroPolynomialError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.leading
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for shift in range(len(rem) - 1 - dq, -1, -1):
            factor = rem[shift + dq] / lead
            if factor:
                quot[shift] = factor
                for i, c in enumerate(other.coeffs):
                    rem[shift + i] -= factor * c
        return RationalPolynomial(tuple(quot)), RationalPolynomial(tuple(rem[:dq]))

    def __repr__(self):
        terms = [f"{c}*g^{i}" for i, c in enumerate(self.coeffs) if c]
        return "RationalPolynomial(" + (" + ".join(terms) or "0") + ")"


@dataclass(frozen=True)
class RootInterval:
    """Isolating interval ``(lo, hi]`` for one distinct real root, or ``lo == hi`` when exact."""

    lo: Fraction
    hi: Fraction
    multiplicity_hint: int = 1

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def exact_value(self) -> Fraction | None:
        return self.lo if self.is_exact else None


def as_polynomial(p) -> RationalPolynomial:
    if isinstance(p, RationalPolynomial):
        return p
    coeffs = getattr(p, "coeffs", p)
    return RationalPolynomial(tuple(coeffs))


def poly_gcd(a: RationalPolynomial, b: RationalPolynomial) -> RationalPolynomial:
    """Monic gcd (zero only if both inputs are zero)."""
    while not b.is_zero:
        a, b = b, a.divmod(b)[1]
    return a if a.is_zero else a.monic()


def square_free_part(p: RationalPolynomial) -> RationalPolynomial:
    if p.is_zero:
        raise ZeroPolynomialError("zero polynomial has no square-free part")
    if p.degree < 1:
        return p
    g = poly_gcd(p, p.derivative())
    return p.divmod(g)[0]


@lru_cache(maxsize=4096)
def _chain(p: RationalPolynomial) -> tuple[RationalPolynomial, ...]:
    q = square_free_part(p)
    chain = [q]
    if q.degree >= 1:
        chain.append(q.derivative())
        while True:
            rem = chain[-2].divmod(chain[-1])[1]
            if rem.is_zero:
                break
            chain.append(rem.scale(-1))
    return tuple(chain)


def sturm_chain(p) -> list[RationalPolynomial]:
    """Sturm sequence of the square-free part of ``p``."""
    p = as_polynomial(p)
    if p.is_zero:
        raise ZeroPolynomialError("Sturm chain of the zero polynomial")
    return list(_chain(p))


def _integer_rows(chain) -> list[list[int]]:
    rows = []
    for poly in chain:
        den = math.lcm(*(c.denominator for c in poly.coeffs))
        rows.append([int(c * den) for c in poly.coeffs])
    return rows


def _homogeneous_value(row: list[int], num: int, den: int) -> int:
    """``den**d * p(num/den)`` for integer coefficients ``row`` of degree ``d``."""
    acc = row[-1]
    dpow = 1
    for c in reversed(row[:-1]):
        dpow *= den
        acc = acc * num + c * dpow
    return acc


class _SturmCounter:
    def __init__(self, p: RationalPolynomial):
        self.chain = _chain(p)
        self.rows = _integer_rows(self.chain)
        self._cache: dict[Fraction, int] = {}

    def variations(self, x: Fraction) -> int:
        hit = self._cache.get(x)
        if hit is not None:
            return hit
        num, den = x.numerator, x.denominator
        count, last = 0, 0
        for row in self.rows:
            s = sign(_homogeneous_value(row, num, den))
            if s:
                if last and s != last:
                    count += 1
                last = s
        self._cache[x] = count
        return count

    def count(self, lo: Fraction, hi: Fraction) -> int:
        return self.variations(lo) - self.variations(hi)

    def sign_of_sqf(self, x: Fraction) -> int:
        return sign(_homogeneous_value(self.rows[0], x.numerator, x.denominator))


def _check_nonzero(p: RationalPolynomial):
    if p.is_zero:
        raise ZeroPolynomialError("root counting needs a nonzero polynomial")


def count_roots_in(p, lo, hi) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``."""
    p = as_polynomial(p)
    _check_nonzero(p)
    lo, hi = to_fraction(lo), to_fraction(hi)
    if not lo < hi:
        raise ValueError(f"need lo < hi, got ({lo}, {hi}]")
    if p.degree < 1:
        return 0
    return _SturmCounter(p).count(lo, hi)


def count_roots_open(p, lo, hi) -> int:
    """Number of distinct real roots of ``p`` in the open interval ``(lo, hi)``."""
    p = as_polynomial(p)
    n = count_roots_in(p, lo, hi)
    return n - (p(to_fraction(hi)) == 0)


def root_bound(p: RationalPolynomial) -> Fraction:
    """Power of two strictly above every |root| (Cauchy bound, rounded up)."""
    lead = abs(p.leading)
    bound = 1 + max((abs(c) / lead for c in p.coeffs[:-1]), default=Fraction(0))
    b = Fraction(1)
    while b <= bound:
        b *= 2
    return b


def count_real_roots(p) -> int:
    p = as_polynomial(p)
    _check_nonzero(p)
    if p.degree < 1:
        return 0
    b = root_bound(p)
    return count_roots_in(p, -b, b)


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """Rational with the smallest denominator in the closed interval ``[lo, hi]``."""
    if lo > hi:
        lo, hi = hi, lo
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -simplest_between(-hi, -lo)
    fl = math.floor(lo)
    if fl == lo or fl + 1 <= hi:
        return Fraction(fl if fl == lo else fl + 1)
    return fl + 1 / simplest_between(1 / (hi - fl), 1 / (lo - fl))


def _multiplicity(p: RationalPolynomial, iv_lo: Fraction, iv_hi: Fraction) -> int:
    mult = 1
    g = poly_gcd(p, p.derivative())
    while g.degree >= 1:
        if iv_lo == iv_hi:
            present = g(iv_lo) == 0
        else:
            present = count_roots_in(g, iv_lo, iv_hi) > 0
        if not present:
            break
        mult += 1
        g = poly_gcd(g, g.derivative())
    return mult


def isolate_and_refine(p, tol: float = 1e-12) -> list[tuple[RootInterval, float]]:
    """Isolate every distinct real root and bisect each bracket to width <= ``tol``.

    Brackets start from a dyadic Cauchy bound, so dyadic roots are met exactly.
    After refinement the simplest rational inside each bracket is tested with
    exact arithmetic; a hit is reported as a degenerate interval ``lo == hi``.
    Rational roots with denominator up to about ``tol**-0.5`` are always found
    this way.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    p = as_polynomial(p)
    _check_nonzero(p)
    if p.degree < 1:
        return []
    counter = _SturmCounter(p)
    q = counter.chain[0]
    dq = q.derivative()
    b = root_bound(q)

    brackets = []
    stack = [(-b, b, counter.count(-b, b))]
    while stack:
        lo, hi, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            brackets.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        left = counter.count(lo, mid)
        stack.append((lo, mid, left))
        stack.append((mid, hi, n - left))
    brackets.sort()

    ftol = to_fraction(tol)
    out = []
    for lo, hi in brackets:
        exact = None
        if counter.sign_of_sqf(hi) == 0:
            exact = hi
        else:
            s_lo = counter.sign_of_sqf(lo) or sign(dq(lo))
            while hi - lo > ftol:
                mid = (lo + hi) / 2
                s = counter.sign_of_sqf(mid)
                if s == 0:
                    exact = mid
                    break
                if s == s_lo:
                    lo = mid
                else:
                    hi = mid
            if exact is None:
                guess = simplest_between(lo, hi)
                if lo < guess and q(guess) == 0:
                    exact = guess
        if exact is not None:
            lo = hi = exact
            approx = float(exact)
        else:
            approx = float((lo + hi) / 2)
        mult = 1 if q.degree == p.degree else _multiplicity(p, lo, hi)
        out.append((RootInterval(lo, hi, mult), approx))
    return out


def real_roots(p, tol: float = 1e-12) -> list:
    """Root values only: ``Fraction`` where exact, ``float`` otherwise."""
    return [iv.exact_value if iv.is_exact else approx for iv, approx in isolate_and_refine(p, tol)]
