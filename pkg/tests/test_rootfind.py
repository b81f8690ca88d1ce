import random
from fractions import Fraction

import pytest
import sympy as sp

from kreinscan.rootfind import (
    RationalPolynomial,
    ZeroPolynomialError,
    count_real_roots,
    count_roots_in,
    count_roots_open,
    isolate_and_refine,
    real_roots,
    root_bound,
    simplest_between,
    square_free_part,
    sturm_chain,
)

P = RationalPolynomial


def test_chain_examples():
    assert sturm_chain(P((6, 24))) == [P((6, 24)), P((24,))]
    assert count_real_roots(P((1, 5, 5))) == 2
    assert count_real_roots(P((1, 2, 1))) == 1
    with pytest.raises(ZeroPolynomialError):
        sturm_chain(P(()))


def test_count_examples():
    assert count_roots_in(P((1, 5, 5)), Fraction(-1, 4), 0) == 0
    assert count_roots_in(P((6, 24)), Fraction(-1, 2), 0) == 1
    p = P((-2, 0, 1))
    b = root_bound(p)
    assert count_roots_in(p, b, b + 10) == 0
    with pytest.raises(ValueError):
        count_roots_in(p, 1, 1)


def test_half_open_convention():
    p = P((6, 24))  # root at -1/4
    assert count_roots_in(p, Fraction(-1, 4), 0) == 0
    assert count_roots_in(p, -1, Fraction(-1, 4)) == 1
    assert count_roots_open(p, -1, Fraction(-1, 4)) == 0


def test_isolate_examples():
    [(iv, approx)] = isolate_and_refine(P((6, 24)), 1e-12)
    assert iv.is_exact and iv.exact_value == Fraction(-1, 4)
    roots = real_roots(P((1, 5, 5)), 1e-10)
    assert roots == pytest.approx([-0.7236067977499789, -0.2763932022500210], abs=1e-10)
    assert isolate_and_refine(P((3,)), 1e-10) == []
    with pytest.raises(ValueError):
        isolate_and_refine(P((1, 1)), 0)


def test_multiplicity():
    [(iv, _)] = isolate_and_refine(P((1, 2, 1)))
    assert iv.exact_value == -1 and iv.multiplicity_hint == 2
    p = P(tuple(sp.Poly(sp.expand((sp.Symbol("x") - 2) ** 3 * (sp.Symbol("x") + 1)), sp.Symbol("x")).all_coeffs()[::-1]))
    hints = {iv.exact_value: iv.multiplicity_hint for iv, _ in isolate_and_refine(p)}
    assert hints == {-1: 1, 2: 3}


def test_square_free():
    x = sp.Symbol("x")
    coeffs = [Fraction(int(c)) for c in sp.Poly(sp.expand((x**2 - 2) ** 2 * (x - 1)), x).all_coeffs()[::-1]]
    q = square_free_part(P(tuple(coeffs)))
    assert q.degree == 3


def test_simplest_between():
    assert simplest_between(Fraction(1, 3), Fraction(1, 2)) == Fraction(1, 2)
    assert simplest_between(Fraction(-7, 10), Fraction(-6, 10)) == Fraction(-2, 3)
    assert simplest_between(Fraction(-1), Fraction(1)) == 0
    assert simplest_between(Fraction(31, 10), Fraction(32, 10)) == Fraction(16, 5)


def _random_case(rng):
    # known rational roots, an irreducible quadratic factor sometimes, and maybe a repeat
    x = sp.Symbol("x")
    roots = [Fraction(rng.randint(-40, 40), rng.randint(1, 9)) for _ in range(rng.randint(0, 5))]
    expr = sp.Integer(rng.choice([1, -2, 3]))
    for r in roots:
        expr *= x - sp.Rational(r.numerator, r.denominator)
    if rng.random() < 0.5:
        expr *= x**2 - rng.choice([2, 3, 5, 7])  # two irrational real roots
    if rng.random() < 0.4:
        expr *= x**2 + rng.randint(1, 5)  # no real roots
    if roots and rng.random() < 0.3:
        r = roots[0]
        expr *= x - sp.Rational(r.numerator, r.denominator)
    poly = sp.Poly(sp.expand(expr), x)
    if poly.degree() > 8 or poly.degree() < 1:
        return None
    coeffs = tuple(Fraction(int(c.p), int(c.q)) for c in poly.all_coeffs()[::-1])
    return P(coeffs), sorted(float(r) for r in sp.real_roots(poly)), set(roots)


def test_completeness_against_sympy():
    rng = random.Random(3)
    done = 0
    while done < 300:
        case = _random_case(rng)
        if case is None:
            continue
        p, expected, rational = case
        expected = sorted(set(round(r, 12) for r in expected))
        got = real_roots(p, 1e-12)
        assert len(got) == len(expected), (p, got, expected)
        assert all(abs(float(g) - e) <= 1e-10 for g, e in zip(got, expected)), (p, got, expected)
        # exact rational roots must come back as Fractions
        for g in got:
            if isinstance(g, Fraction):
                assert p(g) == 0
        assert rational <= {g for g in got if isinstance(g, Fraction)}
        done += 1


def test_count_additivity():
    rng = random.Random(11)
    for _ in range(50):
        case = _random_case(rng)
        if case is None:
            continue
        p = case[0]
        ivs = [iv for iv, _ in isolate_and_refine(p, 1e-6)]
        b = root_bound(p)
        total = 0
        for iv in ivs:
            lo, hi = (iv.lo - Fraction(1, 10**9), iv.hi) if iv.is_exact else (iv.lo, iv.hi)
            total += count_roots_in(p, lo, hi)
        assert total == count_roots_in(p, -b, b) == len(ivs)
