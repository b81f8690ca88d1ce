from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kreinscan._rational import to_fraction
from kreinscan.dispersion import (
    ComovingDispersion,
    DegenerateSignatureError,
    DispersionRelation,
    bifurcation_speed,
    comoving,
    eval_omega,
    floquet_eigenvalue,
    krein_signature,
)

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=12)
coeff_lists = st.lists(fractions, min_size=1, max_size=6).filter(lambda cs: cs[-1] != 0)

KDV = ComovingDispersion((-1, 1))  # Omega = -x + x**3


def test_eval_omega_examples():
    d = DispersionRelation((0, 1))
    assert eval_omega(d, 2) == 8
    assert eval_omega(d, 0) == 0
    assert eval_omega(d, Fraction(1, 2)) == Fraction(1, 8)


def test_float_path():
    d = DispersionRelation((1, -2, Fraction(1, 3)))
    assert d(1.5) == pytest.approx(float(d(Fraction(3, 2))), rel=1e-15)


def test_leading_coefficient_required():
    with pytest.raises(ValueError):
        DispersionRelation((1, 0))
    with pytest.raises(ValueError):
        DispersionRelation(())
    # a frame shift may cancel pure linear dispersion
    assert ComovingDispersion((0,))(3) == 0


def test_comoving_examples():
    assert comoving(DispersionRelation((0, 1)), -1).coeffs == (1, 1)
    assert comoving(DispersionRelation((0, 1)), 0).coeffs == (0, 1)
    assert comoving(DispersionRelation((2, 0, 1)), 2).coeffs == (0, 0, 1)


def test_lab_frame_roundtrip():
    d = DispersionRelation((Fraction(1, 3), -2, 5))
    assert comoving(d, Fraction(7, 4)).lab_frame() == d


def test_bifurcation_speed_examples():
    assert bifurcation_speed(DispersionRelation((0, 1)), 1) == 1
    assert bifurcation_speed(DispersionRelation((1,)), 7) == 1
    assert bifurcation_speed(DispersionRelation((0, 0, 1)), 2) == 16
    for bad in (0, -1, 1.0, True):
        with pytest.raises(ValueError):
            bifurcation_speed(DispersionRelation((0, 1)), bad)


def test_gkdv_sign_convention():
    # Omega = c k + alpha k**3 with c_k = -alpha k**2 is our Omega with c -> -c
    alpha, k = Fraction(3), 2
    d = DispersionRelation((0, alpha))
    c = bifurcation_speed(d, k)
    assert c == alpha * k**2
    alt_c = -alpha * k**2
    assert all(comoving(d, c)(x) == alt_c * x + alpha * x**3 for x in (Fraction(1, 3), 2, 5))


def test_floquet_eigenvalue():
    cd = comoving(DispersionRelation((0, 1)), 1)
    assert floquet_eigenvalue(cd, 1, 0).lambda_im == 0
    ev = floquet_eigenvalue(KDV, 2, 0)
    assert ev.x == 2 and ev.lambda_im == -6
    for bad in (-0.5, 0.6):
        with pytest.raises(ValueError):
            floquet_eigenvalue(KDV, 0, bad)


def test_krein_signature_examples():
    assert krein_signature(KDV, 2) == -1
    assert krein_signature(KDV, 0.5) == 1
    with pytest.raises(DegenerateSignatureError):
        krein_signature(KDV, 0)
    with pytest.raises(DegenerateSignatureError):
        krein_signature(KDV, 1)


@given(coeff_lists, fractions)
def test_oddness(coeffs, k):
    d = DispersionRelation(tuple(coeffs))
    assert d(-k) == -d(k)


@given(coeff_lists, st.integers(1, 10))
def test_bifurcation_consistency(coeffs, k):
    d = DispersionRelation(tuple(coeffs))
    assert comoving(d, bifurcation_speed(d, k))(k) == 0


@given(coeff_lists, st.fractions(min_value=-20, max_value=20, max_denominator=9))
def test_signature_even_and_spectrum_symmetric(coeffs, x):
    cd = ComovingDispersion(tuple(coeffs))
    assert -cd(x) == cd(-x)
    if x != 0 and cd(x) != 0:
        assert krein_signature(cd, x) == krein_signature(cd, -x)


def test_to_fraction():
    assert to_fraction(0.2) == Fraction(1, 5)
    assert to_fraction("3/4") == Fraction(3, 4)
    with pytest.raises(TypeError):
        to_fraction(True)
    with pytest.raises(ValueError):
        to_fraction(float("nan"))
