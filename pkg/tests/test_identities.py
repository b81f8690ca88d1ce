from fractions import Fraction

import pytest

from kreinscan import identities
from kreinscan.identities import (
    LemmaId,
    check_doubling,
    check_gamlemma,
    check_monotone_sequences,
    check_slemma,
    check_theta_and_g,
    default_gamma_grid,
    f_func,
    g_func,
)
from kreinscan.spoly import s_eval

SMALL = [Fraction(-1, 4) + Fraction(i, 40) for i in range(41)] + [Fraction(i, 10) for i in range(1, 31)]


def test_default_grid():
    grid = default_gamma_grid()
    assert grid[0] == Fraction(-1, 4) and grid[-1] == 4
    assert len(grid) == len(set(grid))
    # 401 + 401 points, 76 of which coincide on [0, 3/4]
    assert len(grid) == 726


def test_named_values():
    assert s_eval(3, Fraction(-1, 4)) == Fraction(1, 4)
    assert s_eval(5, Fraction(-1, 10)) == Fraction(55, 100)
    assert s_eval(2, Fraction(1, 100)) == Fraction(102, 100)
    assert s_eval(4, 1) == 7 and s_eval(3, 1) == 4
    g = Fraction(-1, 5)
    assert -g * 7 * s_eval(2, g) + s_eval(4, g) == Fraction(112, 100) == 1 - 3 * g * (1 + 4 * g)
    g = Fraction(-1, 10)
    assert 4 * s_eval(3, g) == Fraction(28, 10) and 3 * s_eval(4, g) + 1 == Fraction(286, 100)
    assert f_func(Fraction(1), 4, 2) == Fraction(1, 2)
    assert f_func(Fraction(2), 4, 2) == Fraction(1, 5)
    assert g_func(Fraction(1), Fraction(2)) == 2 and g_func(Fraction(2), Fraction(2)) == Fraction(8, 3)


@pytest.mark.parametrize(
    "check", [check_slemma, check_doubling, check_gamlemma, check_monotone_sequences]
)
def test_checks_pass_small_grid(check):
    rep = check(20, SMALL)
    assert rep.passed, (rep.violations[:3], rep.equality_cases)
    assert rep.checked > 0
    assert "no counterexample found" in rep.summary()


def test_theta_and_g():
    rep = check_theta_and_g()
    assert rep.lemma_id is LemmaId.THETA_AND_G
    assert rep.passed


def test_grid_domain_enforced():
    with pytest.raises(ValueError):
        check_slemma(5, [Fraction(-1, 2)])
    with pytest.raises(ValueError):
        check_theta_and_g({"alpha": [1], "x": [1, 2], "ab": [(2, 1)], "n": [1, 2]})


def test_violation_is_reported(monkeypatch):
    # a sequence that is not monotone must be flagged with its parameters
    bad = [("bogus", 1, lambda g: True, +1, lambda s, m: -m)]
    monkeypatch.setattr(identities, "_SEQUENCES", bad)
    rep = check_monotone_sequences(4, [Fraction(0)])
    assert not rep.passed
    label, params, lhs, rhs = rep.violations[0]
    assert label == "bogus" and params == (2, 0) and lhs == -2 and rhs == -1
    assert "violations" in rep.summary()


def test_equality_case_missing_fails_report():
    rep = check_gamlemma(10, SMALL)
    rep.equality_cases.append(("synthetic", False))
    assert not rep.passed
