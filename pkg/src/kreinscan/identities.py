"""Exact-arithmetic sampling of the inequalities satisfied by ``s_m(gamma)``.

Each check walks a rational gamma grid with ``Fraction`` arithmetic and
collects every violation. A clean report means no counterexample was found
on the sampled points; it is not a proof. Each report also lists the
equality cases that must hold exactly, such as ``s_m(-1/4) = 2**(1-m)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

QUARTER = Fraction(-1, 4)
DEFAULT_M_MAX = 50


class LemmaId(enum.Enum):
    SLEMMA = "slemma"
    DOUBLING = "doubling"
    GAMLEMMA = "gamlemma"
    MONOTONE = "monotone"
    THETA_AND_G = "theta_and_g"


@dataclass
class LemmaReport:
    lemma_id: LemmaId
    domain_sampled: str
    checked: int = 0
    violations: list = field(default_factory=list)  # (label, params, lhs, rhs)
    equality_cases: list = field(default_factory=list)  # (label, attained)

    @property
    def passed(self) -> bool:
        return not self.violations and all(ok for _, ok in self.equality_cases)

    def summary(self) -> str:
        if self.passed:
            verdict = "no counterexample found"
        else:
            missed = sum(not ok for _, ok in self.equality_cases)
            verdict = f"{len(self.violations)} violations, {missed} equality cases missed"
        return f"{self.lemma_id.value}: {self.checked} checks on {self.domain_sampled}; {verdict}"


def default_gamma_grid() -> list[Fraction]:
    pts = {QUARTER + Fraction(i, 400) for i in range(401)}
    pts |= {Fraction(i, 100) for i in range(401)}
    return sorted(pts)


class _STable:
    """``s_0 .. s_size`` at each grid point, computed once per point."""

    def __init__(self, size: int):
        self.size = size
        self._rows: dict[Fraction, list[Fraction]] = {}

    def __call__(self, gamma: Fraction) -> list[Fraction]:
        row = self._rows.get(gamma)
        if row is None:
            row = [Fraction(2), Fraction(1)]
            for _ in range(self.size - 1):
                row.append(row[-1] + gamma * row[-2])
            self._rows[gamma] = row
        return row


_TABLES: dict[int, _STable] = {}


def _table(size: int) -> _STable:
    if size not in _TABLES:
        _TABLES[size] = _STable(size)
    return _TABLES[size]


def _grid(gamma_grid) -> list[Fraction]:
    if gamma_grid is None:
        return default_gamma_grid()
    pts = [Fraction(g) for g in gamma_grid]
    if any(g < QUARTER for g in pts):
        raise ValueError("gamma grid must lie in [-1/4, inf)")
    return pts


class _Recorder:
    def __init__(self, report: LemmaReport):
        self.report = report

    def check(self, label: str, ok: bool, params, lhs, rhs):
        self.report.checked += 1
        if not ok:
            self.report.violations.append((label, params, lhs, rhs))

    def equality(self, label: str, attained: bool):
        self.report.equality_cases.append((label, bool(attained)))


def _describe(pts: Sequence[Fraction], m_max: int) -> str:
    return f"{len(pts)} gamma points in [{min(pts)}, {max(pts)}], m <= {m_max}"


def check_slemma(m_max: int = DEFAULT_M_MAX, gamma_grid=None) -> LemmaReport:
    """Lower bound ``s_m >= 2**(1-m)`` and the position of ``s_m`` relative to 1."""
    pts = _grid(gamma_grid)
    rep = LemmaReport(LemmaId.SLEMMA, _describe(pts, m_max))
    r = _Recorder(rep)
    table = _table(m_max + 2)
    for g in pts:
        s = table(g)
        for m in range(m_max + 1):
            bound = Fraction(2) ** (1 - m)
            r.check("lower bound", s[m] >= bound, (m, g), s[m], bound)
            if m >= 2 and g < 0:
                r.check("below one", s[m] < 1, (m, g), s[m], 1)
            if m >= 2 and g > 0:
                r.check("above one", s[m] > 1, (m, g), s[m], 1)
    s_q = table(QUARTER)
    r.equality("s_m(-1/4) = 2**(1-m)", all(s_q[m] == Fraction(2) ** (1 - m) for m in range(m_max + 1)))
    r.equality("s_1 = 1", all(table(g)[1] == 1 for g in pts))
    return rep


def check_doubling(m_max: int = DEFAULT_M_MAX, gamma_grid=None) -> LemmaReport:
    """``s_{m+2} >= -gamma s_m``, ``s_{m+1} >= s_m/2`` and ``s_{m+1} <= [1 + m(1+4gamma)] s_m/2``."""
    pts = _grid(gamma_grid)
    rep = LemmaReport(LemmaId.DOUBLING, _describe(pts, m_max))
    r = _Recorder(rep)
    table = _table(m_max + 2)
    for g in pts:
        s = table(g)
        for m in range(m_max + 1):
            r.check("s_{m+2} >= -gamma s_m", s[m + 2] >= -g * s[m], (m, g), s[m + 2], -g * s[m])
            r.check("s_{m+1} >= s_m/2", s[m + 1] >= s[m] / 2, (m, g), s[m + 1], s[m] / 2)
            upper = (1 + m * (1 + 4 * g)) * s[m] / 2
            r.check("s_{m+1} <= upper", s[m + 1] <= upper, (m, g), s[m + 1], upper)
    r.equality("2 s_1 = s_0", all(2 * table(g)[1] == table(g)[0] for g in pts))
    s_q = table(QUARTER)
    r.equality(
        "gamma = -1/4: all three bounds tight",
        all(
            s_q[m + 1] == s_q[m] / 2 and s_q[m + 2] == s_q[m] / 4 and (1 + m * (1 + 4 * QUARTER)) * s_q[m] / 2 == s_q[m + 1]
            for m in range(m_max + 1)
        ),
    )
    return rep


def _gam_expr(s, g, m):
    return -g * (2**m - 1) * s[m - 1] + s[m + 1]


def check_gamlemma(m_max: int = DEFAULT_M_MAX, gamma_grid=None) -> LemmaReport:
    """``-gamma (2**m - 1) s_{m-1} + s_{m+1}`` is ``>= 1`` on [-1/4, 0] and ``<= 1`` for gamma >= 0."""
    pts = _grid(gamma_grid)
    rep = LemmaReport(LemmaId.GAMLEMMA, _describe(pts, m_max))
    r = _Recorder(rep)
    table = _table(m_max + 2)
    for g in pts:
        s = table(g)
        for m in range(2, m_max + 1):
            v = _gam_expr(s, g, m)
            if g <= 0:
                r.check(">= 1 on [-1/4, 0]", v >= 1, (m, g), v, 1)
            if g >= 0:
                r.check("<= 1 for gamma >= 0", v <= 1, (m, g), v, 1)
    r.equality("m = 2 gives exactly 1", all(_gam_expr(table(g), g, 2) == 1 for g in pts))
    r.equality("gamma = 0 gives exactly 1", all(_gam_expr(table(Fraction(0)), 0, m) == 1 for m in range(2, m_max + 1)))
    return rep


# (label, start m, domain, direction, term(s, m))
# direction +1: non-decreasing in m, -1: non-increasing
_SEQUENCES: list[tuple[str, int, Callable[[Fraction], bool], int, Callable]] = [
    ("decrease0", 1, lambda g: g <= 0, -1, lambda s, m: (2**m * s[m + 1] - 1) / (2**m - 1)),
    ("decrease4", 1, lambda g: True, +1, lambda s, m: (2**m * s[m + 1] - 1) / (m * (m + 1))),
    ("decrease2", 3, lambda g: g < 0, +1, lambda s, m: (s[m] - 1) / m),
    ("increase2 (i)", 1, lambda g: g < 0, +1, lambda s, m: (s[m + 1] - 1) / (Fraction(1, 2**m) - 1)),
    ("increase2 (ii)", 1, lambda g: g > 0, -1, lambda s, m: (s[m + 1] - 1) / (Fraction(1, 2**m) - 1)),
]


def check_monotone_sequences(m_max: int = DEFAULT_M_MAX, gamma_grid=None) -> LemmaReport:
    """Monotonicity in ``m`` of the four ratio sequences built from ``s_m``."""
    pts = _grid(gamma_grid)
    rep = LemmaReport(LemmaId.MONOTONE, _describe(pts, m_max))
    r = _Recorder(rep)
    table = _table(m_max + 2)
    for label, start, domain, direction, term in _SEQUENCES:
        for g in pts:
            if not domain(g):
                continue
            s = table(g)
            prev = term(s, start)
            for m in range(start + 1, m_max + 1):
                cur = term(s, m)
                ok = cur >= prev if direction > 0 else cur <= prev
                r.check(label, ok, (m, g), cur, prev)
                prev = cur
    # first step of decrease4 is an identity: 6 s_2 = 4 s_3 + 2
    r.equality("6 s_2 = 4 s_3 + 2", all(6 * table(g)[2] == 4 * table(g)[3] + 2 for g in pts))
    s0 = table(Fraction(0))
    r.equality("gamma = 0: decrease0 sequence is 1", all((2**m * s0[m + 1] - 1) / (2**m - 1) == 1 for m in range(1, m_max + 1)))
    r.equality("gamma = 0: s_m - 1 vanishes", all(s0[m] == 1 for m in range(1, m_max + 2)))
    # decrease2 base step is strict away from gamma = 0
    r.equality(
        "4 s_3 < 3 s_4 + 1 for gamma != 0",
        all(4 * table(g)[3] < 3 * table(g)[4] + 1 for g in pts if g != 0),
    )
    return rep


def g_func(x: Fraction, alpha: Fraction) -> Fraction:
    ax = alpha**x
    return x * ax / (ax - 1)


def f_func(n: Fraction, a: int, b: int) -> Fraction:
    if n == 1:
        return Fraction(a - b, a)
    return (n ** (a - b) - 1) / (n**a - 1)


def default_param_grid() -> dict:
    return {
        "alpha": [Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(3, 2), Fraction(2), Fraction(3), Fraction(5)],
        "x": list(range(1, 31)),
        "ab": [(a, b) for a in range(2, 13, 2) for b in range(2, a, 2)] + [(3, 1), (5, 2), (7, 3)],
        "n": [1 + Fraction(i, 8) for i in range(81)],
    }


def check_theta_and_g(param_grid: dict | None = None) -> LemmaReport:
    """``g(x) = x a**x / (a**x - 1)`` increasing in x; ``f_{a,b}(n)`` decreasing on [1, inf)."""
    grid = param_grid or default_param_grid()
    xs = sorted(grid["x"])
    ns = sorted(Fraction(n) for n in grid["n"])
    if xs[0] <= 0 or any(Fraction(a) <= 0 or a == 1 for a in grid["alpha"]):
        raise ValueError("need x > 0 and alpha > 0, alpha != 1")
    if ns[0] < 1 or any(not a > b > 0 for a, b in grid["ab"]):
        raise ValueError("need n >= 1 and a > b > 0")
    rep = LemmaReport(
        LemmaId.THETA_AND_G,
        f"{len(grid['alpha'])} alphas x {len(xs)} x-values; {len(grid['ab'])} (a, b) pairs x {len(ns)} n-values",
    )
    r = _Recorder(rep)
    for alpha in grid["alpha"]:
        alpha = Fraction(alpha)
        vals = [g_func(Fraction(x), alpha) for x in xs]
        for x, lo, hi in zip(xs[1:], vals, vals[1:]):
            r.check("g increasing", hi > lo, (alpha, x), hi, lo)
    for a, b in grid["ab"]:
        vals = [f_func(n, a, b) for n in ns]
        for n, lo, hi in zip(ns[1:], vals, vals[1:]):
            r.check("f decreasing", hi < lo, (a, b, n), hi, lo)
    r.equality("f_{4,2}(1) = 1/2", f_func(Fraction(1), 4, 2) == Fraction(1, 2))
    r.equality("f_{4,2}(2) = 1/5", f_func(Fraction(2), 4, 2) == Fraction(1, 5))
    r.equality("g(1) = 2 < g(2) = 8/3 at alpha = 2", g_func(Fraction(1), Fraction(2)) == 2 and g_func(Fraction(2), Fraction(2)) == Fraction(8, 3))
    return rep


def run_all(m_max: int = DEFAULT_M_MAX, gamma_grid: Iterable | None = None) -> list[LemmaReport]:
    pts = None if gamma_grid is None else list(gamma_grid)
    return [
        check_theta_and_g(),
        check_slemma(m_max, pts),
        check_doubling(m_max, pts),
        check_gamlemma(m_max, pts),
        check_monotone_sequences(m_max, pts),
    ]
