"""The recurrent polynomials ``s_m(gamma)``.

``s_0 = 2``, ``s_1 = 1`` and ``s_{m+1} = s_m + gamma * s_{m-1}``. They arise by
homogenizing ``t_m = a**m + (-b)**m = (a - b)**m * s_m(ab / (a - b)**2)``.
All coefficients are integers.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

from kreinscan._rational import is_exact

MAX_INDEX = 1000

_ladder: list[tuple[int, ...]] = [(2,), (1,)]
_ladder_lock = threading.Lock()


@dataclass(frozen=True)
class SPolynomial:
    m: int
    coeffs: tuple[int, ...]  # ascending powers of gamma

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, gamma):
        acc = 0 if is_exact(gamma) else 0.0
        for c in reversed(self.coeffs):
            acc = acc * gamma + c
        return acc


@dataclass(frozen=True)
class PsiPair:
    psi_plus: float
    psi_minus: float


def _check_index(m):
    if isinstance(m, bool) or not isinstance(m, int) or m < 0:
        raise ValueError(f"index m must be a non-negative integer, got {m!r}")
    if m > MAX_INDEX:
        raise ValueError(f"index m = {m} exceeds the supported maximum {MAX_INDEX}")


def _extend_ladder(m: int) -> None:
    with _ladder_lock:
        while len(_ladder) <= m:
            cur, prev = _ladder[-1], _ladder[-2]
            nxt = list(cur) + [0] * (len(prev) + 1 - len(cur))
            for i, c in enumerate(prev):
                nxt[i + 1] += c
            _ladder.append(tuple(nxt))


def s_poly(m: int) -> SPolynomial:
    """Exact coefficients of ``s_m``; memoized across calls."""
    _check_index(m)
    if m >= len(_ladder):
        _extend_ladder(m)
    return SPolynomial(m, _ladder[m])


def s_eval(m: int, gamma):
    """Evaluate ``s_m(gamma)`` by running the recurrence on values.

    Exact for ``int``/``Fraction`` input.
    """
    _check_index(m)
    if is_exact(gamma):
        gamma = Fraction(gamma)
        prev, cur = Fraction(2), Fraction(1)
    else:
        gamma = float(gamma)
        prev, cur = 2.0, 1.0
    if m == 0:
        return prev
    for _ in range(m - 1):
        prev, cur = cur, cur + gamma * prev
    return cur


def psi_pair(gamma) -> PsiPair:
    gamma = float(gamma)
    if gamma < -0.25:
        raise ValueError(f"psi+- are complex for gamma = {gamma} < -1/4")
    root = math.sqrt(1.0 + 4.0 * gamma)
    return PsiPair(0.5 * (1.0 + root), 0.5 * (1.0 - root))


def s_eval_closed(m: int, gamma) -> float:
    """``psi_plus**m + psi_minus**m``; refuses ``gamma < -1/4``."""
    _check_index(m)
    psi = psi_pair(gamma)
    return psi.psi_plus**m + psi.psi_minus**m


def t_value(a, b, m: int):
    """``a**m + (-b)**m``, the direct side of the homogenization identity."""
    _check_index(m)
    return a**m + (-b) ** m
