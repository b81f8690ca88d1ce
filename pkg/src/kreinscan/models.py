"""Closed-form model families and their collision classifiers.

Each adapter returns a :class:`ComovingDispersion` in the package's canonical
``Omega = omega - c k`` convention, moved to the bifurcation speed of the
requested branch so that ``Omega(k) = 0`` exactly.

gKdV (``v_t + alpha v_xxx + f(v)_x = 0``) is usually written in its traveling
frame as ``Omega = c k + alpha k**3`` with ``c_k = -alpha k**2``. That is the
same polynomial as ours with the speed sign flipped: canonically
``omega = alpha k**3`` and ``c_k = omega(k)/k = alpha k**2``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from kreinscan._rational import to_fraction
from kreinscan.dispersion import (
    ComovingDispersion,
    DispersionRelation,
    bifurcation_speed,
    comoving,
)
from kreinscan.reduction import QUARTER, CollisionClass, collision_report
from kreinscan.spoly import s_poly


class Regime(enum.Enum):
    SAME_SIGNATURE_COLLISION = "same"
    OPPOSITE_SIGNATURE_COLLISION = "opposite"
    NO_COLLISION = "none"
    AT_THRESHOLD = "threshold"


class ClassificationMismatch(AssertionError):
    """Threshold classification disagreed with the root-based classification."""


def _positive_int(name, value):
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value!r}")
    return value


# ---------------------------------------------------------------- gKdV family


@dataclass(frozen=True)
class GkdvModel:
    alpha: Fraction = Fraction(1)
    k: int = 1

    def __post_init__(self):
        object.__setattr__(self, "alpha", to_fraction(self.alpha))
        if self.alpha == 0:
            raise ValueError("alpha must be nonzero")
        _positive_int("k", self.k)

    @property
    def signed_speed(self) -> Fraction:
        """Speed in the ``Omega = c k + alpha k**3`` convention (``-alpha k**2``)."""
        return -self.alpha * self.k**2

    def dispersion(self) -> ComovingDispersion:
        return gkdv_dispersion(self.alpha, self.k)


@dataclass(frozen=True)
class HigherGkdvModel:
    p: int = 2
    alpha: Fraction = Fraction(1)
    k: int = 1

    def __post_init__(self):
        _positive_int("p", self.p)
        _positive_int("k", self.k)
        object.__setattr__(self, "alpha", to_fraction(self.alpha))
        if self.alpha == 0:
            raise ValueError("alpha must be nonzero")

    def dispersion(self) -> ComovingDispersion:
        return hokdv_dispersion(self.p, self.alpha, self.k)


def gkdv_dispersion(alpha=1, k: int = 1) -> ComovingDispersion:
    return hokdv_dispersion(1, alpha, k)


def hokdv_dispersion(p: int, alpha=1, k: int = 1) -> ComovingDispersion:
    """``omega = alpha k**(2p+1)`` moved to the branch-``k`` speed ``alpha k**(2p)``.

    The overall sign of the dispersive term only conjugates the spectrum, so
    the ``(-1)**(p+1)`` factor of the PDE is absorbed into ``alpha``.
    """
    _positive_int("p", p)
    _positive_int("k", k)
    alpha = to_fraction(alpha)
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    coeffs = [Fraction(0)] * p + [alpha]
    d = DispersionRelation(tuple(coeffs))
    return comoving(d, bifurcation_speed(d, k))


def gkdv_gamma(k: int, dn: int) -> Fraction:
    """Single collision root ``gamma = (k**2/dn**2 - 1)/3`` on the gKdV branch ``k``."""
    _positive_int("k", k)
    _positive_int("dn", dn)
    return (Fraction(k * k, dn * dn) - 1) / 3


def gkdv_band(k: int) -> set[int]:
    """Gaps ``dn`` with an opposite-signature collision away from the origin: ``k < dn < 2k``."""
    _positive_int("k", k)
    return set(range(k + 1, 2 * k))


def hokdv_band(p: int, k: int) -> set[int]:
    # s_{2p+1} increases from 2**-2p to 1 on (-1/4, 0), so the band does not depend on p
    _positive_int("p", p)
    return gkdv_band(k)


def gammap_polynomial(p: int, k: int, dn: int) -> tuple[Fraction, ...]:
    """Coefficients of ``-k**(2p) + dn**(2p) s_{2p+1}(gamma)``."""
    coeffs = [Fraction(dn ** (2 * p) * c) for c in s_poly(2 * p + 1).coeffs]
    coeffs[0] -= k ** (2 * p)
    return tuple(coeffs)


# ------------------------------------------------------------ balanced family


@dataclass(frozen=True)
class BalancedModel:
    """``Omega = -c k - k**(2q+1) + beta k**(2p+1)`` with ``c = beta - 1`` (branch k = 1)."""

    p: int
    q: int
    beta: Fraction

    def __post_init__(self):
        _positive_int("p", self.p)
        _positive_int("q", self.q)
        if not self.p > self.q:
            raise ValueError(f"need p > q, got p={self.p}, q={self.q}")
        beta = to_fraction(self.beta)
        if beta <= 0:
            raise ValueError("beta must be positive; definite energy rules out opposite-signature collisions")
        object.__setattr__(self, "beta", beta)

    @property
    def speed(self) -> Fraction:
        return self.beta - 1

    def dispersion(self) -> ComovingDispersion:
        return balanced_dispersion(self)


@dataclass(frozen=True)
class RegimeThresholds:
    dn: int
    beta0: Fraction
    beta_quarter: Fraction


def balanced_dispersion(model: BalancedModel) -> ComovingDispersion:
    alphas = [Fraction(0)] * (model.p + 1)
    alphas[model.q] = Fraction(-1)
    alphas[model.p] = model.beta
    d = DispersionRelation(tuple(alphas))
    return comoving(d, bifurcation_speed(d, 1))


def balanced_thresholds(p: int, q: int, dn: int) -> RegimeThresholds:
    """beta values where a reduced-polynomial root crosses gamma = 0 and gamma = -1/4."""
    _positive_int("q", q)
    _positive_int("dn", dn)
    if not p > q:
        raise ValueError(f"need p > q, got p={p}, q={q}")
    if dn == 1:
        beta0 = Fraction(2 * q + 1, 2 * p + 1)
        betaq = (1 - Fraction(1, 2 ** (2 * q))) / (1 - Fraction(1, 2 ** (2 * p)))
    elif dn == 2:
        beta0 = Fraction(2 ** (2 * q) - 1, 2 ** (2 * p) - 1)
        # gamma = -1/4 is a root for every beta; threshold comes from the slope there
        betaq = Fraction(2 * q * (2 * q + 1), 2 * p * (2 * p + 1))
    else:
        beta0 = Fraction(dn ** (2 * q) - 1, dn ** (2 * p) - 1)
        half = Fraction(dn, 2)
        betaq = (half ** (2 * q) - 1) / (half ** (2 * p) - 1)
    return RegimeThresholds(dn, beta0, betaq)


def balanced_classify(model: BalancedModel, dn: int) -> Regime:
    """Regime of the ``dn`` gap from the beta thresholds alone.

    The upper window edge is closed for ``dn >= 3`` and open for ``dn`` in
    {1, 2}, as in the corresponding theorems.
    """
    th = balanced_thresholds(model.p, model.q, dn)
    beta = model.beta
    if beta == th.beta0:
        return Regime.AT_THRESHOLD
    if beta < th.beta0:
        return Regime.SAME_SIGNATURE_COLLISION
    inside = beta <= th.beta_quarter if dn >= 3 else beta < th.beta_quarter
    return Regime.OPPOSITE_SIGNATURE_COLLISION if inside else Regime.NO_COLLISION


def _spectral_regime(records) -> Regime:
    classes = {rec.klass for rec in records}
    if CollisionClass.OPPOSITE_SIGNATURE in classes:
        return Regime.OPPOSITE_SIGNATURE_COLLISION
    if CollisionClass.SAME_SIGNATURE in classes:
        return Regime.SAME_SIGNATURE_COLLISION
    return Regime.NO_COLLISION


def _gamma_regime(records) -> Regime:
    regime = Regime.NO_COLLISION
    for rec in records:
        g = rec.gamma
        if g == 0 or g == QUARTER:
            continue
        if QUARTER < g < 0:
            return Regime.OPPOSITE_SIGNATURE_COLLISION
        if g > 0:
            regime = Regime.SAME_SIGNATURE_COLLISION
    return regime


def regime_from_roots(cd: ComovingDispersion, dn: int, tol: float = 1e-10) -> Regime:
    """Regime read off the collision records, eigenvalue-aware.

    Any root whose eigenvalue is zero (origin or boundary class) is ignored,
    including roots in (-1/4, 0) that only collide at lambda = 0.
    """
    return _spectral_regime(collision_report(cd, dn, tol))


def regime_from_gamma(cd: ComovingDispersion, dn: int) -> Regime:
    """Regime from where the real roots of ``R`` lie, gamma alone.

    This is the statement the threshold theorems make. The symmetry roots
    ``gamma = 0`` and ``gamma = -1/4`` are dropped; everything else counts by
    interval, whatever its eigenvalue.
    """
    return _gamma_regime(collision_report(cd, dn))


def resonant_modes(model: BalancedModel) -> list[int]:
    """Integers ``m >= 2`` with ``Omega(m) = 0``, i.e. ``beta == beta0(m)``.

    At such beta a second Fourier mode bifurcates at the same speed, so the
    branch is not unique and some collisions the thresholds predict sit at
    lambda = 0. ``beta0(m)`` decreases in ``m``, which bounds the search.
    """
    out = []
    m = 2
    while True:
        beta0 = balanced_thresholds(model.p, model.q, m).beta0
        if beta0 < model.beta:
            return out
        if beta0 == model.beta:
            out.append(m)
        m += 1


@dataclass(frozen=True)
class SweepCell:
    dn: int
    beta: Fraction
    regime: Regime
    root_regime: Regime
    endpoint: bool
    resonant: bool = False
    spectral_regime: Regime | None = None

    @property
    def agrees(self) -> bool:
        return self.endpoint or self.regime is self.root_regime

    @property
    def origin_shifted(self) -> bool:
        """The gamma picture predicts a collision that actually sits at lambda = 0."""
        return self.spectral_regime is not None and self.spectral_regime is not self.root_regime


def region_sweep(p: int, q: int, beta_grid: Iterable, dn_max: int, check: bool = True) -> list[SweepCell]:
    """Classify every ``(dn, beta)`` cell from the thresholds and from the roots of ``R``.

    ``endpoint`` cells, where beta sits exactly on a threshold of that ``dn``,
    are not compared. Every other cell must agree, or
    :class:`ClassificationMismatch` is raised when ``check`` is set.

    Each cell also records the eigenvalue-aware regime. It differs from the
    gamma regime only at ``resonant`` beta, where ``Omega(m) = 0`` for a second
    integer ``m`` and the predicted collision lands on the origin.
    """
    _positive_int("dn_max", dn_max)
    betas = [to_fraction(b) for b in beta_grid]
    models = [BalancedModel(p, q, beta) for beta in betas]
    resonant = [bool(resonant_modes(m)) for m in models]
    dispersions = [balanced_dispersion(m) for m in models]
    cells = []
    for dn in range(1, dn_max + 1):
        th = balanced_thresholds(p, q, dn)
        for model, cd, res in zip(models, dispersions, resonant):
            regime = balanced_classify(model, dn)
            endpoint = model.beta in (th.beta0, th.beta_quarter)
            records = collision_report(cd, dn)
            cell = SweepCell(
                dn, model.beta, regime, _gamma_regime(records), endpoint, res, _spectral_regime(records)
            )
            if check and not cell.agrees:
                raise ClassificationMismatch(
                    f"p={p} q={q} dn={dn} beta={model.beta}: thresholds say {regime.value}, "
                    f"roots say {cell.root_regime.value}"
                )
            cells.append(cell)
    return cells
