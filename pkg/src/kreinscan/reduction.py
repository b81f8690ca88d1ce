"""Reduced polynomial in gamma and classification of eigenvalue collisions.

Two zero-amplitude eigenvalues at ``mu`` and ``mu + dn`` collide when
``Omega(mu + dn) = Omega(mu)``. With ``gamma = mu (mu + dn) / dn**2`` the
difference is a polynomial of degree N in gamma alone::

    Omega(dn + mu) - Omega(mu) = sum_j eta_j dn**(2j+1) s_{2j+1}(gamma)

``gamma`` has the sign of ``mu (mu + dn)``, which is the product of the two
Krein signatures whenever the collision is away from the origin.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from kreinscan import rootfind, spoly
from kreinscan._rational import is_exact, sign
from kreinscan.dispersion import ComovingDispersion, krein_signature

QUARTER = Fraction(-1, 4)
DEFAULT_TOL = 1e-10
ROOT_TOL = 1e-14


class CollisionClass(enum.Enum):
    SAME_SIGNATURE = "same"
    OPPOSITE_SIGNATURE = "opposite"
    NO_REAL_COLLISION = "none"
    ORIGIN_COLLISION = "origin"
    DEGENERATE_BOUNDARY = "boundary"


@dataclass(frozen=True)
class ReducedPolynomial:
    dn: int
    coeffs: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def polynomial(self) -> rootfind.RationalPolynomial:
        return rootfind.RationalPolynomial(self.coeffs)

    def __call__(self, gamma):
        return self.polynomial(gamma)


@dataclass(frozen=True)
class CollisionRecord:
    """One real root of the reduced polynomial and what it means spectrally.

    ``mu_pair`` is ``(mu, mu + dn)`` using the larger solution of
    ``mu (mu + dn) = gamma dn**2``; the other solution gives the complex
    conjugate collision. ``candidate`` marks a necessary (not sufficient)
    precursor of a Hamiltonian-Hopf bifurcation.
    """

    dn: int
    gamma: Fraction | float
    klass: CollisionClass
    mu_pair: Optional[tuple] = None
    lambda_im: Optional[float | Fraction] = None
    krein_product: Optional[int] = None

    @property
    def candidate(self) -> bool:
        return self.klass is CollisionClass.OPPOSITE_SIGNATURE


def _check_dn(dn):
    if isinstance(dn, bool) or not isinstance(dn, int) or dn < 1:
        raise ValueError(f"dn must be a positive integer, got {dn!r}")


def build_reduced(cd: ComovingDispersion, dn: int) -> ReducedPolynomial:
    _check_dn(dn)
    size = cd.order + 1
    coeffs = [Fraction(0)] * size
    for j, eta in enumerate(cd.coeffs):
        if not eta:
            continue
        weight = eta * dn ** (2 * j + 1)
        for i, c in enumerate(spoly.s_poly(2 * j + 1).coeffs):
            coeffs[i] += weight * c
    return ReducedPolynomial(dn, tuple(coeffs))


def classify_gamma(gamma) -> CollisionClass:
    if gamma > 0:
        return CollisionClass.SAME_SIGNATURE
    if gamma == 0:
        return CollisionClass.ORIGIN_COLLISION
    if gamma > QUARTER:
        return CollisionClass.OPPOSITE_SIGNATURE
    if gamma == QUARTER:
        return CollisionClass.DEGENERATE_BOUNDARY
    return CollisionClass.NO_REAL_COLLISION


def _exact_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    rn, rd = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None


def recover_mu(gamma, dn: int) -> tuple:
    """Both real solutions of ``mu (mu + dn) = gamma dn**2``, larger first.

    Exact ``Fraction`` values are returned when ``1 + 4 gamma`` is a rational square.
    """
    _check_dn(dn)
    if gamma < QUARTER:
        raise ValueError(f"gamma = {gamma} < -1/4 gives complex mu")
    if is_exact(gamma):
        root = _exact_sqrt(1 + 4 * Fraction(gamma))
        if root is not None:
            half = Fraction(dn, 2)
            return half * (-1 + root), half * (-1 - root)
    root = math.sqrt(max(1.0 + 4.0 * float(gamma), 0.0))
    return 0.5 * dn * (-1.0 + root), 0.5 * dn * (-1.0 - root)


def _omega_scale(cd: ComovingDispersion, x: float) -> float:
    x = max(1.0, abs(x))
    return sum(abs(float(eta)) * x ** (2 * j + 1) for j, eta in enumerate(cd.coeffs))


def _record(cd: ComovingDispersion, dn: int, gamma, tol: float) -> CollisionRecord:
    klass = classify_gamma(gamma)
    if klass is CollisionClass.NO_REAL_COLLISION:
        return CollisionRecord(dn, gamma, klass)
    mu, _ = recover_mu(gamma, dn)
    pair = (mu, mu + dn)
    lam = -cd(mu)
    if is_exact(mu):
        at_origin = lam == 0
    else:
        at_origin = abs(lam) <= tol * (1.0 + _omega_scale(cd, abs(mu) + dn))
    if at_origin:
        return CollisionRecord(dn, gamma, CollisionClass.ORIGIN_COLLISION, pair, lam, None)
    return CollisionRecord(dn, gamma, klass, pair, lam, sign(gamma))


def collision_report(cd: ComovingDispersion, dn: int, tol: float = DEFAULT_TOL) -> list[CollisionRecord]:
    """One record per distinct real root of the reduced polynomial.

    Roots whose eigenvalue is zero to within ``tol`` (relative to the size of
    Omega near ``mu``) are reported as origin collisions whatever their gamma;
    in particular every ``gamma = -1/4`` root lands there, because a double
    ``mu = -dn/2`` together with oddness of Omega forces ``lambda = 0``.
    """
    reduced = build_reduced(cd, dn)
    poly = reduced.polynomial
    if poly.is_zero:
        raise rootfind.ZeroPolynomialError(f"reduced polynomial vanishes identically for dn = {dn}")
    return [_record(cd, dn, gamma, tol) for gamma in rootfind.real_roots(poly, ROOT_TOL)]


def hopf_candidates(cd: ComovingDispersion, dn_max: int, tol: float = DEFAULT_TOL) -> list[tuple[int, CollisionRecord]]:
    """Opposite-signature collisions away from the origin for ``dn = 1..dn_max``.

    An empty result means no zero-amplitude collision can seed a
    Hamiltonian-Hopf bifurcation in that range.
    """
    _check_dn(dn_max)
    found = []
    for dn in range(1, dn_max + 1):
        for rec in collision_report(cd, dn, tol):
            if rec.candidate:
                found.append((dn, rec))
    return found


def verify_signature_product(cd: ComovingDispersion, rec: CollisionRecord) -> bool:
    """Recompute the Krein product from the two signatures directly."""
    a, b = rec.mu_pair
    return krein_signature(cd, a) * krein_signature(cd, b) == rec.krein_product


__all__ = [
    "CollisionClass",
    "CollisionRecord",
    "ReducedPolynomial",
    "build_reduced",
    "classify_gamma",
    "collision_report",
    "hopf_candidates",
    "recover_mu",
    "verify_signature_product",
]
