"""Odd-polynomial dispersion relations and the zero-amplitude Floquet spectrum.

Conventions used throughout the package:

* lab frame: ``omega(k) = sum_j alpha_j k**(2j+1)``
* traveling frame: ``Omega(k) = omega(k) - c k = sum_j eta_j k**(2j+1)``
  so ``eta_0 = alpha_0 - c`` and ``eta_j = alpha_j`` for ``j >= 1``
* spectrum: ``lambda = -i Omega(n + mu_tilde)``; only the imaginary part is stored
* Krein signature: ``kappa = -sign(Omega(x) / x)``

Coefficients are stored as :class:`fractions.Fraction`. Evaluation is exact for
``int``/``Fraction`` arguments and floating point otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from kreinscan._rational import is_exact, sign, to_fraction


class DegenerateSignatureError(ValueError):
    """Krein signature requested where it is undefined (x = 0 or Omega(x) = 0)."""


def _odd_eval(coeffs: Sequence[Fraction], k):
    # Horner in k**2, then one factor of k
    if is_exact(k):
        k2 = k * k
        acc = Fraction(0)
        for c in reversed(coeffs):
            acc = acc * k2 + c
        return acc * k
    k = float(k)
    k2 = k * k
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * k2 + float(c)
    return acc * k


def _coerce_coeffs(coeffs) -> tuple[Fraction, ...]:
    out = tuple(to_fraction(c) for c in coeffs)
    if not out:
        raise ValueError("at least one coefficient is required")
    return out


@dataclass(frozen=True)
class DispersionRelation:
    """Lab-frame dispersion ``omega(k) = sum_j coeffs[j] * k**(2j+1)``."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = _coerce_coeffs(self.coeffs)
        if coeffs[-1] == 0:
            raise ValueError("leading coefficient alpha_N must be nonzero")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def order(self) -> int:
        """N, so that the PDE has order 2N + 1."""
        return len(self.coeffs) - 1

    def __call__(self, k):
        return _odd_eval(self.coeffs, k)


@dataclass(frozen=True)
class ComovingDispersion:
    """Traveling-frame dispersion ``Omega(k) = sum_j coeffs[j] * k**(2j+1)``.

    ``speed`` is the frame velocity ``c`` that was subtracted from the lab
    frame. Trailing zero coefficients are allowed only when ``len(coeffs) == 1``
    (a shift that cancels linear dispersion entirely).
    """

    coeffs: tuple[Fraction, ...]
    speed: Fraction = Fraction(0)

    def __post_init__(self):
        coeffs = _coerce_coeffs(self.coeffs)
        if len(coeffs) > 1 and coeffs[-1] == 0:
            raise ValueError("leading coefficient eta_N must be nonzero")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "speed", to_fraction(self.speed))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, k):
        return _odd_eval(self.coeffs, k)

    def lab_frame(self) -> DispersionRelation:
        alphas = list(self.coeffs)
        alphas[0] += self.speed
        return DispersionRelation(tuple(alphas))


@dataclass(frozen=True)
class FloquetEigenvalue:
    """Zero-amplitude eigenvalue ``lambda = i * lambda_im`` at ``x = n + mu_tilde``."""

    n: int
    mu_tilde: float
    x: float
    lambda_im: float


def eval_omega(d: DispersionRelation | ComovingDispersion, k):
    return d(k)


def comoving(d: DispersionRelation, c) -> ComovingDispersion:
    """Shift ``d`` into the frame moving with speed ``c``."""
    c = to_fraction(c)
    etas = list(d.coeffs)
    etas[0] -= c
    return ComovingDispersion(tuple(etas), c)


def bifurcation_speed(d: DispersionRelation, k: int) -> Fraction:
    """Speed ``c_k = omega(k) / k`` at which a 2*pi/k-periodic branch bifurcates."""
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise ValueError(f"branch index k must be a positive integer, got {k!r}")
    return d(Fraction(k)) / k


def _check_mu_tilde(mu_tilde):
    if not (-0.5 < mu_tilde <= 0.5):
        raise ValueError(f"Floquet exponent must lie in (-1/2, 1/2], got {mu_tilde!r}")


def floquet_eigenvalue(cd: ComovingDispersion, n: int, mu_tilde) -> FloquetEigenvalue:
    _check_mu_tilde(mu_tilde)
    x = n + mu_tilde
    return FloquetEigenvalue(n=n, mu_tilde=mu_tilde, x=x, lambda_im=-cd(x))


def krein_signature(cd: ComovingDispersion, x) -> int:
    """Return ``-sign(Omega(x) / x)``.

    Raises :class:`DegenerateSignatureError` at ``x = 0`` or where
    ``Omega(x) = 0``; those eigenvalues sit at the origin of the spectral plane.
    """
    if x == 0:
        raise DegenerateSignatureError("Krein signature undefined at x = 0")
    value = cd(x)
    if value == 0:
        raise DegenerateSignatureError(f"Krein signature undefined: Omega({x}) = 0")
    return -sign(value) * sign(x)
