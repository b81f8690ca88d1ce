"""Brute-force checks that do not go through the reduced polynomial.

Everything here works directly on ``Omega(n + mu_tilde)``: spectrum slices,
a grid-and-bisection search for colliding eigenvalues, exact spot checks of
the reduction identity, and the KdV subharmonic relation between the k = 2
and k = 1 spectra.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np
from numpy.polynomial import polynomial as npoly

from kreinscan.dispersion import ComovingDispersion
from kreinscan.reduction import build_reduced
from kreinscan.rootfind import real_roots

DEFAULT_WINDOW = 30
DEFAULT_RESOLUTION = 10_000


def _power_coeffs(cd: ComovingDispersion) -> np.ndarray:
    c = np.zeros(2 * len(cd.coeffs))
    c[1::2] = [float(eta) for eta in cd.coeffs]
    return c


@dataclass(frozen=True)
class SpectrumSlice:
    mu_tilde: float
    entries: tuple[tuple[int, float], ...]

    @property
    def values(self) -> np.ndarray:
        return np.array([lam for _, lam in self.entries])


@dataclass(frozen=True)
class BruteCollision:
    mu_tilde: float
    n1: int
    n2: int
    lambda_im: float
    kappa1: int
    kappa2: int
    matched_gamma: float

    @property
    def dn(self) -> int:
        return self.n1 - self.n2

    @property
    def mu(self) -> float:
        return self.n2 + self.mu_tilde


def spectrum_slice(cd: ComovingDispersion, mu_tilde: float, n_window: Iterable[int]) -> SpectrumSlice:
    """``lambda_im = -Omega(n + mu_tilde)`` for each ``n`` in the window, sorted by ``n``."""
    ns = sorted(int(n) for n in n_window)
    if not ns:
        return SpectrumSlice(float(mu_tilde), ())
    xs = np.asarray(ns, dtype=float) + float(mu_tilde)
    lam = -npoly.polyval(xs, _power_coeffs(cd))
    return SpectrumSlice(float(mu_tilde), tuple(zip(ns, lam.tolist())))


def window(n_max: int) -> range:
    return range(-n_max, n_max + 1)


def _bisect(f, a: float, b: float, fa: float) -> float:
    # run to float resolution; the midpoint stops moving once a and b are adjacent
    for _ in range(200):
        m = 0.5 * (a + b)
        if m == a or m == b:
            break
        fm = f(m)
        if fm == 0.0:
            return m
        if (fm > 0) == (fa > 0):
            a, fa = m, fm
        else:
            b = m
    return 0.5 * (a + b)


def brute_collisions(
    cd: ComovingDispersion,
    n_window: Iterable[int] = window(DEFAULT_WINDOW),
    mu_grid_resolution: int = DEFAULT_RESOLUTION,
    tol: float = 1e-8,
) -> list[BruteCollision]:
    """Scan ``mu_tilde`` in (-1/2, 1/2] for ``Omega(n1 + mu_tilde) = Omega(n2 + mu_tilde)``.

    Every pair ``n1 > n2`` in the window is scanned for sign changes on a
    uniform grid, each bracket is bisected to float resolution, and
    collisions with ``|lambda| <= tol`` (the origin) are dropped. Tangential
    zeros that never change sign inside a grid cell are missed.
    """
    if mu_grid_resolution < 1000:
        raise ValueError("mu_grid_resolution must be at least 1000")
    ns = np.array(sorted({int(n) for n in n_window}))
    coeffs = _power_coeffs(cd)
    grid = -0.5 + np.arange(mu_grid_resolution + 1) / mu_grid_resolution
    vals = npoly.polyval(ns[:, None] + grid[None, :], coeffs)
    omega = lambda x: npoly.polyval(x, coeffs)

    found = []
    for i1 in range(1, len(ns)):
        diff = vals[i1][None, :] - vals[:i1]
        s = np.sign(diff)
        crossing = s[:, :-1] * s[:, 1:] < 0
        # exact grid zeros; the left end -1/2 is the same point as +1/2 of a shifted pair
        zero = s[:, 1:] == 0
        rows, cols = np.nonzero(crossing | zero)
        n1 = int(ns[i1])
        for i2, j in zip(rows.tolist(), cols.tolist()):
            n2 = int(ns[i2])
            f = lambda mt, n1=n1, n2=n2: omega(n1 + mt) - omega(n2 + mt)
            if zero[i2, j]:
                mt = float(grid[j + 1])
            else:
                mt = _bisect(f, float(grid[j]), float(grid[j + 1]), float(diff[i2, j]))
            if not -0.5 < mt <= 0.5:
                continue
            x1, x2 = n1 + mt, n2 + mt
            lam = -float(omega(x1))
            if abs(lam) <= tol:
                continue
            k1 = -int(np.sign(omega(x1) / x1))
            k2 = -int(np.sign(omega(x2) / x2))
            found.append(BruteCollision(mt, n1, n2, lam, k1, k2, x1 * x2 / (n1 - n2) ** 2))
    return found


def mu_is_covered(mu: float, dn: int, n_window: Iterable[int]) -> bool:
    """Whether the collision at ``(mu, mu + dn)`` lies inside the scanned window."""
    ns = set(int(n) for n in n_window)
    n2 = int(np.ceil(mu - 0.5))  # mu - n2 lies in (-1/2, 1/2]
    return n2 in ns and n2 + dn in ns


@dataclass
class ReductionCheck:
    dn: int
    checked: int = 0
    counterexample: Optional[tuple] = None  # (mu, lhs, rhs)

    @property
    def ok(self) -> bool:
        return self.counterexample is None


def verify_reduction(cd: ComovingDispersion, dn: int, mu_samples: Sequence) -> ReductionCheck:
    """Exact check of ``Omega(dn + mu) - Omega(mu) == R(gamma(mu))``; stops at the first failure."""
    reduced = build_reduced(cd, dn)
    report = ReductionCheck(dn)
    for mu in mu_samples:
        mu = Fraction(mu)
        lhs = cd(dn + mu) - cd(mu)
        rhs = reduced(mu * (dn + mu) / dn**2)
        report.checked += 1
        if lhs != rhs:
            report.counterexample = (mu, lhs, rhs)
            break
    return report


def kdv_lambda_im(x, k: int):
    """Imaginary part of the KdV zero-amplitude eigenvalue, ``-(k**2 x - x**3)``, on branch ``k``."""
    x = np.asarray(x, dtype=float)
    return -(k * k * x - x**3)


def _multiset_contains(big: np.ndarray, small: np.ndarray, tol: float) -> bool:
    pool = sorted(big.tolist())
    for v in sorted(small.tolist()):
        if not pool:
            return False
        idx = int(np.argmin([abs(v - w) for w in pool]))
        if abs(pool[idx] - v) > tol:
            return False
        pool.pop(idx)
    return True


@dataclass
class SubharmonicResult:
    mu_tilde: float
    ok: bool
    scaled: np.ndarray = field(repr=False)
    union: np.ndarray = field(repr=False)


def _subharmonic(k: int, mu_tilde: float, n_max: int, tol: float, edge: int) -> SubharmonicResult:
    # branch-k slice scaled by 1/k**3 against the union of k branch-1 slices
    ns = np.arange(-n_max, n_max + 1)
    scaled = kdv_lambda_im(ns + mu_tilde, k) / k**3
    inner = np.abs(ns) <= n_max - edge

    parts, owners = [], []
    for j in range(k):
        shift = (mu_tilde + j) / k
        ys = ns + shift
        parts.append(kdv_lambda_im(ys, 1))
        owners.append(np.rint(k * ys - mu_tilde).astype(int))  # matching branch-k index
    union = np.concatenate(parts)
    owner = np.concatenate(owners)
    union_inner = np.abs(owner) <= n_max - edge
    in_window = np.abs(owner) <= n_max

    ok = _multiset_contains(union[in_window], scaled[inner], tol) and _multiset_contains(
        scaled, union[union_inner], tol
    )
    return SubharmonicResult(mu_tilde, ok, scaled, union)


def kdv_subharmonic_check(mu_tilde: float, n_max: int = 20, tol: float = 1e-10, edge: int = 2) -> bool:
    """``sigma_mu(k=2) / 8`` equals ``sigma_{mu/2}(k=1) U sigma_{mu/2+1/2}(k=1)`` as multisets.

    Both sides are truncated to ``|n| <= n_max``; elements within ``edge``
    indices of the truncation are only required on the side that keeps them.
    """
    if not -0.5 < mu_tilde <= 0.5:
        raise ValueError("mu_tilde must lie in (-1/2, 1/2]")
    return _subharmonic(2, mu_tilde, n_max, tol, edge).ok


def kdv_subharmonic_check_general(k: int, mu_tilde: float, n_max: int = 20, tol: float = 1e-10, edge: int = 2) -> bool:
    """Experimental branch-``k`` version: ``sigma_mu(k) / k**3`` against ``k`` branch-1 slices."""
    if k < 1:
        raise ValueError("k must be positive")
    if not -0.5 < mu_tilde <= 0.5:
        raise ValueError("mu_tilde must lie in (-1/2, 1/2]")
    return _subharmonic(k, mu_tilde, n_max, tol, edge * k).ok


def random_dispersion(rng, max_order: int = 5, bound: int = 3) -> ComovingDispersion:
    """Comoving dispersion with 1..max_order+1 rational coefficients in [-bound, bound]."""
    order = rng.randint(1, max_order)
    coeffs = []
    for _ in range(order + 1):
        den = rng.randint(1, 4)
        coeffs.append(Fraction(rng.randint(-bound * den, bound * den), den))
    while coeffs[-1] == 0:
        den = rng.randint(1, 4)
        coeffs[-1] = Fraction(rng.randint(-bound * den, bound * den), den)
    return ComovingDispersion(tuple(coeffs))


@dataclass
class CrossCheck:
    """Outcome of matching brute-force collisions against reduced-polynomial roots.

    ``unmatched_brute`` and ``unmatched_roots`` are genuine disagreements.
    ``uncovered`` counts roots whose colliding pair falls outside the scanned
    window, so the scan could not have seen them.
    """

    brute: list
    roots_checked: int = 0
    uncovered: int = 0
    unmatched_brute: list = field(default_factory=list)
    unmatched_roots: list = field(default_factory=list)  # (dn, gamma, mu)

    @property
    def ok(self) -> bool:
        return not self.unmatched_brute and not self.unmatched_roots


def cross_check(
    cd: ComovingDispersion,
    n_max: int = DEFAULT_WINDOW,
    mu_grid_resolution: int = DEFAULT_RESOLUTION,
    tol: float = 1e-8,
    gamma_tol: float = 1e-8,
) -> CrossCheck:
    """Map every brute collision to a root of ``R`` and every in-window root back."""
    ns = window(n_max)
    brute = brute_collisions(cd, ns, mu_grid_resolution, tol)
    report = CrossCheck(brute)
    coeffs = _power_coeffs(cd)

    roots_by_dn = {}
    for dn in range(1, 2 * n_max + 1):
        roots_by_dn[dn] = [float(g) for g in real_roots(build_reduced(cd, dn).polynomial, 1e-14)]

    for bc in brute:
        if not any(abs(bc.matched_gamma - g) <= gamma_tol for g in roots_by_dn.get(bc.dn, ())):
            report.unmatched_brute.append(bc)

    for dn, roots in roots_by_dn.items():
        hits = [bc.matched_gamma for bc in brute if bc.dn == dn]
        for g in roots:
            if g < -0.25:
                continue
            root = np.sqrt(max(1.0 + 4.0 * g, 0.0))
            for mu in (0.5 * dn * (-1 + root), 0.5 * dn * (-1 - root)):
                if abs(npoly.polyval(mu, coeffs)) <= tol:
                    continue  # origin; the scan drops these by design
                if not mu_is_covered(mu, dn, ns):
                    report.uncovered += 1
                    continue
                report.roots_checked += 1
                if not any(abs(h - g) <= gamma_tol for h in hits):
                    report.unmatched_roots.append((dn, g, mu))
    return report
