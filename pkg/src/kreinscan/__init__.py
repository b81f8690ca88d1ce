"""Spectral stability of small-amplitude periodic waves from the dispersion relation.

The zero-amplitude Floquet spectrum of a scalar Hamiltonian PDE with odd
polynomial dispersion is explicit. Eigenvalue collisions, and whether the two
colliding eigenvalues carry equal or opposite Krein signature, are encoded in
the real roots of a reduced polynomial in ``gamma = mu (dn + mu) / dn**2``.
"""

from kreinscan.dispersion import (
    ComovingDispersion,
    DispersionRelation,
    FloquetEigenvalue,
    bifurcation_speed,
    comoving,
    eval_omega,
    floquet_eigenvalue,
    krein_signature,
)
from kreinscan.models import (
    BalancedModel,
    Regime,
    balanced_classify,
    balanced_dispersion,
    balanced_thresholds,
    gkdv_band,
    gkdv_dispersion,
    gkdv_gamma,
    hokdv_band,
    hokdv_dispersion,
    region_sweep,
)
from kreinscan.reduction import (
    CollisionClass,
    CollisionRecord,
    build_reduced,
    classify_gamma,
    collision_report,
    hopf_candidates,
    recover_mu,
)
from kreinscan.spoly import s_eval, s_eval_closed, s_poly, t_value

__version__ = "0.1.0"

__all__ = [
    "BalancedModel",
    "CollisionClass",
    "CollisionRecord",
    "ComovingDispersion",
    "DispersionRelation",
    "FloquetEigenvalue",
    "Regime",
    "balanced_classify",
    "balanced_dispersion",
    "balanced_thresholds",
    "bifurcation_speed",
    "build_reduced",
    "classify_gamma",
    "collision_report",
    "comoving",
    "eval_omega",
    "floquet_eigenvalue",
    "gkdv_band",
    "gkdv_dispersion",
    "gkdv_gamma",
    "hokdv_band",
    "hokdv_dispersion",
    "hopf_candidates",
    "krein_signature",
    "recover_mu",
    "region_sweep",
    "s_eval",
    "s_eval_closed",
    "s_poly",
    "t_value",
]
