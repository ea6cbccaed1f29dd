"""Catalog of the explicit distortion constants and bounds.

Each entry is a closed-form (or modulus-expressible) function of its listed
parameters, evaluated on its stated domain.  The plane entries tied to the
Teichmuller capacity exist only for n = 2; asking for another dimension
raises :class:`UnsupportedDimensionError` because no formula exists there.
"""

from __future__ import annotations

import math
from enum import Enum

from .distortion import phi_K
from .errors import DomainError, UnsupportedDimensionError
from .modulus import tau2_inv, teichmuller_tau2
from .specfun import gamma_fn

__all__ = [
    "BoundId",
    "bound_value",
    "bound_signature",
    "surface_area",
    "gehring_d2_composite",
    "gehring_d",
    "vuorinen_c",
]


class BoundId(Enum):
    GehringD2 = "GehringD2"                  # d(2,K) = exp(pi K)
    VuorinenC2 = "VuorinenC2"                # c(2,K) = 1 + tau2^-1(tau2(1)/K)
    SeittenrantaS = "SeittenrantaS"          # s(K) = exp(6 (K+1)^2 sqrt(K-1))
    MoriConstant = "MoriConstant"            # 64^(1 - 1/K)
    BeurlingAhlforsK = "BeurlingAhlforsK"    # min(M^(3/2), 2M - 1)
    KuhnauTriangleK = "KuhnauTriangleK"      # sqrt((1+d)/(1-d)), d = |1 - alpha|
    AgardGehringLower = "AgardGehringLower"  # 1 + (M-1)/4 on (1,2)
    EtaKnUpper = "EtaKnUpper"                # three-branch quasisymmetry bound
    HaymanSchottky = "HaymanSchottky"        # exp((pi + log+ t)(1+r)/(1-r))
    SurfaceArea = "SurfaceArea"              # omega_{n-1} = n pi^(n/2) / Gamma(1 + n/2)


# entry -> parameter names, for validation and the CLI
_SIGNATURES: dict[BoundId, tuple[str, ...]] = {
    BoundId.GehringD2: ("K",),
    BoundId.VuorinenC2: ("K",),
    BoundId.SeittenrantaS: ("K",),
    BoundId.MoriConstant: ("K",),
    BoundId.BeurlingAhlforsK: ("M",),
    BoundId.KuhnauTriangleK: ("alpha",),
    BoundId.AgardGehringLower: ("M",),
    BoundId.EtaKnUpper: ("K", "t", "n"),
    BoundId.HaymanSchottky: ("r", "t"),
    BoundId.SurfaceArea: ("n",),
}


def bound_signature(bound_id: BoundId) -> tuple[str, ...]:
    """Parameter names of a catalog entry, in call order."""
    return _SIGNATURES[bound_id]


def _require_K(K: float) -> float:
    if not (K >= 1.0 and math.isfinite(K)):
        raise DomainError(f"dilatation parameter must satisfy K >= 1, got {K}")
    return K


def surface_area(n: float) -> float:
    """Surface area omega_{n-1} = n pi^(n/2) / Gamma(1 + n/2) of the unit sphere."""
    if not (n >= 1 and math.isfinite(n)):
        raise DomainError(f"surface_area requires n >= 1, got {n}")
    return n * math.pi ** (0.5 * n) / gamma_fn(1.0 + 0.5 * n)


def gehring_d2_composite(K: float) -> float:
    """The linear-dilatation constant assembled from its n = 2 ingredients.

    exp[(K omega_1 / tau_2(1))^(1/(n-1))] with omega_1 = 2 pi and tau_2(1)
    evaluated live; the module self-check pins this against exp(pi K).
    """
    _require_K(K)
    return math.exp(K * surface_area(2.0) / teichmuller_tau2(1.0))


def _eta_kn_upper(K: float, t: float, n: float) -> float:
    _require_K(K)
    if not (t > 0 and math.isfinite(t)):
        raise DomainError(f"EtaKnUpper requires t > 0, got {t}")
    if n != int(n) or n < 2:
        raise DomainError(f"EtaKnUpper requires integer n >= 2, got {n}")
    eta1 = math.exp(6.0 * (K + 1.0) ** 2 * math.sqrt(K - 1.0))
    if t == 1.0:
        return eta1
    if n == 2:
        if t < 1.0:
            return eta1 * phi_K(K, t).r
        return eta1 / phi_K(1.0 / K, 1.0 / t).r
    # n >= 3: exact distortion unknown; use the power bracket with the
    # conservative upper estimate 2 e^(n-1) of the Grotzsch constant.
    lam = 2.0 * math.exp(n - 1.0)
    alpha = K ** (1.0 / (1.0 - n))
    if t < 1.0:
        return eta1 * lam ** (1.0 - alpha) * t ** alpha
    beta = 1.0 / alpha
    return eta1 * lam ** (beta - 1.0) * t ** beta


def bound_value(bound_id: BoundId, params) -> float:
    """Evaluate a catalog entry at an ordered parameter list.

    Raises :class:`DomainError` with an entry-specific message outside the
    stated domain; dimension-indexed entries only exist at n = 2.
    """
    if not isinstance(bound_id, BoundId):
        bound_id = BoundId(str(bound_id))
    params = [float(v) for v in params]
    expected = _SIGNATURES[bound_id]
    if len(params) != len(expected):
        raise DomainError(
            f"{bound_id.value} takes parameters {expected}, got {len(params)} value(s)"
        )

    if bound_id is BoundId.GehringD2:
        (K,) = params
        return math.exp(math.pi * _require_K(K))

    if bound_id is BoundId.VuorinenC2:
        (K,) = params
        _require_K(K)
        return 1.0 + tau2_inv(teichmuller_tau2(1.0) / K)

    if bound_id is BoundId.SeittenrantaS:
        (K,) = params
        _require_K(K)
        return math.exp(6.0 * (K + 1.0) ** 2 * math.sqrt(K - 1.0))

    if bound_id is BoundId.MoriConstant:
        (K,) = params
        _require_K(K)
        return math.exp((1.0 - 1.0 / K) * math.log(64.0))

    if bound_id is BoundId.BeurlingAhlforsK:
        (M,) = params
        if not (M >= 1.0 and math.isfinite(M)):
            raise DomainError(f"BeurlingAhlforsK requires M >= 1, got {M}")
        return min(M ** 1.5, 2.0 * M - 1.0)

    if bound_id is BoundId.KuhnauTriangleK:
        (alpha,) = params
        if not (0.0 < alpha <= 1.0 / 3.0):
            raise DomainError(
                f"KuhnauTriangleK requires least-angle fraction alpha in (0, 1/3], got {alpha}"
            )
        d = abs(1.0 - alpha)
        # lower-bound value; equality holds for every alpha in (0, 1/3]
        return math.sqrt((1.0 + d) / (1.0 - d))

    if bound_id is BoundId.AgardGehringLower:
        (M,) = params
        if not (1.0 < M < 2.0):
            raise DomainError(f"AgardGehringLower is stated only for M in (1,2), got {M}")
        return 1.0 + 0.25 * (M - 1.0)

    if bound_id is BoundId.EtaKnUpper:
        K, t, n = params
        return _eta_kn_upper(K, t, n)

    if bound_id is BoundId.HaymanSchottky:
        r, t = params
        if not (0.0 <= r < 1.0):
            raise DomainError(f"HaymanSchottky requires r in [0,1), got {r}")
        if not (t > 0 and math.isfinite(t)):
            raise DomainError(f"HaymanSchottky requires t > 0, got {t}")
        log_plus_t = max(0.0, math.log(t))
        return math.exp((math.pi + log_plus_t) * (1.0 + r) / (1.0 - r))

    if bound_id is BoundId.SurfaceArea:
        (n,) = params
        return surface_area(n)

    raise DomainError(f"unknown bound id {bound_id!r}")


def gehring_d(n: float, K: float) -> float:
    """Dimension-indexed linear-dilatation constant d(n, K); evaluable only at n = 2.

    For n >= 3 the Teichmuller capacity tau_n(1) has no known formula, so the
    request raises :class:`UnsupportedDimensionError`.
    """
    if n == 2:
        return bound_value(BoundId.GehringD2, [K])
    raise UnsupportedDimensionError(
        f"d(n,K) is only computable for n = 2 (tau_n(1) unknown for n = {n})"
    )


def vuorinen_c(n: float, K: float) -> float:
    """Dimension-indexed sharpened constant c(n, K); evaluable only at n = 2."""
    if n == 2:
        return bound_value(BoundId.VuorinenC2, [K])
    raise UnsupportedDimensionError(
        f"c(n,K) is only computable for n = 2 (tau_n^-1 unknown for n = {n})"
    )
