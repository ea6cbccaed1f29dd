"""Machine-checkable registry of the modular-equation identities and inequalities.

Every case evaluates to a signed residual (equalities) or a slack (inequalities,
nonnegative when the inequality holds), normalized where the compared
quantities grow large, so one tolerance per case is meaningful across its grid.
``run_suite`` sweeps the default grids and returns one report per case;
``experiment`` exposes the open-problem observations (never asserted).

Degree-p solutions are radii s with mu(s) = p mu(r); in Ramanujan's notation
alpha = r^2 and beta = s^2, and complements 1-alpha, 1-beta are read from the
complement channels, which keeps eighth and twenty-fourth roots meaningful
even when beta ~ 1e-80.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .distortion import eta_K2, lambda_of_K, phi_aK, phi_K
from .errors import DomainError, QcfunError
from .means import MeanKind, agm, comp_radius, ellint_K, ellint_K_from_comp, mean, mean_mod
from .modulus import SQRT_HALF, UnitRadius, agm_product_p, mu, mu_a, mu_inv
from .specfun import EULER_GAMMA, HypergeomParams, beta_fn, digamma_fn, gauss_F, ramanujan_R

__all__ = [
    "CaseKind",
    "IdentityCase",
    "ResidualReport",
    "all_cases",
    "get_case",
    "residual",
    "run_suite",
    "experiment",
    "EXPERIMENT_NAMES",
]

R_GRID = tuple(round(0.05 * i, 10) for i in range(1, 20))
K_GRID = (1.01, 1.1, 1.5, 2.0, 3.0, 5.0)
A_GRID = (1.0 / 6.0, 0.25, 1.0 / 3.0, 0.5)
T_GRID = (0.0, 0.25, 1.0, 4.0, 10.0)
LAMBDA_K_GRID = (1.1, 1.5, 2.0, 3.0, 5.0)
AB_PAIRS = ((0.25, 0.25), (0.25, 0.75), (1.0 / 3.0, 1.0 / 3.0), (0.5, 0.5))
XY_PAIRS = ((1.0, 2.0), (0.5, 3.0), (2.0, 2.5), (1.0, 10.0), (0.1, 0.2), (1.0, 1.05))

_THIRD = 1.0 / 3.0


class CaseKind(Enum):
    Equality = "equality"
    Inequality = "inequality"
    MonotoneProperty = "monotone"


@dataclass(frozen=True)
class IdentityCase:
    """One registry entry: residual function, parameter domain, grid, tolerance."""

    id: str
    kind: CaseKind
    params: tuple[str, ...]
    domains: tuple[tuple[float, float], ...]
    fn: object
    tolerance: float
    default_points: tuple
    note: str = ""

    def check_point(self, point) -> None:
        if len(point) != len(self.params):
            raise DomainError(f"{self.id} expects {len(self.params)} parameter(s), got {len(point)}")
        for name, value, (lo, hi) in zip(self.params, point, self.domains):
            if not (lo <= value <= hi):
                raise DomainError(f"{self.id}: parameter {name}={value} outside [{lo}, {hi}]")


@dataclass(frozen=True)
class ResidualReport:
    """Grid summary of one case; pass means max residual (or violation) within tolerance."""

    case: str
    kind: str
    grid: str
    n_points: int
    max_residual: float
    worst_point: tuple
    tolerance: float
    passed: bool
    error: str | None = None

    def to_dict(self) -> dict:
        return {
            "case": self.case,
            "kind": self.kind,
            "grid": self.grid,
            "n_points": self.n_points,
            "max_residual": self.max_residual,
            "worst_point": list(self.worst_point),
            "tolerance": self.tolerance,
            "pass": self.passed,
            "error": self.error,
        }


@lru_cache(maxsize=16384)
def _mua(a: float, r: float) -> float:
    return mu_a(a, UnitRadius.from_r(r))


def _landen_ascend(r: float) -> UnitRadius:
    """2 sqrt(r)/(1+r) with its exact complement (1-r)/(1+r)."""
    return UnitRadius(2.0 * math.sqrt(r) / (1.0 + r), (1.0 - r) / (1.0 + r))


def _degree(u: UnitRadius, p: float) -> UnitRadius:
    """Degree-p solution s = phi_{1/p}(r), i.e. mu(s) = p mu(r)."""
    return phi_K(1.0 / p, u)


# ---------------------------------------------------------------------------
# equality residuals
# ---------------------------------------------------------------------------

def _lj3(r):
    u = UnitRadius.from_r(r)
    s = _degree(u, 3.0)
    return math.sqrt(u.r * s.r) + math.sqrt(u.comp * s.comp) - 1.0


def _ram_parts(u: UnitRadius, s: UnitRadius):
    return u.r * u.r, u.comp * u.comp, s.r * s.r, s.comp * s.comp


def _e1(r):
    u = UnitRadius.from_r(r)
    al, oma, be, omb = _ram_parts(u, _degree(u, 5.0))
    return (
        math.sqrt(al * be)
        + math.sqrt(oma * omb)
        + 2.0 * (16.0 * al * be * oma * omb) ** (1.0 / 6.0)
        - 1.0
    )


def _e2(r):
    u = UnitRadius.from_r(r)
    al, oma, be, omb = _ram_parts(u, _degree(u, 7.0))
    return (al * be) ** 0.125 + (oma * omb) ** 0.125 - 1.0


def _e3(r):
    u = UnitRadius.from_r(r)
    s3 = _degree(u, 3.0)
    s9 = _degree(s3, 3.0)  # two nested degree-3 solutions give degree 9
    al, oma = u.r * u.r, u.comp * u.comp
    be, omb = s3.r * s3.r, s3.comp * s3.comp
    ga, omg = s9.r * s9.r, s9.comp * s9.comp
    return (al * omg) ** 0.125 + (ga * oma) ** 0.125 - 2.0 ** _THIRD * (be * omb) ** (1.0 / 24.0)


def _e4(r):
    u = UnitRadius.from_r(r)
    al, oma, be, omb = _ram_parts(u, _degree(u, 23.0))
    return (
        (al * be) ** 0.125
        + (oma * omb) ** 0.125
        + 2.0 ** (2.0 / 3.0) * (al * be * oma * omb) ** (1.0 / 24.0)
        - 1.0
    )


def _e5_expr(al, oma, be, omb):
    return (
        (al * be) ** 0.125
        + (oma * omb) ** 0.125
        - (al * be * oma * omb) ** 0.125
        - math.sqrt(0.5 * (1.0 + math.sqrt(al * be) + math.sqrt(oma * omb)))
    )


def _e5a(r):
    u = UnitRadius.from_r(r)
    return _e5_expr(*_ram_parts(u, _degree(u, 7.0)))


def _e5b(r):
    u = UnitRadius.from_r(r)
    s3, s5 = _degree(u, 3.0), _degree(u, 5.0)
    return _e5_expr(s3.r * s3.r, s3.comp * s3.comp, s5.r * s5.r, s5.comp * s5.comp)


def _phiid1(s):
    u = UnitRadius.from_r(s)
    x, y = phi_K(math.sqrt(5.0), u), phi_K(1.0 / math.sqrt(5.0), u)
    prod = x.r * y.r * x.comp * y.comp
    return x.r * y.r + x.comp * y.comp + 2.0 ** (5.0 / 3.0) * prod ** _THIRD - 1.0


def _phiid2(s):
    u = UnitRadius.from_r(s)
    x, y = phi_K(math.sqrt(7.0), u), phi_K(1.0 / math.sqrt(7.0), u)
    return (x.r * y.r) ** 0.25 + (x.comp * y.comp) ** 0.25 - 1.0


def _phiid3(s):
    u = UnitRadius.from_r(s)
    x, y = phi_K(3.0, u), phi_K(3.0, u.swapped)
    rhs = 2.0 ** _THIRD * (u.r * u.r * u.comp * u.comp) ** (1.0 / 24.0)
    return (x.r * y.r) ** 0.25 + (x.comp * y.comp) ** 0.25 - rhs


def _phiid4(s):
    u = UnitRadius.from_r(s)
    x, y = phi_K(math.sqrt(23.0), u), phi_K(1.0 / math.sqrt(23.0), u)
    prod = x.r * x.comp * y.r * y.comp
    return (x.r * y.r) ** 0.25 + (x.comp * y.comp) ** 0.25 + 2.0 ** (2.0 / 3.0) * prod ** (1.0 / 12.0) - 1.0


def _phiid4_printed(s):
    # verbatim printed parameterization; degenerates to the fixed-point relation
    u = UnitRadius.from_r(s)
    x, y = phi_K(1.0 / math.sqrt(23.0), u), phi_K(math.sqrt(23.0), u.swapped)
    prod = x.r * x.comp * y.r * y.comp
    return (x.r * y.r) ** 0.25 + (x.comp * y.comp) ** 0.25 + 2.0 ** (2.0 / 3.0) * prod ** (1.0 / 12.0) - 1.0


def _phiid5(s):
    u = UnitRadius.from_r(s)
    x = phi_K(math.sqrt(5.0 / 3.0), u)
    y = phi_K(math.sqrt(3.0 / 5.0), u)
    xy, xcyc = x.r * y.r, x.comp * y.comp
    return (
        xy ** 0.25
        + xcyc ** 0.25
        - (xy * xcyc) ** 0.25
        - math.sqrt(0.5 * (1.0 + xy + xcyc))
    )


def _fixed_u(K):
    return phi_K(K, SQRT_HALF)


def _fixed1():
    u = _fixed_u(math.sqrt(5.0))
    m = u.r * u.comp
    return 2.0 * m + 2.0 ** (5.0 / 3.0) * m ** (2.0 / 3.0) - 1.0


def _fixed2():
    u = _fixed_u(math.sqrt(7.0))
    return 2.0 * (u.r * u.comp) ** 0.25 - 1.0


def _fixed3():
    u = _fixed_u(3.0)
    return math.sqrt(u.r) + math.sqrt(u.comp) - 2.0 ** 0.25


def _fixed4():
    u = _fixed_u(math.sqrt(23.0))
    m = u.r * u.comp
    return 2.0 * m ** 0.25 + 2.0 ** (2.0 / 3.0) * m ** (1.0 / 6.0) - 1.0


def _fixed5():
    u = _fixed_u(math.sqrt(5.0 / 3.0))
    m = u.r * u.comp
    return 2.0 * m ** 0.25 - math.sqrt(m) - math.sqrt(0.5 * (1.0 + 2.0 * m))


def _bbg(p, r):
    u = UnitRadius.from_r(r)
    s = phi_aK(_THIRD, 1.0 / p, u)
    return u.r * u.r, u.comp * u.comp, s.r * s.r, s.comp * s.comp


def _bbg2(r):
    al, oma, be, omb = _bbg(2.0, r)
    return (al * be) ** _THIRD + (oma * omb) ** _THIRD - 1.0


def _bbg5(r):
    al, oma, be, omb = _bbg(5.0, r)
    return (al * be) ** _THIRD + (oma * omb) ** _THIRD + 3.0 * (al * be * oma * omb) ** (1.0 / 6.0) - 1.0


def _bbg11(r):
    al, oma, be, omb = _bbg(11.0, r)
    q = al * be * oma * omb
    return (
        (al * be) ** _THIRD
        + (oma * omb) ** _THIRD
        + 6.0 * q ** (1.0 / 6.0)
        + 3.0 * math.sqrt(3.0) * q ** (1.0 / 12.0) * ((al * be) ** (1.0 / 6.0) + (oma * omb) ** (1.0 / 6.0))
        - 1.0
    )


def _phigroup1(K, r):
    u = UnitRadius.from_r(r)
    x = phi_K(K, u)
    y = phi_K(1.0 / K, u.swapped)
    return x.r * x.r + y.r * y.r - 1.0


def _phigroup2(A, B, r):
    u = UnitRadius.from_r(r)
    return phi_K(A, phi_K(B, u)).r - phi_K(A * B, u).r


def _phigroup3(K, r):
    u = UnitRadius.from_r(r)
    return phi_K(1.0 / K, phi_K(K, u)).r - r


def _phigroup4(r):
    u = UnitRadius.from_r(r)
    return phi_K(2.0, u).r - 2.0 * math.sqrt(r) / (1.0 + r)


def _ramid(a, r):
    p1 = HypergeomParams(1.0 + a, 2.0 - a, 2.0)
    p2 = HypergeomParams(a, 1.0 - a, 1.0)
    lhs = gauss_F(p1, 1.0 - r) * gauss_F(p2, r) + gauss_F(p1, r) * gauss_F(p2, 1.0 - r)
    rhs = math.sin(math.pi * a) / (math.pi * a * (1.0 - a) * r * (1.0 - r))
    return lhs / rhs - 1.0


def _landen(r):
    s = _landen_ascend(r)
    rhs = (1.0 + r) * ellint_K(r)
    return (ellint_K_from_comp(s.comp, s.r) - rhs) / rhs


# ---------------------------------------------------------------------------
# inequality slacks (nonnegative when the claim holds), normalized
# ---------------------------------------------------------------------------

def _landen_ineq(a, b, r):
    p = HypergeomParams(a, b, a + b)
    rhs = (1.0 + r) * gauss_F(p, r * r)
    s = _landen_ascend(r)
    lhs = gauss_F(p, s.r * s.r)
    return (rhs - lhs) / max(1.0, rhs)


def _mu_sub(a, r, s):
    rc, sc = UnitRadius.from_r(r), UnitRadius.from_r(s)
    mid = math.sqrt(2.0 * r * s / (1.0 + r * s + rc.comp * sc.comp))
    lhs = _mua(a, r) + _mua(a, s)
    m_mid = 2.0 * _mua(a, mid)
    m_geo = 2.0 * _mua(a, math.sqrt(r * s))
    return min(m_mid - lhs, m_geo - m_mid) / max(1.0, lhs)


def _mu_super(a, r, t):
    rc, tc = UnitRadius.from_r(r), UnitRadius.from_r(t)
    mid = (r + t) / (1.0 + r * t + rc.comp * tc.comp)
    rhs = _mua(a, r) + _mua(a, t)
    return (rhs - 2.0 * _mua(a, mid)) / max(1.0, rhs)


def _dup_constant(a):
    big_r = ramanujan_R(a, 1.0 - a)
    c = (1.0 + math.sin(math.pi * a) / math.pi * (big_r - math.log(16.0))) ** 2
    return min(2.0, c)


def _mu_dup(a, r):
    u = UnitRadius.from_r(r)
    doubled = 2.0 * mu_a(a, _landen_ascend(r))
    base = mu_a(a, u)
    c1 = _dup_constant(a)
    return min(doubled - base, c1 * base - doubled) / max(1.0, base)


def _mu_prod(a, r):
    u = UnitRadius.from_r(r)
    p = agm_product_p(u)
    e = r * math.exp(mu_a(a, u))
    big_r = ramanujan_R(a, 1.0 - a)
    return min(e - p, math.exp(big_r) / 16.0 * p - e) / p


def _mean_chain(x, y):
    g = mean(MeanKind.Geometric, x, y)
    l = mean(MeanKind.Logarithmic, x, y)
    ag = mean(MeanKind.ArithmeticGeometric, x, y)
    l32 = mean_mod(MeanKind.Logarithmic, 1.5, x, y)
    a = mean(MeanKind.Arithmetic, x, y)
    return min(l - g, ag - l, l32 - ag, a - l32) / max(1.0, a)


def _k_bracket_lower(r):
    k = ellint_K(r)
    u = UnitRadius.from_r(r)
    return (k - 9.0 / (8.0 + r * r) * math.log(4.0 / u.comp)) / k


def _k_bracket_upper(r):
    k = ellint_K(r)
    u = UnitRadius.from_r(r)
    return (4.0 / (3.0 + r * r) * math.log(4.0 / u.comp) - k) / k


def _lambda_lower(K):
    lam = lambda_of_K(K)
    return (lam - math.exp(math.pi * (K - 1.0))) / lam


def _lambda_upper(K):
    lam = lambda_of_K(K)
    return (math.exp(math.pi * (K - 1.0 / K)) - lam) / lam


def _qiu(K, t):
    if t == 0.0:
        return 0.0  # both sides vanish identically
    b = math.exp(2.0 * mu(UnitRadius.from_r(1.0 / math.sqrt(1.0 + t))))
    bound = min(16.0 * t + b ** K - b, (16.0 * t + 8.0) ** K - 8.0)
    return (bound - 16.0 * eta_K2(K, t)) / max(1.0, bound)


def _mu_plus_log_decreasing(r1, r2):
    return (mu(UnitRadius.from_r(r1)) + math.log(r1)) - (mu(UnitRadius.from_r(r2)) + math.log(r2))


def _k_over_log_decreasing(r1, r2):
    def f(r):
        u = UnitRadius.from_r(r)
        return ellint_K(r) / math.log(4.0 / u.comp)

    return f(r1) - f(r2)


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

def _pts(*axes):
    out = [()]
    for axis in axes:
        out = [p + (v,) for p in out for v in axis]
    return tuple(out)


_R_OPEN = (1e-12, 1.0 - 1e-12)
_RS_PAIRS = tuple((r, s) for r in R_GRID for s in R_GRID if r <= s)
_CONSEC = tuple(zip(R_GRID[:-1], R_GRID[1:]))

_CASES: dict[str, IdentityCase] = {}


def _register(case: IdentityCase):
    _CASES[case.id] = case


_register(IdentityCase("LJ3", CaseKind.Equality, ("r",), (_R_OPEN,), _lj3, 1e-9, _pts(R_GRID)))
_register(IdentityCase("RamanujanE1", CaseKind.Equality, ("r",), (_R_OPEN,), _e1, 1e-9, _pts(R_GRID)))
_register(IdentityCase("RamanujanE2", CaseKind.Equality, ("r",), (_R_OPEN,), _e2, 1e-9, _pts(R_GRID)))
_register(IdentityCase("RamanujanE3", CaseKind.Equality, ("r",), (_R_OPEN,), _e3, 1e-8, _pts(R_GRID),
                       note="three-level case (degrees 1,3,9); tolerance relaxed for the nested inversions"))
_register(IdentityCase("RamanujanE4", CaseKind.Equality, ("r",), (_R_OPEN,), _e4, 1e-9, _pts(R_GRID)))
_register(IdentityCase("RamanujanE5a", CaseKind.Equality, ("r",), (_R_OPEN,), _e5a, 1e-9, _pts(R_GRID)))
_register(IdentityCase("RamanujanE5b", CaseKind.Equality, ("r",), (_R_OPEN,), _e5b, 1e-9, _pts(R_GRID)))
_register(IdentityCase("PhiId1", CaseKind.Equality, ("s",), (_R_OPEN,), _phiid1, 1e-9, _pts(R_GRID)))
_register(IdentityCase("PhiId2", CaseKind.Equality, ("s",), (_R_OPEN,), _phiid2, 1e-9, _pts(R_GRID)))
_register(IdentityCase("PhiId3", CaseKind.Equality, ("s",), (_R_OPEN,), _phiid3, 1e-9, _pts(R_GRID)))
_register(IdentityCase("PhiId4", CaseKind.Equality, ("s",), (_R_OPEN,), _phiid4, 1e-9, _pts(R_GRID),
                       note="source prints x = phi_{1/sqrt23}(s), y = phi_{sqrt23}(s'), which collapses "
                            "to the fixed-point relation (suspected transcription issue; see the "
                            "phiid4_printed experiment); evaluated with x = phi_{sqrt23}(s), "
                            "y = phi_{1/sqrt23}(s)"))
_register(IdentityCase("PhiId5", CaseKind.Equality, ("s",), (_R_OPEN,), _phiid5, 1e-9, _pts(R_GRID)))
_register(IdentityCase("Fixed1", CaseKind.Equality, (), (), _fixed1, 1e-10, ((),)))
_register(IdentityCase("Fixed2", CaseKind.Equality, (), (), _fixed2, 1e-10, ((),)))
_register(IdentityCase("Fixed3", CaseKind.Equality, (), (), _fixed3, 1e-10, ((),)))
_register(IdentityCase("Fixed4", CaseKind.Equality, (), (), _fixed4, 1e-10, ((),)))
_register(IdentityCase("Fixed5", CaseKind.Equality, (), (), _fixed5, 1e-10, ((),)))
_register(IdentityCase("BBG2", CaseKind.Equality, ("r",), (_R_OPEN,), _bbg2, 1e-9, _pts(R_GRID)))
_register(IdentityCase("BBG5", CaseKind.Equality, ("r",), (_R_OPEN,), _bbg5, 1e-9, _pts(R_GRID)))
_register(IdentityCase("BBG11", CaseKind.Equality, ("r",), (_R_OPEN,), _bbg11, 1e-8, _pts(R_GRID),
                       note="degree 11 compounds two deep inversions; tolerance relaxed"))
_register(IdentityCase("PhiGroup1", CaseKind.Equality, ("K", "r"), ((1e-6, 1e6), _R_OPEN),
                       _phigroup1, 1e-10, _pts(K_GRID, R_GRID)))
_register(IdentityCase("PhiGroup2", CaseKind.Equality, ("A", "B", "r"), ((1e-6, 1e6), (1e-6, 1e6), _R_OPEN),
                       _phigroup2, 1e-10, _pts(K_GRID, K_GRID, R_GRID)))
_register(IdentityCase("PhiGroup3", CaseKind.Equality, ("K", "r"), ((1e-6, 1e6), _R_OPEN),
                       _phigroup3, 1e-10, _pts(K_GRID, R_GRID)))
_register(IdentityCase("PhiGroup4", CaseKind.Equality, ("r",), (_R_OPEN,), _phigroup4, 1e-10, _pts(R_GRID)))
_register(IdentityCase("RamIdCase", CaseKind.Equality, ("a", "r"), ((1e-6, 1.0 - 1e-6), _R_OPEN),
                       _ramid, 1e-9, _pts(A_GRID, R_GRID),
                       note="residual is relative to the right-hand side"))
_register(IdentityCase("Landen", CaseKind.Equality, ("r",), (_R_OPEN,), _landen, 1e-12, _pts(R_GRID),
                       note="residual is relative to (1+r)K(r)"))

_register(IdentityCase("LandenIneq", CaseKind.Inequality, ("a", "b", "r"),
                       ((1e-6, 1.0), (1e-6, 1.0), _R_OPEN), _landen_ineq, 1e-11,
                       tuple((a, b, r) for (a, b) in AB_PAIRS for r in R_GRID)))
_register(IdentityCase("MuSub", CaseKind.Inequality, ("a", "r", "s"),
                       ((1e-6, 0.5), _R_OPEN, _R_OPEN), _mu_sub, 1e-11,
                       tuple((a, r, s) for a in A_GRID for (r, s) in _RS_PAIRS)))
_register(IdentityCase("MuSuper", CaseKind.Inequality, ("a", "r", "t"),
                       ((1e-6, 0.5), _R_OPEN, _R_OPEN), _mu_super, 1e-11,
                       tuple((a, r, t) for a in A_GRID for (r, t) in _RS_PAIRS)))
_register(IdentityCase("MuDup", CaseKind.Inequality, ("a", "r"),
                       ((1e-6, 0.5), _R_OPEN), _mu_dup, 1e-11,
                       _pts(A_GRID, R_GRID)))
_register(IdentityCase("MuProd", CaseKind.Inequality, ("a", "r"),
                       ((1e-6, 0.5), _R_OPEN), _mu_prod, 1e-11,
                       _pts(A_GRID, R_GRID),
                       note="slack normalized by the product p; equality throughout at a = 1/2"))
_register(IdentityCase("MeanChain", CaseKind.Inequality, ("x", "y"),
                       ((1e-12, 1e12), (1e-12, 1e12)), _mean_chain, 1e-11, XY_PAIRS))
_register(IdentityCase("KBracketLower", CaseKind.Inequality, ("r",), (_R_OPEN,),
                       _k_bracket_lower, 1e-11, _pts(R_GRID)))
_register(IdentityCase("KBracketUpper", CaseKind.Inequality, ("r",), (_R_OPEN,),
                       _k_bracket_upper, 1e-11, _pts(R_GRID)))
_register(IdentityCase("LambdaBracketLower", CaseKind.Inequality, ("K",), ((1.0, 1e3),),
                       _lambda_lower, 1e-11, _pts(LAMBDA_K_GRID)))
_register(IdentityCase("LambdaBracketUpper", CaseKind.Inequality, ("K",), ((1.0, 1e3),),
                       _lambda_upper, 1e-11, _pts(LAMBDA_K_GRID)))
_register(IdentityCase("QiuBracket", CaseKind.Inequality, ("K", "t"), ((1.0, 1e3), (0.0, 1e6)),
                       _qiu, 1e-11, _pts(K_GRID, T_GRID),
                       note="equality at K = 1 or t = 0"))
_register(IdentityCase("MuPlusLog", CaseKind.MonotoneProperty, ("r1", "r2"), (_R_OPEN, _R_OPEN),
                       _mu_plus_log_decreasing, 1e-11, _CONSEC,
                       note="mu(r) + log r decreases; slack is the drop across consecutive grid points"))
_register(IdentityCase("KOverLog", CaseKind.MonotoneProperty, ("r1", "r2"), (_R_OPEN, _R_OPEN),
                       _k_over_log_decreasing, 1e-11, _CONSEC,
                       note="K(r)/log(4/r') decreases; slack is the drop across consecutive grid points"))


def all_cases() -> tuple[IdentityCase, ...]:
    """Every registered case, ordered by id."""
    return tuple(_CASES[k] for k in sorted(_CASES))


def get_case(case_id: str) -> IdentityCase:
    try:
        return _CASES[case_id]
    except KeyError:
        raise DomainError(f"unknown identity case {case_id!r}; known: {', '.join(sorted(_CASES))}") from None


def residual(case_id: str, point) -> float:
    """Signed residual (equality) or slack (inequality/monotone) of one case at one point.

    Constituent evaluation errors propagate with the case id attached.
    """
    case = get_case(case_id)
    point = tuple(float(v) for v in point)
    case.check_point(point)
    try:
        return case.fn(*point)
    except QcfunError as exc:
        raise type(exc)(f"{case_id}{point}: {exc}") from exc


def _grid_description(case: IdentityCase, points) -> str:
    if not case.params:
        return "single evaluation"
    return f"{len(points)} point(s) over ({', '.join(case.params)})"


def run_suite(case_ids=None, grid_overrides=None) -> list[ResidualReport]:
    """Evaluate cases over their grids and summarize one report per case.

    ``grid_overrides`` maps a parameter name to an explicit list of values;
    it replaces that axis of the default grid (cartesian with the others).
    Per-case failures are captured in the report, never raised.  Reports come
    back sorted by case id; evaluation order never affects the numbers.
    """
    if case_ids is None:
        cases = all_cases()
    else:
        cases = tuple(get_case(cid) for cid in case_ids)
    reports = []
    for case in cases:
        points = case.default_points
        if grid_overrides and any(name in grid_overrides for name in case.params):
            # replace only the overridden axes; joint structure of the other
            # coordinates (e.g. admissible parameter pairs) is preserved
            over = [i for i, name in enumerate(case.params) if name in grid_overrides]
            keep = [i for i in range(len(case.params)) if i not in over]
            kept_tuples = list(dict.fromkeys(tuple(p[i] for i in keep) for p in points))
            new_points = []
            for base in kept_tuples:
                combos = _pts(*[tuple(grid_overrides[case.params[i]]) for i in over])
                for combo in combos:
                    point = [0.0] * len(case.params)
                    for slot, i in enumerate(keep):
                        point[i] = base[slot]
                    for slot, i in enumerate(over):
                        point[i] = combo[slot]
                    new_points.append(tuple(point))
            points = tuple(new_points)
        worst = ()
        worst_val = -math.inf
        err = None
        try:
            for point in points:
                case.check_point(point)
                value = case.fn(*point)
                bad = abs(value) if case.kind is CaseKind.Equality else -value
                if bad > worst_val:
                    worst_val = bad
                    worst = point
        except Exception as exc:  # noqa: BLE001 - aggregate without aborting the suite
            err = f"{type(exc).__name__}: {exc}"
        if err is not None:
            reports.append(ResidualReport(case.id, case.kind.value, _grid_description(case, points),
                                          len(points), math.nan, worst, case.tolerance, False, err))
        else:
            reports.append(ResidualReport(case.id, case.kind.value, _grid_description(case, points),
                                          len(points), worst_val, worst, case.tolerance,
                                          worst_val <= case.tolerance))
    reports.sort(key=lambda rep: rep.case)
    return reports


# ---------------------------------------------------------------------------
# open-problem experiments: observations only, nothing asserted
# ---------------------------------------------------------------------------

EXPERIMENT_NAMES = ("q_maclaurin", "newton_monotone", "artanh_ratio", "linearize_phi_a",
                    "phiid4_printed")


def _exp_q_maclaurin(a=0.25, b=0.25, n=20) -> dict:
    """Maclaurin coefficients of G(r) = (Q(r)-1)/(1-r), Q = B F(a,b;a+b;r)/log(c/(1-r)).

    The open question is whether they are all positive; this only reports them.
    """
    if not (0 < a <= 1 and 0 < b <= 1 and a + b <= 1):
        raise DomainError("q_maclaurin requires a, b in (0,1] with a + b <= 1")
    n = int(n)
    big_b = beta_fn(a, b)
    big_r = -_psi_sum(a, b)
    f = [1.0]
    for k in range(n):
        f.append(f[-1] * (a + k) * (b + k) / ((a + b + k) * (k + 1.0)))
    den = [big_r] + [1.0 / k for k in range(1, n + 1)]
    q = []
    for k in range(n + 1):
        s = big_b * f[k] - sum(den[j] * q[k - j] for j in range(1, k + 1))
        q.append(s / den[0])
    coeffs = []
    acc = 0.0
    for k in range(n + 1):
        acc += q[k] - (1.0 if k == 0 else 0.0)
        coeffs.append(acc)
    return {
        "a": a,
        "b": b,
        "coefficients": coeffs,
        "signs": ["+" if c > 0 else ("-" if c < 0 else "0") for c in coeffs],
        "all_positive": all(c > 0 for c in coeffs),
    }


def _psi_sum(a, b):
    # -R(a,b) without the (0,1) restriction of ramanujan_R
    return digamma_fn(a) + digamma_fn(b) + 2.0 * EULER_GAMMA


def _exp_newton(y=4.0, iterations=30) -> dict:
    """Raw (unsafeguarded) Newton iterates for the inverse modulus, from 1/cosh y."""
    if not (y > 0.5 * math.pi):
        raise DomainError("the raw Newton iteration is stated for y > pi/2")
    x = 1.0 / math.cosh(y)
    iterates = [x]
    for _ in range(int(iterations)):
        u = UnitRadius(x, comp_radius(x))
        g = agm(1.0, u.comp)
        x_next = x + (mu(u) - y) * x * u.comp * u.comp / (g * g)
        if abs(x_next - x) <= 2e-16 * x:  # parked at the float resolution
            break
        iterates.append(x_next)
        x = x_next
    diffs = [b - a for a, b in zip(iterates, iterates[1:])]
    return {
        "y": y,
        "iterates": iterates,
        "monotone_increasing": all(d > 0 for d in diffs[:-1]) if len(diffs) > 1 else True,
        "stays_below_one": all(v < 1.0 for v in iterates),
        "final_residual": mu(UnitRadius.from_r(iterates[-1])) - y,
        "reference": mu_inv(y).r,
    }


def _exp_artanh(K=3.0, rs=R_GRID) -> dict:
    """Samples of g(K,r) = artanh(phi_K(r)) / artanh(r^(1/K)) against the conjectured range."""
    if K <= 1.0 or K == 2.0:
        raise DomainError("the conjecture is stated for fixed K > 1, K != 2")
    values = []
    for r in rs:
        u = UnitRadius.from_r(float(r))
        values.append(math.atanh(phi_K(K, u).r) / math.atanh(r ** (1.0 / K)))
    lim = 4.0 ** (1.0 - 1.0 / K)
    return {
        "K": K,
        "r": list(rs),
        "g": values,
        "conjectured_range": (min(K, lim), max(K, lim)),
        "monotone_increasing": all(b > a for a, b in zip(values, values[1:])),
        "inside_range": all(min(K, lim) < v < max(K, lim) for v in values),
    }


def _exp_linearize_a(a=1.0 / 3.0, K=2.0, xs=None, h=1e-5) -> dict:
    """Finite-difference slopes of the logit-conjugated generalized distortion."""
    if xs is None:
        xs = [0.5 * i for i in range(-12, 13)]

    def g(x):
        q = 1.0 / (1.0 + math.exp(-x))
        one_minus_q = 1.0 / (1.0 + math.exp(x))
        arg = UnitRadius(q, math.sqrt(one_minus_q * (1.0 + q)))
        v = phi_aK(a, K, arg)
        return math.log(v.r) + math.log1p(v.r) - 2.0 * math.log(v.comp)

    slopes = [(g(x + h) - g(x - h)) / (2.0 * h) for x in xs]
    return {
        "a": a,
        "K": K,
        "x": list(xs),
        "slope": slopes,
        "slope_range": (min(slopes), max(slopes)),
        "nondecreasing": all(b >= a_ - 1e-9 for a_, b in zip(slopes, slopes[1:])),
        "inside_open_interval": all(1.0 / K < s < K for s in slopes),
    }


def _exp_phiid4_printed(ss=R_GRID) -> dict:
    """Residual of the degree-23 composition identity in its printed parameterization."""
    res = [_phiid4_printed(float(s)) for s in ss]
    return {
        "s": list(ss),
        "residual": res,
        "max_abs_residual": max(abs(v) for v in res),
        "note": "printed form collapses to the fixed-point relation (y = x' identically); "
                "nonzero residual reported verbatim as a suspected transcription issue",
    }


_EXPERIMENTS = {
    "q_maclaurin": _exp_q_maclaurin,
    "newton_monotone": _exp_newton,
    "artanh_ratio": _exp_artanh,
    "linearize_phi_a": _exp_linearize_a,
    "phiid4_printed": _exp_phiid4_printed,
}


def experiment(name: str, **params) -> dict:
    """Run an open-problem experiment and return its observations (no assertions)."""
    try:
        fn = _EXPERIMENTS[name]
    except KeyError:
        raise DomainError(f"unknown experiment {name!r}; known: {', '.join(EXPERIMENT_NAMES)}") from None
    return fn(**params)
