"""Acceptance gate: every stated criterion at its stated tolerance.

Each test prints one `PASS criterion N` / `FAIL criterion N` line (visible with
``pytest -s`` or on failure).  Tolerances are pinned here, not configurable.
"""

import math

import numpy as np
import pytest

from qcfun import (
    BoundId,
    HypergeomParams,
    ahlfors_constant,
    agm_product_p,
    bound_value,
    boundary_metric_estimate,
    box_dimension,
    ellint_K,
    gauss_F,
    gehring_d2_composite,
    get_case,
    koch_curve,
    linearized_g,
    mu,
    mu_a,
    mu_a_derivative,
    mu_a_inv,
    mu_inv,
    regular_ngon,
    residual,
    rho_disk,
    run_suite,
)
from qcfun.identities import A_GRID, R_GRID

E_PI = 23.1406926
Y_GRID = (0.1, 0.5, 1.0, math.pi / 2.0, 3.0, 10.0, 20.0)


def gate(num: int, description: str, ok: bool):
    print(f"{'PASS' if ok else 'FAIL'} criterion {num}: {description}")
    assert ok, f"criterion {num}: {description}"


def test_criterion_1_gehring_closed_form():
    ok = True
    for K in (1.0, 1.5, 2.0, 3.0):
        direct = bound_value(BoundId.GehringD2, [K])
        ok &= abs(direct - gehring_d2_composite(K)) <= 1e-10 * direct
        ok &= abs(direct - math.exp(math.pi * K)) <= 1e-13 * direct
    ok &= abs(bound_value(BoundId.GehringD2, [1.0]) - E_PI) < 5e-8
    gate(1, "Gehring constant equals its capacity composite to 1e-10 "
            "for K in {1, 1.5, 2, 3}, with e^pi at K = 1", ok)


def test_criterion_2_agm_hypergeometric_agreement():
    p = HypergeomParams(0.5, 0.5, 1.0)
    worst = max(
        abs(ellint_K(r) - 0.5 * math.pi * gauss_F(p, r * r)) / ellint_K(r) for r in R_GRID
    )
    gate(2, f"|K(r) - (pi/2)F(1/2,1/2;1;r^2)| <= 1e-12 K(r) on the r grid "
            f"(worst {worst:.2e})", worst <= 1e-12)


def test_criterion_3_landen_identity():
    worst = max(abs(residual("Landen", (r,))) for r in R_GRID)
    gate(3, f"Landen identity residual <= 1e-12 relative on the r grid "
            f"(worst {worst:.2e})", worst <= 1e-12)


EQUALITY_CASES = (
    "LJ3",
    "RamanujanE1", "RamanujanE2", "RamanujanE3", "RamanujanE4",
    "RamanujanE5a", "RamanujanE5b",
    "PhiId1", "PhiId2", "PhiId3", "PhiId4", "PhiId5",
    "Fixed1", "Fixed2", "Fixed3", "Fixed4", "Fixed5",
    "BBG2", "BBG5", "BBG11",
    "PhiGroup1", "PhiGroup2", "PhiGroup3", "PhiGroup4",
    "RamIdCase",
)


def test_criterion_4_modular_equation_suite():
    reports = {rep.case: rep for rep in run_suite(EQUALITY_CASES)}
    ok = True
    for case_id in EQUALITY_CASES:
        rep = reports[case_id]
        tol = 1e-8 if case_id in ("RamanujanE3", "BBG11") else 1e-9
        ok &= rep.error is None and rep.max_residual <= tol
    worst = max(rep.max_residual for rep in reports.values())
    gate(4, f"all listed equality cases pass at 1e-9 (1e-8 for RamanujanE3, BBG11) "
            f"over default grids (worst {worst:.2e})", ok)


def test_criterion_5_inversion_round_trips():
    ok = True
    worst = 0.0
    for y in Y_GRID:
        err = abs(mu(mu_inv(y)) - y) / max(1.0, y)
        worst = max(worst, err)
        ok &= err <= 1e-12
    for a in (1.0 / 6.0, 0.25, 1.0 / 3.0):
        for y in Y_GRID:
            err = abs(mu_a(a, mu_a_inv(a, y)) - y) / max(1.0, y)
            worst = max(worst, err)
            ok &= err <= 1e-11
    gate(5, f"mu and mu_a round trips across the y grid (worst {worst:.2e})", ok)


def test_criterion_6_derivative_formula():
    h = 1e-6
    ok = True
    worst = 0.0
    for a in A_GRID:
        for r in R_GRID:
            fd = (mu_a(a, r + h) - mu_a(a, r - h)) / (2.0 * h)
            err = abs(mu_a_derivative(a, r) - fd) / abs(fd)
            worst = max(worst, err)
            ok &= err <= 1e-6
    gate(6, f"derivative formula matches central differences (h = 1e-6) to 1e-6 "
            f"on the (a, r) grid (worst {worst:.2e})", ok)


INEQUALITY_CASES = (
    "LambdaBracketLower", "LambdaBracketUpper", "QiuBracket",
    "KBracketLower", "KBracketUpper", "MeanChain",
    "MuSub", "MuSuper", "MuDup", "MuProd",
)


def test_criterion_7_inequality_suite():
    reports = {rep.case: rep for rep in run_suite(INEQUALITY_CASES)}
    ok = all(rep.error is None and rep.max_residual <= 1e-11 for rep in reports.values())
    # strictness of the elliptic bracket
    ok &= all(get_case(c).fn(r) > 0.0 for c in ("KBracketLower", "KBracketUpper") for r in R_GRID)
    # stated equality points within 1e-9
    ok &= abs(residual("MuSub", (0.25, 0.4, 0.4))) <= 1e-9
    ok &= abs(residual("MuSuper", (1.0 / 3.0, 0.6, 0.6))) <= 1e-9
    ok &= abs(residual("QiuBracket", (1.0, 3.0))) <= 1e-9
    ok &= abs(residual("QiuBracket", (2.5, 0.0))) <= 1e-9
    ok &= all(abs(residual("MuDup", (0.5, r))) <= 1e-9 for r in (0.1, 0.5, 0.9))
    gate(7, "inequality suite holds with slack >= -1e-11 and equality points "
            "within 1e-9 on default grids", ok)


def test_criterion_8_product_equality_at_half():
    worst = 0.0
    ok = True
    for r in R_GRID:
        p = agm_product_p(r)
        err = abs(p - r * math.exp(mu(r))) / p
        worst = max(worst, err)
        ok &= err <= 1e-10
    gate(8, f"|agm_product_p(r) - r e^mu(r)| <= 1e-10 p on the r grid "
            f"(worst {worst:.2e})", ok)


def test_criterion_9_linearization_slopes():
    h = 1e-5
    ok = True
    for K in (1.5, 2.0, 5.0):
        xs = [-10.0 + 0.5 * i for i in range(41)]
        slopes = [(linearized_g(K, x + h) - linearized_g(K, x - h)) / (2.0 * h) for x in xs]
        ok &= all(1.0 / K < s < K for s in slopes)
        ok &= all(b >= a - 1e-9 for a, b in zip(slopes, slopes[1:]))
    gate(9, "finite-difference slope of the linearization lies in (1/K, K) and is "
            "nondecreasing over x in [-10, 10] for K in {1.5, 2, 5}", ok)


def test_criterion_10_geometry_oracles():
    m = ahlfors_constant(regular_ngon(1000))
    dim = box_dimension(koch_curve(7), [3.0 ** -k for k in range(2, 7)])
    delta = boundary_metric_estimate(regular_ngon(1000), (0.0, 0.0), (0.5, 0.0),
                                     "AbsoluteRatio")
    rho = rho_disk((0.0, 0.0), (0.5, 0.0))
    ok = abs(m - 1.0) <= 1e-3
    ok &= abs(dim - 1.2619) <= 0.05
    ok &= abs(delta - math.log(3.0)) <= 1e-2 and abs(rho - math.log(3.0)) <= 1e-12
    gate(10, f"geometry oracles: three-point constant of the 1000-gon = {m:.6f}, "
             f"box dimension of the level-7 snowflake = {dim:.4f}, "
             f"boundary metric at (0, e1/2) = {delta:.4f}", ok)


def test_criterion_11_large_scale_claims_covered_by_property_suites():
    # The sharp linear-dilatation bound, dimension majorants, and the map-level
    # Holder inequality are not reproducible at desk scale; their coverage here
    # is the property suites: the exponential bracket pinning lambda(K), the
    # box-counting estimator with invariance checks, and the constant-level
    # tests of the 64^(1-1/K) entry with the distortion power bracket.
    reports = {rep.case: rep for rep in run_suite(
        ["LambdaBracketLower", "LambdaBracketUpper", "KBracketLower", "KBracketUpper"])}
    ok = all(rep.passed for rep in reports.values())
    ok &= bound_value(BoundId.MoriConstant, [2.0]) == pytest.approx(8.0, rel=1e-12)
    # distortion power bracket (the constant behind the Holder-type inequality)
    from qcfun import phi_K
    for K in (1.5, 2.0):
        for r in (0.1, 0.5, 0.9):
            ok &= phi_K(K, r).r <= 4.0 ** (1.0 - 1.0 / K) * r ** (1.0 / K) * (1 + 1e-12)
    # similarity invariance of the geometric estimators stands in for map-level claims
    base = koch_curve(3)
    rot = np.array([[math.cos(0.4), -math.sin(0.4)], [math.sin(0.4), math.cos(0.4)]])
    from qcfun import Polyline
    moved = Polyline(2.0 * base.points @ rot.T + np.array([1.0, 2.0]), closed=True)
    ok &= abs(ahlfors_constant(moved) - ahlfors_constant(base)) <= 1e-10
    gate(11, "headline large-scale claims are covered by bracket, invariance, and "
             "oracle-equivalence property suites (no value reproduction)", ok)
