"""Surface invariants, branch-curve combinatorics, and multiplet bounds."""

from fractions import Fraction

import pytest

from zfam.errors import UsageError, ZfamError
from zfam.groups import ElementaryAbelianGroup
from zfam.hurwitz import find_ramification_structure
from zfam.invariants import (
    BoundReport,
    BranchCurveInvariants,
    SurfaceInvariants,
    branch_curve_invariants,
    chisini_ok,
    chisini_threshold,
    main_theorem_counts,
    multiplet_bounds,
    plurigenus_dimension,
    surface_invariants,
    twelve_significant,
)
from zfam.spherical import make_ramification_structure, make_spherical_system


# ---------------------------------------------------------------- surface invariants


def test_surface_invariants_validation():
    good = SurfaceInvariants(chi=2, e=8, ksq=16, g1=5, g2=5, q=0, order=8)
    assert good.chi == 2
    with pytest.raises(ZfamError):
        SurfaceInvariants(chi=2, e=9, ksq=16, g1=5, g2=5, q=0, order=8)
    with pytest.raises(ZfamError):
        SurfaceInvariants(chi=2, e=8, ksq=16, g1=5, g2=5, q=1, order=8)
    with pytest.raises(ZfamError):
        SurfaceInvariants(chi=3, e=12, ksq=24, g1=5, g2=5, q=0, order=8)
    with pytest.raises(ZfamError):
        SurfaceInvariants(chi=0, e=0, ksq=0, g1=1, g2=1, q=0, order=8)


def test_surface_invariants_from_structure(z2_3):
    t1 = make_spherical_system(z2_3, (1, 1, 2, 2, 4, 4))
    t2 = make_spherical_system(z2_3, (3, 3, 5, 5, 7, 7))
    inv = surface_invariants(make_ramification_structure(t1, t2))
    assert inv == SurfaceInvariants(chi=2, e=8, ksq=16, g1=5, g2=5, q=0, order=8)


def test_surface_invariants_of_family_witness(z2_3):
    structure, _ = find_ramification_structure(z2_3, [2] * 12, [2] * 36)
    inv = surface_invariants(structure)
    assert (inv.g1, inv.g2) == (17, 65)
    assert inv.chi == 128
    assert (inv.e, inv.ksq, inv.q) == (512, 1024, 0)


# ---------------------------------------------------------------- branch curves


def test_branch_curve_worked_row():
    b = branch_curve_invariants(8, 4, 2)
    assert b == BranchCurveInvariants(m=2, nu=32, d=112, n=5340, c=540, g=225, euler_r=-448)
    # genus-degree identity closes
    assert (b.d - 1) * (b.d - 2) // 2 - b.n - b.c == 225


def test_branch_curve_small_row():
    b = branch_curve_invariants(2, 1, 2)
    assert (b.d, b.c, b.n) == (28, 135, 159)
    assert b.g == 57


def test_branch_curve_coefficients_at_m2():
    # interpolate n - c2 as a polynomial in ksq from three evaluations
    points = []
    for ksq in (2, 4, 6):
        b = branch_curve_invariants(ksq, 1, 2)
        assert b.d == 14 * ksq
        assert b.c == 68 * ksq - 1
        assert b.euler_r == -56 * ksq
        points.append((Fraction(ksq), Fraction(b.n - 1)))
    (x0, y0), (x1, y1), (x2, y2) = points
    lead = (y2 - y0) / (x2 - x0) - (y1 - y0) / (x1 - x0)
    lead /= x2 - x1
    linear = (y1 - y0) / (x1 - x0) - lead * (x0 + x1)
    constant = y0 - lead * x0 * x0 - linear * x0
    assert (lead, linear, constant) == (98, -117, 0)


def test_branch_curve_general_m_identities():
    for ksq, c2, m in ((8, 4, 3), (16, 8, 4), (24, 12, 5), (2, 1, 7)):
        b = branch_curve_invariants(ksq, c2, m)
        assert b.nu == m * m * ksq
        assert b.d == (3 * m * m + m) * ksq
        assert b.euler_r == -(3 * m + 1) * (3 * m + 2) * ksq
        assert b.c == (12 * m * m + 9 * m + 2) * ksq - c2
        assert b.g == (b.d - 1) * (b.d - 2) // 2 - b.n - b.c
        assert b.euler_r == 2 - 2 * b.g


def test_branch_curve_rejections():
    with pytest.raises(UsageError):
        branch_curve_invariants(0, 1, 2)
    with pytest.raises(UsageError):
        branch_curve_invariants(8, 4, 1)
    with pytest.raises(UsageError):
        branch_curve_invariants(2, 1000, 2)


# ---------------------------------------------------------------- main theorem counts


def test_main_theorem_counts_pinned():
    assert main_theorem_counts(112) == (5340, 540)
    assert main_theorem_counts(28) == (159, 135)


def test_main_theorem_counts_rejects_bad_degree():
    for d in (27, 0, -28, 100):
        with pytest.raises(UsageError):
            main_theorem_counts(d)


def test_main_theorem_matches_branch_curve_on_sip_chern_pairs():
    # c2 = ksq/2 holds for every quotient surface here (e = 4 chi, ksq = 8 chi)
    for ksq in (8, 16, 32, 64, 128, 256, 512, 1024):
        b = branch_curve_invariants(ksq, ksq // 2, 2)
        assert main_theorem_counts(14 * ksq) == (b.n, b.c)


# ---------------------------------------------------------------- chisini


def test_chisini_threshold_worked_row():
    assert chisini_threshold(112, 225, 540) == Fraction(112, 29)
    assert chisini_ok(32, 112, 225, 540)
    assert not chisini_ok(3, 112, 225, 540)


def test_chisini_threshold_no_cusps():
    assert chisini_threshold(10, 5, 0) == 2
    assert chisini_ok(3, 10, 5, 0)


def test_chisini_threshold_undefined():
    with pytest.raises(UsageError):
        chisini_threshold(1, 0, 10)


def test_chisini_strictness():
    # threshold exactly nu -> not ok
    assert chisini_threshold(10, 5, 0) == 2
    assert not chisini_ok(2, 10, 5, 0)


# ---------------------------------------------------------------- bounds


def test_bounds_exact_integer_roots():
    r = multiplet_bounds(4096, 512, 1)
    assert r.d == 57344
    assert r.n_d == 1643689984
    assert r.c_d == 276480
    assert r.log2_lower_thm_main == 32
    assert isinstance(r.log2_lower_thm_main, int)
    assert r.log2_lower_eq15 == 8


def test_bounds_catanese_power_of_two():
    r = multiplet_bounds(8, 1, 1)
    assert r.log2_upper_catanese == 14784
    assert r.log2_lower_thm_main == 4
    assert r.log2_lower_eq15 == 1


def test_bounds_inexact_roots_are_twelve_digit():
    r = multiplet_bounds(24, 3, 1)
    assert r.log2_lower_thm_main == 5.76899828123
    assert r.log2_lower_eq15 == 1.44224957031
    assert r.log2_upper_catanese == 203352.256832


def test_bounds_rational_epsilon():
    r = multiplet_bounds(262144, 32768, Fraction(1, 3))
    # exponent 3/7 of 2^21
    assert r.log2_lower_thm_main == 512
    assert isinstance(r.log2_lower_thm_main, int)
    assert r.log2_lower_eq15 == 86.1376123285


def test_bounds_thm_main_dominates_eq15():
    # 8 ksq = 64 chi > chi, so the first exponent is always the larger one
    for ksq, chi in ((8, 1), (64, 8), (1024, 128)):
        r = multiplet_bounds(ksq, chi, 1)
        assert r.log2_lower_thm_main > r.log2_lower_eq15


def test_bounds_rejections():
    with pytest.raises(UsageError):
        multiplet_bounds(8, 1, 0)
    with pytest.raises(UsageError):
        multiplet_bounds(8, 1, Fraction(-1, 2))
    with pytest.raises(UsageError):
        multiplet_bounds(0, 1, 1)


# ---------------------------------------------------------------- plurigenus


def test_plurigenus_pinned():
    assert plurigenus_dimension(1, 8, 2) == 9
    assert plurigenus_dimension(128, 1024, 2) == 1152


def test_plurigenus_rejects_m1():
    with pytest.raises(UsageError):
        plurigenus_dimension(1, 8, 1)


def test_twelve_significant():
    assert twelve_significant(1.23456789012345e10) == 12345678901.2
    assert twelve_significant(32.0) == 32.0
