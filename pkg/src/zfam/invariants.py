"""Exact arithmetic for surface and branch-curve invariants.

A free diagonal action of G on C1 x C2 gives a quotient surface with

    chi = (g1 - 1)(g2 - 1) / |G|,   e = 4 chi,   K^2 = 8 chi,   q = 0,

and chi can be recomputed from the two branching types alone through

    4 chi = |G| (-2 + sum(1 - 1/m_{1,i})) (-2 + sum(1 - 1/m_{2,j})).

Branch-curve combinatorics come from projecting the m-canonical embedding
generically to the plane.  With H = mK the projection degree is nu = H^2,
the ramification divisor lies in |3H + K| so the branch curve has degree
d = H.(3H + K), and its smooth model R satisfies 2g - 2 = (3H + K).(3H + 2K).
The cusp count follows from comparing the Euler number of the surface with
the Euler number forced by a degree-nu cover branched over a nodal-cuspidal
curve, and the node count then closes the genus-degree formula.  In terms
of K^2 and c2:

    nu = m^2 K^2
    d = (3m^2 + m) K^2
    euler_r = -(3m + 1)(3m + 2) K^2
    c = (12m^2 + 9m + 2) K^2 - c2
    2n = euler_r + d^2 - 3d - 2c
    g = 1 - euler_r / 2

At m = 2 these reduce to d = 14 K^2, c = 68 K^2 - c2,
n = 98 (K^2)^2 - 117 K^2 + c2, and euler_r = -56 K^2.

All arithmetic is exact.  The only real-valued outputs are the three
multiplet-bound exponents, reported to 12 significant digits, or exactly
when the underlying root is an integer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import UsageError, ZfamError
from .spherical import RamificationStructure

__all__ = [
    "SurfaceInvariants",
    "surface_invariants",
    "BranchCurveInvariants",
    "branch_curve_invariants",
    "main_theorem_counts",
    "chisini_threshold",
    "chisini_ok",
    "BoundReport",
    "multiplet_bounds",
    "plurigenus_dimension",
    "twelve_significant",
]


def twelve_significant(value: float) -> float:
    return float(f"{value:.12g}")


@dataclass(frozen=True)
class SurfaceInvariants:
    """Chern and Hodge numbers of a quotient surface, validated on creation."""

    chi: int
    e: int
    ksq: int
    g1: int
    g2: int
    q: int
    order: int

    def __post_init__(self):
        if self.chi < 1:
            raise ZfamError(f"chi must be a positive integer, got {self.chi}")
        if self.e != 4 * self.chi or self.ksq != 8 * self.chi:
            raise ZfamError(f"(e, ksq) = ({self.e}, {self.ksq}) inconsistent with chi = {self.chi}")
        if self.chi * self.order != (self.g1 - 1) * (self.g2 - 1):
            raise ZfamError(
                f"chi * order = {self.chi * self.order} != (g1-1)(g2-1) = {(self.g1 - 1) * (self.g2 - 1)}"
            )
        if self.q != 0:
            raise ZfamError(f"irregularity must vanish, got {self.q}")
        if self.g1 < 2 or self.g2 < 2:
            raise ZfamError(f"curve genera must be >= 2, got ({self.g1}, {self.g2})")


def _branching_factor(tau: Sequence[int]) -> Fraction:
    return Fraction(-2) + sum(Fraction(m - 1, m) for m in tau)


def surface_invariants(structure: RamificationStructure) -> SurfaceInvariants:
    """Invariants of the quotient surface attached to a ramification structure.

    chi is computed twice, from the curve genera and from the types; any
    disagreement indicates a validator bug and fails hard.
    """
    order = structure.group.order
    chi_genera = Fraction((structure.g1 - 1) * (structure.g2 - 1), order)
    chi_types = (
        Fraction(order, 4)
        * _branching_factor(structure.t1.type)
        * _branching_factor(structure.t2.type)
    )
    if chi_genera != chi_types:
        raise ZfamError(f"chi mismatch: {chi_genera} from genera, {chi_types} from types")
    if chi_genera.denominator != 1:
        raise ZfamError(f"chi = {chi_genera} is not an integer")
    chi = int(chi_genera)
    return SurfaceInvariants(
        chi=chi,
        e=4 * chi,
        ksq=8 * chi,
        g1=structure.g1,
        g2=structure.g2,
        q=0,
        order=order,
    )


@dataclass(frozen=True)
class BranchCurveInvariants:
    """Degree, singularity counts, and genus of a plane branch curve."""

    m: int
    nu: int
    d: int
    n: int
    c: int
    g: int
    euler_r: int

    def __post_init__(self):
        if self.d < 1 or self.n < 0 or self.c < 0:
            raise ZfamError(f"(d, n, c) = ({self.d}, {self.n}, {self.c}) out of range")
        if self.g != (self.d - 1) * (self.d - 2) // 2 - self.n - self.c:
            raise ZfamError(f"genus {self.g} violates the genus-degree formula")
        if self.euler_r != 2 - 2 * self.g:
            raise ZfamError(f"euler_r = {self.euler_r} inconsistent with genus {self.g}")


def branch_curve_invariants(ksq: int, c2: int, m: int = 2) -> BranchCurveInvariants:
    """Branch curve of the generic plane projection of the m-canonical embedding."""
    if ksq <= 0:
        raise UsageError(f"ksq must be positive, got {ksq}")
    if m < 2:
        raise UsageError(f"pluricanonical level must be >= 2, got {m}")
    nu = m * m * ksq
    d = (3 * m * m + m) * ksq
    euler_r = -(3 * m + 1) * (3 * m + 2) * ksq
    c = (12 * m * m + 9 * m + 2) * ksq - c2
    if c < 0:
        raise UsageError(f"cusp count {c} is negative: (ksq, c2) = ({ksq}, {c2}) is not a valid Chern pair")
    two_n = euler_r + d * d - 3 * d - 2 * c
    if two_n % 2 != 0:
        raise UsageError(f"node count is not integral for (ksq, c2, m) = ({ksq}, {c2}, {m})")
    n = two_n // 2
    if n < 0:
        raise UsageError(f"node count {n} is negative: (ksq, c2) = ({ksq}, {c2}) is not a valid Chern pair")
    if euler_r % 2 != 0:
        raise UsageError(f"euler_r = {euler_r} is odd")
    return BranchCurveInvariants(m=m, nu=nu, d=d, n=n, c=c, g=1 - euler_r // 2, euler_r=euler_r)


def main_theorem_counts(d: int) -> tuple[int, int]:
    """Node and cusp counts d^2/2 - (233/28) d and (135/28) d for d = 0 mod 28."""
    if d <= 0 or d % 28 != 0:
        raise UsageError(f"degree must be a positive multiple of 28, got {d}")
    return d * d // 2 - 233 * d // 28, 135 * d // 28


def chisini_threshold(d: int, g: int, c: int) -> Fraction:
    """Degree bound 4(3d + g - 1) / (2(3d + g - 1) - c) above which the cover is unique."""
    t = 3 * d + g - 1
    denominator = 2 * t - c
    if denominator <= 0:
        raise UsageError(f"threshold undefined: 2(3d+g-1) - c = {denominator} is not positive")
    return Fraction(4 * t, denominator)


def chisini_ok(nu: int, d: int, g: int, c: int) -> bool:
    return nu > chisini_threshold(d, g, c)


@dataclass(frozen=True)
class BoundReport:
    """Multiplet cardinality bounds; log2 lower bounds and the log2 upper bound."""

    d: int
    n_d: int
    c_d: int
    log2_lower_thm_main: float | int
    log2_lower_eq15: float | int
    log2_upper_catanese: float | int


def _integer_root(n: int, k: int) -> int:
    """Largest r with r^k <= n, for n >= 0, k >= 1."""
    if n < 0 or k < 1:
        raise UsageError(f"root arguments out of range: ({n}, {k})")
    if n < 2 or k == 1:
        return n
    r = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        s = ((k - 1) * r + n // r ** (k - 1)) // k
        if s >= r:
            break
        r = s
    while r ** k > n:
        r -= 1
    return r


def _rational_power(base: int, exponent: Fraction) -> float | int:
    """base ** exponent, exact when the result is an integer, else 12 digits."""
    p, q = exponent.denominator, exponent.numerator
    lifted = base ** q
    root = _integer_root(lifted, p)
    if root ** p == lifted:
        return root
    return twelve_significant(math.exp(math.log(base) * q / p))


def multiplet_bounds(ksq: int, chi: int, epsilon: Fraction | int) -> BoundReport:
    """Lower and upper bounds on the number of deformation-inequivalent covers.

    The lower bounds are exponents of 2; the upper bound is the logarithm of
    the count of minimal surfaces with the given Chern pair.
    """
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise UsageError(f"epsilon must be positive, got {epsilon}")
    if ksq <= 0 or chi <= 0:
        raise UsageError(f"(ksq, chi) must be positive, got ({ksq}, {chi})")
    d = 14 * ksq
    n_d, c_d = main_theorem_counts(d)
    root = 1 / (2 + epsilon)
    # (8/14) d = 8 ksq exactly, since d = 14 ksq
    thm_main = _rational_power(8 * ksq, root)
    eq15 = _rational_power(chi, root)
    if ksq & (ksq - 1) == 0:
        catanese: float | int = 77 * ksq * ksq * (ksq.bit_length() - 1)
    else:
        catanese = twelve_significant(77 * float(ksq) ** 2 * math.log2(ksq))
    return BoundReport(
        d=d,
        n_d=n_d,
        c_d=c_d,
        log2_lower_thm_main=thm_main,
        log2_lower_eq15=eq15,
        log2_upper_catanese=catanese,
    )


def plurigenus_dimension(chi: int, ksq: int, m: int) -> int:
    """P_m = chi + m(m-1)/2 * ksq; the curve lives in projective space of dimension P_m - 1."""
    if m < 2:
        raise UsageError(f"pluricanonical level must be >= 2, got {m}")
    if chi <= 0 or ksq <= 0:
        raise UsageError(f"(chi, ksq) must be positive, got ({chi}, {ksq})")
    return chi + m * (m - 1) // 2 * ksq
