"""Numerical invariants of surfaces under iterated double covers.

A rank-r collection of commuting double covers of a smooth surface Y,
branched on m disjoint nodal curves (-2-curves), produces a smooth cover Z.
The preimage of each branch curve is 2^(r-1) disjoint (-1)-curves, and
blowing all of them down gives a second smooth surface Zbar.  The Chern and
Euler invariants of both are determined by (chi(Y), K_Y^2, c_2(Y), r, m):

    c_2(Z)    = 2^r c_2(Y) - m 2^r
    K_Z^2     = 2^r K_Y^2  - m 2^(r-1)
    K_Zbar^2  = 2^r K_Y^2
    chi(Z)    = chi(Zbar) = 2^r chi(Y) - m 2^(r-3)

chi is computed as an exact rational and must come out integral, which for
r = 1 forces m = 0 mod 4 and for r = 2 forces m even; from r = 3 on every m
is allowed.  The Kodaira dimension is unchanged by an etale-in-codimension-1
cover, so it is copied from Y to both outputs.

The module also carries the standalone numerical bounds used by the
classification routines: the minimum number of branch curves supporting a
rank-r code, the isotropic-subspace bound, the Miyaoka node bound, and the
node count of a double cover forced by its chi drop.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil
from typing import Optional, Tuple

KODAIRA = ("minus_infinity", "zero", "one", "two", "unknown")

__all__ = [
    "KODAIRA",
    "SurfaceInvariants",
    "CoverSpec",
    "CoverResult",
    "NodeBound",
    "cover_invariants",
    "double_cover_nodes",
    "min_m_for_r",
    "isotropic_bound",
    "miyaoka_max_nodes",
    "picard_after_contraction",
]


@dataclass(frozen=True)
class SurfaceInvariants:
    """Chern/Hodge numbers of a smooth projective surface.

    Unknown entries are None.  c2 may be omitted, in which case it is filled
    in from the Noether formula 12 chi = K2 + c2.
    """

    chi: int
    K2: int
    c2: Optional[int] = None
    rho: Optional[int] = None
    pg: Optional[int] = None
    q: Optional[int] = None
    kodaira: str = "unknown"

    def __post_init__(self) -> None:
        if self.kodaira not in KODAIRA:
            raise ValueError(f"unknown kodaira tag: {self.kodaira!r}")
        if self.c2 is None:
            object.__setattr__(self, "c2", 12 * self.chi - self.K2)
        if 12 * self.chi != self.K2 + self.c2:
            raise ValueError(
                f"Noether fails: 12*{self.chi} != {self.K2} + {self.c2}"
            )
        if self.pg is not None and self.q is not None:
            if self.chi != 1 + self.pg - self.q:
                raise ValueError(
                    f"chi = {self.chi} inconsistent with pg = {self.pg}, "
                    f"q = {self.q}"
                )
        if (
            self.rho is not None
            and self.pg == 0
            and self.q == 0
            and self.c2 != self.rho + 2
        ):
            raise ValueError(
                f"with pg = q = 0, c2 must be rho + 2; got c2 = {self.c2}, "
                f"rho = {self.rho}"
            )

    def as_dict(self) -> dict:
        return {
            "chi": self.chi,
            "K2": self.K2,
            "c2": self.c2,
            "rho": self.rho,
            "pg": self.pg,
            "q": self.q,
            "kodaira": self.kodaira,
        }


@dataclass(frozen=True)
class CoverSpec:
    """Rank of the cover group (2^r sheets) and number of branch nodal curves."""

    r: int
    m: int

    def __post_init__(self) -> None:
        if self.r < 0:
            raise ValueError(f"r must be non-negative: {self.r}")
        if self.m < 0:
            raise ValueError(f"m must be non-negative: {self.m}")
        if self.m == 0 and self.r > 0:
            raise ValueError("a positive-rank cover needs branch curves")


@dataclass(frozen=True)
class CoverResult:
    cover: SurfaceInvariants       # the smooth cover Z
    contracted: SurfaceInvariants  # Zbar, branch-curve preimages blown down
    blowdowns: int                 # number of (-1)-curves contracted, m 2^(r-1)
    warnings: Tuple[str, ...] = field(default_factory=tuple)


def cover_invariants(y: SurfaceInvariants, spec: CoverSpec) -> CoverResult:
    """Invariants of the smooth cover Z and of the blown-down model Zbar.

    Raises ValueError when chi would not be integral (impossible (r, m)
    combination).  A warning is attached when the result is numerically
    ruled out for the stated Kodaira dimension.
    """
    r, m = spec.r, spec.m
    chi = 2 ** r * y.chi - Fraction(m * 2 ** r, 8)
    if chi.denominator != 1:
        raise ValueError(
            f"chi = {chi} is not integral: r = {r} requires m "
            f"{'divisible by 4' if r == 1 else 'even' if r == 2 else 'integral'}"
        )
    chi = int(chi)
    k2_cover = 2 ** r * y.K2 - (m * 2 ** (r - 1) if r else 0)
    c2_cover = 2 ** r * y.c2 - m * 2 ** r
    k2_down = 2 ** r * y.K2

    warnings = []
    if y.kodaira == "minus_infinity" and chi > 1:
        warnings.append(
            f"chi = {chi} > 1 is impossible for a surface dominated by a "
            "ruled one; no such cover exists"
        )

    cover = SurfaceInvariants(
        chi=chi, K2=k2_cover, c2=c2_cover, kodaira=y.kodaira
    )
    contracted = SurfaceInvariants(
        chi=chi, K2=k2_down, c2=12 * chi - k2_down, kodaira=y.kodaira
    )
    return CoverResult(
        cover=cover,
        contracted=contracted,
        blowdowns=m * 2 ** (r - 1) if r else 0,
        warnings=tuple(warnings),
    )


def double_cover_nodes(chi_cover: int, chi_quotient: int) -> int:
    """Nodes on the branch locus of a double cover, from the chi drop.

    For a double cover branched on s nodes, chi(cover) = 2 chi(quotient)
    - s/4, so s = 4 (2 chi(quotient) - chi(cover)).
    """
    s = 4 * (2 * chi_quotient - chi_cover)
    if s < 0:
        raise ValueError(
            f"negative node count {s} from chi = {chi_cover}, "
            f"quotient chi = {chi_quotient}"
        )
    return s


def min_m_for_r(r: int) -> int:
    """Least number of branch curves admitting a rank-r cover code.

    chi of the nodal cover of a chi = 1 surface is 2^r - m 2^(r-3) >= 1,
    whence m >= 8 (2^r - 1) / 2^r; the bound is 7 at r = 3 and 8 from
    r = 4 on.
    """
    if r < 1:
        raise ValueError(f"r must be positive: {r}")
    return ceil(Fraction(8 * (2 ** r - 1), 2 ** r))


def isotropic_bound(k: int, rho: int) -> int:
    """Lower bound on the code rank forced by k classes in a rank-rho space.

    An isotropic subspace of a nondegenerate quadratic space of rank rho has
    dimension at most rho // 2, and the k nodal classes are independent
    modulo the code, so r >= k - rho // 2.
    """
    if k < 0:
        raise ValueError(f"k must be non-negative: {k}")
    if rho < 1:
        raise ValueError(f"rho must be positive: {rho}")
    return max(0, k - rho // 2)


@dataclass(frozen=True)
class NodeBound:
    max_nodes: int
    assumptions: Tuple[str, ...]


def miyaoka_max_nodes(K2: int, c2: int) -> NodeBound:
    """Miyaoka bound: a minimal surface of non-negative Kodaira dimension
    with the given Chern numbers carries at most 2(3 c2 - K2)/9 nodes."""
    bound = (2 * (3 * c2 - K2)) // 9
    return NodeBound(
        max_nodes=bound,
        assumptions=(
            "surface is minimal",
            "kodaira dimension is non-negative",
        ),
    )


def picard_after_contraction(rho: int, n: int) -> int:
    """Picard number after contracting n disjoint (-1)- or (-2)-classes."""
    if n < 0:
        raise ValueError(f"n must be non-negative: {n}")
    out = rho - n
    if out < 1:
        raise ValueError(
            f"contracting {n} classes from rho = {rho} leaves rank {out} < 1"
        )
    return out
