"""Borel-Weil-Bott cohomology of line bundles L_lam on the full flag variety SL_{r+1}/B."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InputError
from .roots import (
    RankedRootSystem, Weight, dominant_conjugate, epsilon_coords, is_dominant,
    pairings,
)

__all__ = [
    "CohomologyResult", "bwb_cohomology", "bwb_degree", "weyl_dimension",
    "euler_characteristic",
]


@dataclass(frozen=True)
class CohomologyResult:
    """
    Cohomology of L_lam. Either everything vanishes (``degree is None``) or
    exactly one degree carries the irreducible module of ``highest_weight``.
    """
    rank: int
    degree: Optional[int] = None
    highest_weight: Optional[Weight] = None
    dimension: int = 0

    @property
    def vanishes(self) -> bool:
        return self.degree is None

    @property
    def top_degree(self) -> int:
        return RankedRootSystem(self.rank).num_positive_roots

    def h(self, i: int) -> int:
        """dim H^i(X, L_lam)."""
        return self.dimension if i == self.degree else 0

    def h_vector(self) -> list[int]:
        return [self.h(i) for i in range(self.top_degree + 1)]


def bwb_degree(lam: Weight) -> Optional[int]:
    """Nonvanishing degree of L_lam, or None when lam + rho is singular."""
    l = epsilon_coords(lam)
    n = len(l)
    # epsilon coords of rho are n-1, ..., 0; any constant shift is harmless
    return shifted_degree([x + n - k for k, x in enumerate(l)])


def shifted_degree(l: Sequence[int]) -> Optional[int]:
    """Degree for lam + rho given in epsilon coordinates: None on ties, else inversions."""
    n = len(l)
    if len(set(l)) != n:
        return None
    return sum(1 for a in range(n) for b in range(a + 1, n) if l[a] < l[b])


def bwb_cohomology(lam: Weight) -> CohomologyResult:
    """
    >>> bwb_cohomology(Weight((0, -3)))
    CohomologyResult(rank=2, degree=2, highest_weight=Weight(coords=(0, 0)), dimension=1)
    >>> bwb_cohomology(Weight((-1, 0))).vanishes
    True
    """
    rho = Weight.rho(lam.rank)
    found = dominant_conjugate(lam + rho)
    if found is None:
        return CohomologyResult(lam.rank)
    w, dom = found
    hw = dom - rho
    return CohomologyResult(lam.rank, w.length, hw, weyl_dimension(hw))


def _rho_product(r: int) -> int:
    # prod over (i, j) of <rho, alpha_ij^vee> = j - i
    out = 1
    for i, j in RankedRootSystem(r).positive_roots:
        out *= j - i
    return out


def _shifted_product(lam: Weight) -> int:
    out = 1
    for p in pairings(lam + Weight.rho(lam.rank)):
        out *= p
    return out


def weyl_dimension(mu: Weight) -> int:
    """
    Dimension of the irreducible SL_{r+1}-module of dominant highest weight mu.

    >>> weyl_dimension(Weight((1, 1)))
    8
    """
    if not is_dominant(mu):
        raise InputError(f"weyl_dimension needs a dominant weight, got {mu}")
    num = _shifted_product(mu)
    q, rem = divmod(num, _rho_product(mu.rank))
    assert rem == 0, (mu, num)
    return q


def euler_characteristic(lam: Weight) -> int:
    """Signed Weyl product; zero exactly when lam + rho is singular."""
    num = _shifted_product(lam)
    q, rem = divmod(num, _rho_product(lam.rank))
    assert rem == 0, (lam, num)
    return q
