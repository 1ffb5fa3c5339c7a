"""
q-ampleness of line bundles on SL_{r+1}/B.

The closed form counts positive roots pairing non-positively with lam: a
strictly negative pairing grows without bound under powers, and a zero
pairing lets a fixed twist push lam + nu + rho to the negative side of that
wall for every power. ``q_ample_index_oracle`` checks this against the
definition by scanning twists and powers through Borel-Weil-Bott.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .bwb import shifted_degree
from .errors import InputError
from .roots import Weight, dominant_conjugate, epsilon_coords, pairings, weight_grid

__all__ = [
    "ChamberRecord", "q_ample_index", "q_ample_index_oracle", "chamber_map",
    "ORACLE_BOX", "ORACLE_M_MIN", "ORACLE_M_MAX",
]

ORACLE_BOX = 3
ORACLE_M_MIN = 10
ORACLE_M_MAX = 30


def q_ample_index(lam: Weight) -> int:
    """
    Smallest q such that L_lam is q-ample.

    >>> q_ample_index(Weight((2, -1)))
    1
    >>> q_ample_index(Weight((0, 0)))
    3
    """
    return sum(1 for p in pairings(lam) if p <= 0)


def q_ample_index_oracle(lam: Weight, box_radius: int = ORACLE_BOX,
                         m_min: int = ORACLE_M_MIN, m_max: int = ORACLE_M_MAX) -> int:
    """
    Largest cohomological degree met by L_{m lam + nu}, over twists nu in
    [-box_radius, box_radius]^r and powers m_min <= m <= m_max.

    Pic(G/B) is the weight lattice, so line-bundle twists stand in for the
    locally free sheaves of the q-ampleness test. The scan range approximates
    "for all m large"; a degree seen at any m in the window counts.
    """
    if box_radius < 1:
        raise InputError(f"box_radius must be >= 1, got {box_radius}")
    if not 0 < m_min < m_max:
        raise InputError(f"need 0 < m_min < m_max, got m_min={m_min}, m_max={m_max}")
    l_lam = epsilon_coords(lam)
    n = len(l_lam)
    rho = [n - k for k in range(n)]
    top = n * (n - 1) // 2
    best = 0
    for nu in itertools.product(range(-box_radius, box_radius + 1), repeat=lam.rank):
        base = [a + b for a, b in zip(epsilon_coords(Weight(nu)), rho)]
        for m in range(m_min, m_max + 1):
            d = shifted_degree([m * a + b for a, b in zip(l_lam, base)])
            if d is not None and d > best:
                best = d
                if best == top:
                    return best
    return best


@dataclass(frozen=True)
class ChamberRecord:
    weight: Weight
    qmin: int
    regular: bool
    # length of w with weight in the interior of w(dominant chamber)
    weyl_length: Optional[int]


def chamber_record(lam: Weight) -> ChamberRecord:
    found = dominant_conjugate(lam)
    return ChamberRecord(
        weight=lam,
        qmin=q_ample_index(lam),
        regular=found is not None,
        weyl_length=None if found is None else found[0].length,
    )


def chamber_map(r: int, radius: int) -> list[ChamberRecord]:
    """One record per lattice point of [-radius, radius]^r, lexicographic order."""
    if radius < 1:
        raise InputError(f"range must be >= 1, got {radius}")
    return [chamber_record(lam) for lam in weight_grid(r, -radius, radius)]
