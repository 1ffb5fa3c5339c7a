"""
Ampleness of smooth subvarieties Y of complex P^n from rational Betti numbers.

Y is ample exactly when H^i(P^n, Q) -> H^i(Y, Q) is an isomorphism for
0 <= i < dim Y. Below dim Y we compare Betti numbers with those of P^n
(1 in even degrees, 0 in odd). That is enough: in even degree 2k the map
sends h^k to the k-th power of the hyperplane class of Y, which is nonzero,
so a one-dimensional target makes it an isomorphism.

The Betti numbers are taken on trust; nothing here computes topology.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import InputError

__all__ = ["BettiProfile", "Verdict", "ampleness_verdict", "CORPUS"]


@dataclass(frozen=True)
class BettiProfile:
    ambient_n: int
    dim_y: int
    betti: tuple[int, ...]

    def __post_init__(self):
        betti = tuple(self.betti)
        object.__setattr__(self, "betti", betti)
        if self.ambient_n < 1:
            raise InputError(f"ambient dimension must be positive, got {self.ambient_n}")
        if not 1 <= self.dim_y <= self.ambient_n - 1:
            raise InputError(f"dim Y must lie in [1, {self.ambient_n - 1}], got {self.dim_y}")
        if len(betti) != self.dim_y:
            raise InputError(
                f"expected {self.dim_y} Betti numbers b_0..b_{self.dim_y - 1}, got {len(betti)}")
        if any(b < 0 for b in betti):
            raise InputError(f"Betti numbers must be non-negative: {betti}")
        if betti[0] < 1:
            raise InputError("b_0 must be at least 1 for a nonempty variety")


@dataclass(frozen=True)
class Verdict:
    ample: bool
    first_failing_degree: Optional[int] = None

    def __str__(self) -> str:
        if self.ample:
            return "Ample"
        return f"NotAmple@{self.first_failing_degree}"


def projective_betti(i: int) -> int:
    return 1 if i % 2 == 0 else 0


def ampleness_verdict(profile: BettiProfile, smooth: bool = True) -> Verdict:
    """
    >>> ampleness_verdict(BettiProfile(5, 3, (1, 0, 2)))
    Verdict(ample=False, first_failing_degree=2)
    """
    if not smooth:
        raise InputError("the Betti-number criterion only applies to smooth Y")
    for i, b in enumerate(profile.betti):
        if b != projective_betti(i):
            return Verdict(False, i)
    return Verdict(True)


# Named examples: (profile, expected verdict).
CORPUS: dict[str, tuple[BettiProfile, Verdict]] = {
    "connected-curve": (BettiProfile(3, 1, (1,)), Verdict(True)),
    "enriques-surface-p5": (BettiProfile(5, 2, (1, 0)), Verdict(True)),
    "skew-lines-p3": (BettiProfile(3, 1, (2,)), Verdict(False, 0)),
    "segre-p1xp2-p5": (BettiProfile(5, 3, (1, 0, 2)), Verdict(False, 2)),
}

