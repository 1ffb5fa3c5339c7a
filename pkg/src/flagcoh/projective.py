"""Cohomology of O(d) on P^n and the q-ampleness of O(d)."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InputError

__all__ = ["TwistSpec", "binom", "binom_poly", "bott_h", "bott_vector", "pn_q_ample_index"]


@dataclass(frozen=True)
class TwistSpec:
    n: int
    d: int

    def __post_init__(self):
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise InputError(f"ambient dimension n must be a positive integer, got {self.n!r}")
        if not isinstance(self.d, int) or isinstance(self.d, bool):
            raise InputError(f"twist d must be an integer, got {self.d!r}")


def binom(a: int, k: int) -> int:
    """C(a, k) for a >= 0; zero when a < k."""
    if a < 0 or k < 0:
        raise InputError(f"binom needs a, k >= 0, got ({a}, {k})")
    return math.comb(a, k)


def binom_poly(a: int, k: int) -> int:
    """a(a-1)...(a-k+1)/k!, valid for every integer a."""
    num = 1
    for t in range(k):
        num *= a - t
    return num // math.factorial(k)


def bott_h(spec: TwistSpec, i: int) -> int:
    """
    dim H^i(P^n, O(d)).

    >>> bott_h(TwistSpec(3, 2), 0)
    10
    >>> bott_h(TwistSpec(3, -4), 3)
    1
    """
    n, d = spec.n, spec.d
    if not 0 <= i <= n:
        raise InputError(f"degree i={i} out of range 0..{n}")
    if i == 0 and d >= 0:
        return binom(n + d, n)
    if i == n and d <= -n - 1:
        return binom(-d - 1, n)
    return 0


def bott_vector(spec: TwistSpec) -> list[int]:
    return [bott_h(spec, i) for i in range(spec.n + 1)]


def pn_q_ample_index(spec: TwistSpec) -> int:
    # d <= 0: h^n(O(md) (x) O(-n-1)) != 0 for every m, so nothing below n works
    return 0 if spec.d > 0 else spec.n
