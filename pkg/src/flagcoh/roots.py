"""
Type A_r root system, weights and the Weyl group S_{r+1}.

Weights are integer vectors in the fundamental-weight basis. Pairings are
coroot pairings, so for a positive root (i, j) with i < j

    <lam, alpha_ij^vee> = lam_i + lam_{i+1} + ... + lam_{j-1}.

The Weyl action goes through epsilon coordinates: l_{r+1} = 0 and
l_i - l_{i+1} = lam_i. A permutation w sends l to the vector m with
m[w(i)] = l[i]; translating l by a constant does not change the weight.

>>> lam = Weight((0, -3))
>>> w = simple_reflection(2, 1) * simple_reflection(2, 2)
>>> dot_action(w, lam)
Weight(coords=(0, 0))
"""

from __future__ import annotations

import itertools
import operator
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

from .errors import CapacityError, InputError

__all__ = [
    "MAX_RANK", "MAX_ENUMERATION_RANK", "RankedRootSystem", "Weight",
    "WeylElement", "pairing", "pairings", "apply", "dot_action",
    "dominant_conjugate", "enumerate_weyl_group", "simple_reflection",
    "longest_element", "identity", "is_dominant", "is_strictly_dominant",
    "is_regular", "epsilon_coords", "from_epsilon", "weight_grid",
]

# closed-form operations
MAX_RANK = 32
# explicit enumeration of W(A_r), |W| = (r+1)!
MAX_ENUMERATION_RANK = 7


def _check_rank(r: int, cap: int = MAX_RANK) -> int:
    try:
        r = operator.index(r)
    except TypeError:
        raise InputError(f"rank must be an integer, got {r!r}") from None
    if r < 1:
        raise InputError(f"rank must be positive, got {r}")
    if r > cap:
        raise CapacityError(f"rank {r} exceeds cap {cap}")
    return r


@dataclass(frozen=True)
class RankedRootSystem:
    """Positive roots of A_r as index pairs (i, j), 1 <= i < j <= r+1."""
    rank: int

    def __post_init__(self):
        object.__setattr__(self, "rank", _check_rank(self.rank))

    @cached_property
    def positive_roots(self) -> tuple[tuple[int, int], ...]:
        n = self.rank + 1
        return tuple(itertools.combinations(range(1, n + 1), 2))

    @property
    def num_positive_roots(self) -> int:
        # also dim G/B
        return self.rank * (self.rank + 1) // 2

    @property
    def simple_roots(self) -> tuple[tuple[int, int], ...]:
        return tuple((i, i + 1) for i in range(1, self.rank + 1))

    def rho(self) -> Weight:
        return Weight.rho(self.rank)


@dataclass(frozen=True)
class Weight:
    """Integer weight in the fundamental-weight basis; also an element of Pic(G/B)."""
    coords: tuple[int, ...]

    def __post_init__(self):
        try:
            coords = tuple(operator.index(c) for c in self.coords)
        except TypeError:
            raise InputError(f"weight coordinates must be integers: {self.coords!r}") from None
        _check_rank(len(coords))
        object.__setattr__(self, "coords", coords)

    @classmethod
    def zero(cls, r: int) -> Weight:
        return cls((0,) * _check_rank(r))

    @classmethod
    def rho(cls, r: int) -> Weight:
        return cls((1,) * _check_rank(r))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, k):
        return self.coords[k]

    def _other(self, other) -> tuple[int, ...]:
        if not isinstance(other, Weight):
            return NotImplemented
        if other.rank != self.rank:
            raise InputError(f"rank mismatch: {self.rank} vs {other.rank}")
        return other.coords

    def __add__(self, other: Weight) -> Weight:
        oc = self._other(other)
        if oc is NotImplemented:
            return NotImplemented
        return Weight(tuple(a + b for a, b in zip(self.coords, oc)))

    def __sub__(self, other: Weight) -> Weight:
        oc = self._other(other)
        if oc is NotImplemented:
            return NotImplemented
        return Weight(tuple(a - b for a, b in zip(self.coords, oc)))

    def __neg__(self) -> Weight:
        return Weight(tuple(-a for a in self.coords))

    def __mul__(self, k: int) -> Weight:
        try:
            k = operator.index(k)
        except TypeError:
            return NotImplemented
        return Weight(tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


def _perm_inversions(perm: Sequence[int]) -> int:
    n = len(perm)
    return sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])


@dataclass(frozen=True)
class WeylElement:
    """
    Permutation of {1..r+1} in one-line notation: perm[i-1] = w(i).

    Multiplication is composition, (u * v)(i) = u(v(i)), so
    apply(u * v, lam) == apply(u, apply(v, lam)).
    """
    perm: tuple[int, ...]

    def __post_init__(self):
        try:
            perm = tuple(operator.index(p) for p in self.perm)
        except TypeError:
            raise InputError(f"permutation entries must be integers: {self.perm!r}") from None
        if sorted(perm) != list(range(1, len(perm) + 1)):
            raise InputError(f"not a permutation of 1..{len(perm)}: {perm}")
        _check_rank(len(perm) - 1)
        object.__setattr__(self, "perm", perm)

    @property
    def rank(self) -> int:
        return len(self.perm) - 1

    @cached_property
    def length(self) -> int:
        return _perm_inversions(self.perm)

    def __call__(self, i: int) -> int:
        return self.perm[i - 1]

    def __mul__(self, other: WeylElement) -> WeylElement:
        if not isinstance(other, WeylElement):
            return NotImplemented
        if other.rank != self.rank:
            raise InputError(f"rank mismatch: {self.rank} vs {other.rank}")
        return WeylElement(tuple(self.perm[p - 1] for p in other.perm))

    def inverse(self) -> WeylElement:
        inv = [0] * len(self.perm)
        for i, p in enumerate(self.perm, start=1):
            inv[p - 1] = i
        return WeylElement(tuple(inv))

    def is_identity(self) -> bool:
        return all(p == i for i, p in enumerate(self.perm, start=1))


def identity(r: int) -> WeylElement:
    return WeylElement(tuple(range(1, _check_rank(r) + 2)))


def simple_reflection(r: int, i: int) -> WeylElement:
    """The transposition s_i = (i, i+1), 1 <= i <= r."""
    r = _check_rank(r)
    if not 1 <= i <= r:
        raise InputError(f"simple reflection index {i} out of range 1..{r}")
    perm = list(range(1, r + 2))
    perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return WeylElement(tuple(perm))


def longest_element(r: int) -> WeylElement:
    return WeylElement(tuple(range(_check_rank(r) + 1, 0, -1)))


def _check_root(r: int, root: tuple[int, int]) -> tuple[int, int]:
    try:
        i, j = (operator.index(x) for x in root)
    except (TypeError, ValueError):
        raise InputError(f"root must be an index pair (i, j), got {root!r}") from None
    if not 1 <= i < j <= r + 1:
        raise InputError(f"root ({i}, {j}) needs 1 <= i < j <= {r + 1}")
    return i, j


def pairing(lam: Weight, root: tuple[int, int]) -> int:
    """
    Coroot pairing <lam, alpha_ij^vee>.

    >>> pairing(Weight((2, -1)), (1, 3))
    1
    """
    i, j = _check_root(lam.rank, root)
    return sum(lam.coords[i - 1:j - 1])


def pairings(lam: Weight) -> list[int]:
    """All positive-root pairings, roots in lexicographic order."""
    l = epsilon_coords(lam)
    n = len(l)
    return [l[a] - l[b] for a in range(n) for b in range(a + 1, n)]


def epsilon_coords(lam: Weight) -> list[int]:
    """(l_1, ..., l_{r+1}) with l_{r+1} = 0 and l_i - l_{i+1} = lam_i."""
    l = [0] * (lam.rank + 1)
    for k in range(lam.rank - 1, -1, -1):
        l[k] = l[k + 1] + lam.coords[k]
    return l


def from_epsilon(l: Sequence[int]) -> Weight:
    return Weight(tuple(l[k] - l[k + 1] for k in range(len(l) - 1)))


def _same_rank(w: WeylElement, lam: Weight) -> None:
    if w.rank != lam.rank:
        raise InputError(f"rank mismatch: Weyl element of rank {w.rank}, weight of rank {lam.rank}")


def apply(w: WeylElement, lam: Weight) -> Weight:
    """
    Linear Weyl action.

    >>> apply(simple_reflection(2, 1), Weight((-1, 2)))
    Weight(coords=(1, 1))
    """
    _same_rank(w, lam)
    l = epsilon_coords(lam)
    m = [0] * len(l)
    for i, p in enumerate(w.perm):
        m[p - 1] = l[i]
    return from_epsilon(m)


def dot_action(w: WeylElement, lam: Weight) -> Weight:
    """w . lam = w(lam + rho) - rho."""
    _same_rank(w, lam)
    rho = Weight.rho(lam.rank)
    return apply(w, lam + rho) - rho


def dominant_conjugate(mu: Weight) -> Optional[tuple[WeylElement, Weight]]:
    """
    Return (w, w(mu)) with w(mu) strictly dominant, or None if mu is singular.

    w is the permutation sorting the epsilon coordinates into strictly
    decreasing order. Its length is the number of positive roots pairing
    negatively with mu. Ties mean a zero pairing, hence singular.

    >>> w, dom = dominant_conjugate(Weight((1, -2)))
    >>> w.perm, w.length, dom
    ((2, 3, 1), 2, Weight(coords=(1, 1)))
    >>> dominant_conjugate(Weight((0, 1))) is None
    True
    """
    l = epsilon_coords(mu)
    order = sorted(range(len(l)), key=lambda k: -l[k])
    if any(l[order[k]] == l[order[k + 1]] for k in range(len(order) - 1)):
        return None
    perm = [0] * len(l)
    for pos, k in enumerate(order, start=1):
        perm[k] = pos
    w = WeylElement(tuple(perm))
    return w, from_epsilon([l[k] for k in order])


def enumerate_weyl_group(r: int) -> list[WeylElement]:
    """All (r+1)! elements of W(A_r), in lexicographic order of one-line notation."""
    r = _check_rank(r, MAX_ENUMERATION_RANK)
    return [WeylElement(p) for p in itertools.permutations(range(1, r + 2))]


def is_dominant(lam: Weight) -> bool:
    return all(c >= 0 for c in lam.coords)


def is_strictly_dominant(lam: Weight) -> bool:
    return all(c > 0 for c in lam.coords)


def is_regular(lam: Weight) -> bool:
    """No positive root pairs to zero with lam."""
    l = epsilon_coords(lam)
    return len(set(l)) == len(l)


def weight_grid(r: int, lo: int, hi: int) -> Iterable[Weight]:
    """All weights in [lo, hi]^r, lexicographic."""
    r = _check_rank(r)
    for c in itertools.product(range(lo, hi + 1), repeat=r):
        yield Weight(c)
