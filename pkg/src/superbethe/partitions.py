"""Families of Bethe parameters and the partition sums taken over them.

Subsets are always described by index positions into the parent list, so
every subset inherits the parent's order.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import comb
from typing import Iterator, Sequence

from .errors import ColoringMismatchError, EmptyColorError
from .rational import format_rational, parse_rational
from .signature import AlgebraSignature

Sets = tuple  # tuple of N tuples of Fraction


@dataclass(frozen=True)
class BetheFamily:
    sig: AlgebraSignature
    sets: Sets

    def __post_init__(self):
        sets = tuple(tuple(Fraction(x) for x in s) for s in self.sets)
        object.__setattr__(self, "sets", sets)
        if len(sets) != self.sig.N:
            raise ValueError(f"expected {self.sig.N} sets for gl({self.sig}), got {len(sets)}")
        for k, s in enumerate(sets, 1):
            if len(set(s)) != len(s):
                raise ValueError(f"repeated parameter in color {k}")

    @property
    def r(self) -> tuple:
        return tuple(len(s) for s in self.sets)

    def __getitem__(self, k):
        """Parameters of color ``k`` (1-based)."""
        return self.sets[k - 1]

    def reversed(self, sig=None) -> "BetheFamily":
        """Reverse the color order, optionally re-tagging with another signature."""
        return BetheFamily(sig or self.sig.reversed(), self.sets[::-1])

    def to_json(self):
        return {"sets": [[format_rational(x) for x in s] for s in self.sets]}

    @classmethod
    def from_json(cls, sig, data):
        if isinstance(data, dict):
            data = data["sets"]
        return cls(sig, tuple(tuple(parse_rational(x) for x in s) for s in data))

    @classmethod
    def empty(cls, sig):
        return cls(sig, ((),) * sig.N)


@dataclass(frozen=True)
class SingleSplitAssignment:
    """One chosen position per color in ``first..first+len(indices)-1``."""

    first: int
    indices: tuple

    def index(self, k):
        return self.indices[k - self.first]


@dataclass(frozen=True)
class BalancedSplitAssignment:
    """Per color, the positions forming the I-subsets of s and of t (equal sizes)."""

    s_I: tuple
    t_I: tuple


def split_by_index(seq: Sequence, chosen) -> tuple:
    """Return (I, II): the elements at positions ``chosen`` and the rest, both in order."""
    chosen = set(chosen) if not isinstance(chosen, int) else {chosen}
    I = tuple(x for p, x in enumerate(seq) if p in chosen)
    II = tuple(x for p, x in enumerate(seq) if p not in chosen)
    return I, II


def single_split_indices(sets: Sets, a: int, b: int) -> Iterator[tuple]:
    """Index tuples for colors a..b (1-based, inclusive); EmptyColorError if one is empty."""
    ranges = []
    for k in range(a, b + 1):
        if not sets[k - 1]:
            raise EmptyColorError(k)
        ranges.append(range(len(sets[k - 1])))
    return product(*ranges)


def enumerate_single_splits(family: BetheFamily, a: int, b: int) -> Iterator[SingleSplitAssignment]:
    # materialize eagerly so that the truncation signal fires on call
    return iter([SingleSplitAssignment(a, idx) for idx in single_split_indices(family.sets, a, b)])


def _subsets(n):
    for size in range(n + 1):
        yield from combinations(range(n), size)


def balanced_split_indices(s_sets: Sets, t_sets: Sets) -> Iterator[tuple]:
    """Yield (s_I, t_I) index tuples per color, balanced color by color."""
    if tuple(map(len, s_sets)) != tuple(map(len, t_sets)):
        raise ColoringMismatchError(f"colorings {tuple(map(len, s_sets))} and {tuple(map(len, t_sets))} differ")
    per_color = []
    for s in s_sets:
        n = len(s)
        per_color.append([(si, ti) for size in range(n + 1)
                          for si in combinations(range(n), size)
                          for ti in combinations(range(n), size)])
    for choice in product(*per_color):
        yield tuple(x[0] for x in choice), tuple(x[1] for x in choice)


def enumerate_balanced_splits(s_family: BetheFamily, t_family: BetheFamily) -> Iterator[BalancedSplitAssignment]:
    for s_I, t_I in balanced_split_indices(s_family.sets, t_family.sets):
        yield BalancedSplitAssignment(s_I, t_I)


def balanced_split_count(r: Sequence[int]) -> int:
    out = 1
    for k in r:
        out *= comb(2 * k, k)
    return out


def bipartitions(sets: Sets) -> Iterator[tuple]:
    """All ways of cutting every color into two ordered subsets: yields (first, second)."""
    per_color = [list(_subsets(len(s))) for s in sets]
    for choice in product(*per_color):
        first, second = zip(*(split_by_index(s, idx) for s, idx in zip(sets, choice))) if sets else ((), ())
        yield tuple(first), tuple(second)


def split_sets(sets: Sets, chosen_per_color) -> tuple:
    """Apply per-color index choices; returns (I-sets, II-sets)."""
    parts = [split_by_index(s, idx) for s, idx in zip(sets, chosen_per_color)]
    return tuple(p[0] for p in parts), tuple(p[1] for p in parts)
