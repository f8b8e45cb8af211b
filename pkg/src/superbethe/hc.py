"""Highest coefficient Z(s|t) of the scalar product.

Two independent recursions are provided.  ``REC_S1`` removes one parameter
from the lowest nonempty color of ``s``; ``REC_TN`` removes one parameter from
the highest nonempty color of ``t``.  Empty colors at the bottom or the top
shrink the effective algebra, which is tracked only through the active color
range, so every kernel keeps its absolute color index.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .errors import ColoringMismatchError, EmptyColorError
from .kernels import Kernels
from .partitions import BetheFamily, single_split_indices
from .signature import AlgebraSignature


class HcRoute(Enum):
    REC_S1 = "low"
    REC_TN = "high"


def _without(seq, pos):
    return seq[:pos] + seq[pos + 1:]


class HighestCoefficient:
    """Memoized evaluator for one signature and constant ``c``."""

    def __init__(self, sig: AlgebraSignature, c):
        self.sig = sig
        self.kn = Kernels(sig, c)
        self._memo = {}

    def __call__(self, s, t, route=HcRoute.REC_S1, pick=0):
        if tuple(map(len, s)) != tuple(map(len, t)):
            raise ColoringMismatchError("highest coefficient needs equal colorings")
        key = (s, t, route, pick)
        if key not in self._memo:
            active = [k for k in range(1, self.sig.N + 1) if s[k - 1]]
            if not active:
                val = Fraction(1)
            elif route is HcRoute.REC_S1:
                val = self._low(s, t, active[0], pick)
            else:
                val = self._high(s, t, active[-1], pick)
            self._memo[key] = val
        return self._memo[key]

    def _dm(self, k):
        return 1 if k == self.sig.m else 0

    def _low(self, s, t, a, pick):
        kn, N = self.kn, self.sig.N
        sa = s[a - 1]
        sI, sII = sa[pick], _without(sa, pick)
        head = kn.h_set(sa, [sI]) ** self._dm(a)
        total = Fraction(0)
        for p in range(a + 1, N + 2):
            try:
                s_choices = list(single_split_indices(s, a + 1, p - 1))
            except EmptyColorError:
                break
            t_choices = list(single_split_indices(t, a, p - 1))
            for s_idx in s_choices:
                s_new = list(s)
                s_new[a - 1] = sII
                s_single = {a: sI}
                for nu, pos in zip(range(a + 1, p), s_idx):
                    s_single[nu] = s[nu - 1][pos]
                    s_new[nu - 1] = _without(s[nu - 1], pos)
                s_tail = kn.f_set(s[p - 1], [s_single[p - 1]], p) if p <= N else Fraction(1)
                for t_idx in t_choices:
                    t_new = list(t)
                    t_single = {}
                    for nu, pos in zip(range(a, p), t_idx):
                        t_single[nu] = t[nu - 1][pos]
                        t_new[nu - 1] = _without(t[nu - 1], pos)
                    tI = t_single[a]
                    w = kn.g(tI, sI, a + 1) * kn.gamma_set(a, [tI], t_new[a - 1]) \
                        * kn.f_set(t_new[a - 1], [sI], a) / (s_tail * head)
                    for nu in range(a + 1, p):
                        w *= kn.g(s_single[nu], s_single[nu - 1], nu) * kn.g(t_single[nu], t_single[nu - 1], nu + 1) \
                            * kn.gamma_set(nu, s_new[nu - 1], [s_single[nu]]) \
                            * kn.gamma_set(nu, [t_single[nu]], t_new[nu - 1])
                        w /= kn.f_set(s[nu - 1], [s_single[nu - 1]], nu) * kn.f_set([t_single[nu]], t[nu - 2], nu)
                    if w:
                        total += w * self(tuple(s_new), tuple(t_new), HcRoute.REC_S1)
        return total

    def _high(self, s, t, b, pick):
        kn = self.kn
        tb = t[b - 1]
        tI, tII = tb[pick], _without(tb, pick)
        head = kn.h_set(tb, [tI]) ** self._dm(b)
        total = Fraction(0)
        for p in range(b, 0, -1):
            try:
                t_choices = list(single_split_indices(t, p, b - 1))
            except EmptyColorError:
                break
            s_choices = list(single_split_indices(s, p, b))
            for t_idx in t_choices:
                t_new = list(t)
                t_new[b - 1] = tII
                t_single = {b: tI}
                for nu, pos in zip(range(p, b), t_idx):
                    t_single[nu] = t[nu - 1][pos]
                    t_new[nu - 1] = _without(t[nu - 1], pos)
                t_tail = kn.f_set([t_single[p]], t[p - 2], p) if p > 1 else Fraction(1)
                for s_idx in s_choices:
                    s_new = list(s)
                    s_single = {}
                    for nu, pos in zip(range(p, b + 1), s_idx):
                        s_single[nu] = s[nu - 1][pos]
                        s_new[nu - 1] = _without(s[nu - 1], pos)
                    sI = s_single[b]
                    w = kn.g(tI, sI, b + 1) * kn.gamma_hat_set(b, s_new[b - 1], [sI]) \
                        * kn.f_set([tI], s_new[b - 1], b + 1) / (t_tail * head)
                    for nu in range(p, b):
                        w *= kn.g(s_single[nu + 1], s_single[nu], nu + 1) * kn.g(t_single[nu + 1], t_single[nu], nu + 1) \
                            * kn.gamma_hat_set(nu, s_new[nu - 1], [s_single[nu]]) \
                            * kn.gamma_hat_set(nu, [t_single[nu]], t_new[nu - 1])
                        w /= kn.f_set(s[nu], [s_single[nu]], nu + 1) * kn.f_set([t_single[nu + 1]], t[nu - 1], nu + 1)
                    if w:
                        total += w * self(tuple(s_new), tuple(t_new), HcRoute.REC_TN)
        return total


@lru_cache(maxsize=32)
def _evaluator(sig, c):
    return HighestCoefficient(sig, c)


def _sets(family, sig):
    if isinstance(family, BetheFamily):
        if family.sig != sig:
            raise ValueError("family signature differs from the requested one")
        return family.sets
    return BetheFamily(sig, family).sets


def hc(sig, c, s_family, t_family, route=HcRoute.REC_S1, pick=0) -> Fraction:
    """Highest coefficient ``Z(s|t)``; ``pick`` selects which element the first step removes."""
    route = route if isinstance(route, HcRoute) else HcRoute(route)
    return _evaluator(sig, Fraction(c))(_sets(s_family, sig), _sets(t_family, sig), route, pick)


def hc_conjugate(sig, c, s_family, t_family, route=HcRoute.REC_S1) -> Fraction:
    """``Zbar(s|t) = Z(t|s)``."""
    return hc(sig, c, t_family, s_family, route)


@dataclass
class SymmetryReport:
    lhs: Fraction
    rhs: Fraction

    @property
    def ok(self):
        return self.lhs == self.rhs


def hc_symmetry_check(sig, c, s_family, t_family, route=HcRoute.REC_S1) -> SymmetryReport:
    """Compare ``Z^{m|n}(s|t)`` with ``(-1)^{r_m} Z^{n|m}`` of the color-reversed, swapped families."""
    s, t = _sets(s_family, sig), _sets(t_family, sig)
    rsig = sig.reversed()
    r_m = len(t[sig.m - 1]) if 1 <= sig.m <= sig.N else 0
    lhs = hc(sig, c, s, t, route)
    rhs = (-1) ** r_m * hc(rsig, c, t[::-1], s[::-1], route)
    return SymmetryReport(lhs, rhs)
