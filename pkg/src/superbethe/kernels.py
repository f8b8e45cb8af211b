"""Rational kernels g, f, h, their graded variants, gamma and gamma-hat.

``g(u,v) = c/(u-v)``, ``f = 1 + g`` and ``h = f/g``.  A graded variant with
color index ``i`` replaces ``c`` by ``(-1)^[i] c``.  Products over sets are
double products over both arguments; an empty set gives 1.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import PoleError
from .signature import AlgebraSignature


class KernelKind(Enum):
    G = "g"
    F = "f"
    H = "h"
    GAMMA = "gamma"
    GAMMA_HAT = "gamma_hat"


@dataclass(frozen=True)
class KernelSpec:
    kind: KernelKind
    color_index: int | None = None

    def __post_init__(self):
        if self.kind in (KernelKind.GAMMA, KernelKind.GAMMA_HAT) and self.color_index is None:
            raise ValueError(f"{self.kind.value} needs a color index")


class Kernels:
    """Kernel evaluator bound to a signature and the constant ``c``."""

    def __init__(self, sig: AlgebraSignature, c):
        self.sig = sig
        self.c = Fraction(c)
        if self.c == 0:
            raise ValueError("c must be nonzero")

    def _coupling(self, i):
        if i is None:
            return self.c
        return -self.c if self.sig.parity(i) else self.c

    def _check_color(self, i):
        if not 1 <= i <= self.sig.N:
            raise ValueError(f"color {i} outside 1..{self.sig.N}")

    def g(self, u, v, i=None):
        if u == v:
            raise PoleError("g", u, v)
        return self._coupling(i) / (u - v)

    def f(self, u, v, i=None):
        if u == v:
            raise PoleError("f", u, v)
        return (u - v + self._coupling(i)) / (u - v)

    def h(self, u, v, i=None):
        ci = self._coupling(i)
        return (u - v + ci) / ci

    def gamma(self, i, u, v):
        self._check_color(i)
        val = self.f(u, v, i)
        if i == self.sig.m:
            den = self.h(u, v)
            if den == 0:
                raise PoleError("gamma", u, v)
            val /= den
        return val

    def gamma_hat(self, i, u, v):
        self._check_color(i)
        val = self.f(u, v, i + 1)
        if i == self.sig.m:
            den = self.h(v, u)
            if den == 0:
                raise PoleError("gamma_hat", u, v)
            val /= den
        return val

    def _prod(self, fn, A, B, *extra):
        out = Fraction(1)
        for a in A:
            for b in B:
                out *= fn(a, b, *extra)
        return out

    def g_set(self, A, B, i=None):
        return self._prod(self.g, A, B, i)

    def f_set(self, A, B, i=None):
        return self._prod(self.f, A, B, i)

    def h_set(self, A, B, i=None):
        return self._prod(self.h, A, B, i)

    def gamma_set(self, i, A, B):
        return self._prod(lambda a, b: self.gamma(i, a, b), A, B)

    def gamma_hat_set(self, i, A, B):
        return self._prod(lambda a, b: self.gamma_hat(i, a, b), A, B)

    def evaluate(self, spec: KernelSpec, u, v):
        k, i = spec.kind, spec.color_index
        if k is KernelKind.G:
            return self.g(u, v, i)
        if k is KernelKind.F:
            return self.f(u, v, i)
        if k is KernelKind.H:
            return self.h(u, v, i)
        if k is KernelKind.GAMMA:
            return self.gamma(i, u, v)
        return self.gamma_hat(i, u, v)


def eval_kernel(spec: KernelSpec, sig: AlgebraSignature, c, u, v) -> Fraction:
    return Kernels(sig, c).evaluate(spec, Fraction(u), Fraction(v))


def set_product(spec: KernelSpec, sig: AlgebraSignature, c, A, B) -> Fraction:
    """Product of the kernel over ``A x B``; a pole raises on the first offending pair in order."""
    kn = Kernels(sig, c)
    out = Fraction(1)
    for a in A:
        for b in B:
            out *= kn.evaluate(spec, Fraction(a), Fraction(b))
    return out
