"""Truncated Laurent series in a formal variable eps over the rationals.

Used to evaluate Bethe vectors whose parameters coincide across neighbouring
colors: each coinciding copy is shifted by a multiple of eps, the computation
runs unchanged on series, and the constant term is read off at the end.
Precision is tracked exactly, so a result whose constant term is not
determined raises rather than returning a wrong number.
"""
from fractions import Fraction

INF = 1 << 30
ABS_PRECISION = 6


class Laurent:
    """``sum_k coeffs[k] eps^(val+k) + O(eps^prec)``."""

    __slots__ = ("val", "coeffs", "prec")

    def __init__(self, val, coeffs, prec=INF):
        coeffs = [Fraction(c) for c in coeffs]
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
            val += 1
        if prec < INF:
            coeffs = coeffs[:max(0, prec - val)]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.val = val if coeffs else prec
        self.coeffs = coeffs
        self.prec = prec

    @classmethod
    def const(cls, x):
        return cls(0, [x])

    @classmethod
    def eps(cls):
        return cls(1, [1])

    @staticmethod
    def _lift(x):
        if isinstance(x, Laurent):
            return x
        if isinstance(x, (int, Fraction)):
            return Laurent.const(x)
        return NotImplemented

    def _coef(self, e):
        k = e - self.val
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        prec = min(self.prec, other.prec)
        lo = min(self.val, other.val)
        hi = max(self.val + len(self.coeffs), other.val + len(other.coeffs))
        hi = min(hi, prec)
        if lo >= hi:
            return Laurent(prec, [], prec)
        return Laurent(lo, [self._coef(e) + other._coef(e) for e in range(lo, hi)], prec)

    __radd__ = __add__

    def __neg__(self):
        return Laurent(self.val, [-c for c in self.coeffs], self.prec)

    def __sub__(self, other):
        other = self._lift(other)
        return other if other is NotImplemented else self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        prec = min(self.prec + other.val, other.prec + self.val, ABS_PRECISION)
        val = self.val + other.val
        n = max(0, prec - val)
        out = [Fraction(0)] * min(n, len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if i + j >= len(out):
                    break
                out[i + j] += a * b
        return Laurent(val, out, prec)

    __rmul__ = __mul__

    def inverse(self):
        if not self.coeffs:
            raise ZeroDivisionError("inverse of a series with unknown leading term")
        v = self.val
        prec = min(self.prec - 2 * v, ABS_PRECISION)
        n = max(0, prec + v)
        b = self.coeffs
        c = [1 / b[0]]
        for k in range(1, n):
            s = sum((b[i] * c[k - i] for i in range(1, min(k, len(b) - 1) + 1)), Fraction(0))
            c.append(-s / b[0])
        return Laurent(-v, c[:n], prec)

    def __truediv__(self, other):
        other = self._lift(other)
        return other if other is NotImplemented else self * other.inverse()

    def __rtruediv__(self, other):
        other = self._lift(other)
        return other if other is NotImplemented else other * self.inverse()

    def __pow__(self, k):
        out = Laurent.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return False
        return (self.val, self.coeffs, self.prec) == (other.val, other.coeffs, other.prec)

    def __hash__(self):
        if self.prec == INF and self.val == 0 and len(self.coeffs) == 1:
            return hash(self.coeffs[0])
        return hash((self.val, tuple(self.coeffs), self.prec))

    def __bool__(self):
        return bool(self.coeffs) or self.prec < INF

    def constant_term(self) -> Fraction:
        """Value at eps = 0; raises if a pole survives or the term is undetermined."""
        if self.coeffs and self.val < 0:
            raise ArithmeticError(f"series has a pole of order {-self.val}")
        if self.prec <= 0:
            raise ArithmeticError("constant term lost to truncation")
        return self._coef(0)

    def __repr__(self):
        terms = " + ".join(f"{c}*e^{self.val + k}" for k, c in enumerate(self.coeffs) if c)
        return f"Laurent({terms or 0} + O(e^{self.prec}))" if self.prec < INF else f"Laurent({terms or 0})"


def as_number(x):
    """Fraction for plain rationals; series pass through untouched."""
    return x if isinstance(x, Laurent) else Fraction(x)
