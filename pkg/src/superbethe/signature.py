"""Grading data of gl(m|n)."""
from dataclasses import dataclass


def _swap_sign(left_parity: int, right_parity: int) -> int:
    if left_parity not in (0, 1) or right_parity not in (0, 1):
        raise ValueError(f"parities must be bits, got {left_parity}, {right_parity}")
    return -1 if left_parity & right_parity else 1


@dataclass(frozen=True)
class AlgebraSignature:
    """The pair (m, n) of gl(m|n); indices ``1..m`` are even, ``m+1..m+n`` odd."""

    m: int
    n: int

    def __post_init__(self):
        for x in (self.m, self.n):
            if not isinstance(x, int) or isinstance(x, bool) or x < 0:
                raise ValueError(f"invalid signature ({self.m}, {self.n})")
        if self.m + self.n < 2:
            raise ValueError("m + n must be at least 2")

    @property
    def size(self) -> int:
        return self.m + self.n

    @property
    def N(self) -> int:
        """Number of colors, m + n - 1."""
        return self.m + self.n - 1

    def parity(self, i: int) -> int:
        if not 1 <= i <= self.size:
            raise ValueError(f"index {i} outside 1..{self.size}")
        return 0 if i <= self.m else 1

    def koszul_sign(self, left_parity: int, right_parity: int) -> int:
        return _swap_sign(left_parity, right_parity)

    def reversed(self) -> "AlgebraSignature":
        return AlgebraSignature(self.n, self.m)

    def __str__(self):
        return f"{self.m}|{self.n}"

    @classmethod
    def parse(cls, text: str) -> "AlgebraSignature":
        try:
            m, n = text.split("|")
            return cls(int(m), int(n))
        except (ValueError, AttributeError):
            raise ValueError(f"bad algebra {text!r}, expected 'm|n'") from None


def parity(sig: AlgebraSignature, i: int) -> int:
    return sig.parity(i)


def koszul_sign(sig: AlgebraSignature, left_parity: int, right_parity: int) -> int:
    """Sign picked up when two homogeneous objects swap places."""
    return sig.koszul_sign(left_parity, right_parity)
