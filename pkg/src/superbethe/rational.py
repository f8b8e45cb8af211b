"""Parsing, formatting and sampling of exact rationals."""
from fractions import Fraction
import random


def parse_rational(text) -> Fraction:
    """Accept an int, a Fraction, or a string of the form ``"p"`` or ``"p/q"``."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if isinstance(text, str):
        s = text.strip()
        num, _, den = s.partition("/")
        try:
            int(num)
            if den:
                int(den)
        except ValueError:
            raise ValueError(f"not a rational: {text!r}") from None
        return Fraction(s)
    raise ValueError(f"not a rational: {text!r}")


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def random_rational(rng: random.Random, span=20, max_den=7) -> Fraction:
    return Fraction(rng.randint(-span * max_den, span * max_den), rng.randint(1, max_den))


def generic_points(rng: random.Random, count, c, avoid=(), span=20, max_den=7):
    """Draw ``count`` rationals with no pair (among themselves and ``avoid``) at distance 0 or ``±c``."""
    taken = list(avoid)
    out = []
    bad = {Fraction(0), Fraction(c), -Fraction(c)}
    while len(out) < count:
        x = random_rational(rng, span, max_den)
        if any(x - y in bad for y in taken):
            continue
        taken.append(x)
        out.append(x)
    return out
