"""Exact rational scalars and seeded sampling of positive rationals.

Every scalar in the package is a :class:`fractions.Fraction`; identities are
compared with ``==``, never with a tolerance.
"""

from __future__ import annotations

import random
from fractions import Fraction

__all__ = [
    "Rational",
    "DomainError",
    "DEFAULT_BOUND",
    "as_rational",
    "rpow",
    "sample_positive",
    "trial_rng",
    "parse_rational",
    "format_rational",
]

Rational = Fraction

DEFAULT_BOUND = 20


class DomainError(ValueError):
    """An operation was evaluated outside the set where it is defined."""


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted as exact scalars")
    if isinstance(value, str):
        return parse_rational(value)
    return Fraction(value)


def rpow(r: Fraction, n: int) -> Fraction:
    """Exact integer power ``r**n``; a zero base with ``n < 0`` is a domain error."""
    if n < 0 and r == 0:
        raise DomainError("zero raised to a negative power")
    return Fraction(r) ** n


def sample_positive(rng: random.Random, bound: int = DEFAULT_BOUND) -> Fraction:
    """Draw ``p/q`` with ``p`` and ``q`` independent and uniform on ``[1, bound]``."""
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    p = rng.randint(1, bound)
    q = rng.randint(1, bound)
    return Fraction(p, q)


def trial_rng(seed: int, trial: int) -> random.Random:
    # string seeds hash deterministically across processes and platforms
    return random.Random(f"geomcrystal:{seed}:{trial}")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or ``"-p/q"``. Decimal and float syntax is rejected."""
    s = text.strip().replace("−", "-")
    num, sep, den = s.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not a rational literal: {text!r}") from None
    if d == 0:
        raise DomainError(f"zero denominator in {text!r}")
    return Fraction(n, d)


def format_rational(r: Fraction) -> str:
    return str(Fraction(r))
