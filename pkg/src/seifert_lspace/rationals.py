"""Exact slope arithmetic: rationals, a single point at infinity, sorted triples.

Every number in this package is an exact ``fractions.Fraction``; nothing is
ever rounded and integers are arbitrary precision.  The slope of a degenerate
fiber is the single value ``INF`` -- the inputs 1/0 and -1/0 deliberately
collapse to the same point, since the classification of a space containing a
degenerate fiber does not depend on that sign.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction


class _Infinity:
    """The infinite slope (and the order of an infinite first homology)."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"


INF = _Infinity()

ExtRational = Fraction | _Infinity


def is_finite(x) -> bool:
    return not isinstance(x, _Infinity)


def make_rational(num: int, den: int = 1) -> Fraction:
    """Reduced fraction with positive denominator.

    A zero denominator is rejected: the infinite slope must be passed
    explicitly as ``INF``.
    """
    if den == 0:
        raise ZeroDivisionError("denominator is zero; use INF for an infinite slope")
    return Fraction(num, den)


def sorted_triple(a, b, c) -> tuple:
    """The three values in nondecreasing order."""
    return tuple(sorted((a, b, c)))


def triple_lt(x, y) -> bool:
    """Strict componentwise order on sorted triples: x_i < y_i in every slot."""
    return x[0] < y[0] and x[1] < y[1] and x[2] < y[2]


def triple_le(x, y) -> bool:
    return x[0] <= y[0] and x[1] <= y[1] and x[2] <= y[2]


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """The unique fraction of minimal denominator in the open interval (lo, hi).

    Stern-Brocot / continued-fraction descent.  Requires lo < hi and lo >= 0.
    """
    if lo >= hi:
        raise ValueError(f"empty interval ({lo}, {hi})")
    if lo < 0:
        raise ValueError("negative endpoints are not needed here")
    n = math.floor(lo) + 1
    if n < hi:
        return Fraction(n)
    f = math.floor(lo)
    a = hi - f  # 0 < a <= 1
    b = lo - f  # 0 <= b < a
    if b == 0:
        # interval is (f, f + a): take f + 1/y with the smallest integer y > 1/a
        return f + Fraction(1, math.floor(1 / a) + 1)
    return f + 1 / simplest_between(1 / a, 1 / b)


_RAT_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``-?d+`` or ``-?d+/d+`` into a reduced fraction."""
    m = _RAT_RE.match(text.strip())
    if not m or m.group(2) == "0":
        raise ValueError(f"not a finite rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    return Fraction(num, den)


def parse_slope(text: str) -> ExtRational:
    """Like parse_rational, but 'inf' and nonzero/0 both give INF."""
    s = text.strip()
    if s == "inf":
        return INF
    m = _RAT_RE.match(s)
    if m and m.group(2) == "0":
        if int(m.group(1)) == 0:
            raise ValueError("0/0 is not a slope")
        return INF
    return parse_rational(s)


def format_rational(x) -> str:
    if not is_finite(x):
        return "inf"
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
