"""The L-space decision procedure for small Seifert fibered spaces.

A Seifert fibered rational homology sphere over S2 with three exceptional
fibers, written S2(b; r1, r2, r3) with all slopes in (0,1), is an L-space iff

  * b >= 0 or b <= -3, or
  * b = -1 and no coprime pair (a, k) with 0 < a <= k/2 satisfies
    (r1, r2, r3)* < (1/k, a/k, (k-a)/k) componentwise (strictly, after
    sorting), or
  * b = -2 and the same holds for the complemented slopes (1-r1, 1-r2, 1-r3).

A pair (a, k) that does satisfy the inequality certifies a horizontal
foliation and hence that the space is not an L-space; we call it a witness.
Spaces with at most two exceptional fibers are lens spaces, which are
L-spaces except for S2 x S1; a connected sum of two lens spaces (one
degenerate fiber) is an L-space; rational homology spheres fibered over RP2
are always L-spaces.

The witness search is a finite enumeration: s1 < 1/k bounds k below 1/s1.
``third_slot_threshold`` turns the existential statements about the third
slope into an exact rational boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd

from .rationals import INF, simplest_between, sorted_triple
from .seifert import Base, Classification, SeifertForm, Tag, classify


@dataclass(frozen=True)
class FoliationWitness:
    """Coprime pair certifying a horizontal foliation: 0 < a <= k/2, k >= 2."""
    k: int
    a: int

    def __post_init__(self):
        if not (self.k >= 2 and 0 < 2 * self.a <= self.k and gcd(self.a, self.k) == 1):
            raise ValueError(f"invalid witness pair (k={self.k}, a={self.a})")


class Reason(Enum):
    B_LARGE = "BLarge"
    LENS_NOT_S2XS1 = "LensNotS2xS1"
    CONNECTED_SUM_OF_LSPACES = "ConnectedSumOfLSpaces"
    RP2_BASE = "RP2Base"
    INFINITE_H1 = "InfiniteH1"
    NO_WITNESS_EXHAUSTIVE = "NoWitnessExhaustive"
    WITNESS = "Witness"
    DUAL_WITNESS = "DualWitness"


_TRUE_REASONS = {Reason.B_LARGE, Reason.LENS_NOT_S2XS1,
                 Reason.CONNECTED_SUM_OF_LSPACES, Reason.RP2_BASE,
                 Reason.NO_WITNESS_EXHAUSTIVE}


@dataclass(frozen=True)
class LSpaceVerdict:
    """Decision plus certificate.

    ``witness`` is populated whenever the witness test applies and finds a
    pair -- including for euler-number-zero inputs, whose verdict is already
    forced to False by the infinite first homology (an L-space is a rational
    homology sphere by definition).  ``search_bound`` is the largest k the
    enumeration had to consider, for reproducibility of no-witness
    certificates.
    """
    is_lspace: bool
    reason: Reason
    witness: FoliationWitness | None = None
    witness_is_dual: bool = False
    search_bound: int | None = None
    infinite_h1: bool = False

    def __post_init__(self):
        if self.reason in _TRUE_REASONS:
            assert self.is_lspace
        else:
            assert not self.is_lspace


def _witness_from_pairs(p1, q1, p2, q2, p3, q3) -> FoliationWitness | None:
    """Witness search on numerator/denominator pairs of a sorted triple."""
    # a/k <= 1/2 can never strictly exceed s2 >= 1/2
    if 2 * p2 >= q2:
        return None
    # a/k + (k-a)/k = 1 can never strictly exceed s2 + s3 >= 1
    if p2 * q3 + p3 * q2 >= q2 * q3:
        return None
    k = 2
    while k * p1 < q1:
        lo = k * p2 // q2 + 1
        hi = (k * (q3 - p3) - 1) // q3
        half = k >> 1
        if hi > half:
            hi = half
        a = lo
        while a <= hi:
            if gcd(a, k) == 1:
                return FoliationWitness(k, a)
            a += 1
        k += 1
    return None


def witness_search(t) -> FoliationWitness | None:
    """Smallest witness (minimal k, then minimal a) for a sorted slope triple.

    All entries must lie in (0,1).  Returns None when no coprime pair
    (a, k) with 0 < a <= k/2 dominates the triple; only k < 1/t[0] can work.
    """
    s1, s2, s3 = t
    p1, q1 = s1.numerator, s1.denominator
    p2, q2 = s2.numerator, s2.denominator
    p3, q3 = s3.numerator, s3.denominator
    if not (0 < p1 and p3 < q3 and p1 * q2 <= p2 * q1 and p2 * q3 <= p3 * q2):
        raise ValueError("witness_search needs a sorted triple inside (0,1)")
    return _witness_from_pairs(p1, q1, p2, q2, p3, q3)


def search_bound(t) -> int:
    """Largest k the witness enumeration for the sorted triple t can reach."""
    s1 = t[0]
    return (s1.denominator - 1) // s1.numerator


def decide(f: SeifertForm) -> LSpaceVerdict:
    """Is the (normalized) Seifert form an L-space?"""
    c = classify(f)
    return _decide_classified(f, c)


def _decide_classified(f: SeifertForm, c: Classification) -> LSpaceVerdict:
    if c.tag is Tag.RP2_BASE:
        return LSpaceVerdict(True, Reason.RP2_BASE)
    if c.tag is Tag.CONNECTED_SUM_LENS:
        # both summand orders are >= 2, so neither summand is S3 or S2 x S1
        return LSpaceVerdict(True, Reason.CONNECTED_SUM_OF_LSPACES)
    if c.tag is Tag.S2XS1:
        return LSpaceVerdict(False, Reason.INFINITE_H1, infinite_h1=True)
    if c.tag in (Tag.S3, Tag.LENS):
        return LSpaceVerdict(True, Reason.LENS_NOT_S2XS1)

    b = f.b
    if b >= 0 or b <= -3:
        return LSpaceVerdict(True, Reason.B_LARGE)
    dual = b == -2
    if dual:
        # complemented slopes in sorted order, without building new fractions
        pairs = [(r.denominator - r.numerator, r.denominator)
                 for r in reversed(f.slopes)]
    else:
        pairs = [(r.numerator, r.denominator) for r in f.slopes]
    (p1, q1), (p2, q2), (p3, q3) = pairs
    w = _witness_from_pairs(p1, q1, p2, q2, p3, q3)
    bound = (q1 - 1) // p1
    if c.h1 is INF:
        # not a rational homology sphere, hence not an L-space; the witness
        # (which exists exactly when a horizontal foliation does) is still
        # reported alongside.
        return LSpaceVerdict(False, Reason.INFINITE_H1, witness=w,
                             witness_is_dual=dual and w is not None,
                             search_bound=bound, infinite_h1=True)
    if w is not None:
        return LSpaceVerdict(False, Reason.DUAL_WITNESS if dual else Reason.WITNESS,
                             witness=w, witness_is_dual=dual, search_bound=bound)
    return LSpaceVerdict(True, Reason.NO_WITNESS_EXHAUSTIVE, search_bound=bound)


def sufficient_conditions(f: SeifertForm):
    """Closed-form shortcut: True when a pairwise slope sum already decides.

    For b = -1, any pair of slopes summing to >= 1 rules out every witness;
    for b = -2, any pair summing to <= 1 does (by complementing).  For b
    outside {-1, -2} the verdict is immediate anyway.  Returns True or None,
    never False.
    """
    if f.base is not Base.S2 or f.degenerate or len(f.slopes) != 3:
        raise ValueError("sufficient_conditions needs three finite slopes over S2")
    if f.b not in (-1, -2):
        return True
    r1, r2, r3 = f.slopes
    sums = (r1 + r2, r1 + r3, r2 + r3)
    if f.b == -1 and any(s >= 1 for s in sums):
        return True
    if f.b == -2 and any(s <= 1 for s in sums):
        return True
    return None


class IntervalKind(Enum):
    EMPTY = "Empty"
    ALL = "All"
    UP_CLOSED = "UpClosed"
    DOWN_CLOSED = "DownClosed"


@dataclass(frozen=True)
class ThirdSlotThreshold:
    """Exact description of { r in (0,1) : S2(b; r1, r2, r) is an L-space }.

    For b = -1 the set is up-closed [t, 1) (or all of (0,1), encoded as
    boundary 0, not attained); for b = -2 it is down-closed; otherwise it is
    all of (0,1).  ``attained`` records whether the boundary itself is an
    L-space -- it always is, since every witness inequality is strict.
    """
    b: int
    r1: Fraction
    r2: Fraction
    kind: IntervalKind
    boundary: Fraction | None = None
    attained: bool | None = None

    def contains(self, r: Fraction) -> bool:
        """Membership of r in the L-space set; r must lie in (0,1)."""
        if not (0 < r < 1):
            raise ValueError("contains() is about the open unit interval")
        if self.kind is IntervalKind.ALL:
            return True
        if self.kind is IntervalKind.EMPTY:
            return False
        if self.kind is IntervalKind.UP_CLOSED:
            return r > self.boundary or (r == self.boundary and self.attained)
        return r < self.boundary or (r == self.boundary and self.attained)


def _not_lspace_sup(u: Fraction, v: Fraction) -> Fraction:
    """sup { r in (0,1) : S2(-1; u, v, r) is not an L-space }, or 0 if empty.

    The not-L-space set is the open initial segment (0, t): each witness
    (a, k) rules out a down-closed open interval of r, and the three ways r
    can sit in the sorted triple give three families of interval endpoints:

      * (k-a)/k   when u < 1/k and v < a/k      (take the smallest such a),
      * a/k       when u < 1/k and v < (k-a)/k  (take the largest such a),
      * 1/k       when a/k lies in (u, 1-v) with a/k <= 1/2 (take the
                  smallest such k: a minimal-denominator fraction search).

    Only k < 1/u matters for the first two; the third is resolved by
    Stern-Brocot descent, so the whole computation is finite and exact.
    """
    if u > v:
        u, v = v, u
    best = Fraction(0)
    un, ud = u.numerator, u.denominator
    vn, vd = v.numerator, v.denominator
    k = 2
    while k * un < ud:
        half = k >> 1
        # smallest coprime a with v < a/k, a <= k/2  ->  endpoint (k-a)/k
        a = k * vn // vd + 1
        while a <= half and gcd(a, k) != 1:
            a += 1
        if a <= half:
            cand = Fraction(k - a, k)
            if cand > best:
                best = cand
        # largest coprime a with a < k(1-v), a <= k/2  ->  endpoint a/k
        a = min(half, (k * (vd - vn) - 1) // vd)
        while a >= 1 and gcd(a, k) != 1:
            a -= 1
        if a >= 1:
            cand = Fraction(a, k)
            if cand > best:
                best = cand
        k += 1
    # smallest k admitting a coprime a with a/k in (u, 1-v) and a/k <= 1/2
    if 2 * un < ud and 2 * vn < vd:
        best = max(best, Fraction(1, 2))
    hi = min(1 - v, Fraction(1, 2))
    if u < hi:
        q = simplest_between(u, hi)
        best = max(best, Fraction(1, q.denominator))
    return best


def third_slot_threshold(b: int, r1: Fraction, r2: Fraction) -> ThirdSlotThreshold:
    """Exact L-space region in the third slope slot of S2(b; r1, r2, r)."""
    if not (0 < r1 < 1 and 0 < r2 < 1):
        raise ValueError("fixed slopes must lie in (0,1)")
    if b not in (-1, -2):
        return ThirdSlotThreshold(b, r1, r2, IntervalKind.ALL)
    if b == -1:
        t = _not_lspace_sup(r1, r2)
        if t == 0:
            return ThirdSlotThreshold(b, r1, r2, IntervalKind.UP_CLOSED,
                                      Fraction(0), False)
        attained = decide(SeifertForm(b=-1, slopes=sorted_triple(r1, r2, t))).is_lspace
        return ThirdSlotThreshold(b, r1, r2, IntervalKind.UP_CLOSED, t, attained)
    t = _not_lspace_sup(1 - r1, 1 - r2)
    if t == 0:
        return ThirdSlotThreshold(b, r1, r2, IntervalKind.DOWN_CLOSED,
                                  Fraction(1), False)
    boundary = 1 - t
    attained = decide(SeifertForm(b=-2, slopes=sorted_triple(r1, r2, boundary))).is_lspace
    return ThirdSlotThreshold(b, r1, r2, IntervalKind.DOWN_CLOSED, boundary, attained)
