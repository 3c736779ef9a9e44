"""Twist families of Seifert surgeries along a seiferter.

Twisting n times along a seiferter c replaces the slope of the corresponding
fiber by the Moebius function

    f(n) = (n*beta + beta_3) / (n*alpha + alpha_3),

where the integer matrix rows (alpha_3, beta_3) and (-alpha, -beta) express a
preferred meridian-longitude pair of c in a section/fiber basis, and
alpha*beta_3 - beta*alpha_3 = 1.  The surgered manifold after n twists is
S2(b; r1, r2, f(n)) and the surgery slope advances by the square of the
linking number: m_n = m + n*l^2.

Since the unimodularity relation gives f(x) = beta/alpha + 1/(alpha^2 (x -
pole)), f is strictly decreasing on each side of its pole -alpha_3/alpha and
converges to beta/alpha, the slope of the n -> +-infinity limit space (the
result of (m, 0)-surgery on knot and seiferter together).  Combining this
monotonicity with the exact third-slope thresholds classifies all but
finitely many members of the family exactly: each tail is certified with the
first index from which a single verdict holds, replacing epsilon-style
"for n large enough" statements.

The degenerate-fiber situation (the seiferter is an index-zero fiber of a
connected sum of two lens spaces) is the special encoding (alpha_3, beta_3)
= (0, 1): then f(n) = beta + 1/n, the pole n = 0 reproduces the connected
sum, and every other member is S2(b + beta; r1, r2, 1/n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .rationals import INF, is_finite
from .seifert import Base, SeifertForm, Tag, classify, mirror, normalize
from .lspace import (IntervalKind, LSpaceVerdict, ThirdSlotThreshold,
                     _decide_classified, decide, third_slot_threshold)


@dataclass(frozen=True)
class SeiferterData:
    """A seiferter presented by its change-of-basis matrix and base invariants.

    ``b, r1, r2`` describe the fixed part of the fibration (both slopes in
    (0,1)); ``alpha, beta, alpha3, beta3`` the meridian/longitude data of the
    seiferter; ``m`` the surgery slope before twisting and ``l`` the linking
    number with the knot.  ``realizable`` marks catalog data known to come
    from an actual knot-seiferter pair (synthetic data may violate the
    homology relation |H1| = |m_n|).
    """
    b: int
    r1: Fraction
    r2: Fraction
    alpha: int
    beta: int
    alpha3: int
    beta3: int
    m: int = 0
    l: int = 0
    realizable: bool = False

    def __post_init__(self):
        if not (0 < self.r1 < 1 and 0 < self.r2 < 1):
            raise ValueError("fixed slopes must lie in (0,1)")
        if self.alpha * self.beta3 - self.beta * self.alpha3 != 1:
            raise ValueError("seiferter matrix must have determinant one")
        if not (self.alpha3 > 0 or (self.alpha3, self.beta3) == (0, 1)):
            raise ValueError("alpha3 must be positive, or (alpha3, beta3) = (0, 1) "
                             "for a degenerate fiber")
        if self.l < 0:
            raise ValueError("linking number is recorded as a nonnegative integer")


def fiber_slope(d: SeiferterData, n: int):
    """Slope of the twisted seiferter after n twists; INF at the pole."""
    den = n * d.alpha + d.alpha3
    num = n * d.beta + d.beta3
    if den == 0:
        return INF
    return Fraction(num, den)


def surgered_space(d: SeiferterData, n: int) -> SeifertForm:
    """Normal form of the manifold obtained after n twists."""
    return normalize(d.b, (d.r1, d.r2, fiber_slope(d, n)))


def surgery_slope(d: SeiferterData, n: int) -> int:
    """Surgery slope after n twists: m + n * l^2."""
    return d.m + n * d.l * d.l


def limit_space(d: SeiferterData) -> SeifertForm:
    """The |n| -> infinity limit: slope beta/alpha, infinite when alpha = 0."""
    rc = INF if d.alpha == 0 else Fraction(d.beta, d.alpha)
    return normalize(d.b, (d.r1, d.r2, rc))


def h1_consistency(d: SeiferterData, n: int) -> bool:
    """Does |H1| of the surgered space equal |m_n| (with order 0 <-> slope 0)?

    True for data realized by a knot in the 3-sphere; returns False (never
    raises) on synthetic data that violates it.
    """
    c = classify(surgered_space(d, n))
    s = surgery_slope(d, n)
    if c.h1 is INF:
        return s == 0
    return c.h1 == abs(s)


@dataclass(frozen=True)
class FamilyMember:
    """One evaluation rule for a twist family.

    ``offset`` shifts the twist index (the family's n corresponds to data
    index n + offset); ``mirrored`` evaluates the mirror image (the family's
    n-th member is the mirror of the data's (-n-offset)-th member, with the
    surgery slope negated).  ``rp2`` marks the constant projective-base
    families, which carry no per-member slope arithmetic.
    """
    data: SeiferterData | None = None
    mirrored: bool = False
    offset: int = 0
    rp2: bool = False
    label: str = ""

    def __post_init__(self):
        if not self.rp2 and self.data is None:
            raise ValueError("a member needs seiferter data unless it is rp2")

    def point(self, n: int):
        """(surgery slope or None, normalized form) of the n-th member."""
        if self.rp2:
            return None, SeifertForm(base=Base.RP2)
        if self.mirrored:
            j = -(n + self.offset)
            return -surgery_slope(self.data, j), mirror(surgered_space(self.data, j))
        j = n + self.offset
        return surgery_slope(self.data, j), surgered_space(self.data, j)

    def limit(self) -> SeifertForm:
        if self.rp2:
            return SeifertForm(base=Base.RP2)
        f = limit_space(self.data)
        return mirror(f) if self.mirrored else f


class TailStatus(Enum):
    CERTIFIED = "Certified"
    POINTWISE_ONLY = "DecidedPointwiseOnly"


@dataclass(frozen=True)
class TailCertificate:
    """A one-sided cofinite verdict: for side=+1, every n >= from_n has the
    stated L-space verdict; for side=-1, every n <= from_n does.

    ``limit``, ``band_base`` and ``threshold`` describe the slope analysis
    behind the verdict; when ``mirrored`` is set they refer to the underlying
    data before mirroring (the verdict itself is mirror-invariant).
    """
    side: int
    status: TailStatus
    is_lspace: bool | None = None
    from_n: int | None = None
    limit: object = None  # Fraction or INF
    band_base: int | None = None
    threshold: ThirdSlotThreshold | None = None
    mirrored: bool = False

    @property
    def certified(self) -> bool:
        return self.status is TailStatus.CERTIFIED

    @property
    def approach(self) -> str:
        """Which side the varying slope approaches its limit from, in the
        coordinates of ``threshold``."""
        return "from_above" if (self.side > 0) != self.mirrored else "from_below"

    def covers(self, n: int) -> bool:
        if not self.certified:
            return False
        return n >= self.from_n if self.side > 0 else n <= self.from_n


def _bound_above(desc: ThirdSlotThreshold, target: Fraction):
    """Uniform verdict for slopes approaching ``target`` from above.

    Returns (is_lspace, local upper bound c, inclusive): the verdict holds
    for every slope in (target, c), or (target, c] when inclusive.
    """
    if desc.kind is IntervalKind.ALL:
        return True, Fraction(1), False
    if desc.kind is IntervalKind.UP_CLOSED:
        t = desc.boundary
        if t == 0 and not desc.attained:
            return True, Fraction(1), False
        if target >= t:
            return True, Fraction(1), False
        return False, t, False
    if desc.kind is IntervalKind.DOWN_CLOSED:
        s = desc.boundary
        if s == 1 and not desc.attained:
            return True, Fraction(1), False
        if target < s:
            return True, s, bool(desc.attained)
        return False, Fraction(1), False
    raise AssertionError(desc.kind)


def _bound_below(desc: ThirdSlotThreshold, target: Fraction):
    """Uniform verdict for slopes approaching ``target`` from below; the
    verdict holds on (c, target), or [c, target) when inclusive."""
    if desc.kind is IntervalKind.ALL:
        return True, Fraction(0), False
    if desc.kind is IntervalKind.UP_CLOSED:
        t = desc.boundary
        if t == 0 and not desc.attained:
            return True, Fraction(0), False
        if target > t:
            return True, t, bool(desc.attained)
        return False, Fraction(0), False
    if desc.kind is IntervalKind.DOWN_CLOSED:
        s = desc.boundary
        if s == 1 and not desc.attained:
            return True, Fraction(0), False
        if target <= s:
            return True, Fraction(0), False
        return False, s, False
    raise AssertionError(desc.kind)


def _tail_data(d: SeiferterData, side: int, first: int) -> TailCertificate:
    """Certificate for the data-indexed tail {j >= first} (side=+1) or
    {j <= first} (side=-1)."""
    if d.alpha == 0:
        # f(j) = -j + beta3 is an integer for every j: all members are lens
        # spaces, L-spaces except a single possible S2 x S1.
        exceptional = d.b + d.beta3 + 1 if d.r1 + d.r2 == 1 else None
        from_j = first
        if exceptional is not None:
            from_j = max(from_j, exceptional + 1) if side > 0 else min(from_j, exceptional - 1)
        return TailCertificate(side, TailStatus.CERTIFIED, True, from_j, limit=INF)

    pole = Fraction(-d.alpha3, d.alpha)
    rc = Fraction(d.beta, d.alpha)
    # the certified region must lie strictly on one side of the pole; anything
    # between the window edge and it is filled in pointwise by the caller
    if side > 0:
        first = max(first, math.floor(pole) + 1)
    else:
        first = min(first, math.ceil(pole) - 1)

    p = math.floor(rc)
    r0 = rc - p
    if side > 0:
        band = p
        desc = third_slot_threshold(d.b + band, d.r1, d.r2)
        verdict, c_local, inclusive = _bound_above(desc, r0)
        c = band + c_local

        def ok(j):
            f = fiber_slope(d, j)
            return is_finite(f) and (f <= c if inclusive else f < c)

        # f decreasing towards rc on this side: solve f(x) = c, then adjust
        x = (Fraction(d.beta3) - c * d.alpha3) / (c * d.alpha - d.beta)
        j0 = max(first, math.floor(x) + 1)
        while not ok(j0):
            j0 += 1
        while j0 - 1 >= first and ok(j0 - 1):
            j0 -= 1
        return TailCertificate(side, TailStatus.CERTIFIED, verdict, j0,
                               limit=rc, band_base=d.b + band, threshold=desc)

    band = p if r0 > 0 else p - 1
    target = r0 if r0 > 0 else Fraction(1)
    desc = third_slot_threshold(d.b + band, d.r1, d.r2)
    verdict, c_local, inclusive = _bound_below(desc, target)
    c = band + c_local

    def ok(j):
        f = fiber_slope(d, j)
        return is_finite(f) and f < rc and (f >= c if inclusive else f > c)

    if c == rc:  # only when c_local = target = r0: cannot happen, bounds are strict
        raise AssertionError
    x = (Fraction(d.beta3) - c * d.alpha3) / (c * d.alpha - d.beta)
    j0 = min(first, math.ceil(x) - 1)
    while not ok(j0):
        j0 -= 1
    while j0 + 1 <= first and ok(j0 + 1):
        j0 += 1
    return TailCertificate(side, TailStatus.CERTIFIED, verdict, j0,
                           limit=rc, band_base=d.b + band, threshold=desc)


def _tail(member: FamilyMember, side: int, edge: int) -> TailCertificate:
    """Certificate for the family tail beyond the window edge."""
    if member.rp2:
        return TailCertificate(side, TailStatus.CERTIFIED, True, edge + side)
    if member.mirrored:
        inner = _tail_data(member.data, -side, -(edge + side + member.offset))
        if not inner.certified:
            return TailCertificate(side, inner.status, limit=inner.limit,
                                   mirrored=True)
        return TailCertificate(side, inner.status, inner.is_lspace,
                               -inner.from_n - member.offset,
                               limit=inner.limit, band_base=inner.band_base,
                               threshold=inner.threshold, mirrored=True)
    inner = _tail_data(member.data, side, edge + side + member.offset)
    if not inner.certified:
        return TailCertificate(side, inner.status, limit=inner.limit)
    return TailCertificate(side, inner.status, inner.is_lspace,
                           inner.from_n - member.offset,
                           limit=inner.limit, band_base=inner.band_base,
                           threshold=inner.threshold)


@dataclass(frozen=True)
class PointVerdict:
    n: int
    slope: int | None
    form: SeifertForm
    tag: Tag
    verdict: LSpaceVerdict


_EXCEPTIONAL_TAGS = (Tag.S2XS1, Tag.CONNECTED_SUM_LENS)

_GAP_LIMIT = 100_000


@dataclass(frozen=True)
class FamilyReport:
    """Pointwise verdicts on a window plus certified cofinite tails.

    ``points`` also contains any indices between the window edge and a tail
    certificate's starting index, so that window, gap fillers and tails
    jointly cover every integer.
    """
    window: tuple[int, int]
    points: dict[int, PointVerdict] = field(default_factory=dict)
    tail_pos: TailCertificate | None = None
    tail_neg: TailCertificate | None = None
    limit: SeifertForm | None = None
    limit_verdict: LSpaceVerdict | None = None
    exceptional: tuple = ()

    def lspace_at(self, n: int) -> bool:
        """Verdict at any integer, from the window, a gap filler, or a tail."""
        if n in self.points:
            return self.points[n].verdict.is_lspace
        for tail in (self.tail_pos, self.tail_neg):
            if tail is not None and tail.covers(n):
                return tail.is_lspace
        raise KeyError(f"n={n} is not covered by this report")


def _as_member(d) -> FamilyMember:
    return d if isinstance(d, FamilyMember) else FamilyMember(data=d)


def evaluate_point(d, n: int) -> PointVerdict:
    member = _as_member(d)
    slope, form = member.point(n)
    c = classify(form)
    return PointVerdict(n, slope, form, c.tag, _decide_classified(form, c))


def classify_family(d, window=(-50, 50)) -> FamilyReport:
    """Decide every member in the window and certify both tails exactly."""
    member = _as_member(d)
    lo, hi = window
    if lo > hi:
        raise ValueError("empty window")
    points = {n: evaluate_point(member, n) for n in range(lo, hi + 1)}
    tail_pos = _tail(member, +1, hi)
    tail_neg = _tail(member, -1, lo)
    # fill any gap between window edge and certificate start pointwise
    if tail_pos.certified and tail_pos.from_n > hi + 1:
        if tail_pos.from_n - hi > _GAP_LIMIT:
            tail_pos = TailCertificate(+1, TailStatus.POINTWISE_ONLY, limit=tail_pos.limit)
        else:
            for n in range(hi + 1, tail_pos.from_n):
                points[n] = evaluate_point(member, n)
    if tail_neg.certified and tail_neg.from_n < lo - 1:
        if lo - tail_neg.from_n > _GAP_LIMIT:
            tail_neg = TailCertificate(-1, TailStatus.POINTWISE_ONLY, limit=tail_neg.limit)
        else:
            for n in range(tail_neg.from_n + 1, lo):
                points[n] = evaluate_point(member, n)
    limit = member.limit()
    exceptional = tuple((n, pv.tag) for n, pv in sorted(points.items())
                        if pv.tag in _EXCEPTIONAL_TAGS)
    return FamilyReport(window=(lo, hi), points=points,
                        tail_pos=tail_pos, tail_neg=tail_neg,
                        limit=limit, limit_verdict=decide(limit),
                        exceptional=exceptional)
