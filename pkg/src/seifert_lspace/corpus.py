"""Embedded example corpus for the ``reproduce`` command.

Each case replays one worked example at desk scale: a single decision with
its certificate, a homology identity over a window, a slope polynomial, or a
whole-family guarantee.  Everything is self-contained data plus a checker, so
``reproduce`` needs no files or network.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rationals import INF
from .seifert import classify, h1_order, normalize
from .lspace import FoliationWitness, IntervalKind, decide, third_slot_threshold
from .twist import classify_family, h1_consistency, limit_space, surgered_space
from . import families as fam


@dataclass(frozen=True)
class Check:
    label: str
    ok: bool
    got: object = None
    want: object = None


@dataclass(frozen=True)
class Case:
    name: str
    description: str
    run: object  # () -> list[Check]


def _eq(label, got, want):
    return Check(label, got == want, got, want)


def _decide_case(text_b, slopes, want_lspace, want_witness=None, want_dual=None):
    f = normalize(text_b, slopes)
    v = decide(f)
    checks = [_eq("is_lspace", v.is_lspace, want_lspace)]
    if want_witness is not None:
        checks.append(_eq("witness", v.witness, FoliationWitness(*want_witness)))
    if want_dual is not None:
        checks.append(_eq("witness_is_dual", v.witness_is_dual, want_dual))
    return checks


def _case_euler_zero_triple():
    return _decide_case(-2, (Fraction(2, 3), Fraction(2, 3), Fraction(2, 3)),
                        False, want_witness=(2, 1), want_dual=True)


def _case_unknot_limits():
    checks = []
    for m in (0, -1):
        d = fam.unknot_seiferter_data(m, 3)
        v = decide(limit_space(d))
        checks.append(_eq(f"limit m={m} is L-space", v.is_lspace, True))
    d = fam.unknot_seiferter_data(3, 3)
    lim = limit_space(d)
    checks.append(_eq("limit m=3 normal form", repr(lim), "SFS[S2; -2; 2/3, 2/3, 2/3]"))
    checks.append(_eq("limit m=3 not L-space", decide(lim).is_lspace, False))
    return checks


def _case_decide_spots():
    checks = []
    checks += _decide_case(-1, (Fraction(1, 2), Fraction(2, 3), Fraction(4, 5)), True)
    checks += _decide_case(-1, (Fraction(1, 7), Fraction(1, 3), Fraction(1, 2)),
                           False, want_witness=(5, 2), want_dual=False)
    checks += _decide_case(1, (Fraction(1, 2), Fraction(1, 3), Fraction(1, 7)), True)
    f = normalize(-1, (Fraction(1, 2), Fraction(1, 2)))
    checks.append(_eq("S2(-1; 1/2, 1/2) is S2 x S1, not an L-space",
                      decide(f).is_lspace, False))
    checks += _decide_case(0, (Fraction(2, 3), Fraction(1, 2), INF), True)
    return checks


def _case_trefoil_candidate():
    got = fam.torus_pq_candidates(3, 2, 5)
    return [_eq("candidate list", got, [(3, Fraction(2, 3), Fraction(1, 2))]),
            _eq("guarantee", fam.linking_guarantee(3, 2, 5), fam.ALL_N)]


def _case_trefoil_family():
    spec = fam.find_family("K(3,2;5,n)")
    ok, problems = fam.check_guarantee(spec)
    checks = [Check("all n are L-space surgeries", ok, problems or "ok")]
    report = classify_family(spec.members[0], (-2, 2))
    checks.append(_eq("pole n=0 is a connected sum and an L-space",
                      (report.points[0].tag.value, report.points[0].verdict.is_lspace),
                      ("ConnectedSumOfLensSpaces", True)))
    checks.append(_eq("slope at n=1", report.points[1].slope, 31))
    return checks


def _case_unknot_grid_sample():
    d = fam.unknot_seiferter_data(0, 3)
    checks = []
    bad = [n for n in range(-10, 11)
           if decide(surgered_space(d, n)).is_lspace != (n != 0)]
    checks.append(_eq("L-space exactly away from n=0", bad, []))
    checks.append(Check("homology matches the surgery slope",
                        all(h1_consistency(d, n) for n in range(-10, 11))))
    return checks


def _case_tunnel2():
    checks = []
    for which, poly in (("A", lambda n: 196 * n + 71), ("B", lambda n: 100 * n + 71)):
        d = fam.tunnel2_family(which).members[0].data
        bad = [n for n in range(-100, 101)
               if not decide(surgered_space(d, n)).is_lspace
               or classify(surgered_space(d, n)).h1 != abs(poly(n))]
        checks.append(_eq(f"family {which}: L-space and |H1| = |{poly(1) - poly(0)}n+71|",
                          bad, []))
    return checks


def _case_sporadic_slopes():
    checks = []
    for p in range(1, 21):
        ok_a = p * (6 * p + 1) + (4 * p + 1) ** 2 == 22 * p * p + 9 * p + 1
        ok_b = (3 * p + 1) * (2 * p + 1) + (4 * p + 1) ** 2 == 22 * p * p + 13 * p + 2
        ok_c = -((3 * p + 2) * (2 * p + 1) + (4 * p + 3) ** 2) == -22 * p * p - 31 * p - 11
        ok_d = -((6 * p + 5) * (p + 1) + (4 * p + 3) ** 2) == -22 * p * p - 35 * p - 14
        if not (ok_a and ok_b and ok_c and ok_d):
            return [Check(f"slope polynomials at p={p}", False)]
    checks.append(Check("slope polynomials, p = 1..20", True))
    return checks


def _case_berge_vii_viii():
    checks = []
    s = fam.berge_type_vii_viii(2, 3, "VII")
    checks.append(_eq("(2,3) VII guarantee", repr(s.guarantee), "L-space for n <= 2"))
    s = fam.berge_type_vii_viii(-2, 5, "VIII")
    checks.append(_eq("(-2,5) VIII guarantee", repr(s.guarantee), "L-space for all n"))
    out = fam.berge_type_vii_viii(1, 2, "VII")
    checks.append(_eq("(1,2) degenerates to a torus knot",
                      isinstance(out, fam.TorusKnotDegenerate), True))
    return checks


def _case_cable_exterior_h1():
    vals = [h1_order(normalize(0, (Fraction(2, 3), Fraction(-2, 5), Fraction(x))))
            for x in range(-10, 11)]
    want = [abs(4 + 15 * x) for x in range(-10, 11)]
    return [_eq("|H1| window", vals, want),
            _eq("value 1 never attained", 1 in vals, False)]


def _case_threshold():
    t = third_slot_threshold(-2, Fraction(2, 3), Fraction(2, 3))
    return [_eq("kind", t.kind, IntervalKind.DOWN_CLOSED),
            _eq("boundary", t.boundary, Fraction(1, 2)),
            _eq("attained", t.attained, True)]


def _case_satellite_and_distinctness():
    checks = [_eq("satellite boundary case", fam.satellite_guarantee(2, 4, 1), True)]
    try:
        fam.satellite_guarantee(3, 8, 1)
        checks.append(Check("satellite precondition rejected", False))
    except fam.PreconditionFailed:
        checks.append(Check("satellite precondition rejected", True))
    checks.append(_eq("distinctness (5,3,4)", fam.distinctness_bound(5, 3, 4), False))
    checks.append(_eq("distinctness (2,0,2)", fam.distinctness_bound(2, 0, 2), True))
    return checks


def _case_eudave_munoz():
    rows = [(1, 8, (1, 2)), (2, 40, (2, 5)), (-1, 16, (1, 4))]
    checks = []
    for l, slope, indices in rows:
        s = fam.eudave_munoz_rp2_family(l)
        got = (12 * l * l - 4 * l, (abs(l), abs(-3 * l + 1)))
        checks.append(_eq(f"l={l} slope and indices", got, (slope, indices)))
        checks.append(_eq(f"l={l} guarantee", s.guarantee, fam.ALL_N))
    return checks


def _case_catalog_guarantees():
    checks = []
    for spec in fam.catalog():
        ok, problems = fam.check_guarantee(spec, (-30, 30))
        checks.append(Check(spec.name, ok, problems or "ok"))
    return checks


CASES = (
    Case("euler-zero-triple", "dual witness for S2(-2; 2/3, 2/3, 2/3)",
         _case_euler_zero_triple),
    Case("unknot-limits", "limit spaces of the unknot families at m = 0, -1, 3",
         _case_unknot_limits),
    Case("decide-spots", "assorted single decisions with certificates",
         _case_decide_spots),
    Case("trefoil-candidate", "base form for the linking-5 seiferter of the trefoil",
         _case_trefoil_candidate),
    Case("trefoil-family", "the linking-5 trefoil family is all-n",
         _case_trefoil_family),
    Case("unknot-grid-sample", "unknot family (m=0, p=3): verdicts and homology",
         _case_unknot_grid_sample),
    Case("tunnel2", "tunnel-number-two families: verdicts and homology",
         _case_tunnel2),
    Case("sporadic-slopes", "sporadic Berge slope polynomials",
         _case_sporadic_slopes),
    Case("berge-vii-viii", "type VII/VIII parameter mapping",
         _case_berge_vii_viii),
    Case("cable-exterior-h1", "|H1(S2(2/3, -2/5, x))| = |4 + 15x|",
         _case_cable_exterior_h1),
    Case("threshold-down-closed", "exact third-slope threshold at b = -2",
         _case_threshold),
    Case("satellite-distinctness", "satellite guarantee and surgery-distance bound",
         _case_satellite_and_distinctness),
    Case("eudave-munoz", "projective-base family slopes and indices",
         _case_eudave_munoz),
    Case("catalog-guarantees", "every catalog family confirms its guarantee",
         _case_catalog_guarantees),
)


def run_corpus(only: str | None = None, cases=CASES, emit=print):
    """Run the corpus; returns (n_passed, n_failed, failed_names)."""
    selected = list(cases)
    if only is not None:
        selected = [c for c in cases if c.name == only]
        if not selected:
            selected = [c for c in cases if only in c.name]
        if not selected:
            raise KeyError(only)
    passed, failed = 0, []
    for case in selected:
        checks = case.run()
        bad = [c for c in checks if not c.ok]
        if bad:
            failed.append(case.name)
            emit(f"FAIL {case.name}: {case.description}")
            for c in bad:
                emit(f"     {c.label}: got {c.got!r}, want {c.want!r}")
        else:
            passed += 1
            emit(f"PASS {case.name}: {case.description} ({len(checks)} checks)")
    return passed, len(failed), failed
