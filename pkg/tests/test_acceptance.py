"""Acceptance gate: eleven criteria, one test and one printed verdict each.

Every test computes its sub-results first, prints a single
``criterion NN PASS/FAIL`` line, and only then asserts, so the verdict
survives in the captured output either way.  Two criteria contain
sub-checks that are known not to hold and are asserted anyway: the
claimed ideal equality in criterion 4 and the order-five reference
totals in criterion 6.  Both failures are genuine properties of the
crosscheck constants, reproduced exactly; the assertion messages spell
out what was found instead.
"""

from __future__ import annotations

import math
import time
from fractions import Fraction

from jetbrackets import euler
from jetbrackets.catalog import ghost_delta_form, ghost_extract, ghost_numerators
from jetbrackets.cli import RunConfig, _catalog, build_report, cmd_verify, render_json
from jetbrackets.fixtures import fixture_path, load_fixture
from jetbrackets.groebner import (
    LETTER_INVARIANTS,
    RESTRICTED_LETTERS,
    buchberger,
    is_groebner,
    load_letter_basis,
    load_staircase,
    normal_form,
    reduced_bases_equal,
    staircase_complement,
)
from jetbrackets.jets import (
    JetContext,
    check_reparametrization_invariance,
    faa_di_bruno,
)
from jetbrackets.jets import _faa
from jetbrackets.rings import Polynomial, jet, named, parse, reparam
from jetbrackets.syzygies import (
    ghost_nonmembership,
    independence_rank_suite,
    letter_weight,
    plucker_instances_order4,
    restricted_identities,
    verify_curated,
)


def _line(num: int, ok: bool, summary: str) -> None:
    print(f"criterion {num:02d} {'PASS' if ok else 'FAIL'}: {summary}")


def test_criterion_01_catalog_two_routes_and_invariance(catalog5):
    started = time.monotonic()
    names = catalog5.names
    ok_count = len(names) == 25
    weights = sorted({catalog5.weight_of(n) for n in names})
    ok_ladder = weights == [1, 3, 5, 7, 8, 9, 10, 12, 14, 16]
    ok_pair12 = catalog5.weight_of("N12") == 12 == catalog5.weight_of("K12_11")
    ok_inv = True
    for name in names:
        r = check_reparametrization_invariance(catalog5.ctx, catalog5.poly(name))
        if not (r.ok and r.weight == catalog5.weight_of(name)):
            ok_inv = False
    elapsed = time.monotonic() - started
    ok = ok_count and ok_ladder and ok_pair12 and ok_inv and elapsed <= 120
    _line(
        1,
        ok,
        f"25 entries via two agreeing constructions, all invariant with "
        f"their stated weights, in {elapsed:.1f}s",
    )
    assert ok_count and ok_ladder and ok_pair12 and ok_inv
    assert elapsed <= 120


def test_criterion_02_syzygy_suites(catalog5):
    expected = {
        "ORDER4_NINE": 9,
        "ORDER5_FIFTEEN": 15,
        "SEVENTH_FAMILY": 3,
        "GHOST_ABCDEF": 6,
        "GHOST_EXTRA4": 4,
        "APPENDIX9_SYNTH": 5,
    }
    counts = {}
    all_ok = True
    for suite, want in expected.items():
        rep = verify_curated(catalog5, [suite])
        counts[suite] = rep.passed
        all_ok = all_ok and rep.ok and rep.total == want
    plck = plucker_instances_order4(catalog5)
    all_ok = all_ok and plck.ok and plck.total == 210
    restr = restricted_identities(catalog5)
    all_ok = all_ok and restr.ok
    _line(
        2,
        all_ok,
        f"{counts} plus {plck.passed}/210 minor-scheme instances and "
        f"{restr.passed} restricted identities, every residual zero",
    )
    assert all_ok


def test_criterion_03_ghost_identities():
    cat = _catalog(2, 5)
    ok_x27 = cat.poly("X27") == cat.poly("M8") * cat.poly("X19")
    numerators = ghost_numerators({n: cat.poly(n) for n in cat.base_names})
    ok_y23 = ghost_extract("Y23", numerators["Y23"]) == cat.poly("X23")
    spots = load_fixture(fixture_path("catalog_display.txt"))["ghost-spots"]
    targets = {"X18": Fraction(-25088), "X19": Fraction(16000)}
    seen = {}
    for entry in spots:
        spot = parse(entry.payload)
        ((term, coeff),) = tuple(spot.terms())
        if entry.name in targets and coeff == targets[entry.name]:
            seen[entry.name] = ghost_delta_form(entry.name).coefficient(term) == coeff
    ok_spots = seen.get("X18") is True and seen.get("X19") is True
    ok = ok_x27 and ok_y23 and ok_spots
    _line(
        3,
        ok,
        "X27 = M8*X19 and Y23 = X23 exactly; printed spot coefficients "
        "-25088 (X18) and +16000 (X19) match the extracted quotients",
    )
    assert ok_x27, "X27 differs from M8*X19"
    assert ok_y23, "the two weight-23 quotients differ"
    assert ok_spots, f"spot coefficients missing or mismatched: {seen}"


def test_criterion_04_groebner_certification(jetsub_report26):
    r21 = load_letter_basis("RESTRICTED21")
    f26 = load_letter_basis("FULL26")
    cert21 = is_groebner(r21, RESTRICTED_LETTERS)
    ok_21 = cert21.ok and cert21.total_pairs == 210 and cert21.max_spoly_terms() == 2
    cert26 = is_groebner(f26, "abcdefghijk")
    ok_26 = cert26.ok
    ok_subs = jetsub_report26.ok and jetsub_report26.total == 26

    kill = {named("k"): Polynomial.zero()}
    cleared = [q for _, p in load_letter_basis("SYZ15") if not (q := p.subs(kill)).is_zero()]
    gb_cleared, _ = buchberger(cleared, RESTRICTED_LETTERS)
    ok_equal = reduced_bases_equal(gb_cleared, [p for _, p in r21], RESTRICTED_LETTERS)

    ok = ok_21 and ok_26 and ok_subs and ok_equal
    _line(
        4,
        ok,
        f"S-criterion 210/210 two-termed pairs and 325 full pairs pass, "
        f"all 26 jet substitutions vanish; ideal equality as claimed: {ok_equal}",
    )
    assert ok_21, "restricted basis failed the S-polynomial criterion"
    assert ok_26, "full basis failed the S-polynomial criterion"
    assert ok_subs, "a substituted equation left a nonzero residual"
    assert ok_equal, (
        "the claimed equality ideal(cleared fifteen) = ideal(twenty-one) does "
        f"not hold as stated: the reduced basis of the cleared fifteen has "
        f"{len(gb_cleared)} elements, not 21.  The stored twenty-one generate "
        "the saturation of that ideal by the wronskian letter a (verified by "
        "the groebner membership command); six of them need a division by a "
        "to be reached.  Every other sub-check above passes."
    )


def test_criterion_05_staircases():
    r21 = [p for _, p in load_letter_basis("RESTRICTED21")]
    stored7 = load_staircase("STAIRCASE7")
    computed7 = staircase_complement(r21, RESTRICTED_LETTERS)
    key = lambda c: (frozenset(c.free), tuple(sorted(c.fixed)))
    ok_7 = {key(c) for c in computed7} == {key(c) for _, c in stored7}
    ok_pins = all(
        len(c.pinned(RESTRICTED_LETTERS)) == 6 for _, c in stored7
    )

    f26 = [p for _, p in load_letter_basis("FULL26")]
    stored16 = load_staircase("STAIRCASE16")
    computed16 = staircase_complement(f26, "abcdefghijk", max_fixed=6)
    ok_16 = {key(c) for c in computed16} == {key(c) for _, c in stored16}
    ok_rows = [name for name, _ in stored16] == [chr(ord("A") + i) for i in range(16)]

    weights = {ch: letter_weight(LETTER_INVARIANTS[ch]) for ch in RESTRICTED_LETTERS}
    comps = [c for _, c in stored7]

    def standard(exps: dict[str, int]) -> bool:
        mono = Polynomial.one()
        for ch, e in exps.items():
            mono = mono * Polynomial.var(named(ch), e)
        return (normal_form(mono, r21, RESTRICTED_LETTERS) - mono).is_zero()

    vectors: list[dict[str, int]] = []

    def extend(idx: int, left: int, acc: dict[str, int]) -> None:
        if idx == len(RESTRICTED_LETTERS):
            vectors.append(dict(acc))
            return
        ch = RESTRICTED_LETTERS[idx]
        e = 0
        while e * weights[ch] <= left:
            if e:
                acc[ch] = e
            extend(idx + 1, left - e * weights[ch], acc)
            acc.pop(ch, None)
            e += 1

    extend(0, 30, {})
    ok_unique = True
    for exps in vectors:
        inside = sum(1 for c in comps if c.contains(exps, RESTRICTED_LETTERS))
        want = 1 if standard(exps) else 0
        if inside != want:
            ok_unique = False
    ok = ok_7 and ok_pins and ok_16 and ok_rows and ok_unique
    _line(
        5,
        ok,
        f"7 restricted components (6 pinned letters each) and 16 full rows "
        f"A..P reproduced; unique-writing checked on {len(vectors)} exponent "
        f"vectors of weight <= 30",
    )
    assert ok_7 and ok_pins and ok_16 and ok_rows and ok_unique


def test_criterion_06_euler_exact_rationals():
    fams4 = euler.order4_families()
    pair1 = euler.family_leading_pair(fams4[0])
    pair2 = euler.family_leading_pair(fams4[1])
    ok_a = pair1 == (Fraction(937, 28800000), Fraction(13, 900000))
    ok_b = pair2 == (Fraction(559819, 34574400000), Fraction(36949, 4321800000))
    lead4 = euler.leading_coefficients(fams4)
    ok_c = lead4.c1sq_coeff == Fraction(1797, 36879360)
    ok_c = ok_c and lead4.c2_coeff == Fraction(848, 36879360)

    fams5 = euler.order5_true_families()
    row_a = euler.family_leading_pair(fams5[0])
    ok_row_a = row_a == (
        Fraction(36562817, 4933428814282752),
        Fraction(5015441, 1233357203570688),
    )
    lead5 = euler.leading_coefficients(fams5)
    printed = (
        Fraction(159897336810563, 356792619604377600000),
        Fraction(784698232169, 3303635366707200000),
    )
    computed = (lead5.c1sq_coeff, lead5.c2_coeff)
    ok_totals = computed == printed

    ok = ok_a and ok_b and ok_c and ok_row_a and ok_totals
    _line(
        6,
        ok,
        f"order-4 constants and order-5 row A exact; order-5 totals equal "
        f"the reference constants: {ok_totals}",
    )
    assert ok_a and ok_b and ok_c, "an order-4 constant differs"
    assert ok_row_a, "the order-5 row-A pair differs"
    assert ok_totals, (
        "the order-five reference totals are not the sum of the sixteen "
        f"per-row integrals: summing the computed rows gives "
        f"C1={computed[0]} and C2={computed[1]}, the reference prints "
        f"C1={printed[0]} and C2={printed[1]}.  Each individual row is "
        "reproduced exactly (criterion and unit tests), the defective "
        "variant of row H explains part but not all of the gap, and no "
        "16-row combination of the verified integrals reaches the printed "
        "pair.  The engine reports both values side by side."
    )


def test_criterion_07_degree_thresholds():
    ok_t = (
        euler.degree_threshold(Fraction(1797, 848)) == 9
        and euler.degree_threshold(Fraction(47, 26)) == 11
        and euler.degree_threshold(Fraction(13, 9)) == 15
    )
    lead5 = euler.leading_coefficients(euler.order5_true_families())
    ok_q = lead5.quotient() < Fraction(1797, 848)
    ok = ok_t and ok_q
    _line(
        7,
        ok,
        "thresholds 9/11/15 for the three stored quotients; order-5 "
        "quotient strictly below 1797/848",
    )
    assert ok_t and ok_q


def test_criterion_08_lattice_sum_convergence():
    started = time.monotonic()
    fams = euler.order4_families()
    lead = euler.leading_coefficients(fams)
    chern = euler.ChernData.from_degree(9)
    target = lead.evaluate(chern)
    scaled = []
    for m in (60, 120, 240):
        value = Fraction(euler.chi_sum_exact(fams, m, chern), m**6)
        scaled.append(abs(value - target) * m)
    ok_mono = scaled[0] >= scaled[1] >= scaled[2]
    elapsed = time.monotonic() - started
    ok = ok_mono and elapsed <= 60
    _line(
        8,
        ok,
        f"|sum/m^6 - leading| * m falls monotonically "
        f"({float(scaled[0]):.4f} -> {float(scaled[2]):.4f}), so K = "
        f"{float(scaled[0]):.4f} dominates; {elapsed:.1f}s",
    )
    assert ok_mono, [float(s) for s in scaled]
    assert elapsed <= 60


def test_criterion_09_rank_probes():
    checks = independence_rank_suite(seed=20260822, trials=6)
    ranks = [c.rank for c in checks]
    ok = all(c.ok for c in checks) and ranks == [4, 5, 4, 4]
    _line(9, ok, f"generic jacobian ranks {ranks} at the configured seed")
    assert ok, [(c.name, c.rank, c.expected) for c in checks]


def _partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def _composition_oracle(i: int, lam: int) -> Polynomial:
    total = Polynomial.zero()
    for part in _partitions(lam):
        mults: dict[int, int] = {}
        for p in part:
            mults[p] = mults.get(p, 0) + 1
        denom = 1
        for j, m in mults.items():
            denom *= math.factorial(j) ** m * math.factorial(m)
        term = Polynomial.const(Fraction(math.factorial(lam), denom))
        term = term * Polynomial.var(jet(i, len(part)))
        for j, m in mults.items():
            term = term * Polynomial.var(reparam(j), m)
        total = total + term
    return total


def test_criterion_10_composition_oracle_and_infeasibility():
    ctx = JetContext(2, 5)
    ok_faa = all(faa_di_bruno(ctx, 1, lam) == _composition_oracle(1, lam) for lam in range(1, 7))
    ok_faa = ok_faa and all(_faa(2, lam) == _composition_oracle(2, lam) for lam in (7, 8))
    base_ten = [LETTER_INVARIANTS[ch] for ch in RESTRICTED_LETTERS]
    r18 = ghost_nonmembership("X18", base_ten)
    r19 = ghost_nonmembership("X19", base_ten + ["X18"])
    ok_cone = r18.status == "infeasible" and r19.status == "infeasible"
    ok = ok_faa and ok_cone
    _line(
        10,
        ok,
        "composition rule matches the partition oracle through order 8; "
        "restriction cones for X18 and X19 are infeasible",
    )
    assert ok_faa, "composition mismatch against the partition oracle"
    assert ok_cone, (r18.status, r19.status)


def test_criterion_11_verify_all_deterministic():
    cfg = RunConfig()
    started = time.monotonic()
    first = cmd_verify(cfg, "all")
    second = cmd_verify(cfg, "all")
    elapsed = time.monotonic() - started
    body1 = render_json(build_report("verify", cfg, {"suite": "all", "nu": 2}, first))
    body2 = render_json(build_report("verify", cfg, {"suite": "all", "nu": 2}, second))
    ok_same = body1 == body2
    ok_pass = all(c.ok for c in first)
    ok_time = elapsed <= 15 * 60
    ok = ok_same and ok_pass and ok_time
    _line(
        11,
        ok,
        f"two in-process runs of every suite ({len(first)} checks) agree "
        f"byte for byte and pass, {elapsed:.1f}s total",
    )
    assert ok_pass, [c.id for c in first if not c.ok]
    assert ok_same
    assert ok_time
