"""Exact leading-term Euler characteristics for Schur-bundle families.

Each monomial family of fundamental invariants corresponds to a direct
sum of Schur bundles on a smooth projective surface, one bundle per
lattice point of a weighted simplex.  The leading part of the
Riemann-Roch Euler characteristic of that sum is an exact rational
multiple of a power of the weight, and this module computes it two ways:

* :func:`leading_coefficients` integrates the cubic leading form exactly
  over the weighted simplex (nested polynomial bounds, slack generator
  eliminated) and reads off the top-degree coefficient pair;
* :func:`chi_sum_exact` enumerates the lattice points at one fixed
  weight and adds the cubic values, deduplicating monomials shared by
  overlapping families.

The cubic surface formula :func:`chi2_leading` is accompanied by its
dimension-three and dimension-four determinant analogues, and
:func:`degree_threshold` solves the boxed quadratic positivity question
for the coefficient quotient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .fixtures import FixtureError, fixture_path, load_fixture
from .groebner import GROEBNER_FIXTURE, LETTER_INVARIANTS, StaircaseComponent, load_staircase
from .rings import Polynomial, integrate_between, named

__all__ = [
    "EULER_FIXTURE",
    "SLACK_NAME",
    "ChernData",
    "ChernData3",
    "ChernData4",
    "SchurGenerator",
    "FamilySpec",
    "LeadingCoefficients",
    "SCHUR_TABLE",
    "LETTER_GENERATORS",
    "chi2_leading",
    "chi3_leading",
    "chi4_leading",
    "families_from_staircase",
    "load_families",
    "load_pairs",
    "order4_families",
    "order5_true_families",
    "order5_printed_families",
    "family_leading_pair",
    "leading_coefficients",
    "chi_sum_exact",
    "degree_threshold",
]

EULER_FIXTURE = "euler_families.txt"

# the weight-one generator whose exponent soaks up the weight constraint
SLACK_NAME = "fp1"


@dataclass(frozen=True)
class ChernData:
    """Chern numbers of a smooth projective surface.

    For a smooth surface of degree ``d`` in projective three-space the
    two numbers are ``c1sq = (4-d)^2 d`` and ``c2 = d(d^2-4d+6)``;
    :meth:`from_degree` applies those formulas.
    """

    c1sq: Fraction
    c2: Fraction
    degree: int | None = None

    @classmethod
    def from_degree(cls, d: int) -> "ChernData":
        if d < 1:
            raise ValueError("the degree must be a positive integer")
        return cls(Fraction((4 - d) ** 2 * d), Fraction(d * (d * d - 4 * d + 6)), d)


@dataclass(frozen=True)
class ChernData3:
    """Chern numbers c1, c2, c3 of a smooth projective threefold."""

    c1: Fraction
    c2: Fraction
    c3: Fraction


@dataclass(frozen=True)
class ChernData4:
    """Chern numbers c1 through c4 of a smooth projective fourfold."""

    c1: Fraction
    c2: Fraction
    c3: Fraction
    c4: Fraction


@dataclass(frozen=True)
class SchurGenerator:
    """A fundamental invariant together with its Schur bidegree.

    ``weight`` is the jet weight and ``(l1, l2)`` counts how often the
    two coordinate indices appear, which is exactly the bidegree the
    catalog records for the same-named invariant.
    """

    name: str
    weight: int
    l1: int
    l2: int


SCHUR_TABLE: dict[str, SchurGenerator] = {
    g.name: g
    for g in (
        SchurGenerator("fp1", 1, 1, 0),
        SchurGenerator("Lambda3", 3, 1, 1),
        SchurGenerator("Lambda5_1", 5, 2, 1),
        SchurGenerator("Lambda7_11", 7, 3, 1),
        SchurGenerator("M8", 8, 2, 2),
        SchurGenerator("Lambda9_111", 9, 4, 1),
        SchurGenerator("M10_1", 10, 3, 2),
        SchurGenerator("N12", 12, 3, 3),
        SchurGenerator("K12_11", 12, 4, 2),
        SchurGenerator("H14_1", 14, 4, 3),
        SchurGenerator("F16_11", 16, 5, 3),
    )
}

# letter -> generator, following the elimination-order alphabet
LETTER_GENERATORS: dict[str, SchurGenerator] = {
    letter: SCHUR_TABLE[name] for letter, name in LETTER_INVARIANTS.items()
}


@dataclass(frozen=True)
class FamilySpec:
    """One monomial family of invariants.

    ``free_generators`` may take any nonnegative exponents.  The
    ``fixed_monomial`` lists extra forced factors as (name, exponent)
    pairs: a name absent from the free list is pinned to exactly that
    exponent, while a name that also appears free acts as a prefactor
    and only shifts the exponent range upward.  Either way the forced
    factors contribute the ``fixed_offset`` to weight and bidegree.
    """

    label: str
    free_generators: tuple[SchurGenerator, ...]
    fixed_monomial: tuple[tuple[str, int], ...] = ()

    def __post_init__(self) -> None:
        names = [g.name for g in self.free_generators]
        if len(set(names)) != len(names):
            raise ValueError(f"family {self.label!r} repeats a free generator")
        if names.count(SLACK_NAME) > 1:
            raise ValueError(f"family {self.label!r} has two slack generators")

    @property
    def has_slack(self) -> bool:
        return any(g.name == SLACK_NAME for g in self.free_generators)

    @property
    def fixed_offset(self) -> tuple[int, int, int]:
        w = l1 = l2 = 0
        for name, exp in self.fixed_monomial:
            g = SCHUR_TABLE[name]
            w += exp * g.weight
            l1 += exp * g.l1
            l2 += exp * g.l2
        return (w, l1, l2)


@dataclass(frozen=True)
class LeadingCoefficients:
    """Top-degree coefficient pair of a family sum.

    The Euler characteristic of the summed families is
    ``(c1sq_coeff * c1sq - c2_coeff * c2) * m**N`` up to lower order, so
    ``c2_coeff`` is the coefficient of minus c2.
    """

    c1sq_coeff: Fraction
    c2_coeff: Fraction
    N: int
    notes: tuple[str, ...] = ()

    def evaluate(self, chern: ChernData) -> Fraction:
        """The per-m^N value for concrete Chern numbers."""
        return self.c1sq_coeff * chern.c1sq - self.c2_coeff * chern.c2

    def quotient(self) -> Fraction:
        if self.c2_coeff == 0:
            raise ValueError("the c2 coefficient vanishes")
        return self.c1sq_coeff / self.c2_coeff


# ---------------------------------------------------------------------------
# chi formulas


def chi2_leading(l1, l2, chern: ChernData):
    """Leading Euler characteristic of one Schur bundle on a surface.

    The cubic leading form (1/6) c1sq (l1^3 - l2^3) - (1/6) c2
    (l1 - l2)^3.  Arguments may be integers, Fractions, or polynomials;
    the formula is antisymmetric under swapping l1 and l2.
    """
    sixth = Fraction(1, 6)
    return (sixth * chern.c1sq) * (l1**3 - l2**3) - (sixth * chern.c2) * (l1 - l2) ** 3


def _det(rows):
    """Determinant by cofactor expansion along the first row."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    sign = 1
    for col in range(n):
        minor = [[row[c] for c in range(n) if c != col] for row in rows[1:]]
        total = total + sign * rows[0][col] * _det(minor)
        sign = -sign
    return total


def _power_det(ls: Sequence, powers: Sequence[int]):
    return _det([[l**p for l in ls] for p in powers])


def chi3_leading(l1, l2, l3, chern: ChernData3):
    """Leading Euler characteristic of a Schur bundle on a threefold.

    Three generalized Vandermonde determinants weighted by Chern-number
    combinations; the remainder of order |l|^5 is dropped.  Swapping two
    of the l arguments flips every determinant and hence the sign.
    """
    ls = (l1, l2, l3)
    d123 = _power_det(ls, (1, 2, 3))
    d024 = _power_det(ls, (0, 2, 4))
    d015 = _power_det(ls, (0, 1, 5))
    c1, c2, c3 = chern.c1, chern.c2, chern.c3
    return (
        Fraction(1, 12) * c3 * d123
        + Fraction(1, 48) * (c1 * c2 - c3) * d024
        + Fraction(1, 120) * (c1**3 - 2 * c1 * c2 + c3) * d015
    )


def chi4_leading(l1, l2, l3, l4, chern: ChernData4):
    """Leading Euler characteristic of a Schur bundle on a fourfold."""
    ls = (l1, l2, l3, l4)
    c1, c2, c3, c4 = chern.c1, chern.c2, chern.c3, chern.c4
    pieces = (
        ((0, 1, 2, 7), Fraction(-1, 10080) * (c1**4 - 3 * c1**2 * c2 + c2**2 + 2 * c1 * c3 - c4)),
        ((1, 2, 3, 4), Fraction(-1, 288) * c4),
        ((0, 2, 3, 5), Fraction(1, 1440) * (c4 - c1 * c3)),
        ((0, 1, 3, 6), Fraction(-1, 4320) * (c1**2 * c2 - c2**2 - c1 * c3 + c4)),
        ((0, 1, 4, 5), Fraction(1, 2880) * (c1 * c3 - c2**2)),
    )
    total = 0
    for powers, coeff in pieces:
        total = total + coeff * _power_det(ls, powers)
    return total


# ---------------------------------------------------------------------------
# family construction


def families_from_staircase(
    components: Iterable[tuple[str, StaircaseComponent]],
    correspondence: Mapping[str, SchurGenerator] | None = None,
) -> list[FamilySpec]:
    """Convert labeled staircase components into Schur families.

    Free letters become free generators (in alphabetical letter order,
    so the reversed list is the integration nesting), and pinned
    exponents become forced factors.
    """
    table = LETTER_GENERATORS if correspondence is None else correspondence
    out = []
    for label, comp in components:
        try:
            gens = tuple(table[ch] for ch in sorted(comp.free))
            fixed = tuple((table[ch].name, v) for ch, v in comp.fixed)
        except KeyError as exc:
            raise ValueError(f"component {label!r} uses an unknown letter {exc.args[0]!r}") from None
        out.append(FamilySpec(label, gens, fixed))
    return out


def load_families(section: str, path: str | Path | None = None) -> list[FamilySpec]:
    """Read a family section from the euler fixture file.

    Payload clauses: ``free=<letters>`` (required), ``fixed=<letter>:<n>``
    pinning exponents, and ``prefactor=<letter>`` forcing one extra copy
    of a generator that stays free.
    """
    data = load_fixture(Path(path) if path else fixture_path(EULER_FIXTURE))
    if section not in data:
        raise FixtureError(f"no fixture section named {section!r}")
    out = []
    for e in data[section]:
        free: list[str] = []
        fixed: list[tuple[str, int]] = []
        for part in e.payload.split(";"):
            part = part.strip()
            if part.startswith("free="):
                free = part[5:].split(",")
            elif part.startswith("fixed="):
                for kv in part[6:].split(","):
                    ch, v = kv.split(":")
                    fixed.append((LETTER_GENERATORS[ch].name, int(v)))
            elif part.startswith("prefactor="):
                fixed.append((LETTER_GENERATORS[part[10:]].name, 1))
            elif part:
                raise FixtureError(f"bad family clause {part!r} in {e.name}")
        gens = tuple(LETTER_GENERATORS[ch] for ch in free)
        out.append(FamilySpec(e.name, gens, tuple(fixed)))
    return out


def order4_families(path: str | Path | None = None) -> list[FamilySpec]:
    return load_families("ORDER4", path)


def order5_true_families() -> list[FamilySpec]:
    """The sixteen order-five rows derived from the staircase complement."""
    return families_from_staircase(load_staircase("STAIRCASE16"))


def order5_printed_families(path: str | Path | None = None) -> list[FamilySpec]:
    """The sixteen order-five rows as the crosscheck source prints them."""
    return load_families("STAIRCASE16_PRINTED", path)


def load_pairs(section: str, path: str | Path | None = None) -> dict[str, tuple[Fraction, Fraction]]:
    """Read frozen (c1, c2) coefficient pairs from the euler fixture."""
    data = load_fixture(Path(path) if path else fixture_path(EULER_FIXTURE))
    if section not in data:
        raise FixtureError(f"no fixture section named {section!r}")
    out: dict[str, tuple[Fraction, Fraction]] = {}
    for e in data[section]:
        vals: dict[str, Fraction] = {}
        for token in e.payload.split():
            key, _, text = token.partition("=")
            if key not in ("c1", "c2") or not text:
                raise FixtureError(f"bad coefficient token {token!r} in {e.name}")
            vals[key] = Fraction(text)
        if set(vals) != {"c1", "c2"}:
            raise FixtureError(f"entry {e.name} needs exactly c1 and c2")
        out[e.name] = (vals["c1"], vals["c2"])
    return out


# ---------------------------------------------------------------------------
# exact simplex integration


def family_leading_pair(
    family: FamilySpec, nesting: Sequence[str] | None = None
) -> tuple[Fraction, Fraction]:
    """Top-degree coefficient pair of one family, by exact integration.

    The slack generator is eliminated from the cubic integrand; the
    remaining free generators are integrated over the weighted simplex
    with nested polynomial bounds, outermost first in reversed listing
    order (heaviest letters outside).  Families of five free generators
    additionally receive the outermost slack integral from 0 to m, which
    is the convention of the crosscheck source and raises the total
    degree from 7 to 8.  Families lacking the slack return (0, 0).

    ``nesting`` may name the non-slack generators in any other order;
    the value does not depend on it.
    """
    n = len(family.free_generators)
    if n == 4:
        outer_slack = False
        total_degree = 6
    elif n == 5:
        outer_slack = True
        total_degree = 8
    else:
        raise ValueError(f"family {family.label!r} must have four or five free generators")
    if not family.has_slack:
        return (Fraction(0), Fraction(0))

    non_slack = [g for g in family.free_generators if g.name != SLACK_NAME]
    if nesting is None:
        order = list(reversed(non_slack))
    else:
        by_name = {g.name: g for g in non_slack}
        if sorted(nesting) != sorted(by_name):
            raise ValueError("nesting must permute the non-slack generator names")
        order = [by_name[name] for name in nesting]

    mvar = named("m")
    svar = named("slack")
    m = Polynomial.var(mvar)
    xvars = {g.name: Polynomial.var(named("x_" + g.name)) for g in non_slack}

    slack_gen = SCHUR_TABLE[SLACK_NAME]
    slack_expr = m - sum(g.weight * xvars[g.name] for g in non_slack)
    l1 = slack_gen.l1 * slack_expr + sum(g.l1 * xvars[g.name] for g in non_slack)
    l2 = slack_gen.l2 * slack_expr + sum(g.l2 * xvars[g.name] for g in non_slack)

    results = []
    for integrand in (
        Fraction(1, 6) * (l1**3 - l2**3),
        Fraction(1, 6) * (l1 - l2) ** 3,
    ):
        expr = integrand
        for idx in range(len(order) - 1, -1, -1):
            g = order[idx]
            budget = m - sum(o.weight * xvars[o.name] for o in order[:idx])
            if outer_slack:
                budget = budget - Polynomial.var(svar)
            cap = budget * Fraction(1, g.weight)
            expr = integrate_between(expr, named("x_" + g.name), 0, cap)
        if outer_slack:
            expr = integrate_between(expr, svar, 0, m)
        coeff = expr.coefficient(((mvar, total_degree),))
        if expr != Polynomial.from_terms([(((mvar, total_degree),), coeff)]):
            raise AssertionError("the simplex integral is not homogeneous of the expected degree")
        results.append(coeff)
    return (results[0], results[1])


def leading_coefficients(families: Sequence[FamilySpec]) -> LeadingCoefficients:
    """Summed top-degree coefficients of a list of families.

    Families are summed without disjointification because pairwise
    overlaps only contribute at lower order.  Families without a slack
    generator contribute zero at the top degree and are recorded in the
    notes.
    """
    fams = list(families)
    if not fams:
        raise ValueError("no families given")
    sizes = {len(f.free_generators) for f in fams}
    if len(sizes) != 1:
        raise ValueError("families of different orders cannot be summed")
    total_degree = 6 if sizes.pop() == 4 else 8
    c1 = Fraction(0)
    c2 = Fraction(0)
    notes = []
    for fam in fams:
        if not fam.has_slack:
            notes.append(
                f"{fam.label}: no slack generator, O(m^{total_degree - 1}) only, contributes 0"
            )
            continue
        p1, p2 = family_leading_pair(fam)
        c1 += p1
        c2 += p2
    return LeadingCoefficients(c1, c2, total_degree, tuple(notes))


# ---------------------------------------------------------------------------
# exact lattice sums


def chi_sum_exact(
    families: Sequence[FamilySpec], m: int, chern: ChernData, cap: int = 400
) -> Fraction:
    """Exact sum of leading chi values over the weight-m lattice points.

    Every family contributes its monomials of total weight exactly m
    (forced factors included); monomials produced by several families
    are counted once.
    """
    if m < 0:
        raise ValueError("the weight must be nonnegative")
    if m > cap:
        raise ValueError(f"weight {m} exceeds the enumeration cap {cap}")

    seen: dict[tuple[tuple[str, int], ...], tuple[int, int]] = {}
    for fam in families:
        w0, l10, l20 = fam.fixed_offset
        budget = m - w0
        if budget < 0:
            continue
        gens = fam.free_generators
        base = dict(fam.fixed_monomial)

        def walk(idx: int, rem: int, exps: list[int]) -> None:
            if idx == len(gens) - 1:
                g = gens[idx]
                if rem % g.weight == 0:
                    exps.append(rem // g.weight)
                    _record(exps)
                    exps.pop()
                return
            g = gens[idx]
            for count in range(rem // g.weight + 1):
                exps.append(count)
                walk(idx + 1, rem - count * g.weight, exps)
                exps.pop()

        def _record(exps: list[int]) -> None:
            merged = dict(base)
            l1 = l10
            l2 = l20
            for g, e in zip(gens, exps):
                if e:
                    merged[g.name] = merged.get(g.name, 0) + e
                    l1 += e * g.l1
                    l2 += e * g.l2
            key = tuple(sorted((name, e) for name, e in merged.items() if e))
            prior = seen.get(key)
            if prior is None:
                seen[key] = (l1, l2)
            elif prior != (l1, l2):
                raise ValueError(f"inconsistent bidegrees for the monomial {key!r}")

        if gens:
            walk(0, budget, [])
        elif budget == 0:
            _record([])

    total = Fraction(0)
    for l1, l2 in seen.values():
        total += chi2_leading(l1, l2, chern)
    return total


# ---------------------------------------------------------------------------
# the positivity threshold


def degree_threshold(C: Fraction | int) -> int:
    """Smallest d0 with d^2(C-1) - d(8C-4) + 16C - 6 > 0 for all d >= d0."""
    C = Fraction(C)
    if C <= 1:
        raise ValueError("the quotient must exceed 1")

    def q(d: int) -> Fraction:
        return d * d * (C - 1) - d * (8 * C - 4) + 16 * C - 6

    # scan past the vertex until q turns positive; it stays positive after
    vertex = (8 * C - 4) / (2 * (C - 1))
    last_bad = 0
    d = 1
    while d <= vertex or q(d) <= 0:
        if q(d) <= 0:
            last_bad = d
        d += 1
    return last_bad + 1
