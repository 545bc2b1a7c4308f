"""The named-invariant catalog, built twice and cross-checked.

Every catalog entry is constructed along two independent routes:

* an explicit route that writes the polynomial as a combination of
  wronskian minors ``Delta^{a,b}`` with low-order jet cofactors, and
* a bracket route that climbs the tower ``[P, Q] = wt(Q) DP Q - wt(P) P DQ``
  starting from the first derivatives alone.

The two routes must agree coefficient for coefficient; a disagreement
aborts the build with :class:`CatalogMismatchError`.  On top of the 25
basic entries (dimension 2, order 5) the build extracts the ghost
quotients, which are defined as exact divisions of pair combinations by
``f1_1`` and which live one order further up the weight ladder.

A parallel "delta form" of each entry keeps the wronskian minors as
opaque symbols.  Quotients computed in that free ring stay readable
term by term, which is what the frozen coefficient spot checks bite on;
substituting the symbols away must reproduce the jet-level polynomials.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Callable, Iterator, Mapping, Sequence

from .fixtures import FixtureEntry, fixture_path, load_fixture
from .jets import (
    InvariantMeta,
    JetContext,
    WronskianIndex,
    bidegree,
    delta,
    total_derivative,
    weight,
    wronskian3,
)
from .rings import ExactDivisionError, Polynomial, Var, jet, named

__all__ = [
    "CatalogMismatchError",
    "NamedInvariant",
    "Catalog",
    "NU2_BASE_NAMES",
    "NU2_GHOST_NAMES",
    "NU3_BASE_NAMES",
    "bracket",
    "covariant",
    "build_catalog",
    "ghost_extract",
    "ghost_numerators",
    "abstract_delta_forms",
    "ghost_delta_form",
    "expand_delta_tokens",
    "DisplayCheck",
    "verify_display_form",
    "verify_display_forms",
]


class CatalogMismatchError(RuntimeError):
    """The two construction routes disagree on an entry."""

    def __init__(self, name: str, residual: Polynomial):
        self.name = name
        self.residual = residual
        super().__init__(f"route mismatch for {name}: residual has {len(residual)} terms")


@dataclass(frozen=True)
class NamedInvariant:
    """One catalog entry with its polynomial, grading data, and provenance."""

    name: str
    poly: Polynomial
    meta: InvariantMeta
    construction: str

    @property
    def weight(self) -> int:
        return self.meta.weight

    @property
    def bidegree(self) -> tuple[int, int] | None:
        return self.meta.bidegree


# Catalog order for dimension 2.  The gate column is the smallest jet
# order at which the entry exists.
NU2_BASE_NAMES: tuple[str, ...] = (
    "fp1",
    "fp2",
    "Lambda3",
    "Lambda5_1",
    "Lambda5_2",
    "Lambda7_11",
    "Lambda7_12",
    "Lambda7_22",
    "M8",
    "Lambda9_111",
    "Lambda9_121",
    "Lambda9_212",
    "Lambda9_222",
    "M10_1",
    "M10_2",
    "N12",
    "K12_11",
    "K12_12",
    "K12_21",
    "K12_22",
    "H14_1",
    "H14_2",
    "F16_11",
    "F16_12",
    "F16_22",
)

NU2_GHOST_NAMES: tuple[str, ...] = ("X18", "X19", "X21", "X23", "X25", "X27")

_NU2_GATE: dict[str, int] = {}
for _name in NU2_BASE_NAMES:
    if _name.startswith("fp"):
        _NU2_GATE[_name] = 1
    elif _name == "Lambda3":
        _NU2_GATE[_name] = 2
    elif _name.startswith("Lambda5"):
        _NU2_GATE[_name] = 3
    elif _name.startswith("Lambda7") or _name == "M8":
        _NU2_GATE[_name] = 4
    else:
        _NU2_GATE[_name] = 5

NU3_BASE_NAMES: tuple[str, ...] = (
    "fp1",
    "fp2",
    "fp3",
    "Lambda3_12",
    "Lambda3_13",
    "Lambda3_23",
    "Lambda5_12_1",
    "Lambda5_12_2",
    "Lambda5_12_3",
    "Lambda5_13_1",
    "Lambda5_13_2",
    "Lambda5_13_3",
    "Lambda5_23_1",
    "Lambda5_23_2",
    "Lambda5_23_3",
    "D6_123",
)


def _jv(i: int, lam: int) -> Polynomial:
    return Polynomial.var(jet(i, lam))


def bracket(p: Polynomial, q: Polynomial, ctx: JetContext | None = None) -> Polynomial:
    """``[P, Q] = wt(Q) DP Q - wt(P) P DQ``; weight adds and gains one."""
    m = weight(p)
    n = weight(q)
    return n * total_derivative(p, ctx) * q - m * p * total_derivative(q, ctx)


def covariant(p: Polynomial, k: int, ctx: JetContext | None = None) -> Polynomial:
    """Bracket against the k-th first derivative; raises the weight by 2."""
    return bracket(p, _jv(k, 1), ctx)


def _delta(ctx: JetContext, alpha: int, beta: int, i: int = 1, j: int = 2) -> Polynomial:
    return delta(ctx, WronskianIndex(alpha, beta, i, j))


def _explicit_nu2(ctx: JetContext) -> dict[str, Polynomial]:
    """Wronskian-minor expressions for every entry the jet order admits."""
    kappa = ctx.kappa
    out: dict[str, Polynomial] = {"fp1": _jv(1, 1), "fp2": _jv(2, 1)}
    if kappa < 2:
        return out
    d = lambda a, b: _delta(ctx, a, b)
    out["Lambda3"] = d(1, 2)
    if kappa < 3:
        return out
    for i in (1, 2):
        out[f"Lambda5_{i}"] = d(1, 3) * _jv(i, 1) - 3 * d(1, 2) * _jv(i, 2)
    if kappa < 4:
        return out
    for i, j in ((1, 1), (1, 2), (2, 2)):
        fi1, fi2 = _jv(i, 1), _jv(i, 2)
        fj1, fj2 = _jv(j, 1), _jv(j, 2)
        out[f"Lambda7_{i}{j}"] = (
            d(1, 4) * fi1 * fj1
            + 4 * d(2, 3) * fi1 * fj1
            - 5 * d(1, 3) * (fi2 * fj1 + fi1 * fj2)
            + 15 * d(1, 2) * fi2 * fj2
        )
    out["M8"] = 3 * d(1, 4) * d(1, 2) + 12 * d(2, 3) * d(1, 2) - 5 * d(1, 3) ** 2
    if kappa < 5:
        return out
    for i, j, k in ((1, 1, 1), (1, 2, 1), (2, 1, 2), (2, 2, 2)):
        fi1, fi2, fi3 = _jv(i, 1), _jv(i, 2), _jv(i, 3)
        fj1, fj2, fj3 = _jv(j, 1), _jv(j, 2), _jv(j, 3)
        fk1, fk2 = _jv(k, 1), _jv(k, 2)
        out[f"Lambda9_{i}{j}{k}"] = (
            d(1, 5) * fi1 * fj1 * fk1
            + 5 * d(2, 4) * fi1 * fj1 * fk1
            - 4 * d(1, 4) * (fi2 * fj1 + fi1 * fj2) * fk1
            - 7 * d(1, 4) * fi1 * fj1 * fk2
            - 16 * d(2, 3) * (fi2 * fj1 + fi1 * fj2) * fk1
            - 28 * d(2, 3) * fi1 * fj1 * fk2
            - 5 * d(1, 3) * (fi3 * fj1 + fi1 * fj3) * fk1
            + 35 * d(1, 3) * (fi2 * fj2 * fk1 + fi2 * fj1 * fk2 + fi1 * fj2 * fk2)
            - 105 * d(1, 2) * fi2 * fj2 * fk2
        )
    m10_head = 3 * d(1, 5) * d(1, 2) + 15 * d(2, 4) * d(1, 2) - 7 * d(1, 4) * d(1, 3) + 2 * d(2, 3) * d(1, 3)
    m10_tail = 24 * d(1, 4) * d(1, 2) + 96 * d(2, 3) * d(1, 2) - 40 * d(1, 3) ** 2
    for i in (1, 2):
        out[f"M10_{i}"] = m10_head * _jv(i, 1) - m10_tail * _jv(i, 2)
    out["N12"] = (
        9 * d(1, 5) * d(1, 2) ** 2
        + 45 * d(2, 4) * d(1, 2) ** 2
        - 45 * d(1, 4) * d(1, 3) * d(1, 2)
        - 90 * d(2, 3) * d(1, 3) * d(1, 2)
        + 40 * d(1, 3) ** 3
    )
    k12_a = 5 * d(1, 5) * d(1, 3) + 25 * d(2, 4) * d(1, 3) - 7 * d(1, 4) ** 2 - 56 * d(2, 3) * d(1, 4) - 112 * d(2, 3) ** 2
    k12_b = -15 * d(1, 5) * d(1, 2) - 75 * d(2, 4) * d(1, 2) + 65 * d(1, 4) * d(1, 3) + 110 * d(2, 3) * d(1, 3)
    k12_c = -50 * d(1, 3) ** 2
    k12_d = -25 * d(1, 3) ** 2 + 15 * d(1, 4) * d(1, 2) + 60 * d(2, 3) * d(1, 2)
    half = Fraction(1, 2)
    for i, j in ((1, 1), (1, 2), (2, 1), (2, 2)):
        fi1, fi2, fi3 = _jv(i, 1), _jv(i, 2), _jv(i, 3)
        fj1, fj2, fj3 = _jv(j, 1), _jv(j, 2), _jv(j, 3)
        out[f"K12_{i}{j}"] = (
            k12_a * fi1 * fj1
            + k12_b * (fi1 * fj2 + fi2 * fj1) * half
            + k12_c * (fi1 * fj3 + fi3 * fj1) * half
            + k12_d * fi2 * fj2
        )
    h14_head = (
        15 * d(1, 5) * d(1, 3) * d(1, 2)
        + 75 * d(2, 4) * d(1, 3) * d(1, 2)
        + 5 * d(1, 4) * d(1, 3) ** 2
        + 170 * d(2, 3) * d(1, 3) ** 2
        - 24 * d(1, 4) ** 2 * d(1, 2)
        - 192 * d(1, 4) * d(2, 3) * d(1, 2)
        - 384 * d(2, 3) ** 2 * d(1, 2)
    )
    for i in (1, 2):
        out[f"H14_{i}"] = h14_head * _jv(i, 1) - 5 * out["N12"] * _jv(i, 2)
    f16_a = (
        -3 * d(1, 5) * d(1, 4) * d(1, 2)
        - 15 * d(2, 4) * d(1, 4) * d(1, 2)
        - 12 * d(1, 5) * d(2, 3) * d(1, 2)
        + 40 * d(1, 5) * d(1, 3) ** 2
        - 60 * d(2, 4) * d(2, 3) * d(1, 2)
        + 200 * d(2, 4) * d(1, 3) ** 2
        - 49 * d(1, 4) ** 2 * d(1, 3)
        - 422 * d(1, 4) * d(2, 3) * d(1, 3)
        - 904 * d(2, 3) ** 2 * d(1, 3)
    )
    f16_b = (
        -105 * d(1, 5) * d(1, 3) * d(1, 2)
        - 525 * d(2, 4) * d(1, 3) * d(1, 2)
        + 205 * d(1, 4) * d(1, 3) ** 2
        - 230 * d(2, 3) * d(1, 3) ** 2
        + 96 * d(1, 4) ** 2 * d(1, 2)
        + 768 * d(1, 4) * d(2, 3) * d(1, 2)
        + 1536 * d(2, 3) ** 2 * d(1, 2)
    )
    f16_c = -200 * d(1, 3) ** 3
    f16_d = (
        315 * d(1, 5) * d(1, 2) ** 2
        + 1575 * d(2, 4) * d(1, 2) ** 2
        - 1575 * d(1, 4) * d(1, 3) * d(1, 2)
        - 3150 * d(2, 3) * d(1, 3) * d(1, 2)
        + 1400 * d(1, 3) ** 3
    )
    for i, j in ((1, 1), (1, 2), (2, 2)):
        fi1, fi2, fi3 = _jv(i, 1), _jv(i, 2), _jv(i, 3)
        fj1, fj2, fj3 = _jv(j, 1), _jv(j, 2), _jv(j, 3)
        out[f"F16_{i}{j}"] = (
            f16_a * fi1 * fj1
            + f16_b * (fi2 * fj1 + fi1 * fj2)
            + f16_c * (fi3 * fj1 + fi1 * fj3)
            + f16_d * fi2 * fj2
        )
    return out


def _bracket_nu2(ctx: JetContext) -> dict[str, Polynomial]:
    """Tower construction from the first derivatives upward.

    Quotient entries come with an internal consistency check: M8 must
    divide out the same way from both columns, and the two mixed K12
    extractions must land on one polynomial.
    """
    kappa = ctx.kappa
    fp = {i: _jv(i, 1) for i in (1, 2)}
    out: dict[str, Polynomial] = {"fp1": fp[1], "fp2": fp[2]}
    if kappa < 2:
        return out
    out["Lambda3"] = bracket(fp[2], fp[1], ctx)
    if kappa < 3:
        return out
    for i in (1, 2):
        out[f"Lambda5_{i}"] = bracket(out["Lambda3"], fp[i], ctx)
    if kappa < 4:
        return out
    for i, j in ((1, 1), (1, 2), (2, 2)):
        out[f"Lambda7_{i}{j}"] = bracket(out[f"Lambda5_{i}"], fp[j], ctx)
    sym = bracket(out["Lambda5_2"], fp[1], ctx) - out["Lambda7_12"]
    if sym:
        raise CatalogMismatchError("Lambda7_21", sym)
    m8 = bracket(out["Lambda5_1"], out["Lambda3"], ctx).divide_exact(fp[1])
    m8_other = bracket(out["Lambda5_2"], out["Lambda3"], ctx).divide_exact(fp[2])
    if m8 != m8_other:
        raise CatalogMismatchError("M8", m8 - m8_other)
    out["M8"] = m8
    if kappa < 5:
        return out
    for i, j, k in ((1, 1, 1), (1, 2, 1), (2, 1, 2), (2, 2, 2)):
        out[f"Lambda9_{i}{j}{k}"] = bracket(out[f"Lambda7_{min(i, j)}{max(i, j)}"], fp[k], ctx)
    for i in (1, 2):
        out[f"M10_{i}"] = bracket(out["M8"], fp[i], ctx)
    out["N12"] = bracket(out["M8"], out["Lambda3"], ctx)
    for i in (1, 2):
        out[f"K12_{i}{i}"] = bracket(out[f"Lambda7_{i}{i}"], out[f"Lambda5_{i}"], ctx).divide_exact(fp[i])
    # The mixed brackets only become divisible after peeling off lower
    # catalog entries; both peelings must give the same quotient.
    k12_12 = (
        bracket(out["Lambda7_11"], out["Lambda5_2"], ctx)
        + Fraction(5, 2) * out["Lambda3"] * out["M10_1"]
        + 5 * out["Lambda5_1"] * out["M8"]
    ).divide_exact(fp[1])
    k12_21 = (
        bracket(out["Lambda7_22"], out["Lambda5_1"], ctx)
        - Fraction(5, 2) * out["Lambda3"] * out["M10_2"]
        - 5 * out["Lambda5_2"] * out["M8"]
    ).divide_exact(fp[2])
    if k12_12 != k12_21:
        raise CatalogMismatchError("K12_12", k12_12 - k12_21)
    out["K12_12"] = k12_12
    out["K12_21"] = k12_21
    for i in (1, 2):
        out[f"H14_{i}"] = bracket(out["M8"], out[f"Lambda5_{i}"], ctx)
    for i, j in ((1, 1), (1, 2), (2, 2)):
        out[f"F16_{i}{j}"] = bracket(out["M8"], out[f"Lambda7_{i}{j}"], ctx)
    return out


def _explicit_nu3(ctx: JetContext) -> dict[str, Polynomial]:
    out: dict[str, Polynomial] = {f"fp{i}": _jv(i, 1) for i in (1, 2, 3)}
    for i, j in ((1, 2), (1, 3), (2, 3)):
        out[f"Lambda3_{i}{j}"] = delta(ctx, WronskianIndex(1, 2, i, j))
    for i, j in ((1, 2), (1, 3), (2, 3)):
        d13 = delta(ctx, WronskianIndex(1, 3, i, j))
        d12 = out[f"Lambda3_{i}{j}"]
        for k in (1, 2, 3):
            out[f"Lambda5_{i}{j}_{k}"] = d13 * _jv(k, 1) - 3 * d12 * _jv(k, 2)
    out["D6_123"] = wronskian3(ctx)
    return out


def _bracket_nu3(ctx: JetContext) -> dict[str, Polynomial]:
    out: dict[str, Polynomial] = {f"fp{i}": _jv(i, 1) for i in (1, 2, 3)}
    for i, j in ((1, 2), (1, 3), (2, 3)):
        out[f"Lambda3_{i}{j}"] = bracket(out[f"fp{j}"], out[f"fp{i}"], ctx)
        for k in (1, 2, 3):
            out[f"Lambda5_{i}{j}_{k}"] = bracket(out[f"Lambda3_{i}{j}"], out[f"fp{k}"], ctx)
    # The 3x3 wronskian is reached as a ghost quotient: the pair
    # combination of two Lambda5 columns is exactly divisible by fp1^2.
    numerator = (
        out["Lambda3_12"] * out["Lambda5_13_1"] - out["Lambda3_13"] * out["Lambda5_12_1"]
    )
    out["D6_123"] = ghost_extract("D6_123", numerator, divisor_power=2)
    return out


def ghost_extract(name: str, numerator: Polynomial, divisor_power: int = 1) -> Polynomial:
    """Divide a pair combination exactly by ``f1_1 ** divisor_power``.

    Exactness is structural: a nonzero remainder means the combination
    was not a ghost numerator, and the error carries the name.
    """
    divisor = _jv(1, 1) ** divisor_power
    try:
        return numerator.divide_exact(divisor)
    except ExactDivisionError as exc:
        raise ExactDivisionError(f"ghost {name}: {exc}") from exc


def ghost_numerators(base: Mapping[str, Polynomial]) -> dict[str, Polynomial]:
    """Pair combinations whose quotients by ``f1_1`` are the ghosts.

    ``Y23`` duplicates ``X23`` and is kept here only so callers can
    verify the coincidence; the catalog itself appends six ghosts.
    """
    l7, l9 = base["Lambda7_11"], base["Lambda9_111"]
    m8, m10, n12 = base["M8"], base["M10_1"], base["N12"]
    k12, h14, f16 = base["K12_11"], base["H14_1"], base["F16_11"]
    return {
        "X18": -5 * l9 * m10 + 56 * l7 * k12,
        "X19": -5 * m10 * m10 + 64 * m8 * k12,
        "X21": -5 * m10 * n12 + 8 * m8 * h14,
        "X23": -7 * n12 * k12 + m8 * f16,
        "Y23": -8 * n12 * k12 + m10 * h14,
        "X25": -56 * k12 * h14 + 5 * m10 * f16,
        "X27": -7 * h14 * h14 + 5 * n12 * f16,
    }


_GHOST_META: dict[str, InvariantMeta] = {
    "X18": InvariantMeta(18, (6, 3)),
    "X19": InvariantMeta(19, (5, 4)),
    "X21": InvariantMeta(21, (5, 5)),
    "X23": InvariantMeta(23, (6, 5)),
    "X25": InvariantMeta(25, (7, 5)),
    "X27": InvariantMeta(27, (7, 6)),
}


class Catalog:
    """Ordered, name-addressed collection of :class:`NamedInvariant`."""

    def __init__(self, ctx: JetContext, entries: Sequence[NamedInvariant], ghost_names: Sequence[str] = ()):  # noqa: E501
        self.ctx = ctx
        self._entries = tuple(entries)
        self._by_name = {entry.name: entry for entry in self._entries}
        if len(self._by_name) != len(self._entries):
            raise ValueError("duplicate catalog names")
        self.ghost_names = tuple(ghost_names)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(entry.name for entry in self._entries)

    @property
    def base_names(self) -> tuple[str, ...]:
        ghosts = set(self.ghost_names)
        return tuple(name for name in self.names if name not in ghosts)

    def __iter__(self) -> Iterator[NamedInvariant]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, name: object) -> bool:
        return name in self._by_name

    def __getitem__(self, name: str) -> NamedInvariant:
        try:
            return self._by_name[name]
        except KeyError:
            raise KeyError(f"no catalog entry named {name!r}") from None

    def poly(self, name: str) -> Polynomial:
        return self[name].poly

    def weight_of(self, name: str) -> int:
        return self[name].meta.weight

    def bidegree_of(self, name: str) -> tuple[int, int]:
        bd = self[name].meta.bidegree
        if bd is None:
            raise ValueError(f"{name} carries no bidegree")
        return bd

    def subs_map(self, letters: Mapping[str, str]) -> dict[Var, Polynomial]:
        """Map named letter variables onto catalog polynomials."""
        return {named(letter): self.poly(target) for letter, target in letters.items()}


def _compare_routes(explicit: Mapping[str, Polynomial], towered: Mapping[str, Polynomial]) -> None:
    if set(explicit) != set(towered):
        missing = set(explicit) ^ set(towered)
        raise CatalogMismatchError(sorted(missing)[0], Polynomial.zero())
    for name, poly in explicit.items():
        residual = poly - towered[name]
        if residual:
            raise CatalogMismatchError(name, residual)


def build_catalog(ctx: JetContext, with_ghosts: bool = True) -> Catalog:
    """Build, cross-check, and grade the catalog for ``ctx``.

    Dimension 2 gates entries by jet order (2, 3, 5, 9, then 25 rows)
    and appends the six ghosts at order 5.  Dimension 3 (order 3)
    produces the 16-entry catalog ending in the 3x3 wronskian.
    """
    if ctx.nu == 2:
        explicit = _explicit_nu2(ctx)
        towered = _bracket_nu2(ctx)
        order = [name for name in NU2_BASE_NAMES if _NU2_GATE[name] <= ctx.kappa]
    else:
        explicit = _explicit_nu3(ctx)
        towered = _bracket_nu3(ctx)
        order = list(NU3_BASE_NAMES)
    _compare_routes(explicit, towered)

    def meta_of(poly: Polynomial) -> InvariantMeta:
        # The bidegree is recorded as a partition shape (larger part
        # first); the raw orientation stays recoverable from the
        # polynomial itself.
        if ctx.nu != 2:
            return InvariantMeta(weight(poly))
        l1, l2 = bidegree(poly)
        return InvariantMeta(weight(poly), (max(l1, l2), min(l1, l2)))

    entries = [
        NamedInvariant(name, explicit[name], meta_of(explicit[name]), "explicit+bracket")
        for name in order
    ]
    ghost_names: tuple[str, ...] = ()
    if ctx.nu == 2 and ctx.kappa >= 5 and with_ghosts:
        numerators = ghost_numerators(explicit)
        ghosts = {name: ghost_extract(name, numerators[name]) for name in numerators}
        if ghosts["Y23"] != ghosts["X23"]:
            raise CatalogMismatchError("Y23", ghosts["Y23"] - ghosts["X23"])
        if ghosts["X27"] != explicit["M8"] * ghosts["X19"]:
            raise CatalogMismatchError("X27", ghosts["X27"] - explicit["M8"] * ghosts["X19"])
        for name in NU2_GHOST_NAMES:
            poly = ghosts[name]
            meta = InvariantMeta(weight(poly), bidegree(poly))
            if meta != _GHOST_META[name]:
                raise CatalogMismatchError(name, poly)
            entries.append(NamedInvariant(name, poly, meta, "ghost-quotient"))
        ghost_names = NU2_GHOST_NAMES
    return Catalog(ctx, entries, ghost_names)


# ---------------------------------------------------------------------------
# Delta forms: the same expressions with the minors kept as symbols.

_DELTA_TOKEN_RE = re.compile(r"D(\d)_(\d)")


def _dt(alpha: int, beta: int) -> Polynomial:
    return Polynomial.var(named(f"D{alpha}_{beta}"))


def _cof(i: int, lam: int) -> Polynomial:
    return Polynomial.var(jet(i, lam))


def abstract_delta_forms() -> dict[str, Polynomial]:
    """Column-1 catalog entries over free minor symbols ``Da_b``.

    Only the entries that feed ghost numerators are needed; jet
    cofactors stay as genuine jet variables so the forms substitute
    straight back into the full ring.
    """
    f, g, h = _cof(1, 1), _cof(1, 2), _cof(1, 3)
    d12, d13, d14, d15 = _dt(1, 2), _dt(1, 3), _dt(1, 4), _dt(1, 5)
    d23, d24 = _dt(2, 3), _dt(2, 4)
    forms: dict[str, Polynomial] = {}
    forms["fp1"] = f
    forms["Lambda3"] = d12
    forms["Lambda5_1"] = d13 * f - 3 * d12 * g
    forms["Lambda7_11"] = d14 * f**2 + 4 * d23 * f**2 - 10 * d13 * f * g + 15 * d12 * g**2
    forms["M8"] = 3 * d14 * d12 + 12 * d23 * d12 - 5 * d13**2
    forms["Lambda9_111"] = (
        d15 * f**3
        + 5 * d24 * f**3
        - 15 * d14 * f**2 * g
        - 60 * d23 * f**2 * g
        - 10 * d13 * f**2 * h
        + 105 * d13 * f * g**2
        - 105 * d12 * g**3
    )
    forms["M10_1"] = (3 * d15 * d12 + 15 * d24 * d12 - 7 * d14 * d13 + 2 * d23 * d13) * f - (
        24 * d14 * d12 + 96 * d23 * d12 - 40 * d13**2
    ) * g
    forms["N12"] = (
        9 * d15 * d12**2
        + 45 * d24 * d12**2
        - 45 * d14 * d13 * d12
        - 90 * d23 * d13 * d12
        + 40 * d13**3
    )
    forms["K12_11"] = (
        (5 * d15 * d13 + 25 * d24 * d13 - 7 * d14**2 - 56 * d23 * d14 - 112 * d23**2) * f**2
        + (-15 * d15 * d12 - 75 * d24 * d12 + 65 * d14 * d13 + 110 * d23 * d13) * f * g
        + (-50 * d13**2) * f * h
        + (-25 * d13**2 + 15 * d14 * d12 + 60 * d23 * d12) * g**2
    )
    forms["H14_1"] = (
        15 * d15 * d13 * d12
        + 75 * d24 * d13 * d12
        + 5 * d14 * d13**2
        + 170 * d23 * d13**2
        - 24 * d14**2 * d12
        - 192 * d14 * d23 * d12
        - 384 * d23**2 * d12
    ) * f - 5 * forms["N12"] * g
    forms["F16_11"] = (
        (
            -3 * d15 * d14 * d12
            - 15 * d24 * d14 * d12
            - 12 * d15 * d23 * d12
            + 40 * d15 * d13**2
            - 60 * d24 * d23 * d12
            + 200 * d24 * d13**2
            - 49 * d14**2 * d13
            - 422 * d14 * d23 * d13
            - 904 * d23**2 * d13
        )
        * f**2
        + (
            -105 * d15 * d13 * d12
            - 525 * d24 * d13 * d12
            + 205 * d14 * d13**2
            - 230 * d23 * d13**2
            + 96 * d14**2 * d12
            + 768 * d14 * d23 * d12
            + 1536 * d23**2 * d12
        )
        * 2
        * f
        * g
        + (-200 * d13**3) * 2 * f * h
        + (
            315 * d15 * d12**2
            + 1575 * d24 * d12**2
            - 1575 * d14 * d13 * d12
            - 3150 * d23 * d13 * d12
            + 1400 * d13**3
        )
        * g**2
    )
    return forms


def ghost_delta_form(name: str) -> Polynomial:
    """Ghost quotient computed in the free minor ring.

    The pair combinations stay exactly divisible by ``f1_1`` even when
    the minors are treated as independent symbols, so the quotient's
    coefficients can be read off monomial by monomial.
    """
    forms = abstract_delta_forms()
    numerators = ghost_numerators(forms)
    if name not in numerators:
        raise KeyError(f"no ghost named {name!r}")
    return ghost_extract(name, numerators[name])


def expand_delta_tokens(ctx: JetContext, p: Polynomial) -> Polynomial:
    """Substitute every ``Da_b`` symbol by the column-pair minor."""
    table: dict[Var, Polynomial] = {}
    for v in p.variables():
        if v.kind == 2:
            match = _DELTA_TOKEN_RE.fullmatch(v.name)
            if match:
                alpha, beta = int(match.group(1)), int(match.group(2))
                table[v] = delta(ctx, WronskianIndex(alpha, beta))
    return p.subs(table) if table else p


# ---------------------------------------------------------------------------
# Display fixtures: printed formulas checked against the built catalog.

@dataclass(frozen=True)
class DisplayCheck:
    name: str
    section: str
    locator: str
    matches: bool
    residual_terms: int

    @property
    def as_expected(self) -> bool:
        """Displayed forms should match; deliberately damaged ones should not."""
        expected = self.section != "display-damaged"
        return self.matches == expected


def _display_target(cat: Catalog, name: str) -> Polynomial:
    """Resolve a fixture entry name to the polynomial it displays.

    A ``D@`` prefix means the total derivative of the named entry; a
    trailing ``@repaired`` tag (used to pair a damaged printing with
    its correction) is ignored for resolution.
    """
    if name.startswith("D@"):
        return total_derivative(cat.poly(name[2:].split("@")[0]), cat.ctx)
    return cat.poly(name.split("@")[0])


def verify_display_form(cat: Catalog, entry: FixtureEntry) -> DisplayCheck:
    from .rings import parse

    displayed = expand_delta_tokens(cat.ctx, parse(entry.payload))
    residual = displayed - _display_target(cat, entry.name)
    return DisplayCheck(entry.name, entry.section, entry.locator, not residual, len(residual))


def verify_display_forms(cat: Catalog, path: str | Path | None = None) -> list[DisplayCheck]:
    """Check every display fixture; each carries its own expectation."""
    if path is None:
        path = fixture_path("catalog_display.txt")
    sections = load_fixture(path)
    checks: list[DisplayCheck] = []
    for section in ("display", "display-damaged", "display-repaired"):
        for entry in sections.get(section, ()):  # preserved file order
            checks.append(verify_display_form(cat, entry))
    return checks
