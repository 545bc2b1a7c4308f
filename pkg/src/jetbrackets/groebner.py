"""Elimination-order computations in the letter algebra of the catalog.

The eleven bracket invariants are abstracted to single letters and the
relations between them become an ideal in a polynomial ring.  This
module certifies the two frozen bases from ``fixtures/groebner_bases.txt``
(S-pair criterion, both membership directions, derivation from the
fifteen defining relations, substitution of the exact catalog
polynomials), and computes the staircase complement that underlies the
unique-writing normal form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .catalog import Catalog
from .fixtures import FixtureError, fixture_path, load_fixture
from .rings import Polynomial, Var, named, parse
from .syzygies import SyzygyCheck, SyzygyReport

__all__ = [
    "GROEBNER_FIXTURE",
    "RESTRICTED_LETTERS",
    "FULL_LETTERS",
    "LETTER_INVARIANTS",
    "SLOT_SUPPORTS",
    "load_letter_basis",
    "normal_form",
    "s_polynomial",
    "SPairReport",
    "GroebnerCertificate",
    "is_groebner",
    "BudgetExceeded",
    "buchberger",
    "saturation",
    "is_unit_basis",
    "reduced_bases_equal",
    "membership_both_ways",
    "certify_jet_substitution",
    "StaircaseComponent",
    "staircase_complement",
    "load_staircase",
    "classify_slot",
    "seven_slot_split",
]

GROEBNER_FIXTURE = "groebner_bases.txt"

RESTRICTED_LETTERS = "abcdefghij"
FULL_LETTERS = "abcdefghijk"

# letter -> catalog entry, in decreasing elimination order
LETTER_INVARIANTS = {
    "a": "Lambda3",
    "b": "Lambda5_1",
    "c": "Lambda7_11",
    "d": "M8",
    "e": "Lambda9_111",
    "f": "M10_1",
    "g": "N12",
    "h": "K12_11",
    "i": "H14_1",
    "j": "F16_11",
    "k": "fp1",
}

_Exp = tuple[int, ...]
_Dense = dict[_Exp, Fraction]


def _letter_vars(letters: str) -> list[Var]:
    return [named(ch) for ch in letters]


def _to_dense(p: Polynomial, letters: str) -> _Dense:
    index = {named(ch): pos for pos, ch in enumerate(letters)}
    out: _Dense = {}
    for t, c in p.terms():
        vec = [0] * len(letters)
        for v, e in t:
            pos = index.get(v)
            if pos is None:
                raise FixtureError(f"variable {v.text()} is not a basis letter")
            vec[pos] = e
        out[tuple(vec)] = c
    return out


def _from_dense(d: _Dense, letters: str) -> Polynomial:
    vs = _letter_vars(letters)
    pairs = []
    for exps, c in d.items():
        term = tuple((vs[pos], e) for pos, e in enumerate(exps) if e)
        pairs.append((term, c))
    return Polynomial.from_terms(pairs)


def _divides(a: _Exp, b: _Exp) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _sub(b: _Exp, a: _Exp) -> _Exp:
    return tuple(y - x for x, y in zip(a, b))


def _add(a: _Exp, b: _Exp) -> _Exp:
    return tuple(x + y for x, y in zip(a, b))


def _lcm(a: _Exp, b: _Exp) -> _Exp:
    return tuple(max(x, y) for x, y in zip(a, b))


def _lead(d: _Dense) -> tuple[_Exp, Fraction]:
    t = max(d)
    return t, d[t]


def _nf_dense(p: _Dense, basis: Sequence[tuple[_Exp, Fraction, _Dense]]) -> _Dense:
    work = dict(p)
    rem: _Dense = {}
    while work:
        t = max(work)
        c = work.pop(t)
        for lt, lc, g in basis:
            if _divides(lt, t):
                q = _sub(t, lt)
                ratio = c / lc
                for gt, gc in g.items():
                    if gt == lt:
                        continue
                    nt = _add(gt, q)
                    nv = work.get(nt, Fraction(0)) - ratio * gc
                    if nv:
                        work[nt] = nv
                    else:
                        work.pop(nt, None)
                break
        else:
            rem[t] = c
    return rem


def _spoly_dense(p: _Dense, q: _Dense) -> _Dense:
    (tp, cp), (tq, cq) = _lead(p), _lead(q)
    l = _lcm(tp, tq)
    up, uq = _sub(l, tp), _sub(l, tq)
    out: _Dense = {}
    for t, c in p.items():
        nt = _add(t, up)
        out[nt] = out.get(nt, Fraction(0)) + c / cp
    for t, c in q.items():
        nt = _add(t, uq)
        nv = out.get(nt, Fraction(0)) - c / cq
        if nv:
            out[nt] = nv
        else:
            out.pop(nt, None)
    return {t: c for t, c in out.items() if c}


def _monic(d: _Dense) -> _Dense:
    if not d:
        return d
    _, c = _lead(d)
    if c == 1:
        return d
    return {t: v / c for t, v in d.items()}


def _with_leads(gs: Iterable[_Dense]) -> list[tuple[_Exp, Fraction, _Dense]]:
    out = []
    for g in gs:
        lt, lc = _lead(g)
        out.append((lt, lc, g))
    return out


def load_letter_basis(
    section: str, path: str | Path | None = None
) -> list[tuple[str, Polynomial]]:
    data = load_fixture(Path(path) if path else fixture_path(GROEBNER_FIXTURE))
    if section not in data:
        raise FixtureError(f"no fixture section named {section!r}")
    return [(e.name, parse(e.payload)) for e in data[section]]


def normal_form(
    p: Polynomial, basis: Sequence[Polynomial], letters: str
) -> Polynomial:
    """Remainder of ``p`` under multivariate division by ``basis``."""
    dense = _with_leads(_to_dense(g, letters) for g in basis if not g.is_zero())
    return _from_dense(_nf_dense(_to_dense(p, letters), dense), letters)


def s_polynomial(p: Polynomial, q: Polynomial, letters: str) -> Polynomial:
    return _from_dense(
        _spoly_dense(_to_dense(p, letters), _to_dense(q, letters)), letters
    )


@dataclass(frozen=True)
class SPairReport:
    left: str
    right: str
    terms: int
    reduces_to_zero: bool


@dataclass
class GroebnerCertificate:
    ok: bool
    pairs: list[SPairReport]
    failing: SPairReport | None = None

    @property
    def total_pairs(self) -> int:
        return len(self.pairs)

    def max_spoly_terms(self) -> int:
        return max((r.terms for r in self.pairs), default=0)


def is_groebner(
    named_basis: Sequence[tuple[str, Polynomial]], letters: str
) -> GroebnerCertificate:
    """Buchberger criterion over every pair, with per-pair term counts."""
    dense = [(n, _to_dense(p, letters)) for n, p in named_basis]
    leads = _with_leads(d for _, d in dense)
    pairs: list[SPairReport] = []
    failing: SPairReport | None = None
    for (na, da), (nb, db) in combinations(dense, 2):
        s = _spoly_dense(da, db)
        rep = SPairReport(na, nb, len(s), not _nf_dense(s, leads))
        pairs.append(rep)
        if not rep.reduces_to_zero and failing is None:
            failing = rep
    return GroebnerCertificate(ok=failing is None, pairs=pairs, failing=failing)


class BudgetExceeded(RuntimeError):
    """Raised when a basis completion exceeds its S-pair budget."""


def _interreduce(gs: list[_Dense]) -> list[_Dense]:
    gs = [_monic(g) for g in gs if g]
    changed = True
    while changed:
        changed = False
        for pos in range(len(gs)):
            others = _with_leads(g for j, g in enumerate(gs) if j != pos and g)
            r = _nf_dense(gs[pos], others)
            if r != gs[pos]:
                changed = True
                gs[pos] = _monic(r)
        gs = [g for g in gs if g]
    return sorted(gs, key=_lead, reverse=True)


def buchberger(
    gens: Sequence[Polynomial], letters: str, pair_budget: int = 20000
) -> tuple[list[Polynomial], dict[str, int]]:
    """Reduced basis of the ideal spanned by ``gens``.

    Pairs with coprime lead monomials are skipped (their S-polynomials
    always reduce to zero).  ``pair_budget`` caps the number of reduced
    pairs and guards against runaway completions.
    """
    basis = [_monic(_to_dense(g, letters)) for g in gens if not g.is_zero()]
    queue = list(combinations(range(len(basis)), 2))
    considered = skipped = added = 0
    while queue:
        ia, ib = queue.pop(0)
        ta, _ = _lead(basis[ia])
        tb, _ = _lead(basis[ib])
        if _lcm(ta, tb) == _add(ta, tb):
            skipped += 1
            continue
        considered += 1
        if considered > pair_budget:
            raise BudgetExceeded(f"more than {pair_budget} S-pairs reduced")
        r = _nf_dense(_spoly_dense(basis[ia], basis[ib]), _with_leads(basis))
        if r:
            basis.append(_monic(r))
            added += 1
            queue.extend((pos, len(basis) - 1) for pos in range(len(basis) - 1))
    reduced = _interreduce(basis)
    stats = {
        "pairs_reduced": considered,
        "pairs_skipped_coprime": skipped,
        "generators_added": added,
        "basis_size": len(reduced),
    }
    return [_from_dense(g, letters) for g in reduced], stats


def saturation(
    gens: Sequence[Polynomial],
    letters: str,
    by: str,
    pair_budget: int = 20000,
) -> list[Polynomial]:
    """Reduced basis of ideal(gens) : by^infinity.

    Uses the standard trick: adjoin an auxiliary most-significant
    variable z with the relation 1 - z*by, compute a basis, and keep
    the elements free of z.
    """
    if "z" in letters:
        raise ValueError("letter z is reserved for the saturation variable")
    if by not in letters:
        raise ValueError(f"saturating letter {by!r} is not in the order")
    aug = "z" + letters
    z = named("z")
    gens_aug = list(gens) + [Polynomial.one() - Polynomial.var(z) * parse(by)]
    gb, _ = buchberger(gens_aug, aug, pair_budget)
    return [p for p in gb if z not in p.variables()]


def is_unit_basis(basis: Sequence[Polynomial]) -> bool:
    return any(
        not p.is_zero() and all(not t for t, _ in p.terms()) for p in basis
    )


def reduced_bases_equal(
    left: Sequence[Polynomial], right: Sequence[Polynomial], letters: str
) -> bool:
    """Equality of two bases after monic normalisation, as term sets."""

    def canon(ps: Sequence[Polynomial]) -> set[frozenset]:
        out = set()
        for p in ps:
            d = _monic(_to_dense(p, letters))
            out.add(frozenset(d.items()))
        return out

    return canon(left) == canon(right)


def membership_both_ways(
    first: Sequence[Polynomial],
    second: Sequence[Polynomial],
    letters: str,
    pair_budget: int = 20000,
) -> tuple[bool, bool]:
    """Whether ideal(first) contains second and ideal(second) contains first.

    Both generating sets are completed to bases before division, so the
    answer is exact in both directions.
    """
    gb1, _ = buchberger(first, letters, pair_budget)
    gb2, _ = buchberger(second, letters, pair_budget)
    d1 = _with_leads(_to_dense(g, letters) for g in gb1)
    d2 = _with_leads(_to_dense(g, letters) for g in gb2)
    fwd = all(not _nf_dense(_to_dense(p, letters), d1) for p in second)
    bwd = all(not _nf_dense(_to_dense(p, letters), d2) for p in first)
    return fwd, bwd


def certify_jet_substitution(
    cat: Catalog, path: str | Path | None = None
) -> SyzygyReport:
    """Substitute the exact catalog polynomials into the 26 letter
    equations; every residual must vanish identically."""
    values = {ch: cat.poly(name) for ch, name in LETTER_INVARIANTS.items()}
    jet_vars = sorted({v for p in values.values() for v in p.variables()})
    index = {v: pos for pos, v in enumerate(jet_vars)}
    width = len(jet_vars)

    def dense(p: Polynomial) -> _Dense:
        out: _Dense = {}
        for t, coeff in p.terms():
            vec = [0] * width
            for v, e in t:
                vec[index[v]] = e
            out[tuple(vec)] = coeff
        return out

    def mul(p: _Dense, q: _Dense) -> _Dense:
        out: _Dense = {}
        for t1, c1 in p.items():
            for t2, c2 in q.items():
                t = _add(t1, t2)
                nv = out.get(t, Fraction(0)) + c1 * c2
                if nv:
                    out[t] = nv
                else:
                    del out[t]
        return out

    base = {ch: dense(p) for ch, p in values.items()}
    powers: dict[tuple[str, int], _Dense] = {}

    def power(ch: str, n: int) -> _Dense:
        got = powers.get((ch, n))
        if got is None:
            got = base[ch] if n == 1 else mul(power(ch, n - 1), base[ch])
            powers[(ch, n)] = got
        return got

    checks = []
    for name, p in load_letter_basis("FULL26", path):
        residual: _Dense = {}
        for t, coeff in p.terms():
            factors = sorted((power(v.name, e) for v, e in t), key=len)
            piece = {(0,) * width: coeff}
            for q in factors:
                piece = mul(piece, q)
            for mono, cv in piece.items():
                nv = residual.get(mono, Fraction(0)) + cv
                if nv:
                    residual[mono] = nv
                else:
                    del residual[mono]
        ok = not residual
        detail = "" if ok else f"{len(residual)} residual terms"
        checks.append(SyzygyCheck("FULL26_JET", name, "gb:f26", ok, detail))
    return SyzygyReport.from_checks(checks)


# ---------------------------------------------------------------------------
# staircase complement


@dataclass(frozen=True)
class StaircaseComponent:
    """A box of exponent vectors avoiding every lead monomial.

    Letters in ``free`` range over all of N; every other letter is
    pinned, to the value in ``fixed`` when listed and to 0 otherwise.
    """

    free: frozenset[str]
    fixed: tuple[tuple[str, int], ...] = ()

    def pinned(self, letters: str) -> dict[str, int]:
        vals = {ch: 0 for ch in letters if ch not in self.free}
        vals.update(dict(self.fixed))
        return vals

    def contains(self, exps: Mapping[str, int], letters: str) -> bool:
        pin = self.pinned(letters)
        return all(exps.get(ch, 0) == v for ch, v in pin.items())

    def label(self, letters: str) -> str:
        parts = [f"free={','.join(ch for ch in letters if ch in self.free)}"]
        if self.fixed:
            parts.append("fixed=" + ",".join(f"{c}:{v}" for c, v in self.fixed))
        return " ".join(parts)


def _box_avoids(box: tuple[int | None, ...], lead: _Exp) -> bool:
    return any(
        e > 0 and box[pos] is not None and box[pos] < e for pos, e in enumerate(lead)
    )


def staircase_complement(
    leads: Sequence[Polynomial] | Sequence[_Exp],
    letters: str,
    max_fixed: int = 6,
) -> list[StaircaseComponent]:
    """Maximal boxes of monomials outside the lead-monomial ideal.

    Each result pins at most ``max_fixed`` letters; deeper components
    exist in general but are deliberately not enumerated, matching the
    truncation used by the dimension counts downstream.
    """
    lead_exps: list[_Exp] = []
    for item in leads:
        if isinstance(item, Polynomial):
            lead_exps.append(_lead(_to_dense(item, letters))[0])
        else:
            lead_exps.append(tuple(item))
    n = len(letters)
    raw: set[tuple[int | None, ...]] = set()

    def rec(box: tuple[int | None, ...], idx: int, nfixed: int) -> None:
        if idx == len(lead_exps):
            raw.add(box)
            return
        lead = lead_exps[idx]
        if _box_avoids(box, lead):
            rec(box, idx + 1, nfixed)
            return
        if nfixed >= max_fixed:
            return
        for pos, e in enumerate(lead):
            if e == 0 or box[pos] is not None:
                continue
            for v in range(e):
                rec(box[:pos] + (v,) + box[pos + 1 :], idx + 1, nfixed + 1)

    rec((None,) * n, 0, 0)

    def dominated(small: tuple[int | None, ...], big: tuple[int | None, ...]) -> bool:
        if small == big:
            return False
        return all(
            b is None or (s is not None and s == b) for s, b in zip(small, big)
        )

    keep = [b for b in raw if not any(dominated(b, other) for other in raw)]
    out = []
    for box in keep:
        free = frozenset(letters[pos] for pos, v in enumerate(box) if v is None)
        fixed = tuple(
            (letters[pos], v) for pos, v in enumerate(box) if v is not None and v > 0
        )
        out.append(StaircaseComponent(free=free, fixed=fixed))
    out.sort(key=lambda c: tuple(letters.index(ch) for ch in sorted(c.free, key=letters.index)))
    return out


def load_staircase(
    section: str, path: str | Path | None = None
) -> list[tuple[str, StaircaseComponent]]:
    data = load_fixture(Path(path) if path else fixture_path(GROEBNER_FIXTURE))
    if section not in data:
        raise FixtureError(f"no fixture section named {section!r}")
    out = []
    for e in data[section]:
        free: frozenset[str] = frozenset()
        fixed: tuple[tuple[str, int], ...] = ()
        for part in e.payload.split(";"):
            part = part.strip()
            if part.startswith("free="):
                free = frozenset(part[5:].split(","))
            elif part.startswith("fixed="):
                fixed = tuple(
                    (c, int(v)) for c, v in (kv.split(":") for kv in part[6:].split(","))
                )
            elif part:
                raise FixtureError(f"bad staircase clause {part!r} in {e.name}")
        out.append((e.name, StaircaseComponent(free=free, fixed=fixed)))
    return out


# ---------------------------------------------------------------------------
# the seven-slot normal form on the restricted letters

# slot -> (marker letter or None, allowed support)
SLOT_SUPPORTS: dict[str, tuple[str | None, frozenset[str]]] = {
    "P": (None, frozenset("abdg")),
    "Q": ("c", frozenset("bcdg")),
    "R": ("e", frozenset("cdeg")),
    "S": ("f", frozenset("defg")),
    "T": ("h", frozenset("efgh")),
    "U": ("i", frozenset("eghi")),
    "V": ("j", frozenset("ehij")),
}

_SLOT_ORDER = ("V", "U", "T", "S", "R", "Q", "P")


def classify_slot(exps: Mapping[str, int]) -> str:
    """Slot of an irreducible monomial in the disjoint seven-part split.

    The slot is decided by the highest marker letter present; the
    monomial must then be supported on that slot's four letters, which
    is exactly the statement that the seven overlapping monomial
    families become disjoint after the standard successive-difference
    rearrangement.
    """
    support = {ch for ch, e in exps.items() if e}
    for slot in _SLOT_ORDER:
        marker, allowed = SLOT_SUPPORTS[slot]
        if marker is not None and marker in support:
            if not support <= allowed:
                raise ValueError(
                    f"monomial with support {sorted(support)} is reducible"
                )
            return slot
    if not support <= SLOT_SUPPORTS["P"][1]:
        raise ValueError(f"monomial with support {sorted(support)} is reducible")
    return "P"


def seven_slot_split(p: Polynomial, letters: str = RESTRICTED_LETTERS) -> dict[str, Polynomial]:
    """Split a fully reduced polynomial into the seven slot components."""
    buckets: dict[str, list] = {s: [] for s in _SLOT_ORDER}
    for t, c in p.terms():
        exps = {v.name: e for v, e in t}
        buckets[classify_slot(exps)].append((t, c))
    return {s: Polynomial.from_terms(pairs) for s, pairs in buckets.items()}
