"""Sparse multivariate polynomials over the rationals.

Everything downstream (jet calculus, the bracket catalog, relation suites,
basis certification, Euler leading terms) runs on the two classes defined
here: :class:`Var` and :class:`Polynomial`.  Coefficients are
:class:`fractions.Fraction`, monomials are sorted tuples of ``(Var, exp)``
pairs, and all arithmetic is exact.

Three kinds of variables share one universe:

* jet variables ``f<i>_<lam>`` (component ``i >= 1``, derivative order
  ``lam >= 1``),
* reparametrization variables ``phi_<mu>`` (``mu >= 1``),
* named variables (generator letters, Chern symbols, exponent symbols, the
  degree symbol ``m``, anything else).

A fixed intrinsic key orders the universe (jet, then reparametrization,
then named alphabetically); it is used for canonical serialization and as
the default division order.  Term orders for basis computations are
explicit :class:`LexOrder` objects and are passed separately.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

__all__ = [
    "Var",
    "jet",
    "reparam",
    "named",
    "Term",
    "Polynomial",
    "LexOrder",
    "ExactDivisionError",
    "ParseError",
    "parse",
    "term_mul",
    "term_divides",
    "term_div",
    "term_lcm",
    "integrate_between",
    "jacobian_rank_at",
]

_KIND_JET = 0
_KIND_REPARAM = 1
_KIND_NAMED = 2


@dataclass(frozen=True, order=False)
class Var:
    """One variable of the shared universe.

    ``kind`` is 0 for jet variables, 1 for reparametrization variables and
    2 for named variables.  The integer slots ``i`` and ``lam`` carry the
    component index and derivative order of a jet variable (``i`` doubles
    as the derivative order of a reparametrization variable); ``name``
    carries the identifier of a named variable and is empty otherwise.
    """

    kind: int
    i: int
    lam: int
    name: str

    @property
    def key(self) -> tuple[int, int, int, str]:
        return (self.kind, self.i, self.lam, self.name)

    def __lt__(self, other: "Var") -> bool:
        return self.key < other.key

    def text(self) -> str:
        if self.kind == _KIND_JET:
            return f"f{self.i}_{self.lam}"
        if self.kind == _KIND_REPARAM:
            return f"phi_{self.i}"
        return self.name

    def __repr__(self) -> str:
        return f"Var({self.text()})"


def jet(i: int, lam: int) -> Var:
    """The jet variable ``f<i>_<lam>``: component i, derivative order lam."""
    if i < 1 or lam < 0:
        raise ValueError(f"bad jet variable indices ({i}, {lam})")
    return Var(_KIND_JET, i, lam, "")


def reparam(mu: int) -> Var:
    """The reparametrization variable ``phi_<mu>`` (mu-th derivative)."""
    if mu < 1:
        raise ValueError(f"bad reparametrization order {mu}")
    return Var(_KIND_REPARAM, mu, 0, "")


def named(name: str) -> Var:
    if not name or not re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", name):
        raise ValueError(f"bad variable name {name!r}")
    return Var(_KIND_NAMED, 0, 0, name)


# A term is a monomial without its coefficient: a tuple of (variable,
# exponent) pairs, sorted by variable key, all exponents positive.  The
# empty tuple is the monomial 1.
Term = tuple[tuple[Var, int], ...]

_ONE_TERM: Term = ()


def _term_from_dict(d: Mapping[Var, int]) -> Term:
    return tuple(sorted(((v, e) for v, e in d.items() if e), key=lambda p: p[0].key))


def term_mul(a: Term, b: Term) -> Term:
    """Product of two monomials (merge of sorted pair lists)."""
    if not a:
        return b
    if not b:
        return a
    out: list[tuple[Var, int]] = []
    ia = ib = 0
    while ia < len(a) and ib < len(b):
        va, ea = a[ia]
        vb, eb = b[ib]
        if va == vb:
            out.append((va, ea + eb))
            ia += 1
            ib += 1
        elif va.key < vb.key:
            out.append(a[ia])
            ia += 1
        else:
            out.append(b[ib])
            ib += 1
    out.extend(a[ia:])
    out.extend(b[ib:])
    return tuple(out)


def term_divides(a: Term, b: Term) -> bool:
    """True when monomial a divides monomial b."""
    db = dict(b)
    for v, e in a:
        if db.get(v, 0) < e:
            return False
    return True


def term_div(b: Term, a: Term) -> Term:
    """The monomial b / a; raises ArithmeticError when not divisible."""
    db = dict(b)
    for v, e in a:
        r = db.get(v, 0) - e
        if r < 0:
            raise ArithmeticError(f"{a} does not divide {b}")
        if r == 0:
            del db[v]
        else:
            db[v] = r
    return _term_from_dict(db)


def term_lcm(a: Term, b: Term) -> Term:
    d = dict(a)
    for v, e in b:
        if d.get(v, 0) < e:
            d[v] = e
    return _term_from_dict(d)


def _term_key_canonical(t: Term, universe: Sequence[Var]) -> tuple[int, ...]:
    d = dict(t)
    return tuple(d.get(v, 0) for v in universe)


class ExactDivisionError(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


class Polynomial:
    """A sparse polynomial with Fraction coefficients.

    Instances behave as immutable values: every operation returns a new
    polynomial, and the internal coefficient dict is never exposed for
    mutation.  Zero coefficients are dropped eagerly, so two polynomials
    are equal exactly when their coefficient dicts are equal.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[Term, Fraction] | None = None):
        c: dict[Term, Fraction] = {}
        if coeffs:
            for t, q in coeffs.items():
                if q:
                    c[t] = Fraction(q)
        self._c = c

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "Polynomial":
        return Polynomial()

    @staticmethod
    def one() -> "Polynomial":
        return Polynomial({_ONE_TERM: Fraction(1)})

    @staticmethod
    def const(q: Fraction | int) -> "Polynomial":
        q = Fraction(q)
        return Polynomial({_ONE_TERM: q}) if q else Polynomial()

    @staticmethod
    def var(v: Var, exp: int = 1) -> "Polynomial":
        if exp < 0:
            raise ValueError("negative exponent")
        if exp == 0:
            return Polynomial.one()
        return Polynomial({((v, exp),): Fraction(1)})

    @staticmethod
    def from_terms(pairs: Iterable[tuple[Term, Fraction]]) -> "Polynomial":
        c: dict[Term, Fraction] = {}
        for t, q in pairs:
            q2 = c.get(t, Fraction(0)) + q
            if q2:
                c[t] = q2
            elif t in c:
                del c[t]
        return Polynomial(c)

    # -- inspection ---------------------------------------------------

    def terms(self) -> Iterator[tuple[Term, Fraction]]:
        return iter(self._c.items())

    def coefficient(self, t: Term) -> Fraction:
        return self._c.get(t, Fraction(0))

    def __len__(self) -> int:
        return len(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return not self._c or (len(self._c) == 1 and _ONE_TERM in self._c)

    def as_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._c.get(_ONE_TERM, Fraction(0))

    def variables(self) -> set[Var]:
        out: set[Var] = set()
        for t in self._c:
            for v, _ in t:
                out.add(v)
        return out

    def degree_in(self, v: Var) -> int:
        best = 0
        for t in self._c:
            for w, e in t:
                if w == v and e > best:
                    best = e
        return best

    def total_degree(self) -> int:
        if not self._c:
            return 0
        return max(sum(e for _, e in t) for t in self._c)

    def weights(self, wmap: Mapping[Var, int]) -> set[int]:
        """The set of weights of the terms, under variable weights wmap.

        Variables absent from wmap count as weight 0.  A homogeneous
        polynomial returns a singleton; the zero polynomial returns an
        empty set.
        """
        out: set[int] = set()
        for t in self._c:
            out.add(sum(wmap.get(v, 0) * e for v, e in t))
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.const(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    # -- ring operations ----------------------------------------------

    @staticmethod
    def _coerce(x: "Polynomial | Fraction | int") -> "Polynomial":
        if isinstance(x, Polynomial):
            return x
        return Polynomial.const(x)

    def __add__(self, other: "Polynomial | Fraction | int") -> "Polynomial":
        other = Polynomial._coerce(other)
        c = dict(self._c)
        for t, q in other._c.items():
            q2 = c.get(t, Fraction(0)) + q
            if q2:
                c[t] = q2
            elif t in c:
                del c[t]
        out = Polynomial.__new__(Polynomial)
        out._c = c
        return out

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        out = Polynomial.__new__(Polynomial)
        out._c = {t: -q for t, q in self._c.items()}
        return out

    def __sub__(self, other: "Polynomial | Fraction | int") -> "Polynomial":
        return self + (-Polynomial._coerce(other))

    def __rsub__(self, other: "Polynomial | Fraction | int") -> "Polynomial":
        return Polynomial._coerce(other) + (-self)

    def __mul__(self, other: "Polynomial | Fraction | int") -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            q0 = Fraction(other)
            if not q0:
                return Polynomial()
            out = Polynomial.__new__(Polynomial)
            out._c = {t: q * q0 for t, q in self._c.items()}
            return out
        c: dict[Term, Fraction] = {}
        if len(self._c) > len(other._c):
            a, b = other._c, self._c
        else:
            a, b = self._c, other._c
        for ta, qa in a.items():
            for tb, qb in b.items():
                t = term_mul(ta, tb)
                q = c.get(t, Fraction(0)) + qa * qb
                if q:
                    c[t] = q
                elif t in c:
                    del c[t]
        out = Polynomial.__new__(Polynomial)
        out._c = c
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __truediv__(self, other: "Polynomial | Fraction | int") -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            q0 = Fraction(other)
            if not q0:
                raise ZeroDivisionError("polynomial division by zero")
            return self * (Fraction(1) / q0)
        if other.is_constant():
            return self / other.as_fraction()
        return self.divide_exact(other)

    # -- calculus -----------------------------------------------------

    def diff(self, v: Var) -> "Polynomial":
        c: dict[Term, Fraction] = {}
        for t, q in self._c.items():
            for idx, (w, e) in enumerate(t):
                if w == v:
                    if e == 1:
                        nt = t[:idx] + t[idx + 1 :]
                    else:
                        nt = t[:idx] + ((w, e - 1),) + t[idx + 1 :]
                    q2 = c.get(nt, Fraction(0)) + q * e
                    if q2:
                        c[nt] = q2
                    elif nt in c:
                        del c[nt]
                    break
        out = Polynomial.__new__(Polynomial)
        out._c = c
        return out

    def integrate(self, v: Var) -> "Polynomial":
        """Antiderivative with respect to v, with zero constant term."""
        c: dict[Term, Fraction] = {}
        for t, q in self._c.items():
            d = dict(t)
            e = d.get(v, 0)
            d[v] = e + 1
            c[_term_from_dict(d)] = q / (e + 1)
        out = Polynomial.__new__(Polynomial)
        out._c = c
        return out

    def subs(self, mapping: Mapping[Var, "Polynomial | Fraction | int"]) -> "Polynomial":
        """Substitute polynomials (or constants) for variables, exactly."""
        table: dict[Var, Polynomial] = {v: Polynomial._coerce(p) for v, p in mapping.items()}
        powers: dict[tuple[Var, int], Polynomial] = {}

        def power(v: Var, e: int) -> Polynomial:
            key = (v, e)
            got = powers.get(key)
            if got is None:
                got = table[v] ** e
                powers[key] = got
            return got

        total = Polynomial()
        for t, q in self._c.items():
            fixed: list[tuple[Var, int]] = []
            piece = Polynomial.const(q)
            for v, e in t:
                if v in table:
                    piece = piece * power(v, e)
                else:
                    fixed.append((v, e))
            if fixed:
                piece = piece * Polynomial({tuple(fixed): Fraction(1)})
            total = total + piece
        return total

    def eval(self, point: Mapping[Var, Fraction | int]) -> Fraction:
        """Evaluate at a rational point covering every variable present."""
        total = Fraction(0)
        for t, q in self._c.items():
            val = q
            for v, e in t:
                if v not in point:
                    raise KeyError(f"no value supplied for {v.text()}")
                val *= Fraction(point[v]) ** e
            total += val
        return total

    # -- division -----------------------------------------------------

    def _canonical_order(self, extra: "Polynomial | None" = None) -> "LexOrder":
        vs = self.variables()
        if extra is not None:
            vs |= extra.variables()
        return LexOrder(sorted(vs, key=lambda v: v.key))

    def divide_exact(self, divisor: "Polynomial") -> "Polynomial":
        """Exact quotient self / divisor; ExactDivisionError if inexact."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return Polynomial()
        order = self._canonical_order(divisor)
        dt, dq = order.lead(divisor)
        rem = self
        quot = Polynomial()
        while rem:
            rt, rq = order.lead(rem)
            if not term_divides(dt, rt):
                raise ExactDivisionError("division leaves a remainder")
            mono = Polynomial({term_div(rt, dt): rq / dq})
            quot = quot + mono
            rem = rem - mono * divisor
        return quot

    # -- serialization ------------------------------------------------

    def sorted_terms(self, order: "LexOrder | None" = None) -> list[tuple[Term, Fraction]]:
        if order is None:
            order = self._canonical_order()
        return order.sorted_terms(self)

    def text(self) -> str:
        """Canonical textual form; parse(text()) round-trips."""
        if not self._c:
            return "0"
        parts: list[str] = []
        for t, q in self.sorted_terms():
            factors = [f"{v.text()}^{e}" if e > 1 else v.text() for v, e in t]
            mag = abs(q)
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            body = "*".join(factors)
            if not parts:
                parts.append(body if q > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if q > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        s = self.text()
        if len(s) > 120:
            s = s[:117] + "..."
        return f"Polynomial({s})"


class LexOrder:
    """Pure lexicographic term order over an explicit variable sequence.

    The first variable of the sequence is the most significant.  Every
    variable occurring in a polynomial handed to this order must be
    listed; anything else is an error, which keeps basis computations
    honest about their ambient ring.
    """

    __slots__ = ("vars", "_index")

    def __init__(self, variables: Sequence[Var]):
        self.vars: tuple[Var, ...] = tuple(variables)
        self._index: dict[Var, int] = {v: i for i, v in enumerate(self.vars)}
        if len(self._index) != len(self.vars):
            raise ValueError("duplicate variable in order")

    def exponents(self, t: Term) -> tuple[int, ...]:
        vec = [0] * len(self.vars)
        for v, e in t:
            idx = self._index.get(v)
            if idx is None:
                raise KeyError(f"variable {v.text()} not covered by this order")
            vec[idx] = e
        return tuple(vec)

    def key(self, t: Term) -> tuple[int, ...]:
        return self.exponents(t)

    def sorted_terms(self, p: Polynomial) -> list[tuple[Term, Fraction]]:
        return sorted(p.terms(), key=lambda pair: self.key(pair[0]), reverse=True)

    def lead(self, p: Polynomial) -> tuple[Term, Fraction]:
        if p.is_zero():
            raise ValueError("zero polynomial has no lead term")
        best: Term | None = None
        best_key: tuple[int, ...] | None = None
        for t in (t for t, _ in p.terms()):
            k = self.key(t)
            if best_key is None or k > best_key:
                best, best_key = t, k
        assert best is not None
        return best, p.coefficient(best)

    def lead_term(self, p: Polynomial) -> Term:
        return self.lead(p)[0]


class ParseError(ValueError):
    pass


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))"
)
_JET_RE = re.compile(r"f(\d+)_(\d+)\Z")
_REPARAM_RE = re.compile(r"phi_(\d+)\Z")


def _ident_var(name: str) -> Var:
    m = _JET_RE.fullmatch(name)
    if m:
        return jet(int(m.group(1)), int(m.group(2)))
    m = _REPARAM_RE.fullmatch(name)
    if m:
        return reparam(int(m.group(1)))
    return named(name)


class _Parser:
    def __init__(self, text: str):
        self.tokens: list[str] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if not m or m.end() == pos:
                if text[pos:].strip():
                    raise ParseError(f"bad character at {text[pos:pos+10]!r}")
                break
            self.tokens.append(m.group("int") or m.group("ident") or m.group("op"))
            pos = m.end()
        self.pos = 0

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of expression")
        self.pos += 1
        return tok

    def parse_expr(self) -> Polynomial:
        sign = 1
        while self.peek() in ("+", "-"):
            if self.take() == "-":
                sign = -sign
        total = self.parse_product() * sign
        while self.peek() in ("+", "-"):
            sign = 1
            while self.peek() in ("+", "-"):
                if self.take() == "-":
                    sign = -sign
            total = total + self.parse_product() * sign
        return total

    def parse_product(self) -> Polynomial:
        result = self.parse_power()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.parse_power()
            result = result * rhs if op == "*" else result / rhs
        return result

    def parse_power(self) -> Polynomial:
        base = self.parse_atom()
        if self.peek() == "^":
            self.take()
            neg = False
            if self.peek() == "-":
                self.take()
                neg = True
            tok = self.take()
            if not tok.isdigit():
                raise ParseError(f"expected integer exponent, got {tok!r}")
            if neg:
                raise ParseError("negative exponents are not polynomials")
            return base ** int(tok)
        return base

    def parse_atom(self) -> Polynomial:
        tok = self.take()
        if tok == "(":
            inner = self.parse_expr()
            if self.take() != ")":
                raise ParseError("missing closing parenthesis")
            return inner
        if tok == "-":
            return -self.parse_power()
        if tok.isdigit():
            return Polynomial.const(int(tok))
        if re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", tok):
            return Polynomial.var(_ident_var(tok))
        raise ParseError(f"unexpected token {tok!r}")


def parse(text: str) -> Polynomial:
    """Parse the surface syntax emitted by Polynomial.text().

    Grammar: ``+ - * / ^`` with parentheses, nonnegative integer literals,
    jet variables ``f<i>_<lam>``, reparametrization variables ``phi_<mu>``
    and bare identifiers for named variables.  Division by a constant is a
    scalar division; division by a polynomial must be exact.
    """
    p = _Parser(text)
    if not p.tokens:
        raise ParseError("empty expression")
    result = p.parse_expr()
    if p.peek() is not None:
        raise ParseError(f"trailing tokens at {p.tokens[p.pos:]!r}")
    return result


def integrate_between(
    p: Polynomial,
    v: Var,
    lower: Polynomial | Fraction | int,
    upper: Polynomial | Fraction | int,
) -> Polynomial:
    """Definite integral of ``p`` in ``v`` between polynomial bounds.

    The bounds must not contain ``v`` themselves; the result is again a
    polynomial in the remaining variables (and whatever variables the
    bounds bring in).
    """
    lo = Polynomial._coerce(lower)
    hi = Polynomial._coerce(upper)
    if v in lo.variables() or v in hi.variables():
        raise ValueError(f"integration bound contains the variable {v.text()}")
    anti = p.integrate(v)
    return anti.subs({v: hi}) - anti.subs({v: lo})


def jacobian_rank_at(
    ps: Sequence[Polynomial],
    variables: Sequence[Var],
    point: Mapping[Var, Fraction | int],
) -> int:
    """Rank of the Jacobian of ``ps`` w.r.t. ``variables`` at a rational point.

    Exact Gaussian elimination over Fraction; the point must cover every
    variable occurring in the entries.
    """
    rows = [[p.diff(v).eval(point) for v in variables] for p in ps]
    rank = 0
    ncols = len(variables)
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            if rows[r][col]:
                factor = rows[r][col] / lead
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank
