"""Jet calculus on top of the polynomial core.

Composition with a reparametrization, the total derivative along the curve
parameter, wronskian determinants, weight and bidegree grading, and the
unipotent derivations whose kernels are the bi-invariants.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Mapping

from .rings import Polynomial, Var, jet, reparam

__all__ = [
    "JetContext",
    "WronskianIndex",
    "InvariantMeta",
    "UnipotentAction",
    "NotHomogeneousError",
    "NotBihomogeneousError",
    "OrderCapExceeded",
    "InvarianceResult",
    "apply_derivation",
    "faa_di_bruno",
    "total_derivative",
    "delta",
    "wronskian3",
    "weight",
    "bidegree",
    "check_reparametrization_invariance",
    "unipotent_derivation",
]


class NotHomogeneousError(ValueError):
    pass


class NotBihomogeneousError(ValueError):
    pass


class OrderCapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class JetContext:
    """Dimension and jet order, with a one-step working margin.

    Brackets raise the derivative order by one, so polynomials built over a
    context of order kappa may legitimately contain variables of order
    kappa + 1; anything beyond that is a bug and is rejected.
    """

    nu: int
    kappa: int

    def __post_init__(self) -> None:
        if self.nu not in (2, 3):
            raise ValueError(f"unsupported dimension {self.nu}")
        if self.nu == 2 and not 1 <= self.kappa <= 5:
            raise ValueError(f"unsupported order {self.kappa} in dimension 2")
        if self.nu == 3 and self.kappa != 3:
            raise ValueError(f"unsupported order {self.kappa} in dimension 3")

    @property
    def cap(self) -> int:
        return self.kappa + 1

    def check_orders(self, p: Polynomial) -> None:
        for v in p.variables():
            if v.kind == 0:
                if v.i > self.nu:
                    raise ValueError(f"component {v.i} exceeds dimension {self.nu}")
                if v.lam > self.cap:
                    raise OrderCapExceeded(f"{v.text()} beyond order cap {self.cap}")


@dataclass(frozen=True)
class WronskianIndex:
    alpha: int
    beta: int
    i: int = 1
    j: int = 2

    def __post_init__(self) -> None:
        if not 1 <= self.alpha < self.beta:
            raise ValueError("derivative orders must satisfy 1 <= alpha < beta")
        if not self.i < self.j:
            raise ValueError("component indices must satisfy i < j")


@dataclass(frozen=True)
class InvariantMeta:
    weight: int
    bidegree: tuple[int, int] | None = None

    def __post_init__(self) -> None:
        if self.weight < 1:
            raise ValueError("weight must be positive")
        if self.bidegree is not None:
            l1, l2 = self.bidegree
            if not l1 >= l2 >= 0:
                raise ValueError("bidegree must satisfy l1 >= l2 >= 0")


def apply_derivation(p: Polynomial, images: Mapping[Var, Polynomial]) -> Polynomial:
    """Extend variable images to a derivation and apply it to p.

    Variables without an image are killed (image 0).
    """
    total = Polynomial.zero()
    for v in p.variables():
        img = images.get(v)
        if img is not None and not img.is_zero():
            total = total + p.diff(v) * img
    return total


@lru_cache(maxsize=None)
def _faa(i: int, lam: int) -> Polynomial:
    # (f_i o phi)^{(lam)} by recursion: one more parameter derivative maps
    # f_i^{(mu)} to f_i^{(mu+1)} phi' and phi^{(mu)} to phi^{(mu+1)}.
    if lam == 1:
        return Polynomial.var(reparam(1)) * Polynomial.var(jet(i, 1))
    prev = _faa(i, lam - 1)
    images: dict[Var, Polynomial] = {}
    for v in prev.variables():
        if v.kind == 0:
            images[v] = Polynomial.var(jet(v.i, v.lam + 1)) * Polynomial.var(reparam(1))
        elif v.kind == 1:
            images[v] = Polynomial.var(reparam(v.i + 1))
    return apply_derivation(prev, images)


def faa_di_bruno(ctx: JetContext, i: int, lam: int) -> Polynomial:
    """The lam-th derivative of f_i composed with a reparametrization.

    A polynomial in the variables f<i>_<mu> (values along the reparametrized
    parameter) and phi_<mu>, with the classical multinomial coefficients.
    """
    if not 1 <= i <= ctx.nu:
        raise ValueError(f"component {i} outside dimension {ctx.nu}")
    if not 1 <= lam <= ctx.cap:
        raise OrderCapExceeded(f"order {lam} beyond cap {ctx.cap}")
    return _faa(i, lam)


def total_derivative(p: Polynomial, ctx: JetContext | None = None) -> Polynomial:
    """Derivation along the curve parameter: f<i>_<lam> to f<i>_<lam+1>."""
    images: dict[Var, Polynomial] = {}
    for v in p.variables():
        if v.kind != 0:
            raise ValueError(f"total derivative applies to jet variables only, got {v.text()}")
        if ctx is not None and v.lam + 1 > ctx.cap:
            raise OrderCapExceeded(f"D would produce order {v.lam + 1} beyond cap {ctx.cap}")
        images[v] = Polynomial.var(jet(v.i, v.lam + 1))
    return apply_derivation(p, images)


def delta(ctx: JetContext, w: WronskianIndex) -> Polynomial:
    """The 2x2 wronskian determinant on components (i, j), orders (alpha, beta)."""
    if w.j > ctx.nu:
        raise ValueError(f"component {w.j} outside dimension {ctx.nu}")
    if w.beta > ctx.cap:
        raise OrderCapExceeded(f"order {w.beta} beyond cap {ctx.cap}")
    fia = Polynomial.var(jet(w.i, w.alpha))
    fib = Polynomial.var(jet(w.i, w.beta))
    fja = Polynomial.var(jet(w.j, w.alpha))
    fjb = Polynomial.var(jet(w.j, w.beta))
    return fia * fjb - fib * fja


def wronskian3(ctx: JetContext) -> Polynomial:
    """The 3x3 wronskian of the first three derivative rows, dimension 3."""
    if ctx.nu != 3:
        raise ValueError("three-column wronskian requires dimension 3")
    cols = range(1, 4)
    total = Polynomial.zero()
    # direct signed-permutation expansion of det( f_c^{(r)} ), r = row
    for perm, sign in (
        ((1, 2, 3), 1),
        ((2, 3, 1), 1),
        ((3, 1, 2), 1),
        ((3, 2, 1), -1),
        ((2, 1, 3), -1),
        ((1, 3, 2), -1),
    ):
        prod = Polynomial.const(sign)
        for row, col in zip(perm, cols):
            prod = prod * Polynomial.var(jet(col, row))
        total = total + prod
    return total


def weight(p: Polynomial) -> int:
    """Weighted degree with deg f<i>_<lam> = lam, when uniform over terms."""
    if p.is_zero():
        raise NotHomogeneousError("zero polynomial has no weight")
    seen: set[int] = set()
    for t, _ in p.terms():
        w = 0
        for v, e in t:
            if v.kind != 0:
                raise ValueError(f"weight applies to jet polynomials only, got {v.text()}")
            w += v.lam * e
        seen.add(w)
    if len(seen) != 1:
        raise NotHomogeneousError(f"mixed weights {sorted(seen)}")
    return seen.pop()


def bidegree(p: Polynomial) -> tuple[int, int]:
    """Counts of component-1 and component-2 variables per monomial, when uniform."""
    if p.is_zero():
        raise NotBihomogeneousError("zero polynomial has no bidegree")
    seen: set[tuple[int, int]] = set()
    for t, _ in p.terms():
        l1 = l2 = 0
        for v, e in t:
            if v.kind != 0:
                raise ValueError(f"bidegree applies to jet polynomials only, got {v.text()}")
            if v.i == 1:
                l1 += e
            elif v.i == 2:
                l2 += e
            else:
                raise ValueError("bidegree is defined in dimension 2")
        seen.add((l1, l2))
    if len(seen) != 1:
        raise NotBihomogeneousError(f"mixed bidegrees {sorted(seen)}")
    return seen.pop()


@dataclass(frozen=True)
class InvarianceResult:
    ok: bool
    weight: int | None
    residual: Polynomial

    def __bool__(self) -> bool:
        return self.ok


def check_reparametrization_invariance(ctx: JetContext, p: Polynomial) -> InvarianceResult:
    """Test P(jet of f o phi) = (phi')^m P(jet of f at the moved point).

    The comparison is a polynomial identity in the joint ring of f- and
    phi-variables; on failure the nonzero difference is returned for
    diagnosis.
    """
    m = weight(p)
    table: dict[Var, Polynomial] = {}
    for v in p.variables():
        table[v] = faa_di_bruno(ctx, v.i, v.lam)
    composed = p.subs(table)
    target = Polynomial.var(reparam(1), m) * p
    residual = composed - target
    return InvarianceResult(residual.is_zero(), m if residual.is_zero() else None, residual)


class UnipotentAction:
    """The derivations of the unipotent (lower-triangular) group action.

    Dimension 2 has the single derivation ``U`` sending every component-2
    jet variable to its component-1 counterpart.  Dimension 3 has three,
    one per strictly-lower matrix slot, obtained by differentiating the
    one-parameter flows at parameter zero; they satisfy
    [U_a, U_b] = U_c on every jet variable.
    """

    def __init__(self, nu: int, max_order: int = 8):
        if nu not in (2, 3):
            raise ValueError(f"unsupported dimension {nu}")
        self.nu = nu
        self.max_order = max_order
        orders = range(1, max_order + 1)
        if nu == 2:
            self._gens: dict[str, dict[Var, Polynomial]] = {
                "U": {jet(2, lam): Polynomial.var(jet(1, lam)) for lam in orders},
            }
        else:
            self._gens = {
                "U_a": {jet(2, lam): Polynomial.var(jet(1, lam)) for lam in orders},
                "U_b": {jet(3, lam): Polynomial.var(jet(2, lam)) for lam in orders},
                "U_c": {jet(3, lam): Polynomial.var(jet(1, lam)) for lam in orders},
            }

    @property
    def generators(self) -> tuple[str, ...]:
        return tuple(self._gens)

    def derivation(self, generator: str) -> Callable[[Polynomial], Polynomial]:
        images = self._gens[generator]
        return lambda p: apply_derivation(p, images)

    def annihilates(self, p: Polynomial) -> bool:
        return all(self.derivation(g)(p).is_zero() for g in self._gens)


def unipotent_derivation(action: UnipotentAction, generator: str, p: Polynomial) -> Polynomial:
    return action.derivation(generator)(p)
