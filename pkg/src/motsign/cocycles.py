"""Bilinear 2-cocycles on Z x Z valued in {1, -1, eps, -eps}.

Every cohomology class of Z x Z with coefficients in an elementary
abelian 2-group has a bilinear representative, so the exact objects here
are bilinear forms (and quadratic cochains for their coboundaries);
arbitrary pair functions are only ever checked on finite grids.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable

from .errors import ParseError
from .units import EPS, MINUS_EPS, MINUS_ONE, ONE, Bidegree, Unit, parse_unit

__all__ = [
    "BilinearCocycle",
    "QuadraticCochain",
    "UnitSubgroup",
    "CocycleCheck",
    "CoboundaryDecision",
    "DEFAULT_GRID",
    "eval_cocycle",
    "unit_twist",
    "check_cocycle_identity",
    "coboundary",
    "is_symmetric",
    "is_coboundary",
    "antisymmetrization",
    "count_classes",
    "cocycle_to_json",
    "cocycle_from_json",
    "cochain_to_json",
    "cochain_from_json",
]

DEFAULT_GRID = range(-4, 5)


@dataclass(frozen=True)
class BilinearCocycle:
    """alpha(a, b) = m11^(a1 b1) * m12^(a1 b2) * m21^(a2 b1) * m22^(a2 b2).

    Bilinearity makes the reduced-cocycle identity hold identically, so
    these are honest reduced 2-cocycles by construction.
    """

    m11: Unit
    m12: Unit
    m21: Unit
    m22: Unit

    def __call__(self, a: Bidegree, b: Bidegree) -> Unit:
        e11, e12, e21, e22 = a.p * b.p, a.p * b.q, a.q * b.p, a.q * b.q
        s = self.m11.s * e11 + self.m12.s * e12 + self.m21.s * e21 + self.m22.s * e22
        t = self.m11.t * e11 + self.m12.t * e12 + self.m21.t * e21 + self.m22.t * e22
        return Unit(s, t)

    def __mul__(self, other: "BilinearCocycle") -> "BilinearCocycle":
        return BilinearCocycle(
            self.m11 * other.m11,
            self.m12 * other.m12,
            self.m21 * other.m21,
            self.m22 * other.m22,
        )

    def inverse(self) -> "BilinearCocycle":
        return self

    def is_trivial(self) -> bool:
        return self == TRIVIAL_COCYCLE


TRIVIAL_COCYCLE = BilinearCocycle(ONE, ONE, ONE, ONE)


def eval_cocycle(alpha: BilinearCocycle, a: Bidegree, b: Bidegree) -> Unit:
    """Value of the bilinear form at a pair of bidegrees."""
    return alpha(a, b)


def unit_twist(u: Unit) -> BilinearCocycle:
    """The cocycle u^(a2 (b1 - b2)) charging u per swap of a weight circle
    past a simplicial circle."""
    return BilinearCocycle(ONE, ONE, u, u.inverse())


@dataclass(frozen=True)
class QuadraticCochain:
    """beta(a) = c1^a1 c2^a2 c12^(a1 a2) c11^C(a1,2) c22^C(a2,2), beta(0) = 1."""

    c1: Unit
    c2: Unit
    c12: Unit
    c11: Unit
    c22: Unit

    def __call__(self, a: Bidegree) -> Unit:
        e11 = a.p * (a.p - 1) // 2
        e22 = a.q * (a.q - 1) // 2
        s = self.c1.s * a.p + self.c2.s * a.q + self.c12.s * (a.p * a.q) + self.c11.s * e11 + self.c22.s * e22
        t = self.c1.t * a.p + self.c2.t * a.q + self.c12.t * (a.p * a.q) + self.c11.t * e11 + self.c22.t * e22
        return Unit(s, t)


def coboundary(beta: QuadraticCochain) -> BilinearCocycle:
    """delta(beta)(a, b) = beta(a) beta(b) beta(a+b)^(-1).

    The linear parts c1, c2 cancel; what survives is the symmetric
    bilinear cocycle with m12 = m21 = c12, m11 = c11, m22 = c22.
    """
    return BilinearCocycle(beta.c11, beta.c12, beta.c12, beta.c22)


@dataclass(frozen=True)
class CocycleCheck:
    holds: bool
    witness: tuple[Bidegree, Bidegree, Bidegree] | None = None

    def __bool__(self) -> bool:
        return self.holds


def _identity_holds(f: Callable[[Bidegree, Bidegree], Unit], u: Bidegree, v: Bidegree, w: Bidegree) -> bool:
    return f(u + v, w) * f(u, v) == f(v, w) * f(u, v + w)


def check_cocycle_identity(
    f: BilinearCocycle | Callable[[Bidegree, Bidegree], Unit],
    grid: Iterable[int] = DEFAULT_GRID,
) -> CocycleCheck:
    """Test f(u+v,w) f(u,v) == f(v,w) f(u,v+w) for all bidegree triples
    with entries in the grid.

    A bilinear cocycle only depends on its arguments mod 2, so for that
    input the full-grid check collapses, without loss, to one
    representative per parity class; arbitrary callables are checked by
    brute force over the whole grid.
    """
    points = list(grid)
    if not points:
        raise ValueError("grid must be nonempty")
    if isinstance(f, BilinearCocycle):
        reps: list[int] = []
        for parity in (0, 1):
            for x in points:
                if x % 2 == parity:
                    reps.append(x)
                    break
        points = reps
    coords = [Bidegree(p, q) for p in points for q in points]
    for u, v, w in product(coords, repeat=3):
        if not _identity_holds(f, u, v, w):
            return CocycleCheck(False, (u, v, w))
    return CocycleCheck(True, None)


def is_symmetric(alpha: BilinearCocycle) -> bool:
    """Whether alpha(a, b) = alpha(b, a) everywhere; for bilinear forms
    this is exactly m12 = m21."""
    return alpha.m12 == alpha.m21


def antisymmetrization(alpha: BilinearCocycle) -> Unit:
    """m12 * m21^(-1): the complete invariant of the coboundary class."""
    return alpha.m12 * alpha.m21.inverse()


@dataclass(frozen=True)
class CoboundaryDecision:
    is_coboundary: bool
    witness: QuadraticCochain | None = None

    def __bool__(self) -> bool:
        return self.is_coboundary


def is_coboundary(alpha: BilinearCocycle) -> CoboundaryDecision:
    """Decide whether alpha is the coboundary of a quadratic cochain.

    Coboundaries are symmetric, and every symmetric bilinear cocycle is
    reconstructed from its fields, so the antisymmetrization being
    trivial is both necessary and sufficient.  The decision is exact,
    never grid-based.
    """
    if alpha.m12 == alpha.m21:
        witness = QuadraticCochain(ONE, ONE, alpha.m12, alpha.m11, alpha.m22)
        return CoboundaryDecision(True, witness)
    return CoboundaryDecision(False, None)


class UnitSubgroup(enum.Enum):
    """A subgroup of the Klein four-group {1, -1, eps, -eps}."""

    TRIVIAL = "trivial"
    MINUS_ONE = "gen-minus-one"
    EPS = "gen-eps"
    MINUS_EPS = "gen-minus-eps"
    FULL = "full"

    def elements(self) -> tuple[Unit, ...]:
        return _SUBGROUP_ELEMENTS[self]

    @classmethod
    def from_string(cls, text: str) -> "UnitSubgroup":
        key = text.strip().lower().removeprefix("gen-")
        try:
            return _SUBGROUP_ALIASES[key]
        except KeyError:
            raise ParseError(f"not a unit subgroup: {text!r}") from None


_SUBGROUP_ELEMENTS = {
    UnitSubgroup.TRIVIAL: (ONE,),
    UnitSubgroup.MINUS_ONE: (ONE, MINUS_ONE),
    UnitSubgroup.EPS: (ONE, EPS),
    UnitSubgroup.MINUS_EPS: (ONE, MINUS_EPS),
    UnitSubgroup.FULL: (ONE, MINUS_ONE, EPS, MINUS_EPS),
}

_SUBGROUP_ALIASES = {
    "trivial": UnitSubgroup.TRIVIAL,
    "minus-one": UnitSubgroup.MINUS_ONE,
    "-1": UnitSubgroup.MINUS_ONE,
    "eps": UnitSubgroup.EPS,
    "minus-eps": UnitSubgroup.MINUS_EPS,
    "-eps": UnitSubgroup.MINUS_EPS,
    "full": UnitSubgroup.FULL,
}


def count_classes(sub: UnitSubgroup) -> int:
    """Number of coboundary classes of bilinear cocycles valued in sub,
    by exhaustive enumeration of the finite family."""
    elems = sub.elements()
    reps: list[BilinearCocycle] = []
    for fields in product(elems, repeat=4):
        alpha = BilinearCocycle(*fields)
        if not any(is_coboundary(alpha * rep.inverse()) for rep in reps):
            reps.append(alpha)
    return len(reps)


def cocycle_to_json(alpha: BilinearCocycle) -> dict[str, str]:
    return {"m11": str(alpha.m11), "m12": str(alpha.m12), "m21": str(alpha.m21), "m22": str(alpha.m22)}


def cocycle_from_json(doc: dict[str, str]) -> BilinearCocycle:
    try:
        return BilinearCocycle(*(parse_unit(doc[key]) for key in ("m11", "m12", "m21", "m22")))
    except KeyError as missing:
        raise ParseError(f"cocycle document missing field {missing}") from None


def cochain_to_json(beta: QuadraticCochain) -> dict[str, str]:
    return {
        "c1": str(beta.c1),
        "c2": str(beta.c2),
        "c12": str(beta.c12),
        "c11": str(beta.c11),
        "c22": str(beta.c22),
    }


def cochain_from_json(doc: dict[str, str]) -> QuadraticCochain:
    try:
        return QuadraticCochain(*(parse_unit(doc[key]) for key in ("c1", "c2", "c12", "c11", "c22")))
    except KeyError as missing:
        raise ParseError(f"cochain document missing field {missing}") from None
