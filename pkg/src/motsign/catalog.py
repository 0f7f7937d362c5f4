"""Built-in generators and relations of the bigraded stable stems, and
the pairwise convention-sensitivity analysis of the universal elements."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Generator, Presentation
from .conventions import error_factor
from .units import Bidegree, ONE, Unit

__all__ = [
    "CatalogEntry",
    "UNIVERSAL",
    "TAU",
    "TAU0",
    "RELATION_STRINGS",
    "universal_presentation",
    "PairSensitivity",
    "sensitivity_table",
]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    degree: Bidegree
    note: str


# The seven generators below exist in the motivic stable homotopy ring
# over any base scheme; tau needs a completion hypothesis.
UNIVERSAL: tuple[CatalogEntry, ...] = (
    CatalogEntry("rho", Bidegree(-1, -1), "class of -1 in the units of the base"),
    CatalogEntry("eta", Bidegree(1, 1), "first motivic Hopf map"),
    CatalogEntry("nu", Bidegree(3, 2), "second motivic Hopf map"),
    CatalogEntry("sigma", Bidegree(7, 4), "third motivic Hopf map"),
    CatalogEntry("eta_top", Bidegree(1, 0), "simplicial Hopf map"),
    CatalogEntry("nu_top", Bidegree(3, 0), "simplicial quaternionic Hopf map"),
    CatalogEntry("sigma_top", Bidegree(7, 0), "simplicial octonionic Hopf map"),
)

TAU = CatalogEntry("tau", Bidegree(0, -1), "p-complete over the complex numbers only")
TAU0 = CatalogEntry("tau0", Bidegree(1, 0), "mod-2 dual Steenrod algebra class")

RELATION_STRINGS: tuple[str, ...] = (
    "(1-eps)*rho",
    "(1-eps)*eta",
    "(1-eps)*eta*eta",
)


def universal_presentation(include_tau: bool = False) -> Presentation:
    """The universal generators with their eps-annihilation relations;
    tau and tau0 join only on request since they need extra hypotheses."""
    entries = list(UNIVERSAL)
    if include_tau:
        entries += [TAU, TAU0]
    generators = [Generator(entry.name, entry.degree) for entry in entries]
    return Presentation(generators, RELATION_STRINGS)


@dataclass(frozen=True)
class PairSensitivity:
    """One unordered generator pair and how the choice between the
    reference and epsilon conventions affects its commutation."""

    x: str
    y: str
    factor: Unit
    trivial: bool
    rescued: bool | None


def sensitivity_table(pres: Presentation) -> tuple[PairSensitivity, ...]:
    """Error factor for every unordered generator pair, flagging whether
    a nontrivial factor is absorbed by an eps-annihilated member."""
    rescued_names = pres.eps_annihilated_generators()
    rows = []
    gens = pres.generators
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            factor = error_factor(gens[i].degree, gens[j].degree)
            trivial = factor == ONE
            rescued = None if trivial else (gens[i].name in rescued_names or gens[j].name in rescued_names)
            rows.append(PairSensitivity(gens[i].name, gens[j].name, factor, trivial, rescued))
    return tuple(rows)
