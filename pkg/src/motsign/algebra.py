"""Presented Z x Z-graded algebras over Z[eps]/(eps^2 - 1).

Elements live on the sorted-word basis of the reference product; a
convention acts only through multiplication, so re-evaluating the same
expression under two conventions compares two products on one underlying
group.  Sorting a word into canonical generator order charges the
reference commutation unit per adjacent swap, and a convention's twist
enters once per factor pair.

Coefficients of a monomial are reduced modulo an annihilator lattice:

* the commutation law itself forces (1 - kappa(d, d)) to annihilate any
  monomial containing a repeated generator of degree d (for example a
  generator of degree (1, 1) squares to an eps-invariant class);
* a single-term relation c * m = 0 with non-unit c contributes c to the
  annihilator of every monomial divisible by m.

Annihilator coefficients stay in the generic coefficient ring even when
elements are evaluated under a specialized mode, so an eps-torsion
relation never silently turns into integer torsion.  Relations with a
unit leading coefficient are instead applied as rewrite rules, replacing
the leading monomial by the negated tail until a fixed point.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .conventions import Convention, base_commutation, commutation_unit, convention
from .cocycles import eval_cocycle
from .errors import (
    InhomogeneousError,
    ModeMismatchError,
    MotsignError,
    ParseError,
    RewriteLimitError,
)
from .units import (
    Bidegree,
    Coef,
    CoefMode,
    GENERIC,
    ONE,
    UNITS,
    Unit,
    is_unit_coef,
    specialize,
)

__all__ = [
    "Generator",
    "Element",
    "ZERO",
    "Presentation",
    "Expr",
    "NameExpr",
    "IntExpr",
    "NegExpr",
    "MulExpr",
    "AddExpr",
    "TransportReport",
    "MAX_REWRITE_PASSES",
    "parse_expression",
    "normalize",
    "multiply",
    "add_elements",
    "scalar_mul",
    "graded_commutator",
    "generator_element",
    "scalar_element",
    "eval_expr",
    "transport_check",
    "presentation_to_json",
    "presentation_from_json",
]

MAX_REWRITE_PASSES = 10_000

Monomial = tuple[int, ...]

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")
_RESERVED_NAMES = frozenset({"eps"})


@dataclass(frozen=True)
class Generator:
    name: str
    degree: Bidegree


@dataclass(frozen=True)
class Element:
    """Homogeneous linear combination of sorted generator words.

    terms maps each monomial (a sorted tuple of generator indices) to a
    canonical nonzero coefficient; the zero element has no terms and no
    degree.
    """

    terms: tuple[tuple[Monomial, Coef], ...]
    degree: Bidegree | None

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, monomial: Monomial) -> Coef:
        for m, c in self.terms:
            if m == monomial:
                return c
        return Coef()

    def render(self, pres: "Presentation") -> str:
        if not self.terms:
            return "0"
        parts = []
        for monomial, coef in self.terms:
            word = _render_monomial(monomial, pres)
            if not word:
                parts.append(str(coef))
            elif coef == Coef(1):
                parts.append(word)
            elif coef == Coef(-1):
                parts.append(f"-{word}")
            elif coef.a != 0 and coef.b != 0:
                parts.append(f"({coef})*{word}")
            else:
                parts.append(f"{coef}*{word}")
        return " + ".join(parts)


ZERO = Element((), None)


def _render_monomial(monomial: Monomial, pres: "Presentation") -> str:
    factors = []
    for idx, count in sorted(Counter(monomial).items()):
        name = pres.generators[idx].name
        factors.append(name if count == 1 else f"{name}^{count}")
    return "*".join(factors)


# ---------- integer lattice reduction for annihilator ideals ----------


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with g = a x + b y and g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _hnf_basis(vectors: Iterable[tuple[int, int]]) -> tuple[tuple[int, int] | None, tuple[int, int] | None]:
    """Canonical basis (v1, v2) of the lattice spanned by the vectors,
    echelonized against the eps coordinate first: v1 = (a1, b1) with
    b1 > 0, v2 = (a2, 0) with a2 > 0; either may be absent."""
    v1: tuple[int, int] | None = None
    a_gcd = 0
    for vec in vectors:
        if vec == (0, 0):
            continue
        if vec[1] == 0:
            a_gcd = math.gcd(a_gcd, abs(vec[0]))
            continue
        if v1 is None:
            v1 = vec
            continue
        g, x, y = _ext_gcd(v1[1], vec[1])
        merged = (x * v1[0] + y * vec[0], g)
        a_gcd = math.gcd(a_gcd, abs(v1[0] - (v1[1] // g) * merged[0]))
        a_gcd = math.gcd(a_gcd, abs(vec[0] - (vec[1] // g) * merged[0]))
        v1 = merged
    if v1 is not None and v1[1] < 0:
        v1 = (-v1[0], -v1[1])
    v2 = (a_gcd, 0) if a_gcd else None
    if v1 is not None and v2 is not None:
        v1 = (v1[0] % v2[0], v1[1])
    return v1, v2


def _lattice_reduce(c: Coef, basis: tuple[tuple[int, int] | None, tuple[int, int] | None]) -> Coef:
    v1, v2 = basis
    a, b = c.a, c.b
    if v1 is not None:
        k = b // v1[1]
        a -= k * v1[0]
        b -= k * v1[1]
    if v2 is not None:
        a %= v2[0]
    return Coef(a, b)


# ---------- monomial helpers ----------


def _divides(div: Monomial, m: Monomial) -> bool:
    """Multiset inclusion of sorted index tuples."""
    i = 0
    for x in m:
        if i < len(div) and div[i] == x:
            i += 1
    return i == len(div)


def _multiset_diff(m: Monomial, div: Monomial) -> Monomial:
    out = []
    i = 0
    for x in m:
        if i < len(div) and div[i] == x:
            i += 1
        else:
            out.append(x)
    return tuple(out)


def _merge_words(m1: Monomial, m2: Monomial, pres: "Presentation") -> tuple[Monomial, Unit]:
    """Sorted union of two sorted words and the product of reference
    commutation units over strictly inverted cross pairs."""
    pen = ONE
    degrees = pres._degrees
    for i in m1:
        for j in m2:
            if i > j:
                pen = pen * base_commutation(degrees[i], degrees[j])
    return tuple(sorted(m1 + m2)), pen


def _expvec(monomial: Monomial, n: int) -> tuple[int, ...]:
    counts = [0] * n
    for idx in monomial:
        counts[idx] += 1
    return tuple(counts)


# ---------- presentations ----------


@dataclass(frozen=True)
class _RewriteRule:
    lead: Monomial
    neg_lead_inv: Coef
    tail: tuple[tuple[Monomial, Coef], ...]


class Presentation:
    """Immutable list of graded generators plus relations.

    Relations (expression strings or prebuilt elements) are classified on
    construction: a relation whose lex-leading monomial carries a unit
    coefficient becomes a rewrite rule, and a single-term relation with a
    non-unit coefficient becomes an annihilator entry.  Anything else is
    rejected; there is no completion procedure here.
    """

    def __init__(self, generators: Sequence[Generator], relations: Sequence["Element | str"] = ()):
        gens = tuple(generators)
        seen: set[str] = set()
        for gen in gens:
            if not _NAME_RE.match(gen.name):
                raise MotsignError(f"bad generator name: {gen.name!r}")
            if gen.name in _RESERVED_NAMES:
                raise MotsignError(f"generator name {gen.name!r} is reserved")
            if gen.name in seen:
                raise MotsignError(f"duplicate generator name: {gen.name!r}")
            seen.add(gen.name)
        self.generators = gens
        self._index = {gen.name: i for i, gen in enumerate(gens)}
        self._degrees = tuple(gen.degree for gen in gens)
        self._ann_entries: list[tuple[Monomial, Coef]] = []
        self._rules: list[_RewriteRule] = []
        self._basis_cache: dict[tuple[Monomial, int], tuple] = {}
        rel_elements = []
        rel_strings = []
        for rel in relations:
            if isinstance(rel, str):
                element = eval_expr(parse_expression(rel), _RAW_REFERENCE, self, _reduce=False)
                rel_strings.append(rel)
            else:
                element = rel
                rel_strings.append(element.render(self))
            self._classify_relation(element)
            rel_elements.append(element)
        self.relations = tuple(rel_elements)
        self.relation_strings = tuple(rel_strings)

    def _classify_relation(self, element: Element) -> None:
        if element.is_zero:
            raise MotsignError("relation reduces to zero")
        n = len(self.generators)
        ranked = sorted(element.terms, key=lambda item: _expvec(item[0], n))
        # distinct monomials have distinct exponent vectors, so the last
        # entry is strictly greatest and rewriting strictly decreases
        lead, lead_coef = ranked[-1]
        if is_unit_coef(lead_coef):
            det = lead_coef.a * lead_coef.a - lead_coef.b * lead_coef.b
            inv = Coef(lead_coef.a * det, -lead_coef.b * det)
            self._rules.append(_RewriteRule(lead, -inv, tuple(item for item in ranked[:-1])))
        elif len(ranked) == 1:
            self._ann_entries.append((lead, lead_coef))
        else:
            raise MotsignError(
                "unsupported relation: need a unit leading coefficient or a single annihilator term"
            )

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise MotsignError(f"unknown generator: {name!r}") from None

    def monomial_degree(self, monomial: Monomial) -> Bidegree:
        degree = Bidegree(0, 0)
        for idx in monomial:
            degree = degree + self._degrees[idx]
        return degree

    def eps_annihilated_generators(self) -> frozenset[str]:
        """Names g with a declared relation (1 - eps) * g = 0."""
        associates = {Coef(1, -1), Coef(-1, 1)}
        names = set()
        for monomial, coef in self._ann_entries:
            if len(monomial) == 1 and coef in associates:
                names.add(self.generators[monomial[0]].name)
        return frozenset(names)

    def _annihilator_basis(self, monomial: Monomial, modulus: int):
        key = (monomial, modulus)
        cached = self._basis_cache.get(key)
        if cached is not None:
            return cached
        vectors: list[tuple[int, int]] = []
        for div, coef in self._ann_entries:
            if _divides(div, monomial):
                vectors.append((coef.a, coef.b))
                vectors.append((coef.b, coef.a))  # eps multiple
        for idx, count in Counter(monomial).items():
            if count >= 2:
                degree = self._degrees[idx]
                self_coef = Coef(1) - base_commutation(degree, degree).to_coef()
                if not self_coef.is_zero():
                    vectors.append((self_coef.a, self_coef.b))
                    vectors.append((self_coef.b, self_coef.a))
        if modulus:
            vectors.append((modulus, 0))
            vectors.append((0, modulus))
        basis = _hnf_basis(vectors) if vectors else (None, None)
        self._basis_cache[key] = basis
        return basis

    def reduce_coef(self, monomial: Monomial, coef: Coef, mode: CoefMode = GENERIC) -> Coef:
        """Canonical representative of the coefficient modulo the
        monomial's annihilator ideal (and the mode's modulus)."""
        coef = specialize(coef, mode)
        basis = self._annihilator_basis(monomial, mode.modulus)
        if basis == (None, None):
            return coef
        return _lattice_reduce(coef, basis)


# ---------- element assembly ----------


def _assemble(
    raw: dict[Monomial, Coef],
    conv: Convention,
    pres: Presentation,
    _reduce: bool = True,
) -> Element:
    mode = conv.mode
    terms: dict[Monomial, Coef] = {}
    for monomial, coef in raw.items():
        coef = pres.reduce_coef(monomial, coef, mode) if _reduce else specialize(coef, mode)
        if not coef.is_zero():
            terms[monomial] = coef
    if _reduce and pres._rules:
        passes = 0
        while True:
            hit = _find_rewritable(terms, pres)
            if hit is None:
                break
            passes += 1
            if passes > MAX_REWRITE_PASSES:
                raise RewriteLimitError(
                    f"no fixed point after {MAX_REWRITE_PASSES} rewrite passes"
                )
            monomial, rule = hit
            coef = terms.pop(monomial)
            for new_monomial, new_coef in _apply_rule(monomial, coef, rule, conv, pres):
                total = terms.get(new_monomial, Coef()) + new_coef
                total = pres.reduce_coef(new_monomial, total, mode)
                if total.is_zero():
                    terms.pop(new_monomial, None)
                else:
                    terms[new_monomial] = total
    if not terms:
        return ZERO
    degree = None
    for monomial in terms:
        d = pres.monomial_degree(monomial)
        if degree is None:
            degree = d
        elif degree != d:
            raise InhomogeneousError(f"terms of bidegrees {degree} and {d} in one element")
    return Element(tuple(sorted(terms.items())), degree)


def _find_rewritable(terms: dict[Monomial, Coef], pres: Presentation):
    for monomial in sorted(terms):
        for rule in pres._rules:
            if _divides(rule.lead, monomial):
                return monomial, rule
    return None


def _apply_rule(
    monomial: Monomial,
    coef: Coef,
    rule: _RewriteRule,
    conv: Convention,
    pres: Presentation,
) -> list[tuple[Monomial, Coef]]:
    mode = conv.mode
    rest = _multiset_diff(monomial, rule.lead)
    _, pen = _merge_words(rule.lead, rest, pres)
    # the merged word is the monomial itself; pen^(-1) = pen (order 2)
    factor = coef * specialize(pen.specialize(mode).to_coef() * rule.neg_lead_inv, mode)
    out = []
    for tail_monomial, tail_coef in rule.tail:
        merged, tail_pen = _merge_words(tail_monomial, rest, pres)
        out.append((merged, factor * specialize(tail_coef, mode) * tail_pen.specialize(mode).to_coef()))
    return out


_RAW_REFERENCE = convention("reference")


# ---------- the operations ----------


def normalize(word: Sequence[str | int], conv: Convention, pres: Presentation) -> Element:
    """Expand the product of the word's generators, taken in the given
    order under the convention, on the canonical sorted basis.

    Each strictly inverted pair charges the reference commutation unit
    and every factor pair charges the convention's twist once; the result
    is then reduced modulo the relations.
    """
    if not word:
        raise MotsignError("cannot normalize an empty word")
    idxs = []
    for item in word:
        if isinstance(item, str):
            idxs.append(pres.index(item))
        else:
            idx = int(item)
            if not 0 <= idx < len(pres.generators):
                raise MotsignError(f"generator index out of range: {idx}")
            idxs.append(idx)
    degrees = [pres._degrees[i] for i in idxs]
    unit = ONE
    for i in range(len(idxs)):
        for j in range(i + 1, len(idxs)):
            unit = unit * eval_cocycle(conv.twist, degrees[i], degrees[j])
            if idxs[i] > idxs[j]:
                unit = unit * base_commutation(degrees[i], degrees[j])
    coef = unit.specialize(conv.mode).to_coef()
    return _assemble({tuple(sorted(idxs)): coef}, conv, pres)


def multiply(x: Element, y: Element, conv: Convention, pres: Presentation) -> Element:
    """Product of homogeneous elements under the convention's twist."""
    if x.is_zero or y.is_zero:
        return ZERO
    twist = eval_cocycle(conv.twist, x.degree, y.degree)
    raw: dict[Monomial, Coef] = {}
    for m1, c1 in x.terms:
        for m2, c2 in y.terms:
            merged, pen = _merge_words(m1, m2, pres)
            unit = (twist * pen).specialize(conv.mode).to_coef()
            raw[merged] = raw.get(merged, Coef()) + c1 * c2 * unit
    return _assemble(raw, conv, pres)


def add_elements(x: Element, y: Element, conv: Convention, pres: Presentation) -> Element:
    if x.is_zero:
        return y
    if y.is_zero:
        return x
    if x.degree != y.degree:
        raise InhomogeneousError(f"cannot add bidegrees {x.degree} and {y.degree}")
    raw = dict(x.terms)
    for monomial, coef in y.terms:
        raw[monomial] = raw.get(monomial, Coef()) + coef
    return _assemble(raw, conv, pres)


def scalar_mul(scalar: Coef | int, x: Element, conv: Convention, pres: Presentation) -> Element:
    if isinstance(scalar, int):
        scalar = Coef(scalar)
    if x.is_zero or scalar.is_zero():
        return ZERO
    raw = {monomial: scalar * coef for monomial, coef in x.terms}
    return _assemble(raw, conv, pres)


def graded_commutator(x: Element, y: Element, conv: Convention, pres: Presentation) -> Element:
    """x y - w(deg x, deg y) y x under the convention; identically zero in
    any free presentation."""
    if x.is_zero or y.is_zero:
        return ZERO
    w = commutation_unit(conv, x.degree, y.degree).to_coef()
    left = multiply(x, y, conv, pres)
    right = scalar_mul(-w, multiply(y, x, conv, pres), conv, pres)
    return add_elements(left, right, conv, pres)


def generator_element(name: str, conv: Convention, pres: Presentation) -> Element:
    return _assemble({(pres.index(name),): Coef(1)}, conv, pres)


def scalar_element(value: Coef | int, conv: Convention, pres: Presentation) -> Element:
    if isinstance(value, int):
        value = Coef(value)
    return _assemble({(): value}, conv, pres)


# ---------- expressions ----------


class Expr:
    """Expression tree over generator names, eps, and integers."""


@dataclass(frozen=True)
class NameExpr(Expr):
    name: str


@dataclass(frozen=True)
class IntExpr(Expr):
    value: int


@dataclass(frozen=True)
class NegExpr(Expr):
    child: Expr


@dataclass(frozen=True)
class MulExpr(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class AddExpr(Expr):
    left: Expr
    right: Expr


_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[+\-*()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if not match:
            if text[pos:].strip():
                raise ParseError(f"unexpected character {text[pos]!r}", column=pos + 1)
            break
        if match.group("int"):
            tokens.append(("int", match.group("int"), match.start() + 1))
        elif match.group("name"):
            tokens.append(("name", match.group("name"), match.start() + 1))
        else:
            tokens.append(("op", match.group("op"), match.start() + 1))
        pos = match.end()
    tokens.append(("end", "", len(text) + 1))
    return tokens


class _ExprParser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def expect_op(self, op: str) -> None:
        kind, value, col = self.peek()
        if kind != "op" or value != op:
            raise ParseError(f"expected {op!r}", column=col)
        self.advance()

    def parse(self) -> Expr:
        expr = self.expr()
        kind, value, col = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected token {value!r}", column=col)
        return expr

    def expr(self) -> Expr:
        node = self.term()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.advance()
                right = self.term()
                node = AddExpr(node, right if value == "+" else NegExpr(right))
            else:
                return node

    def term(self) -> Expr:
        node = self.factor()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "*":
                self.advance()
                node = MulExpr(node, self.factor())
            else:
                return node

    def factor(self) -> Expr:
        kind, value, col = self.peek()
        if kind == "op" and value == "-":
            self.advance()
            return NegExpr(self.factor())
        if kind == "int":
            self.advance()
            return IntExpr(int(value))
        if kind == "name":
            self.advance()
            return NameExpr(value)
        if kind == "op" and value == "(":
            self.advance()
            node = self.expr()
            self.expect_op(")")
            return node
        raise ParseError(f"unexpected token {value!r}" if value else "unexpected end of input", column=col)


def parse_expression(text: str) -> Expr:
    """Parse an expression over generator names, eps, integers, *, +, -,
    and parentheses."""
    return _ExprParser(text).parse()


def eval_expr(
    expr: Expr | str,
    conv: Convention,
    pres: Presentation,
    _reduce: bool = True,
) -> Element:
    """Evaluate an expression tree (or string) to a canonical element."""
    if isinstance(expr, str):
        expr = parse_expression(expr)
    if isinstance(expr, NameExpr):
        if expr.name == "eps":
            return _assemble({(): Coef(0, 1)}, conv, pres, _reduce)
        return _assemble({(pres.index(expr.name),): Coef(1)}, conv, pres, _reduce)
    if isinstance(expr, IntExpr):
        return _assemble({(): Coef(expr.value)}, conv, pres, _reduce)
    if isinstance(expr, NegExpr):
        child = eval_expr(expr.child, conv, pres, _reduce)
        raw = {monomial: -coef for monomial, coef in child.terms}
        return _assemble(raw, conv, pres, _reduce)
    if isinstance(expr, MulExpr):
        left = eval_expr(expr.left, conv, pres, _reduce)
        right = eval_expr(expr.right, conv, pres, _reduce)
        if _reduce:
            return multiply(left, right, conv, pres)
        return _multiply_raw(left, right, conv, pres)
    if isinstance(expr, AddExpr):
        left = eval_expr(expr.left, conv, pres, _reduce)
        right = eval_expr(expr.right, conv, pres, _reduce)
        if left.is_zero:
            return right
        if right.is_zero:
            return left
        if left.degree != right.degree:
            raise InhomogeneousError(f"cannot add bidegrees {left.degree} and {right.degree}")
        raw = dict(left.terms)
        for monomial, coef in right.terms:
            raw[monomial] = raw.get(monomial, Coef()) + coef
        return _assemble(raw, conv, pres, _reduce)
    raise MotsignError(f"not an expression node: {expr!r}")


def _multiply_raw(x: Element, y: Element, conv: Convention, pres: Presentation) -> Element:
    """Product without relation reduction, used to ingest relations."""
    if x.is_zero or y.is_zero:
        return ZERO
    twist = eval_cocycle(conv.twist, x.degree, y.degree)
    raw: dict[Monomial, Coef] = {}
    for m1, c1 in x.terms:
        for m2, c2 in y.terms:
            merged, pen = _merge_words(m1, m2, pres)
            raw[merged] = raw.get(merged, Coef()) + c1 * c2 * (twist * pen).to_coef()
    return _assemble(raw, conv, pres, _reduce=False)


# ---------- transport between conventions ----------


@dataclass(frozen=True)
class TransportReport:
    expression: str
    convention_from: str
    convention_to: str
    result_from: Element
    result_to: Element
    agree: bool
    discrepancy: Unit | None


def transport_check(
    expr: Expr | str,
    conv_from: Convention,
    conv_to: Convention,
    pres: Presentation,
) -> TransportReport:
    """Evaluate the expression under both conventions and report whether
    the normal forms agree; if not, the unit relating them when one exists."""
    if conv_from.mode != conv_to.mode:
        raise ModeMismatchError(
            f"conventions {conv_from.name!r} and {conv_to.name!r} use different coefficient modes"
        )
    text = expr if isinstance(expr, str) else "<expression>"
    result_from = eval_expr(expr, conv_from, pres)
    result_to = eval_expr(expr, conv_to, pres)
    agree = result_from == result_to
    discrepancy = None
    if not agree:
        for unit in UNITS:
            scaled = scalar_mul(unit.specialize(conv_to.mode).to_coef(), result_from, conv_to, pres)
            if scaled == result_to:
                discrepancy = unit
                break
    return TransportReport(text, conv_from.name, conv_to.name, result_from, result_to, agree, discrepancy)


# ---------- presentation files ----------


def presentation_to_json(pres: Presentation) -> dict:
    return {
        "generators": [
            {"name": gen.name, "degree": [gen.degree.p, gen.degree.q]} for gen in pres.generators
        ],
        "relations": list(pres.relation_strings),
    }


def presentation_from_json(doc: dict) -> Presentation:
    try:
        generators = [
            Generator(entry["name"], Bidegree(int(entry["degree"][0]), int(entry["degree"][1])))
            for entry in doc["generators"]
        ]
    except (KeyError, TypeError, IndexError, ValueError) as exc:
        raise ParseError(f"malformed presentation document: {exc}") from None
    return Presentation(generators, tuple(doc.get("relations", ())))
