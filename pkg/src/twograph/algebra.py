"""Exact symbolic calculus on the span of words s_mu s_nu^*.

Elements are finite rational-coefficient sums of pairs of paths, with
the word product computed through minimal common extensions: the
product s_mu s_nu^* . s_alpha s_beta^* expands over all pairs (z, x)
with nu*z == alpha*x of degree join(d(nu), d(alpha)), giving terms
s_{mu z} s_{beta x}^*.  When one inner path is a prefix of the other
this reduces to the familiar absorption rule, and the product vanishes
when no common extension exists.

Equality is decided modulo the summation relation
s_mu s_nu^* == sum over d(lambda)=n of s_{mu lambda} s_{nu lambda}^*:
terms are grouped by the degree difference d(mu)-d(nu) and expanded to
a common level, where distinct word pairs are linearly independent.

Module vectors at level n carry the square-root normalization of the
orthonormal basis implicitly: a vector is stored as a rational payload
y and denotes N^(n/2) q_n(y).  Basis vectors then have payload
s_mu s_nu^* exactly, every inner product picks up the integer factor
N^n, and all identities stay inside the rationals.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from . import doubling
from .graphs import (
    DEFAULT_PATH_CAP,
    Degree,
    GraphError,
    Path,
    SpecMismatchError,
    TwoGraph,
    ZERO_DEGREE,
)


class LevelMismatchError(GraphError):
    """Module vectors at different levels cannot be paired."""


def _extensions(graph: TwoGraph, nu: Path, alpha: Path, cap: int) -> tuple:
    """Minimal common extensions: pairs (z, x) with nu*z == alpha*x.

    Both extensions reach degree join(d(nu), d(alpha)).  Results are
    cached on the graph; the side with the smaller extension count is
    enumerated.
    """
    key = (nu.blues, nu.reds, alpha.blues, alpha.reds)
    cached = graph._ext_cache.get(key)
    if cached is not None:
        return cached
    d_nu, d_al = nu.degree, alpha.degree
    if d_nu == d_al:
        empty = Path(graph, (), ())
        result = ((empty, empty),) if nu == alpha else ()
        graph._ext_cache[key] = result
        return result
    top = d_nu.join(d_al)
    out = []
    if graph.path_count(top - d_nu) <= graph.path_count(top - d_al):
        for tail in graph._paths(top - d_nu, cap):
            rest = (nu * tail).strip_prefix(alpha)
            if rest is not None:
                out.append((tail, rest))
    else:
        for tail in graph._paths(top - d_al, cap):
            rest = (alpha * tail).strip_prefix(nu)
            if rest is not None:
                out.append((rest, tail))
    result = tuple(out)
    graph._ext_cache[key] = result
    return result


class GradedElement:
    """A formal rational combination of words s_mu s_nu^*.

    Zero coefficients are never stored.  Addition, subtraction and
    scalar multiples are coefficient-wise; ``*`` is the word product
    (or a scalar multiple when given a number).  ``==`` compares modulo
    the summation relation, so e.g. the identity equals its level-n
    expansion.
    """

    __slots__ = ("graph", "terms")

    def __init__(self, graph: TwoGraph, terms: Optional[dict] = None):
        self.graph = graph
        self.terms = {}
        if terms:
            for key, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff:
                    self.terms[key] = coeff

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, graph: TwoGraph) -> "GradedElement":
        return cls(graph)

    @classmethod
    def one(cls, graph: TwoGraph) -> "GradedElement":
        empty = Path(graph, (), ())
        return cls(graph, {(empty, empty): Fraction(1)})

    @classmethod
    def word(cls, mu: Path, nu: Path, coeff=1) -> "GradedElement":
        if not (mu.graph is nu.graph or mu.graph == nu.graph):
            raise SpecMismatchError("paths live on different graphs")
        return cls(mu.graph, {(mu, nu): Fraction(coeff)})

    # -- linear structure ----------------------------------------------

    def _check_same(self, other: "GradedElement") -> None:
        if not (self.graph is other.graph or self.graph == other.graph):
            raise SpecMismatchError("elements live on different graphs")

    def __add__(self, other: "GradedElement") -> "GradedElement":
        self._check_same(other)
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            acc = out.get(key, 0) + coeff
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
        result = GradedElement(self.graph)
        result.terms = out
        return result

    def __neg__(self) -> "GradedElement":
        result = GradedElement(self.graph)
        result.terms = {key: -coeff for key, coeff in self.terms.items()}
        return result

    def __sub__(self, other: "GradedElement") -> "GradedElement":
        return self + (-other)

    def _scaled(self, scalar) -> "GradedElement":
        scalar = Fraction(scalar)
        result = GradedElement(self.graph)
        if scalar:
            result.terms = {key: coeff * scalar for key, coeff in self.terms.items()}
        return result

    def __rmul__(self, scalar) -> "GradedElement":
        return self._scaled(scalar)

    # -- the word product ------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scaled(other)
        self._check_same(other)
        graph = self.graph
        out: dict = {}
        for (mu, nu), c in self.terms.items():
            for (alpha, beta), d in other.terms.items():
                cd = c * d
                for tail_nu, tail_al in _extensions(
                    graph, nu, alpha, DEFAULT_PATH_CAP
                ):
                    key = (mu * tail_nu, beta * tail_al)
                    acc = out.get(key, 0) + cd
                    if acc:
                        out[key] = acc
                    else:
                        del out[key]
        result = GradedElement(graph)
        result.terms = out
        return result

    def adjoint(self) -> "GradedElement":
        """The *-operation: swap word sides (rational coefficients)."""
        result = GradedElement(self.graph)
        result.terms = {(nu, mu): c for (mu, nu), c in self.terms.items()}
        return result

    # -- equality modulo the summation relation --------------------------

    def is_zero(self, cap: int = DEFAULT_PATH_CAP) -> bool:
        """Whether the element vanishes after common-level expansion."""
        classes: dict = {}
        for (mu, nu), coeff in self.terms.items():
            delta = (mu.degree.n1 - nu.degree.n1, mu.degree.n2 - nu.degree.n2)
            classes.setdefault(delta, []).append((mu, nu, coeff))
        for items in classes.values():
            level = ZERO_DEGREE
            for mu, _, _ in items:
                level = level.join(mu.degree)
            acc: dict = {}
            for mu, nu, coeff in items:
                for lam in self.graph._paths(level - mu.degree, cap):
                    key = (mu * lam, nu * lam)
                    total = acc.get(key, 0) + coeff
                    if total:
                        acc[key] = total
                    else:
                        del acc[key]
            if acc:
                return False
        return True

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = GradedElement.one(self.graph)._scaled(other)
        if not isinstance(other, GradedElement):
            return NotImplemented
        self._check_same(other)
        return (self - other).is_zero()

    def __hash__(self):
        raise TypeError("GradedElement equality is modulo expansion; not hashable")

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (mu, nu), coeff in sorted(
            self.terms.items(), key=lambda kv: (kv[0][0], kv[0][1])
        ):
            parts.append(f"{coeff}*s[{mu.pretty()}]s[{nu.pretty()}]*")
        return " + ".join(parts)


def shift(degree, element: GradedElement, cap: int = DEFAULT_PATH_CAP) -> GradedElement:
    """The degree-n shift endomorphism: sum of s_lam a s_lam^*.

    Unital on the identity (the result is the level-n expansion of 1)
    and multiplicative in the degree.
    """
    graph = element.graph
    degree = Degree(*degree)
    out: dict = {}
    for lam in graph._paths(degree, cap):
        for (mu, nu), coeff in element.terms.items():
            key = (lam * mu, lam * nu)
            acc = out.get(key, 0) + coeff
            if acc:
                out[key] = acc
            else:
                del out[key]
    result = GradedElement(graph)
    result.terms = out
    return result


def transfer(degree, element: GradedElement, cap: int = DEFAULT_PATH_CAP) -> GradedElement:
    """The transfer operator: the exact average of s_lam^* a s_lam.

    A positive left inverse companion to :func:`shift`: it satisfies
    transfer(n, shift(n, a) * b) == a * transfer(n, b) and composes
    additively in the degree.
    """
    graph = element.graph
    degree = Degree(*degree)
    scale = Fraction(1, graph.path_count(degree))
    out: dict = {}
    for lam in graph._paths(degree, cap):
        for (mu, nu), coeff in element.terms.items():
            # s_lam^* s_mu expands first, then s_nu^* s_lam on the right
            for head_tail, mu_tail in _extensions(graph, lam, mu, cap):
                left_nu = nu * mu_tail
                for mid_tail, lam_tail in _extensions(graph, left_nu, lam, cap):
                    key = (head_tail * mid_tail, lam_tail)
                    acc = out.get(key, 0) + coeff
                    if acc:
                        out[key] = acc
                    else:
                        del out[key]
    result = GradedElement(graph)
    result.terms = {key: coeff * scale for key, coeff in out.items()}
    return result


class ModuleVector:
    """A vector of the level-n bimodule in basis-scaled form.

    The stored payload y denotes the actual vector N^(n/2) q_n(y), so
    the basis vector with word pair (mu, nu) has payload s_mu s_nu^*
    and all pairings of stored vectors are exactly rational: the inner
    product of payloads x and y is N^n transfer(n, x^* y).
    """

    __slots__ = ("level", "payload")

    def __init__(self, level, payload: GradedElement):
        self.level = Degree(*level)
        self.payload = payload

    @classmethod
    def basis(cls, graph: TwoGraph, level, mu: Path, nu: Path) -> "ModuleVector":
        level = Degree(*level)
        if not (mu.graph is graph or mu.graph == graph):
            raise SpecMismatchError("basis words live on a different graph")
        if mu.degree != level or nu.degree != level:
            raise LevelMismatchError(
                f"basis words must have degree {tuple(level)}"
            )
        return cls(level, GradedElement.word(mu, nu))

    @classmethod
    def unit(cls, graph: TwoGraph) -> "ModuleVector":
        return cls(ZERO_DEGREE, GradedElement.one(graph))

    @property
    def graph(self) -> TwoGraph:
        return self.payload.graph

    def _check_level(self, other: "ModuleVector") -> None:
        if self.level != other.level:
            raise LevelMismatchError(
                f"levels {tuple(self.level)} and {tuple(other.level)} differ"
            )

    def inner(self, other: "ModuleVector") -> GradedElement:
        """The bimodule inner product; 0/1 on distinct/equal basis vectors."""
        self._check_level(other)
        scale = self.graph.path_count(self.level)
        return scale * transfer(self.level, self.payload.adjoint() * other.payload)

    def __mul__(self, other: "ModuleVector") -> "ModuleVector":
        """Product in the graded module; adds levels."""
        return ModuleVector(
            self.level + other.level,
            self.payload * shift(self.level, other.payload),
        )

    def left_mul(self, element: GradedElement) -> "ModuleVector":
        """The left action of the word algebra on the module."""
        return ModuleVector(self.level, element * self.payload)

    def right_mul(self, element: GradedElement) -> "ModuleVector":
        """The right module action; multiplies by the shifted element."""
        return ModuleVector(self.level, self.payload * shift(self.level, element))

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        self._check_level(other)
        return ModuleVector(self.level, self.payload + other.payload)

    def __sub__(self, other: "ModuleVector") -> "ModuleVector":
        self._check_level(other)
        return ModuleVector(self.level, self.payload - other.payload)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return self.level == other.level and self.payload == other.payload

    def __hash__(self):
        raise TypeError("ModuleVector is not hashable")

    def __repr__(self) -> str:
        return f"ModuleVector(level={tuple(self.level)}, payload={self.payload!r})"


def check_covariance(mu: Path, nu: Path, cap: int = DEFAULT_PATH_CAP) -> bool:
    """Left multiplication by s_mu s_nu^* equals its rank-one expansion.

    For every basis vector v at the common level n, compare the left
    action of the word with the sum over lambda of the rank-one
    operators built from the vectors with words (mu, lambda) and
    (nu, lambda): each applies v to the inner product and multiplies
    back.  True exactly when all basis vectors agree.
    """
    if mu.degree != nu.degree:
        raise LevelMismatchError("covariance check needs equal degrees")
    graph = mu.graph
    level = mu.degree
    word = GradedElement.word(mu, nu)
    lams = graph._paths(level, cap)
    for alpha in lams:
        for beta in lams:
            vec = ModuleVector.basis(graph, level, alpha, beta)
            lhs = vec.left_mul(word)
            rhs = ModuleVector(level, GradedElement.zero(graph))
            for lam in lams:
                left_vec = ModuleVector.basis(graph, level, mu, lam)
                right_vec = ModuleVector.basis(graph, level, nu, lam)
                rhs = rhs + left_vec.right_mul(right_vec.inner(vec))
            if lhs != rhs:
                return False
    return True


# -- the identity suite -------------------------------------------------------


@dataclass(frozen=True)
class SuiteCheck:
    """One verified identity: name, case count, outcome, counterexample."""

    name: str
    cases: int
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "cases": self.cases,
            "passed": self.passed,
            "detail": self.detail,
        }


def degrees_upto(bound) -> Iterator[Degree]:
    bound = Degree(*bound)
    for n1 in range(bound.n1 + 1):
        for n2 in range(bound.n2 + 1):
            yield Degree(n1, n2)


def _balanced_words(graph: TwoGraph, bound: Degree, cap: int) -> list:
    words = []
    for level in degrees_upto(bound):
        paths = graph._paths(level, cap)
        for mu in paths:
            for nu in paths:
                words.append((mu, nu))
    return words


def identity_suite(
    graph: TwoGraph,
    max_degree=(2, 2),
    seed: int = 0,
    cap: int = DEFAULT_PATH_CAP,
) -> list:
    """Run the full identity suite; every check should pass on any graph.

    ``max_degree`` bounds every degree the checks materialize: shift and
    transfer degrees, basis-word degrees, and module levels.  The
    exhaustive transfer-operator identity runs over single-color shift
    degrees for all word pairs, plus all shift degrees for word pairs
    small enough to keep intermediates within the bound; the remaining
    checks are exhaustive at their stated ranges.  Randomized checks
    (associativity, adjoint anti-multiplicativity) draw from ``seed``.
    """
    bound = Degree(*max_degree)
    rng = random.Random(seed)
    one = GradedElement.one(graph)
    checks = []

    def run(name, cases_iter, predicate):
        cases = 0
        for case in cases_iter:
            cases += 1
            if not predicate(case):
                checks.append(
                    SuiteCheck(name, cases, False, detail=f"counterexample: {case}")
                )
                return
        checks.append(SuiteCheck(name, cases, True))

    # transfer of the identity
    run(
        "transfer-unit",
        list(degrees_upto(bound)),
        lambda n: transfer(n, one, cap) == one,
    )

    # shift of the identity (the level-n expansion of 1)
    run(
        "shift-unit",
        list(degrees_upto(bound)),
        lambda n: shift(n, one, cap) == one,
    )

    # transfer identity on the generators, all word pairs
    words = _balanced_words(graph, bound, cap)
    word_elems = [GradedElement.word(mu, nu) for mu, nu in words]

    def generators_check():
        cases = 0
        for n in (Degree(1, 0), Degree(0, 1)):
            if not n.leq(bound):
                continue
            shifted = [shift(n, a, cap) for a in word_elems]
            transferred = [transfer(n, b, cap) for b in word_elems]
            for a, sa in zip(word_elems, shifted):
                for b, tb in zip(word_elems, transferred):
                    cases += 1
                    if transfer(n, sa * b, cap) != a * tb:
                        detail = f"counterexample: n={tuple(n)}, a={a!r}, b={b!r}"
                        return SuiteCheck(
                            "transfer-identity-generators", cases, False, detail
                        )
        return SuiteCheck("transfer-identity-generators", cases, True)

    checks.append(generators_check())

    def transfer_identity(case):
        n, (mu, nu), (al, be) = case
        a = GradedElement.word(mu, nu)
        b = GradedElement.word(al, be)
        return transfer(n, shift(n, a, cap) * b, cap) == a * transfer(n, b, cap)

    # transfer identity at every degree, words small enough to stay in bound
    deep_cases = []
    for n in degrees_upto(bound):
        inner = _balanced_words(graph, bound - n, cap)
        deep_cases.extend((n, a, b) for a in inner for b in inner)
    run("transfer-identity-all-degrees", deep_cases, transfer_identity)

    # semigroup law for transfer: all degree splits, all word pairs
    action_cases = [
        (m, n, w)
        for m in degrees_upto(bound)
        for n in degrees_upto(bound - m)
        for w in words
    ]

    def transfer_action(case):
        m, n, (mu, nu) = case
        a = GradedElement.word(mu, nu)
        return transfer(m, transfer(n, a, cap), cap) == transfer(m + n, a, cap)

    run("transfer-action", action_cases, transfer_action)

    # transfer is a left inverse of shift
    section_cases = [
        (n, w) for n in degrees_upto(bound) for w in _balanced_words(graph, bound, cap)
    ]

    def transfer_section(case):
        n, (mu, nu) = case
        a = GradedElement.word(mu, nu)
        return transfer(n, shift(n, a, cap), cap) == a

    run("transfer-section", section_cases, transfer_section)

    # orthonormal module bases
    def orthonormal(level):
        paths = graph._paths(level, cap)
        for mu in paths:
            for nu in paths:
                left = ModuleVector.basis(graph, level, mu, nu)
                for al in paths:
                    for be in paths:
                        right = ModuleVector.basis(graph, level, al, be)
                        expected = 1 if (mu, nu) == (al, be) else 0
                        if left.inner(right) != expected:
                            return False
        return True

    run("module-orthonormal", list(degrees_upto(bound)), orthonormal)

    # product rule for basis vectors
    prod_cases = []
    for m in degrees_upto(bound):
        for n in degrees_upto(bound - m):
            m_paths = graph._paths(m, cap)
            n_paths = graph._paths(n, cap)
            prod_cases.extend(
                (m, n, mu, nu, al, be)
                for mu in m_paths
                for nu in m_paths
                for al in n_paths
                for be in n_paths
            )

    def product_rule(case):
        m, n, mu, nu, al, be = case
        left = ModuleVector.basis(graph, m, mu, nu)
        right = ModuleVector.basis(graph, n, al, be)
        expected = ModuleVector.basis(graph, m + n, mu * al, nu * be)
        return left * right == expected

    run("module-product", prod_cases, product_rule)

    # commutation of the doubled Cuntz family
    doubled = doubling.double(graph)

    def family_blue(i):
        e, f = doubled.blue_pair(i)
        return ModuleVector.basis(
            graph, Degree(1, 0), graph.blue_path(e), graph.blue_path(f)
        )

    def family_red(j):
        g, h = doubled.red_pair(j)
        return ModuleVector.basis(
            graph, Degree(0, 1), graph.red_path(g), graph.red_path(h)
        )

    def commutation(case):
        i, j = case
        j2, i2 = doubled.commute_blue_red(i, j)
        return family_blue(i) * family_red(j) == family_red(j2) * family_blue(i2)

    run(
        "cuntz-commutation",
        [(i, j) for i in range(doubled.n_blue) for j in range(doubled.n_red)],
        commutation,
    )

    # isometry and reconstruction for the doubled Cuntz families
    def cuntz_family(color):
        if color == "blue":
            level = Degree(1, 0)
            family = [family_blue(i) for i in range(doubled.n_blue)]
        else:
            level = Degree(0, 1)
            family = [family_red(j) for j in range(doubled.n_red)]
        for vec in family:
            if vec.inner(vec) != 1:
                return False
        paths = graph._paths(level, cap)
        for al in paths:
            for be in paths:
                target = ModuleVector.basis(graph, level, al, be)
                total = ModuleVector(level, GradedElement.zero(graph))
                for vec in family:
                    total = total + vec.right_mul(vec.inner(target))
                if total != target:
                    return False
        return True

    run("cuntz-family", ["blue", "red"], cuntz_family)

    # covariance of the left action at small levels
    cov_levels = list(degrees_upto(bound.meet(Degree(1, 1))))
    cov_cases = []
    for n in cov_levels:
        paths = graph._paths(n, cap)
        cov_cases.extend((mu, nu) for mu in paths for nu in paths)
    run("covariance", cov_cases, lambda case: check_covariance(*case, cap=cap))

    # *-algebra axioms on random word triples
    small_words = _balanced_words(graph, bound.meet(Degree(1, 1)), cap)
    triples = [
        tuple(rng.choice(small_words) for _ in range(3)) for _ in range(25)
    ]

    def star_axioms(case):
        x, y, z = (GradedElement.word(mu, nu) for mu, nu in case)
        if (x * y) * z != x * (y * z):
            return False
        return (x * y).adjoint() == y.adjoint() * x.adjoint()

    run("star-axioms", triples, star_axioms)

    return checks
