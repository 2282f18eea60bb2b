"""Periodicity decision for single-vertex rank-2 graphs.

Periodicity is equivalent to the existence of a degree pair (a, b) and
a bijection between the blue paths of degree (a,0) and the red paths of
degree (0,b) under which every product mu*nu refactors as the paired
red path followed by the inversely paired blue path.  Instead of
searching the (N1^a)! bijections, the canonical candidate pairing is
computed from red-prefix extraction and then verified; any pairing that
satisfies the condition necessarily equals the canonical one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .graphs import (
    DEFAULT_PATH_CAP,
    Degree,
    GraphError,
    SizeLimitError,
    TwoGraph,
)


class DegenerateCountsError(GraphError):
    """Fewer than two edges of some color; the decision needs both >= 2."""


def _factorize(n: int) -> dict:
    factors: dict = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def minimal_exponents(n_blue: int, n_red: int) -> Optional[tuple]:
    """Least positive (a, b) with n_blue**a == n_red**b, if any.

    Every solution is a multiple of the minimal one.  Returns None when
    the counts are not rationally related (e.g. 2 and 3).
    """
    if n_blue < 2 or n_red < 2:
        raise DegenerateCountsError(
            f"need at least two edges of each color, got {(n_blue, n_red)}"
        )
    blue_f = _factorize(n_blue)
    red_f = _factorize(n_red)
    if set(blue_f) != set(red_f):
        return None
    # n_blue^a = n_red^b forces a*e_p = b*f_p for every prime p
    ratios = {Fraction(red_f[p], blue_f[p]) for p in blue_f}
    if len(ratios) != 1:
        return None
    ratio = ratios.pop()
    return (ratio.numerator, ratio.denominator)


def candidate_pairing(
    graph: TwoGraph, a: int, b: int, cap: int = DEFAULT_PATH_CAP
) -> Optional[dict]:
    """The canonical candidate bijection blue^(a,0) -> red^(0,b), or None.

    For each blue path mu the red prefix of mu*beta is extracted; the
    candidate exists only if that prefix is independent of the choice of
    the red path beta and the resulting map is a bijection.
    """
    if graph.path_count(Degree(a, 0)) != graph.path_count(Degree(0, b)):
        raise GraphError(f"path counts differ at (a, b) = {(a, b)}")
    blues = graph.enumerate_paths(Degree(a, 0), cap)
    reds = graph.enumerate_paths(Degree(0, b), cap)
    red_degree = Degree(0, b)
    pairing: dict = {}
    for mu in blues:
        value = None
        for beta in reds:
            prefix, _ = (mu * beta).split(red_degree)
            if value is None:
                value = prefix
            elif prefix != value:
                return None
        pairing[mu] = value
    if len(set(pairing.values())) != len(blues):
        return None
    return pairing


def verify_period(graph: TwoGraph, a: int, b: int, pairing: dict) -> bool:
    """Check the full refactorization condition for a given pairing.

    True iff for every (mu, nu) in blue^(a,0) x red^(0,b) the product
    mu*nu has red-first factorization pairing[mu] followed by the
    inverse pairing of nu.
    """
    blues = graph.enumerate_paths(Degree(a, 0))
    reds = graph.enumerate_paths(Degree(0, b))
    if set(pairing.keys()) != set(blues) or set(pairing.values()) != set(reds):
        raise GraphError("pairing is not a bijection between the stated path sets")
    inverse = {v: k for k, v in pairing.items()}
    red_degree = Degree(0, b)
    for mu in blues:
        for nu in reds:
            head, tail = (mu * nu).split(red_degree)
            if head != pairing[mu] or tail != inverse[nu]:
                return False
    return True


@dataclass(frozen=True)
class PeriodWitness:
    """A verified period: exponents plus the blue-to-red pairing."""

    a: int
    b: int
    pairing: dict

    def inverse(self) -> dict:
        return {v: k for k, v in self.pairing.items()}

    def to_json(self) -> dict:
        rows = sorted(
            (mu.pretty(), nu.pretty()) for mu, nu in self.pairing.items()
        )
        return {"a": self.a, "b": self.b, "gamma": [list(r) for r in rows]}


PERIODIC = "periodic"
APERIODIC = "aperiodic"
NO_CANDIDATE_PAIRS = "no_candidate_pairs"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class PeriodicityVerdict:
    """Outcome of the bounded periodicity search.

    ``aperiodic`` means every candidate pair up to the multiple bound
    failed; ``checked`` lists the pairs examined.  ``no_candidate_pairs``
    means the edge counts admit no exponent pair at all, which rules out
    periodicity outright.  ``unknown`` is reserved for searches cut off
    by the path cap before the bound was exhausted.
    """

    kind: str
    witness: Optional[PeriodWitness] = None
    checked: tuple = ()
    kmax: int = 0
    detail: str = ""

    @property
    def is_periodic(self) -> bool:
        return self.kind == PERIODIC

    @property
    def is_unknown(self) -> bool:
        return self.kind == UNKNOWN

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        if self.kind in (APERIODIC, UNKNOWN):
            out["checked"] = [list(pair) for pair in self.checked]
            out["kmax"] = self.kmax
        if self.detail:
            out["detail"] = self.detail
        return out


def decide_periodicity(
    graph: TwoGraph, kmax: int = 4, cap: int = DEFAULT_PATH_CAP
) -> PeriodicityVerdict:
    """Bounded periodicity decision.

    Tries the multiples k*(a0, b0) of the minimal exponent pair for
    k = 1..kmax.  A verified candidate gives ``periodic``; candidate
    uniqueness means no other bijection needs to be searched.
    """
    minimal = minimal_exponents(graph.n_blue, graph.n_red)
    if minimal is None:
        return PeriodicityVerdict(
            kind=NO_CANDIDATE_PAIRS,
            detail="edge counts are not rationally related",
        )
    a0, b0 = minimal
    checked = []
    for k in range(1, kmax + 1):
        a, b = k * a0, k * b0
        try:
            pairing = candidate_pairing(graph, a, b, cap)
        except SizeLimitError as exc:
            return PeriodicityVerdict(
                kind=UNKNOWN,
                checked=tuple(checked),
                kmax=kmax,
                detail=f"path cap hit at (a, b) = {(a, b)}: {exc}",
            )
        if pairing is not None and verify_period(graph, a, b, pairing):
            return PeriodicityVerdict(
                kind=PERIODIC, witness=PeriodWitness(a, b, pairing), kmax=kmax
            )
        checked.append((a, b))
    return PeriodicityVerdict(kind=APERIODIC, checked=tuple(checked), kmax=kmax)
