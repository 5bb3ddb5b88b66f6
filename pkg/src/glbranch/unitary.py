"""Unitary inputs: Speh ladders, quasi-Speh truncations, the GGP matcher and Speh classifiers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Optional

import networkx as nx

from .core import CuspidalLabel, IrrRep, Multisegment, Segment, frac
from .derivative import Side

HALF = Fraction(1, 2)


def _center(n: int) -> Fraction:
    return Fraction(n - 1, 2)


def speh_multisegment(label: CuspidalLabel, u: int, v: int, shift=0) -> Multisegment:
    """The ladder ``Σ_j ν^j [−(u−1)/2, (u−1)/2]`` over ``j = −(v−1)/2, …, (v−1)/2``, then twisted."""
    if u < 1 or v < 1:
        raise ValueError("u and v must be positive")
    s, cu, cv = frac(shift), _center(u), _center(v)
    return Multisegment.of(Segment(label, -cu - cv + j + s, cu - cv + j + s) for j in range(v))


def speh_ladder(label: CuspidalLabel, a, b, h: int, start: int = 0) -> Multisegment:
    """``Σ_{i=start}^{h} [a+i, b+i]``; the shifted Speh multisegment when ``start = 0``."""
    a, b = frac(a), frac(b)
    return Multisegment.of(Segment(label, a + i, b + i) for i in range(start, h + 1))


def speh(label: CuspidalLabel, a, b, h: int) -> IrrRep:
    return IrrRep(speh_ladder(label, a, b, h))


@dataclass(frozen=True)
class QuasiSpehParams:
    label: CuspidalLabel
    u: int
    v: int
    w: int
    side: Side = Side.R
    shift: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "side", Side(self.side))
        object.__setattr__(self, "shift", frac(self.shift))
        if self.u < 1 or self.v < 1 or not 0 <= self.w <= self.u:
            raise ValueError("need u, v ≥ 1 and 0 ≤ w ≤ u")


def quasi_speh_multisegment(params: QuasiSpehParams) -> Multisegment:
    """The Speh ladder with its top row (right) or bottom row (left) shortened by ``w``."""
    p = params
    cu, cv = _center(p.u), _center(p.v)
    rows = []
    for j in range(p.v):
        a, b = -cu - cv + j, cu - cv + j
        if p.side is Side.R and j == p.v - 1:
            a += p.w
        elif p.side is Side.L and j == 0:
            b -= p.w
        if a <= b:
            rows.append(Segment(p.label, a + p.shift, b + p.shift))
    return Multisegment.of(rows)


@dataclass(frozen=True)
class SpehFactor:
    """``π_ρ(u, v)`` when ``alpha = 0``, else the complementary pair ``π_ρ(u, v)(alpha)``."""

    label: CuspidalLabel
    u: int
    v: int
    alpha: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", frac(self.alpha))
        if not self.label.unitary:
            raise ValueError(f"label {self.label.id} is not unitary")
        if self.u < 1 or self.v < 1:
            raise ValueError("u and v must be positive")
        if not 0 <= self.alpha < HALF:
            raise ValueError("alpha must lie in [0, 1/2)")

    @property
    def degree(self) -> int:
        return self.u * self.v * self.label.dim * (2 if self.alpha else 1)

    def multisegment(self) -> Multisegment:
        m = speh_multisegment(self.label, self.u, self.v)
        if not self.alpha:
            return m
        return m.twist(self.alpha) + m.twist(-self.alpha)

    def sort_key(self) -> tuple:
        return (-(self.u + self.v + self.alpha), -self.u, self.label.id, self.v, self.alpha)


@dataclass(frozen=True)
class UnitaryRep:
    factors: tuple[SpehFactor, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(sorted(self.factors, key=SpehFactor.sort_key)))

    @classmethod
    def of(cls, factors: Iterable[SpehFactor]) -> "UnitaryRep":
        return cls(tuple(factors))

    @property
    def degree(self) -> int:
        return sum(f.degree for f in self.factors)

    def to_multisegment(self) -> Multisegment:
        out = Multisegment.of(())
        for f in self.factors:
            out = out + f.multisegment()
        return out

    def irrep(self) -> IrrRep:
        return IrrRep(self.to_multisegment())


@dataclass(frozen=True)
class MatchCertificate:
    pairs_r1: frozenset[tuple[int, int]]
    pairs_r2: frozenset[tuple[int, int]]
    pairs_r3: frozenset[tuple[int, int]]
    leftover_i4: frozenset[int]
    leftover_j4: frozenset[int]


def match_rule(f: SpehFactor, g: SpehFactor) -> Optional[int]:
    """Which of the three pairing rules links ``f`` (on π) to ``g`` (on π'), if any."""
    if f.label != g.label or f.u != g.u:
        return None
    if g.v == f.v + 1 and g.alpha == f.alpha:
        return 1
    if g.v == f.v - 1 and g.alpha == f.alpha:
        return 2
    # β = 1/2 − α < 1/2 forces α > 0
    if g.v == f.v and f.alpha > 0 and g.alpha == HALF - f.alpha:
        return 3
    return None


def _certificate(pi: UnitaryRep, pi2: UnitaryRep, pairs: Iterable[tuple[int, int]]) -> MatchCertificate:
    by_rule: dict[int, set] = {1: set(), 2: set(), 3: set()}
    used_i, used_j = set(), set()
    for i, j in pairs:
        by_rule[match_rule(pi.factors[i], pi2.factors[j])].add((i, j))
        used_i.add(i)
        used_j.add(j)
    return MatchCertificate(
        frozenset(by_rule[1]),
        frozenset(by_rule[2]),
        frozenset(by_rule[3]),
        frozenset(i for i in range(len(pi.factors)) if i not in used_i),
        frozenset(j for j in range(len(pi2.factors)) if j not in used_j),
    )


def _check_labels(pi: UnitaryRep, pi2: UnitaryRep) -> None:
    for f in pi.factors + pi2.factors:
        if not f.label.unitary:
            raise ValueError(f"label {f.label.id} is not unitary")


def ggp_relevant_unitary(pi: UnitaryRep, pi2: UnitaryRep) -> Optional[MatchCertificate]:
    """A partition and bijections pairing the factors of ``pi`` and ``pi2``, or ``None``.

    Factors with ``v = 1`` may stay unpaired; all others must be paired.
    A maximum-weight matching, with each edge weighted by the number of its
    endpoints that must be paired, covers every such endpoint iff a valid
    pairing exists.
    """
    _check_labels(pi, pi2)
    must_i = {i for i, f in enumerate(pi.factors) if f.v != 1}
    must_j = {j for j, g in enumerate(pi2.factors) if g.v != 1}
    g = nx.Graph()
    for i, f in enumerate(pi.factors):
        for j, h in enumerate(pi2.factors):
            if match_rule(f, h) is not None:
                w = (i in must_i) + (j in must_j)
                g.add_edge(("i", i), ("j", j), weight=w)
    matching = nx.max_weight_matching(g) if g.number_of_edges() else set()
    pairs = []
    for x, y in matching:
        if x[0] == "j":
            x, y = y, x
        pairs.append((x[1], y[1]))
    covered_i = {i for i, _ in pairs}
    covered_j = {j for _, j in pairs}
    if not (must_i <= covered_i and must_j <= covered_j):
        return None
    # drop pairs between two optional factors; they are valid leftovers either way
    pairs = [(i, j) for i, j in pairs if i in must_i or j in must_j]
    return _certificate(pi, pi2, pairs)


def ggp_relevant_unitary_exhaustive(pi: UnitaryRep, pi2: UnitaryRep) -> Optional[MatchCertificate]:
    """Reference search over every assignment of π's factors; for small inputs only."""
    _check_labels(pi, pi2)
    r, l = len(pi.factors), len(pi2.factors)
    options = [
        [None] + [j for j in range(l) if match_rule(pi.factors[i], pi2.factors[j]) is not None]
        for i in range(r)
    ]
    for choice in product(*options):
        picked = [j for j in choice if j is not None]
        if len(picked) != len(set(picked)):
            continue
        if any(c is None and pi.factors[i].v != 1 for i, c in enumerate(choice)):
            continue
        if any(j not in picked and pi2.factors[j].v != 1 for j in range(l)):
            continue
        return _certificate(pi, pi2, [(i, j) for i, j in enumerate(choice) if j is not None])
    return None


def _residue(m: Multisegment, ladder: Multisegment) -> Optional[Multisegment]:
    if not m.contains(ladder):
        return None
    return m - ladder


def speh_branching_classify(pi: IrrRep, label: CuspidalLabel, a, b, h: int) -> bool:
    """Whether ``pi`` has a nonzero quotient onto ``Speh((a, b, h))`` by the closed-form classification."""
    a, b = frac(a), frac(b)
    k = label.dim
    n = _residue(pi.m.twist(HALF), speh_ladder(label, a, b, h, start=1))
    if n is None or n.abs_length != k * int(b - a + 1) + 1:
        return False
    if n.is_generic():
        return True
    if k != 1:
        return False
    for t in range(int(b - a) + 1):
        if n == Multisegment.of([Segment(label, a, a + t), Segment(label, a + t + 1, b + 1)]):
            return True
    return n == Multisegment.of([Segment(label, a + h, b + h), Segment(label, a + h + 1, a + h + 1)])


def speh_shifted_branching_classify(pi2: IrrRep, label: CuspidalLabel, a, b, h: int) -> bool:
    """Whether ``Speh((a, b, h))`` has a nonzero quotient onto ``pi2`` by the closed-form classification."""
    a, b = frac(a), frac(b)
    n = _residue(pi2.m.twist(-HALF), speh_ladder(label, a, b, h - 1))
    if n is None:
        return False
    return n.abs_length == label.dim * int(b - a + 1) - 1 and n.is_generic()


__all__ = [
    "MatchCertificate",
    "QuasiSpehParams",
    "SpehFactor",
    "UnitaryRep",
    "ggp_relevant_unitary",
    "ggp_relevant_unitary_exhaustive",
    "match_rule",
    "quasi_speh_multisegment",
    "speh",
    "speh_branching_classify",
    "speh_ladder",
    "speh_multisegment",
    "speh_shifted_branching_classify",
]
