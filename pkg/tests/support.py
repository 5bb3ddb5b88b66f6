"""Shared enumerators and helpers for the test suite."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterator

from glbranch.core import CuspidalLabel, IrrRep, Multisegment, Segment
from glbranch.oracle import _multisets
from glbranch.unitary import SpehFactor, UnitaryRep

HALF = Fraction(1, 2)

# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE: list[str] = []

R = CuspidalLabel("R")
S2 = CuspidalLabel("S", dim=2)
T = CuspidalLabel("T")
U = CuspidalLabel("U", unitary=True)


def seg(a, b, label: CuspidalLabel = R) -> Segment:
    return Segment(label, Fraction(a), Fraction(b))


def ms(*pairs, label: CuspidalLabel = R) -> Multisegment:
    return Multisegment.of(seg(a, b, label) for a, b in pairs)


def L(*pairs, label: CuspidalLabel = R) -> IrrRep:
    return IrrRep(ms(*pairs, label=label))


def window_segments(label: CuspidalLabel, lo, hi) -> list[Segment]:
    lo, hi = Fraction(lo), Fraction(hi)
    pts = [lo + i for i in range(int(hi - lo) + 1)]
    return [Segment(label, p, q) for i, p in enumerate(pts) for q in pts[i:]]


def exact_size(segs: list[Segment], size: int) -> Iterator[Multisegment]:
    """Multisegments from ``segs`` of total absolute length exactly ``size``."""
    for chosen in _multisets(segs, size):
        if sum(s.abs_length for s in chosen) == size:
            yield Multisegment.of(chosen)


def speh_window(a, b, h: int) -> tuple[Fraction, Fraction]:
    """The Speh support widened by one lattice point on each side."""
    return Fraction(a) - 1, Fraction(b) + h + 1


def branching_candidates(label: CuspidalLabel, a, b, h: int, shift: Fraction) -> Iterator[IrrRep]:
    """Every rep ``x`` with ``ν^{shift} x`` supported in the widened Speh window.

    Sizes: one more than the Speh when ``shift = 1/2``, one less when
    ``shift = -1/2``. Odd sizes over a dim-2 label take one extra point on
    the dim-1 label ``T`` (at the window's low end).
    """
    k = label.dim
    n = k * (int(b - a) + 1) * (h + 1)
    size = n + 1 if shift > 0 else n - 1
    lo, hi = speh_window(a, b, h)
    segs = window_segments(label, lo - shift, hi - shift)
    aux = Multisegment()
    if size % k:
        aux = Multisegment.of([Segment(T, lo - shift, lo - shift)])
        size -= 1
    for m in exact_size(segs, size):
        yield IrrRep(m + aux)


def trivial_target_form(m: Multisegment, a: Fraction, n: int) -> bool:
    """Expected verdict against the trivial rep of GL_n, from the two points beyond the ladder."""
    segs = list(m)
    if len(segs) == 1:
        s = segs[0]
        return (s.label.dim == 2 and s.a == s.b) or (s.label.dim == 1 and s.b == s.a + 1)
    x, y = sorted(segs, key=lambda s: (s.label.id, s.a))
    if x.label != y.label or (y.a - x.a).denominator != 1 or abs(y.a - x.a) != 1:
        return True
    low = x.a if x.a < y.a else y.a
    return low in (a, a + n - 1)


def unitary_types(label: CuspidalLabel, alphas) -> list[SpehFactor]:
    return [SpehFactor(label, u, v, al) for u in (1, 2, 3) for v in (1, 2, 3) for al in alphas]


def unitary_reps(types: list[SpehFactor], max_factors: int, min_factors: int = 0) -> list[UnitaryRep]:
    return [
        UnitaryRep.of(c)
        for r in range(min_factors, max_factors + 1)
        for c in combinations_with_replacement(types, r)
    ]


# -- hypothesis strategies -----------------------------------------------------
from hypothesis import strategies as st  # noqa: E402


@st.composite
def segments(draw, labels=(R,), lo: int = -3, hi: int = 4, max_len: int = 4, half: bool = True) -> Segment:
    label = draw(st.sampled_from(labels))
    shift = draw(st.sampled_from((Fraction(0), HALF))) if half else Fraction(0)
    a = draw(st.integers(lo, hi))
    n = draw(st.integers(0, max_len - 1))
    return Segment(label, a + shift, a + n + shift)


@st.composite
def multisegments(draw, labels=(R,), max_size: int = 5, **kw) -> Multisegment:
    return Multisegment.of(draw(st.lists(segments(labels, **kw), max_size=max_size)))


@st.composite
def one_line(draw, label: CuspidalLabel = R, max_size: int = 5, lo: int = -3, hi: int = 4, max_len: int = 4) -> Multisegment:
    """Multisegments on a single cuspidal line (integer exponents)."""
    return draw(multisegments((label,), max_size, lo=lo, hi=hi, max_len=max_len, half=False))


def generic_only(strategy):
    return strategy.filter(lambda m: m.is_generic())


# -- independent reference implementations -----------------------------------
def mw_reference(m: Multisegment) -> Multisegment:
    """Textbook Moeglin-Waldspurger algorithm on Segment objects, line by line."""
    out: list[Segment] = []
    by_line: dict = {}
    for s in m:
        by_line.setdefault(s.line, []).append([s.a, s.b, s.label])
    for pool in by_line.values():
        while pool:
            e = max(p[1] for p in pool)
            chain = []
            cur = min((p for p in pool if p[1] == e), key=lambda p: p[1] - p[0])
            chain.append(cur)
            while True:
                nxt = [p for p in pool if p[1] == chain[-1][1] - 1 and p[0] < chain[-1][0]]
                if not nxt:
                    break
                chain.append(min(nxt, key=lambda p: p[1] - p[0]))
            out.append(Segment(cur[2], e - len(chain) + 1, e))
            for p in chain:
                p[1] -= 1
            pool[:] = [p for p in pool if p[0] <= p[1]]
    return Multisegment.of(out)


def ul_reference(m: Multisegment, order) -> Multisegment:
    """Intersection-union on linked pairs, picked in the order given by ``order(pairs)``."""
    segs = list(m)
    while True:
        pairs = [(i, j) for i in range(len(segs)) for j in range(len(segs)) if i != j and precedes_(segs[i], segs[j])]
        if not pairs:
            return Multisegment.of(segs)
        i, j = order(pairs)
        s, t = segs[i], segs[j]
        union = Segment(s.label, s.a, t.b)
        rest = [segs[k] for k in range(len(segs)) if k not in (i, j)]
        rest.append(union)
        if t.a <= s.b:
            rest.append(Segment(s.label, t.a, s.b))
        segs = rest


def precedes_(s: Segment, t: Segment) -> bool:
    return s.label == t.label and (t.a - s.a).denominator == 1 and s.a < t.a <= s.b + 1 <= t.b
