"""Brute-force search for relevance witnesses on small instances.

The search tries every pair ``(m, n)`` with ``m`` inside the cuspidal support
of ``ν^{1/2}π`` and ``n`` inside that of ``π'`` (anything else makes a
derivative vanish), and checks both defining conditions directly.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .core import EMPTY, CuspidalLabel, IrrRep, Multisegment, Segment, frac, split_exponent
from .derivative import Side, derivative_left_segment, derivative_right_segment
from .rdli import strong_rdli

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class SearchBounds:
    max_total_abs_length: int
    exponent_window: tuple[Fraction, Fraction]
    labels: tuple[CuspidalLabel, ...]
    residues: tuple[Fraction, ...] = field(default=())

    def __post_init__(self) -> None:
        lo, hi = map(frac, self.exponent_window)
        object.__setattr__(self, "exponent_window", (lo, hi))
        object.__setattr__(self, "labels", tuple(self.labels))
        res = self.residues or tuple(sorted({split_exponent(lo)[0], split_exponent(hi)[0]}))
        object.__setattr__(self, "residues", tuple(sorted({split_exponent(frac(r))[0] for r in res})))

    def segments(self) -> list[Segment]:
        lo, hi = self.exponent_window
        out = []
        for label in self.labels:
            for r in self.residues:
                pts = []
                x = lo + (r - lo) % 1
                while x <= hi:
                    pts.append(x)
                    x += 1
                for i, a in enumerate(pts):
                    for b in pts[i:]:
                        out.append(Segment(label, a, b))
        out.sort(key=Segment.sort_key)
        return out


def _multisets(items: Sequence[Segment], budget: int, start: int = 0) -> Iterator[list[Segment]]:
    yield []
    for i in range(start, len(items)):
        s = items[i]
        if s.abs_length <= budget:
            for rest in _multisets(items, budget - s.abs_length, i):
                yield [s] + rest


def enumerate_multisegments(bounds: SearchBounds) -> Iterator[Multisegment]:
    """Every multisegment within the window of total absolute length ≤ budget."""
    for segs in _multisets(bounds.segments(), bounds.max_total_abs_length):
        yield Multisegment.of(segs)


def _support_segments(m: Multisegment) -> list[tuple]:
    """Every segment whose points all lie in the support of ``m``, keyed by ascending order."""
    out = []
    for key, segs in m.lines:
        pts = sorted({p for x, y in segs for p in range(x, y + 1)})
        for i, x in enumerate(pts):
            y = x
            while y in pts:
                out.append((key, x, y))
                y += 1
    return out


def _seg_key(item: tuple) -> tuple:
    (label, r), x, y = item
    return (r + y, r + x, label.id)


def derivative_table(pi: IrrRep, side: Side | str) -> dict[Multisegment, list[Multisegment]]:
    """Map every non-vanishing composite derivative of ``pi`` to the multisegments giving it.

    The multisegments are generated as ascending sequences, sharing prefixes:
    right derivatives apply the ascending sequence front to back, left ones
    back to front, so the search extends upward resp. downward.
    """
    side = Side(side)
    cands = sorted(_support_segments(pi.m), key=_seg_key)
    segs = [Segment(k[0], k[1] + x, k[1] + y) for k, x, y in cands]
    step = derivative_right_segment if side is Side.R else derivative_left_segment
    table: dict[Multisegment, list[Multisegment]] = defaultdict(list)

    def rec(cur: Multisegment, lo: int, hi: int, chosen: list[Segment]) -> None:
        table[cur].append(Multisegment.of(chosen))
        rng = range(lo, len(segs)) if side is Side.R else range(hi, -1, -1)
        for i in rng:
            nxt = step(cur, segs[i])
            if nxt is not None:
                chosen.append(segs[i])
                if side is Side.R:
                    rec(nxt, i, hi, chosen)
                else:
                    rec(nxt, lo, i, chosen)
                chosen.pop()

    rec(pi.m, 0, len(segs) - 1, [])
    return table


def brute_force_relevant(
    pi: IrrRep,
    pi2: IrrRep,
    bounds: Optional[SearchBounds] = None,
    tables: Optional[tuple[dict, dict]] = None,
) -> Optional[tuple[Multisegment, Multisegment]]:
    """A witness ``(m, n)`` of relevance, or ``None`` when none exists.

    With ``bounds`` given, witnesses are further restricted to segments inside
    the window and to the length budget. Precomputed derivative tables for
    ``ν^{1/2}π`` (right) and ``π'`` (left) may be passed in.
    """
    spi = pi.twist(HALF)
    right, left = tables if tables is not None else (derivative_table(spi, Side.R), derivative_table(pi2, Side.L))
    allowed = set(bounds.segments()) if bounds is not None else None

    def ok(m: Multisegment) -> bool:
        if allowed is None:
            return True
        return m.abs_length <= bounds.max_total_abs_length and all(s in allowed for s in m)

    for tau in sorted(set(right) & set(left), key=lambda t: -t.abs_length):
        ns = [n for n in left[tau] if ok(n)]
        for m in right[tau]:
            if not ok(m):
                continue
            for n in ns:
                if strong_rdli(m, n, spi).commutes:
                    return m, n
    return None


def is_relevant_brute(pi: IrrRep, pi2: IrrRep) -> bool:
    return brute_force_relevant(pi, pi2) is not None


def line_representations(label: CuspidalLabel, lo, hi, residue, max_abs_length: int) -> list[IrrRep]:
    """All irreducibles supported on one line inside a window, up to a length budget."""
    b = SearchBounds(max_abs_length, (frac(lo), frac(hi)), (label,), (frac(residue),))
    return [IrrRep(m) for m in enumerate_multisegments(b)]


__all__ = [
    "EMPTY",
    "SearchBounds",
    "brute_force_relevant",
    "derivative_table",
    "enumerate_multisegments",
    "is_relevant_brute",
    "line_representations",
]
