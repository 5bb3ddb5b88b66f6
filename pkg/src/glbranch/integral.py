"""Integrals (socles of products with a Steinberg) and UL normalization."""

from __future__ import annotations

from functools import lru_cache

from . import kernels
from .core import IntLine, IrrRep, Multisegment, Segment
from .derivative import CACHE_SIZE, Side


@lru_cache(maxsize=CACHE_SIZE)
def _int_right_line(segs: IntLine, a: int, b: int) -> IntLine:
    return kernels.integral_right(segs, a, b)


@lru_cache(maxsize=CACHE_SIZE)
def _int_left_line(segs: IntLine, a: int, b: int) -> IntLine:
    return kernels.neg(kernels.integral_right(kernels.neg(segs), -b, -a))


def downward_sequence(n: Multisegment) -> list[Segment]:
    if len(n.lines) > 1:
        raise ValueError("segments on more than one cuspidal line")
    if not n:
        return []
    (label, r), segs = n.lines[0]
    return [Segment(label, r + x, r + y) for x, y in kernels.downward_sequence(segs)]


def integral_right_segment(m: Multisegment, d: Segment) -> Multisegment:
    key, (a, b) = d.to_int()
    return m.with_line(key, _int_right_line(m.line(key), a, b))


def integral_left_segment(m: Multisegment, d: Segment) -> Multisegment:
    """``I^L_d = Θ ∘ I^R_{θ(d)} ∘ Θ``; computed on the line by reflection."""
    key, (a, b) = d.to_int()
    return m.with_line(key, _int_left_line(m.line(key), a, b))


def integral_multi(pi: IrrRep, m: Multisegment, side: Side | str = Side.R) -> IrrRep:
    """Composite integral over ``m`` in ascending order, line by line.

    Left: ``Δ_1`` is applied first. Right: ``Δ_r`` is applied first.
    """
    left = Side(side) is Side.L
    step = _int_left_line if left else _int_right_line
    lines = pi.m.line_dict()
    for key, segs in m.lines:
        seq = sorted(segs, key=lambda s: (s[1], s[0]))
        if not left:
            seq.reverse()
        cur = lines.get(key, ())
        for a, b in seq:
            cur = step(cur, a, b)
        lines[key] = cur
    return IrrRep(Multisegment.from_lines(lines))


def ul(m: Multisegment) -> Multisegment:
    return m.ul()


def is_minimal(m: Multisegment) -> bool:
    """Minimal for the intersection-union order iff ``m = UL(m)``."""
    return m.ul() == m
