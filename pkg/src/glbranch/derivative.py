"""Derivatives of irreducibles in the Langlands classification.

Right derivatives run the upward-sequence algorithm line by line; left
derivatives are the Θ-conjugates. A vanishing derivative is ``None``.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache
from typing import Optional

from . import kernels
from .core import EMPTY, CuspidalLabel, IrrRep, IntLine, Multisegment, Segment, frac, split_exponent

CACHE_SIZE = 1 << 18


class Side(str, Enum):
    R = "R"
    L = "L"


@lru_cache(maxsize=CACHE_SIZE)
def _der_right_line(segs: IntLine, a: int, b: int) -> Optional[IntLine]:
    return kernels.derivative_right(segs, a, b)


@lru_cache(maxsize=CACHE_SIZE)
def _der_left_line(segs: IntLine, a: int, b: int) -> Optional[IntLine]:
    out = kernels.derivative_right(kernels.neg(segs), -b, -a)
    return None if out is None else kernels.neg(out)


def _single_line_only(n: Multisegment) -> IntLine:
    if len(n.lines) > 1:
        raise ValueError("segments on more than one cuspidal line")
    return n.lines[0][1] if n.lines else ()


def upward_sequence(n: Multisegment) -> list[Segment]:
    segs = _single_line_only(n)
    if not segs:
        return []
    (label, r), _ = n.lines[0]
    return [Segment(label, r + x, r + y) for x, y in kernels.upward_sequence(segs)]


def derivative_right_segment(m: Multisegment, d: Segment) -> Optional[Multisegment]:
    """``D^R_d`` on Langlands data, or ``None`` when it vanishes."""
    key, (a, b) = d.to_int()
    out = _der_right_line(m.line(key), a, b)
    return None if out is None else m.with_line(key, out)


def derivative_left_segment(m: Multisegment, d: Segment) -> Optional[Multisegment]:
    """``D^L_d = Θ ∘ D^R_{θ(d)} ∘ Θ``; computed on the line by reflection."""
    key, (a, b) = d.to_int()
    out = _der_left_line(m.line(key), a, b)
    return None if out is None else m.with_line(key, out)


def _end_order(segs: IntLine) -> list:
    """Ascending order restricted to one line: by end, then start."""
    return sorted(segs, key=lambda s: (s[1], s[0]))


def derivative_multi(pi: IrrRep, m: Multisegment, side: Side | str = Side.R) -> Optional[IrrRep]:
    """Composite derivative over ``m`` in ascending order.

    Right: ``Δ_1`` is applied first. Left: ``Δ_r`` is applied first. Lines do
    not interact, so the sequence is run line by line.
    """
    left = Side(side) is Side.L
    step = _der_left_line if left else _der_right_line
    lines = pi.m.line_dict()
    for key, segs in m.lines:
        seq = _end_order(segs)
        if left:
            seq.reverse()
        cur = lines.get(key, ())
        for a, b in seq:
            cur = step(cur, a, b)
            if cur is None:
                return None
        lines[key] = cur
    return IrrRep(Multisegment.from_lines(lines))


def epsilon(pi: IrrRep, d: Segment, side: Side | str = Side.R) -> int:
    step = derivative_right_segment if Side(side) is Side.R else derivative_left_segment
    k, cur = 0, step(pi.m, d)
    while cur is not None:
        k += 1
        cur = step(cur, d)
    return k


def epsilon_right(pi: IrrRep, d: Segment) -> int:
    return epsilon(pi, d, Side.R)


def eta(pi: IrrRep, d: Segment) -> tuple[int, ...]:
    """``(ε^R_{[a,b]}, ε^R_{[a+1,b]}, …, ε^R_{[b,b]})``."""
    return tuple(
        epsilon_right(pi, Segment(d.label, d.a + i, d.b)) for i in range(d.length)
    )


def highest_derivative_multi(pi: IrrRep, side: Side | str = Side.R) -> Multisegment:
    """The minimal multisegment realizing the highest derivative of ``pi``."""
    return pi.m.map_lines(_hd_left_line if Side(side) is Side.L else _hd_right_line)


@lru_cache(maxsize=CACHE_SIZE)
def _hd_right_line(segs: IntLine) -> IntLine:
    return kernels.hd_right_z(kernels.mw_dual(segs))


@lru_cache(maxsize=CACHE_SIZE)
def _hd_left_line(segs: IntLine) -> IntLine:
    # Θ-conjugate; the translation part of Θ commutes with the line algorithm
    return kernels.neg(_hd_right_line(kernels.neg(segs)))


def highest_derivative(pi: IrrRep, side: Side | str = Side.R) -> IrrRep:
    out = derivative_multi(pi, highest_derivative_multi(pi, side), side)
    assert out is not None
    return out


def removal(d: Segment, m: Multisegment, side: Side | str = Side.R) -> Multisegment:
    """Removal process ``r^R(d, m)``; the left version is the Θ-conjugate."""
    if Side(side) is Side.L:
        return removal(d.theta(), m.theta(), Side.R).theta()
    key, (a, b) = d.to_int()
    return m.with_line(key, kernels.removal_right(m.line(key), a, b))


def removal_multi(n: Multisegment, m: Multisegment, side: Side | str = Side.R) -> Multisegment:
    """``r(n, m)``: fold the removal over ``n`` in ascending order, ``Δ_1`` first."""
    if Side(side) is Side.L:
        return removal_multi(n.theta(), m.theta(), Side.R).theta()
    lines = m.line_dict()
    for key, segs in n.lines:
        cur = lines.get(key, ())
        for a, b in _end_order(segs):
            cur = kernels.removal_right(cur, a, b)
        lines[key] = cur
    return Multisegment.from_lines(lines)


def reduction_data_right(pi: IrrRep, label: CuspidalLabel, exponent) -> Multisegment:
    """``m^e_ρ(π)``: segments of ``hd^R(π)`` ending at the given point."""
    r, k = split_exponent(frac(exponent))
    return _hd_slice(pi.m, (label, r), k, 1, _hd_right_line)


def reduction_data_left(pi: IrrRep, label: CuspidalLabel, exponent) -> Multisegment:
    """``m^s_ρ(π)``: segments of ``hd^L(π)`` starting at the given point."""
    r, k = split_exponent(frac(exponent))
    return _hd_slice(pi.m, (label, r), k, 0, _hd_left_line)


def _hd_slice(m: Multisegment, key, k: int, end: int, hd) -> Multisegment:
    return Multisegment.from_lines({key: [s for s in hd(m.line(key)) if s[end] == k]})


__all__ = [
    "EMPTY",
    "Side",
    "derivative_left_segment",
    "derivative_multi",
    "derivative_right_segment",
    "epsilon",
    "epsilon_right",
    "eta",
    "highest_derivative",
    "highest_derivative_multi",
    "reduction_data_left",
    "reduction_data_right",
    "removal",
    "removal_multi",
    "upward_sequence",
]
