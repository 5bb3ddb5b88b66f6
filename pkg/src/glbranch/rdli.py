"""Right-derivative / left-integral commutativity of triples."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import IrrRep, Multisegment, Segment, same_line
from .derivative import derivative_right_segment, eta
from .integral import integral_left_segment


@dataclass(frozen=True)
class TripleVerdict:
    commutes: bool
    via_fast_path: bool = False
    failing_pair: Optional[tuple[int, int]] = None


def comb_rdli(d: Segment, d2: Segment, pi: IrrRep) -> bool:
    """``D^R_d(π) ≠ 0`` and ``η_d(I^L_{d2}(π)) = η_d(π)``."""
    if derivative_right_segment(pi.m, d) is None:
        return False
    return eta(IrrRep(integral_left_segment(pi.m, d2)), d) == eta(pi, d)


def commutes_for_all(d: Segment, d2: Segment) -> bool:
    """Sufficient condition: disjoint supports, ``s(d2) < s(d)`` or ``e(d2) < e(d)``.

    When it holds, ``(d, d2, π)`` commutes for every ``π`` with ``D^R_d(π) ≠ 0``.
    """
    if not same_line(d, d2) or d.b < d2.a or d2.b < d.a:
        return True
    return d2.a < d.a or d2.b < d.b


def strong_rdli(m: Multisegment, n: Multisegment, pi: IrrRep, fast: bool = True) -> TripleVerdict:
    """Check every triple ``(Δ_{i+1}, Δ'_{j+1}, I^L_{n_j} D^R_{m_i}(π))``."""
    ms, ns = m.ascending(), n.ascending()
    # D^R_{m_i}(π) for every prefix
    prefixes = [pi.m]
    for i, d in enumerate(ms):
        nxt = derivative_right_segment(prefixes[-1], d)
        if nxt is None:
            # the triple at (i, 0) already fails its first clause
            return TripleVerdict(False, False, (i, 0) if ns else None) if ns else TripleVerdict(False)
        prefixes.append(nxt)
    if not ns:
        return TripleVerdict(True)
    if fast and all(commutes_for_all(d, d2) for d in ms for d2 in ns):
        return TripleVerdict(True, True)
    for i, d in enumerate(ms):
        cur = prefixes[i]
        for j, d2 in enumerate(ns):
            if not comb_rdli(d, d2, IrrRep(cur)):
                return TripleVerdict(False, False, (i, j))
            cur = integral_left_segment(cur, d2)
    return TripleVerdict(True)
