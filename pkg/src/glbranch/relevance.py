"""Deciding generalized GGP relevance, with witnesses and an audit trace."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional

from . import kernels
from .core import EMPTY, IrrRep, Multisegment, shift_residue
from .derivative import (
    Side,
    _hd_left_line,
    _hd_right_line,
    _hd_slice,
    derivative_multi,
    highest_derivative_multi,
    removal_multi,
)
from .integral import integral_multi
from .rdli import strong_rdli

HALF = Fraction(1, 2)
STRICT = True


class ReductionStalled(RuntimeError):
    """The forward phase found no applicable step on a non-generic pair."""

    def __init__(self, message: str, pair: tuple[IrrRep, IrrRep]):
        super().__init__(message)
        self.pair = pair


class StepKind(str, Enum):
    REDUCE_RIGHT = "ReduceRight"
    REDUCE_LEFT = "ReduceLeft"
    INTERCHANGE = "Interchange"


@dataclass(frozen=True)
class TraceStep:
    kind: StepKind
    removed: Multisegment
    pair_after: tuple[IrrRep, IrrRep]


@dataclass(frozen=True)
class GenericWitness:
    p: Multisegment
    q: Multisegment
    t: Multisegment


@dataclass
class RelevanceCertificate:
    relevant: bool
    p: Optional[Multisegment] = None
    q: Optional[Multisegment] = None
    trace: list[TraceStep] = field(default_factory=list)
    failed_step: Optional[int] = None


def generic_witness(m: Multisegment, n: Multisegment) -> GenericWitness:
    """Witness ``(p, q, t)`` with ``D^R_p(L(m)) = L(t) = D^L_q(L(n))`` for generic ``m``, ``n``."""
    if not (m.is_generic() and n.is_generic()):
        raise ValueError("generic_witness needs generic multisegments")
    p, q, t = {}, {}, {}
    nd = n.line_dict()
    for key, segs in m.lines:
        p[key], q[key], t[key] = kernels.generic_witness(segs, nd.pop(key, ()))
    for key, segs in nd.items():
        q[key] = segs
    return GenericWitness(Multisegment.from_lines(p), Multisegment.from_lines(q), Multisegment.from_lines(t))


def certify(pi: IrrRep, pi2: IrrRep, p: Multisegment, q: Multisegment) -> bool:
    """Check the two defining conditions of relevance for the witness ``(p, q)``."""
    spi = pi.twist(HALF)
    left = derivative_multi(spi, p, Side.R)
    if left is None or left != derivative_multi(pi2, q, Side.L):
        return False
    return strong_rdli(p, q, spi).commutes


def interchange_witness(pi: IrrRep, pi2: IrrRep, m: Multisegment, n: Multisegment) -> tuple[Multisegment, Multisegment]:
    """Witnesses for ``(pi2, pi)`` from Rd/Ld-minimal witnesses ``(m, n)`` of ``(pi, pi2)``."""
    # both integrals below are the same representation X with D^L_n(X) = ν^{1/2}π
    # and D^R_m(X) = π'; the right removal uses hd^R(X), the left one hd^L(X)
    hd_r = highest_derivative_multi(integral_multi(pi.twist(HALF), n, Side.L), Side.R)
    hd_l = highest_derivative_multi(integral_multi(pi2, m, Side.R), Side.L)
    p = removal_multi(m, hd_r, Side.R).twist(HALF)
    q = removal_multi(n, hd_l, Side.L).twist(-HALF)
    return p, q


def _right_candidate(pi: IrrRep, pi2: IrrRep, strict: bool) -> Optional[tuple]:
    """A line of ``pi`` whose top point ``ρ`` qualifies for a right reduction, with that point."""
    for (label, r), segs in pi.m.lines:
        top = max(y for _, y in segs)
        r2, k = shift_residue(r, HALF)
        k += top
        other = pi2.m.line((label, r2))
        if strict:
            ok = all(y < k for _, y in other)
        else:
            ok = not any(x <= k <= y for x, y in other)
        if ok:
            return (label, r), top
    return None


def _left_candidate(pi: IrrRep, pi2: IrrRep, strict: bool) -> Optional[tuple]:
    """A line of ``pi2`` whose bottom point ``ρ'`` qualifies for a left reduction, with that point."""
    for (label, r), segs in pi2.m.lines:
        bottom = min(x for x, _ in segs)
        r2, k = shift_residue(r, -HALF)
        k += bottom
        other = pi.m.line((label, r2))
        if strict:
            ok = all(x > k for x, _ in other)
        else:
            ok = not any(x <= k <= y for x, y in other)
        if ok:
            return (label, r), bottom
    return None


def reduce_forward(pi: IrrRep, pi2: IrrRep, strict: bool = STRICT) -> tuple[list[tuple[IrrRep, IrrRep]], list[TraceStep]]:
    """Forward phase: reduce or interchange until both members are generic."""
    pairs = [(pi, pi2)]
    steps: list[TraceStep] = []
    budget = pi.degree + pi2.degree + 2
    while True:
        a, b = pairs[-1]
        if a.is_generic() and b.is_generic():
            return pairs, steps
        cand = _right_candidate(a, b, strict)
        if cand is not None:
            key, top = cand
            me = _hd_slice(a.m, key, top, 1, _hd_right_line)
            if not me:
                raise ReductionStalled(f"empty right reduction datum at {key[0].id}, {key[1] + top}", (a, b))
            a2 = derivative_multi(a, me, Side.R)
            assert a2 is not None
            step = TraceStep(StepKind.REDUCE_RIGHT, me, (a2, b))
        else:
            cand = _left_candidate(a, b, strict)
            if cand is not None:
                key, bottom = cand
                ms = _hd_slice(b.m, key, bottom, 0, _hd_left_line)
                if not ms:
                    raise ReductionStalled(f"empty left reduction datum at {key[0].id}, {key[1] + bottom}", (a, b))
                b2 = derivative_multi(b, ms, Side.L)
                assert b2 is not None
                step = TraceStep(StepKind.REDUCE_LEFT, ms, (a, b2))
            else:
                if steps and steps[-1].kind is StepKind.INTERCHANGE:
                    raise ReductionStalled("two consecutive interchanges", (a, b))
                step = TraceStep(StepKind.INTERCHANGE, EMPTY, (b, a))
        steps.append(step)
        pairs.append(step.pair_after)
        budget -= step.kind is not StepKind.INTERCHANGE
        if budget < 0:
            raise ReductionStalled("forward phase exceeded its length budget", step.pair_after)


def decide_relevant(pi: IrrRep, pi2: IrrRep, strict: bool = STRICT) -> RelevanceCertificate:
    """Decide whether ``(pi, pi2)`` is a generalized GGP relevant pair."""
    pairs, steps = reduce_forward(pi, pi2, strict)
    a, b = pairs[-1]
    w = generic_witness(a.m.twist(HALF), b.m)
    m, n = w.p, w.q
    for k in range(len(steps) - 1, -1, -1):
        step = steps[k]
        a, b = pairs[k]
        if step.kind is StepKind.REDUCE_RIGHT:
            cand = m + step.removed.twist(HALF)
            if derivative_multi(a.twist(HALF), cand, Side.R) is None:
                return RelevanceCertificate(False, trace=steps, failed_step=k)
            m = cand
        elif step.kind is StepKind.REDUCE_LEFT:
            cand = n + step.removed
            if derivative_multi(b, cand, Side.L) is None:
                return RelevanceCertificate(False, trace=steps, failed_step=k)
            n = cand
        else:
            m, n = interchange_witness(b, a, m, n)
    return RelevanceCertificate(True, m, n, trace=steps)
