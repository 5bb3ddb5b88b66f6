"""Exact data model: cuspidal labels, segments, multisegments, irreducibles.

Exponents are `fractions.Fraction` throughout. Internally a multisegment is
kept per cuspidal line: a line is a pair ``(label, residue)`` with
``0 <= residue < 1`` and every segment on it is stored as an integer pair
``(x, y)`` meaning ``[residue + x, residue + y]``. All combinatorial kernels
work on those integer pairs, which keeps them free of rational arithmetic.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Optional, Union

from . import kernels

RationalLike = Union[int, str, Fraction]
IntSeg = tuple[int, int]
IntLine = tuple[IntSeg, ...]


def frac(x: RationalLike) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class _Residue(Fraction):
    """An interned residue in ``[0, 1)`` with a precomputed hash; line keys hash constantly."""

    __slots__ = ("_hash",)

    def __hash__(self) -> int:
        return self._hash

    def __reduce__(self):
        return (_residue_of, (self.numerator, self.denominator))


_RESIDUES: dict[tuple[int, int], _Residue] = {}


def _residue_of(num: int, den: int) -> _Residue:
    r = _RESIDUES.get((num, den))
    if r is None:
        r = _Residue(num, den)
        r._hash = Fraction.__hash__(r)
        _RESIDUES[(num, den)] = r
    return r


@lru_cache(maxsize=1 << 16)
def split_exponent(x: Fraction) -> tuple[Fraction, int]:
    """Return ``(residue, offset)`` with ``x = residue + offset``, ``0 <= residue < 1``."""
    k = math.floor(x)
    r = x - k
    return _residue_of(r.numerator, r.denominator), k


@lru_cache(maxsize=1 << 12)
def shift_residue(r: Fraction, x: Fraction) -> tuple[Fraction, int]:
    """``split_exponent(r + x)``, memoized for the few residue/shift pairs in use."""
    return split_exponent(r + x)


@dataclass(frozen=True, order=True)
class CuspidalLabel:
    """An opaque supercuspidal representation of some GL_dim."""

    id: str
    dim: int = 1
    dual_id: Optional[str] = None
    unitary: bool = False

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValueError("label dimension must be positive")
        if self.dual_id is None:
            object.__setattr__(self, "dual_id", self.id)

    @property
    def dual(self) -> "CuspidalLabel":
        if self.dual_id == self.id:
            return self
        return CuspidalLabel(self.dual_id, self.dim, self.id, self.unitary)

    def __repr__(self) -> str:
        return self.id


LineKey = tuple[CuspidalLabel, Fraction]


def _line_sort_key(key: LineKey) -> tuple:
    return (key[0].id, key[0].dim, key[0].dual_id, key[0].unitary, key[1])


@dataclass(frozen=True)
class CuspidalPoint:
    label: CuspidalLabel
    exponent: Fraction

    def comparable(self, other: "CuspidalPoint") -> bool:
        return self.label == other.label and (self.exponent - other.exponent).denominator == 1

    def __repr__(self) -> str:
        return f"nu^{self.exponent}{self.label.id}"


@dataclass(frozen=True)
class Segment:
    """The segment ``[a, b]`` on the line of ``label``; ``b - a`` is a non-negative integer."""

    label: CuspidalLabel
    a: Fraction
    b: Fraction

    def __post_init__(self) -> None:
        a, b = frac(self.a), frac(self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        d = b - a
        if d.denominator != 1 or d < 0:
            raise ValueError("b - a must be a non-negative integer")

    @classmethod
    def of(cls, a: RationalLike, b: RationalLike, label: CuspidalLabel) -> "Segment":
        return cls(label, frac(a), frac(b))

    @property
    def length(self) -> int:
        return int(self.b - self.a) + 1

    @property
    def abs_length(self) -> int:
        return self.length * self.label.dim

    @property
    def line(self) -> LineKey:
        return (self.label, split_exponent(self.a)[0])

    def to_int(self) -> tuple[LineKey, IntSeg]:
        r, x = split_exponent(self.a)
        return (self.label, r), (x, x + self.length - 1)

    def points(self) -> list[CuspidalPoint]:
        return [CuspidalPoint(self.label, self.a + i) for i in range(self.length)]

    def twist(self, x: RationalLike) -> "Segment":
        x = frac(x)
        return Segment(self.label, self.a + x, self.b + x)

    def theta(self) -> "Segment":
        return Segment(self.label.dual, -self.b, -self.a)

    def sort_key(self) -> tuple:
        return (self.label.id, self.a, self.b)

    def __repr__(self) -> str:
        return f"[{self.a},{self.b}]@{self.label.id}"


def same_line(d1: Segment, d2: Segment) -> bool:
    return d1.label == d2.label and (d1.a - d2.a).denominator == 1


def linked(d1: Segment, d2: Segment) -> bool:
    if not same_line(d1, d2):
        return False
    a, b, a2, b2 = d1.a, d1.b, d2.a, d2.b
    return (a < a2 <= b + 1 < b2 + 1) or (a2 < a <= b2 + 1 < b + 1)


def precedes(d1: Segment, d2: Segment) -> bool:
    """``d1 ≺ d2``."""
    return linked(d1, d2) and d1.a < d2.a and d1.b < d2.b and d2.a <= d1.b + 1


def lt_L(d1: Segment, d2: Segment) -> bool:
    if not same_line(d1, d2):
        raise ValueError("incomparable")
    return (d1.a, d1.b) < (d2.a, d2.b)


def _freeze_lines(lines: dict[LineKey, list[IntSeg]]) -> tuple[tuple[LineKey, IntLine], ...]:
    items = [(k, tuple(sorted(v))) for k, v in lines.items() if v]
    items.sort(key=lambda kv: _line_sort_key(kv[0]))
    return tuple(items)


@dataclass(frozen=True)
class Multisegment:
    """A finite multiset of segments, stored line by line in canonical order."""

    lines: tuple[tuple[LineKey, IntLine], ...] = ()
    _hash: int = field(default=0, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_hash", hash(self.lines))

    def __hash__(self) -> int:
        return self._hash

    # -- construction -----------------------------------------------------
    @classmethod
    def from_lines(cls, lines: dict[LineKey, Iterable[IntSeg]]) -> "Multisegment":
        return cls(_freeze_lines({k: list(v) for k, v in lines.items()}))

    @classmethod
    def of(cls, segments: Iterable[Segment]) -> "Multisegment":
        acc: dict[LineKey, list[IntSeg]] = {}
        for s in segments:
            key, xy = s.to_int()
            acc.setdefault(key, []).append(xy)
        return cls(_freeze_lines(acc))

    @classmethod
    def simple(cls, label: CuspidalLabel, *pairs: tuple[RationalLike, RationalLike]) -> "Multisegment":
        """Shorthand: ``Multisegment.simple(R, (0, 3), (3, 6))``."""
        return cls.of(Segment.of(a, b, label) for a, b in pairs)

    # -- views ------------------------------------------------------------
    def line(self, key: LineKey) -> IntLine:
        for k, v in self.lines:
            if k == key:
                return v
        return ()

    def line_dict(self) -> dict[LineKey, IntLine]:
        return dict(self.lines)

    def with_line(self, key: LineKey, segs: Iterable[IntSeg]) -> "Multisegment":
        d = {k: list(v) for k, v in self.lines}
        d[key] = list(segs)
        return Multisegment(_freeze_lines(d))

    @cached_property
    def segments(self) -> tuple[Segment, ...]:
        out = []
        for (label, r), segs in self.lines:
            out.extend(Segment(label, r + x, r + y) for x, y in segs)
        out.sort(key=Segment.sort_key)
        return tuple(out)

    def __iter__(self) -> Iterator[Segment]:
        return iter(self.segments)

    def __len__(self) -> int:
        return sum(len(v) for _, v in self.lines)

    def __bool__(self) -> bool:
        return bool(self.lines)

    def __contains__(self, d: Segment) -> bool:
        key, xy = d.to_int()
        return xy in self.line(key)

    @property
    def abs_length(self) -> int:
        return sum(k[0].dim * (y - x + 1) for k, v in self.lines for x, y in v)

    # -- multiset arithmetic ------------------------------------------------
    def __add__(self, other: "Multisegment") -> "Multisegment":
        if not other:
            return self
        if not self:
            return other
        d = {k: list(v) for k, v in self.lines}
        for k, v in other.lines:
            d.setdefault(k, []).extend(v)
        return Multisegment(_freeze_lines(d))

    def __sub__(self, other: "Multisegment") -> "Multisegment":
        d = {k: Counter(v) for k, v in self.lines}
        for k, v in other.lines:
            c = d.get(k)
            for xy in v:
                if c is None or c[xy] == 0:
                    raise ValueError("subtrahend is not a sub-multisegment")
                c[xy] -= 1
        return Multisegment(_freeze_lines({k: list(c.elements()) for k, c in d.items()}))

    def contains(self, other: "Multisegment") -> bool:
        try:
            self - other
        except ValueError:
            return False
        return True

    # -- transformations ---------------------------------------------------
    def twist(self, x: RationalLike) -> "Multisegment":
        x = frac(x)
        if x == 0:
            return self
        d: dict[LineKey, list[IntSeg]] = {}
        for (label, r), segs in self.lines:
            r2, k = shift_residue(r, x)
            d.setdefault((label, r2), []).extend((a + k, b + k) for a, b in segs)
        return Multisegment(_freeze_lines(d))

    def theta(self) -> "Multisegment":
        d: dict[LineKey, list[IntSeg]] = {}
        for (label, r), segs in self.lines:
            c = 0 if r == 0 else 1
            d.setdefault((label.dual, shift_residue(-r, 1)[0]), []).extend((-b - c, -a - c) for a, b in segs)
        return Multisegment(_freeze_lines(d))

    def map_lines(self, fn) -> "Multisegment":
        """Apply ``fn(segs) -> segs`` to every line independently."""
        return Multisegment(_freeze_lines({k: list(fn(v)) for k, v in self.lines}))

    # -- combinatorial queries --------------------------------------------
    def csupp(self) -> Counter:
        c: Counter = Counter()
        for s in self.segments:
            c.update(s.points())
        return c

    def max_points(self) -> list[CuspidalPoint]:
        """Per-line maxima of the cuspidal support, in canonical line order."""
        return [CuspidalPoint(label, r + max(y for _, y in segs)) for (label, r), segs in self.lines]

    def min_points(self) -> list[CuspidalPoint]:
        return [CuspidalPoint(label, r + min(x for x, _ in segs)) for (label, r), segs in self.lines]

    def has_point(self, p: CuspidalPoint) -> bool:
        r, k = split_exponent(p.exponent)
        return any(x <= k <= y for x, y in self.line((p.label, r)))

    def restrict(self, d: Segment) -> "Multisegment":
        key, (a, b) = d.to_int()
        return Multisegment.from_lines({key: kernels.restrict(self.line(key), a, b)})

    def slice_start(self, x: RationalLike, label: CuspidalLabel) -> "Multisegment":
        r, k = split_exponent(frac(x))
        return Multisegment.from_lines({(label, r): [s for s in self.line((label, r)) if s[0] == k]})

    def slice_end(self, x: RationalLike, label: CuspidalLabel) -> "Multisegment":
        r, k = split_exponent(frac(x))
        return Multisegment.from_lines({(label, r): [s for s in self.line((label, r)) if s[1] == k]})

    def ascending(self) -> list[Segment]:
        """Linearization with ``Δ_j ⊀ Δ_i`` for ``i < j``: sort by (end, start, label)."""
        return sorted(self.segments, key=lambda s: (s.b, s.a, s.label.id))

    def is_generic(self) -> bool:
        return all(kernels.is_generic(v) for _, v in self.lines)

    def ul(self) -> "Multisegment":
        return self.map_lines(kernels.ul)

    def zelevinsky_dual(self) -> "Multisegment":
        return self.map_lines(kernels.mw_dual)

    def __repr__(self) -> str:
        return " + ".join(map(repr, self.segments)) if self else "0"


EMPTY = Multisegment()


def ascending_order(m: Multisegment) -> list[Segment]:
    return m.ascending()


def twist(m: Multisegment, x: RationalLike) -> Multisegment:
    return m.twist(x)


def theta(m: Multisegment) -> Multisegment:
    return m.theta()


def is_generic(m: Multisegment) -> bool:
    return m.is_generic()


def zelevinsky_involution(m: Multisegment) -> Multisegment:
    """``m^#`` with ``L(m) = Z(m^#)`` (Moeglin-Waldspurger algorithm, line by line)."""
    return m.zelevinsky_dual()


@dataclass(frozen=True)
class IrrRep:
    """An irreducible representation, always held as Langlands data ``L(m)``.

    The vanished derivative is ``None``, never an ``IrrRep``; ``IrrRep(EMPTY)``
    is the trivial representation of GL_0.
    """

    m: Multisegment

    @classmethod
    def L(cls, m: Multisegment) -> "IrrRep":
        return cls(m)

    @classmethod
    def Z(cls, m: Multisegment) -> "IrrRep":
        return cls(zelevinsky_involution(m))

    @property
    def zelevinsky_data(self) -> Multisegment:
        return zelevinsky_involution(self.m)

    @property
    def degree(self) -> int:
        return self.m.abs_length

    def twist(self, x: RationalLike) -> "IrrRep":
        return IrrRep(self.m.twist(x))

    def theta(self) -> "IrrRep":
        return IrrRep(self.m.theta())

    def is_generic(self) -> bool:
        return self.m.is_generic()

    def __repr__(self) -> str:
        return f"L({self.m!r})"


GL0 = IrrRep(EMPTY)
