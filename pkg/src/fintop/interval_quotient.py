"""Quotients of [0, 1] onto finite COTS and the multifunctions they induce.

Cutting [0, 1] at ``0 = t0 < t1 < ... < tk = 1`` and collapsing every cut
point and every open gap between cuts gives a finite space of ``2k + 1``
points: gaps are open points, and a cut point's smallest neighborhood is
itself plus its adjacent gaps.  For a continuous piecewise-linear
``f: [0, 1] -> [0, 1]`` the induced multifunction sends a point ``y`` to the
set of points whose fibers meet ``f(fiber(y))``.

All arithmetic is exact (:class:`fractions.Fraction`); whether an endpoint is
attained decides the value sets, so floats are never used.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from . import bits
from .bits import PointSet
from .errors import FinTopError, InvalidPiecewiseLinear, OutOfDomain
from .maps import Multifunction
from .space import Space, default_labels, space_from_minbase

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class Interval(NamedTuple):
    lo: Fraction
    hi: Fraction
    lo_closed: bool
    hi_closed: bool

    @classmethod
    def point(cls, x) -> "Interval":
        x = Fraction(x)
        return cls(x, x, True, True)

    @classmethod
    def open(cls, lo, hi) -> "Interval":
        return cls(Fraction(lo), Fraction(hi), False, False)

    @classmethod
    def closed(cls, lo, hi) -> "Interval":
        return cls(Fraction(lo), Fraction(hi), True, True)

    def is_empty(self) -> bool:
        if self.lo < self.hi:
            return False
        return not (self.lo == self.hi and self.lo_closed and self.hi_closed)

    def is_point(self) -> bool:
        return self.lo == self.hi and not self.is_empty()

    def contains(self, x) -> bool:
        if x < self.lo or x > self.hi:
            return False
        if x == self.lo and not self.lo_closed:
            return False
        if x == self.hi and not self.hi_closed:
            return False
        return True

    def intersect(self, other: "Interval") -> "Interval":
        if self.lo > other.lo:
            lo, lo_c = self.lo, self.lo_closed
        elif other.lo > self.lo:
            lo, lo_c = other.lo, other.lo_closed
        else:
            lo, lo_c = self.lo, self.lo_closed and other.lo_closed
        if self.hi < other.hi:
            hi, hi_c = self.hi, self.hi_closed
        elif other.hi < self.hi:
            hi, hi_c = other.hi, other.hi_closed
        else:
            hi, hi_c = self.hi, self.hi_closed and other.hi_closed
        return Interval(lo, hi, lo_c, hi_c)

    def __str__(self):
        if self.is_point():
            return "{" + str(self.lo) + "}"
        return f"{'[' if self.lo_closed else '('}{self.lo}, {self.hi}{']' if self.hi_closed else ')'}"


class RationalIntervalSet:
    """Finite union of rational intervals, kept sorted and merged.

    Isolated points are stored as degenerate closed intervals.
    """

    def __init__(self, parts: Iterable[Interval] = ()):
        self.parts = self._normalize(parts)

    @staticmethod
    def _normalize(parts: Iterable[Interval]) -> tuple[Interval, ...]:
        items = sorted((p for p in parts if not p.is_empty()), key=lambda p: (p.lo, not p.lo_closed))
        out: list[Interval] = []
        for p in items:
            if out:
                cur = out[-1]
                touching = p.lo < cur.hi or (p.lo == cur.hi and (cur.hi_closed or p.lo_closed))
                if touching:
                    if p.hi > cur.hi:
                        hi, hi_c = p.hi, p.hi_closed
                    elif p.hi < cur.hi:
                        hi, hi_c = cur.hi, cur.hi_closed
                    else:
                        hi, hi_c = cur.hi, cur.hi_closed or p.hi_closed
                    lo_c = cur.lo_closed or (p.lo == cur.lo and p.lo_closed)
                    out[-1] = Interval(cur.lo, hi, lo_c, hi_c)
                    continue
            out.append(p)
        return tuple(out)

    def __or__(self, other: "RationalIntervalSet") -> "RationalIntervalSet":
        return RationalIntervalSet(self.parts + other.parts)

    def __bool__(self):
        return bool(self.parts)

    def __eq__(self, other):
        if not isinstance(other, RationalIntervalSet):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def contains(self, x) -> bool:
        return any(p.contains(x) for p in self.parts)

    def meets(self, iv: Interval) -> bool:
        return any(not p.intersect(iv).is_empty() for p in self.parts)

    def __str__(self):
        return " u ".join(str(p) for p in self.parts) if self.parts else "{}"

    def __repr__(self):
        return f"RationalIntervalSet({self})"


@dataclass(frozen=True)
class PiecewiseLinear:
    """Continuous piecewise-linear self-map of [0, 1].

    The map interpolates linearly between ``(breakpoints[i], values[i])``.
    """

    breakpoints: tuple[Fraction, ...]
    values: tuple[Fraction, ...]

    def __post_init__(self):
        xs = tuple(Fraction(x) for x in self.breakpoints)
        ys = tuple(Fraction(y) for y in self.values)
        object.__setattr__(self, "breakpoints", xs)
        object.__setattr__(self, "values", ys)
        if len(xs) != len(ys) or len(xs) < 2:
            raise InvalidPiecewiseLinear("need at least two breakpoints, each with one value")
        if xs[0] != 0 or xs[-1] != 1:
            raise InvalidPiecewiseLinear("breakpoints must start at 0 and end at 1")
        if any(a >= b for a, b in zip(xs, xs[1:])):
            raise InvalidPiecewiseLinear("breakpoints must be strictly increasing")
        if any(not 0 <= y <= 1 for y in ys):
            raise InvalidPiecewiseLinear("values must lie in [0, 1]")

    @classmethod
    def from_pairs(cls, pairs: Sequence[tuple]) -> "PiecewiseLinear":
        return cls(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))

    def __call__(self, x) -> Fraction:
        return evaluate(self, x)


def evaluate(f: PiecewiseLinear, x) -> Fraction:
    x = Fraction(x)
    if not 0 <= x <= 1:
        raise OutOfDomain(x)
    xs, ys = f.breakpoints, f.values
    for i in range(len(xs) - 1):
        if xs[i] <= x <= xs[i + 1]:
            t = (x - xs[i]) / (xs[i + 1] - xs[i])
            return ys[i] + t * (ys[i + 1] - ys[i])
    raise AssertionError("unreachable: breakpoints cover [0, 1]")


def _segment_image(f: PiecewiseLinear, seg: Interval) -> Interval:
    # f is affine on seg; each image endpoint is attained iff its source endpoint is included
    a, b = evaluate(f, seg.lo), evaluate(f, seg.hi)
    if a == b:
        return Interval.point(a)
    if a < b:
        return Interval(a, b, seg.lo_closed, seg.hi_closed)
    return Interval(b, a, seg.hi_closed, seg.lo_closed)


def image_of_cell(f: PiecewiseLinear, cell: Interval) -> RationalIntervalSet:
    """Exact image of a point or interval inside [0, 1]."""
    if cell.is_empty():
        return RationalIntervalSet()
    if cell.lo < 0 or cell.hi > 1:
        raise OutOfDomain(cell.lo if cell.lo < 0 else cell.hi)
    if cell.is_point():
        return RationalIntervalSet([Interval.point(evaluate(f, cell.lo))])
    inner = [x for x in f.breakpoints if cell.lo < x < cell.hi]
    cuts = [cell.lo, *inner, cell.hi]
    pieces = []
    for i in range(len(cuts) - 1):
        lo_c = cell.lo_closed if i == 0 else True
        hi_c = cell.hi_closed if i == len(cuts) - 2 else True
        pieces.append(_segment_image(f, Interval(cuts[i], cuts[i + 1], lo_c, hi_c)))
    return RationalIntervalSet(pieces)


class CotsQuotient:
    """Quotient of [0, 1] onto the finite COTS determined by ``cuts``.

    Point ``2i`` is the cut ``t_i``; point ``2i + 1`` is the open gap
    ``(t_i, t_(i+1))``.
    """

    def __init__(self, cuts: Sequence, labels: Sequence[str] | None = None):
        cuts = tuple(Fraction(c) for c in cuts)
        if len(cuts) < 2 or cuts[0] != 0 or cuts[-1] != 1:
            raise FinTopError("cuts must start at 0, end at 1 and have at least two entries")
        if any(a >= b for a, b in zip(cuts, cuts[1:])):
            raise FinTopError("cuts must be strictly increasing")
        self.cuts = cuts
        self.k = len(cuts) - 1
        n = 2 * self.k + 1
        nb = []
        for p in range(n):
            if p % 2:
                nb.append(1 << p)
            else:
                u = 1 << p
                if p > 0:
                    u |= 1 << (p - 1)
                if p < n - 1:
                    u |= 1 << (p + 1)
                nb.append(u)
        self.cot_space: Space = space_from_minbase(nb, labels or default_labels(n))

    @property
    def n(self) -> int:
        return self.cot_space.n

    def fiber(self, p: int) -> Interval:
        if not 0 <= p < self.n:
            raise FinTopError(f"no COTS point {p}")
        if p % 2 == 0:
            return Interval.point(self.cuts[p // 2])
        i = p // 2
        return Interval.open(self.cuts[i], self.cuts[i + 1])

    def point_of(self, x) -> int:
        """The COTS point whose fiber contains ``x``."""
        x = Fraction(x)
        if not 0 <= x <= 1:
            raise OutOfDomain(x)
        for i, t in enumerate(self.cuts):
            if x == t:
                return 2 * i
            if x < t:
                return 2 * i - 1
        raise AssertionError("unreachable")


def project(q: CotsQuotient, s: RationalIntervalSet) -> PointSet:
    """COTS points whose fibers meet ``s``."""
    return bits.from_indices(p for p in range(q.n) if s.meets(q.fiber(p)))


def induced_multifunction(f: PiecewiseLinear, q: CotsQuotient) -> Multifunction:
    """``y -> project(f(fiber(y)))`` as a multifunction of the COTS into itself."""
    image = [project(q, image_of_cell(f, q.fiber(p))) for p in range(q.n)]
    return Multifunction(q.cot_space, q.cot_space, image)
