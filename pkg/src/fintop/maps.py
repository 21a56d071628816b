"""Point maps and multifunctions between finite spaces.

Continuity-type checks come in two routes: a definitional one quantifying
over open sets, and one that only looks at minimal neighborhoods.  The public
predicates run both and raise :class:`PathDisagreement` if they ever differ.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from . import bits
from .bits import PointSet
from .errors import EmptyImage, InvalidMap, PathDisagreement, TargetNotOneDimensionalT0
from .operators import classify_set, closure
from .properties import closed_points, dimension_inductive, is_t0, open_points
from .space import Space


def _agree(what: str, first, second):
    if first != second:
        raise PathDisagreement(what, first, second)
    return first


class PointFunction:
    """Single-valued map ``source -> target`` given by one target index per point."""

    def __init__(self, source: Space, target: Space, image: Sequence[int]):
        image = tuple(image)
        if len(image) != source.n:
            raise InvalidMap(f"map needs {source.n} images, got {len(image)}")
        for x, y in enumerate(image):
            if not 0 <= y < target.n:
                raise InvalidMap(f"image {y} of point {x} outside target")
        self.source = source
        self.target = target
        self.image = image

    @classmethod
    def identity(cls, space: Space) -> "PointFunction":
        return cls(space, space, range(space.n))

    def image_of(self, a: PointSet) -> PointSet:
        out = 0
        for x in bits.members(a):
            out |= 1 << self.image[x]
        return out

    def preimage(self, b: PointSet) -> PointSet:
        return bits.from_indices(x for x, y in enumerate(self.image) if b >> y & 1)

    def as_multifunction(self) -> "Multifunction":
        return Multifunction(self.source, self.target, [1 << y for y in self.image])

    def __repr__(self):
        pairs = " ".join(f"{self.source.labels[x]}:{self.target.labels[y]}" for x, y in enumerate(self.image))
        return f"PointFunction({pairs})"


def continuous_by_preimages(f: PointFunction) -> bool:
    return all(f.source.is_open(f.preimage(v)) for v in f.target.opens)


def continuity_failures(f: PointFunction) -> list[int]:
    """Points ``x`` where ``f(U_x)`` escapes ``U_f(x)``."""
    src, dst = f.source.min_nbhd, f.target.min_nbhd
    return [x for x in range(f.source.n) if not bits.is_subset(f.image_of(src[x]), dst[f.image[x]])]


def is_continuous(f: PointFunction) -> bool:
    local = not continuity_failures(f)
    return _agree("continuity", local, continuous_by_preimages(f))


@dataclass(frozen=True)
class ContinuityClass:
    continuous: bool
    precontinuous: bool
    semicontinuous: bool
    gamma_continuous: bool


@dataclass(frozen=True)
class OpennessClass:
    open: bool
    preopen: bool
    semiopen: bool
    gamma_open: bool


def continuity_class(f: PointFunction) -> ContinuityClass:
    """Classify ``f`` by what kind of set every preimage of an open set is."""
    flags = [classify_set(f.source, f.preimage(v)) for v in f.target.opens]
    cont = all(c.open for c in flags)
    _agree("continuity", cont, not continuity_failures(f))
    return ContinuityClass(
        continuous=cont,
        precontinuous=all(c.preopen for c in flags),
        semicontinuous=all(c.semiopen for c in flags),
        gamma_continuous=all(c.gamma_open for c in flags),
    )


def openness_class(f: PointFunction) -> OpennessClass:
    """Classify ``f`` by what kind of set every image of an open set is."""
    flags = [classify_set(f.target, f.image_of(g)) for g in f.source.opens]
    return OpennessClass(
        open=all(c.open for c in flags),
        preopen=all(c.preopen for c in flags),
        semiopen=all(c.semiopen for c in flags),
        gamma_open=all(c.gamma_open for c in flags),
    )


def is_open_map(f: PointFunction) -> bool:
    return all(f.target.is_open(f.image_of(g)) for g in f.source.opens)


def is_closed_map(f: PointFunction) -> bool:
    return all(f.target.is_closed(f.image_of(c)) for c in f.source.closeds)


class OpenMapCheck(NamedTuple):
    hypotheses_hold: bool
    is_open: bool
    is_closed: bool


def check_open_map_theorem(f: PointFunction) -> OpenMapCheck:
    """Evaluate the hypotheses of the open-map criterion and, separately, openness.

    Hypotheses: ``f`` continuous; every closed target point has exactly one
    preimage; for a closed ``y`` and an open point ``z`` in ``U_y`` the fiber
    of ``y`` lies in the closure of the fiber of ``z``.  The target must be T0
    of inductive dimension at most one.
    """
    target = f.target
    if not is_t0(target) or dimension_inductive(target) > 1:
        raise TargetNotOneDimensionalT0()
    hyp = is_continuous(f)
    tops = open_points(target)
    for y in bits.members(closed_points(target)):
        if not hyp:
            break
        fiber = f.preimage(1 << y)
        if bits.size(fiber) != 1:
            hyp = False
            break
        for z in bits.members(target.min_nbhd[y] & tops):
            if not bits.is_subset(fiber, closure(f.source, f.preimage(1 << z))):
                hyp = False
                break
    return OpenMapCheck(hyp, is_open_map(f), is_closed_map(f))


class Multifunction:
    """Set-valued map assigning each source point a nonempty target set."""

    def __init__(self, source: Space, target: Space, image: Sequence[PointSet]):
        image = tuple(image)
        if len(image) != source.n:
            raise InvalidMap(f"multifunction needs {source.n} values, got {len(image)}")
        for x, v in enumerate(image):
            target.check(v)
            if v == 0:
                raise EmptyImage(x)
        self.source = source
        self.target = target
        self.image = image

    def image_of(self, a: PointSet) -> PointSet:
        out = 0
        for x in bits.members(a):
            out |= self.image[x]
        return out

    def __eq__(self, other):
        if not isinstance(other, Multifunction):
            return NotImplemented
        return (self.source, self.target, self.image) == (other.source, other.target, other.image)

    def __repr__(self):
        pairs = " ".join(f"{self.source.labels[x]}:{self.target.fmt(v)}" for x, v in enumerate(self.image))
        return f"Multifunction({pairs})"


class UscFailure(NamedTuple):
    point: int
    image_of_nbhd: PointSet  # F(U_x)
    bound: PointSet  # union of U_y over y in F(x)


class LscFailure(NamedTuple):
    point: int
    neighbor: int  # x' in U_x
    value: int  # y in F(x) with F(x') disjoint from U_y


def usc_failures(F: Multifunction) -> list[UscFailure]:
    out = []
    nb = F.target.min_nbhd
    for x in range(F.source.n):
        bound = 0
        for y in bits.members(F.image[x]):
            bound |= nb[y]
        reach = F.image_of(F.source.min_nbhd[x])
        if not bits.is_subset(reach, bound):
            out.append(UscFailure(x, reach, bound))
    return out


def lsc_failures(F: Multifunction) -> list[LscFailure]:
    out = []
    nb = F.target.min_nbhd
    for x in range(F.source.n):
        for xp in bits.members(F.source.min_nbhd[x]):
            for y in bits.members(F.image[x]):
                if F.image[xp] & nb[y] == 0:
                    out.append(LscFailure(x, xp, y))
    return out


def usc_at_by_opens(F: Multifunction, x: int) -> bool:
    """For every open ``V`` containing ``F(x)`` some open ``U`` around ``x`` has ``F(U)`` inside ``V``."""
    xb = 1 << x
    around = [u for u in F.source.opens if u & xb]
    for v in F.target.opens:
        if bits.is_subset(F.image[x], v):
            if not any(bits.is_subset(F.image_of(u), v) for u in around):
                return False
    return True


def lsc_at_by_opens(F: Multifunction, x: int) -> bool:
    """For every open ``V`` meeting ``F(x)`` some open ``U`` around ``x`` has
    every ``F(x')``, ``x'`` in ``U``, meeting ``V``."""
    xb = 1 << x
    around = [u for u in F.source.opens if u & xb]
    for v in F.target.opens:
        if F.image[x] & v:
            if not any(all(F.image[xp] & v for xp in bits.members(u)) for u in around):
                return False
    return True


def is_usc(F: Multifunction) -> bool:
    by_opens = all(usc_at_by_opens(F, x) for x in range(F.source.n))
    return _agree("upper semicontinuity", not usc_failures(F), by_opens)


def is_lsc(F: Multifunction) -> bool:
    by_opens = all(lsc_at_by_opens(F, x) for x in range(F.source.n))
    return _agree("lower semicontinuity", not lsc_failures(F), by_opens)
