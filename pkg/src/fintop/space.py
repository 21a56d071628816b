"""Finite topological spaces, minimal bases and specialization preorders.

Points are indices ``0..n-1``; labels are carried for I/O only.  A space is
determined by its minimal neighborhoods ``U_x`` (the intersection of every
open set containing ``x``), and every other representation is derived from
them: the open family is the set of unions of minimal neighborhoods, and the
specialization preorder puts ``y >= x`` exactly when ``U_y`` is inside
``U_x``.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Mapping, Sequence

from . import bits
from .bits import PointSet
from .errors import (
    FinTopError,
    InconsistentBase,
    MissingEmptyOrFull,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
    NotReflexive,
    NotTransitive,
    PointNotInOwnNeighborhood,
)


def default_labels(n: int) -> tuple[str, ...]:
    if n <= 26:
        return tuple("abcdefghijklmnopqrstuvwxyz"[:n])
    return tuple(f"p{i}" for i in range(n))


def _check_n(n: int, allow_empty: bool = False) -> None:
    lo = 0 if allow_empty else 1
    if not lo <= n <= bits.MAX_POINTS:
        raise FinTopError(f"number of points must be in {lo}..{bits.MAX_POINTS}, got {n}")


def _check_labels(labels: Sequence[str] | None, n: int) -> tuple[str, ...]:
    if labels is None:
        return default_labels(n)
    labels = tuple(str(s) for s in labels)
    if len(labels) != n:
        raise FinTopError(f"expected {n} labels, got {len(labels)}")
    if len(set(labels)) != n:
        raise FinTopError("point labels must be unique")
    return labels


class Preorder:
    """Reflexive, transitive relation on ``n`` points.

    ``geq(y, x)`` answers ``y >= x``.  Internally ``up[x]`` holds the mask of
    all ``y`` with ``y >= x`` and ``down[x]`` the mask of all ``y <= x``.
    """

    def __init__(self, geq: Sequence[Sequence[bool]]):
        n = len(geq)
        _check_n(n, allow_empty=True)
        up = [0] * n
        for y, row in enumerate(geq):
            if len(row) != n:
                raise FinTopError("relation matrix must be square")
            for x, flag in enumerate(row):
                if flag:
                    up[x] |= 1 << y
        self._init_from_up(up)
        self._validate()

    @classmethod
    def from_up_sets(cls, up: Sequence[PointSet]) -> "Preorder":
        """Build from ``up[x] = {y : y >= x}`` masks, validating the axioms."""
        self = cls.__new__(cls)
        _check_n(len(up), allow_empty=True)
        self._init_from_up(list(up))
        self._validate()
        return self

    @classmethod
    def _trusted(cls, up: Sequence[PointSet]) -> "Preorder":
        self = cls.__new__(cls)
        self._init_from_up(list(up))
        return self

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Preorder":
        """Reflexive-transitive closure of the pairs ``(u, v)`` read as ``u <= v``."""
        _check_n(n, allow_empty=True)
        up = [1 << x for x in range(n)]
        for u, v in pairs:
            if not (0 <= u < n and 0 <= v < n):
                raise FinTopError(f"pair ({u}, {v}) outside 0..{n - 1}")
            up[u] |= 1 << v
        # Warshall on masks: if k >= x then everything >= k is >= x
        for k in range(n):
            kb = 1 << k
            for x in range(n):
                if up[x] & kb:
                    up[x] |= up[k]
        return cls._trusted(up)

    def _init_from_up(self, up: list[PointSet]) -> None:
        n = len(up)
        self.n = n
        self.up = tuple(up)
        down = [0] * n
        for x in range(n):
            for y in bits.members(up[x]):
                down[y] |= 1 << x
        self.down = tuple(down)

    def _validate(self) -> None:
        n = self.n
        for x in range(n):
            if self.up[x] >> n:
                raise FinTopError(f"relation mentions points outside 0..{n - 1}")
            if not self.up[x] >> x & 1:
                raise NotReflexive(x)
        for x in range(n):
            for y in bits.members(self.up[x]):
                missing = self.up[y] & ~self.up[x]
                if missing:
                    z = (missing & -missing).bit_length() - 1
                    raise NotTransitive(z, y, x)

    def geq(self, y: int, x: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def leq(self, x: int, y: int) -> bool:
        return self.geq(y, x)

    @property
    def matrix(self) -> list[list[bool]]:
        """Row ``y``, column ``x`` holds ``y >= x``."""
        return [[self.geq(y, x) for x in range(self.n)] for y in range(self.n)]

    def is_antisymmetric(self) -> bool:
        return all(self.up[x] & self.down[x] == 1 << x for x in range(self.n))

    def maximal(self) -> PointSet:
        """Points with nothing strictly above them (up to equivalence)."""
        return bits.from_indices(x for x in range(self.n) if bits.is_subset(self.up[x], self.down[x]))

    def minimal(self) -> PointSet:
        return bits.from_indices(x for x in range(self.n) if bits.is_subset(self.down[x], self.up[x]))

    def up_closure(self, mask: PointSet) -> PointSet:
        out = 0
        for x in bits.members(mask):
            out |= self.up[x]
        return out

    def down_closure(self, mask: PointSet) -> PointSet:
        out = 0
        for x in bits.members(mask):
            out |= self.down[x]
        return out

    def __eq__(self, other):
        if not isinstance(other, Preorder):
            return NotImplemented
        return self.up == other.up

    def __hash__(self):
        return hash(self.up)

    def __repr__(self):
        pairs = [(x, y) for x in range(self.n) for y in bits.members(self.up[x]) if y != x]
        return f"Preorder(n={self.n}, strict_le={pairs})"


class Space:
    """A finite topological space.

    Do not call the constructor directly; use :func:`validate_topology`,
    :func:`space_from_preorder`, :func:`space_from_minbase` or
    :func:`subspace`, which check their inputs.
    """

    def __init__(self, min_nbhd: Sequence[PointSet], labels: Sequence[str] | None = None,
                 opens: Sequence[PointSet] | None = None):
        self.n = len(min_nbhd)
        self.labels = _check_labels(labels, self.n)
        self.min_nbhd = tuple(min_nbhd)
        self.full = bits.full(self.n)
        if opens is not None:
            self.__dict__["opens"] = tuple(sorted(opens, key=bits.family_key))

    @cached_property
    def opens(self) -> tuple[PointSet, ...]:
        """Every open set, sorted by (cardinality, numeric value)."""
        family = {0}
        for u in set(self.min_nbhd):
            family |= {f | u for f in family}
        return tuple(sorted(family, key=bits.family_key))

    @cached_property
    def open_set(self) -> frozenset[PointSet]:
        return frozenset(self.opens)

    @cached_property
    def closeds(self) -> tuple[PointSet, ...]:
        return tuple(sorted((self.full ^ g for g in self.opens), key=bits.family_key))

    @cached_property
    def order(self) -> Preorder:
        # y >= x iff U_y is inside U_x; since y is in U_y that is y in U_x
        return Preorder._trusted(self.min_nbhd)

    def is_open(self, mask: PointSet) -> bool:
        return mask in self.open_set

    def is_closed(self, mask: PointSet) -> bool:
        return (self.full ^ mask) in self.open_set

    def check(self, mask: PointSet) -> PointSet:
        if mask < 0 or mask >> self.n:
            raise FinTopError(f"set {mask:#b} is not within a universe of {self.n} points")
        return mask

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise FinTopError(f"unknown point {label!r}") from None

    def set_of(self, labels: Iterable[str]) -> PointSet:
        return bits.from_indices(self.index(s) for s in labels)

    def names(self, mask: PointSet) -> list[str]:
        return [self.labels[i] for i in bits.members(mask)]

    def fmt(self, mask: PointSet) -> str:
        return "{" + " ".join(self.names(mask)) + "}"

    def relabel(self, labels: Sequence[str]) -> "Space":
        return Space(self.min_nbhd, labels, self.__dict__.get("opens"))

    def __eq__(self, other):
        if not isinstance(other, Space):
            return NotImplemented
        return self.labels == other.labels and self.min_nbhd == other.min_nbhd

    def __hash__(self):
        return hash((self.labels, self.min_nbhd))

    def __repr__(self):
        nb = ", ".join(f"{self.labels[x]}:{self.fmt(u)}" for x, u in enumerate(self.min_nbhd))
        return f"Space({nb})"


def _min_nbhds_of_family(n: int, opens: Sequence[PointSet]) -> list[PointSet]:
    full = bits.full(n)
    out = [full] * n
    for g in opens:
        for x in bits.members(g):
            out[x] &= g
    return out


def validate_topology(n: int, opens: Iterable[PointSet], labels: Sequence[str] | None = None) -> Space:
    """Check that ``opens`` is a topology on ``n`` points and build the space.

    Order and duplicates in ``opens`` do not matter.  Only pairwise unions and
    intersections are checked, which suffices for a finite family.
    """
    _check_n(n)
    full = bits.full(n)
    family = set()
    for g in opens:
        if g < 0 or g & ~full:
            raise FinTopError(f"set {g:#b} does not fit in {n} points")
        family.add(g)
    if 0 not in family:
        raise MissingEmptyOrFull("empty")
    if full not in family:
        raise MissingEmptyOrFull("full")
    ordered = sorted(family, key=bits.family_key)
    for i, a in enumerate(ordered):
        for b in ordered[i + 1:]:
            if a | b not in family:
                raise NotClosedUnderUnion(a, b)
            if a & b not in family:
                raise NotClosedUnderIntersection(a, b)
    return Space(_min_nbhds_of_family(n, ordered), labels, ordered)


def minimal_base(space: Space) -> list[PointSet]:
    """The distinct minimal neighborhoods, sorted like an open family."""
    return sorted(set(space.min_nbhd), key=bits.family_key)


def specialization_order(space: Space) -> Preorder:
    return space.order


def space_from_preorder(order: Preorder, labels: Sequence[str] | None = None) -> Space:
    """The up-set topology of ``order``: a set is open when it contains
    everything above each of its points."""
    return Space(order.up, labels)


def space_from_minbase(assignments: Mapping[int, PointSet] | Sequence[PointSet],
                       labels: Sequence[str] | None = None) -> Space:
    """Space whose minimal neighborhoods are the given sets.

    Inconsistent assignments are rejected with a witness rather than repaired.
    """
    if isinstance(assignments, Mapping):
        n = len(assignments)
        missing = [x for x in range(n) if x not in assignments]
        if missing:
            raise FinTopError(f"no neighborhood assigned to point {missing[0]}")
        nb = [assignments[x] for x in range(n)]
    else:
        nb = list(assignments)
        n = len(nb)
    _check_n(n)
    full = bits.full(n)
    for x, u in enumerate(nb):
        if u < 0 or u & ~full:
            raise FinTopError(f"neighborhood of point {x} does not fit in {n} points")
        if not u >> x & 1:
            raise PointNotInOwnNeighborhood(x)
    for x, u in enumerate(nb):
        for y in bits.members(u):
            if nb[y] & ~u:
                raise InconsistentBase(x, y)
    return Space(nb, labels)


def subspace(space: Space, sub: PointSet) -> Space:
    """Subspace topology on ``sub``, reindexed in increasing point order."""
    space.check(sub)
    keep = list(bits.members(sub))
    where = {x: i for i, x in enumerate(keep)}
    nb = []
    for x in keep:
        nb.append(bits.from_indices(where[y] for y in bits.members(space.min_nbhd[x] & sub)))
    return Space(nb, [space.labels[x] for x in keep])


def subspace_by_opens(space: Space, sub: PointSet) -> Space:
    """Same as :func:`subspace`, computed from ``{G & sub : G open}``."""
    space.check(sub)
    keep = list(bits.members(sub))
    where = {x: i for i, x in enumerate(keep)}
    family = {bits.from_indices(where[y] for y in bits.members(g & sub)) for g in space.opens}
    if not keep:
        return Space([], [], [0])
    return validate_topology(len(keep), family, [space.labels[x] for x in keep])
