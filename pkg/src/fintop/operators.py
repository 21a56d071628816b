"""Set operators on finite spaces.

Each operator can be evaluated two ways.  ``method="order"`` (the default)
uses the specialization preorder: the closure of ``A`` is everything below a
point of ``A``, the interior is the points of ``A`` whose whole up-set stays
in ``A``, and so on.  ``method="definition"`` works from the open family
itself and serves as the oracle for the order route.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from . import bits
from .bits import PointSet
from .space import Space

ORDER = "order"
DEFINITION = "definition"


def _check_method(method: str) -> None:
    if method not in (ORDER, DEFINITION):
        raise ValueError(f"method must be {ORDER!r} or {DEFINITION!r}, got {method!r}")


def closure(space: Space, a: PointSet, method: str = ORDER) -> PointSet:
    space.check(a)
    _check_method(method)
    if method == ORDER:
        return space.order.down_closure(a)
    out = space.full
    for f in space.closeds:
        if bits.is_subset(a, f):
            out &= f
    return out


def interior(space: Space, a: PointSet, method: str = ORDER) -> PointSet:
    space.check(a)
    _check_method(method)
    if method == ORDER:
        up = space.order.up
        return bits.from_indices(x for x in bits.members(a) if bits.is_subset(up[x], a))
    out = 0
    for g in space.opens:
        if bits.is_subset(g, a):
            out |= g
    return out


def closure_of_interior(space: Space, a: PointSet, method: str = ORDER) -> PointSet:
    return closure(space, interior(space, a, method), method)


def interior_of_closure(space: Space, a: PointSet, method: str = ORDER) -> PointSet:
    return interior(space, closure(space, a, method), method)


def closure_of_interior_by_maxima(space: Space, a: PointSet) -> PointSet:
    """Points lying below some maximal point of the space that belongs to ``a``.

    Agrees with :func:`closure_of_interior` on T0 spaces only.
    """
    space.check(a)
    order = space.order
    return order.down_closure(order.maximal() & a)


def interior_of_closure_by_maxima(space: Space, a: PointSet) -> PointSet:
    """Points all of whose maximal upper bounds belong to ``a`` (T0 spaces)."""
    space.check(a)
    order = space.order
    top = order.maximal()
    return bits.from_indices(x for x in range(space.n) if bits.is_subset(order.up[x] & top, a))


def boundary(space: Space, a: PointSet, method: str = ORDER) -> PointSet:
    space.check(a)
    _check_method(method)
    if method == DEFINITION:
        return closure(space, a, method) & closure(space, space.full ^ a, method)
    # b lies below something in A and below something outside A
    down = space.order.down
    below_in = below_out = 0
    for x in range(space.n):
        if a >> x & 1:
            below_in |= down[x]
        else:
            below_out |= down[x]
    return below_in & below_out


def exterior(space: Space, a: PointSet, method: str = ORDER) -> PointSet:
    space.check(a)
    _check_method(method)
    if method == DEFINITION:
        return interior(space, space.full ^ a, method)
    up = space.order.up
    return bits.from_indices(x for x in range(space.n) if up[x] & a == 0)


def derived_set(space: Space, a: PointSet, method: str = ORDER) -> PointSet:
    """Accumulation points of ``a``."""
    space.check(a)
    _check_method(method)
    if method == ORDER:
        nb = space.min_nbhd
        return bits.from_indices(x for x in range(space.n) if nb[x] & ~(1 << x) & a)
    out = 0
    for x in range(space.n):
        xb = 1 << x
        if all(g & ~xb & a for g in space.opens if g & xb):
            out |= xb
    return out


@dataclass(frozen=True)
class SetClassification:
    open: bool
    closed: bool
    clopen: bool
    semiopen: bool
    preopen: bool
    gamma_open: bool
    dense: bool
    codense: bool
    nowhere_dense: bool
    dense_in_itself: bool
    # A inside d(A), i.e. no point of A is isolated in A
    dense_in_itself_weak: bool

    def as_dict(self) -> dict[str, bool]:
        return asdict(self)


def classify_set(space: Space, a: PointSet, method: str = ORDER) -> SetClassification:
    space.check(a)
    cl = closure(space, a, method)
    it = interior(space, a, method)
    clint = closure(space, it, method)
    intcl = interior(space, cl, method)
    d = derived_set(space, a, method)
    is_open = it == a
    is_closed = cl == a
    return SetClassification(
        open=is_open,
        closed=is_closed,
        clopen=is_open and is_closed,
        semiopen=bits.is_subset(a, clint),
        preopen=bits.is_subset(a, intcl),
        gamma_open=bits.is_subset(a, clint | intcl),
        dense=cl == space.full,
        codense=it == 0,
        nowhere_dense=intcl == 0,
        dense_in_itself=a == d,
        dense_in_itself_weak=bits.is_subset(a, d),
    )


def order_characterizations(space: Space, a: PointSet) -> dict[str, bool]:
    """Order-theoretic forms of the density notions, valid in T0 spaces.

    ``codense`` and ``nowhere_dense`` both reduce to "``a`` holds no maximal
    point"; ``dense`` means "``a`` holds every maximal point".
    """
    order = space.order
    top = order.maximal()
    return {
        "dense": bits.is_subset(top, a),
        "codense": top & a == 0,
        "nowhere_dense": top & a == 0,
        "dense_in_itself_weak": all(order.up[x] & a & ~(1 << x) for x in bits.members(a)),
    }
