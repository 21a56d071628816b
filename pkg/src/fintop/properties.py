"""Whole-space properties: separation, isolated points, dimension, height,
submaximality, connectedness and the COTS condition."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from . import bits
from .bits import PointSet
from .errors import NotT0
from .operators import DEFINITION, boundary, closure
from .space import Space, subspace


def is_t0(space: Space) -> bool:
    return len(set(space.min_nbhd)) == space.n


def is_t1(space: Space) -> bool:
    return all(u == 1 << x for x, u in enumerate(space.min_nbhd))


def is_discrete(space: Space) -> bool:
    return len(space.opens) == 1 << space.n


def is_indiscrete(space: Space) -> bool:
    return len(space.opens) <= 2


def open_points(space: Space) -> PointSet:
    """Points ``x`` with ``{x}`` open, read off the open family."""
    return bits.from_indices(x for x in range(space.n) if space.is_open(1 << x))


def closed_points(space: Space) -> PointSet:
    return bits.from_indices(x for x in range(space.n) if space.is_closed(1 << x))


def has_isolated_point(space: Space) -> bool:
    return open_points(space) != 0


def is_t_half(space: Space) -> bool:
    """Every singleton is open or closed."""
    return open_points(space) | closed_points(space) == space.full


def dimension_inductive(space: Space) -> int:
    """Small inductive dimension computed over the minimal base.

    A nonempty subspace ``S`` has dimension ``max(dim boundary_S(U_x & S)) + 1``
    over ``x`` in ``S``; the empty space has dimension -1.  Subspaces are
    handled as masks of the original space and memoized.
    """
    nb = space.min_nbhd
    down = space.order.down

    @lru_cache(maxsize=None)
    def dim(sub: PointSet) -> int:
        if not sub:
            return -1
        best = 0
        for x in bits.members(sub):
            u = nb[x] & sub
            cl_u = cl_rest = 0
            for y in bits.members(sub):
                if u >> y & 1:
                    cl_u |= down[y]
                else:
                    cl_rest |= down[y]
            best = max(best, dim(cl_u & cl_rest & sub) + 1)
        return best

    return dim(space.full)


def dimension_by_subspaces(space: Space) -> int:
    """Same recursion as :func:`dimension_inductive`, but every boundary is
    materialized as a :class:`Space` and evaluated from its open family."""
    if space.n == 0:
        return -1
    best = 0
    for u in set(space.min_nbhd):
        edge = boundary(space, u, DEFINITION)
        best = max(best, dimension_by_subspaces(subspace(space, edge)) + 1)
    return best


def _height_of(up: tuple[PointSet, ...], reps: list[int]) -> int:
    # longest chain of strictly increasing classes; one representative each
    longest: dict[int, int] = {}

    def chain_from(x: int) -> int:
        if x in longest:
            return longest[x]
        best = 1
        for y in reps:
            if y != x and up[x] >> y & 1 and not up[y] >> x & 1:
                best = max(best, 1 + chain_from(y))
        longest[x] = best
        return best

    return max((chain_from(x) for x in reps), default=0)


def class_representatives(space: Space) -> list[int]:
    """Smallest point of each class of points with equal minimal neighborhoods."""
    seen = {}
    for x, u in enumerate(space.min_nbhd):
        seen.setdefault(u, x)
    return sorted(seen.values())


def poset_height(space: Space) -> int:
    """Number of elements in a longest chain ``x1 < x2 < ... < xk``."""
    if not is_t0(space):
        raise NotT0("poset height")
    return _height_of(space.order.up, list(range(space.n)))


def quotient_height(space: Space) -> int:
    """Height of the poset of neighborhood-equivalence classes.

    Equals :func:`poset_height` on T0 spaces and is defined for every space.
    """
    return _height_of(space.order.up, class_representatives(space))


def dense_subsets(space: Space):
    for a in bits.subsets(space.full):
        if closure(space, a, DEFINITION) == space.full:
            yield a


def is_submaximal(space: Space) -> bool:
    """Every dense subset is open (checked over all subsets)."""
    return all(space.is_open(a) for a in dense_subsets(space))


def non_isolated_chain_free(space: Space) -> bool:
    """No two comparable non-isolated points; the submaximality criterion
    for T0 spaces."""
    rest = space.full & ~open_points(space)
    up = space.order.up
    return all(up[x] & rest == 1 << x for x in bits.members(rest))


def has_clopen_base(space: Space) -> bool:
    clopens = [g for g in space.opens if space.is_closed(g)]
    for x in range(space.n):
        xb = 1 << x
        if not any(c & xb and bits.is_subset(c, space.min_nbhd[x]) for c in clopens):
            return False
    return True


def connected_components(space: Space) -> list[PointSet]:
    """Components as minimal nonempty clopen sets, ordered by smallest point."""
    clopens = [g for g in space.opens if g and space.is_closed(g)]
    comps = []
    covered = 0
    for x in range(space.n):
        if covered >> x & 1:
            continue
        comp = space.full
        for c in clopens:
            if c >> x & 1:
                comp &= c
        comps.append(comp)
        covered |= comp
    return comps


def components_by_comparability(space: Space) -> list[PointSet]:
    """Components as classes of the comparability graph, by breadth-first search."""
    up, down = space.order.up, space.order.down
    comps = []
    covered = 0
    for x in range(space.n):
        if covered >> x & 1:
            continue
        comp = frontier = 1 << x
        while frontier:
            grow = 0
            for y in bits.members(frontier):
                grow |= up[y] | down[y]
            frontier = grow & ~comp
            comp |= grow
        comps.append(comp)
        covered |= comp
    return comps


def _components_within(space: Space, sub: PointSet) -> list[PointSet]:
    up, down = space.order.up, space.order.down
    comps = []
    rest = sub
    while rest:
        comp = frontier = rest & -rest
        while frontier:
            grow = 0
            for y in bits.members(frontier):
                grow |= (up[y] | down[y]) & sub
            frontier = grow & ~comp
            comp |= grow
        comps.append(comp)
        rest &= ~comp
    return comps


def is_connected(space: Space) -> bool:
    return len(connected_components(space)) <= 1


def separates(space: Space, y: int, p: int, q: int) -> bool:
    """Whether ``p`` and ``q`` fall in different components of ``X - {y}``."""
    for comp in _components_within(space, space.full & ~(1 << y)):
        if comp >> p & 1:
            return not comp >> q & 1
    return True


def is_cots(space: Space) -> bool:
    """For every three points, one of them separates the other two."""
    for trio in combinations(range(space.n), 3):
        if not any(separates(space, y, *(t for t in trio if t != y)) for y in trio):
            return False
    return True


@dataclass
class SpaceReport:
    n: int
    t0: bool
    t1: bool
    t_half: bool
    discrete: bool
    indiscrete: bool
    submaximal: bool
    connected: bool
    cots: bool
    dim_inductive: int
    height: int
    open_points: PointSet
    closed_points: PointSet
    isolated_points: PointSet
    components: list[PointSet] = field(default_factory=list)

    def as_dict(self, space: Space | None = None) -> dict:
        """JSON-ready mapping; point sets become label lists when ``space`` is given."""
        def conv(mask):
            return space.names(mask) if space is not None else list(bits.members(mask))

        return {
            "n": self.n,
            "t0": self.t0,
            "t1": self.t1,
            "t_half": self.t_half,
            "discrete": self.discrete,
            "indiscrete": self.indiscrete,
            "submaximal": self.submaximal,
            "connected": self.connected,
            "cots": self.cots,
            "dim_inductive": self.dim_inductive,
            "height": self.height,
            "open_points": conv(self.open_points),
            "closed_points": conv(self.closed_points),
            "isolated_points": conv(self.isolated_points),
            "components": [conv(c) for c in self.components],
        }


def space_report(space: Space) -> SpaceReport:
    opened = open_points(space)
    return SpaceReport(
        n=space.n,
        t0=is_t0(space),
        t1=is_t1(space),
        t_half=is_t_half(space),
        discrete=is_discrete(space),
        indiscrete=is_indiscrete(space),
        submaximal=is_submaximal(space),
        connected=is_connected(space),
        cots=is_cots(space),
        dim_inductive=dimension_inductive(space),
        height=quotient_height(space),
        open_points=opened,
        closed_points=closed_points(space),
        isolated_points=opened,
        components=connected_components(space),
    )
