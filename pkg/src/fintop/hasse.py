"""Covering relation of the specialization order and its DOT rendering."""

from __future__ import annotations

from . import bits
from .space import Space


def hasse_classes(space: Space) -> tuple[list[int], list[tuple[int, int]]]:
    """Neighborhood-equivalence classes and the cover pairs between them.

    Returns the classes as point masks, ordered by their smallest point, and
    ``(i, j)`` pairs meaning class ``j`` covers class ``i``.
    """
    classes: dict[int, int] = {}
    for x, u in enumerate(space.min_nbhd):
        classes[u] = classes.get(u, 0) | 1 << x
    groups = sorted(classes.values(), key=lambda m: (m & -m))
    nbs = [space.min_nbhd[(m & -m).bit_length() - 1] for m in groups]
    k = len(groups)
    # strictly above: U_j inside U_i, different class
    above = [[j != i and bits.is_subset(nbs[j], nbs[i]) for j in range(k)] for i in range(k)]
    covers = []
    for i in range(k):
        for j in range(k):
            if above[i][j] and not any(above[i][m] and above[m][j] for m in range(k)):
                covers.append((i, j))
    return groups, covers


def node_name(space: Space, mask: int) -> str:
    return ",".join(space.names(mask))


def hasse_dot(space: Space, name: str = "hasse") -> str:
    """DOT digraph of the covering relation; edges run from smaller to larger."""
    groups, covers = hasse_classes(space)
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for m in groups:
        label = node_name(space, m)
        lines.append(f'  "{label}";')
    for i, j in covers:
        lines.append(f'  "{node_name(space, groups[i])}" -> "{node_name(space, groups[j])}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
