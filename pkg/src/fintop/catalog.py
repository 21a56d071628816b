"""Named example spaces used throughout the documentation and tests."""

from __future__ import annotations

from .space import Space, space_from_minbase

XYZ = ("x", "y", "z")

# minimal neighborhoods of the nine topologies on {x, y, z}, up to homeomorphism
THREE_POINT_MINBASES = {
    "tau1": ("x", "y", "z"),
    "tau2": ("x", "y", "xz"),
    "tau3": ("x", "y", "xyz"),
    "tau4": ("x", "xyz", "xyz"),
    "tau5": ("x", "xy", "xyz"),
    "tau6": ("x", "yz", "yz"),
    "tau7": ("x", "xy", "xz"),
    "tau8": ("xy", "xy", "xyz"),
    "tau9": ("xyz", "xyz", "xyz"),
}


def _mask(letters: str, labels=XYZ) -> int:
    return sum(1 << labels.index(ch) for ch in letters)


def three_point(name: str) -> Space:
    """One of ``tau1`` .. ``tau9`` on the points x, y, z."""
    nb = THREE_POINT_MINBASES[name]
    return space_from_minbase([_mask(s) for s in nb], XYZ)


def three_point_catalog() -> dict[str, Space]:
    return {name: three_point(name) for name in THREE_POINT_MINBASES}


def sierpinski() -> Space:
    """Points a, b with opens {}, {a}, {a b}."""
    return space_from_minbase([0b01, 0b11], ("a", "b"))


def discrete(n: int, labels=None) -> Space:
    return space_from_minbase([1 << i for i in range(n)], labels)


def indiscrete(n: int, labels=None) -> Space:
    full = (1 << n) - 1
    return space_from_minbase([full] * n, labels)


def chain(n: int, labels=None) -> Space:
    """Up-set topology of the chain ``p0 < p1 < ... < p(n-1)``."""
    return space_from_minbase([((1 << n) - 1) & ~((1 << i) - 1) for i in range(n)], labels)


def four_point_target() -> Space:
    """Points a, b, c, d with U_a = {a}, U_b = {b}, U_c = U_d = everything."""
    return space_from_minbase([0b0001, 0b0010, 0b1111, 0b1111], ("a", "b", "c", "d"))
