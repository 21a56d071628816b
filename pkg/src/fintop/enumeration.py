"""Enumeration of finite topologies and classification up to homeomorphism.

Topologies on ``n`` labeled points correspond one-to-one to preorders on the
points, so the enumerator walks preorders (in lexicographic order of the
row-major relation matrix) rather than filtering set families.

Two finite spaces are homeomorphic exactly when their specialization
preorders are isomorphic.  The canonical form collapses points with equal
minimal neighborhoods into weighted classes, then canonically labels the
resulting poset by colour refinement with backtracking on the first
non-singleton cell.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from . import bits
from .errors import NOutOfRange
from .space import Preorder, Space, space_from_preorder

CanonicalForm = bytes

MAX_N = 5
MAX_N_LARGE = 7


def _check_range(n: int, max_n: int) -> None:
    if not 1 <= n <= max_n:
        raise NOutOfRange(n, 1, max_n)


def enumerate_preorders(n: int) -> Iterator[Preorder]:
    """All preorders on ``n`` points, lexicographic in the row-major ``geq`` matrix.

    Row ``y`` of the matrix is the mask ``down[y] = {x : y >= x}``; cells are
    filled in row-major order, trying 0 before 1, and a branch is cut as soon
    as a decided triple breaks transitivity.
    """
    cells = [(y, x) for y in range(n) for x in range(n) if x != y]
    pos = {c: i for i, c in enumerate(cells)}
    rows = [1 << y for y in range(n)]

    def decided(y: int, x: int, upto: int) -> bool:
        return y == x or pos[(y, x)] <= upto

    def consistent(k: int) -> bool:
        y, x = cells[k]
        for w in range(n):
            if w == y or w == x:
                continue
            # y >= x and x >= w  =>  y >= w
            if rows[y] >> x & 1 and decided(x, w, k) and decided(y, w, k):
                if rows[x] >> w & 1 and not rows[y] >> w & 1:
                    return False
            # w >= y and y >= x  =>  w >= x
            if rows[y] >> x & 1 and decided(w, y, k) and decided(w, x, k):
                if rows[w] >> y & 1 and not rows[w] >> x & 1:
                    return False
            # y >= w and w >= x  =>  y >= x
            if not rows[y] >> x & 1 and decided(y, w, k) and decided(w, x, k):
                if rows[y] >> w & 1 and rows[w] >> x & 1:
                    return False
        return True

    def walk(k: int):
        if k == len(cells):
            up = [0] * n
            for y in range(n):
                for x in bits.members(rows[y]):
                    up[x] |= 1 << y
            yield Preorder._trusted(up)
            return
        y, x = cells[k]
        for v in (0, 1):
            if v:
                rows[y] |= 1 << x
            else:
                rows[y] &= ~(1 << x)
            if consistent(k):
                yield from walk(k + 1)
        rows[y] &= ~(1 << x)

    yield from walk(0)


def enumerate_labeled(n: int, max_n: int = MAX_N, labels=None) -> Iterator[Space]:
    """Every topology on ``n`` labeled points, exactly once, in a fixed order."""
    _check_range(n, max_n)
    for order in enumerate_preorders(n):
        yield space_from_preorder(order, labels)


# --- canonical labeling -------------------------------------------------------

def _quotient(space: Space):
    """Classes of equal minimal neighborhoods: sizes and strict up-masks between classes."""
    reps: dict[int, int] = {}
    members: list[int] = []
    for x, u in enumerate(space.min_nbhd):
        if u not in reps:
            reps[u] = len(members)
            members.append(0)
        members[reps[u]] |= 1 << x
    cls_of = [reps[u] for u in space.min_nbhd]
    k = len(members)
    sizes = [bits.size(m) for m in members]
    above = [0] * k  # above[i]: classes strictly greater than class i
    for i, m in enumerate(members):
        x = (m & -m).bit_length() - 1
        for y in bits.members(space.min_nbhd[x]):
            j = cls_of[y]
            if j != i:
                above[i] |= 1 << j
    below = [0] * k
    for i in range(k):
        for j in bits.members(above[i]):
            below[j] |= 1 << i
    return sizes, above, below


def _refine(colors: list[int], above: list[int], below: list[int]) -> list[int]:
    """Equitable refinement; colours stay canonical because new colours are
    assigned by sorting signatures built only from old colours."""
    k = len(colors)
    while True:
        sigs = []
        for v in range(k):
            ups = tuple(sorted(colors[w] for w in bits.members(above[v])))
            downs = tuple(sorted(colors[w] for w in bits.members(below[v])))
            sigs.append((colors[v], ups, downs))
        order = sorted(set(sigs))
        rank = {s: i for i, s in enumerate(order)}
        new = [rank[s] for s in sigs]
        if len(order) == len(set(colors)):
            return new
        colors = new


def _encode(perm: list[int], sizes: list[int], above: list[int]) -> bytes:
    # perm[v] = canonical position of class v
    k = len(perm)
    inv = [0] * k
    for v, p in enumerate(perm):
        inv[p] = v
    out = bytearray([k])
    out.extend(sizes[inv[p]] for p in range(k))
    for p in range(k):
        row = 0
        for q in range(k):
            if above[inv[p]] >> inv[q] & 1:
                row |= 1 << q
        out.extend(row.to_bytes(8, "big"))
    return bytes(out)


def canonical_form(space: Space) -> CanonicalForm:
    """Byte string equal for two spaces exactly when they are homeomorphic."""
    sizes, above, below = _quotient(space)
    k = len(sizes)
    if k == 0:
        return bytes([0])
    best: list[bytes] = []

    def search(colors: list[int]) -> None:
        colors = _refine(colors, above, below)
        if len(set(colors)) == k:
            code = _encode(colors, sizes, above)
            if not best or code < best[0]:
                best[:] = [code]
            return
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min(c for c, m in counts.items() if m > 1)
        cell = [v for v in range(k) if colors[v] == target]
        tried_twins = set()
        for v in cell:
            # classes with identical neighbourhoods are interchangeable; one suffices
            twin_key = (above[v], below[v])
            if twin_key in tried_twins:
                continue
            tried_twins.add(twin_key)
            # v keeps 2t, its cell-mates move to 2t + 1; all other colours keep their order
            search([2 * c + (c == target and w != v) for w, c in enumerate(colors)])

    search(list(sizes))
    return best[0]


def is_homeomorphic(a: Space, b: Space) -> bool:
    return a.n == b.n and canonical_form(a) == canonical_form(b)


@dataclass
class TopologyClass:
    form: CanonicalForm
    representative: Space
    labeled_count: int


def enumerate_classes(n: int, predicate: Callable[[Space], bool] | None = None,
                      max_n: int = MAX_N, labels=None) -> list[TopologyClass]:
    """Homeomorphism classes on ``n`` points, sorted by canonical form.

    The representative of each class is the first member met by
    :func:`enumerate_labeled`; ``predicate`` filters labeled spaces before
    grouping (every property used here is invariant under homeomorphism).
    """
    _check_range(n, max_n)
    found: dict[bytes, TopologyClass] = {}
    for space in enumerate_labeled(n, max_n, labels):
        if predicate is not None and not predicate(space):
            continue
        form = canonical_form(space)
        entry = found.get(form)
        if entry is None:
            found[form] = TopologyClass(form, space, 1)
        else:
            entry.labeled_count += 1
    return [found[f] for f in sorted(found)]
