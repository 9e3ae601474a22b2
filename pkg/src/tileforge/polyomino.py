"""Boundary-word validation and polyomino geometry."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    DegenerateArea,
    EmptyWord,
    FactorizationMismatch,
    NotClosed,
    SelfIntersecting,
)
from .words import _VECTORS, check_word, displacement, hat


@dataclass(frozen=True)
class BoundaryWord:
    """A validated, counterclockwise boundary word.

    Build instances through :func:`validate`; the constructor does not check.
    """

    word: str

    def __len__(self):
        return len(self.word)

    def __str__(self):
        return self.word

    @cached_property
    def area(self) -> int:
        return signed_area(self.word)

    @property
    def perimeter(self) -> int:
        return len(self.word)


def _as_word(P) -> str:
    return P.word if isinstance(P, BoundaryWord) else P


def trace(P, origin=(0, 0)) -> list[tuple[int, int]]:
    """Vertices visited by the path, starting (and, if closed, ending) at ``origin``."""
    x, y = origin
    pts = [(x, y)]
    for c in _as_word(P):
        dx, dy = _VECTORS[c]
        x += dx
        y += dy
        pts.append((x, y))
    return pts


def signed_area(w: str) -> int:
    """Shoelace area of a closed word; positive for counterclockwise paths."""
    pts = trace(w)
    twice = sum(x0 * y1 - x1 * y0 for (x0, y0), (x1, y1) in zip(pts, pts[1:]))
    return twice // 2


def validate(w) -> BoundaryWord:
    """Check that ``w`` encodes a polyomino boundary and orient it counterclockwise.

    Clockwise inputs are replaced by their hat, which walks the same
    boundary in the opposite direction.
    """
    w = check_word(_as_word(w))
    if not w:
        raise EmptyWord("empty boundary word")
    if displacement(w) != (0, 0):
        raise NotClosed(f"path {w} ends at {displacement(w)}, not at its start")
    pts = trace(w)[:-1]
    if len(set(pts)) != len(pts):
        a = signed_area(w)
        if a == 0 and _is_backtracking(w):
            raise DegenerateArea(f"path {w} encloses no area")
        raise SelfIntersecting(f"path {w} revisits a vertex")
    a = signed_area(w)
    if a == 0:
        raise DegenerateArea(f"path {w} encloses no area")
    if a < 0:
        w = hat(w)
    return BoundaryWord(w)


def _is_backtracking(w: str) -> bool:
    n = len(w)
    return any(w[(i + 1) % n] == hat(w[i]) for i in range(n))


def is_valid(w) -> bool:
    try:
        validate(w)
    except (DegenerateArea, SelfIntersecting, NotClosed, EmptyWord):
        return False
    return True


def counting_self_avoiding(w: str) -> bool:
    """Counting restatement of self-avoidance for a closed word.

    No proper nonempty circular factor may have equal counts of ``a`` and
    its conjugate for both axes at once, i.e. zero displacement.
    """
    n = len(w)
    ww = w + w
    for i in range(n):
        x = y = 0
        for j in range(i, i + n - 1):
            dx, dy = _VECTORS[ww[j]]
            x += dx
            y += dy
            if x == 0 and y == 0:
                return False
    return True


def area(P: BoundaryWord) -> int:
    return abs(signed_area(_as_word(P)))


def rasterize(P, origin=(0, 0)) -> frozenset[tuple[int, int]]:
    """Unit cells enclosed by the boundary, named by their lower-left corner.

    Scanline parity over vertical edges, row by row.
    """
    rows: dict[int, list[int]] = {}
    pts = trace(P, origin)
    for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
        if x0 == x1:
            rows.setdefault(min(y0, y1), []).append(x0)
    cells = set()
    for y, xs in rows.items():
        xs.sort()
        for left, right in zip(xs[::2], xs[1::2]):
            cells.update((x, y) for x in range(left, right))
    return frozenset(cells)


def tiling_patch(P, f, rows: int, cols: int):
    """Translated copies of ``P`` along the lattice spanned by the factors of ``f``.

    Returns a list of ``((tx, ty), cells)`` pairs, copy ``(m, n)`` being
    translated by ``m * d(A) + n * d(B)`` and listed in row-major order.
    """
    w = _as_word(P)
    if f.word != w or not f.is_consistent():
        raise FactorizationMismatch("factorization does not belong to this boundary word")
    (ax, ay), (bx, by) = displacement(f.A), displacement(f.B)
    base = rasterize(w)
    patch = []
    for m in range(rows):
        for n in range(cols):
            tx, ty = m * ax + n * bx, m * ay + n * by
            patch.append(((tx, ty), frozenset((x + tx, y + ty) for x, y in base)))
    return patch


def patch_defects(patch, rows: int, cols: int) -> list[tuple[int, int]]:
    """Cells that break exact coverage of a patch built by :func:`tiling_patch`.

    A cell is a defect if any two copies overlap on it, or if it lies in
    the 8-neighbourhood of an inner copy (one not on the patch border)
    without being covered.
    """
    cover = Counter(c for _, cells in patch for c in cells)
    bad = {c for c, k in cover.items() if k > 1}
    for idx, (_, cells) in enumerate(patch):
        m, n = divmod(idx, cols)
        if not (0 < m < rows - 1 and 0 < n < cols - 1):
            continue
        for x, y in cells:
            for dx in (-1, 0, 1):
                for dy in (-1, 0, 1):
                    c = (x + dx, y + dy)
                    if cover[c] != 1:
                        bad.add(c)
    return sorted(bad)
