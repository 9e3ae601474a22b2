"""Homologous morphisms, preimage search and primality.

A homologous morphism is fixed by the images of ``'0'`` and ``'1'``;
the conjugate letters map to the hats of those images, which makes the
morphism commute with :func:`~tileforge.words.hat`.

Primality only looks for preimages among double squares.  Over arbitrary
source words every boundary would be reducible (send a single letter to
the whole word), so reduction is understood inside the class.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bn import DoubleSquareStructure, as_double_square, is_double_square
from .errors import NotADoubleSquare, TileError
from .polyomino import BoundaryWord, _as_word, validate
from .words import _VECTORS, canonical_rotation, check_word, hat, rotation_offset

_PAIR = {"0": 0, "2": 0, "1": 1, "3": 1}


@dataclass(frozen=True, order=True)
class HomologousMorphism:
    img0: str
    img1: str

    def __post_init__(self):
        if not self.img0 or not self.img1:
            raise TileError("morphism images must be nonempty")
        check_word(self.img0)
        check_word(self.img1)

    def table(self) -> dict[str, str]:
        return {"0": self.img0, "1": self.img1, "2": hat(self.img0), "3": hat(self.img1)}

    def __call__(self, w: str) -> str:
        return apply(self, w)

    def is_identity(self) -> bool:
        return self.img0 == "0" and self.img1 == "1"


IDENTITY = HomologousMorphism("0", "1")


def apply(phi: HomologousMorphism, w: str) -> str:
    t = phi.table()
    return "".join(t[c] for c in _as_word(w))


def compose(outer: HomologousMorphism, inner: HomologousMorphism) -> HomologousMorphism:
    """The morphism ``w -> outer(inner(w))``."""
    return HomologousMorphism(apply(outer, inner.img0), apply(outer, inner.img1))


def trivial_morphism(s: DoubleSquareStructure, which: str = "f1") -> HomologousMorphism:
    """``0 -> A``, ``1 -> B`` for one of the two square factorizations of ``s``."""
    f = {"f1": s.f1, "f2": s.f2}[which]
    return HomologousMorphism(f.A, f.B)


@dataclass(frozen=True)
class Preimage:
    """``apply(phi, source)`` equals the target rotated left by ``offset``."""

    phi: HomologousMorphism
    source: str
    offset: int

    def sort_key(self):
        return (len(self.source), canonical_rotation(self.source), len(self.phi.img0),
                self.phi.img0, self.phi.img1)


def _parse(target: str, max_len: int):
    """Every way to read ``target`` as ``phi(U)`` with ``U`` starting by ``'0'``.

    ``U`` is kept self-avoiding as it grows, since a boundary word is.
    Yields ``(img0, img1, U)``.
    """
    n = len(target)
    images = [None, None]
    letters: list[str] = []
    seen = {(0, 0)}

    def rec(pos, x, y):
        if pos == n:
            if images[1] is not None and (x, y) == (0, 0):
                yield images[0], images[1], "".join(letters)
            return
        if len(letters) >= max_len:
            return
        for c in ("0", "1", "2", "3") if letters else ("0",):
            dx, dy = _VECTORS[c]
            nx, ny = x + dx, y + dy
            closing = (nx, ny) == (0, 0)
            if (nx, ny) in seen and not closing:
                continue
            pair = _PAIR[c]
            bound = images[pair]
            if bound is not None:
                img = bound if c in "01" else hat(bound)
                if not target.startswith(img, pos) or (closing and pos + len(img) != n):
                    continue
                choices = [(img, False)]
            else:
                choices = []
                for end in range(pos + 1, n + 1):
                    if closing and end != n:
                        continue
                    img = target[pos:end]
                    choices.append((img, True))
            for img, fresh in choices:
                if fresh:
                    images[pair] = img if c in "01" else hat(img)
                letters.append(c)
                seen.add((nx, ny))
                yield from rec(pos + len(img), nx, ny)
                seen.discard((nx, ny))
                letters.pop()
                if fresh:
                    images[pair] = None

    yield from rec(0, 0, 0)


def iter_preimages(P, min_len: int, max_len: int):
    """Lazily yield preimages of ``P`` in rotation order; may repeat."""
    w = _as_word(P)
    for r in range(len(w)):
        target = w[r:] + w[:r]
        for img0, img1, U in _parse(target, max_len):
            if not min_len <= len(U) <= max_len:
                continue
            phi = HomologousMorphism(img0, img1)
            if phi.is_identity() or not is_double_square(U):
                continue
            yield Preimage(phi, U, r)


def find_preimages(P, min_len: int, max_len: int) -> list[Preimage]:
    """All ``(phi, U)`` with ``U`` a double square and ``phi(U)`` a rotation of ``P``.

    Duplicates differing only by where ``U`` is read from are merged.
    Sorted by ``(|U|, canonical U, |img0|)``.
    """
    best = {}
    for pre in iter_preimages(P, min_len, max_len):
        key = (canonical_rotation(pre.source), pre.phi)
        if key not in best:
            best[key] = pre
    return sorted(best.values(), key=Preimage.sort_key)


def verify_preimage(P, pre: Preimage) -> bool:
    """Independent check that ``pre`` maps onto ``P`` up to rotation.

    Plain strings are oriented counterclockwise first, as in :func:`reduction`.
    """
    Q = P if isinstance(P, BoundaryWord) else validate(P)
    return rotation_offset(Q.word, apply(pre.phi, pre.source)) is not None


def _require_double_square(P) -> BoundaryWord:
    Q = P if isinstance(P, BoundaryWord) else validate(P)
    if as_double_square(Q, classify=False) is None:
        raise NotADoubleSquare(f"{Q.word} is not a double square")
    return Q


def reduction(P) -> Preimage | None:
    """One preimage through a strictly smaller double square, if any."""
    Q = _require_double_square(P)
    return next(iter_preimages(Q, 5, len(Q) - 1), None)


def is_prime(P) -> bool:
    return reduction(P) is None
