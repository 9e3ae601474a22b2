"""Words over the four-letter step alphabet.

Letters are encoded as the characters ``'0'`` (east), ``'1'`` (north),
``'2'`` (west, conjugate of ``'0'``) and ``'3'`` (south, conjugate of
``'1'``).  A word is a plain ``str`` over that alphabet; the empty string
is the empty word.
"""

from __future__ import annotations

from enum import Enum

from .errors import EmptyWord, InvalidLetter

ALPHABET = "0123"

_CONJ = str.maketrans("0123", "2301")
_VECTORS = {"0": (1, 0), "1": (0, 1), "2": (-1, 0), "3": (0, -1)}


class Step(Enum):
    E = "0"
    N = "1"
    W = "2"
    S = "3"

    @property
    def vector(self) -> tuple[int, int]:
        return _VECTORS[self.value]

    def conj(self) -> "Step":
        return Step(self.value.translate(_CONJ))


def check_word(w: str) -> str:
    """Return ``w`` unchanged, raising :class:`InvalidLetter` on foreign characters."""
    bad = set(w) - set(ALPHABET)
    if bad:
        raise InvalidLetter(f"letters {''.join(sorted(bad))!r} are not in {ALPHABET!r}")
    return w


def conjugate(w: str) -> str:
    return w.translate(_CONJ)


def reversal(w: str) -> str:
    return w[::-1]


def hat(w: str) -> str:
    """The path ``w`` walked backwards: reversal of the conjugate."""
    return w.translate(_CONJ)[::-1]


def is_palindrome(w: str) -> bool:
    return w == w[::-1]


def is_couple_free(w: str) -> bool:
    """True iff no two cyclically adjacent letters are equal.

    The wrap-around pair counts, so a single letter is never couple-free.
    """
    n = len(w)
    return all(w[i] != w[(i + 1) % n] for i in range(n))


def displacement(w: str) -> tuple[int, int]:
    x = w.count("0") - w.count("2")
    y = w.count("1") - w.count("3")
    return x, y


def rotations(w: str):
    for i in range(len(w)):
        yield w[i:] + w[:i]


def canonical_rotation(w: str) -> str:
    """Lexicographically least rotation under ``'0' < '1' < '2' < '3'``."""
    if not w:
        raise EmptyWord("the empty word has no rotation")
    return min(rotations(w))


def rotation_offset(w: str, target: str) -> int | None:
    """Smallest ``r`` with ``w[r:] + w[:r] == target``, or ``None``."""
    if len(w) != len(target):
        return None
    if not w:
        return 0
    idx = (w + w).find(target)
    return None if idx < 0 else idx


def same_circular(u: str, v: str) -> bool:
    return len(u) == len(v) and (u + u).find(v) >= 0


def period_split(w: str, q: str) -> tuple[int, str] | None:
    """Write ``w`` as ``q**n + u`` with ``u`` a proper prefix of ``q``.

    Returns ``(n, u)`` or ``None`` when ``w`` is not of that shape.
    """
    if not q:
        raise EmptyWord("period word must be nonempty")
    n, r = divmod(len(w), len(q))
    u = w[len(w) - r:]
    if q * n + u == w and q.startswith(u):
        return n, u
    return None


class CircularWord:
    """A word up to rotation; compares and hashes by its canonical rotation."""

    __slots__ = ("word", "canonical")

    def __init__(self, word: str):
        self.word = check_word(word)
        self.canonical = canonical_rotation(word)

    def __eq__(self, other):
        if isinstance(other, CircularWord):
            return self.canonical == other.canonical
        return NotImplemented

    def __hash__(self):
        return hash(self.canonical)

    def __len__(self):
        return len(self.word)

    def __str__(self):
        return self.word

    def __repr__(self):
        return f"CircularWord({self.word!r})"
