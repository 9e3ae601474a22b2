"""Beauquier-Nivat factorizations and the structure of double squares.

A square factorization is identified by its four cut positions on the
circular boundary word, a hexagon factorization by its six.  Two cut
sets that differ only by where reading starts are the same factorization.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    BadExponentPattern,
    ClassificationFailure,
    StructureViolation,
    TooManyFactorizations,
)
from .polyomino import BoundaryWord, _as_word, validate
from .words import conjugate, hat, is_palindrome, period_split, reversal, same_circular


def _arc(w: str, start: int, stop: int) -> str:
    """Letters of the circular word ``w`` from cut ``start`` up to cut ``stop``."""
    n = len(w)
    start %= n
    stop %= n
    if stop > start:
        return w[start:stop]
    return w[start:] + w[:stop]


@dataclass(frozen=True)
class SquareFactorization:
    """``P = A B hat(A) hat(B)`` read from the smallest cut."""

    word: str
    cuts: tuple[int, int, int, int]

    @property
    def A(self) -> str:
        return _arc(self.word, self.cuts[0], self.cuts[1])

    @property
    def B(self) -> str:
        return _arc(self.word, self.cuts[1], self.cuts[2])

    def is_consistent(self) -> bool:
        c = self.cuts
        w = self.word
        return (
            len(set(c)) == 4
            and _arc(w, c[2], c[3]) == hat(self.A)
            and _arc(w, c[3], c[0]) == hat(self.B)
        )


@dataclass(frozen=True)
class HexFactorization:
    """``P = X1 X2 X3 hat(X1) hat(X2) hat(X3)`` read from the smallest cut."""

    word: str
    cuts: tuple[int, int, int, int, int, int]

    @property
    def factors(self) -> tuple[str, str, str]:
        c = self.cuts
        return tuple(_arc(self.word, c[i], c[i + 1]) for i in range(3))


def find_square_factorizations(P) -> set[SquareFactorization]:
    w = _as_word(P)
    n = len(w)
    if n < 4 or n % 2:
        return set()
    h = n // 2
    ww = w + w
    # hat(ww[i:j]) == rr[2n - j: 2n - i]
    rr = hat(ww)
    found = set()
    # every cut set contains a position below h, so c < h is exhaustive
    for c in range(h):
        for a in range(1, h):
            if ww[c + h: c + h + a] != rr[2 * n - c - a: 2 * n - c]:
                continue
            if ww[c + h + a: c + n] != rr[2 * n - c - h: 2 * n - c - a]:
                continue
            cuts = tuple(sorted({c, c + a, (c + h) % n, (c + h + a) % n}))
            found.add(SquareFactorization(w, cuts))
    return found


def find_hexagon_factorizations(P) -> set[HexFactorization]:
    w = _as_word(P)
    n = len(w)
    if n < 6 or n % 2:
        return set()
    h = n // 2
    ww = w + w
    found = set()
    for c in range(h):
        for a in range(1, h - 1):
            x1 = ww[c: c + a]
            if ww[c + h: c + h + a] != hat(x1):
                continue
            for b in range(1, h - a):
                x2 = ww[c + a: c + a + b]
                x3 = ww[c + a + b: c + h]
                if ww[c + h + a: c + h + a + b] == hat(x2) and ww[c + h + a + b: c + n] == hat(x3):
                    pos = {c, c + a, c + a + b, c + h, c + h + a, c + h + a + b}
                    found.add(HexFactorization(w, tuple(sorted(p % n for p in pos))))
    return found


FORM_PATTERNS = {
    (False, False, False, False): "a",
    (True, False, False, False): "b",
    (False, True, False, False): "c",
    (False, False, True, False): "d",
    (False, False, False, True): "e",
    (True, False, True, False): "f",
    (False, True, False, True): "g",
}
_PATTERN_OF = {tag: pat for pat, tag in FORM_PATTERNS.items()}

# which of k, p must be palindromes in each form
FORM_PALINDROMES = {
    "a": ("k", "p"),
    "b": ("k", "p"),
    "c": ("p",),
    "d": ("k", "p"),
    "e": ("k",),
    "f": ("k", "p"),
    "g": (),
}


@dataclass(frozen=True, order=True)
class FormParams:
    u1: str
    u3: str
    k: str
    p: str
    n: tuple[int, int, int, int]

    def astuple(self):
        return (self.u1, self.u3, self.k, self.p, *self.n)


@dataclass(frozen=True)
class DoubleSquareStructure:
    P: BoundaryWord
    f1: SquareFactorization
    f2: SquareFactorization
    w: tuple[str, ...]
    u: tuple[str, ...]
    v: tuple[str, ...]
    n: tuple[int, ...]
    form: str | None = None
    params: FormParams | None = None
    # cyclic shift of ``w`` under which ``params`` were read off
    shift: int | None = field(default=None, compare=False)

    @property
    def factors(self) -> tuple[str, str, str, str]:
        """The BN factors ``A, B, X, Y``."""
        w = self.w
        return w[0] + w[1], w[2] + w[3], w[1] + w[2], w[3] + w[4]


def extract_w8(f1: SquareFactorization, f2: SquareFactorization, P) -> tuple[str, ...]:
    """Cut the boundary at the eight positions of two square factorizations.

    Segments are listed from the smallest cut of ``f1``, so that
    ``w1 w2 = A`` and ``w3 w4 = B`` for ``f1``.
    """
    w = _as_word(P)
    merged = sorted([(c, 0) for c in f1.cuts] + [(c, 1) for c in f2.cuts])
    pos = [c for c, _ in merged]
    owners = [o for _, o in merged]
    if len(set(pos)) != 8:
        raise StructureViolation(f"factorizations of {w} share a cut")
    if any(owners[i] == owners[i + 1] for i in range(7)):
        raise StructureViolation(f"cuts of the two factorizations of {w} do not alternate")
    start = pos.index(f1.cuts[0])
    pos = pos[start:] + pos[:start]
    return tuple(_arc(w, pos[i], pos[(i + 1) % 8]) for i in range(8))


def extract_uvn(w):
    """Split each segment as ``(u v)**n u`` with ``u v = hat(w[i-3]) w[i-1]``."""
    u, v, n = [], [], []
    for i in range(8):
        q = hat(w[(i - 3) % 8]) + w[(i - 1) % 8]
        split = period_split(w[i], q)
        if split is None:
            raise StructureViolation(f"w{i + 1}={w[i]!r} does not have period {q!r}")
        ni, ui = split
        u.append(ui)
        v.append(q[len(ui):])
        n.append(ni)
    return tuple(u), tuple(v), tuple(n)


def _check_structure(w, u, v, n):
    for i in range(4):
        if w[i + 4] != conjugate(w[i]):
            raise StructureViolation(f"w{i + 5} is not the conjugate of w{i + 1}")
        if u[i + 4] != conjugate(u[i]) or v[i + 4] != conjugate(v[i]) or n[i + 4] != n[i]:
            raise StructureViolation(f"(u, v, n) not conjugate-symmetric at index {i + 1}")
    for i in range(8):
        if (u[i] + v[i]) * n[i] + u[i] != w[i]:
            raise StructureViolation(f"w{i + 1} does not reassemble")


def as_double_square(P, classify: bool = True) -> DoubleSquareStructure | None:
    """The full double-square structure of ``P``, or ``None`` if ``P`` is not one.

    With ``classify`` set, the form tag and parameters are filled in when
    the word fits one of the seven forms; they stay ``None`` otherwise.
    """
    P = P if isinstance(P, BoundaryWord) else validate(P)
    facs = find_square_factorizations(P)
    if len(facs) > 2:
        raise TooManyFactorizations(f"{P.word} has {len(facs)} square factorizations")
    if len(facs) < 2:
        return None
    f1, f2 = sorted(facs, key=lambda f: f.cuts)
    w = extract_w8(f1, f2, P)
    u, v, n = extract_uvn(w)
    _check_structure(w, u, v, n)
    s = DoubleSquareStructure(P, f1, f2, w, u, v, n)
    if classify:
        try:
            tag, params, shift = _classify(w)
        except ClassificationFailure:
            return s
        s = DoubleSquareStructure(P, f1, f2, w, u, v, n, tag, params, shift)
    return s


def _derive_params(u, n) -> tuple[str, FormParams]:
    u1, u2, u3, u4 = u[:4]
    pattern = tuple(x > 0 for x in n[:4])
    if pattern not in FORM_PATTERNS:
        raise ClassificationFailure(f"two consecutive positive exponents in {n[:4]}")
    tag = FORM_PATTERNS[pattern]
    ru1 = reversal(u1)
    if not u2.endswith(ru1):
        raise ClassificationFailure(f"u2={u2!r} does not end with reversal(u1)={ru1!r}")
    k = u2[: len(u2) - len(ru1)]
    hu1 = hat(u1)
    if not u4.startswith(hu1):
        raise ClassificationFailure(f"u4={u4!r} does not start with hat(u1)={hu1!r}")
    p = conjugate(u4[len(hu1):])
    if not k or not p:
        raise ClassificationFailure("k and p must be nonempty")
    for name in FORM_PALINDROMES[tag]:
        if not is_palindrome(k if name == "k" else p):
            raise ClassificationFailure(f"form {tag} needs {name} to be a palindrome")
    return tag, FormParams(u1, u3, k, p, tuple(n[:4]))


def _classify(w) -> tuple[str, FormParams, int]:
    candidates = []
    for shift in range(8):
        ws = w[shift:] + w[:shift]
        u, _, n = extract_uvn(ws)
        if any(len(u[0]) > len(x) for x in u[1:4]):
            continue
        try:
            tag, params = _derive_params(u, n)
        except ClassificationFailure as exc:
            candidates.append((None, exc, shift))
            continue
        if build_from_form(tag, params) != "".join(ws):
            candidates.append((None, ClassificationFailure(f"form {tag} does not rebuild"), shift))
            continue
        candidates.append((params.astuple(), (tag, params), shift))
    good = [c for c in candidates if c[0] is not None]
    if not good:
        raise candidates[0][1]
    _, (tag, params), shift = min(good)
    return tag, params, shift


def classify_form(s: DoubleSquareStructure) -> tuple[str, FormParams]:
    """Tag ``s`` with one of the forms a-g and read off its parameters.

    The eight cyclic shifts of the segment tuple are candidates; those
    with ``|u1|`` minimal are kept and the lexicographically least
    parameter tuple wins.
    """
    tag, params, _ = _classify(s.w)
    return tag, params


def build_from_form(tag: str, params: FormParams) -> str:
    """Concatenate the template of form ``tag``; the result is not validated."""
    if tag not in _PATTERN_OF:
        raise BadExponentPattern(f"unknown form {tag!r}")
    n1, n2, n3, n4 = params.n
    if tuple(x > 0 for x in params.n) != _PATTERN_OF[tag]:
        raise BadExponentPattern(f"exponents {params.n} do not fit form {tag}")
    u1, u3, k, p = params.u1, params.u3, params.k, params.p
    ru1, hu1 = reversal(u1), hat(u1)
    w1 = (u1 + k + ru1 + p) * n1 + u1
    w2 = (reversal(u3) + u1) * n2 + k + ru1
    w3 = (conjugate(p) + conjugate(u1) + k + ru1) * n3 + u3
    w4 = (hu1 + u3) * n4 + hu1 + conjugate(p)
    half = w1 + w2 + w3 + w4
    return half + conjugate(half)


def is_double_square(P) -> bool:
    try:
        Q = P if isinstance(P, BoundaryWord) else validate(P)
    except ValueError:
        return False
    return len(find_square_factorizations(Q)) == 2


def structure_matches(s: DoubleSquareStructure) -> bool:
    """True iff ``w1 ... w8`` is a rotation of the boundary word."""
    return same_circular("".join(s.w), s.P.word)
