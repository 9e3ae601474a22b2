"""Exhaustive catalogs of double squares and the couple-free check on primes."""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .bn import FORM_PALINDROMES, FORM_PATTERNS, FormParams, as_double_square, build_from_form
from .errors import BoundTooSmall, FormatError, TooManyFactorizations
from .morphism import reduction
from .polyomino import BoundaryWord, signed_area
from .words import (
    _VECTORS,
    ALPHABET,
    canonical_rotation,
    hat,
    is_couple_free,
    is_palindrome,
)
from . import bn

log = logging.getLogger(__name__)

DEDUP_MODES = ("rotation", "dihedral")
HEADER = "#tileforge-catalog v1 max={max} dedup={dedup}"
EMPTY = "ε"
ABSENT = "-"


@dataclass(frozen=True)
class CatalogEntry:
    canonical_word: str
    perimeter: int
    area: int
    prime: bool
    couple_free: bool
    form: str | None = None
    params: FormParams | None = None

    @property
    def sort_key(self):
        return (self.perimeter, self.canonical_word)


@dataclass
class Catalog:
    entries: list[CatalogEntry]
    max_perimeter: int
    dedup: str = "rotation"
    # how each entry reduces when it is not prime; not persisted
    reductions: dict = field(default_factory=dict, compare=False, repr=False)

    def words(self) -> list[str]:
        return [e.canonical_word for e in self.entries]

    def primes(self) -> list[CatalogEntry]:
        return [e for e in self.entries if e.prime]

    def by_perimeter(self, perimeter: int) -> list[CatalogEntry]:
        return [e for e in self.entries if e.perimeter == perimeter]


# the dihedral group of the grid acting on letters, as (translation, reverses orientation)
_SYMMETRIES = [
    (str.maketrans("0123", "0123"), False),
    (str.maketrans("0123", "1230"), False),
    (str.maketrans("0123", "2301"), False),
    (str.maketrans("0123", "3012"), False),
    (str.maketrans("0123", "0321"), True),
    (str.maketrans("0123", "1032"), True),
    (str.maketrans("0123", "2103"), True),
    (str.maketrans("0123", "3210"), True),
]


def dihedral_canonical(w: str) -> str:
    """Least canonical rotation over the eight grid symmetries, kept counterclockwise."""
    images = []
    for table, flips in _SYMMETRIES:
        t = w.translate(table)
        images.append(canonical_rotation(hat(t) if flips else t))
    return min(images)


def _dedup_key(w: str, dedup: str) -> str:
    return dihedral_canonical(w) if dedup == "dihedral" else w


def _check_bound(max_perimeter: int):
    if max_perimeter < 8 or max_perimeter % 2:
        raise BoundTooSmall(f"max perimeter must be even and at least 8, got {max_perimeter}")


def _walks(length: int, prefix: str = ""):
    """Self-avoiding walks of the given length that extend ``prefix``."""
    x = y = 0
    seen = {(0, 0)}
    for c in prefix:
        dx, dy = _VECTORS[c]
        x, y = x + dx, y + dy
        if (x, y) in seen:
            return
        seen.add((x, y))
    letters = list(prefix)

    def rec(x, y):
        if len(letters) == length:
            yield "".join(letters)
            return
        for c in ALPHABET:
            dx, dy = _VECTORS[c]
            q = (x + dx, y + dy)
            if q in seen:
                continue
            seen.add(q)
            letters.append(c)
            yield from rec(*q)
            letters.pop()
            seen.discard(q)

    yield from rec(x, y)


def _closes_simply(half: str, tail: str) -> bool:
    """Whether ``half + tail`` (a closed word) visits no vertex twice.

    ``half`` must already be self-avoiding.
    """
    x = y = 0
    seen = {(0, 0)}
    for c in half:
        dx, dy = _VECTORS[c]
        x, y = x + dx, y + dy
        seen.add((x, y))
    for c in tail[:-1]:
        dx, dy = _VECTORS[c]
        x, y = x + dx, y + dy
        if (x, y) in seen:
            return False
        seen.add((x, y))
    return True


def _double_squares_from_prefix(args) -> list[str]:
    """Canonical double squares ``A B hat(A) hat(B)`` with ``A B`` extending a prefix."""
    half, prefix = args
    found = set()
    seen = set()
    for ab in _walks(half, prefix):
        for a in range(1, half):
            tail = hat(ab[:a]) + hat(ab[a:])
            if not _closes_simply(ab, tail):
                continue
            word = ab + tail
            # the clockwise twin is produced from the (B, A) split
            if signed_area(word) <= 0:
                continue
            c = canonical_rotation(word)
            if c in seen:
                continue
            seen.add(c)
            nfac = len(bn.find_square_factorizations(c))
            if nfac > 2:
                raise TooManyFactorizations(f"{c} has {nfac} square factorizations")
            if nfac == 2:
                found.add(c)
    return sorted(found)


def _shards(half: int, depth: int = 3):
    depth = min(depth, half)
    return [(half, p) for p in _walks(depth)]


def _run(tasks, fn, workers: int):
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, tasks))
    return [fn(t) for t in tasks]


def bruteforce_words(max_perimeter: int, workers: int = 1) -> list[str]:
    """Canonical words of every double square with perimeter at most ``max_perimeter``."""
    _check_bound(max_perimeter)
    words = set()
    for half in range(4, max_perimeter // 2 + 1):
        for chunk in _run(_shards(half), _double_squares_from_prefix, workers):
            words.update(chunk)
        log.debug("half-perimeter %d: %d double squares so far", half, len(words))
    return sorted(words, key=lambda w: (len(w), w))


def make_entry(word: str) -> tuple[CatalogEntry, object]:
    """Catalog entry for a canonical double-square word, with its reduction if any."""
    P = BoundaryWord(word)
    s = as_double_square(P)
    red = reduction(P)
    entry = CatalogEntry(
        canonical_word=word,
        perimeter=len(word),
        area=signed_area(word),
        prime=red is None,
        couple_free=is_couple_free(word),
        form=s.form,
        params=s.params,
    )
    return entry, red


def _build_catalog(words, max_perimeter, dedup, workers) -> Catalog:
    if dedup not in DEDUP_MODES:
        raise ValueError(f"unknown dedup mode {dedup!r}")
    # the dihedral key is itself a counterclockwise canonical word of the class
    chosen = sorted({_dedup_key(w, dedup) for w in words}, key=lambda w: (len(w), w))
    results = _run(chosen, make_entry, workers)
    entries = [e for e, _ in results]
    reductions = {e.canonical_word: r for e, r in results if r is not None}
    return Catalog(entries, max_perimeter, dedup, reductions)


def enumerate_bruteforce(max_perimeter: int, dedup: str = "rotation", workers: int = 1) -> Catalog:
    """Every double square up to ``max_perimeter``, from all ``(A, B)`` pairs.

    Each double square has a square factorization, so building
    ``A B hat(A) hat(B)`` for every self-avoiding ``A B`` reaches all of them.
    """
    return _build_catalog(bruteforce_words(max_perimeter, workers), max_perimeter, dedup, workers)


def _palindromic_walks(length: int) -> list[str]:
    return [w for w in _walks(length) if is_palindrome(w)]


def _half_length(lu1, lu3, lk, lp, n):
    """Length of ``w1 w2 w3 w4`` for the given parameter lengths and exponents."""
    n1, n2, n3, n4 = n
    return (
        n1 * (2 * lu1 + lk + lp) + lu1
        + n2 * (lu3 + lu1) + lk + lu1
        + n3 * (lp + 2 * lu1 + lk) + lu3
        + n4 * (lu1 + lu3) + lu1 + lp
    )


def _exponent_choices(tag, lengths, half):
    """Exponent tuples fitting ``tag`` whose half-word stays within ``half``."""
    pattern = next(p for p, t in FORM_PATTERNS.items() if t == tag)
    base = _half_length(*lengths, (0, 0, 0, 0))
    ranges = []
    for i, positive in enumerate(pattern):
        if not positive:
            ranges.append((0,))
            continue
        unit = _half_length(*lengths, tuple(int(j == i) for j in range(4))) - base
        # an empty repeated block makes every exponent give the same word
        top = 1 if unit == 0 else (half - base) // unit
        ranges.append(range(1, top + 1))
    for n in itertools.product(*ranges):
        if _half_length(*lengths, n) <= half:
            yield n


def parametric_candidates(max_perimeter: int):
    """Yield ``(tag, params, word)`` for every template instance within the bound.

    Parameter words range over self-avoiding walks (a factor of a boundary
    word must be one); ``k`` and ``p`` additionally range over palindromes
    where the form demands it.
    """
    half = max_perimeter // 2
    walks = {L: list(_walks(L)) for L in range(half + 1)}
    pals = {L: _palindromic_walks(L) for L in range(half + 1)}
    for tag in "abcdefg":
        needs = FORM_PALINDROMES[tag]
        for lu1 in range(half // 3 + 1):
            for lu3 in range(half + 1):
                for lk in range(1, half + 1):
                    for lp in range(1, half + 1):
                        if 3 * lu1 + lu3 + lk + lp > half:
                            continue
                        exps = list(_exponent_choices(tag, (lu1, lu3, lk, lp), half))
                        if not exps:
                            continue
                        ks = pals[lk] if "k" in needs else walks[lk]
                        ps = pals[lp] if "p" in needs else walks[lp]
                        for u1, u3, k, p in itertools.product(walks[lu1], walks[lu3], ks, ps):
                            for n in exps:
                                params = FormParams(u1, u3, k, p, n)
                                yield tag, params, build_from_form(tag, params)


def _half_is_simple(word: str) -> bool:
    x = y = 0
    seen = {(0, 0)}
    for c in word[: len(word) // 2]:
        dx, dy = _VECTORS[c]
        x, y = x + dx, y + dy
        if (x, y) in seen:
            return False
        seen.add((x, y))
    return True


def parametric_words(max_perimeter: int) -> list[str]:
    _check_bound(max_perimeter)
    found = set()
    tried = set()
    for _, _, word in parametric_candidates(max_perimeter):
        if not word or len(word) > max_perimeter or not _half_is_simple(word):
            continue
        if not _closes_simply(word[: len(word) // 2], word[len(word) // 2:]):
            continue
        if signed_area(word) < 0:
            word = hat(word)
        c = canonical_rotation(word)
        if c in tried:
            continue
        tried.add(c)
        if signed_area(c) != 0 and len(bn.find_square_factorizations(c)) == 2:
            found.add(c)
    return sorted(found, key=lambda w: (len(w), w))


def enumerate_parametric(max_perimeter: int, dedup: str = "rotation", workers: int = 1) -> Catalog:
    """Double squares produced by instantiating the seven forms.

    Every prime double square is expected here; non-prime ones may appear too.
    """
    return _build_catalog(parametric_words(max_perimeter), max_perimeter, dedup, workers)


@dataclass
class ConjectureReport:
    max_perimeter: int
    rows: list[tuple[int, int, int, int]]
    counterexamples: list[CatalogEntry]
    catalog: Catalog

    @property
    def ok(self) -> bool:
        return not self.counterexamples and all(r[2] == r[3] for r in self.rows)

    def tsv(self) -> str:
        lines = ["perimeter\tdouble_squares\tprime\tprime_couple_free"]
        lines += ["\t".join(map(str, r)) for r in self.rows]
        return "\n".join(lines)


def verify_conjecture(max_perimeter: int, workers: int = 1, catalog: Catalog | None = None) -> ConjectureReport:
    """Check that every prime double square up to the bound is couple-free."""
    _check_bound(max_perimeter)
    cat = catalog if catalog is not None else enumerate_bruteforce(max_perimeter, workers=workers)
    total, prime, prime_cf = Counter(), Counter(), Counter()
    bad = []
    for e in cat.entries:
        total[e.perimeter] += 1
        if e.prime:
            prime[e.perimeter] += 1
            if e.couple_free:
                prime_cf[e.perimeter] += 1
            else:
                bad.append(e)
    rows = [(p, total[p], prime[p], prime_cf[p]) for p in range(8, max_perimeter + 1, 2)]
    return ConjectureReport(max_perimeter, rows, bad, cat)


def _fmt_word(w: str | None) -> str:
    if w is None:
        return ABSENT
    return w or EMPTY


def format_entry(e: CatalogEntry) -> str:
    p = e.params
    fields = [
        e.canonical_word,
        str(e.perimeter),
        str(e.area),
        str(int(e.prime)),
        str(int(e.couple_free)),
        e.form or ABSENT,
    ]
    if p is None:
        fields += [ABSENT] * 8
    else:
        fields += [_fmt_word(x) for x in (p.u1, p.u3, p.k, p.p)] + [str(x) for x in p.n]
    return "\t".join(fields)


def dumps(c: Catalog) -> str:
    lines = [HEADER.format(max=c.max_perimeter, dedup=c.dedup)]
    lines += [format_entry(e) for e in c.entries]
    return "\n".join(lines) + "\n"


def save(c: Catalog, path) -> None:
    Path(path).write_text(dumps(c), encoding="utf-8")


def _parse_word(s: str, lineno: int, what: str) -> str:
    if s == EMPTY:
        return ""
    if not s or set(s) - set(ALPHABET):
        raise FormatError(f"bad {what} {s!r}", lineno)
    return s


def _parse_flag(s: str, lineno: int, what: str) -> bool:
    if s not in ("0", "1"):
        raise FormatError(f"{what} must be 0 or 1, got {s!r}", lineno)
    return s == "1"


def _parse_int(s: str, lineno: int, what: str) -> int:
    try:
        return int(s)
    except ValueError:
        raise FormatError(f"{what} must be an integer, got {s!r}", lineno) from None


def parse_entry(line: str, lineno: int) -> CatalogEntry:
    fields = line.split("\t")
    if len(fields) != 14:
        raise FormatError(f"expected 14 tab-separated fields, got {len(fields)}", lineno)
    word = _parse_word(fields[0], lineno, "word")
    if not word or len(word) % 2:
        raise FormatError(f"word {word!r} has odd or zero length", lineno)
    if canonical_rotation(word) != word:
        raise FormatError(f"word {word} is not in canonical rotation", lineno)
    perimeter = _parse_int(fields[1], lineno, "perimeter")
    if perimeter != len(word):
        raise FormatError(f"perimeter {perimeter} does not match word length {len(word)}", lineno)
    area = _parse_int(fields[2], lineno, "area")
    prime = _parse_flag(fields[3], lineno, "prime")
    cf = _parse_flag(fields[4], lineno, "couple_free")
    form = fields[5]
    rest = fields[6:]
    if form == ABSENT:
        if any(x != ABSENT for x in rest):
            raise FormatError("parameters given without a form", lineno)
        params = None
        form = None
    elif form in "abcdefg" and len(form) == 1:
        u1, u3, k, p = (_parse_word(x, lineno, "parameter") for x in rest[:4])
        n = tuple(_parse_int(x, lineno, "exponent") for x in rest[4:])
        params = FormParams(u1, u3, k, p, n)
    else:
        raise FormatError(f"unknown form {form!r}", lineno)
    return CatalogEntry(word, perimeter, area, prime, cf, form, params)


def loads(text: str) -> Catalog:
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty catalog file", 1)
    head = lines[0].split()
    if len(head) != 4 or head[0] != "#tileforge-catalog" or head[1] != "v1":
        raise FormatError("missing '#tileforge-catalog v1' header", 1)
    try:
        opts = dict(item.split("=", 1) for item in head[2:])
        max_perimeter = int(opts["max"])
        dedup = opts["dedup"]
    except (KeyError, ValueError):
        raise FormatError("header needs max=<N> and dedup=<mode>", 1) from None
    if dedup not in DEDUP_MODES:
        raise FormatError(f"unknown dedup mode {dedup!r}", 1)
    entries = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        e = parse_entry(line, lineno)
        if entries and e.sort_key <= entries[-1].sort_key:
            raise FormatError("entries out of (perimeter, word) order or duplicated", lineno)
        entries.append(e)
    return Catalog(entries, max_perimeter, dedup)


def load(path) -> Catalog:
    return loads(Path(path).read_text(encoding="utf-8"))
