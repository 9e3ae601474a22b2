"""Brute-force reference computations, kept apart from the library code paths."""

import itertools

STEP = {"0": (1, 0), "1": (0, 1), "2": (-1, 0), "3": (0, -1)}
OPP = {"0": "2", "1": "3", "2": "0", "3": "1"}


def hat_ref(w):
    return "".join(OPP[c] for c in reversed(w))


def rotations_ref(w):
    return [w[i:] + w[:i] for i in range(len(w))]


def closed_words(n):
    """Every word of length ``n`` whose path returns to its start."""
    for t in itertools.product("0123", repeat=n):
        w = "".join(t)
        if w.count("0") == w.count("2") and w.count("1") == w.count("3"):
            yield w


def self_avoiding_polygons(n):
    """Every closed word of length ``n`` whose vertex trace has no repeat."""
    out = []

    def rec(w, x, y, seen):
        left = n - len(w)
        if abs(x) + abs(y) > left:
            return
        if left == 0:
            out.append(w)
            return
        for c, (dx, dy) in STEP.items():
            q = (x + dx, y + dy)
            if q == (0, 0) and left == 1:
                rec(w + c, *q, seen)
            elif q not in seen:
                seen.add(q)
                rec(w + c, *q, seen)
                seen.discard(q)

    rec("", 0, 0, {(0, 0)})
    return out


def square_cut_sets_ref(w):
    """All square factorizations as cut sets, by trying every rotation and split."""
    n = len(w)
    h = n // 2
    found = set()
    if n % 2:
        return found
    for r, rot in enumerate(rotations_ref(w)):
        for a in range(1, h):
            A, B = rot[:a], rot[a:h]
            if rot == A + B + hat_ref(A) + hat_ref(B):
                found.add(frozenset(p % n for p in (r, r + a, r + h, r + h + a)))
    return found


def cells_inside_ref(w):
    """Cells whose centre lies inside the boundary polygon (ray casting)."""
    pts = [(0, 0)]
    for c in w:
        dx, dy = STEP[c]
        pts.append((pts[-1][0] + dx, pts[-1][1] + dy))
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    cells = set()
    for cx in range(min(xs), max(xs)):
        for cy in range(min(ys), max(ys)):
            px, py = cx + 0.5, cy + 0.5
            inside = False
            for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
                if x0 == x1 and (y0 > py) != (y1 > py) and x0 > px:
                    inside = not inside
            if inside:
                cells.add((cx, cy))
    return cells


def letter_counts(w):
    return w.count("0") + w.count("2"), w.count("1") + w.count("3")


def reductions_by_length_equation(P, smaller):
    """Preimages of ``P`` through words in ``smaller``, found by image-length arithmetic.

    For each candidate ``Q`` (and its reverse traversal) solve
    ``|P| = n0 * m0 + n1 * m1`` for image lengths, then read the images off
    every rotation of ``P`` and keep consistent alignments.
    """
    n = len(P)
    hits = []
    for Q0 in smaller:
        for Q in (Q0, hat_ref(Q0)):
            n0, n1 = letter_counts(Q)
            for m0 in range(1, n):
                rest = n - n0 * m0
                if rest <= 0 or rest % n1:
                    continue
                m1 = rest // n1
                for r in range(n):
                    rot = P[r:] + P[:r]
                    img, pos, ok = {}, 0, True
                    for c in Q:
                        m = m0 if c in "02" else m1
                        piece = rot[pos:pos + m]
                        pos += m
                        key = "0" if c in "02" else "1"
                        if c in "23":
                            piece = hat_ref(piece)
                        if img.setdefault(key, piece) != piece:
                            ok = False
                            break
                    if ok:
                        hits.append((Q, img["0"], img["1"], r))
    return hits


def nonempty_words(max_len):
    return ["".join(t) for L in range(1, max_len + 1) for t in itertools.product("0123", repeat=L)]


def rev(w):
    return w[::-1]


def palindrome_equation_violations(triples):
    """Counterexamples to: both palindromes implies b = rev(a) and u a palindrome.

    The variant with ``rev(a) u rev(b)`` and ``conj(b) rev(u) conj(a)``
    is the same statement: the first word reverses to ``b rev(u) a`` and
    conjugation preserves palindromes.
    """
    bad = []
    for a, b, u in triples:
        first = b + rev(u) + a
        if first != first[::-1]:
            continue
        second = b + hat_ref(u) + a
        if second == second[::-1] and (b != rev(a) or u != rev(u)):
            bad.append((a, b, u))
    return bad


def palindrome_equation_triples(max_len):
    """All ``(a, b, u)`` up to ``max_len`` that could make ``b rev(u) a`` a palindrome.

    ``b + x`` is a palindrome only if ``b`` reverses the last ``|b|`` letters
    of ``x``, so only that ``b`` is tried when ``|b| <= |x|``.
    """
    ws = nonempty_words(max_len)
    by_len = {L: [w for w in ws if len(w) == L] for L in range(1, max_len + 1)}
    for u in ws:
        for a in ws:
            x = rev(u) + a
            for L in range(1, max_len + 1):
                if L <= len(x):
                    yield a, rev(x[-L:]), u
                else:
                    yield from ((a, b, u) for b in by_len[L])
