import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tileforge.bn import SquareFactorization, find_square_factorizations
from tileforge.errors import (
    DegenerateArea,
    EmptyWord,
    FactorizationMismatch,
    NotClosed,
    SelfIntersecting,
)
from tileforge.polyomino import (
    area,
    counting_self_avoiding,
    is_valid,
    patch_defects,
    rasterize,
    signed_area,
    tiling_patch,
    trace,
    validate,
)
from tileforge.words import displacement, hat

from conftest import CROSS, DOMINO, SQUARE
from oracles import cells_inside_ref, closed_words, self_avoiding_polygons


def test_validate_examples():
    assert validate(DOMINO).word == DOMINO
    assert validate(SQUARE).word == SQUARE
    with pytest.raises(DegenerateArea):
        validate("02")


@pytest.mark.parametrize("w, exc", [
    ("", EmptyWord),
    ("01", NotClosed),
    ("0123" * 2, SelfIntersecting),
    ("0022", DegenerateArea),
])
def test_validate_errors(w, exc):
    with pytest.raises(exc):
        validate(w)


def test_validate_orients_counterclockwise():
    P = validate(CROSS)
    assert signed_area(CROSS) < 0
    assert P.word == hat(CROSS)
    assert P.area == 5


def test_trace_examples():
    assert trace(SQUARE, (0, 0)) == [(0, 0), (1, 0), (1, 1), (0, 1), (0, 0)]
    pts = trace(DOMINO)
    assert len(pts) == 7 and pts[-1] == (0, 0)
    pts = trace(validate(CROSS))
    # 12 letters: 13 vertices, the last repeating the first
    assert len(pts) == 13 and len(set(pts)) == 12 and pts[0] == pts[-1]


def test_trace_steps_are_unit():
    pts = trace(CROSS, (3, -2))
    assert pts[0] == pts[-1] == (3, -2)
    assert all(abs(x1 - x0) + abs(y1 - y0) == 1 for (x0, y0), (x1, y1) in zip(pts, pts[1:]))


@pytest.mark.parametrize("w, a", [(SQUARE, 1), (DOMINO, 2), (CROSS, 5)])
def test_area(w, a):
    assert area(validate(w)) == a


def test_rasterize_examples():
    assert rasterize(validate(SQUARE)) == {(0, 0)}
    assert rasterize(validate(DOMINO)) == {(0, 0), (1, 0)}
    cells = rasterize(validate(CROSS))
    assert len(cells) == 5
    # a plus: one centre with its four edge neighbours
    centre = [c for c in cells if sum((c[0] + dx, c[1] + dy) in cells
                                      for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1))) == 4]
    assert len(centre) == 1


@pytest.mark.parametrize("n", [4, 6, 8, 10, 12])
def test_rasterize_matches_ray_casting(n):
    for w in self_avoiding_polygons(n):
        P = validate(w)
        cells = rasterize(P)
        assert cells == cells_inside_ref(P.word)
        assert len(cells) == P.area


def test_tiling_patch_domino():
    P = validate(DOMINO)
    f = SquareFactorization(DOMINO, (0, 2, 3, 5))
    assert (f.A, f.B) == ("00", "1")
    patch = tiling_patch(P, f, 3, 3)
    assert len(patch) == 9
    assert sum(len(c) for _, c in patch) == 18
    assert patch_defects(patch, 3, 3) == []


def test_tiling_patch_square():
    P = validate(SQUARE)
    f = SquareFactorization(SQUARE, (0, 1, 2, 3))
    patch = tiling_patch(P, f, 2, 2)
    cells = set().union(*(c for _, c in patch))
    assert cells == {(0, 0), (1, 0), (0, 1), (1, 1)}
    assert patch_defects(patch, 2, 2) == []


def test_tiling_patch_cross_both_factorizations():
    P = validate(CROSS)
    facs = find_square_factorizations(P)
    assert len(facs) == 2
    for f in facs:
        patch = tiling_patch(P, f, 4, 4)
        assert len(patch) == 16
        assert patch_defects(patch, 4, 4) == []


def test_tiling_patch_rejects_foreign_factorization():
    P = validate(CROSS)
    with pytest.raises(FactorizationMismatch):
        tiling_patch(P, SquareFactorization(DOMINO, (0, 2, 3, 5)), 2, 2)
    with pytest.raises(FactorizationMismatch):
        tiling_patch(P, SquareFactorization(P.word, (0, 1, 6, 7)), 2, 2)


def test_patch_defects_detects_overlap():
    P = validate(DOMINO)
    # translating by (1, 0) and (0, 1) makes neighbouring dominoes overlap
    f = SquareFactorization(DOMINO, (0, 2, 3, 5))
    patch = tiling_patch(P, f, 3, 3)
    shifted = [((0, 0), patch[0][1]), ((1, 0), frozenset((x + 1, y) for x, y in patch[0][1]))]
    assert patch_defects(shifted, 1, 2)


def _trace_self_avoiding(w):
    pts = trace(w)[:-1]
    return len(set(pts)) == len(pts)


@pytest.mark.parametrize("n", range(2, 11, 2))
def test_counting_condition_matches_trace_exhaustive(n):
    # only closed words are boundary candidates; open ones fail both tests
    for w in closed_words(n):
        assert _trace_self_avoiding(w) == counting_self_avoiding(w)
        assert is_valid(w) == (counting_self_avoiding(w) and signed_area(w) != 0)


@pytest.mark.parametrize("n", [12, 14])
def test_counting_condition_on_polygons_and_mutants(n):
    polys = self_avoiding_polygons(n)
    assert polys
    for w in polys[::7]:
        assert counting_self_avoiding(w)
        for i, j in itertools.combinations(range(n), 2):
            m = list(w)
            m[i], m[j] = m[j], m[i]
            m = "".join(m)
            assert _trace_self_avoiding(m) == counting_self_avoiding(m)


def test_degenerate_backtracking_word_passes_counting_but_not_area():
    assert counting_self_avoiding("02")
    assert signed_area("02") == 0
    assert not is_valid("02")


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([n for n in (4, 6, 8, 10)]), st.data())
def test_validate_hat_symmetry(n, data):
    polys = self_avoiding_polygons(n)
    w = data.draw(st.sampled_from(polys))
    P, Q = validate(w), validate(hat(w))
    assert P.word in (w, hat(w))
    # both orientations normalize to the same counterclockwise word, up to where it starts
    assert Q.word in (w, hat(w))
    assert P.word == Q.word
    assert P.area >= 1 and len(P) % 2 == 0


@pytest.mark.parametrize("w", ["01", "0122", "0123012"])
def test_validate_hat_symmetry_on_invalid(w):
    assert is_valid(w) == is_valid(hat(w)) is False


def test_lattice_determinant_equals_area(catalog16):
    for e in catalog16.entries:
        for f in find_square_factorizations(e.canonical_word):
            (ax, ay), (bx, by) = displacement(f.A), displacement(f.B)
            assert abs(ax * by - ay * bx) == e.area
