"""Boundary-word algebra of polyominoes that tile the plane by translation."""

from .bn import (
    DoubleSquareStructure,
    FormParams,
    HexFactorization,
    SquareFactorization,
    as_double_square,
    build_from_form,
    classify_form,
    extract_uvn,
    extract_w8,
    find_hexagon_factorizations,
    find_square_factorizations,
)
from .morphism import (
    HomologousMorphism,
    Preimage,
    apply,
    compose,
    find_preimages,
    is_prime,
    trivial_morphism,
)
from .polyomino import BoundaryWord, area, rasterize, tiling_patch, trace, validate
from .words import (
    CircularWord,
    Step,
    canonical_rotation,
    conjugate,
    displacement,
    hat,
    is_couple_free,
    is_palindrome,
    period_split,
    reversal,
)

__version__ = "0.1.0"
