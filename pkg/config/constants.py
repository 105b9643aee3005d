"""Project constants and canonical diagnostic messages."""

from fractions import Fraction
from typing import Final

# Region file encodings.
TRI_EXTENSION: Final[str] = ".vax"
SQUARE_EXTENSION: Final[str] = ".xreg"
CELLS_EXTENSION: Final[str] = ".cells"
REGION_EXTENSIONS: Final[tuple[str, ...]] = (
    TRI_EXTENSION,
    SQUARE_EXTENSION,
    CELLS_EXTENSION,
)
TRI_UP_CHAR: Final[str] = "A"
TRI_DOWN_CHAR: Final[str] = "V"
SQUARE_CHAR: Final[str] = "X"

# Canonical diagnostic messages (single source of truth).
MSG_EMPTY_REGION: Final[str] = "Region has no cells"
MSG_UNKNOWN_CHARACTER: Final[str] = "Unexpected character {char!r} at row {row}, column {col}"
MSG_NO_EMBEDDING: Final[str] = "Graph has no planar embedding; declare faces or use permanent/brute"
MSG_NOT_BIPARTITE: Final[str] = "Engine requires a bipartite graph"
MSG_NOT_PLANAR: Final[str] = "Engine requires a planar embedded graph"
MSG_SQRT_INEXACT: Final[str] = "Pfaffian determinant is not a perfect square; orientation is invalid"
MSG_FACE_CONDITION: Final[str] = "Sign assignment violates the face condition on face {face}"
MSG_SIZE_LIMIT: Final[str] = "{what} exceeds the configured limit ({value} > {limit})"
MSG_SINGULAR: Final[str] = "Matrix is singular"
MSG_ZERO_MATCHINGS: Final[str] = "Graph has no perfect matchings"
MSG_UNKNOWN_FORMULA: Final[str] = "Unknown formula id {name!r}; expected one of: {known}"
MSG_UNKNOWN_FAMILY: Final[str] = "Unknown family {name!r}; expected one of: {known}"
MSG_PATTERN_MISMATCH: Final[str] = "Rewrite site does not match the expected pattern: {detail}"

# Counting engines.
ENGINE_DET: Final[str] = "det"
ENGINE_PFAFFIAN: Final[str] = "pfaffian"
ENGINE_PERMANENT: Final[str] = "permanent"
ENGINE_BRUTE: Final[str] = "brute"
ENGINE_LITERALS: Final[tuple[str, ...]] = (
    ENGINE_DET,
    ENGINE_PFAFFIAN,
    ENGINE_PERMANENT,
    ENGINE_BRUTE,
)

# Output formats.
FORMAT_TEXT: Final[str] = "text"
FORMAT_TSV: Final[str] = "tsv"
FORMAT_LITERALS: Final[tuple[str, ...]] = (FORMAT_TEXT, FORMAT_TSV)

# Factored-count structure tags.
STRUCTURE_SQUARE: Final[str] = "SQUARE"
STRUCTURE_TWO_TIMES_SQUARE: Final[str] = "TWO_TIMES_SQUARE"
STRUCTURE_POW2_TIMES_ODD_SQUARE: Final[str] = "POW2_TIMES_ODD_SQUARE"
STRUCTURE_SQUARE_TIMES_SMALL: Final[str] = "SQUARE_TIMES_SMALL"
STRUCTURE_NONE: Final[str] = "NONE"

# Primality: deterministic below this bound, Miller-Rabin with many bases above.
DETERMINISTIC_PRIME_BOUND: Final[int] = 2**64
MILLER_RABIN_ROUNDS: Final[int] = 40

# Weighted-identity verdicts.
VERDICT_EQUAL: Final[str] = "EQUAL"
VERDICT_DIFFERENT: Final[str] = "DIFFERENT"

# Measured once with the weighted brute-force oracle (see tests/test_rewrites.py).
KENYON_MOVE_FACTOR: Final[Fraction] = Fraction(1)
KENYON_MOVE_WEIGHTS: Final[dict[tuple[str, str], Fraction]] = {
    ("p", "q"): Fraction(3, 2),
    ("p", "r"): Fraction(1),
    ("q", "s"): Fraction(1, 2),
    ("r", "s"): Fraction(1),
    ("r", "t"): Fraction(2),
    ("s", "u"): Fraction(1),
}

# Even-pillow generating functions, coefficients low degree first.
PILLOW_GF_DENOMINATOR: Final[tuple[int, ...]] = (1, -2, -2, -2, 1)
PILLOW_0MOD4_GF_NUMERATOR: Final[tuple[int, ...]] = (5, 3, 1, -1)
PILLOW_2MOD4_GF_NUMERATOR: Final[tuple[int, ...]] = (5, 6, 3, -2)

# Aztec-window decompositions count(x) = left(middle(right(x))), right(x) = (x + w/4)^2.
# left is (coefficient, power); middle is a coefficient list, low degree first.
WINDOW_DECOMPOSITIONS: Final[dict[int, tuple[tuple[int, int], tuple[Fraction, ...]]]] = {
    2: ((2**3, 4), (Fraction(1),)),
    4: ((2**8, 2), (Fraction(1), Fraction(1))),
    6: ((2**17, 4), (Fraction(7, 8), Fraction(1, 2))),
    8: (
        (2**28, 2),
        (
            Fraction(1),
            Fraction(11, 18),
            Fraction(41, 144),
            Fraction(7, 72),
            Fraction(1, 144),
        ),
    ),
    10: (
        (2**43, 4),
        (
            Fraction(967, 1024),
            Fraction(451, 2304),
            Fraction(61, 576),
            Fraction(1, 144),
        ),
    ),
}

# Problem-style family names addressable with --family.
FAMILY_HEXAGON: Final[str] = "hexagon"
FAMILY_HOLEY_CENTRAL_TRIANGLE: Final[str] = "holey-central-triangle"
FAMILY_HOLEY_THREE_SIDES: Final[str] = "holey-three-sides"
FAMILY_HOLEY_OPPOSITE: Final[str] = "holey-opposite"
FAMILY_HOLEY_ADJACENT: Final[str] = "holey-adjacent"
FAMILY_CENTRAL_EDGE_HEX: Final[str] = "central-edge-hexagon"
FAMILY_AZTEC_DIAMOND: Final[str] = "aztec-diamond"
FAMILY_AZTEC_CENTER_PAIR: Final[str] = "aztec-center-pair"
FAMILY_AZTEC_KNIGHT: Final[str] = "aztec-knight"
FAMILY_AZTEC_RECT_CENTER: Final[str] = "aztec-rect-center"
FAMILY_AZTEC_RECT_ADJACENT: Final[str] = "aztec-rect-adjacent"
FAMILY_INTRUDED_SQUARE: Final[str] = "intruded-square"
FAMILY_PILLOW_0MOD4: Final[str] = "pillow-0mod4"
FAMILY_PILLOW_2MOD4: Final[str] = "pillow-2mod4"
FAMILY_AZTEC_WINDOW: Final[str] = "aztec-window"
FAMILY_QUASI_HEXAGON: Final[str] = "quasi-hexagon"
FAMILY_TRIANGLE_GRAPH: Final[str] = "triangle-graph"
FAMILY_CUBE: Final[str] = "cube"
FAMILY_RECTANGLE: Final[str] = "rectangle"

# Perfect matchings of the n-cube, n = 1..5.
CUBE_MATCHINGS: Final[tuple[int, ...]] = (1, 2, 9, 272, 589185)

# Triangle-graph counts reported for n = 3, 4, 7, 8.
TRIANGLE_MATCHINGS: Final[dict[int, int]] = {3: 2, 4: 6, 7: 2196, 8: 37004}
