"""Canonical registry of formulas checkable with `verify`."""

from typing import Final

SUPPORTED_FORMULAS: Final[dict[str, dict[str, object]]] = {
    "macmahon": {
        "description": "count(hexagon(a,b,c)) equals the MacMahon box product for every a,b,c <= n.",
        "default_range": (1, 4),
    },
    "aztec-power": {
        "description": "count(aztec diamond of order n) = 2^(n(n+1)/2).",
        "default_range": (1, 8),
    },
    "moments-vertical": {
        "description": "Vertical moment of inertia of hexagon(n,n,n) = (n^4 - n^2)/6.",
        "default_range": (1, 5),
    },
    "invsum": {
        "description": "Entry sum of K_n^-1 = (n-1)(n+3)/2 - 2^(n-1) + 2.",
        "default_range": (1, 8),
    },
    "pillow-gf": {
        "description": "Even-pillow count / generating-function coefficient is a perfect square.",
        "default_range": (1, 4),
    },
    "intruded-structure": {
        "description": "Intruded 2n x 2n square (n even) has 2^(n/2) times an odd square tilings.",
        "default_range": (2, 6),
    },
    "central-edge-third": {
        "description": "Central edge of hexagon(2n-1,2n,2n-1) lies in exactly 1/3 of the tilings.",
        "default_range": (1, 3),
    },
    "window-decomposition": {
        "description": "Aztec window counts match the tabulated left(middle((x + w/4)^2)) forms.",
        "default_range": (0, 3),
    },
    "holey-ratio": {
        "description": "Adjacent-pair holey hexagon over MacMahon equals the pair's edge probability.",
        "default_range": (1, 4),
    },
    "triangle-2adic": {
        "description": "Triangle-graph counts are divisible by 2^floor((n+1)/4).",
        "default_range": (3, 8),
    },
    "cube": {
        "description": "Perfect matchings of the n-cube: 1, 2, 9, 272, 589185.",
        "default_range": (1, 4),
    },
    "carlitz-cokernel": {
        "description": "Cyclic Carlitz matrices of hexagon(a,b,c) share |det| and cokernel with K for a,b,c <= n.",
        "default_range": (1, 4),
    },
    "kenyon-factor": {
        "description": "Kenyon's ladder move multiplies weighted sums by the frozen factor.",
        "default_range": (1, 3),
    },
    "intruded-full": {
        "description": "The 2n x 2n square with a full-length intrusion has exactly one tiling.",
        "default_range": (1, 6),
    },
}
