"""Shared knot corpus for the test suite.

Expected Alexander polynomials are frozen from standard knot tables
(symmetric normalization, value 1 at t = 1); they are independent of both
computation routes in the package.
"""

from __future__ import annotations

import random

from fibersum import BraidWord, LaurentPoly, closure_components

UNKNOT = BraidWord(1, ())
TREFOIL = BraidWord(2, (1, 1, 1))
FIGURE_EIGHT = BraidWord(3, (1, -2, 1, -2))

# (2, q) torus braids for q = 3, 5, ..., 13.
TORUS_BRAIDS = {q: BraidWord(2, (1,) * q) for q in (3, 5, 7, 9, 11, 13)}

TWIST_BRAIDS = {
    "4_1": FIGURE_EIGHT,
    "5_2": BraidWord(3, (1, 1, 1, 2, -1, 2)),
    "6_1": BraidWord(4, (1, 1, 2, -1, -3, 2, -3)),
}

# Frozen table values, keyed by braid.  Torus knots T(2,q) have the
# alternating polynomial t^g - t^(g-1) + ... +- 1 ... + t^-g with g = (q-1)/2.
TABLE = {
    TREFOIL: LaurentPoly({1: 1, 0: -1, -1: 1}),
    FIGURE_EIGHT: LaurentPoly({1: -1, 0: 3, -1: -1}),
    TWIST_BRAIDS["5_2"]: LaurentPoly({1: 2, 0: -3, -1: 2}),
    TWIST_BRAIDS["6_1"]: LaurentPoly({1: -2, 0: 5, -1: -2}),
    BraidWord(3, (1, 1, 1, -2, 1, -2)): LaurentPoly(
        {2: -1, 1: 3, 0: -3, -1: 3, -2: -1}
    ),  # 6_2
    BraidWord(3, (1, 1, -2, 1, -2, -2)): LaurentPoly(
        {2: 1, 1: -3, 0: 5, -1: -3, -2: 1}
    ),  # 6_3
    BraidWord(3, (1, 2) * 4): LaurentPoly({3: 1, 2: -1, 0: 1, -2: -1, -3: 1}),  # T(3,4)
}
for _q, _braid in TORUS_BRAIDS.items():
    _g = (_q - 1) // 2
    TABLE[_braid] = LaurentPoly({e: (-1) ** (_g - e) for e in range(-_g, _g + 1)})


def named_corpus() -> list[BraidWord]:
    """The deterministic part of the knot corpus."""
    out = list(TORUS_BRAIDS.values())
    out.append(FIGURE_EIGHT)
    out.extend(TWIST_BRAIDS[k] for k in ("5_2", "6_1"))
    return out


def random_knot_braids(
    count: int, seed: int, max_strands: int = 4, max_length: int = 12
) -> list[BraidWord]:
    """Seeded random braid words whose closures are knots."""
    rng = random.Random(seed)
    out: list[BraidWord] = []
    while len(out) < count:
        strands = rng.randint(2, max_strands)
        length = rng.randint(1, max_length)
        word = tuple(
            rng.choice([1, -1]) * rng.randint(1, strands - 1) for _ in range(length)
        )
        braid = BraidWord(strands, word)
        if closure_components(braid) == 1:
            out.append(braid)
    return out


def random_markov_move(braid: BraidWord, rng: random.Random) -> BraidWord:
    """One random Markov move: conjugation by a short word, or a
    stabilization with random sign."""
    if braid.strands >= 2 and rng.random() < 0.6:
        conj = tuple(
            rng.choice([1, -1]) * rng.randint(1, braid.strands - 1)
            for _ in range(rng.randint(1, 3))
        )
        return braid.conjugated(conj)
    return braid.stabilized(rng.choice([1, -1]))
