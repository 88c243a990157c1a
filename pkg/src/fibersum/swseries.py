"""Seiberg-Witten series of constructions, and basic-class reports.

The engine evaluates recursively over a construction tree with three
gluing rules: the K3 block has series 1; a fiber sum multiplies the two
sides' series by (exp(T) - exp(-T))^2 over the unified torus class T; a
knot surgery multiplies by Delta_K(exp(2T)), the knot's symmetric
Alexander polynomial evaluated at twice the torus class.  Connected sums
are supported only in the vanishing case (both summands with positive
b2+), where the series is 0; anything needing a blow-up formula is
refused.  Null log transforms are refused outright: no formula exists
for them, which is the point of comparing across that move.

The fiber-sum factor is applied squared, which is what iterating the
gluing rule forces.  A widely quoted closed form uses the same product
with first powers; ``sw_first_power_formula`` evaluates that variant so
the exact ratio between the two conventions can be machine-checked
(see tests/test_acceptance.py, documented-discrepancy criterion).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AsymmetricSeries, BadSignExponent, UnsupportedNode, UnsupportedSum
from .knots import BraidWord, alexander
from .linalg import integer_rank
from .manifolds import (
    Block,
    CharNumbers,
    ConnectedSum,
    Construction,
    FiberSum,
    KnotSurgery,
    NullLogTransform,
    char_numbers,
    debug_string,
)
from .ring import ClassVector, GroupRingElt, substitute_exp


def fiber_class_factor(name: str) -> GroupRingElt:
    """exp(T) - exp(-T) for the torus class named ``name``."""
    plus = ClassVector((name,), (1,))
    return GroupRingElt.exp(plus) - GroupRingElt.exp(-plus)


def surgery_factor(torus: str, braid: BraidWord) -> GroupRingElt:
    """Delta of the braid closure evaluated at exp(2 * torus class)."""
    twice = ClassVector((torus,), (2,))
    return substitute_exp(alexander(braid), twice)


def sw_series(c: Construction) -> GroupRingElt:
    """Seiberg-Witten series of a construction as an exact group ring
    element over the torus-class lattice."""
    if isinstance(c, Block):
        # K3 has series 1; the rational blocks are neutral leaves whose
        # only role in sums is their b2+ flag.
        return GroupRingElt.one()
    if isinstance(c, FiberSum):
        factor = fiber_class_factor(c.unified)
        return sw_series(c.left) * sw_series(c.right) * factor * factor
    if isinstance(c, KnotSurgery):
        return sw_series(c.child) * surgery_factor(c.torus, c.braid)
    if isinstance(c, ConnectedSum):
        left_pos = char_numbers(c.left).b2_plus > 0
        right_pos = char_numbers(c.right).b2_plus > 0
        if left_pos and right_pos:
            # Both invariants vanish on a sum of two pieces with positive
            # b2+ (in particular after any stabilization).
            return GroupRingElt.zero()
        raise UnsupportedSum(
            "no formula for a connected sum with a b2+ = 0 summand "
            f"(a blow-up formula would be needed): {debug_string(c)}"
        )
    if isinstance(c, NullLogTransform):
        raise UnsupportedNode(
            "no gluing formula for a null log transform: " + debug_string(c)
        )
    raise TypeError(f"not a construction node: {c!r}")


def sw_first_power_formula(
    n: int,
    mid: list[BraidWord],
    first: BraidWord,
    last: BraidWord,
) -> GroupRingElt:
    """Closed-form product for the series of surgered_chain(n, ...), with
    the fiber-sum factors to the FIRST power.

    This is the other convention in circulation for the same family; the
    recursive engine squares those factors.  Both are exposed so the
    discrepancy is testable rather than hidden: the engine's output equals
    this one times prod_(alpha<n) (exp(T[alpha,3]) - exp(-T[alpha,3])).
    """
    if len(mid) != n:
        raise ValueError(f"expected {n} middle knots, got {len(mid)}")
    out = GroupRingElt.one()
    for alpha in range(1, n):
        out = out * fiber_class_factor(f"T[{alpha},3]")
    for alpha, braid in enumerate(mid, start=1):
        out = out * surgery_factor(f"T[{alpha},2]", braid)
    out = out * surgery_factor("T[1,1]", first)
    out = out * surgery_factor(f"T[{n},3]", last)
    return out


# ----------------------------------------------------------------- reports


def conjugation_sign(cn: CharNumbers) -> int:
    """(-1)^((chi + sigma) / 4); raises when 4 does not divide chi+sigma."""
    total = cn.chi + cn.sigma
    if total % 4 != 0:
        raise BadSignExponent(f"chi + sigma = {total} is not divisible by 4")
    return -1 if (total // 4) % 2 else 1


def check_conjugation_symmetry(series: GroupRingElt, cn: CharNumbers) -> bool:
    """True iff coefficient(-K) = epsilon * coefficient(K) for every
    nonzero class K, with epsilon the conjugation sign."""
    eps = conjugation_sign(cn)
    zero = (0,) * len(series.lattice)
    for vec, coeff in series.terms.items():
        if vec == zero:
            continue
        mirrored = tuple(-x for x in vec)
        if series.terms.get(mirrored, 0) != eps * coeff:
            return False
    return True


@dataclass(frozen=True)
class SWReport:
    """Basic-class summary of a series.

    basic_pairs lists one representative per pair +-K (the
    lexicographically positive one) with its coefficient, in ascending
    lexicographic order; count is the number of nonzero basic classes
    (2 per pair); rank is the rank of the integer span of the classes.
    """

    series: GroupRingElt
    a0: int
    basic_pairs: tuple[tuple[ClassVector, int], ...]
    count: int
    rank: int
    coeff_multiset: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "a0": self.a0,
            "pairs": [
                {"class": list(cv.coords), "coeff": coeff}
                for cv, coeff in self.basic_pairs
            ],
            "count": self.count,
            "rank": self.rank,
            "coeffs": list(self.coeff_multiset),
            "lattice": list(self.series.lattice),
            "series": str(self.series),
        }


def _lex_positive(vec: tuple[int, ...]) -> bool:
    for x in vec:
        if x != 0:
            return x > 0
    return False


def basic_classes(series: GroupRingElt, cn: CharNumbers) -> SWReport:
    """Read the basic classes off a conjugation-symmetric series."""
    if not check_conjugation_symmetry(series, cn):
        raise AsymmetricSeries(
            f"series fails conjugation symmetry for sign {conjugation_sign(cn)}: "
            f"{series}"
        )
    canon = series.pruned()
    a0 = canon.constant_coeff()
    positives = sorted(v for v in canon.terms if _lex_positive(v))
    pairs = tuple(
        (ClassVector(canon.lattice, vec), canon.terms[vec]) for vec in positives
    )
    rank = integer_rank([list(vec) for vec in positives])
    coeffs = tuple(sorted(abs(c) for _, c in pairs))
    return SWReport(canon, a0, pairs, 2 * len(pairs), rank, coeffs)


def reconstruct_series(report: SWReport, cn: CharNumbers) -> GroupRingElt:
    """Rebuild a series from a0 and basic_pairs with the conjugation sign;
    inverse of basic_classes on symmetric series."""
    eps = conjugation_sign(cn)
    out = GroupRingElt.constant(report.a0)
    for cv, coeff in report.basic_pairs:
        out = out + GroupRingElt.exp(cv, coeff) + GroupRingElt.exp(-cv, eps * coeff)
    return out


def sw_report(c: Construction) -> SWReport:
    return basic_classes(sw_series(c), char_numbers(c))


__all__ = [
    "SWReport",
    "basic_classes",
    "check_conjugation_symmetry",
    "conjugation_sign",
    "fiber_class_factor",
    "reconstruct_series",
    "surgery_factor",
    "sw_first_power_formula",
    "sw_report",
    "sw_series",
]
