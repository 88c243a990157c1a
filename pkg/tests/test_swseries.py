"""The invariant engine: gluing rules, symmetry, basic-class reports."""

import pytest

from corpus import FIGURE_EIGHT, TREFOIL, UNKNOT
from fibersum import (
    ClassVector,
    GroupRingElt,
    basic_classes,
    block,
    char_numbers,
    check_conjugation_symmetry,
    conjugation_sign,
    connected_sum,
    fiber_class_factor,
    fiber_sum_chain,
    knot_surgery,
    null_log_transform,
    reconstruct_series,
    substitute_exp,
    surgered_chain,
    sw_first_power_formula,
    sw_report,
    sw_series,
    alexander_oracle,
)
from fibersum.errors import (
    AsymmetricSeries,
    BadSignExponent,
    UnsupportedNode,
    UnsupportedSum,
)


def exp_of(**classes):
    return GroupRingElt.exp(ClassVector.from_items(classes))


K3_NUMBERS = char_numbers(block("K3"))


# ------------------------------------------------------------------ engine


def test_sw_k3_is_one():
    assert sw_series(block("K3")) == GroupRingElt.one()


def test_sw_chain_of_two_squared_factor():
    expected = exp_of(**{"T[1,3]": 2}) - 2 + exp_of(**{"T[1,3]": -2})
    assert sw_series(fiber_sum_chain(2)) == expected


def test_sw_trefoil_surgery_on_k3():
    c = knot_surgery(block("K3"), "T2", TREFOIL)
    expected = exp_of(T2=2) - 1 + exp_of(T2=-2)
    assert sw_series(c) == expected
    # The same factor, independently from the Seifert-matrix oracle.
    oracle = substitute_exp(alexander_oracle(TREFOIL), ClassVector.from_items({"T2": 2}))
    assert sw_series(c) == oracle


def test_sw_chain_product_formula():
    for n in range(1, 9):
        expected = GroupRingElt.one()
        for alpha in range(1, n):
            factor = fiber_class_factor(f"T[{alpha},3]")
            expected = expected * factor * factor
        assert sw_series(fiber_sum_chain(n)) == expected


def test_unknot_surgery_is_neutral():
    c = fiber_sum_chain(2)
    assert sw_series(knot_surgery(c, "T[1,2]", UNKNOT)) == sw_series(c)


def test_surgery_order_does_not_matter():
    base = fiber_sum_chain(2)
    ab = knot_surgery(knot_surgery(base, "T[1,2]", TREFOIL), "T[2,2]", FIGURE_EIGHT)
    ba = knot_surgery(knot_surgery(base, "T[2,2]", FIGURE_EIGHT), "T[1,2]", TREFOIL)
    assert sw_series(ab) == sw_series(ba)


def test_repeated_surgery_multiplies():
    once = knot_surgery(block("K3"), "T2", TREFOIL)
    twice = knot_surgery(once, "T2", TREFOIL)
    factor = substitute_exp(
        alexander_oracle(TREFOIL), ClassVector.from_items({"T2": 2})
    )
    assert sw_series(twice) == factor * factor


def test_stabilized_vanishes():
    stabilized = connected_sum(fiber_sum_chain(2), block("S2twS2"))
    assert sw_series(stabilized) == GroupRingElt.zero()
    also = connected_sum(block("K3"), block("S2xS2"))
    assert sw_series(also) == GroupRingElt.zero()


def test_blowup_sum_unsupported():
    with pytest.raises(UnsupportedSum):
        sw_series(connected_sum(block("K3"), block("CP2bar")))


def test_log_transform_unsupported():
    with pytest.raises(UnsupportedNode):
        sw_series(null_log_transform(block("K3"), "T1"))


# ------------------------------------------------------- first-power variant


def test_first_power_formula_trivial():
    assert sw_first_power_formula(1, [UNKNOT], UNKNOT, UNKNOT) == GroupRingElt.one()


def test_first_power_formula_chain_of_two():
    expected = exp_of(**{"T[1,3]": 1}) - exp_of(**{"T[1,3]": -1})
    assert sw_first_power_formula(2, [UNKNOT, UNKNOT], UNKNOT, UNKNOT) == expected


def test_first_power_formula_with_knot():
    got = sw_first_power_formula(2, [TREFOIL, UNKNOT], UNKNOT, UNKNOT)
    expected = fiber_class_factor("T[1,3]") * (
        exp_of(**{"T[1,2]": 2}) - 1 + exp_of(**{"T[1,2]": -2})
    )
    assert got == expected


def test_engine_vs_first_power_exact_ratio():
    for n in range(2, 5):
        unknots = [UNKNOT] * n
        engine = sw_series(surgered_chain(n, unknots, UNKNOT, UNKNOT))
        printed = sw_first_power_formula(n, unknots, UNKNOT, UNKNOT)
        ratio = GroupRingElt.one()
        for alpha in range(1, n):
            ratio = ratio * fiber_class_factor(f"T[{alpha},3]")
        assert engine == printed * ratio


# ----------------------------------------------------------------- symmetry


def test_conjugation_sign_values():
    assert conjugation_sign(K3_NUMBERS) == 1  # (24 - 16) / 4 = 2
    assert conjugation_sign(char_numbers(block("S2xS2"))) == -1  # 4 / 4 = 1


def test_conjugation_sign_bad_exponent():
    with pytest.raises(BadSignExponent):
        conjugation_sign(char_numbers(block("CP2bar")))  # chi + sigma = 2


def test_symmetry_check():
    assert check_conjugation_symmetry(GroupRingElt.one(), K3_NUMBERS)
    assert not check_conjugation_symmetry(exp_of(T=1), K3_NUMBERS)
    sym = exp_of(T=2) - 1 + exp_of(T=-2)
    assert check_conjugation_symmetry(sym, K3_NUMBERS)


def test_every_engine_output_is_symmetric():
    members = [
        block("K3"),
        fiber_sum_chain(3),
        surgered_chain(2, [TREFOIL, FIGURE_EIGHT], UNKNOT, TREFOIL),
    ]
    for c in members:
        assert check_conjugation_symmetry(sw_series(c), char_numbers(c))


# ------------------------------------------------------------------ reports


def test_report_constant_series():
    report = basic_classes(GroupRingElt.one(), K3_NUMBERS)
    assert (report.a0, report.count, report.rank) == (1, 0, 0)
    assert report.coeff_multiset == ()


def test_report_single_pair():
    series = exp_of(T=2) - 1 + exp_of(T=-2)
    report = basic_classes(series, K3_NUMBERS)
    assert report.a0 == -1
    assert report.count == 2 and report.rank == 1
    assert [(cv.coords, c) for cv, c in report.basic_pairs] == [((2,), 1)]


def test_report_rank_three_chain():
    y = surgered_chain(2, [TREFOIL, TREFOIL], UNKNOT, UNKNOT)
    report = sw_report(y)
    assert report.rank == 3
    assert set(report.series.pruned().lattice) == {"T[1,2]", "T[1,3]", "T[2,2]"}


def test_report_rank_bounds():
    for c in (
        fiber_sum_chain(3),
        surgered_chain(2, [TREFOIL, FIGURE_EIGHT], TREFOIL, UNKNOT),
    ):
        report = sw_report(c)
        assert report.rank <= len(report.basic_pairs)
        assert report.rank <= len(report.series.lattice)


def test_report_rejects_asymmetric():
    with pytest.raises(AsymmetricSeries):
        basic_classes(exp_of(T=1), K3_NUMBERS)


def test_reconstruction_round_trip():
    for c in (
        fiber_sum_chain(2),
        surgered_chain(1, [FIGURE_EIGHT], TREFOIL, UNKNOT),
    ):
        series = sw_series(c)
        report = basic_classes(series, char_numbers(c))
        assert reconstruct_series(report, char_numbers(c)) == series


def test_report_json_schema():
    y = surgered_chain(1, [TREFOIL], UNKNOT, UNKNOT)
    data = sw_report(y).to_json()
    assert set(data) == {"a0", "pairs", "count", "rank", "coeffs", "lattice", "series"}
    assert data["pairs"] == [{"class": [2], "coeff": 1}]
    assert data["series"] == "exp(2*T[1,2]) - 1 + exp(-2*T[1,2])"
    assert data["lattice"] == ["T[1,2]"]
