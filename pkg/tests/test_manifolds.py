"""Construction trees, torus bookkeeping, characteristic numbers."""

import pytest

from corpus import TREFOIL, UNKNOT
from fibersum import (
    available_tori,
    block,
    char_numbers,
    connected_sum,
    debug_string,
    fiber_sum,
    fiber_sum_chain,
    knot_surgery,
    null_log_transform,
    surgered_chain,
    torus_records,
)
from fibersum.errors import (
    BadParameter,
    HypothesisViolated,
    NotAKnot,
    TorusUnavailable,
    UnknownBlock,
)
import fibersum.manifolds as manifolds


# ------------------------------------------------------------------ blocks


def test_k3_block_tori():
    k3 = block("K3")
    assert available_tori(k3) == ("T1", "T2", "T3")
    for rec in torus_records(k3).values():
        assert rec.essential and rec.square_zero and rec.complement_simply_connected


def test_other_blocks_have_no_tori():
    for name in ("CP2", "CP2bar", "S2xS2", "S2twS2"):
        assert available_tori(block(name)) == ()


def test_block_numbers():
    assert (char_numbers(block("K3")).chi, char_numbers(block("K3")).sigma) == (24, -16)
    assert char_numbers(block("S2twS2")).parity == "odd"
    assert char_numbers(block("S2xS2")).parity == "even"
    assert char_numbers(block("CP2")).b2_plus == 1
    assert char_numbers(block("CP2bar")).b2_minus == 1


def test_unknown_block():
    with pytest.raises(UnknownBlock):
        block("S4")


# --------------------------------------------------------------- connected sum


def test_connected_sum_k3_stabilizer():
    cn = char_numbers(connected_sum(block("K3"), block("S2twS2")))
    assert (cn.chi, cn.sigma, cn.parity) == (26, -16, "odd")


def test_connected_sum_self_disambiguates():
    c = connected_sum(block("K3"), block("K3"))
    names = available_tori(c)
    assert len(names) == 6
    assert len(set(names)) == 6


def test_connected_sum_cp2_pair():
    cn = char_numbers(connected_sum(block("CP2"), block("CP2bar")))
    assert (cn.chi, cn.sigma, cn.parity) == (4, 0, "odd")


# ------------------------------------------------------------------ fiber sum


def test_fiber_sum_two_k3():
    c = fiber_sum(block("K3", copy=1), "T[1,3]", block("K3", copy=2), "T[2,1]")
    cn = char_numbers(c)
    assert (cn.chi, cn.sigma, cn.b2_plus, cn.b2_minus) == (48, -32, 7, 39)
    assert cn.parity == "even" and cn.simply_connected


def test_fiber_sum_consumes_exactly_two():
    c = fiber_sum(block("K3", copy=1), "T[1,3]", block("K3", copy=2), "T[2,1]")
    records = torus_records(c)
    consumed = {n for n, r in records.items() if r.status == "consumed"}
    assert consumed == {"T[1,3]", "T[2,1]"}
    assert len(available_tori(c)) == 4


def test_fiber_sum_consumed_torus_raises():
    c = fiber_sum(block("K3", copy=1), "T[1,3]", block("K3", copy=2), "T[2,1]")
    with pytest.raises(TorusUnavailable):
        fiber_sum(c, "T[1,3]", block("K3", copy=3), "T[3,1]")


def test_fiber_sum_unknown_torus_raises():
    with pytest.raises(TorusUnavailable):
        fiber_sum(block("K3"), "T9", block("K3", copy=2), "T[2,1]")


def test_fiber_sum_default_names_disambiguate():
    c = fiber_sum(block("K3"), "T3", block("K3"), "T1")
    assert debug_string(c) == "FS(K3@T3, K3@R:T1)"
    assert len(available_tori(c)) == 4


# ------------------------------------------------------------------ surgery


def test_knot_surgery_keeps_numbers_and_torus():
    k3 = block("K3")
    c = knot_surgery(k3, "T2", TREFOIL)
    assert char_numbers(c) == char_numbers(k3)
    assert "T2" in available_tori(c)


def test_knot_surgery_consumed_torus():
    x2 = fiber_sum_chain(2)
    with pytest.raises(TorusUnavailable):
        knot_surgery(x2, "T[1,3]", TREFOIL)


def test_knot_surgery_rejects_links():
    from fibersum import BraidWord

    with pytest.raises(NotAKnot):
        knot_surgery(block("K3"), "T1", BraidWord(2, (1, 1)))


def test_knot_surgery_checks_flags(monkeypatch):
    k3 = block("K3")
    records = torus_records(k3)
    records["T2"] = manifolds.TorusRecord("T2", essential=False)
    monkeypatch.setattr(manifolds, "torus_records", lambda c: dict(records))
    with pytest.raises(HypothesisViolated):
        knot_surgery(k3, "T2", TREFOIL)


def test_repeated_surgery_permitted():
    c = knot_surgery(block("K3"), "T2", TREFOIL)
    c = knot_surgery(c, "T2", TREFOIL)
    assert char_numbers(c).chi == 24


def test_null_log_transform():
    k3 = block("K3")
    c = null_log_transform(k3, "T2")
    assert char_numbers(c) == char_numbers(k3)
    with pytest.raises(TorusUnavailable):
        null_log_transform(fiber_sum_chain(2), "T[1,3]")


# ------------------------------------------------------------------ builders


def test_chain_of_one_is_a_block():
    c = fiber_sum_chain(1)
    assert available_tori(c) == ("T[1,1]", "T[1,2]", "T[1,3]")


def test_chain_of_two():
    c = fiber_sum_chain(2)
    assert debug_string(c) == "FS(K3@T[1,3], K3@T[2,1])"
    assert available_tori(c) == ("T[1,1]", "T[1,2]", "T[2,2]", "T[2,3]")


def test_chain_bad_parameter():
    with pytest.raises(BadParameter):
        fiber_sum_chain(0)


@pytest.mark.parametrize("n", range(1, 21))
def test_chain_numbers_and_torus_count(n):
    c = fiber_sum_chain(n)
    cn = char_numbers(c)
    assert (cn.chi, cn.sigma) == (24 * n, -16 * n)
    assert cn.b2_plus == 4 * n - 1
    assert cn.b2_minus == 20 * n - 1
    assert cn.parity == "even" and cn.simply_connected
    assert cn.chi == 2 + cn.b2_plus + cn.b2_minus
    assert cn.sigma == cn.b2_plus - cn.b2_minus
    assert (cn.chi + cn.sigma) % 4 == 0
    assert len(available_tori(c)) == n + 2


def test_surgered_chain_numbers_unchanged():
    y = surgered_chain(2, [TREFOIL, UNKNOT], UNKNOT, TREFOIL)
    assert char_numbers(y) == char_numbers(fiber_sum_chain(2))


def test_surgered_chain_arity():
    with pytest.raises(BadParameter):
        surgered_chain(2, [TREFOIL], UNKNOT, UNKNOT)
