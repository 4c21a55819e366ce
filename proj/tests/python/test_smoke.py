import pytest

import steenrod2 as s2


def test_sq_and_milnor():
    assert s2.sq(1, "u*v") == "u^2*v + u*v^2"
    assert s2.milnor_q(1, "u*v") == "u^4*v + u*v^4"
    assert s2.milnor_q(0, "u^2") == "0"


def test_adem():
    assert s2.adem("Sq^1 Sq^1") == "0"
    assert s2.adem("Sq^2 Sq^2") == "Sq^3 Sq^1"
    assert s2.adem("Sq^2 Sq^1") == "Sq^2 Sq^1"


def test_serre_generators():
    gens = s2.serre_generators(2, 20)
    assert [g["degree"] for g in gens] == [2, 3, 5, 9, 17]
    assert gens[0]["name"] == "i2"


def test_evaluate_and_kernel():
    assert s2.evaluate("d2", "u^2 + u*v + v^2") == "0"
    forms = set(s2.kernel("d2", 2))
    assert "u^2 + u*v + v^2" in forms
    assert "u*v" not in forms
    assert set(s2.kernel("h2", 2)) >= {"0", "u*v"}


def test_classify_and_census():
    c = s2.classify_form("u^2 + u*v + v^2")
    assert c["rank"] == 2 and c["arf"] == 1
    census = s2.census(2)
    assert sum(o["orbit_size"] for o in census) == 8
    assert len(census) == 4


def test_invariant_algebras():
    assert s2.dickson_dims(6) == [1, 0, 1, 1, 1, 1, 2]
    assert s2.m2_dims(2)[2] == 1
    assert s2.ext_witness_dims(4) == [0, 1, 0, 1, 0]
    assert all(r["parity_ok"] for r in s2.norm_check(8))


def test_lannes():
    assert s2.tv_hk_degree0(2, 2) == 8
    assert s2.l2_zero_dim("i2^2", 2) == 2
    assert s2.tv_f_dims(1, 1, 4) == [1, 1, 1, 0, 1]


def test_tor_and_loop():
    table = s2.tor("i2^2", 4, 8, 2)
    assert table[(1, 4)] == 0
    assert all(dim == 0 for (s, t), dim in table.items() if t < 4 * s)
    assert s2.loop_check(3, 10, 6)["expected"] == [1, 0, 1, 1, 1, 2, 2]
    assert s2.loop_check(3, 10, 6)["ok"]


def test_resource_error():
    with pytest.raises(s2.ResourceError):
        s2.census(5)
