import pytest

import hypfq


def test_field_basics():
    f = hypfq.Field(5, 2)
    assert (f.p, f.r, f.q) == (5, 2, 25)
    assert len(f.elements()) == 25
    assert hypfq.Field(5).generator == "2"
    assert f.legendre(0) == 0


def test_gn_values():
    v = hypfq.gn(7, 1, "1/4,3/4", "0,1/2", 6)
    assert v["integer"] == 0
    assert hypfq.gn(5, 1, ["1/3", "2/3"], ["0", "1/2"], 4)["integer"] == -1
    with pytest.raises(ValueError):
        hypfq.gn(3, 1, "1/6", "0", 1)


def test_counts():
    assert hypfq.ec_count(5, 1, 0, 1, 0) == (4, 2)
    assert hypfq.hessian_count(5, 1, 2) == 8
    assert hypfq.count_dsurface(5, 1, 2, 1, 1) == 1
    with pytest.raises(ValueError):
        hypfq.ec_count(5, 1, 0, 0, 0)


def test_complex_gauss_sum_norm():
    g = hypfq.complex_gauss_sum(7, 1, 1)
    assert abs(abs(g) ** 2 - 7) < 1e-9


def test_verify_report():
    rep = hypfq.verify("hessian-sum", fields=[(5, 1), (11, 1)])
    assert rep["summary"]["fail"] == 0
    assert [r["status"] for r in rep["records"]] == ["pass", "pass"]
    assert "hessian-sum" in hypfq.check_ids()
    assert hypfq.verify("gauss-norm", fields=[(5, 1)], format="plain").strip().endswith("fail 0, skip 0")
