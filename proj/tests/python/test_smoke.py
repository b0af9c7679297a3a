import pytest

import tamellc


def test_formal_degree_sides_agree():
    c = tamellc.formal_degree(3, 2, 1, 0, 4)
    assert c["ok"]
    assert c["lhs"] == c["rhs"]


def test_dim_delta_matches_cpp_suite():
    # the C++ unit tests check the closed, index and orbit routes against each other
    assert tamellc.dim_delta(3, 1, 2, 0, 2) == "6"
    assert tamellc.dim_delta(3, 2, 1, 0, 4) == "36"


def test_root_number_routes_agree():
    for k in (0, 1):
        c = tamellc.root_number(3, 2, 1, 0, 4, tame_twist=k)
        assert c["ok"]
        assert c["closed"] == c["assembled"] == c["theta_eps"]


def test_report_layout():
    rep = tamellc.report(3, 2, 1, 0, 4)
    assert rep["params"]["q"] == 3
    assert rep["timing_ms"] is None
    assert {row["name"] for row in rep["checks"]} >= {"dim_delta", "formal_degree", "root_number"}
    assert all(row["status"] == "OK" for row in rep["checks"])


def test_sweep_is_reproducible():
    a = tamellc.sweep([3], max_n=2, r=(2, 3), jobs=1)
    b = tamellc.sweep([3], max_n=2, r=(2, 3), jobs=4)
    assert a == b
    assert a["summary"]["formal_degree_fail"] == 0


def test_invalid_params_raise():
    with pytest.raises(tamellc.TameLLCError) as exc:
        tamellc.report(3, 3, 1, 0, 4)
    assert tamellc.error_kind(exc.value) == "InvalidParams"


def test_criterion_runs():
    res = tamellc.run_criterion(1)
    assert res["id"] == 1
    assert res["pass"]
