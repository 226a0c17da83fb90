import math

import pytest

import padplace


def test_radii():
    assert padplace.d_max() == pytest.approx(6500.0)
    assert padplace.d_cover() == pytest.approx(2828.0)
    p = padplace.UavParams()
    p.e_max = 10.0
    with pytest.raises(padplace.InfeasibleParams):
        padplace.d_cover(p)


def test_min_enclosing_circle():
    c = padplace.min_enclosing_circle([padplace.Point(0, 0), padplace.Point(4, 0)])
    assert c.radius == pytest.approx(2.0)
    assert tuple(c.center) == pytest.approx((2.0, 0.0))
    with pytest.raises(padplace.EmptyInput):
        padplace.min_enclosing_circle([])


def test_solvers_are_feasible():
    s = padplace.generate(200, 16000.0, bs="center", seed=7)
    assert len(s.nodes) == 200
    assert tuple(s.bs) == (8000.0, 8000.0)
    cdc = padplace.cdc_solve(s)
    dsc = padplace.dsc_optimize(cdc, s)
    dc = padplace.dc_solve(s)
    for dep in (cdc, dsc, dc):
        assert padplace.check_coverage(dep, s) == []
        assert padplace.check_connectivity(dep) == []
        assert padplace.is_feasible(dep, s)
    assert dsc.pad_count <= cdc.pad_count
    assert padplace.solve("cdc-dsc", s).pad_count == dsc.pad_count


def test_round_trip_json():
    s = padplace.generate(50, 5000.0, dist="gaussian3", seed=3)
    back = padplace.Scenario.from_json(s.to_json())
    assert [tuple(p) for p in back.nodes] == [tuple(p) for p in s.nodes]
    with pytest.raises(padplace.ParseError):
        padplace.Scenario.from_json('{"region_side": 1}')


def test_run_sweep_csv():
    spec = '{"swept_parameter": "region_side", "values": [4000], "algorithms": ["dc"], "trials": 2, "record_wall_time": false}'
    csv = padplace.run_sweep(spec)
    lines = csv.strip().split("\n")
    assert lines[0] == "param,algorithm,bs_mode,seed,pads,wall_ms"
    assert len(lines) == 3
    assert padplace.run_sweep(spec) == csv


def test_bad_names():
    with pytest.raises(padplace.ConfigError):
        padplace.generate(10, 100.0, bs="corner")
    with pytest.raises(padplace.ConfigError):
        padplace.solve("tnc", padplace.generate(10, 100.0))
    assert issubclass(padplace.ConfigError, padplace.Error)
    assert not math.isnan(padplace.d_cover())
