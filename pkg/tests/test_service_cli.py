"""HTTP service endpoints and the CLI thin client."""

import json
import warnings

import pytest
from click.testing import CliRunner

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    from fastapi.testclient import TestClient

from splitjac.cli import main
from splitjac.service.app import app

CURVE_101 = {"field": {"p": 101},
             "coeffs": ["3", "7", "0", "1", "0", "1", "0"]}


@pytest.fixture(scope="module")
def client():
    return TestClient(app, raise_server_exceptions=False)


def test_health(client):
    assert client.get("/health").json() == {"status": "ok"}


def test_split2_endpoint_spec_example(client):
    rec = client.post("/split2", json={"s1": "1", "s2": "2"}).json()
    assert rec["u"] == "2" and rec["v"] == "9"
    assert rec["j1"] == "32000/23" and rec["j2"] == "-256/23"
    rec2 = client.post("/split2", json={"u": "2", "v": "9"}).json()
    assert rec2["j1"] == "32000/23" and rec2["split"] is True


def test_split2_usage_error(client):
    r = client.post("/split2", json={"s1": "1"})
    assert r.status_code == 422
    r = client.post("/split2", json={"s1": "3", "s2": "3"})  # singular
    assert r.status_code == 422


def test_split3_endpoint(client):
    rec = client.post("/split3", json={"fu": "1", "fv": "1"}).json()
    assert rec["j1"] == "780448/2197" and rec["j2"] == "128"
    assert rec["st"] == {"s": "1061664/2197", "t": "99897344/2197"}
    rec2 = client.post("/split3",
                       json={"chi": "-3375/2", "psi": "405000/13"}).json()
    assert rec2["st"]["s"] == "1061664/2197"
    assert rec2["split"] is True
    assert {rec2["j1"], rec2["j2"]} == {"780448/2197", "128"}


def test_isogeny_endpoint(client):
    # D6-line point lies on the level-3 locus of the (2,2) family
    out = client.post("/isogeny", json={"n": "2", "N": 3,
                                        "x": "5", "y": "150"}).json()
    assert out["member"] is True
    assert out["factors"][0] == "0"
    if out["isogenous"] is not None:
        assert out["isogenous"] is True
    off = client.post("/isogeny", json={"n": "2", "N": 2,
                                        "x": "2", "y": "9"}).json()
    assert off["member"] is False


def test_jac_endpoints(client):
    div = {"u": ["98", "1"], "v": ["71"]}
    added = client.post("/jac", json={"curve": CURVE_101, "op": "add",
                                      "div1": div, "div2": div}).json()
    doubled = client.post("/jac", json={"curve": CURVE_101, "op": "mul",
                                        "div1": div, "k": 2}).json()
    assert added["result"] == doubled["result"]
    order = client.post("/jac", json={"curve": CURVE_101, "op": "order",
                                      "div1": div}).json()
    lp = client.post("/lpoly", json={"curve": CURVE_101}).json()
    assert int(lp["jacobian_order"]) % int(order["order"]) == 0
    bad = client.post("/jac", json={"curve": CURVE_101, "op": "add",
                                    "div1": div})
    assert bad.status_code == 422  # missing div2


def test_lpoly_endpoint(client):
    out = client.post("/lpoly", json={"curve": CURVE_101, "q": 101}).json()
    assert out["q"] == "101" and out["lpoly"][0] == "1"
    assert out["lpoly"][4] == str(101 * 101)
    mismatch = client.post("/lpoly", json={"curve": CURVE_101, "q": 7})
    assert mismatch.status_code == 422


def test_surface_endpoint(client):
    out = client.post("/surface",
                      json={"source": "uv", "values": ["2", "9"]}).json()
    assert set(out["params"]) == {"alpha", "beta", "gamma", "delta"}
    assert all(sum(map(int, k.split(","))) == 4 for k in out["quartic"])
    bad = client.post("/surface", json={"source": "uv", "values": ["2"]})
    assert bad.status_code == 422


def test_ss_scan_endpoint_resource_limit(client):
    out = client.post("/ss-scan", json={"p": 7, "limit": 5}).json()
    assert out["rows"] == 5
    too_big = client.post("/ss-scan", json={"p": 1019})
    assert too_big.status_code == 429


def test_cli_split2_and_exit_codes():
    runner = CliRunner()
    ok = runner.invoke(main, ["split2", "--s1", "1", "--s2", "2"])
    assert ok.exit_code == 0
    rec = json.loads(ok.output)
    assert rec["j1"] == "32000/23"
    usage = runner.invoke(main, ["split2", "--s1", "1"])
    assert usage.exit_code == 1
    resource = runner.invoke(main, ["ss-scan", "--p", "1019"])
    assert resource.exit_code == 2


def test_cli_deterministic_output():
    runner = CliRunner()
    a = runner.invoke(main, ["split3", "--fu", "1", "--fv", "1"]).output
    b = runner.invoke(main, ["split3", "--fu", "1", "--fv", "1"]).output
    assert a == b


def test_cli_ss_scan_csv(tmp_path):
    runner = CliRunner()
    out = tmp_path / "scan.csv"
    res = runner.invoke(main, ["ss-scan", "--p", "7", "--limit", "8",
                               "--out", str(out)])
    assert res.exit_code == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("p,alpha0,alpha1")
    assert len(lines) == 9


def test_cli_jac_roundtrip(tmp_path):
    runner = CliRunner()
    curve_file = tmp_path / "curve.json"
    curve_file.write_text(json.dumps(CURVE_101))
    res = runner.invoke(main, ["jac", "--curve", str(curve_file),
                               "--op", "mul", "--div1", "98,1;71",
                               "--k", "3"])
    assert res.exit_code == 0
    assert "result" in json.loads(res.output)
