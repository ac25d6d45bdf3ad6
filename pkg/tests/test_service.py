import json
import warnings

import jsonschema
import pytest

from cosq.families import FamilySpec, build
from cosq.core import format_hypergraph
from cosq.report import schema_text
from cosq.service import create_app

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    from starlette.testclient import TestClient


@pytest.fixture(scope="module")
def client():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return TestClient(create_app())


@pytest.fixture(scope="module")
def schema():
    return json.loads(schema_text())


STAR = format_hypergraph(build(FamilySpec("star", 7, 3, t=1)))


def post_ok(client, schema, path, payload):
    resp = client.post(path, json=payload)
    assert resp.status_code == 200, resp.text
    body = resp.json()
    jsonschema.validate(body, schema)
    return body


def test_health(client, schema):
    body = client.get("/health").json()
    jsonschema.validate(body, schema)
    assert body["command"] == "health" and body["status"] == "ok"


def test_family_endpoint(client, schema):
    body = post_ok(client, schema, "/v1/family",
                   {"type": "star", "n": 7, "k": 3, "t": 1})
    assert body["outputs"]["count"] == "15"
    assert body["outputs"]["hypergraph"] == STAR
    assert body["timing"] is None


def test_family_aliases(client, schema):
    b = post_ok(client, schema, "/v1/family", {"type": "b", "n": 7, "k": 3, "s": 2})
    assert b["outputs"]["kind"] == "hitting" and b["outputs"]["count"] == "25"
    a = post_ok(client, schema, "/v1/family", {"type": "a", "n": 9, "k": 3, "t": 1})
    assert a["outputs"]["kind"] == "frequency"
    assert a["outputs"]["ratio"] is not None
    hm = post_ok(client, schema, "/v1/family", {"type": "hm", "n": 9, "k": 3, "t": 1})
    assert hm["outputs"]["kind"] == "hilton-milner"
    fano = post_ok(client, schema, "/v1/family", {"type": "fano"})
    assert fano["outputs"]["count"] == "7"


def test_family_errors(client):
    assert client.post("/v1/family", json={"type": "star", "n": 7, "k": 3}).status_code == 400
    assert client.post("/v1/family", json={"type": "from-file"}).status_code == 400
    assert client.post("/v1/family", json={"type": "nope", "n": 7, "k": 3}).status_code == 400
    assert client.post("/v1/family", json={"n": 7}).status_code == 422  # type missing


def test_co2_endpoint(client, schema):
    body = post_ok(client, schema, "/v1/co2", {"hypergraph": STAR})
    out = body["outputs"]
    assert (out["co2"], out["degree_sum"], out["edges"]) == ("165", "45", "15")
    assert out["ell"] == "2" and out["max_codegree"] == "5"
    level0 = post_ok(client, schema, "/v1/co2", {"hypergraph": STAR, "ell": 0})
    assert level0["outputs"]["co2"] == "225"


def test_co2_parse_error(client):
    resp = client.post("/v1/co2", json={"hypergraph": "5 2\n1 9\n"})
    assert resp.status_code == 400
    assert "line 2" in resp.json()["detail"]


def test_check_endpoint(client, schema):
    ok = post_ok(client, schema, "/v1/check",
                 {"hypergraph": STAR, "prop": "intersecting"})
    assert ok["outputs"]["pass"] is True and ok["status"] == "ok"
    bad = post_ok(client, schema, "/v1/check",
                  {"hypergraph": STAR, "prop": "intersecting", "t": 2})
    assert bad["outputs"]["pass"] is False and bad["status"] == "fail"
    m = post_ok(client, schema, "/v1/check", {"hypergraph": STAR, "prop": "matching"})
    assert m["outputs"]["matching_number"] == "1" and m["outputs"]["pass"] is None
    ci = post_ok(client, schema, "/v1/check",
                 {"hypergraph": STAR, "prop": "common-intersection"})
    assert ci["outputs"]["common"] == ["1"]
    pat = post_ok(client, schema, "/v1/check",
                  {"hypergraph": STAR, "prop": "contains-pattern",
                   "pattern": "berge-path", "s": 3})
    assert pat["outputs"]["pass"] is True
    assert len(pat["outputs"]["witness"]["edge_indices"]) == 3
    free = post_ok(client, schema, "/v1/check",
                   {"hypergraph": STAR, "prop": "pattern-free",
                    "pattern": "minimal-path", "s": 3})
    assert free["outputs"]["pass"] is True


def test_check_errors(client):
    assert client.post("/v1/check", json={"hypergraph": STAR, "prop": "funky"}).status_code == 400
    assert client.post("/v1/check", json={"hypergraph": STAR, "prop": "d-wise"}).status_code == 400
    assert client.post(
        "/v1/check", json={"hypergraph": STAR, "prop": "pattern-free", "pattern": "berge-path"}
    ).status_code == 400


def test_bound_endpoint(client, schema):
    rhs = post_ok(client, schema, "/v1/bound",
                  {"kind": "bey-rhs", "n": 7, "k": 3, "ell": 2, "m": 15})
    assert rhs["outputs"]["value"] == "165"
    chk = post_ok(client, schema, "/v1/bound", {"kind": "check-bey", "hypergraph": STAR})
    assert chk["outputs"]["pass"] is True and chk["outputs"]["slack"] == "0"
    sig = post_ok(client, schema, "/v1/bound", {"kind": "sigma-upper", "pi": "3/4", "k": 3})
    assert sig["outputs"]["value"] == "11/16"
    pi = post_ok(client, schema, "/v1/bound", {"kind": "de-caen-pi", "t": 4, "k": 3})
    assert pi["outputs"]["value"] == "2/3"
    skt = post_ok(client, schema, "/v1/bound", {"kind": "sigma-kt", "t": 4, "k": 3})
    assert skt["outputs"]["value"] == "16/27"
    ekr = post_ok(client, schema, "/v1/bound", {"kind": "ekr-l2", "n": 7, "k": 3})
    assert ekr["outputs"]["value"] == "165"
    l1 = post_ok(client, schema, "/v1/bound", {"kind": "l1-emc", "n": 11, "k": 3, "s": 1})
    assert l1["outputs"]["valid"] is True
    rep = post_ok(client, schema, "/v1/bound", {"kind": "report", "hypergraph": STAR})
    assert rep["outputs"]["co2"] == "165"
    assert rep["outputs"]["bey"]["slack"] == "0"


def test_bound_errors(client):
    assert client.post("/v1/bound", json={"kind": "bey-rhs", "n": 7}).status_code == 400
    assert client.post("/v1/bound", json={"kind": "mystery", "n": 7, "k": 3}).status_code == 400
    assert client.post("/v1/bound", json={"kind": "sigma-upper", "k": 3}).status_code == 400


def test_search_endpoint(client, schema):
    body = post_ok(client, schema, "/v1/search", {
        "n": 5, "k": 2,
        "constraints": [{"kind": "t-intersecting", "t": 1}],
    })
    out = body["outputs"]
    assert out["value"] == "20"
    assert out["certified"] is True and body["status"] == "ok"
    assert out["optima_count"] == "5"
    assert len(out["certificates"]) <= 4
    # budget exhaustion flips status, not the http code
    tiny = post_ok(client, schema, "/v1/search", {
        "n": 6, "k": 2,
        "constraints": [{"kind": "t-intersecting", "t": 1}],
        "node_budget": 2,
    })
    assert tiny["status"] == "uncertified"


def test_search_conjunction_and_errors(client, schema):
    both = post_ok(client, schema, "/v1/search", {
        "n": 6, "k": 3,
        "constraints": [
            {"kind": "pattern-free", "pattern": "minimal-path", "s": 3},
            {"kind": "t-intersecting", "t": 1},
        ],
    })
    assert both["outputs"]["value"] == "90"
    assert client.post("/v1/search", json={
        "n": 6, "k": 3, "constraints": [{"kind": "sparse"}],
    }).status_code == 400
    assert client.post("/v1/search", json={
        "n": 6, "k": 3, "constraints": [{"kind": "matching-at-most"}],
    }).status_code == 400


def test_verify_endpoint(client, schema):
    body = post_ok(client, schema, "/v1/verify", {"claim": "ekr-l2", "n": 7, "k": 3})
    out = body["outputs"]
    assert out["verdict"] == "PASS" and out["claimed"] == out["computed"] == "165"
    assert out["unique"] is True
    emc = post_ok(client, schema, "/v1/verify",
                  {"claim": "emc-ratio", "n": 60, "k": 3, "s": 2})
    assert emc["outputs"]["verdict"] == "PASS"
    fail = post_ok(client, schema, "/v1/verify",
                   {"claim": "emc-ratio", "n": 60, "k": 3, "s": 2, "tol": "0"})
    assert fail["status"] == "fail"
    assert client.post("/v1/verify", json={"claim": "wat", "n": 7, "k": 3}).status_code == 400


def test_timing_toggle(client, schema):
    body = post_ok(client, schema, "/v1/co2", {"hypergraph": STAR, "timing": True})
    assert body["timing"] is not None


def test_byte_identical_reports(client):
    payload = {"type": "star", "n": 8, "k": 3, "t": 1}
    a = client.post("/v1/family", json=payload).content
    b = client.post("/v1/family", json=payload).content
    assert a == b
