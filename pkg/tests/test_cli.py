import json

import jsonschema
import pytest

from cosq.cli import main
from cosq.report import schema_text


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert err == ""
    body = json.loads(out)
    jsonschema.validate(body, json.loads(schema_text()))
    return code, body


# --- family / round trip ----------------------------------------------------


def test_family_star_to_stdout(capsys):
    code, out, err = run(capsys, "family", "--type", "star", "--n", "7", "--k", "3", "--t", "1")
    assert code == 0
    assert out.startswith("7 3\n")
    assert len(out.strip().splitlines()) == 16  # header + 15 edges


def test_family_fano_writes_file(tmp_path, capsys):
    path = str(tmp_path / "fano.hg")
    code, out, _ = run(capsys, "family", "--type", "fano", "--out", path)
    assert code == 0
    assert "7 edges" in out
    code2, out2, _ = run(capsys, "co2", path)
    assert code2 == 0
    assert "co2: 21" in out2


def test_family_roundtrip_is_canonical(tmp_path, capsys):
    path = str(tmp_path / "b.hg")
    run(capsys, "family", "--type", "b", "--n", "7", "--k", "3", "--s", "2", "--out", path)
    text = open(path).read()
    from cosq.core import format_hypergraph, parse_hypergraph

    assert format_hypergraph(parse_hypergraph(text)) == text
    assert len(text.strip().splitlines()) == 26


def test_family_bad_spec_exits_2(capsys):
    code, out, err = run(capsys, "family", "--type", "star", "--n", "7", "--k", "3")
    assert code == 2
    assert "error" in err


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["family"])  # --type required
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["mystery-command"])
    assert exc.value.code == 2


# --- check / bound exit codes -------------------------------------------------


def test_check_pass_and_fail_codes(tmp_path, capsys):
    star = str(tmp_path / "star.hg")
    run(capsys, "family", "--type", "star", "--n", "7", "--k", "3", "--t", "1", "--out", star)
    code, out, _ = run(capsys, "check", star, "--prop", "intersecting", "--t", "1")
    assert code == 0
    assert "result: PASS" in out
    code, out, _ = run(capsys, "check", star, "--prop", "intersecting", "--t", "2")
    assert code == 1
    assert "result: FAIL" in out
    code, out, _ = run(capsys, "check", star, "--prop", "matching")
    assert code == 0
    assert "matching_number: 1" in out


def test_check_missing_file_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["check", "/nonexistent.hg", "--prop", "intersecting"])
    assert exc.value.code == 2


def test_bound_values(capsys):
    code, out, _ = run(capsys, "bound", "sigma-upper", "--pi", "3/4", "--k", "3")
    assert code == 0
    assert "value: 11/16" in out
    code, body = run_json(capsys, "bound", "ekr-l2", "--n", "7", "--k", "3", "--json")
    assert code == 0
    assert body["outputs"]["value"] == "165"


def test_bound_check_bey_fail_is_distinguishable(tmp_path, capsys):
    # check-bey on a real hypergraph never fails; a missing input is a
    # usage error (2), not a property failure (1)
    code, _, err = run(capsys, "bound", "check-bey")
    assert code == 2 and "error" in err


# --- search / verify ----------------------------------------------------------


def test_search_json_report(capsys):
    code, body = run_json(
        capsys, "search", "--n", "5", "--k", "2", "--t-intersecting", "1", "--json"
    )
    assert code == 0
    assert body["outputs"]["value"] == "20"
    assert body["outputs"]["certified"] is True


def test_search_budget_exit_3(capsys):
    code, body = run_json(
        capsys, "search", "--n", "6", "--k", "2", "--t-intersecting", "1",
        "--node-budget", "2", "--json",
    )
    assert code == 3
    assert body["status"] == "uncertified"


def test_verify_exit_codes(capsys):
    code, body = run_json(capsys, "verify", "ekr-l2", "--n", "7", "--k", "3", "--json")
    assert code == 0
    assert body["outputs"]["claimed"] == "165"
    assert body["outputs"]["computed"] == "165"
    assert body["outputs"]["unique"] is True
    code, body = run_json(
        capsys, "verify", "emc-ratio", "--n", "60", "--k", "3", "--s", "2",
        "--tol", "0", "--json",
    )
    assert code == 1


def test_workers_from_env(capsys, monkeypatch):
    monkeypatch.setenv("HX_THREADS", "2")
    code, body = run_json(
        capsys, "search", "--n", "5", "--k", "2", "--t-intersecting", "1", "--json"
    )
    assert code == 0
    assert body["workers"] == "2"
    monkeypatch.setenv("HX_THREADS", "zero")
    with pytest.raises(SystemExit) as exc:
        main(["search", "--n", "5", "--k", "2", "--t-intersecting", "1"])
    assert exc.value.code == 2


def test_explicit_workers_beat_env(capsys, monkeypatch):
    monkeypatch.setenv("HX_THREADS", "4")
    code, body = run_json(
        capsys, "search", "--n", "5", "--k", "2", "--t-intersecting", "1",
        "--workers", "1", "--json",
    )
    assert body["workers"] == "1"


# --- stability and randomness ---------------------------------------------------


def test_json_reports_byte_stable(capsys):
    _, out1, _ = run(capsys, "verify", "ekr-l2", "--n", "6", "--k", "3", "--json")
    _, out2, _ = run(capsys, "verify", "ekr-l2", "--n", "6", "--k", "3", "--json")
    assert out1 == out2
    assert json.loads(out1)["timing"] is None


def test_timing_flag_populates_field(capsys):
    _, body = run_json(capsys, "bound", "de-caen-pi", "--t", "4", "--k", "3",
                       "--json", "--timing")
    assert body["timing"] is not None


def test_random_is_seeded(tmp_path, capsys):
    args = ("random", "--seed", "7", "--n", "9", "--k", "3", "--edges", "12")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2
    assert out1.startswith("9 3\n")
    _, out3, _ = run(capsys, "random", "--seed", "8", "--n", "9", "--k", "3",
                     "--edges", "12")
    assert out3 != out1


def test_random_too_many_edges_exits_2(capsys):
    code, _, err = run(capsys, "random", "--seed", "1", "--n", "5", "--k", "3",
                       "--edges", "99")
    assert code == 2 and "error" in err


def test_stdin_input(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("5 2\n1 2\n2 3\n"))
    code, out, _ = run(capsys, "co2", "-")
    assert code == 0
    assert "co2: 6" in out
