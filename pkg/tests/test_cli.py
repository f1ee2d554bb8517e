import json

import pytest

from symreduce.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_admissible(capsys):
    code, out, _ = run(capsys, "check", "7", "3", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["admissible"] is True
    assert payload["violations"] == []


def test_check_inadmissible(capsys):
    code, out, _ = run(capsys, "check", "8", "3", "1")
    assert code == 2
    payload = json.loads(out)
    assert payload["admissible"] is False
    assert payload["violations"]


def test_check_usage_error(capsys):
    code, _, err = run(capsys, "check", "7", "3")
    assert code == 1
    code, _, err = run(capsys, "check", "7", "3", "x")
    assert code == 1


def test_atlas_order(capsys):
    code, out, _ = run(capsys, "atlas", "order", "L3(4)")
    assert code == 0
    assert out.strip() == "20160"


def test_atlas_order_alias(capsys):
    code, out, _ = run(capsys, "atlas", "order", "L2(4)")
    assert code == 0
    assert out.strip() == "60"


def test_atlas_order_bad_group(capsys):
    code, _, err = run(capsys, "atlas", "order", "A4")
    assert code == 1
    assert "5" in err  # mentions the degree floor


def test_atlas_out(capsys):
    code, out, _ = run(capsys, "atlas", "out", "L3(4)")
    assert code == 0
    assert out.strip() == "12"


def test_atlas_scan_default(capsys):
    code, out, _ = run(capsys, "atlas", "scan")
    assert code == 0
    payload = json.loads(out)
    assert payload["candidates"] == ["L3(4)"]
    assert payload["tail_ok"] is True
    assert payload["label"] == "verified within bounds [n_max=12, q_max=1024]"


def test_atlas_scan_family_restricted(capsys):
    code, out, _ = run(capsys, "atlas", "scan", "--families", "unitary")
    assert code == 0
    payload = json.loads(out)
    assert payload["candidates"] == []


def test_atlas_scan_unknown_family(capsys):
    code, _, err = run(capsys, "atlas", "scan", "--families", "nonsense")
    assert code == 1


def test_atlas_scan_small_bounds(capsys):
    code, out, err = run(capsys, "atlas", "scan", "--out4-nmax", "6",
                         "--out4-qmax", "3", "--no-sporadic")
    assert code == 1
    payload = json.loads(out)
    assert payload["candidates"] == []
    assert payload["tail_ok"] is False
    assert payload["failing_checks"]
    assert "too small" in err


def test_atlas_catalog(capsys):
    code, out, _ = run(capsys, "atlas", "catalog", "--catalog-bound", "200")
    assert code == 0
    payload = json.loads(out)
    assert [g["name"] for g in payload["groups"]] == ["A5", "L2(7)"]
    assert payload["groups"][0]["order"] == 60
    assert payload["groups"][0]["family"] == "alternating"


def test_diagonal_scan(capsys):
    code, out, _ = run(capsys, "diagonal", "scan")
    assert code == 0
    payload = json.loads(out)
    assert payload["survivors"] == []
    assert payload["near_misses"] == ["L3(4)"]


def test_diagonal_scan_env_bound(capsys, monkeypatch):
    monkeypatch.setenv("SYMREDUCE_CATALOG_BOUND", "59")
    code, out, _ = run(capsys, "diagonal", "scan")
    assert code == 0
    payload = json.loads(out)
    assert payload["catalog_bound"] == 59
    assert payload["catalog_size"] == 0


def test_diagonal_scan_flag_beats_env(capsys, monkeypatch):
    monkeypatch.setenv("SYMREDUCE_CATALOG_BOUND", "59")
    code, out, _ = run(capsys, "diagonal", "scan", "--catalog-bound", "200")
    assert code == 0
    assert json.loads(out)["catalog_bound"] == 200


def test_diagonal_scan_env_not_integer(capsys, monkeypatch):
    monkeypatch.setenv("SYMREDUCE_CATALOG_BOUND", "ten")
    code, _, err = run(capsys, "diagonal", "scan")
    assert code == 1
    assert "SYMREDUCE_CATALOG_BOUND" in err


def test_product_enumerate_disagrees(capsys):
    # the computation finds a fourth triple beyond the reference list, so
    # the regression exit code reports a disagreement
    code, out, _ = run(capsys, "product", "enumerate")
    assert code == 2
    payload = json.loads(out)
    got = [(t["v"], t["k"], t["lambda"]) for t in payload["triples"]]
    assert (81, 16, 3) in got
    assert payload["matches_reference"] is False


def test_product_enumerate_v0_floor(capsys):
    code, out, _ = run(capsys, "product", "enumerate", "--v0-min", "5")
    assert code == 2  # (81, 16, 3) has witness v0 = 9, still present
    payload = json.loads(out)
    got = [(t["v"], t["k"], t["lambda"]) for t in payload["triples"]]
    assert (16, 6, 2) not in got
    assert (81, 16, 3) in got


def test_product_enumerate_bad_floor(capsys):
    code, _, _ = run(capsys, "product", "enumerate", "--v0-min", "3")
    assert code == 1


def test_product_m4(capsys):
    code, out, _ = run(capsys, "product", "m4", "5")
    assert code == 0
    payload = json.loads(out)
    assert payload["candidates"] == [243, 256]
    assert payload["survivors"] == []


def test_product_m4_out_of_domain(capsys):
    code, _, err = run(capsys, "product", "m4", "7")
    assert code == 1


def test_imprimitive_family(capsys):
    code, out, _ = run(capsys, "imprimitive", "family", "3")
    assert code == 0
    payload = json.loads(out)
    assert payload["v"] == 45 and payload["k"] == 12
    assert payload["options"] == [[9, 5, 3], [5, 9, 2]]


def test_imprimitive_family_domain(capsys):
    code, _, _ = run(capsys, "imprimitive", "family", "1")
    assert code == 1


def test_reduce_disagrees_by_default(capsys):
    code, out, _ = run(capsys, "reduce")
    assert code == 2
    payload = json.loads(out)
    assert set(payload) == {"verdicts", "evidence", "hypotheses", "config", "version"}


def test_reduce_markdown(capsys):
    code, out, _ = run(capsys, "reduce", "--format", "md")
    assert code == 2
    assert out.startswith("# Reduction report")


def test_reduce_env_format(capsys, monkeypatch):
    monkeypatch.setenv("SYMREDUCE_FORMAT", "md")
    code, out, _ = run(capsys, "reduce")
    assert out.startswith("# Reduction report")


def test_reduce_bad_format(capsys, monkeypatch):
    monkeypatch.setenv("SYMREDUCE_FORMAT", "xml")
    code, _, err = run(capsys, "reduce")
    assert code == 1


def test_reduce_output_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "reduce", "--output", str(target))
    assert code == 2
    assert out == ""
    assert json.loads(target.read_text())["version"] == "0.1.0"


def test_sporadic_table_flag(capsys, tmp_path):
    custom = tmp_path / "table.txt"
    custom.write_text("Q1, 6000000, 9\n")
    code, out, _ = run(capsys, "atlas", "order", "Q1", "--sporadic-table", str(custom))
    assert code == 0
    assert out.strip() == "6000000"
    # |Q1| = 6000000 < 9**4 = 6561? no: 6561 < 6000000, not a candidate
    code, out, _ = run(capsys, "atlas", "scan", "--sporadic-table", str(custom))
    assert code == 0
    assert json.loads(out)["candidates"] == ["L3(4)"]


def test_sporadic_table_candidate_injection(capsys, tmp_path):
    # a fake group with huge out-order must surface as a candidate and
    # flip the scan's exit code to "disagree"
    custom = tmp_path / "table.txt"
    custom.write_text("Q2, 6000, 9\n")
    code, out, _ = run(capsys, "atlas", "scan", "--sporadic-table", str(custom))
    assert code == 2
    assert "Q2" in json.loads(out)["candidates"]


def test_no_arguments_usage(capsys):
    code, _, _ = run(capsys)
    assert code == 1


def test_unknown_subcommand(capsys):
    code, _, _ = run(capsys, "frobnicate")
    assert code == 1
