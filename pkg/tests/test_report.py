import json

import pytest

from symreduce.report import (
    OnanScottType,
    ReduceConfig,
    Verdict,
    emit,
    report_payload,
    run_reduce,
)


@pytest.fixture(scope="module")
def default_report():
    return run_reduce(ReduceConfig())


def test_top_level_keys(default_report):
    payload = report_payload(default_report)
    assert set(payload) == {"verdicts", "evidence", "hypotheses", "config", "version"}


def test_verdicts(default_report):
    payload = report_payload(default_report)
    assert payload["verdicts"] == {
        "affine": "open",
        "almost_simple": "open",
        "simple_diagonal": "eliminated_by_computation",
        "product": "eliminated_by_computation",
        "twisted_wreath": "eliminated_by_citation",
    }
    assert set(payload["verdicts"]) == {t.value for t in OnanScottType}
    assert all(v in {m.value for m in Verdict} for v in payload["verdicts"].values())


def test_evidence_sections(default_report):
    evidence = report_payload(default_report)["evidence"]
    assert set(evidence) == {"simple_diagonal", "product", "twisted_wreath", "point_imprimitive"}
    sd = evidence["simple_diagonal"]
    assert sd["survivors"] == []
    assert sd["near_misses"] == ["L3(4)"]
    assert sd["m_range"] == [2, 6]
    assert "verified within catalog bound" in sd["label"]
    scan = sd["out4_scan"]
    assert scan["candidates"] == ["L3(4)"]
    assert scan["tail_ok"] is True
    assert scan["label"] == "verified within bounds [n_max=12, q_max=1024]"


def test_product_evidence(default_report):
    product = report_payload(default_report)["evidence"]["product"]
    got = [(t["v"], t["k"], t["lambda"]) for t in product["triples"]]
    assert (16, 6, 2) in got and (121, 25, 5) in got and (441, 56, 7) in got
    # the enumeration finds a fourth admissible triple, so the reference
    # comparison reports a mismatch rather than silently dropping it
    assert (81, 16, 3) in got
    assert product["matches_reference"] is False
    assert product["reference_triples"] == [[16, 6, 2], [121, 25, 5], [441, 56, 7]]
    m4 = {c["v0"]: c for c in product["m4_cases"]}
    assert m4[5]["candidates"] == [243, 256]
    assert m4[6]["candidates"] == [400, 405, 432]
    assert m4[5]["survivors"] == [] and m4[6]["survivors"] == []


def test_twisted_wreath_citation(default_report):
    tw = report_payload(default_report)["evidence"]["twisted_wreath"]
    assert "point-regular normal subgroup" in tw["citation"]
    assert "solvable" in tw["citation"]


def test_imprimitive_evidence(default_report):
    imp = report_payload(default_report)["evidence"]["point_imprimitive"]
    samples = {s["lambda"]: s for s in imp["samples"]}
    assert samples[3]["v"] == 45 and samples[3]["k"] == 12
    assert samples[4]["v"] == 96 and samples[4]["k"] == 20


def test_hypotheses_present(default_report):
    hyps = report_payload(default_report)["hypotheses"]
    assert any("lambda > 100" in h for h in hyps)
    assert any("within the configured bounds" in h for h in hyps)


def test_json_determinism():
    a = emit(run_reduce(ReduceConfig()), "json")
    b = emit(run_reduce(ReduceConfig()), "json")
    assert a == b
    parsed = json.loads(a)
    assert parsed["version"] == "0.1.0"


def test_markdown_sections(default_report):
    text = emit(default_report, "md")
    for heading in ["## Affine", "## Almost simple", "## Simple diagonal",
                    "## Product", "## Twisted wreath", "## Point-imprimitive case",
                    "## Configuration"]:
        assert heading in text, heading
    assert "verified within bounds" in text


def test_emit_rejects_unknown_format(default_report):
    with pytest.raises(ValueError):
        emit(default_report, "xml")


def test_degenerate_bound_warns():
    report = run_reduce(ReduceConfig(catalog_bound=59))
    payload = report_payload(report)
    warnings = payload["evidence"]["simple_diagonal"]["warnings"]
    assert any("bounds too small" in w for w in warnings)


def test_small_out4_bounds_warn_not_crash():
    report = run_reduce(ReduceConfig(out4_n_max=6, out4_q_max=3))
    payload = report_payload(report)
    scan = payload["evidence"]["simple_diagonal"]["out4_scan"]
    assert scan["tail_ok"] is False
    assert any("too small" in w for w in scan["warnings"])
    assert not report.agrees_with_reference


def test_agreement_flag(default_report):
    # the fourth product triple keeps full agreement out of reach
    assert default_report.product_matches_reference is False
    assert default_report.agrees_with_reference is False


def test_config_payload(default_report):
    config = report_payload(default_report)["config"]
    assert config["catalog_bound"] == 10_000_000
    assert config["out4_n_max"] == 12
    assert config["out4_q_max"] == 1024
    assert config["v0_min"] == 2
