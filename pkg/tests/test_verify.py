import json

import networkx as nx
import pytest

from bchroma import families as fam
from bchroma.verify import (
    CLAIM_IDS,
    CONFIRMED,
    EXIT_OK,
    EXIT_REFUTED,
    EXIT_TIMEOUT,
    REFUTED,
    TIMEOUT,
    UNSUPPORTED,
    ClaimError,
    ClaimResult,
    Report,
    SuiteConfig,
    count_max_cliques,
    default_grid,
    emit_report,
    evaluate_claim,
    exit_code,
    family_corpus,
    named_graph,
    random_corpus,
    run_suite,
)


def test_cycle4_claim():
    r = evaluate_claim("PROP12-CYCLE", {"n": 4})
    assert (r.formula, r.solver, r.status) == (2, 2, CONFIRMED)
    assert "oracle-confirmed" in r.notes


def test_jaco_claim():
    r = evaluate_claim("JACO", {"n": 5, "m": 1, "c": 0})
    assert "v_3" in r.notes
    assert (r.formula, r.solver, r.status) == (3, 3, CONFIRMED)


def test_chithra_triangle_pendant_is_refuted():
    r = evaluate_claim("CHITHRA", {"base": "K3", "subsets": [[1]]})
    assert (r.formula, r.solver, r.status) == (4, 3, REFUTED)
    assert "upper bound 3" in r.notes


def test_chithra_path_result_is_unsupported():
    # P_4 plus a pendant on an end vertex is P_5, excluded by hypothesis
    r = evaluate_claim("CHITHRA", {"base": "P4", "subsets": [[1]]})
    assert r.status == UNSUPPORTED and "path P_5" in r.notes
    r = evaluate_claim("CHITHRA", {"base": "K3", "subsets": [[1, 2, 3]]})
    assert (r.formula, r.solver, r.status) == (4, 4, CONFIRMED)


def test_ornated_zero_string_is_unsupported():
    r = evaluate_claim("ORNATED", {"n": 4, "s": [0, 0]})
    assert r.status == UNSUPPORTED and r.solver is None


def test_rasta_invalid_spec_is_unsupported():
    r = evaluate_claim("RASTA", {"terms": [3, 3]})
    assert r.status == UNSUPPORTED


def test_unknown_claim_and_bad_params():
    with pytest.raises(ClaimError):
        evaluate_claim("NOPE", {})
    with pytest.raises(ClaimError):
        evaluate_claim("PROP12-COMPLETE", {"n": 40})
    with pytest.raises(ClaimError):
        evaluate_claim("PROP12-COMPLETE", {})


def test_timeout_status():
    r = evaluate_claim("SETGRAPH", {"n": 4}, budget=10)
    assert r.status == TIMEOUT and r.solver is None


def test_fast_path_agrees_with_search():
    # formula 5 exceeds the m-bound 4; the full search still runs and must agree
    r = evaluate_claim("SETGRAPH", {"n": 3})
    assert r.status == REFUTED and r.solver == 4


@pytest.mark.parametrize("g, expected", [(fam.set_graph(2), (2, 2)), (fam.set_graph(3), (4, 4)), (fam.complete(4), (4, 1))])
def test_count_max_cliques(g, expected):
    assert count_max_cliques(g) == expected


@pytest.mark.parametrize("name", ["setgraph4", "setgraph5", "W5", "rasta5,4,3,2", "sun5", "C5"])
def test_count_max_cliques_against_networkx(name):
    g = named_graph(name)
    ng = nx.Graph(g.edges())
    ng.add_nodes_from(g.vertices)
    sizes = [len(c) for c in nx.find_cliques(ng)]
    top = max(sizes)
    assert count_max_cliques(g) == (top, sizes.count(top))


def test_named_graph():
    assert named_graph("K2,3") == fam.complete_bipartite(2, 3)
    assert named_graph("W5") == fam.wheel(5)
    assert named_graph("rasta4,3,2") == fam.rasta((4, 3, 2))
    with pytest.raises(ClaimError):
        named_graph("Q3")


def test_grids_respect_filters():
    assert len(default_grid("PROP12-COMPLETE", max_n=8)) == 8
    assert default_grid("SETGRAPH", n=2) == [{"n": 2}]
    assert [p["terms"] for p in default_grid("RASTA")] == [[3, 2], [4, 2], [4, 3, 2], [5, 3, 2], [5, 4, 3, 2]]
    assert len(default_grid("ORNATED")) == 84 * 12


def test_every_claim_has_a_grid():
    for claim in CLAIM_IDS:
        assert default_grid(claim), claim


def test_corpora():
    assert len(random_corpus()) >= 200
    assert random_corpus()[:5] == random_corpus()[:5]
    labels = [label for label, _ in family_corpus()]
    assert "setgraph4" in labels and "rasta(5, 4, 3, 2)" in labels


def test_suite_complete_graphs():
    report = run_suite(SuiteConfig(claims=("PROP12-COMPLETE",), max_n=8, deterministic=True))
    assert len(report.results) == 8
    assert all(r.status == CONFIRMED for r in report.results)
    assert exit_code(report) == EXIT_OK


def test_suite_setgraph_two_refuted():
    report = run_suite(SuiteConfig(claims=("SETGRAPH",), n=2))
    (r,) = report.results
    assert (r.formula, r.solver, r.status) == (3, 2, REFUTED)
    assert exit_code(report) == EXIT_REFUTED


def test_suite_rasta():
    report = run_suite(SuiteConfig(claims=("RASTA",)))
    assert [r.formula for r in report.results] == [2] * 5


def test_suite_ordering_and_parallel_agree():
    cfg = dict(claims=("PROP12-PATH", "JACO"), max_n=9, deterministic=True)
    serial = run_suite(SuiteConfig(**cfg))
    parallel = run_suite(SuiteConfig(workers=2, **cfg))
    assert emit_report(serial) == emit_report(parallel)
    jaco = [r.params for r in serial.results if r.claim == "JACO"]
    assert jaco[:2] == [{"n": 2, "m": 1, "c": 0}, {"n": 2, "m": 1, "c": 1}]
    assert serial.results[0].claim == "PROP12-PATH"


def test_unknown_claim_in_suite():
    with pytest.raises(ClaimError):
        run_suite(SuiteConfig(claims=("BOGUS",)))


def test_empty_report():
    data = json.loads(emit_report(Report("empty", "0")))
    assert data == {
        "suite": "empty",
        "version": "0",
        "results": [],
        "summary": {"confirmed": 0, "refuted": 0, "unsupported": 0, "timeout": 0},
    }


def test_single_instance_summary_and_schema():
    report = Report("one", "0", [ClaimResult("PROP12-COMPLETE", {"n": 3}, 3, 3, CONFIRMED, 0.0, "")])
    data = json.loads(emit_report(report))
    assert data["summary"] == {"confirmed": 1, "refuted": 0, "unsupported": 0, "timeout": 0}
    assert set(data["results"][0]) == {"claim", "params", "formula", "solver", "status", "seconds", "notes"}


def test_exit_codes():
    refuted = Report("r", "0", [ClaimResult("SETGRAPH", {"n": 2}, 3, 2, REFUTED)])
    assert exit_code(refuted) == EXIT_REFUTED
    refuted.results.append(ClaimResult("SETGRAPH", {"n": 4}, 9, None, TIMEOUT))
    assert exit_code(refuted) == EXIT_TIMEOUT


def test_text_report_is_a_table():
    report = run_suite(SuiteConfig(claims=("PROP12-CYCLE",), max_n=5, deterministic=True))
    text = emit_report(report, "text").decode()
    lines = text.splitlines()
    assert lines[1].startswith("claim")
    assert lines[-1] == "confirmed=3 refuted=0 unsupported=0 timeout=0"
    with pytest.raises(ValueError):
        emit_report(report, "xml")


def test_pairwise_definition_changes_path4():
    r = evaluate_claim("PROP12-PATH", {"n": 4}, definition="pairwise")
    assert (r.solver, r.status) == (3, CONFIRMED)


def test_decomposition_claim():
    r = evaluate_claim("CHITHRA-DECOMP", {"graph": "W4", "U": [1]})
    assert r.status == CONFIRMED and "maximal, not maximum" in r.notes
