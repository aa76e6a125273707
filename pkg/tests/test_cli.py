import json
from pathlib import Path

import pytest

from isodense import caps
from isodense.cli import compile_filter, main
from isodense.documents import loads
from isodense.errors import DocumentError

FIXTURES = Path(__file__).parent / "fixtures"
GOLDENS = Path(__file__).parent / "goldens"
GOLDEN_NAMES = sorted(p.stem for p in GOLDENS.glob("*.json"))


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name", GOLDEN_NAMES)
def test_analyze_matches_golden(capsys, name):
    code, out, _ = run(capsys, "analyze", FIXTURES / f"{name}.json", "--json")
    assert code == 0
    assert json.loads(out) == json.loads((GOLDENS / f"{name}.json").read_text())


@pytest.mark.parametrize("name", GOLDEN_NAMES)
def test_analyze_json_round_trip(capsys, tmp_path, name):
    _, first, _ = run(capsys, "analyze", FIXTURES / f"{name}.json", "--json")
    path = tmp_path / "report.json"
    path.write_text(first)
    _, second, _ = run(capsys, "analyze", path, "--json")
    assert first == second


def test_analyze_text_mentions_resolving_pair(capsys):
    code, out, _ = run(capsys, "analyze", FIXTURES / "strong_not_topology.json")
    assert code == 0
    assert "resolvable: true, witness {2}/{1,3}" in out


def test_analyze_intersections(capsys):
    _, out, _ = run(capsys, "analyze", FIXTURES / "dense_open_core.json")
    assert "I(D): {}" in out
    assert "I(DO): {1,2}" in out


def test_analyze_empty_ground(capsys):
    code, out, _ = run(capsys, "analyze", FIXTURES / "empty_ground.json")
    assert code == 0
    assert "ground: {}" in out and "I(D): undefined" in out


def test_quasiorder_closure_is_announced(capsys):
    code, _, err = run(capsys, "analyze", FIXTURES / "zigzag_5.json")
    assert code == 0
    assert "closure" in err


def test_check_holds(capsys):
    code, out, _ = run(capsys, "check", FIXTURES / "four_point_family.json", "T3.6")
    assert code == 0
    assert out.rstrip().endswith("verdict: holds")


def test_check_converse_fires(capsys):
    code, out, _ = run(capsys, "check", FIXTURES / "singleton_family_n2.json", "C3.11-converse", "--json")
    assert code == 1
    report = json.loads(out)
    assert report["verdict"] == "violated"
    values = {c["label"]: c["value"] for c in report["conditions"]}
    assert values == {"tau[<=A] = mu[A]": False, "tau[<=mu_tilde[A]] = mu_tilde[A]": True}


def test_check_quasiorder_statement(capsys):
    code, out, _ = run(capsys, "check", FIXTURES / "zigzag_5.json", "P2.13")
    assert code == 0 and "verdict: holds" in out


def test_check_space_statement_on_family_document(capsys):
    code, _, err = run(capsys, "check", FIXTURES / "four_point_family.json", "T4.8")
    assert code == 0 and "mu[A]" in err


def test_check_wrong_document_kind(capsys):
    code, _, err = run(capsys, "check", FIXTURES / "strong_not_topology.json", "P2.13")
    assert code == 2 and "quasiorder document" in err


def test_malformed_document(capsys):
    code, out, err = run(capsys, "analyze", FIXTURES / "malformed.json")
    assert code == 2
    assert out == ""
    assert "line 3" in err


def test_invalid_open_sets(capsys):
    code, out, err = run(capsys, "check", FIXTURES / "not_union_closed.json", "P2.7")
    assert code == 2 and out == ""
    assert "{1} and {2}" in err


def test_unknown_statement(capsys):
    code, _, err = run(capsys, "check", FIXTURES / "strong_not_topology.json", "X1.1")
    assert code == 2 and "unknown statement" in err


def test_missing_file(capsys):
    code, _, err = run(capsys, "analyze", FIXTURES / "nope.json")
    assert code == 2 and "cannot read" in err


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["search", "T3.7"])
    assert info.value.code == 2


def test_search_none_found(capsys):
    code, out, _ = run(capsys, "search", "T3.7", "--n", 3)
    assert code == 0
    assert out.strip() == "none found, 254 instances"


def test_search_weakened_statement(capsys):
    code, out, _ = run(capsys, "search", "T3.10-nohyp", "--n", 2)
    assert code == 1
    assert "A = {{1}, {2}} on X = {1,2}" in out


def test_search_converse(capsys):
    code, out, _ = run(capsys, "search", "C3.11-converse", "--n", 2, "--json")
    assert code == 1
    data = json.loads(out)
    assert data["counterexample"]["instance"] == {"ground": ["1", "2"], "family": [["1"]]}


def test_search_random_is_seeded(capsys):
    args = ("search", "P5.4-nohyp", "--n", 5, "--seed", 11, "--budget", 500, "--json")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_enumerate_counts(capsys):
    assert run(capsys, "enumerate", "--n", 2, "--kind", "quasiorders", "--count-only")[1].strip() == "4"
    assert run(capsys, "enumerate", "--n", 3, "--kind", "families", "--count-only")[1].strip() == "256 (254 admissible)"
    assert run(capsys, "enumerate", "--n", 3, "--kind", "gentopos", "--count-only")[1].strip() == "61"


def test_enumerate_filter_listing_rechecks(capsys, tmp_path):
    from isodense import props

    code, out, _ = run(capsys, "enumerate", "--n", 3, "--kind", "gentopos", "--filter", "resolvable")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 11
    for line in lines:
        assert props.is_resolvable(loads(line).space())


def test_enumerate_filter_expressions(capsys):
    _, out, _ = run(capsys, "enumerate", "--n", 3, "--kind", "gentopos", "--filter", "T0 and not T1", "--count-only")
    assert out.strip().startswith("36 of 61")


def test_enumerate_cap_and_override(capsys):
    code, _, err = run(capsys, "enumerate", "--n", 5, "--kind", "quasiorders", "--count-only")
    assert code == 2 and "--max-n" in err
    code, out, err = run(capsys, "--max-n", 5, "enumerate", "--n", 5, "--kind", "quasiorders", "--count-only")
    assert code == 0 and out.strip() == "6942"
    assert "may be slow" in err
    assert caps.LIMITS == caps.DEFAULTS


def test_filter_parser_errors():
    from isodense.cli import SPACE_FLAGS, UsageError

    with pytest.raises(UsageError, match="unknown flag"):
        compile_filter("shiny", SPACE_FLAGS)
    with pytest.raises(UsageError):
        compile_filter("T0 and", SPACE_FLAGS)
    with pytest.raises(UsageError):
        compile_filter("(T0", SPACE_FLAGS)


def test_document_validation():
    with pytest.raises(DocumentError, match="exactly one"):
        loads('{"ground": ["1"], "family": [], "open_sets": [[]]}')
    with pytest.raises(DocumentError, match="not in ground"):
        loads('{"ground": ["1"], "family": [["2"]]}')
    with pytest.raises(DocumentError, match="duplicate"):
        loads('{"ground": ["1", "1"], "family": []}')
    with pytest.raises(DocumentError, match="pair"):
        loads('{"ground": ["1"], "quasiorder": [["1"]]}')
