import json

import pytest

import cli
import report
from exceptions import InternalAssertion
from models import CheckResult

K9_45 = "12,13,14,15,23,24,25,34,35"


@pytest.fixture(autouse=True)
def log_to_tmp(tmp_path, monkeypatch):
    import config

    monkeypatch.setattr(config, "LOG_FILE", str(tmp_path / "gorbit.log"))


def run_json(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out) if code == 0 else out


def test_strata_summary(capsys):
    code, result = run_json(capsys, ["strata", "--n", "4", "--summary"])
    assert code == 0
    assert result["command"] == "gorbit strata --n 4 --summary"
    assert result["payload"]["total"] == 36
    assert "strata" not in result["payload"]


def test_strata_listing_for_n_5():
    result = cli.run(["strata", "--n", "5"])
    strata = result.payload["strata"]
    assert len(strata) == 171
    assert result.payload["census"]["K9"] == 10
    k9 = next(s for s in strata if s["label"] == "K9(45)")
    assert k9["param_dim"] == 1


def test_fundamental_as_tsv(capsys):
    assert cli.main(["fundamental", "--tsv"]) == 0
    assert capsys.readouterr().out.startswith("p\tm_p\tq_p\tgenerators")


def test_moment_from_a_matrix(capsys):
    matrix = '[["1","0"],["0","1"],["1","1"],["1","2"],["1","3"]]'
    code, result = run_json(capsys, ["moment", "--matrix", matrix])
    assert code == 0
    assert result["payload"]["moment"] == ["5/8", "1/6", "7/24", "7/24", "5/8"]
    assert result["payload"]["regular_point"] is True


def test_moment_from_a_stratum():
    payload = cli.run(["moment", "--sigma", "12,13,23"]).payload
    assert payload["dmu_rank"] == 2
    assert payload["polytope"]["type"] == "TRIANGLE"
    assert payload["in_relative_interior"] is True


def test_params_commands():
    transitions = cli.run(["params", "check-transitions", "--samples", "5"]).payload
    assert not any(transitions["failures"].values())
    assert transitions["example"]["chart_13"] == ["(2:1)", "(3/2:1)", "(3/4:1)"]

    virtual = cli.run(["params", "virtual", "--sigma", K9_45]).payload
    assert virtual["label"] == "K9(45)"
    assert virtual["pieces"] == ["(c,c,(1:1)), c in CP1_A"]

    embed = cli.run(["params", "embed", "--triple", "(2:1),(3:1),(3:2)"]).payload
    assert embed["embedding"]["valid"] is True
    assert set(embed["residues"]) == {"0"}

    center = cli.run(["params", "embed", "--triple", "(1:1),(1:1),(1:1)", "--direction", "(0:1)"]).payload
    assert center["point"] == "(center,(0:1))"


def test_homology_command(capsys):
    code, result = run_json(capsys, ["homology", "--space", "g52", "--coeff", "z"])
    assert code == 0
    degrees = {d["degree"]: d for d in result["payload"]["degrees"]}
    assert degrees[5]["torsion"] == [2]
    assert degrees[8]["free_rank"] == 1


@pytest.mark.parametrize("argv", [
    ["strata", "--n", "9"],
    ["bogus"],
    ["moment"],
    ["moment", "--sigma", "12,34"],
    ["homology", "--coeff", "q"],
    ["homology", "--space", "V4"],
    ["params", "embed", "--triple", "(1:1),(1:1),(1:1)"],
    ["params", "embed", "--triple", "(2:1),(3:1)"],
    ["report-all", "--n", "4"],
])
def test_invalid_input_exits_with_2(argv, capsys):
    assert cli.main(argv) == cli.EXIT_VALIDATION
    assert capsys.readouterr().err.startswith("error:")


def test_internal_failure_exits_with_3(monkeypatch, capsys):
    def broken(*args, **kwargs):
        raise InternalAssertion("boom")

    monkeypatch.setattr(report, "homology_report", broken)
    assert cli.main(["homology"]) == cli.EXIT_INTERNAL
    assert "boom" in capsys.readouterr().err


def test_failed_checks_exit_with_3(monkeypatch, capsys):
    monkeypatch.setattr(
        report, "run_checks",
        lambda n, seed, samples: [CheckResult(name="stratum_census", passed=False, detail="x")],
    )
    assert cli.main(["report-all"]) == cli.EXIT_INTERNAL
    result = json.loads(capsys.readouterr().out)
    assert result["payload"]["passed"] is False
    assert result["seed"] == 7


@pytest.mark.parametrize("argv", [
    ["params", "check-transitions", "--samples", "5", "--seed", "11"],
    ["strata", "--n", "4"],
])
def test_same_seed_gives_identical_json(argv, capsys):
    outputs = []
    for _ in range(2):
        assert cli.main(argv) == 0
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]
    assert json.loads(outputs[0])["command"] == "gorbit " + " ".join(argv)
