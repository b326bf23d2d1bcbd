import pytest

from demazure.cli import commands
from demazure.cli.commands import CommandResult, ExitStatus, run
from demazure.cli.config import RunConfig
from demazure.exceptions.exceptions import ValidationError
from demazure.geometry.verification import IndependenceReport

PLUCKER = [[1, 4], [2, 3]]


def test_scan():
    result = run("scan", RunConfig("scan", tabloid=[[1, 3], [2]], paths=True))
    assert result.payload["scan"] == [[2, 3], [2]]
    assert result.payload["paths"]["(1,1)"] == [[1, 1], [1, 2]]
    assert result.text == "[[2, 3], [2]]"
    assert result.status == ExitStatus.OK


def test_render():
    result = CommandResult({"b": 1, "a": True}, "text")
    assert result.render("json") == '{"a": true, "b": 1}'
    assert result.render("text") == "text"


def test_key():
    config = RunConfig("key", n=3, chain=[[1], [1, 3]])
    assert run("key", config).payload == {"key": [[1, 3], [1]]}
    config = RunConfig("key", shape=[2, 1, 0], chain=[[2], [2, 3]])
    assert run("key", config).payload == {"key": [[2, 3], [2]]}


def test_demtest():
    config = RunConfig("demtest", tabloid=[[1, 3], [2]], chain=[[1], [1, 3]])
    assert run("demtest", config).payload == {
        "demazure": False, "violations": [[1, 1], [1, 2]]}
    config = RunConfig("demtest", tabloid=[[1, 3], [2]], chain=[[2], [2, 3]])
    result = run("demtest", config)
    assert result.payload == {"demazure": True, "violations": []}
    assert result.text == "true"


def test_enum():
    result = run("enum", RunConfig("enum", shape=[1, 0, 0]))
    assert result.payload["count"] == 3
    assert sorted(result.payload["tableaux"]) == [[[1]], [[2]], [[3]]]
    result = run("enum", RunConfig("enum", shape=[1, 0, 0], chain=[[2]]))
    assert sorted(result.payload["tableaux"]) == [[[1]], [[2]]]


def test_straighten():
    terms = run("straighten", RunConfig("straighten", tabloid=PLUCKER)).payload[
        "terms"]
    assert sorted(terms, key=lambda term: term["columns"]) == [
        {"columns": [[1, 2], [3, 4]], "coefficient": -1},
        {"columns": [[1, 3], [2, 4]], "coefficient": 1}]


def test_reduce():
    config = RunConfig("reduce", tabloid=[[1, 3], [2]], chain=[[1], [1, 3]])
    assert run("reduce", config).payload == {"terms": []}
    config = RunConfig(
        "reduce", n=3, tabloid=[[1, 2], [1]], chain=[[1], [1, 3]])
    assert run("reduce", config).payload == {
        "terms": [{"columns": [[1, 2], [1]], "coefficient": 1}]}


def test_keypoly():
    config = RunConfig("keypoly", shape=[1, 1, 0], chain=[[2], [2, 3]])
    assert run("keypoly", config).payload == {
        "polynomial": "y1*y2 + y1*y3 + y2*y3"}
    config = RunConfig(
        "keypoly", shape=[2, 1, 0], chain=[[3], [2, 3]], at_ones=True)
    result = run("keypoly", config)
    assert result.payload["dimension"] == 8
    assert result.text == "8"


def test_cell_of():
    config = RunConfig("cell-of", matrix=[[2, 1, 0], [0, 3, 1], [4, 0, 0]], q=[1])
    assert run("cell-of", config).payload == {
        "cell": [[3]], "pivots": [3, 1, 2],
        "matrix": [["1/2", 1, 0], [0, 0, 1], [1, 0, 0]]}


def test_sample_cell():
    config = RunConfig("sample-cell", n=3, chain=[[2], [2, 3]], seed=8)
    first, second = run("sample-cell", config), run("sample-cell", config)
    assert first.payload == second.payload
    assert first.payload["seed"] == 8
    cell = run("cell-of", RunConfig(
        "cell-of", matrix=first.payload["matrix"], q=[1, 2])).payload["cell"]
    assert cell == [[2], [2, 3]]


def test_gamma():
    config = RunConfig("gamma", n=3, chain=[[3]], i=1, j=3, t="1/4")
    assert run("gamma", config).payload == {
        "matrix": [["3/4", "1/4", 0], [0, 0, 1], ["1/4", "3/4", 0]],
        "cell": [[3]]}


def test_verify_independence():
    config = RunConfig(
        "verify-independence", shape=[2, 1, 0], chain=[[2], [2, 3]], seed=17)
    result = run("verify-independence", config)
    assert result.payload["ok"]
    assert result.payload["rank"] == result.payload["basis_size"]
    assert result.status == ExitStatus.OK


def test_failed_check_sets_the_status(monkeypatch):
    monkeypatch.setattr(
        commands, "verify_independence",
        lambda shape, chain, seed, samples: IndependenceReport(
            False, 1, 2, 12, seed))
    config = RunConfig(
        "verify-independence", shape=[2, 1, 0], chain=[[2], [2, 3]], seed=17)
    result = run("verify-independence", config)
    assert result.status == ExitStatus.FAILED
    assert result.text == "rank 1 of 2"


def test_verify_master():
    config = RunConfig(
        "verify-master", tabloid=PLUCKER, region=[[2, 1], [1, 2], [2, 2]],
        seed=3, samples=5)
    payload = run("verify-master", config).payload
    assert payload["ok"]
    assert payload["sign"] in (-1, None)
    assert payload["samples"] == 5
    default = run("verify-master", RunConfig(
        "verify-master", tabloid=PLUCKER, seed=3, samples=5)).payload
    assert default["ok"]


def test_verify_vanishing():
    config = RunConfig(
        "verify-vanishing", shape=[2, 1, 0], chain=[[2], [2, 3]], seed=5,
        samples=10)
    payload = run("verify-vanishing", config).payload
    assert payload == {"ok": True, "samples": 10, "failures": [], "seed": 5}


@pytest.mark.parametrize("config", [
    RunConfig("nothing"),
    RunConfig("gamma", n=3, chain=[[3]], i=1, j=3),
    RunConfig("verify-master", tabloid=PLUCKER),
])
def test_invalid_configurations(config):
    with pytest.raises(ValidationError):
        run(config.command, config)
