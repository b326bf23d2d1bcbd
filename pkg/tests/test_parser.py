import io
import json

import pytest

from demazure.cli.commands import CommandRunner
from demazure.cli.parser import build_parser, main
from demazure.exceptions.exceptions import ValidationError, VerificationError


@pytest.fixture(autouse=True)
def no_seed(monkeypatch):
    monkeypatch.delenv("DEMAZURE_SEED", raising=False)


def invoke(*argv, stdin=None):
    stdout = io.StringIO()
    status = main(list(argv), stdin=io.StringIO(stdin or ""), stdout=stdout)
    return status, stdout.getvalue()


def test_scan():
    status, output = invoke("scan", "--tabloid", "[[1, 3], [2]]")
    assert status == 0
    assert json.loads(output) == {"scan": [[2, 3], [2]]}


def test_text_format():
    status, output = invoke(
        "scan", "--tabloid", "[[1, 3], [2]]", "--format", "text")
    assert status == 0
    assert output.strip() == "[[2, 3], [2]]"


def test_stdin_document():
    status, output = invoke(
        "keypoly", "--stdin", "--at-ones",
        stdin='{"shape": [1, 1, 0], "chain": [[2], [2, 3]]}')
    assert status == 0
    assert json.loads(output) == {
        "polynomial": "y1*y2 + y1*y3 + y2*y3", "dimension": 3}


def test_seed_from_the_environment(monkeypatch):
    monkeypatch.setenv("DEMAZURE_SEED", "21")
    status, output = invoke("sample-cell", "--n", "3", "--chain", "[[2]]")
    assert status == 0
    assert json.loads(output)["seed"] == 21


@pytest.mark.parametrize("argv", [
    ("sample-cell", "--n", "3", "--chain", "[[2]]"),
    ("unknown",),
    ("scan",),
    ("scan", "--tabloid", "[[1, 3"),
    ("scan", "--tabloid", "[[2, 3], [1, 2]]"),
    ("key", "--chain", "[[2]]"),
    ("cell-of", "--matrix", "[[1, 2], [2, 4]]", "--q", "[1]"),
    ("scan", "--tabloid", "[[1]]", "--samples", "zero"),
    ("key", "--n", "3", "--q", "3", "--chain", "[[1]]"),
    ("key", "--n", "3", "--chain", '{"sets": [[1]], "q": "a"}'),
    ("scan", "--tabloid", '{"columns": [[1]], "n": "x"}'),
    ("scan", "--tabloid",
     '{"n": 3, "shape": [2, 2, 0], "columns": [[1, 3], [2]]}'),
])
def test_invalid_input_exits_with_one(argv):
    status, output = invoke(*argv)
    assert status == 1
    assert output == ""


def test_malformed_stdin():
    assert invoke("scan", "--stdin", stdin="[1, 2]")[0] == 1
    assert invoke("scan", "--stdin", stdin="{")[0] == 1


def test_failed_verification_exits_with_two(monkeypatch):
    def fail(self):
        raise VerificationError("not proportional")

    monkeypatch.setattr(CommandRunner, "run", fail)
    assert invoke("scan", "--tabloid", "[[1]]")[0] == 2


def test_parser_raises_instead_of_exiting():
    with pytest.raises(ValidationError):
        build_parser().parse_args(["scan", "--n", "three"])


@pytest.mark.parametrize("argv, document", [
    (("key", "--stdin"), '{"n": "3", "chain": [[1]]}'),
    (("verify-master", "--stdin"),
     '{"tabloid": [[1, 4], [2, 3]], "samples": "5", "seed": 1}'),
    (("key", "--stdin"), '{"n": 3, "q": 2, "chain": [[1, 2]]}'),
    (("gamma", "--stdin"),
     '{"n": 3, "chain": [[3]], "i": 1, "j": 3, "t": [1, 4]}'),
])
def test_mistyped_document_values_exit_with_one(argv, document):
    status, output = invoke(*argv, stdin=document)
    assert status == 1
    assert output == ""


def test_tabloid_object_with_shape():
    status, output = invoke(
        "scan", "--tabloid",
        '{"n": 3, "shape": [2, 1, 0], "columns": [[1, 3], [2]]}')
    assert status == 0
    assert json.loads(output) == {"scan": [[2, 3], [2]]}


def test_empty_tabloid():
    status, output = invoke(
        "straighten", "--tabloid", '{"n": 3, "shape": [0, 0, 0], "columns": []}')
    assert status == 0
    assert json.loads(output) == {"terms": [{"columns": [], "coefficient": 1}]}
