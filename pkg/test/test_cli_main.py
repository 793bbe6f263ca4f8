import json

import pytest

import lyndonloop as ll
from lyndonloop.cli import main, parse_config


def test_word(capsys):
    code = main(["word", "--type", "B", "--rank", "2", "--root", "1,2", "--d", "1"])
    assert code == 0
    assert capsys.readouterr().out.strip() == "2^(1) 1 2"


def test_word_json(capsys):
    code = main(["word", "--root", "1,1", "--d", "1", "--format", "json"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["type"] == "A2"
    assert payload["rendered"] == "2^(1) 1"


def test_word_rejects_non_roots(capsys):
    assert main(["word", "--root", "2,1"]) == 2
    assert "not a positive root" in capsys.readouterr().err

    assert main(["word", "--root", "1;2"]) == 2


def test_tables(capsys):
    code = main(["tables", "B", "2", "--format", "json"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert len(payload["rows"]) == 7
    assert payload["rows"][-1]["word"] == "1^(1) 2^(1) 2^(1)"


def test_tables_check(capsys):
    assert main(["tables", "C", "3", "--check"]) == 0
    assert "closed_form" in capsys.readouterr().out


def test_invalid_rank(capsys):
    assert main(["tables", "D", "3"]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_dictionary(capsys):
    assert main(["dictionary", "--letter", "2"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[:2] == ["2^(1)", "2^(1) 1"]

    assert main(["dictionary", "--letter", "3"]) == 2


def test_verify_convexity(capsys):
    code = main(["verify", "convexity", "--window", "1", "--format", "json"])
    assert code == 0
    report = json.loads(capsys.readouterr().out)
    assert report["passed"]
    assert report["checked"] > 0


def test_verify_weyl_order(capsys):
    assert main(["verify", "weyl-order", "--count", "10"]) == 0
    assert "PASS" in capsys.readouterr().out


@pytest.mark.parametrize("type_letter,checked", [("A", 442), ("B", 498)])
def test_verify_pbw_height_four(capsys, type_letter, checked):
    argv = ["verify", "pbw", "--type", type_letter, "--window", "1", "--format", "json"]
    assert main(argv) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["passed"]
    assert report["params"]["height"] == "4"
    assert report["checked"] == checked


def test_verify_pbw_lower_height(capsys):
    assert main(["verify", "pbw", "--window", "1", "--height", "2", "--format", "json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["passed"]
    assert 0 < report["checked"] < 442


def test_usage_errors():
    assert main(["verify", "unknown"]) == 2
    assert main([]) == 2
    assert main(["--version"]) == 0
    assert main(["verify", "convexity", "--count", "0"]) == 2
    assert main(["verify", "pbw", "--height", "0"]) == 2


def test_parse_config():
    config = parse_config(["tables", "g", "2", "--latex"])
    assert config.type_letter == "g"
    assert config.rank == 2
    assert config.latex
    assert config.height == 4
    assert config.validate().name == "G2"
    assert config.type_letter == "G"

    with pytest.raises(ll.errors.ConfigurationError):
        ll.cli.CommandConfig(command="tables", output_format="xml").validate()
