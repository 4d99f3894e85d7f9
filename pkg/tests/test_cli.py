import json
import re
import shlex

import pytest


def _lines(text):
    return [json.loads(line) for line in text.splitlines()]


def test_seq_command():
    from permspec.cli import RunConfig, run

    status, text = run(RunConfig("seq", ["a", "3", "7"]))
    assert status == 0
    assert _lines(text) == [{"n": n, "value": v} for n, v in zip(range(3, 8), [6, 9, 13, 20, 31])]
    assert text.splitlines()[0] == '{"n": 3, "value": 6}'

    status, text = run(RunConfig("seq", ["menage", "3..5"]))
    assert status == 0
    assert [line["value"] for line in _lines(text)] == [1, 2, 13]

    status, text = run(RunConfig("seq", ["s", "2", "2"]))
    assert _lines(text) == [{"n": 2, "value": {"num": "1", "den": "2"}}]


def test_output_formats():
    from permspec.cli import RunConfig, run

    status, text = run(RunConfig("seq", ["a", "3", "4"], output_format="text"))
    assert status == 0
    assert text.splitlines() == ["n=3 value=6", "n=4 value=9"]

    status, text = run(RunConfig("seq", ["s", "2", "3"], output_format="csv"))
    assert text.splitlines() == ["n,value", "2,1/2", "3,1"]

    status, text = run(RunConfig("extremal", ["bolshakov", "9"], output_format="text"))
    assert text.splitlines() == ["n: 9", "second_max: 120"]


def test_spectrum_command():
    from permspec.cli import RunConfig, run

    status, text = run(RunConfig("spectrum", ["weighted", "11", "-1", "3", "2"]))
    assert status == 0
    report = json.loads(text)
    assert report["n"] == 11
    assert report["weights"] == [-1, 3, 2]
    assert report["values"] == [4096, 8224, 8320, 8704, 16384, 18496]
    assert report["attaining_partitions"]["4096"] == ["11"]
    assert report["attaining_partitions"]["18496"] == ["4+4+3"]

    for mode in ("sym", "symmetric"):
        status, text = run(RunConfig("spectrum", [mode, "8"]))
        report = json.loads(text)
        assert report["values"] == [49, 78, 81]
        assert report["weights"] == [1, 1, 1]
        assert report["attaining_partitions"] == {"49": ["8"], "78": ["5+3"], "81": ["4+4"]}

    status, text = run(RunConfig("spectrum", ["weighted", "8", "1"]))
    assert status == 2
    assert "three weights" in text


def test_extremal_command():
    from permspec.cli import RunConfig, run

    status, text = run(RunConfig("extremal", ["8"]))
    assert status == 0
    report = json.loads(text)
    assert report["max_value"] == 81
    assert report["attaining_partitions"] == [[4, 4]]

    status, text = run(RunConfig("extremal", ["8", "--weights", "4/5", "1/5", "1"]))
    report = json.loads(text)
    assert report["weights"] == [{"num": "4", "den": "5"}, {"num": "1", "den": "5"}, 1]
    assert report["max_value"] == {"num": "3104644", "den": "390625"}
    assert report["closed_forms_agree"] is True

    status, legacy = run(RunConfig("extremal", ["max", "8", "4/5", "1/5", "1"]))
    assert legacy == text

    status, text = run(RunConfig("extremal", ["merriell", "9"]))
    assert json.loads(text)["agrees"] is True


def test_upper_command():
    from permspec.cli import RunConfig, run

    status, text = run(RunConfig("upper", ["sym", "24", "--t", "1"]))
    assert status == 0
    report = json.loads(text)
    assert (report["kind"], report["n"], report["t"], report["j"]) == ("symmetric", 24, 1, 0)

    status, legacy = run(RunConfig("upper", ["symmetric", "24", "1"]))
    assert legacy == text

    status, text = run(RunConfig("upper", ["gen", "8", "--t", "0"]))
    assert status == 0
    assert json.loads(text)["values"] == [81]

    status, text = run(RunConfig("upper", ["sym", "24", "1", "--t", "1"]))
    assert status == 2


def test_upper_command_partial_spectra(fs):
    from permspec.cli import RunConfig, run

    fs.create_file("partial.json", contents=json.dumps({"4": [9], "5": [12, 13]}))
    arguments = ["gen", "24", "--t", "1", "--spectra", "partial.json"]
    status, text = run(RunConfig("upper", arguments + ["--non-strict"]))
    assert status == 0
    report = json.loads(text)
    assert report["missing_sizes"] == [6]
    assert report["certified"] == 1

    status, text = run(RunConfig("upper", arguments))
    assert status == 2
    assert "[6]" in text


def test_circulant_command():
    from permspec.cli import RunConfig, run

    status, text = run(RunConfig("circulant", ["7", "--census"]))
    assert status == 0
    report = json.loads(text)
    assert report["k"] == 3
    assert report["bound"] == 4
    assert {entry["permanent"] for entry in report["classes"]} == set(report["spectrum"])
    assert 24 in report["spectrum"]
    assert (report["parity_census"]["odd"], report["parity_census"]["even"]) == (21, 14)

    status, text = run(RunConfig("circulant", ["7", "--k", "3"]))
    assert "parity_census" not in json.loads(text)

    status, text = run(RunConfig("circulant", ["reis", "12"]))
    assert status == 0
    assert json.loads(text)["k"] == 3

    status, text = run(RunConfig("circulant", ["9", "--k", "4", "--census"]))
    assert status == 2


def test_parity_commands(fs):
    from permspec.cli import RunConfig, run

    status, text = run(RunConfig("parity", ["census", "7"]))
    report = json.loads(text)
    assert status == 0
    assert (report["odd"], report["even"]) == (21, 14)

    fs.create_file("c7.txt", contents="7\n" + "\n".join(
        " ".join("1" if (col - row) % 7 in (0, 1, 2) else "0" for col in range(7)) for row in range(7)
    ) + "\n")
    status, text = run(RunConfig("parity", ["c7.txt"]))
    assert status == 0
    entry = json.loads(text)["matrices"][0]
    assert entry["det_gf2"] == 1

    status, legacy = run(RunConfig("parity", ["matrix", "c7.txt"]))
    assert legacy == text


def test_permanent_command(fs):
    from permspec.cli import RunConfig, run

    fs.create_file("block.txt", contents="6\n" + "\n".join(
        ["1 1 1 0 0 0"] * 3 + ["0 0 0 1 1 1"] * 3
    ) + "\n")
    status, text = run(RunConfig("permanent", ["block.txt", "--method", "both", "--decompose"]))
    assert status == 0
    entry = json.loads(text)["matrices"][0]
    assert entry["permanent"] == 36
    assert entry["expansion"] == 36
    assert entry["components"] == [3, 3]
    assert entry["indecomposable"] is False


def test_enumerate_command():
    from permspec.cli import RunConfig, run

    status, text = run(RunConfig("enumerate", ["lambda3-diag", "4"], workers=1))
    assert status == 0
    assert json.loads(text)["count"] == 9

    status, text = run(RunConfig("enumerate", ["lambda3", "5", "--spectrum"], workers=1))
    assert json.loads(text)["spectrum"] == [12, 13]

    status, text = run(RunConfig("enumerate", ["lambda3-diag", "10"], workers=1, limits={"diag_limit": 9}))
    assert status == 2
    assert "enumeration limit" in text


@pytest.mark.parametrize(
    "config_args",
    [
        ("seq", ["fibonacci", "3", "5"]),
        ("seq", ["a", "7", "3"]),
        ("seq", ["a", "3-7"]),
        ("extremal", ["bolshakov", "7"]),
        ("extremal", ["8", "--weights", "1", "1"]),
        ("upper", ["sym", "20", "--t", "2"]),
        ("upper", ["gen", "24"]),
        ("circulant", ["spectrum", "7", "8"]),
        ("parity", ["census"]),
        ("enumerate", ["lambda3", "5", "--shard", "1"]),
    ],
)
def test_usage_errors(config_args):
    from permspec.cli import RunConfig, run

    command, arguments = config_args
    status, _ = run(RunConfig(command, arguments))
    assert status == 2


def _docstring_examples():
    import inspect
    from importlib import import_module

    from permspec import reproduce
    from permspec.cli import COMMANDS

    docs = [cls.__doc__ for _, cls in inspect.getmembers(reproduce, inspect.isclass)]
    for _, module_name in COMMANDS:
        module = import_module(module_name)
        docs += [module.__doc__, module.CLICommand.__doc__]
    examples = []
    for doc in docs:
        for match in re.findall(r"`permspec ([^`]+)`", doc or ""):
            examples.append(shlex.split(" ".join(match.split())))
    return examples


def test_docstring_examples_run():
    from permspec.cli import RunConfig, run

    examples = _docstring_examples()
    assert {argv[0] for argv in examples} >= {"seq", "spectrum", "extremal", "upper", "circulant", "parity", "enumerate"}
    for argv in examples:
        status, text = run(RunConfig(argv[0], argv[1:], workers=1))
        assert status == 0, (argv, text)


def test_main_prints(capsys):
    from permspec.cli import main

    main(args=["seq", "a", "3", "5"])
    assert [line["value"] for line in _lines(capsys.readouterr().out)] == [6, 9, 13]
