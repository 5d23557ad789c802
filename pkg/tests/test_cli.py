from __future__ import annotations

import json

import pytest

from lefschetz.cli import main, run

FIELDS = {"command", "input", "result", "witnesses", "timing_ms", "version"}


def test_json_record(capsys):
    code = main(["det", "--ideal", "x^10,y^7", "--d", "5", "--t", "5", "--json"])
    record = json.loads(capsys.readouterr().out)
    assert code == 0 and set(record) == FIELDS
    assert record["result"]["closed_form"] == record["result"]["elimination"] == 210


def test_false_verdict_exits_one(capsys):
    code, record = run(["slp", "--ideal", "x^2,y^3", "--char", "3"])
    assert code == 1 and [list(w) for w in record["witnesses"]] == [[0, 3, 3]]
    assert run(["slp", "--ideal", "x^2,y^3", "--char", "5"])[0] == 0
    assert run(["wlp3", "--ideal", "x^2,y^2,z^2", "--char", "2"])[0] == 1


def test_usage_errors_exit_two(capsys):
    assert main(["slp", "--ideal", "x^2,y^3", "--char", "4"]) == 2
    assert main(["analyze", "--ideal", "x^2,q^3"]) == 2
    assert "q" in capsys.readouterr().err
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_resource_limit_exits_three():
    assert main(["lgv", "--ideal", "x^10,y^7", "--d", "5", "--t", "5", "--cap", "3"]) == 3


@pytest.mark.parametrize(
    "argv",
    [
        ["analyze", "--ideal", "x^6,x^3y,xy^4,y^5"],
        ["matrix", "--ideal", "x^4,y^4", "--d", "2", "--t", "2"],
        ["bad-primes", "--ideal", "x^10,y^7"],
        ["lgv", "--ideal", "x^10,y^7", "--d", "5", "--t", "5", "--emit-lattice"],
        ["gb", "--ideal", "x^2+y^2,x^3+y^3", "--char", "0"],
        ["slp-poly", "--ideal", "x^2,xy+y^2", "--char", "2"],
        ["conjecture", "--p", "5"],
        ["witness", "--hvector", "1,2,3,2,1"],
        ["wlp3", "--ideal", "x^3,y^3,z^3", "--bad-primes"],
        ["sweep", "--max-reg", "4", "--checks", "always-slp,bounds,lgv"],
    ],
)
def test_subcommands_succeed(argv, capsys):
    assert main(argv) == 0
    assert capsys.readouterr().out.strip()
