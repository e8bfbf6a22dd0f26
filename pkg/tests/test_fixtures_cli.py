"""Fixture schema, serialization round-trips, and the command-line surface."""

import csv
import json
from fractions import Fraction
from importlib import resources

import pytest

import frozen
from mmideal import (
    build_tuple,
    bundled_names,
    emit_fixture,
    load_fixture,
    parse_fixture,
)
from mmideal.cli import main
from mmideal.errors import ParseError, ValidationError
from mmideal.svg import decimal_approx


def _smooth1_data():
    return json.loads(
        resources.files("mmideal").joinpath("fixtures/SMOOTH1.json").read_text()
    )


# ---------------------------------------------------------------- fixtures


def test_bundled_names():
    assert bundled_names() == [
        "CHAIN10",
        "NEST14",
        "PROP16",
        "RAT6",
        "SMOOTH1",
    ]


def test_load_unknown_name_lists_bundled():
    with pytest.raises(ParseError) as info:
        load_fixture("NOPE")
    message = str(info.value)
    assert "NOPE" in message and "SMOOTH1" in message


def test_round_trip_is_byte_identical():
    for name in bundled_names():
        raw = (
            resources.files("mmideal")
            .joinpath(f"fixtures/{name}.json")
            .read_text()
        )
        assert emit_fixture(parse_fixture(raw)) == raw
        assert emit_fixture(parse_fixture(emit_fixture(parse_fixture(raw)))) == raw


def test_json_error_reports_position():
    with pytest.raises(ParseError) as info:
        parse_fixture('{\n  "name": "X",\n}')
    assert "line 3" in str(info.value)


@pytest.mark.parametrize(
    "mutate, fragment",
    [
        (lambda d: d.pop("name"), "name"),
        (lambda d: d.update(surprise=1), "unknown keys"),
        (lambda d: d.update(adjacency=[[1, 2]]), "exactly one of"),
        (lambda d: d.pop("matrix"), "exactly one of"),
        (lambda d: d.update(matrix=[[-1], [-2]]), "square"),
        (lambda d: d["expected"].update(surprise=1), "unknown keys"),
        (lambda d: d["expected"].update(nest=[2]), "1-based"),
        (lambda d: d["expected"].update(nest=[0]), "1-based"),
        (lambda d: d["expected"].update(lct=["1/0"]), "zero denominator"),
        (lambda d: d["expected"].update(lct=[2, 3]), "expected 1 entries"),
        (lambda d: d["expected"].update(canonical=["x"]), "malformed rational"),
    ],
)
def test_schema_violations(mutate, fragment):
    data = _smooth1_data()
    mutate(data)
    with pytest.raises(ParseError) as info:
        parse_fixture(json.dumps(data))
    assert fragment in str(info.value)


def test_zero_ideal_rejected_at_build():
    data = _smooth1_data()
    data["ideals"] = [[0]]
    fixture = parse_fixture(json.dumps(data))  # schema-valid
    with pytest.raises(ValidationError):
        build_tuple(fixture)


def test_adjacency_form_round_trip():
    text = json.dumps(
        {
            "name": "PAIR",
            "adjacency": [[1, 2]],
            "canonical": ["1/3", "2/3"],
            "ideals": [[1, 1]],
        }
    )
    fixture = parse_fixture(text)
    assert fixture.matrix is None
    assert fixture.adjacency == ((0, 1),)
    assert fixture.canonical == (Fraction(1, 3), Fraction(2, 3))
    again = parse_fixture(emit_fixture(fixture))
    assert again == fixture


# ---------------------------------------------------------------- decimals


def test_decimal_approx():
    assert decimal_approx(Fraction(1, 3)) == "0.33333333333333333333"
    assert decimal_approx(Fraction(1, 2)) == "0.5"
    assert decimal_approx(Fraction(0)) == "0"
    assert decimal_approx(Fraction(-7, 4)) == "-1.75"
    assert decimal_approx(Fraction(5)) == "5"
    assert (
        decimal_approx(Fraction(1, 10**25))
        == "0.0000000000000000000000001"  # leading zeros are not significant
    )
    assert decimal_approx(Fraction(123456, 1000)) == "123.456"


# ---------------------------------------------------------------- CLI


def test_cli_validate_ok(capsys):
    assert main(["validate", "RAT6"]) == 0
    out = capsys.readouterr().out
    assert "RAT6" in out and "LogCanonicalOnly" in out


def test_cli_exit_codes(tmp_path, capsys):
    bad_json = tmp_path / "bad.json"
    bad_json.write_text("{")
    assert main(["validate", str(bad_json)]) == 1
    assert "parse error" in capsys.readouterr().err

    not_negdef = tmp_path / "posdef.json"
    not_negdef.write_text(
        json.dumps({"name": "BAD", "matrix": [[-1, 1], [1, -1]], "ideals": [[1, 1]]})
    )
    assert main(["validate", str(not_negdef)]) == 2
    assert "validation error" in capsys.readouterr().err


def test_cli_usage_error_is_exit_1(capsys):
    with pytest.raises(SystemExit) as info:
        main(["no-such-command"])
    assert info.value.code == 1
    assert "error" in capsys.readouterr().err


def test_cli_point(capsys):
    assert main(["point", "RAT6", "--c", "1/12,3/4"]) == 0
    out = capsys.readouterr().out
    assert "D = 5,3,5,2,1,1" in out
    assert "m = 2 (adjunction) = 2 (fractional) = 2 (colength oracle)" in out


def test_cli_point_not_jumping(capsys):
    assert main(["point", "RAT6", "--c", "1/100,1/100"]) == 0
    assert "not a jumping point" in capsys.readouterr().out


def test_cli_ray_csv_round_trip(tmp_path, capsys):
    target = tmp_path / "jumps.csv"
    assert (
        main(["ray", "RAT6", "--base", "0,0", "--dir", "1,1", "--until", "1/2",
              "--csv", str(target)])
        == 0
    )
    capsys.readouterr()
    with target.open(newline="") as handle:
        rows = list(csv.reader(handle))
    assert rows[0] == ["parameter", "c1", "c2", "mult"] + [
        f"D{j}" for j in range(1, 7)
    ]
    assert rows[1] == ["3/20", "3/20", "3/20", "1", "4", "2", "4", "2", "1", "1"]
    assert [Fraction(row[0]) for row in rows[1:]] == [
        Fraction(3, 20),
        Fraction(1, 4),
        Fraction(7, 20),
        Fraction(3, 8),
        Fraction(9, 20),
        Fraction(1, 2),
    ]


def test_cli_walls_csv_and_svg(tmp_path, capsys):
    table = tmp_path / "facets.csv"
    picture = tmp_path / "atlas.svg"
    assert (
        main(["walls", "RAT6", "--box", "1,1", "--csv", str(table),
              "--svg", str(picture)])
        == 0
    )
    out = capsys.readouterr().out
    assert "facets = 37" in out

    with table.open(newline="") as handle:
        rows = list(csv.reader(handle))
    assert rows[0] == ["sources", "x0", "y0", "x1", "y1", "mult", "low", "high"]
    assert len(rows) == 38
    lc_rows = [row for row in rows[1:] if row[7] == "3|2|3|1|1|1"]
    # no facet descends to the fundamental cycle: it is the low side of LC rows
    assert lc_rows == []
    lc_rows = [row for row in rows[1:] if row[6] == "3|2|3|1|1|1"]
    assert len(lc_rows) == frozen.RAT6_LC_FACETS

    svg = picture.read_text()
    assert svg.startswith("<svg ")
    assert svg.rstrip().endswith("</svg>")
    assert "1/6" in svg  # exact tick label at the first lct axis point
    assert "3|2|3|1|1|1" not in svg  # titles list divisors with commas
    assert "3,2,3,1,1,1" in svg


def test_cli_selftest_deterministic(capsys):
    assert main(["selftest"]) == 0
    first = capsys.readouterr().out
    assert main(["selftest"]) == 0
    second = capsys.readouterr().out
    assert first == second
    assert "selftest passed" in first


def test_cli_selftest_single_fixture(capsys):
    assert main(["selftest", "SMOOTH1"]) == 0
    out = capsys.readouterr().out
    assert "SMOOTH1" in out and "CHAIN10" not in out
