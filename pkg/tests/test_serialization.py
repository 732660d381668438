import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from projinv import ParseError, random_generic_config
from projinv.serialization import config_to_obj, dumps, format_rational, load, loads, parse_rational


@pytest.mark.parametrize("text,value", [("3", 3), ("-7", -7), ("+2/4", Fraction(1, 2)), ("-6/9", Fraction(-2, 3))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["1.5", "1e3", "1/0", "a", "", "1/-2", "1//2"])
def test_parse_rational_rejects(text):
    with pytest.raises(ParseError):
        parse_rational(text)


@given(st.fractions(max_denominator=10**6))
def test_rational_round_trip(x):
    assert parse_rational(format_rational(x)) == x


def test_round_trip_random_configs():
    for seed in range(100):
        cfg = random_generic_config(3 + seed % 6, seed, 40)
        assert loads(dumps(cfg)) == cfg


def test_rejects_zero_point():
    with pytest.raises(ParseError, match="0,0,0"):
        loads(json.dumps({"n": 2, "points": [["1", "0", "0"], ["0", "0/5", "0"]]}))


@pytest.mark.parametrize(
    "obj",
    [
        {"n": 2, "points": [["1", "0", "0"]]},
        {"points": [["1", "0"]]},
        {"points": []},
        {"points": [[1, 0, 0]]},
        [],
    ],
)
def test_rejects_malformed(obj):
    with pytest.raises(ParseError):
        loads(json.dumps(obj))


def test_rejects_bad_json_and_missing_file(tmp_path):
    with pytest.raises(ParseError):
        loads("{not json")
    with pytest.raises(ParseError):
        load(tmp_path / "missing.json")


def test_rational_input_canonicalized():
    cfg = loads('{"n": 1, "points": [["1/2", "-1/3", "0"]]}')
    assert config_to_obj(cfg) == {"n": 1, "points": [["3", "-2", "0"]]}


def test_golden_f5(data_dir):
    cfg = load(data_dir / "f5.json")
    assert dumps(cfg) + "\n" == (data_dir / "f5.json").read_text()
