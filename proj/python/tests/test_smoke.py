import json
import pathlib

import jsonschema
import pytest

import hypsys

SCHEMA = pathlib.Path(__file__).resolve().parents[2] / "schema" / "spectrum.schema.json"


def test_diagram_size():
    assert [hypsys.diagram_size(n) for n in range(2, 8)] == [2 ** (n - 1) - 1 for n in range(2, 8)]


def test_charpoly_of_gamma_41():
    assert hypsys.charpoly(4, 1, "bbt") == [1, -1, -1, -1, 1]
    assert hypsys.family_P_nk(4, 1) == [1, 0, -2, -2, 0, 1]
    m = hypsys.path_matrix(4, 1, "bbt")
    assert len(m) == 4 and all(x >= 0 for row in m for x in row)


def test_perron_root():
    assert hypsys.perron_root([1, 0, -2, -2, 0, 1]) == "1.72208380573904"
    assert hypsys.compare_roots([-2, 0, 1], [-3, 0, 1]) == -1
    assert hypsys.compare_roots([-2, 0, 1], [-4, 0, 0, 0, 1]) == 0


def test_errors_carry_kind():
    with pytest.raises(hypsys.HypsysError) as info:
        hypsys.family_P_nk(9, 2)
    assert info.value.kind == 16


def test_spectrum_matches_schema():
    entries, complete = hypsys.spectrum(6)
    assert complete
    jsonschema.validate(entries, json.loads(SCHEMA.read_text()))
    assert [e["root"] for e in entries] == [
        "1.55603019132268",
        "1.78164359860800",
        "1.85118903363607",
        "1.94685626827188",
    ]


def test_systole_and_second():
    s = hypsys.systole(4)
    assert s["root"] == "1.72208380573904" and s["word"] == "bbt"
    second = hypsys.second_length(18)
    assert second["complete"]
    assert second["root"] == "1.51252089448929"


def test_census_small():
    assert [r["count"] for r in hypsys.census(2, 5)] == [1, 4, 11, 22]


def test_verify_suites():
    assert hypsys.verify("lemmas", 12)["failed"] == []
    assert hypsys.verify("rome", 10)["failed"] == []


def test_zrl_normalized_input_is_left_alone():
    out = hypsys.zrl_normalize(6, 2, "bbbt")
    assert out["iterations"] == 0
    assert out["word"] == "bbbt"
