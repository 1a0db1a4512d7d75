import json

import pytest

from fuschar.cli import main
from fuschar.specio import (
    SpecError,
    fusion_from_spec,
    group_from_spec,
    report_round_trip,
    resolve_word,
    table_to_json,
)

C8_SPEC = {"kind": "permutation", "degree": 8,
           "generators": [[1, 2, 3, 4, 5, 6, 7, 0]]}


def test_group_spec_parsing():
    g = group_from_spec(C8_SPEC)
    assert g.order == 8


def test_matrix_spec_parsing():
    g = group_from_spec({"kind": "matrix", "dim": 2, "char": 3,
                         "generators": [[[1, 1], [0, 1]], [[1, 0], [1, 1]]]})
    assert g.order == 24  # SL_2(3)


def test_bad_generator_named():
    with pytest.raises(SpecError, match="generator 0"):
        group_from_spec({"kind": "permutation", "degree": 3,
                         "generators": [[0, 0, 1]]})
    with pytest.raises(SpecError, match="generator 1"):
        group_from_spec({"kind": "matrix", "dim": 2, "char": 3,
                         "generators": [[[1, 0], [0, 1]], [[1, 1], [2, 2]]]})
    with pytest.raises(SpecError, match="kind"):
        group_from_spec({"kind": "banana"})


def test_word_resolution():
    g = group_from_spec(dict(C8_SPEC, names={"z": "g0^4"}))
    a = g.generators[0]
    assert resolve_word("g0^2", g) == a * a
    assert resolve_word("g0^-1", g) == a.inverse()
    assert resolve_word("z", g) == a ** 4
    assert resolve_word("g0*g0^-1", g) == g.identity
    with pytest.raises(SpecError, match="unknown element name"):
        resolve_word("w", g)
    with pytest.raises(SpecError, match="out of range"):
        resolve_word("g7", g)


def test_fusion_spec_example():
    fusion = fusion_from_spec({
        "group": C8_SPEC, "p": 2,
        "merges": [["g0^2", "g0^6"]], "mode": "group"})
    assert fusion.k == 7


def test_table_mode_fusion_spec_round_trips(tmp_path):
    import json as _json

    from fuschar.exotic import table_3492
    from fuschar.fusion import TableFusion

    tf = table_3492()
    data = {"mode": "table", "table": tf.to_json()}
    path = tmp_path / "table.json"
    path.write_text(_json.dumps(data))
    loaded = fusion_from_spec(_json.loads(path.read_text()))
    assert isinstance(loaded, TableFusion)
    assert loaded.basis_values == tf.basis_values
    assert main(["verify-fusion", "-f", str(path)]) == 0


def test_malformed_json_reports_offset(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"kind": }')
    from fuschar.specio import load_group

    with pytest.raises(SpecError, match="byte"):
        load_group(str(path))


def test_report_round_trip():
    from fuschar.chartable import dixon_character_table
    from fuschar.fusion import fusion_of_self
    from fuschar.groups import cyclic_group
    from fuschar.verify import verify_conjecture

    c8 = cyclic_group(8)
    rep = verify_conjecture(fusion_of_self(c8, 2),
                            dixon_character_table(c8), "c8")
    data = rep.to_json()
    assert report_round_trip(data) == data
    assert isinstance(data["lhs_det"], str)  # decimal string encoding


def test_table_json():
    from fuschar.chartable import dixon_character_table
    from fuschar.groups import symmetric_group

    data = table_to_json(dixon_character_table(symmetric_group(3)))
    assert data["conductor"] == 6
    assert sorted(c["degree"] for c in data["characters"]) == [1, 1, 2]
    json.dumps(data)  # serialisable


@pytest.fixture
def c8_files(tmp_path):
    gpath = tmp_path / "c8.json"
    gpath.write_text(json.dumps(C8_SPEC))
    fpath = tmp_path / "c8_fusion.json"
    fpath.write_text(json.dumps({
        "group": C8_SPEC, "p": 2, "merges": [["g0^2", "g0^6"]],
        "mode": "group"}))
    return str(gpath), str(fpath)


def test_cli_exit_codes(c8_files, capsys):
    gpath, fpath = c8_files
    assert main(["paper", "--item", "example27"]) == 1
    out = capsys.readouterr().out
    assert "4194304" in out and "2097152" in out
    assert main(["paper", "--item", "table3", "--p", "5"]) == 0
    assert main(["verify-fusion", "-f", fpath]) == 1
    assert main(["verify-group", "-g", gpath, "-p", "2"]) == 0
    assert main(["char-table", "-g", gpath, "--restrict-to", "g0^4"]) == 0
    assert main(["paper", "--item", "nonsense"]) == 2
    assert main(["bogus-subcommand"]) == 2


def test_cli_json_format(c8_files, capsys):
    gpath, _ = c8_files
    assert main(["--format", "json", "verify-group", "-g", gpath, "-p", "2"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["verdict"] == "verified"
    assert data["lhs_det"] == data["rhs_product"]


def test_cli_directory_corpus(tmp_path, capsys):
    (tmp_path / "c6.json").write_text(json.dumps(
        {"kind": "permutation", "degree": 6,
         "generators": [[1, 2, 3, 4, 5, 0]]}))
    assert main(["corpus", "--dir", str(tmp_path)]) == 0
    out = capsys.readouterr().out
    assert "verified 2 / 2" in out  # primes 2 and 3


def test_cli_large_gate():
    assert main(["paper", "--item", "table1", "--p", "7"]) == 2
