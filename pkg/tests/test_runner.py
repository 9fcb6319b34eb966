import json
import re

import pandas as pd
import pytest

from cnorm import launcher
from cnorm.constants import claims
from cnorm.constants import series as kinds
from cnorm.runner import scan
from cnorm.runner.runner import EXIT_CLAIM_FAILED, EXIT_INPUT_ERROR, EXIT_OK
from cnorm.structures.families import family_members
from cnorm.verifier import ClaimResult, suite

from conftest import SNAPSHOTS


def run(capsys, *argv):
    status = launcher.main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_gen_writes_a_cayley_file(capsys, tmp_path):
    path = tmp_path / "d16.cay"
    status, out, _ = run(capsys, "gen", "dihedral", "16", "-o", str(path))
    assert status == EXIT_OK
    assert "D_16 (order 32)" in out
    assert path.read_text(encoding="utf-8").startswith("cayley 32\n")


def test_gen_trivial_group(capsys, tmp_path):
    path = tmp_path / "z1.cay"
    run(capsys, "gen", "cyclic", "1", "-o", str(path))
    assert path.read_text(encoding="utf-8") == "cayley 1\n0\n"


def test_gen_product_of_families(capsys, tmp_path):
    path = tmp_path / "s3z2.cay"
    status, out, _ = run(capsys, "gen", "product", "symmetric:3", "cyclic:2", "-o", str(path))
    assert status == EXIT_OK
    assert "S_3xZ_2 (order 12)" in out
    assert path.read_text(encoding="utf-8").startswith("cayley 12\n")


def test_gen_default_name(capsys, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    status, out, _ = run(capsys, "--json", "gen", "product", "2", "3")
    assert status == EXIT_OK
    assert json.loads(out)["group"] == {"name": "Z_2xZ_3", "order": 6}
    assert (tmp_path / "Z_2xZ_3.cay").exists()


@pytest.mark.parametrize(
    "argv",
    [
        ("gen", "heptagonal", "7"),
        ("gen", "quaternion", "12"),
        ("gen", "symmetric", "8"),
        ("gen", "dihedral", "64", "--max-order", "100"),
        ("gen", "dihedral", "six"),
        ("gen", "product", "symmetric:3", "klein:4"),
    ],
)
def test_gen_input_errors(capsys, tmp_path, argv):
    status, _, err = run(capsys, *argv, "-o", str(tmp_path / "out.cay"))
    assert status == EXIT_INPUT_ERROR
    assert err.startswith("cnorm: ")


def test_series_json(capsys):
    status, out, _ = run(capsys, "series", "d16", "--json")
    data = json.loads(out)
    assert status == EXIT_OK
    assert data["group"] == {"name": "d16", "order": 32}
    assert data["series"] == {
        "c": [1, 4, 32],
        "upper_central": [1, 2, 4, 8, 32],
        "lower_central": [32, 8, 4, 2, 1],
        "derived": [32, 8, 1],
    }
    assert data["stabilized_at"]["c"] == 2
    assert data["profile"]["nilpotency_class"] == 4


def test_global_flags_before_the_subcommand(capsys):
    status, out, _ = run(capsys, "--json", "series", "s3")
    assert status == EXIT_OK
    assert json.loads(out)["series"]["c"] == [1]


def test_series_of_the_trivial_group(capsys, tmp_path):
    path = tmp_path / "one.cay"
    path.write_text("cayley 1\n0\n", encoding="utf-8")
    data = json.loads(run(capsys, "series", str(path), "--json")[1])
    assert data["series"] == {
        "c": [1],
        "upper_central": [1],
        "lower_central": [1],
        "derived": [1],
    }
    assert data["profile"]["c_length"] == 0


@pytest.mark.parametrize("preset", ["d16", "s3"])
def test_series_table_matches_json(capsys, preset):
    _, table, _ = run(capsys, "series", preset)
    data = json.loads(run(capsys, "series", preset, "--json")[1])

    seen = set()
    for line in table.splitlines():
        words = line.split()
        if words and words[0] in kinds.ALL:
            key = kinds.JSON_KEYS[words[0]]
            numbers = [int(n) for n in re.findall(r"\d+", line.replace("reaches 1", ""))]
            assert numbers == [*data["series"][key], data["stabilized_at"][key]], line
            seen.add(words[0])
        elif words and words[0] in data["profile"]:
            assert words[1] == str(data["profile"][words[0]]), line
            seen.add(words[0])
    assert seen == {*kinds.ALL, *data["profile"]}


def test_series_table(capsys):
    status, out, _ = run(capsys, "series", "s3")
    assert status == EXIT_OK
    assert out.startswith("s3 (order 6)")
    assert "stalls" in out
    assert "reaches 1" in out


def test_verify(capsys):
    status, out, _ = run(capsys, "verify", "d16")
    assert status == EXIT_OK
    assert "16/16 claims hold" in out
    assert "FAILS" not in out


def test_verify_exits_1_when_a_claim_fails(capsys, monkeypatch):
    def failing(analysis):
        witness = {"normal_subgroup": [0], "derived": [0]}
        return ClaimResult(claims.HALL, claims.FAILS, witness=witness)

    monkeypatch.setitem(suite.CHECKS, claims.HALL, failing)
    status, out, _ = run(capsys, "verify", "s3")
    assert status == EXIT_CLAIM_FAILED
    assert "15/16 claims hold" in out
    assert "FAILS theorem-hall" in out

    status, out, _ = run(capsys, "verify", "s3", "--json")
    assert status == EXIT_CLAIM_FAILED
    failures = [c for c in json.loads(out)["claims"] if c["status"] == claims.FAILS]
    assert [c["id"] for c in failures] == [claims.HALL]


def test_verify_json(capsys):
    status, out, _ = run(capsys, "verify", "s3", "--json", "--exhaustive-subgroups")
    data = json.loads(out)
    assert status == EXIT_OK
    assert [claim["status"] for claim in data["claims"]].count("holds-vacuously") == 3
    assert {claim["scope"] for claim in data["claims"]} == {"exact", "exhaustive"}


def test_verify_rejects_bad_tables(capsys, tmp_path):
    path = tmp_path / "loop.cay"
    path.write_text("cayley 3\n0 1 2\n1 0 2\n2 2 0\n", encoding="utf-8")
    status, out, err = run(capsys, "verify", str(path))
    assert status == EXIT_INPUT_ERROR
    assert out == ""
    assert "NotLatinSquare" in err


def test_verify_missing_file(capsys, tmp_path):
    status, _, err = run(capsys, "verify", str(tmp_path / "nothing.cay"))
    assert status == EXIT_INPUT_ERROR
    assert "IOFailure" in err


def test_exit_codes_are_distinct():
    assert len({EXIT_OK, EXIT_CLAIM_FAILED, EXIT_INPUT_ERROR}) == 3


def test_info(capsys):
    status, out, _ = run(capsys, "info", "d4", "--json")
    data = json.loads(out)
    assert status == EXIT_OK
    assert data["group"] == {"name": "d4", "order": 8}
    assert data["class_sizes"] == [1, 2, 2, 1, 2]
    assert data["centralizers"] == 4
    assert data["centralizer_norm"] == 8
    assert data["baer_norm"] == 2
    assert data["dihedral_degree"] == 4
    assert not data["is_abelian"]


def test_info_text(capsys):
    status, out, _ = run(capsys, "info", "s3")
    assert status == EXIT_OK
    assert "centralizer_norm: 1" in out
    assert "dihedral_degree: 3" in out


def test_scan_json(capsys):
    status, out, _ = run(capsys, "scan", "dihedral", "16", "--json")
    data = json.loads(out)
    assert status == EXIT_OK
    assert [row["group_name"] for row in data["rows"]] == [f"D_{n}" for n in range(1, 9)]
    assert data["rows"][-1] == {
        "group_name": "D_8",
        "order": 16,
        "nilpotency_class": 3,
        "c_length": 2,
        "derived_length": 2,
        "question_margin": 1,
    }
    assert data["findings"] == ["D_4", "D_8"]


def test_scan_table_matches_json(capsys):
    _, table, _ = run(capsys, "scan", "dihedral", "16")
    data = json.loads(run(capsys, "scan", "dihedral", "16", "--json")[1])

    lines = table.split("\n\n")[0].splitlines()[1:]
    assert len(lines) == len(data["rows"])
    for line, row in zip(lines, data["rows"]):
        words = line.split()
        assert (words[0] == "*") == ((row["question_margin"] or 0) > 0)
        if words[0] == "*":
            words = words[1:]
        expected = ["-" if row[column] is None else str(row[column]) for column in scan.COLUMNS]
        assert words == expected, line


def test_scan_corpus_abelian_margins(capsys):
    data = json.loads(run(capsys, "--json", "scan", "corpus", "32")[1])
    for row in data["rows"]:
        if row["group_name"].startswith("Z_"):
            assert row["question_margin"] == 0


def test_scan_table(capsys):
    status, out, _ = run(capsys, "scan", "quaternion", "32")
    assert status == EXIT_OK
    assert "Q_8" in out and "Q_32" in out
    assert "Class exceeds c_length in" in out


def test_scan_above_the_cap(capsys):
    status, _, err = run(capsys, "scan", "cyclic", "64", "--max-order", "32")
    assert status == EXIT_INPUT_ERROR
    assert "OrderCapExceeded" in err


def test_scan_unknown_family(capsys):
    assert run(capsys, "scan", "klein", "8")[0] == EXIT_INPUT_ERROR


def test_dihedral_scan_snapshot():
    rows = scan.scan(family_members("dihedral", 64))
    expected = (SNAPSHOTS / "scan_dihedral_64.csv").read_text().splitlines()
    assert scan.to_df(rows).to_csv(index=False).splitlines() == expected


def test_parallel_scan_matches_serial():
    specs = family_members("dihedral", 24)
    assert scan.scan(specs, jobs=2) == scan.scan(specs)


def test_scan_spreadsheet(capsys, tmp_path):
    path = tmp_path / "scan.xlsx"
    status, _, _ = run(capsys, "scan", "dihedral", "16", "--xlsx", str(path))
    assert status == EXIT_OK
    assert path.stat().st_size > 0


def test_scan_dataframe_keeps_missing_values():
    df = scan.to_df(scan.scan(family_members("symmetric", 6)))
    assert df["group_name"].tolist() == ["S_1", "S_2", "S_3"]
    assert pd.isna(df.loc[2, "nilpotency_class"])
    assert df.loc[2, "derived_length"] == 2
