import csv
import io
import json

import pytest

from eistrace.cache import CoefficientCache
from eistrace.chars import trivial_character
from eistrace.cli import main
from eistrace.exact import Cyclotomic


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_kernel_product_example(capsys):
    code, out, _ = run(
        ["kernel", "--kind", "product", "--weight", "12", "--ell", "4",
         "--modulus", "1", "--char", "0", "--terms", "5", "--normalized"],
        capsys,
    )
    assert code == 0
    doc = json.loads(out)
    values = [Cyclotomic.from_json(v).rational_value() for v in doc["values"]]
    assert values == [1, -24, 252, -1472, 4830]
    assert doc["degenerate"] is False


def test_kernel_degenerate_normalization_fails(capsys):
    code, out, err = run(
        ["kernel", "--kind", "product", "--weight", "8", "--ell", "4",
         "--terms", "3", "--normalized"],
        capsys,
    )
    assert code == 1
    assert "normalize" in err


def test_single_json_document_on_stdout(capsys):
    code, out, _ = run(["chars", "--modulus", "15", "--primitive"], capsys)
    assert code == 0
    doc = json.loads(out)  # raises if more than one document
    assert len(doc) == 3
    assert {c["parity"] for c in doc} == {1, -1}


def test_csv_format_matches_json_content(capsys):
    code, out_json, _ = run(["chars", "--modulus", "15", "--primitive"], capsys)
    assert code == 0
    code, out_csv, _ = run(
        ["chars", "--modulus", "15", "--primitive", "--format", "csv"], capsys)
    assert code == 0
    doc = json.loads(out_json)
    rows = list(csv.DictReader(io.StringIO(out_csv)))
    assert len(rows) == len(doc)
    for rec, row in zip(doc, rows):
        assert str(rec["order"]) == row["order"]
        assert str(rec["parity"]) == row["parity"]


def test_qexp_command(capsys):
    code, out, _ = run(
        ["qexp", "--kind", "level1", "--weight", "12", "--terms", "3"], capsys)
    assert code == 0
    doc = json.loads(out)
    c0 = Cyclotomic.from_json(doc["coeffs"][0])
    from eistrace.exact import Rational

    assert c0 == Rational(691, 65520)


def test_matrix_command(capsys):
    code, out, _ = run(
        ["matrix", "--which", "M", "--weight", "24", "--ells", "4,6"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["nonsingular"] is True
    assert len(doc["entries"]) == 2


def test_bounds_command(capsys):
    code, out, _ = run(
        ["bounds", "--name", "E", "--weight", "16", "--ell", "3",
         "--n", "1", "--modulus", "1"],
        capsys,
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["name"] == "E"
    assert 0 < doc["value"] < 1
    assert doc["certified"] is True


def test_verify_identities_exit_zero(capsys):
    code, out, _ = run(
        ["verify", "identities", "--modulus", "7", "--set", "product"], capsys)
    assert code == 0
    assert json.loads(out)["status"] == "verified"


def test_verify_zero_space(capsys):
    code, out, _ = run(
        ["verify", "zero", "--modulus", "5", "--weight", "8", "--n-max", "8"],
        capsys,
    )
    assert code == 0


def test_scan_exit_zero(capsys):
    code, out, _ = run(
        ["scan", "--matrix", "C1", "--max-weight", "16", "--max-modulus", "5"],
        capsys,
    )
    assert code == 0
    assert json.loads(out)["status"] == "verified"


def test_maeda_exit_zero(capsys):
    code, out, _ = run(
        ["maeda", "--max-modulus", "3", "--max-weight", "36"], capsys)
    assert code == 0


def test_unknown_flag_exits_2(capsys):
    code, out, err = run(["kernel", "--bogus"], capsys)
    assert code == 2
    assert out == ""


def test_unknown_subcommand_exits_2(capsys):
    code, _, _ = run(["frobnicate"], capsys)
    assert code == 2


def test_invalid_parameters_exit_2(capsys):
    code, _, err = run(
        ["kernel", "--kind", "product", "--weight", "13", "--ell", "4"], capsys)
    assert code == 2
    assert "error" in err


def test_cache_file_reused(tmp_path, capsys):
    path = tmp_path / "cache.jsonl"
    argv = ["kernel", "--kind", "product", "--weight", "12", "--ell", "4",
            "--terms", "3", "--cache", str(path)]
    code, out1, _ = run(argv, capsys)
    assert code == 0
    lines = path.read_text().splitlines()
    assert json.loads(lines[0]) == {"schema_version": 1}
    assert len(lines) == 4  # header + 3 entries
    code, out2, _ = run(argv, capsys)
    assert code == 0
    assert json.loads(out1) == json.loads(out2)
    assert len(path.read_text().splitlines()) == 4  # nothing recomputed


def test_cache_skips_corrupt_lines(tmp_path, capsys):
    path = tmp_path / "cache.jsonl"
    path.write_text(
        '{"schema_version": 1}\n'
        'this is not json\n'
        '{"key": ["product", 12, 4, 1, 0, 1], "value": {"order": 1, "coeffs": ["1"]}}\n'
    )
    cache = CoefficientCache(str(path))
    err = capsys.readouterr().err
    assert "corrupt" in err
    assert len(cache.entries) == 1
    key = ("product", 12, 4, 1, 0, 1)
    assert cache.get_or_compute(key, lambda: None) == Cyclotomic.from_rational(1)


def test_cache_env_variable(tmp_path, capsys, monkeypatch):
    path = tmp_path / "envcache.jsonl"
    monkeypatch.setenv("EISTRACE_CACHE", str(path))
    code, _, _ = run(
        ["kernel", "--kind", "product", "--weight", "12", "--ell", "4",
         "--terms", "2"],
        capsys,
    )
    assert code == 0
    assert path.exists()
    assert len(path.read_text().splitlines()) == 3
