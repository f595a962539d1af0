"""Command line round trips: JSON-lines reports, exit codes, determinism."""

import json

import pytest

from wenzl.cli import main


def run(args, tmp_path, name="out.jsonl"):
    out = tmp_path / name
    rc = main([*args, "--out", str(out)])
    lines = out.read_text().splitlines()
    return rc, [json.loads(line) for line in lines]


def summary_of(records):
    tail = [rec for rec in records if rec["kind"] == "summary"]
    assert len(tail) == 1
    return tail[0]


def test_counts_2_2(tmp_path):
    rc, records = run(["counts", "--r", "2", "--n", "2"], tmp_path)
    assert rc == 0
    s = summary_of(records)
    assert s["sum_of_squares"] == 12 and s["target"] == 12 and s["pass"]
    shapes = [rec["shape"] for rec in records if rec["kind"] == "count"]
    assert [[], []] in shapes and len(shapes) == 6
    for rec in records:
        assert rec["ps"]["u"] == ["6", "-2"]
        assert rec["ps"]["precision_bits"] == 256


def test_counts_other_sizes(tmp_path):
    rc, records = run(["counts", "--r", "1", "--n", "4"], tmp_path)
    assert rc == 0 and summary_of(records)["target"] == 105
    rc, records = run(["counts", "--r", "3", "--n", "1"], tmp_path)
    assert rc == 0 and summary_of(records)["target"] == 3


def test_counts_stdout(capsys):
    assert main(["counts", "--r", "1", "--n", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert json.loads(lines[-1])["sum_of_squares"] == 3


def test_verify_passes(tmp_path):
    rc, records = run(["verify", "--r", "1", "--n", "3"], tmp_path)
    assert rc == 0
    rel = [rec for rec in records if rec["kind"] == "relations"]
    assert rel and all(rec["pass"] for rec in rel)
    for rec in rel:
        assert set(rec["residuals"]) >= {"braid", "skein", "cyclotomic",
                                         "unwrapping", "tower-scalars"}
        assert all(v < rec["tolerance"] for v in rec["residuals"].values())
    ident = [rec for rec in records if rec["kind"] == "identities"]
    assert len(ident) == 1 and ident[0]["pass"] and not ident[0]["failures"]
    assert summary_of(records)["pass"]


def test_verify_default_parameters(tmp_path):
    # defaults resolve to r=2, n=3 and pass
    rc, records = run(["verify"], tmp_path)
    assert rc == 0
    s = summary_of(records)
    assert s["ps"]["r"] == 2 and s["ps"]["u"] == ["9", "-3"]


def test_verify_rejects_degenerate_u(tmp_path):
    rc, records = run(["verify", "--u", "1,1", "--n", "2"], tmp_path)
    assert rc == 1
    errors = [rec for rec in records if rec["kind"] == "error"]
    assert errors and not errors[0]["pass"]
    assert "ValueError" in errors[0]["error"]


def test_verify_precision_independent_verdicts(tmp_path):
    rc64, rec64 = run(["verify", "--r", "1", "--n", "2",
                       "--precision", "64"], tmp_path, "a.jsonl")
    rc256, rec256 = run(["verify", "--r", "1", "--n", "2",
                         "--precision", "256"], tmp_path, "b.jsonl")
    assert rc64 == rc256 == 0
    v64 = [rec["pass"] for rec in rec64]
    v256 = [rec["pass"] for rec in rec256]
    assert v64 == v256


def test_gram_single_row(tmp_path):
    rc, records = run(["gram", "--shape", "(2)", "--u", "5"], tmp_path)
    assert rc == 0
    s = summary_of(records)
    assert s["gram_det"] == "2" and s["pass"]
    g = [rec for rec in records if rec["kind"] == "gram"][0]
    assert g["matches_product"] and g["path_independent"]


def test_gram_degenerate_parameters(tmp_path):
    rc, records = run(["gram", "--shape", "(1|1)", "--u", "1,1"], tmp_path)
    assert rc == 1
    assert records[0]["kind"] == "error"
    assert "ZeroDivisionError" in records[0]["error"]


def test_cellrank_smallest(tmp_path):
    rc, records = run(["cellrank", "--r", "1", "--n", "2"], tmp_path)
    assert rc == 0
    s = summary_of(records)
    assert s["count"] == s["rank"] == s["target"] == 3
    assert s["threshold"] > 0
    cells = [rec for rec in records if rec["kind"] == "cell"]
    assert sum(rec["members"] ** 2 for rec in cells) == 3


def test_omega_example(tmp_path):
    rc, records = run(["omega", "--r", "1", "--u", "3/2", "--order", "4"],
                      tmp_path)
    assert rc == 0
    s = summary_of(records)
    assert s["omega"] == ["4", "6", "9", "27/2", "81/4"]
    assert s["admissible"] and s["first_failure"] is None
    values = [rec["value"] for rec in records if rec["kind"] == "omega"]
    assert values == s["omega"]


def test_config_file_overrides_flags(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"u": ["3/2"], "N": 10,
                               "precision_bits": 128}))
    rc, records = run(["omega", "--r", "2", "--precision", "256",
                       "--order", "3", "--config", str(cfg)], tmp_path)
    assert rc == 0
    ps = summary_of(records)["ps"]
    assert ps["r"] == 1 and ps["u"] == ["3/2"]
    assert ps["precision_bits"] == 128 and ps["N"] == 10


def test_byte_identical_reruns(tmp_path):
    a = tmp_path / "a.jsonl"
    b = tmp_path / "b.jsonl"
    for path in (a, b):
        assert main(["cellrank", "--r", "1", "--n", "2",
                     "--out", str(path)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_usage_errors():
    for args in (["counts", "--r", "0"],
                 ["frobnicate"],
                 ["gram"],                      # missing --shape
                 ["counts", "--u", "not-a-number"],
                 ["verify", "--precision", "16"]):
        with pytest.raises(SystemExit) as exc:
            main(args)
        assert exc.value.code == 2
