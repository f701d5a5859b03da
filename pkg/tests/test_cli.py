"""Command line parsing, formatting, and end to end runs."""

import csv
import dataclasses
import io
import json
import subprocess
import sys

import pytest

from leecode.cli import (
    CSV_COLUMNS,
    _emit_scan,
    format_text,
    main,
    parse_args,
    report_to_dict,
    run_analyze,
    run_scan,
)

EX_A_ARGS = ["--m", "3", "--D", "1,2", "--E", "1,3", "--F", "2,3"]


def test_parse_args_defaults():
    cfg = parse_args(EX_A_ARGS)
    assert cfg.m == 3
    assert (cfg.D, cfg.E, cfg.F) == ((1, 2), (1, 3), (2, 3))
    assert cfg.scan is False
    assert cfg.mode == "analyze"
    assert cfg.format == "text"
    assert cfg.exact_minimal == "auto"
    assert cfg.workers == 1
    assert cfg.filters == ()
    # explicit command word, same result
    assert parse_args(["analyze"] + EX_A_ARGS) == cfg


def test_parse_args_scan_defaults():
    cfg = parse_args(["scan", "--m", "2"])
    assert cfg.scan is True
    assert cfg.mode == "closed"
    assert cfg.exact_minimal == "never"
    assert cfg.D is None
    # --mode scan is a synonym for the command
    assert parse_args(["--m", "2", "--mode", "scan"]).scan is True


def test_parse_args_support_normalization():
    cfg = parse_args(["--m", "3", "--D", "none", "--E", " 2 , 1 ", "--F", "1,1,2"])
    assert cfg.D == ()
    assert cfg.E == (1, 2)
    assert cfg.F == (1, 2)


@pytest.mark.parametrize(
    "argv",
    [
        ["--m", "3", "--D", "1,2", "--E", "1,3"],  # missing --F
        ["--m", "3", "--D", "4", "--E", "1", "--F", "2"],  # out of range
        ["--m", "3", "--D", "1,2,3", "--E", "1", "--F", "2"],  # full set
        ["--m", "3", "--D", "x", "--E", "1", "--F", "2"],  # not a number
        ["--m", "1", "--D", "none", "--E", "none", "--F", "none"],  # m too small
        ["--m", "6", "--D", "1", "--E", "1", "--F", "1"],  # above the cap
        ["scan", "--m", "2", "--D", "1"],  # supports in a scan
        ["scan", "--m", "2", "--workers", "0"],
        ["scan", "--m", "2", "--budget", "-1"],
    ],
)
def test_parse_args_rejects(argv):
    with pytest.raises(SystemExit) as err:
        parse_args(argv)
    assert err.value.code == 2


def test_m_cap_from_environment(monkeypatch):
    monkeypatch.setenv("LEECODE_MAX_M", "3")
    with pytest.raises(SystemExit):
        parse_args(["scan", "--m", "4"])
    monkeypatch.setenv("LEECODE_MAX_M", "4")
    assert parse_args(["scan", "--m", "4"]).m == 4


def test_filters_deduplicate():
    cfg = parse_args(
        ["scan", "--m", "2", "--filter", "minimal", "--filter", "minimal"]
    )
    assert cfg.filters == ("minimal",)


def test_report_to_dict_key_order():
    report = run_analyze(parse_args(EX_A_ARGS))
    doc = report_to_dict(report)
    assert list(doc) == [
        "m",
        "D",
        "E",
        "F",
        "L_length",
        "gray_length",
        "code_size",
        "kernel_size",
        "distribution",
        "enumerator",
        "params",
        "self_orthogonal",
        "weights_div4",
        "ab_ratio",
        "ab_minimal",
        "exact_minimal",
        "guaranteed_minimal",
    ]
    assert doc["params"] == {"n": 128, "k": 8, "d": 32}
    assert doc["distribution"][0] == {"weight": 0, "frequency": 1}
    assert doc["guaranteed_minimal"] == "open"
    assert doc["exact_minimal"] is False


def test_report_to_dict_compare_and_closed_fields():
    compare = report_to_dict(
        run_analyze(parse_args(EX_A_ARGS + ["--mode", "compare"]))
    )
    assert compare["distributions_match"] is True
    assert "message_distribution" in compare
    assert "distribution_diff" not in compare

    closed = report_to_dict(
        run_analyze(parse_args(EX_A_ARGS + ["--mode", "closed"]))
    )
    assert closed["exact_minimal"] == "skipped"
    assert "message_distribution" not in closed


def test_format_text_snapshot():
    report = run_analyze(parse_args(EX_A_ARGS))
    text = format_text(report)
    assert "instance: m=3 D={1,2} E={1,3} F={2,3}" in text
    assert "defining set size: 64 (gray length 128)" in text
    assert "code size: 256 (kernel 2)" in text
    assert "gray parameters: n=128 k=8 d=32" in text
    assert "self orthogonal: yes (weights divisible by 4: yes)" in text
    assert "weight ratio: 32/128, not conclusive" in text
    assert "exact minimality: no" in text
    assert "guaranteed minimal: open" in text
    assert text.endswith("\n")


def test_main_text_output(capsys):
    assert main(EX_A_ARGS) == 0
    out = capsys.readouterr().out
    assert "gray parameters: n=128 k=8 d=32" in out


def test_main_json_round_trip(capsys):
    assert main(EX_A_ARGS + ["--format", "json"]) == 0
    out = capsys.readouterr().out
    doc = json.loads(out)
    assert json.dumps(doc, indent=2) + "\n" == out
    assert doc["enumerator"].startswith("X^128")


def test_main_csv_single_instance(capsys):
    args = ["--m", "3", "--D", "none", "--E", "1", "--F", "1,2"]
    assert main(args + ["--format", "csv"]) == 0
    out = capsys.readouterr().out
    header, data = list(csv.reader(io.StringIO(out)))
    assert header == list(CSV_COLUMNS)
    row = dict(zip(CSV_COLUMNS, data))
    assert row["D"] == "none"
    assert row["E"] == "1"
    assert row["F"] == "1,2"
    assert row["m"] == "3"
    assert row["self_orthogonal"] in ("true", "false")
    assert row["exact_minimal"] in ("true", "false", "skipped")


def test_main_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    assert main(EX_A_ARGS + ["--format", "json", "--out", str(target)]) == 0
    assert capsys.readouterr().out == ""
    doc = json.loads(target.read_text(encoding="utf-8"))
    assert doc["m"] == 3


def test_scan_row_count_m2(capsys):
    assert main(["scan", "--m", "2", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert len(lines) == 1 + 27  # three proper subsets of {1, 2}, cubed
    # text scans fall back to the same table
    assert main(["scan", "--m", "2"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == ",".join(CSV_COLUMNS)


def test_scan_json_lines(capsys):
    assert main(["scan", "--m", "2", "--format", "json"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 27
    docs = [json.loads(line) for line in lines]
    assert all(doc["m"] == 2 for doc in docs)
    # ascending mask order means the empty triple comes first
    assert docs[0]["D"] == docs[0]["E"] == docs[0]["F"] == []


def test_scan_equal_sizes_and_filter(capsys):
    assert main(["scan", "--m", "3", "--equal-sizes", "--format", "json"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 1 + 27 + 27  # size 0, 1, 2 triples

    assert (
        main(
            [
                "scan",
                "--m",
                "3",
                "--equal-sizes",
                "--filter",
                "minimal",
                "--format",
                "json",
            ]
        )
        == 0
    )
    kept = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert len(kept) == 1 + 27  # the size 2 family fails the ratio test
    assert all(len(doc["D"]) <= 1 for doc in kept)
    assert all(doc["guaranteed_minimal"] is True for doc in kept)


def test_scan_self_orthogonal_filter(capsys):
    assert (
        main(["scan", "--m", "2", "--filter", "self-orthogonal", "--format", "json"])
        == 0
    )
    docs = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert all(doc["self_orthogonal"] is True for doc in docs)
    assert 0 < len(docs) <= 27


def test_scan_workers_deterministic():
    base = parse_args(["scan", "--m", "2", "--format", "json"])
    serial = [report_to_dict(r) for r in run_scan(base)]
    parallel_cfg = dataclasses.replace(base, workers=2)
    parallel = [report_to_dict(r) for r in run_scan(parallel_cfg)]
    assert serial == parallel


def test_emit_scan_flags_mismatch():
    cfg = parse_args(["scan", "--m", "2", "--format", "json"])
    report = run_analyze(parse_args(EX_A_ARGS + ["--mode", "compare"]))
    sink = io.StringIO()
    assert _emit_scan(cfg, iter([report]), sink) is True
    doctored = dataclasses.replace(report, distributions_match=False)
    assert _emit_scan(cfg, iter([doctored]), sink) is False


def test_module_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "leecode", "--m", "3", "--D", "1", "--E", "2",
         "--F", "3", "--format", "json"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert result.returncode == 0
    doc = json.loads(result.stdout)
    assert doc["params"] == {"n": 432, "k": 9, "d": 192}
