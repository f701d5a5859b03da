"""Command line front end.

Single instance runs report one code; scans enumerate every triple of
proper supports for a given m.  Output is text, canonical JSON (scans emit
one JSON object per line), or CSV.  The environment variable LEECODE_MAX_M
caps m (default 5) since the message space grows as 8^m.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .builder import WeightDistribution
from .gray import DEFAULT_BUDGET_BYTES, AnalysisReport, analyze
from .simplicial import SupportSet

ROW_MODES = ("analyze", "closed", "brute", "compare")

CSV_COLUMNS = (
    "m",
    "D",
    "E",
    "F",
    "L_length",
    "gray_length",
    "code_size",
    "kernel_size",
    "enumerator",
    "n",
    "k",
    "d",
    "self_orthogonal",
    "weights_div4",
    "ab_w0",
    "ab_w_inf",
    "ab_minimal",
    "exact_minimal",
    "guaranteed_minimal",
    "distributions_match",
    "warning",
)


@dataclass(frozen=True)
class RunConfig:
    """Fully validated invocation."""

    m: int
    D: Optional[Tuple[int, ...]]  # 1-based coordinates, None in scans
    E: Optional[Tuple[int, ...]]
    F: Optional[Tuple[int, ...]]
    scan: bool
    mode: str  # per instance engine, one of ROW_MODES
    format: str
    out: Optional[str]
    filters: Tuple[str, ...]
    equal_sizes: bool
    exact_minimal: str
    budget_bytes: int
    workers: int


def _parse_support(text: str, m: int) -> Tuple[int, ...]:
    if text.strip().lower() in ("none", ""):
        return ()
    coords = set()
    for piece in text.split(","):
        piece = piece.strip()
        if not piece.isdigit():
            raise ValueError(f"bad coordinate {piece!r}")
        j = int(piece)
        if not 1 <= j <= m:
            raise ValueError(f"coordinate {j} out of range 1..{m}")
        coords.add(j)
    if len(coords) == m:
        raise ValueError(f"support must be a proper subset of 1..{m}")
    return tuple(sorted(coords))


def parse_args(argv: Optional[Sequence[str]] = None) -> RunConfig:
    parser = argparse.ArgumentParser(
        prog="leecode",
        description="Few Lee weight codes over Z2[u] from support triples.",
    )
    parser.add_argument(
        "command",
        nargs="?",
        choices=("analyze", "scan"),
        default="analyze",
        help="analyze one instance (default) or scan all support triples",
    )
    parser.add_argument("--m", type=int, required=True, help="ambient dimension")
    parser.add_argument("--D", help="first support, e.g. 1,2 or none")
    parser.add_argument("--E", help="second support")
    parser.add_argument("--F", help="third support")
    parser.add_argument(
        "--mode",
        choices=ROW_MODES + ("scan",),
        help="distribution engine per instance; 'scan' is a synonym for the "
        "scan command",
    )
    parser.add_argument(
        "--format", choices=("text", "json", "csv"), default="text"
    )
    parser.add_argument("--out", help="write output to this path instead of stdout")
    parser.add_argument(
        "--filter",
        action="append",
        choices=("minimal", "self-orthogonal"),
        default=[],
        help="keep only scan rows with this property (repeatable)",
    )
    parser.add_argument(
        "--equal-sizes",
        action="store_true",
        help="scan only triples with |D| = |E| = |F|",
    )
    parser.add_argument(
        "--exact-minimal",
        choices=("auto", "always", "never"),
        help="run the exhaustive cover check (default: auto for analyze, "
        "never for scan)",
    )
    parser.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_BUDGET_BYTES,
        help="memory budget in bytes for materializing Gray images",
    )
    parser.add_argument(
        "--workers", type=int, default=1, help="parallel scan processes"
    )
    ns = parser.parse_args(argv)

    max_m = int(os.environ.get("LEECODE_MAX_M", "5"))
    if ns.m < 2 or ns.m > max_m:
        parser.error(
            f"--m must be in 2..{max_m} (raise the cap with LEECODE_MAX_M)"
        )
    if ns.workers < 1:
        parser.error("--workers must be at least 1")
    if ns.budget < 0:
        parser.error("--budget must be nonnegative")

    scan = ns.command == "scan" or ns.mode == "scan"
    mode = ns.mode if ns.mode in ROW_MODES else ("closed" if scan else "analyze")
    exact = ns.exact_minimal or ("never" if scan else "auto")

    supports: List[Optional[Tuple[int, ...]]] = [None, None, None]
    if scan:
        if ns.D is not None or ns.E is not None or ns.F is not None:
            parser.error("scan enumerates all supports, drop --D/--E/--F")
    else:
        for i, (name, text) in enumerate((("D", ns.D), ("E", ns.E), ("F", ns.F))):
            if text is None:
                parser.error(f"--{name} is required (use 'none' for the empty set)")
            try:
                supports[i] = _parse_support(text, ns.m)
            except ValueError as exc:
                parser.error(f"--{name}: {exc}")

    return RunConfig(
        m=ns.m,
        D=supports[0],
        E=supports[1],
        F=supports[2],
        scan=scan,
        mode=mode,
        format=ns.format,
        out=ns.out,
        filters=tuple(dict.fromkeys(ns.filter)),
        equal_sizes=ns.equal_sizes,
        exact_minimal=exact,
        budget_bytes=ns.budget,
        workers=ns.workers,
    )


def _dist_rows(dist: WeightDistribution) -> List[Dict[str, int]]:
    return [
        {"weight": w, "frequency": f} for w, f in sorted(dist.entries.items())
    ]


def report_to_dict(report: AnalysisReport) -> Dict[str, object]:
    """JSON document for one report, keys in canonical order, ints only."""
    doc: Dict[str, object] = {
        "m": report.m,
        "D": list(report.D.coords()),
        "E": list(report.E.coords()),
        "F": list(report.F.coords()),
        "L_length": report.length,
        "gray_length": report.gray_length,
        "code_size": report.code_size,
        "kernel_size": report.kernel_size,
        "distribution": _dist_rows(report.distribution),
    }
    if report.message_distribution is not None:
        doc["message_distribution"] = _dist_rows(report.message_distribution)
    doc["enumerator"] = report.enumerator
    doc["params"] = {
        "n": report.params[0],
        "k": report.params[1],
        "d": report.params[2],
    }
    doc["self_orthogonal"] = report.self_orthogonal
    doc["weights_div4"] = report.weights_div4
    doc["ab_ratio"] = {"w0": report.ab.w_min, "w_inf": report.ab.w_max}
    doc["ab_minimal"] = report.ab.minimal
    doc["exact_minimal"] = (
        "skipped" if report.exact_minimal is None else report.exact_minimal
    )
    doc["guaranteed_minimal"] = (
        "open" if report.guaranteed_minimal is None else report.guaranteed_minimal
    )
    if report.distributions_match is not None:
        doc["distributions_match"] = report.distributions_match
        if report.distribution_diff:
            doc["distribution_diff"] = [
                {"level": lv, "weight": w, "enumerated": a, "formula": b}
                for lv, w, a, b in report.distribution_diff
            ]
    if report.warning:
        doc["warning"] = report.warning
    return doc


def _coords_text(coords: Tuple[int, ...]) -> str:
    return "{" + ",".join(str(j) for j in coords) + "}"


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def format_text(report: AnalysisReport) -> str:
    lines = [
        f"instance: m={report.m} D={_coords_text(report.D.coords())} "
        f"E={_coords_text(report.E.coords())} F={_coords_text(report.F.coords())}",
        f"defining set size: {report.length} (gray length {report.gray_length})",
        f"code size: {report.code_size} (kernel {report.kernel_size})",
        "codeword level weights:",
        "    weight   frequency",
    ]
    for w, f in sorted(report.distribution.entries.items()):
        lines.append(f"  {w:>8}  {f:>10}")
    if report.message_distribution is not None:
        lines.append("message level weights:")
        lines.append("    weight   frequency")
        for w, f in sorted(report.message_distribution.entries.items()):
            lines.append(f"  {w:>8}  {f:>10}")
    lines.append(f"enumerator: {report.enumerator}")
    n, k, d = report.params
    lines.append(f"gray parameters: n={n} k={k} d={d}")
    lines.append(
        f"self orthogonal: {_yesno(report.self_orthogonal)} "
        f"(weights divisible by 4: {_yesno(report.weights_div4)})"
    )
    verdict = "implies minimal" if report.ab.minimal else "not conclusive"
    lines.append(
        f"weight ratio: {report.ab.w_min}/{report.ab.w_max}, {verdict}"
    )
    if report.exact_minimal is None:
        lines.append("exact minimality: skipped")
    else:
        lines.append(f"exact minimality: {_yesno(report.exact_minimal)}")
    lines.append(
        "guaranteed minimal: "
        + ("yes" if report.guaranteed_minimal else "open")
    )
    if report.distributions_match is not None:
        lines.append(f"distributions match: {_yesno(report.distributions_match)}")
        for level, w, a, b in report.distribution_diff:
            lines.append(
                f"  {level} weight {w}: enumerated {a} vs formula {b}"
            )
    if report.warning:
        lines.append(f"warning: {report.warning}")
    return "\n".join(lines) + "\n"


def _csv_value(doc: Dict[str, object], key: str) -> str:
    if key in ("D", "E", "F"):
        coords = doc[key]
        assert isinstance(coords, list)
        return ",".join(str(j) for j in coords) if coords else "none"
    if key in ("n", "k", "d"):
        params = doc["params"]
        assert isinstance(params, dict)
        return str(params[key])
    if key == "ab_w0":
        return str(doc["ab_ratio"]["w0"])  # type: ignore[index]
    if key == "ab_w_inf":
        return str(doc["ab_ratio"]["w_inf"])  # type: ignore[index]
    if key in ("distributions_match", "warning") and key not in doc:
        return ""
    value = doc[key]
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _csv_row(doc: Dict[str, object]) -> List[str]:
    return [_csv_value(doc, key) for key in CSV_COLUMNS]


def _scan_worker(task: Tuple[int, int, int, int, str, str, int]) -> AnalysisReport:
    m, d_mask, e_mask, f_mask, mode, exact, budget = task
    from .ring import BitVec  # local import keeps the worker self contained

    return analyze(
        m,
        SupportSet(BitVec(d_mask, m)),
        SupportSet(BitVec(e_mask, m)),
        SupportSet(BitVec(f_mask, m)),
        mode=mode,
        exact_minimal=exact,
        budget_bytes=budget,
    )


def run_analyze(cfg: RunConfig) -> AnalysisReport:
    """One report for the configured instance."""
    assert cfg.D is not None and cfg.E is not None and cfg.F is not None
    return analyze(
        cfg.m,
        SupportSet.from_coords(cfg.D, cfg.m),
        SupportSet.from_coords(cfg.E, cfg.m),
        SupportSet.from_coords(cfg.F, cfg.m),
        mode=cfg.mode,
        exact_minimal=cfg.exact_minimal,
        budget_bytes=cfg.budget_bytes,
    )


def _keep(report: AnalysisReport, filters: Tuple[str, ...]) -> bool:
    for name in filters:
        if name == "minimal":
            if report.exact_minimal is False:
                return False
            if report.exact_minimal is None and not report.ab.minimal:
                return False
        elif name == "self-orthogonal":
            if not report.self_orthogonal:
                return False
    return True


def run_scan(cfg: RunConfig) -> Iterator[AnalysisReport]:
    """Reports for every triple of proper supports, masks ascending."""
    proper = range((1 << cfg.m) - 1)
    tasks = []
    for d_mask in proper:
        for e_mask in proper:
            for f_mask in proper:
                if cfg.equal_sizes and not (
                    d_mask.bit_count() == e_mask.bit_count() == f_mask.bit_count()
                ):
                    continue
                tasks.append(
                    (
                        cfg.m,
                        d_mask,
                        e_mask,
                        f_mask,
                        cfg.mode,
                        cfg.exact_minimal,
                        cfg.budget_bytes,
                    )
                )
    if cfg.workers == 1:
        produced: Iterable[AnalysisReport] = map(_scan_worker, tasks)
    else:
        pool = ProcessPoolExecutor(max_workers=cfg.workers)
        chunk = max(1, len(tasks) // (cfg.workers * 8))
        produced = pool.map(_scan_worker, tasks, chunksize=chunk)
    try:
        for report in produced:
            if _keep(report, cfg.filters):
                yield report
    finally:
        if cfg.workers != 1:
            pool.shutdown()


def _emit_scan(cfg: RunConfig, reports: Iterator[AnalysisReport], sink) -> bool:
    # text scans fall back to CSV, a table is the only sane shape here
    matched = True
    if cfg.format == "json":
        for report in reports:
            if report.distributions_match is False:
                matched = False
            sink.write(json.dumps(report_to_dict(report)) + "\n")
    else:
        writer = csv.writer(sink, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for report in reports:
            if report.distributions_match is False:
                matched = False
            writer.writerow(_csv_row(report_to_dict(report)))
    return matched


def main(argv: Optional[Sequence[str]] = None) -> int:
    cfg = parse_args(argv)
    sink = io.StringIO()
    matched = True
    if cfg.scan:
        matched = _emit_scan(cfg, run_scan(cfg), sink)
    else:
        report = run_analyze(cfg)
        if report.distributions_match is False:
            matched = False
        if cfg.format == "json":
            sink.write(json.dumps(report_to_dict(report), indent=2) + "\n")
        elif cfg.format == "csv":
            writer = csv.writer(sink, lineterminator="\n")
            writer.writerow(CSV_COLUMNS)
            writer.writerow(_csv_row(report_to_dict(report)))
        else:
            sink.write(format_text(report))
    text = sink.getvalue()
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0 if matched else 1


if __name__ == "__main__":
    raise SystemExit(main())
