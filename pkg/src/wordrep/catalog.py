"""Batch classification: enumerate or read graphs, decide word-representability
exhaustively, run the 1-11 prover, and write JSONL records plus a CSV summary."""

from __future__ import annotations

import csv
import json
import os
import platform
import tempfile
import time
from collections import Counter as Tally
from dataclasses import dataclass, field
from multiprocessing import Pool
from pathlib import Path
from typing import Iterable, Iterator

from . import __version__
from .certificate import RepWitness, Unknown, WordRep, certificate_problem, from_dict, to_dict
from .graph import enumerate_nonisomorphic
from .io import ParseError, emit_graph6, parse_graph6, read_graph6_lines
from .outcome import Status
from .prover import prove_1_11, stage_of
from .search import SearchBudget
from .semitrans import find_semi_transitive_orientation

MAX_FILE_VERTICES = 10
EXHAUSTIVE_UP_TO = 8


class CatalogError(RuntimeError):
    pass


@dataclass
class ClassificationRecord:
    graph6: str
    n: int
    connected: bool = False
    word_representable: str = "inconclusive"  # "true" | "false" | "inconclusive"
    certificate: dict | None = None
    prover_stage: str = "unknown"
    timings: dict | None = None
    line: int | None = None
    error: str | None = None

    def to_json(self) -> str:
        d = {k: v for k, v in self.__dict__.items() if v is not None}
        return json.dumps(d, sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "ClassificationRecord":
        return cls(**json.loads(text))


def classify_graph(g, budget: SearchBudget = SearchBudget(), timings: bool = False) -> ClassificationRecord:
    rec = ClassificationRecord(emit_graph6(g), g.n, g.is_connected())
    clock = {}
    t0 = time.perf_counter()
    # graphs on at most 8 vertices are always decided exhaustively
    limit = None if g.n <= EXHAUSTIVE_UP_TO else budget.node_limit
    res = find_semi_transitive_orientation(g, limit)
    clock["orientation"] = time.perf_counter() - t0
    if res.status is Status.BUDGET:
        rec.word_representable = "inconclusive"
    else:
        rec.word_representable = "true" if res.found else "false"
    t0 = time.perf_counter()
    if res.found:
        cert = WordRep(RepWitness(arcs=tuple(res.value.arcs())))
    else:
        cert = prove_1_11(g, budget)
    clock["prover"] = time.perf_counter() - t0
    if not isinstance(cert, Unknown):
        rec.certificate = to_dict(cert)
    rec.prover_stage = stage_of(cert)
    if timings:
        rec.timings = {k: round(v, 6) for k, v in clock.items()}
    return rec


def _task(args) -> ClassificationRecord:
    g6, budget, timings = args
    return classify_graph(parse_graph6(g6), budget, timings)


def _run(g6s: Iterable[str], budget: SearchBudget, workers: int, timings: bool) -> Iterator[ClassificationRecord]:
    jobs = ((g6, budget, timings) for g6 in g6s)
    if workers <= 1:
        yield from map(_task, jobs)
        return
    with Pool(workers) as pool:
        # imap keeps input order, so output stays deterministic
        yield from pool.imap(_task, jobs, chunksize=16)


def classify_all(
    n: int,
    budget: SearchBudget = SearchBudget(),
    workers: int = 1,
    allow_large: bool = False,
    timings: bool = False,
) -> Iterator[ClassificationRecord]:
    """One record per isomorphism class on n vertices (n <= 7; 8 with allow_large)."""
    if n > 7 and not allow_large:
        raise CatalogError("classify_all is limited to n <= 7 unless allow_large is set")
    for rec in _run((emit_graph6(g) for g in enumerate_nonisomorphic(n, allow_large)), budget, workers, timings):
        if rec.word_representable == "inconclusive":
            raise CatalogError(f"inconclusive orientation search for {rec.graph6}")
        yield rec


def classify_file(
    path: str | Path,
    budget: SearchBudget = SearchBudget(),
    workers: int = 1,
    timings: bool = False,
) -> Iterator[ClassificationRecord]:
    """Records for each graph6 line; bad lines give error records and the run goes on."""
    entries = []
    for lineno, item in read_graph6_lines(Path(path).read_text()):
        if not isinstance(item, ParseError) and item.n > MAX_FILE_VERTICES:
            item = ParseError(f"{item.n} vertices; at most {MAX_FILE_VERTICES} supported", line=lineno)
        entries.append((lineno, item))
    good = [(lineno, g) for lineno, g in entries if not isinstance(g, ParseError)]
    results = _run((emit_graph6(g) for _, g in good), budget, workers, timings)
    for lineno, item in entries:
        if isinstance(item, ParseError):
            yield ClassificationRecord(graph6="", n=0, line=lineno, error=str(item), prover_stage="none")
            continue
        rec = next(results)
        rec.line = lineno
        yield rec


# -- persistence ----------------------------------------------------------------------


def manifest(config: dict, source: str) -> dict:
    return {
        "config": config,
        "python": platform.python_version(),
        "source": source,
        "tool": "wordrep",
        "version": __version__,
    }


def write_jsonl(records: Iterable[ClassificationRecord], path: str | Path, header: dict) -> list[ClassificationRecord]:
    """Write header + records; the file only appears once the whole run succeeded."""
    path = Path(path)
    kept = []
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=path.name, suffix=".part")
    try:
        with os.fdopen(fd, "w") as out:
            out.write(json.dumps({"manifest": header}, sort_keys=True, separators=(",", ":")) + "\n")
            for rec in records:
                out.write(rec.to_json() + "\n")
                kept.append(rec)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise
    return kept


def read_jsonl(path: str | Path) -> tuple[dict, list[ClassificationRecord]]:
    lines = Path(path).read_text().splitlines()
    head = json.loads(lines[0])["manifest"]
    return head, [ClassificationRecord.from_json(s) for s in lines[1:] if s.strip()]


SUMMARY_FIELDS = ("n", "total", "non_word_representable", "non_word_representable_connected", "certified", "unknown")


@dataclass
class SummaryRow:
    n: int
    total: int = 0
    non_word_representable: int = 0
    non_word_representable_connected: int = 0
    certified: int = 0
    unknown: int = 0
    stages: Tally = field(default_factory=Tally)


def summarize(records: Iterable[ClassificationRecord]) -> list[SummaryRow]:
    rows: dict[int, SummaryRow] = {}
    for r in records:
        if r.error:
            continue
        row = rows.setdefault(r.n, SummaryRow(r.n))
        row.total += 1
        if r.word_representable == "false":
            row.non_word_representable += 1
            row.non_word_representable_connected += r.connected
        if r.certificate is not None:
            row.certified += 1
        else:
            row.unknown += 1
        row.stages[r.prover_stage] += 1
    return [rows[n] for n in sorted(rows)]


def write_summary_csv(rows: list[SummaryRow], path: str | Path) -> None:
    with open(path, "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(SUMMARY_FIELDS)
        for row in rows:
            w.writerow([getattr(row, k) for k in SUMMARY_FIELDS])


def revalidate(records: Iterable[ClassificationRecord]) -> list[tuple[str, str]]:
    """(graph6, reason) for every stored certificate the checker now rejects."""
    bad = []
    for r in records:
        if r.certificate is None:
            continue
        try:
            why = certificate_problem(parse_graph6(r.graph6), from_dict(r.certificate))
        except (ValueError, KeyError, TypeError) as e:
            why = f"unreadable certificate: {e}"
        if why:
            bad.append((r.graph6, why))
    return bad
