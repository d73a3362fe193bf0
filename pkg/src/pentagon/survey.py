"""Batch classification of a graph6 corpus into JSONL records."""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Iterable, Iterator, Optional

from . import canon
from .dynamics import DEFAULT_MAX_ORDER, DEFAULT_MAX_STEPS, EventuallyPeriodic, classify
from .io import GRAPH6_HEADER, parse_graph6


@dataclass
class SurveyRecord:
    input_id: str
    order: int
    size: int
    k: int
    outcome: str
    orders: list
    stop_reason: str
    wall_time_ms: int
    vanish_step: Optional[int] = None
    preperiod: Optional[int] = None
    period: Optional[int] = None
    periodic_verified: Optional[bool] = None
    error: Optional[str] = None

    def to_json(self) -> str:
        return json.dumps({k: v for k, v in asdict(self).items() if v is not None})


def survey_one(args: tuple[str, int, int, int]) -> SurveyRecord:
    record, k, max_steps, max_order = args
    start = time.perf_counter()
    try:
        g = parse_graph6(record)
        c = classify(g, k, max_steps, max_order)
    except Exception as exc:  # a bad record must not stop the batch
        ms = int((time.perf_counter() - start) * 1000)
        return SurveyRecord(record, -1, -1, k, "Error", [], "error", ms, error=str(exc))
    info = c.as_dict()
    verified = None
    if isinstance(c.outcome, EventuallyPeriodic):
        m, p = c.outcome.preperiod, c.outcome.period
        its = c.trajectory.iterates
        verified = canon.is_isomorphic(its[m], its[m + p]) and c.outcome.shift_verified
    ms = int((time.perf_counter() - start) * 1000)
    return SurveyRecord(
        input_id=record,
        order=g.order,
        size=g.size,
        k=k,
        outcome=info["outcome"],
        orders=info["orders"],
        stop_reason=info["stop_reason"],
        wall_time_ms=ms,
        vanish_step=info.get("vanish_step"),
        preperiod=info.get("preperiod"),
        period=info.get("period"),
        periodic_verified=verified,
    )


def run_survey(records: Iterable[str], k: int = 5, max_steps: int = DEFAULT_MAX_STEPS,
               max_order: int = DEFAULT_MAX_ORDER, jobs: int = 1) -> Iterator[SurveyRecord]:
    """Classify every record; results come back in input order whatever
    ``jobs`` is."""
    tasks = ((r, k, max_steps, max_order) for r in records)
    if jobs <= 1:
        yield from map(survey_one, tasks)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(survey_one, tasks, chunksize=16)


def read_records(path) -> Iterator[str]:
    """Raw graph6 records, one per non-blank line; parsing is left to the
    workers so a malformed line becomes an error record."""
    with open(path, "rb") as fh:
        for raw in fh:
            line = raw.strip()
            if line.startswith(GRAPH6_HEADER):
                line = line[len(GRAPH6_HEADER):]
            if line:
                yield line.decode("ascii", errors="replace")


def survey_file(in_path, out_path, k: int = 5, max_steps: int = DEFAULT_MAX_STEPS,
                max_order: int = DEFAULT_MAX_ORDER, jobs: int = 1, resume: bool = False) -> int:
    """Write one JSONL record per input graph. With ``resume``, inputs
    already present as lines of ``out_path`` are skipped. Returns the number
    of records written by this call."""
    records = list(read_records(in_path))
    skip = 0
    if resume and os.path.exists(out_path):
        with open(out_path, "rb") as fh:
            skip = sum(1 for line in fh if line.strip())
    written = 0
    with open(out_path, "a" if resume else "w") as out:
        for rec in run_survey(records[skip:], k, max_steps, max_order, jobs):
            out.write(rec.to_json() + "\n")
            written += 1
    return written
