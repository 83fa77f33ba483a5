"""Streaming check runs over graph6 input with resumable checkpoints.

One JSONL record is appended per (graph, check); tallies and the violation
list live in a :class:`ScanState` that is persisted every
``checkpoint_every`` graphs.  Resuming truncates the output back to the
last synced byte offset and skips the consumed prefix of the input, so an
interrupted-and-resumed scan reproduces a single-pass run byte for byte
(up to the informational ``runtime_ms`` field).

Every verdict is a pure function of its graph, so scans may also fan work
out over worker processes; results are merged in input order, which keeps
tallies and output deterministic regardless of scheduling.
"""

from __future__ import annotations

import json
import multiprocessing
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator

from .graphs import Graph, from_graph6
from .harness import CHECKS, CheckVerdict, FAILS


class ScanError(Exception):
    pass


@dataclass
class ScanState:
    checks: list[str]
    consumed: int = 0
    tallies: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    output_bytes: int = 0

    def record(self, verdict: CheckVerdict) -> None:
        per_check = self.tallies.setdefault(
            verdict.check, {"holds": 0, "fails": 0, "report-only": 0}
        )
        per_check[verdict.status] += 1
        if verdict.status == FAILS or verdict.witness.get("finding"):
            self.violations.append(
                {"check": verdict.check, "graph": verdict.graph_id, "status": verdict.status}
            )

    def tallies_json(self) -> str:
        """Deterministic serialisation of the tallies and violations."""
        payload = {
            "consumed": self.consumed,
            "tallies": self.tallies,
            "violations": self.violations,
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def save_state(state: ScanState, path: str) -> None:
    payload = {
        "checks": state.checks,
        "consumed": state.consumed,
        "tallies": state.tallies,
        "violations": state.violations,
        "output_bytes": state.output_bytes,
    }
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(payload, fh, sort_keys=True)
    os.replace(tmp, path)


def load_state(path: str) -> ScanState:
    with open(path) as fh:
        payload = json.load(fh)
    return ScanState(
        checks=payload["checks"],
        consumed=payload["consumed"],
        tallies=payload["tallies"],
        violations=payload["violations"],
        output_bytes=payload["output_bytes"],
    )


def verdict_record(verdict: CheckVerdict) -> dict:
    record = {
        "check": verdict.check,
        "graph": verdict.graph_id,
        "status": verdict.status,
        "witness": verdict.witness,
        "mu": frac_or_none(verdict.mean),
        "mu_float": float(verdict.mean) if verdict.mean is not None else None,
        "runtime_ms": verdict.runtime_ms,
    }
    return record


def frac_or_none(x: Fraction | None) -> str | None:
    return None if x is None else f"{x.numerator}/{x.denominator}"


def verdict_jsonl(verdict: CheckVerdict) -> str:
    return json.dumps(verdict_record(verdict), sort_keys=True, separators=(",", ":"))


CSV_FIELDS = ("check", "graph", "status", "mu", "mu_float", "runtime_ms", "witness")


def record_csv_row(record: dict) -> list[str]:
    """The CSV rendering of one verdict record (same data as the JSONL)."""
    row = []
    for name in CSV_FIELDS:
        value = record[name]
        if name == "witness":
            value = json.dumps(value, sort_keys=True, separators=(",", ":"))
        row.append("" if value is None else str(value))
    return row


def parse_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Decode newline-delimited graph6, reporting the offending line on error."""
    for lineno, line in enumerate(lines, start=1):
        text = line.strip()
        if not text:
            continue
        try:
            yield from_graph6(text)
        except ValueError as exc:
            raise ScanError(f"malformed graph6 at line {lineno}: {exc}") from exc


def _run_checks_by_name(args: tuple[str, tuple[str, ...]]) -> list[CheckVerdict]:
    text, names = args
    g = from_graph6(text)
    return [CHECKS[name](g) for name in names]


def scan(
    lines: Iterable[str],
    checks: list[str],
    out_path: str,
    checkpoint_path: str | None = None,
    checkpoint_every: int = 1000,
    jobs: int = 1,
    limit: int | None = None,
) -> ScanState:
    """Run the selected checks over a graph6 stream.

    ``limit`` stops after that many graphs (used to simulate interruption);
    the checkpoint makes the next call resume.  Without a checkpoint path
    the scan always starts fresh and the output file is rewritten.
    """
    unknown = [name for name in checks if name not in CHECKS]
    if unknown:
        raise ScanError(f"unknown checks: {', '.join(unknown)}")
    state = None
    if checkpoint_path and os.path.exists(checkpoint_path):
        state = load_state(checkpoint_path)
        if state.checks != list(checks):
            raise ScanError(
                f"checkpoint was created with checks {state.checks}, got {list(checks)}"
            )
    fresh = state is None
    if fresh:
        state = ScanState(checks=list(checks))
    elif state.consumed > 0 and not os.path.exists(out_path):
        raise ScanError(f"checkpoint expects existing output at {out_path}")

    # normalise, validate and skip the consumed prefix
    texts: list[str] = []
    for lineno, line in enumerate(lines, start=1):
        text = line.strip()
        if not text:
            continue
        try:
            from_graph6(text)
        except ValueError as exc:
            raise ScanError(f"malformed graph6 at line {lineno}: {exc}") from exc
        texts.append(text)
    todo = texts[state.consumed :]
    if limit is not None:
        todo = todo[: max(0, limit - state.consumed)]

    mode = "r+b" if (not fresh and os.path.exists(out_path)) else "wb"
    with open(out_path, mode) as out:
        if mode == "r+b":
            out.truncate(state.output_bytes)
            out.seek(state.output_bytes)

        def handle(verdicts: list[CheckVerdict]) -> None:
            for verdict in verdicts:
                out.write(verdict_jsonl(verdict).encode() + b"\n")
                state.record(verdict)
            state.consumed += 1
            if checkpoint_path and state.consumed % checkpoint_every == 0:
                out.flush()
                state.output_bytes = out.tell()
                save_state(state, checkpoint_path)

        names = tuple(checks)
        if jobs > 1 and len(todo) > 1:
            with multiprocessing.Pool(jobs) as pool:
                for verdicts in pool.imap(
                    _run_checks_by_name, ((t, names) for t in todo), chunksize=8
                ):
                    handle(verdicts)
        else:
            for text in todo:
                handle(_run_checks_by_name((text, names)))
        out.flush()
        state.output_bytes = out.tell()
    if checkpoint_path:
        save_state(state, checkpoint_path)
    return state
