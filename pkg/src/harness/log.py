"""
Optimization log: writing and parsing.

Layout, one item per line:

    routine: p1cal
    algorithm: tr
    ...                      header, "key: value"
    ---
    1<TAB>48.0<TAB>3.5       index, space-separated values, cost
    ...
    best: 48.4 0.01 7 tolerance_reached

Reals are written with repr() so they read back exactly.
"""

import os
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, TextIO, Tuple

import numpy as np

from optim import OptResult, Termination
from utils.errors import LogParseError

SEPARATOR = "---"
FOOTER_PREFIX = "best: "
HEADER_KEYS = ("routine", "algorithm", "backend", "cost", "region", "seed",
               "started", "pars")


def _reals(values: Sequence[float]) -> str:
    return " ".join(repr(float(v)) for v in values)


@dataclass
class LogRow:
    index: int
    values: Tuple[float, ...]
    cost: float


@dataclass
class LogBest:
    values: Tuple[float, ...]
    cost: float
    nfev: int
    termination: Termination


@dataclass
class LogRecord:
    """Parsed contents of one log file."""

    header: Dict[str, str] = field(default_factory=dict)
    rows: List[LogRow] = field(default_factory=list)
    best: Optional[LogBest] = None

    @property
    def pars(self) -> List[str]:
        return self.header.get("pars", "").split()

    @property
    def nfev(self) -> int:
        return len(self.rows)

    @property
    def complete(self) -> bool:
        return self.best is not None


class LogWriter:
    """Writes a log incrementally, flushing after every line."""

    def __init__(self, path: str):
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        self.path = path
        self._file: Optional[TextIO] = open(path, "w", encoding="utf-8", newline="\n")
        self._rows = 0

    def __enter__(self) -> "LogWriter":
        return self

    def __exit__(self, exc_type, exc, tb) -> None:
        self.close()

    def _line(self, text: str) -> None:
        if self._file is None:
            raise ValueError(f"log {self.path} is closed")
        self._file.write(text + "\n")
        self._file.flush()

    def write_header(self, header: Dict[str, str]) -> None:
        for key, value in header.items():
            self._line(f"{key}: {value}")
        self._line(SEPARATOR)

    def write_row(self, x: Sequence[float], cost: float) -> None:
        self._rows += 1
        self._line(f"{self._rows}\t{_reals(x)}\t{float(cost)!r}")

    def write_footer(self, result: OptResult) -> None:
        self._line(
            f"{FOOTER_PREFIX}{_reals(result.x_best)} {float(result.f_best)!r} "
            f"{result.nfev} {result.termination.value}"
        )

    def close(self) -> None:
        if self._file is not None:
            self._file.close()
            self._file = None


def write_log(result: OptResult, header: Dict[str, str], path: str) -> str:
    """Write a complete log for a finished run and return its path."""
    with LogWriter(path) as writer:
        writer.write_header(header)
        for x, cost in result.trajectory:
            writer.write_row(x, cost)
        writer.write_footer(result)
    return path


def _parse_reals(text: str, expected: int, line_number: int, what: str) -> Tuple[float, ...]:
    tokens = text.split()
    if len(tokens) != expected:
        raise LogParseError(f"{what} has {len(tokens)} values, expected {expected}",
                            line_number)
    try:
        return tuple(float(t) for t in tokens)
    except ValueError:
        raise LogParseError(f"{what} holds a non-numeric value: '{text}'", line_number)


def parse_log(path: str, allow_partial: bool = False) -> LogRecord:
    """
    Parse a log written by LogWriter.

    Args:
        path: Log file
        allow_partial: Accept a log without footer (a run that failed)

    Raises:
        FileNotFoundError: if the file does not exist
        LogParseError: at the first line that breaks the format
    """
    if not os.path.exists(path):
        raise FileNotFoundError(f"Log file not found: {path}")
    with open(path, "r", encoding="utf-8") as f:
        text = f.read()

    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    elif lines:
        raise LogParseError("incomplete last line", len(lines))

    record = LogRecord()
    line_number = 0
    in_header = True
    for line_number, line in enumerate(lines, start=1):
        if record.best is not None:
            raise LogParseError("content after the footer", line_number)

        if in_header:
            if line == SEPARATOR:
                in_header = False
                continue
            key, sep, value = line.partition(": ")
            if not sep or not key:
                raise LogParseError(f"expected 'key: value', got '{line}'", line_number)
            record.header[key] = value
            continue

        if line.startswith(FOOTER_PREFIX):
            tokens = line[len(FOOTER_PREFIX):].split()
            if len(tokens) < 3:
                raise LogParseError("footer needs values, cost, nfev and termination",
                                    line_number)
            values = _parse_reals(" ".join(tokens[:-3]), len(record.pars),
                                  line_number, "best point")
            try:
                cost = float(tokens[-3])
                nfev = int(tokens[-2])
                termination = Termination(tokens[-1])
            except ValueError as e:
                raise LogParseError(f"bad footer: {e}", line_number)
            record.best = LogBest(values, cost, nfev, termination)
            continue

        fields = line.split("\t")
        if len(fields) != 3:
            raise LogParseError(f"expected 'index<TAB>values<TAB>cost', got '{line}'",
                                line_number)
        try:
            index = int(fields[0])
            cost = float(fields[2])
        except ValueError:
            raise LogParseError(f"bad index or cost in '{line}'", line_number)
        if index != len(record.rows) + 1:
            raise LogParseError(f"row index {index} out of sequence", line_number)
        values = _parse_reals(fields[1], len(record.pars), line_number, "row")
        record.rows.append(LogRow(index, values, cost))

    if in_header:
        raise LogParseError(f"missing '{SEPARATOR}' after the header", line_number + 1)
    if record.best is None and not allow_partial:
        raise LogParseError("missing footer", line_number + 1)
    return record


def record_to_result(record: LogRecord) -> OptResult:
    """Rebuild an OptResult from a complete log."""
    if record.best is None:
        raise ValueError("log has no footer")
    trajectory = [(np.array(row.values), row.cost) for row in record.rows]
    return OptResult(np.array(record.best.values), record.best.cost, record.best.nfev,
                     trajectory, record.best.termination)
