"""Run loop, trajectory logging and result reports."""

from .config import DEFAULT_LOG_NAME, RunConfig
from .log import (
    LogBest,
    LogRecord,
    LogRow,
    LogWriter,
    parse_log,
    record_to_result,
    write_log,
)
from .runner import PoiseRun, ensure_user_costs, resolve_sim_config, run
from .report import report, trajectory_table

__all__ = [
    "DEFAULT_LOG_NAME",
    "RunConfig",
    "LogBest",
    "LogRecord",
    "LogRow",
    "LogWriter",
    "parse_log",
    "record_to_result",
    "write_log",
    "PoiseRun",
    "ensure_user_costs",
    "resolve_sim_config",
    "run",
    "report",
    "trajectory_table",
]
