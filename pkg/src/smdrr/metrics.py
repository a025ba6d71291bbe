"""Scheduling metrics under two turnaround conventions.

STANDARD measures turnaround from each process's arrival (the textbook
definition).  PAPER_ZERO measures it from t = 0 regardless of arrival,
which is the convention the built-in cases' published tables follow for
nonzero arrivals.  The two coincide whenever every arrival is 0.

Context switches count dispatch boundaries, *including* a process
re-dispatched immediately after its own quantum expiry: cs = number of
process segments - 1.  This differs from the textbook "process change
only" count but is the only convention the built-in cases' tables are
consistent with.  Idle segments are transparent: a process-idle-process
sandwich is one switch.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .engine import Trace


class Convention(enum.Enum):
    STANDARD = "standard"
    PAPER_ZERO = "paper"


@dataclass(frozen=True)
class ProcessMetrics:
    pid: str
    turnaround: int
    waiting: int
    response: int


@dataclass(frozen=True)
class MetricsReport:
    """Per-process and aggregate metrics for one trace.

    Aggregates are exact rationals; decimal rendering happens only at the
    report boundary (format_decimal) so table values like 85.75 or 140.4
    match exactly rather than within float epsilon.
    """

    convention: Convention
    processes: tuple[ProcessMetrics, ...]
    att: Fraction
    awt: Fraction
    cs: int
    avg_response: Fraction
    makespan: int
    cpu_utilization: Fraction
    throughput: Fraction

    def to_dict(self) -> dict:
        return {
            "convention": self.convention.value,
            "processes": [
                {
                    "pid": p.pid,
                    "turnaround": p.turnaround,
                    "waiting": p.waiting,
                    "response": p.response,
                }
                for p in self.processes
            ],
            "att": format_decimal(self.att),
            "awt": format_decimal(self.awt),
            "cs": self.cs,
            "avg_response": format_decimal(self.avg_response),
            "makespan": self.makespan,
            "cpu_utilization": format_decimal(self.cpu_utilization),
            "throughput": format_decimal(self.throughput),
        }


def context_switches(trace: Trace) -> int:
    """Dispatch boundaries in the trace: process segment count - 1."""
    dispatches = sum(1 for s in trace.segments if not s.is_idle)
    if dispatches == 0:
        raise ValueError("trace has no process segments")
    return dispatches - 1


def compute_metrics(trace: Trace, convention: Convention = Convention.STANDARD) -> MetricsReport:
    """Compute per-process and aggregate metrics for a trace."""
    per_process = []
    for p in trace.processes:
        origin = 0 if convention is Convention.PAPER_ZERO else p.arrival
        turnaround = p.completion - origin
        per_process.append(
            ProcessMetrics(
                pid=p.pid,
                turnaround=turnaround,
                waiting=turnaround - p.burst,
                response=p.first_start - p.arrival,
            )
        )
    n = len(per_process)
    makespan = trace.makespan
    return MetricsReport(
        convention=convention,
        processes=tuple(per_process),
        att=Fraction(sum(m.turnaround for m in per_process), n),
        awt=Fraction(sum(m.waiting for m in per_process), n),
        cs=context_switches(trace),
        avg_response=Fraction(sum(m.response for m in per_process), n),
        makespan=makespan,
        cpu_utilization=Fraction(makespan - trace.idle_time, makespan),
        throughput=Fraction(n, makespan),
    )


def format_decimal(value: Fraction) -> str:
    """Render an exact rational as a decimal string.

    Integers print bare ("144"), terminating expansions print exactly
    with no trailing zeros ("140.4", "85.75"), and non-terminating ones
    round to 4 places then drop trailing zeros down to 2 places.
    """
    sign = "-" if value < 0 else ""
    value = abs(value)
    if value.denominator == 1:
        return sign + str(value.numerator)
    rest = value.denominator
    for factor in (2, 5):
        while rest % factor == 0:
            rest //= factor
    if rest == 1:
        places = 0
        scaled = value
        while scaled.denominator != 1:
            scaled *= 10
            places += 1
        digits = str(scaled.numerator).rjust(places + 1, "0")
    else:
        places = 4
        digits = str(round(value * 10**places)).rjust(places + 1, "0")
        while places > 2 and digits.endswith("0"):
            digits = digits[:-1]
            places -= 1
    return f"{sign}{digits[:-places]}.{digits[-places:]}"
