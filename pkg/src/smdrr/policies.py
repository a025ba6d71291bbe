"""Scheduling policies and the harmonic-mean quantum rule.

SMDRR (subcontrary-mean dynamic round robin) recomputes its time quantum
every cycle as the ceiling of the harmonic mean of the remaining bursts,
dispatching the ready processes in ascending order of remaining time.
Fixed-quantum RR, FCFS and SJF serve as baselines.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

KINDS = ("smdrr", "rr", "fcfs", "sjf")

_LABELS = {"smdrr": "SMDRR", "rr": "RR", "fcfs": "FCFS", "sjf": "SJF"}


class PolicyError(ValueError):
    """Unknown policy spelling or bad policy parameters."""


@dataclass(frozen=True)
class PolicyConfig:
    """A scheduling policy choice; only RR carries a parameter (its quantum)."""

    kind: str
    quantum: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise PolicyError(f"unknown policy kind: {self.kind!r}")
        if self.kind == "rr":
            if not isinstance(self.quantum, int) or self.quantum < 1:
                raise PolicyError("rr requires a positive integer quantum")
        elif self.quantum is not None:
            raise PolicyError(f"{self.kind} does not take a quantum")

    @property
    def label(self) -> str:
        """Table label: RR, SMDRR, FCFS or SJF."""
        return _LABELS[self.kind]

    def spelling(self) -> str:
        """CLI/config spelling, e.g. 'smdrr' or 'rr:20'."""
        if self.kind == "rr":
            return f"rr:{self.quantum}"
        return self.kind


def parse_policy(text: str) -> PolicyConfig:
    """Parse a policy spelling: smdrr | rr:<quantum> | fcfs | sjf."""
    if text in ("smdrr", "fcfs", "sjf"):
        return PolicyConfig(text)
    if text == "rr":
        raise PolicyError("rr requires a quantum, e.g. rr:20")
    if text.startswith("rr:"):
        raw = text[3:]
        if not raw.isdigit() or int(raw) < 1:
            raise PolicyError(f"rr quantum must be a positive integer, got {raw!r}")
        return PolicyConfig("rr", int(raw))
    raise PolicyError(f"unknown policy: {text!r}")


@dataclass(frozen=True)
class ReadyEntry:
    """Snapshot of one ready process as seen by a policy."""

    pid: str
    remaining: int
    arrival: int
    submission_index: int


@dataclass(frozen=True)
class CyclePlan:
    """One SMDRR round: dispatch order plus the cycle's quantum."""

    order: tuple[str, ...]
    quantum: int


def harmonic_mean_quantum(remaining: Sequence[int]) -> int:
    """Ceiling of the harmonic mean n / (1/x1 + ... + 1/xn).

    Computed with exact rational arithmetic: a float sum can land on the
    wrong side of an integer boundary (e.g. [2,3,6] has harmonic mean
    exactly 3, which naive float math rounds up to 4) and a wrong quantum
    rewrites the whole schedule.  The result always lies within
    [min(remaining), max(remaining)].
    """
    if not remaining:
        raise ValueError("remaining burst list is empty")
    if any(x < 1 for x in remaining):
        raise ValueError("remaining bursts must be >= 1")
    mean = Fraction(len(remaining)) / sum(Fraction(1, x) for x in remaining)
    return math.ceil(mean)


def plan_cycle_smdrr(ready: Iterable[ReadyEntry]) -> CyclePlan:
    """Plan one SMDRR cycle over the ready set.

    Order: ascending remaining time, ties by arrival then submission
    index.  Quantum: harmonic-mean ceiling of the remaining times.
    """
    entries = sorted(ready, key=lambda e: (e.remaining, e.arrival, e.submission_index))
    if not entries:
        raise ValueError("ready set is empty")
    quantum = harmonic_mean_quantum([e.remaining for e in entries])
    return CyclePlan(tuple(e.pid for e in entries), quantum)


def rr_requeue_position(
    queue: Sequence[str],
    preempted_pid: str,
    arrivals_during_run: Iterable[ReadyEntry],
) -> list[str]:
    """RR queue after a quantum expiry.

    Processes that arrived at or before the preemption instant join first
    (arrival order, ties by submission index); the preempted process goes
    to the tail.
    """
    arrivals = sorted(arrivals_during_run, key=lambda e: (e.arrival, e.submission_index))
    return list(queue) + [e.pid for e in arrivals] + [preempted_pid]
