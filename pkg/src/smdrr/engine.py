"""Deterministic discrete-time simulation producing execution traces.

The clock is a single monotone integer starting at the earliest arrival.
Traces are immutable and contiguous: every segment starts where the
previous one ended, with idle segments filling any CPU gaps.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .policies import PolicyConfig, ReadyEntry, plan_cycle_smdrr, rr_requeue_position
from .workload import Workload


class UnsupportedPolicyError(ValueError):
    """Raised when a trace has no quantum sequence (FCFS/SJF)."""


@dataclass(frozen=True)
class Segment:
    """One contiguous occupancy of the CPU; occupant None means idle."""

    occupant: str | None
    start: int
    end: int

    @property
    def is_idle(self) -> bool:
        return self.occupant is None

    @property
    def length(self) -> int:
        return self.end - self.start


@dataclass(frozen=True)
class ProcessOutcome:
    """Per-process simulation results, in submission order."""

    pid: str
    arrival: int
    burst: int
    first_start: int
    completion: int


@dataclass(frozen=True)
class Trace:
    """Simulation output: segments plus per-process outcomes.

    quanta holds the quantum chosen at each SMDRR cycle (a single entry
    for fixed-quantum RR); it is None for policies without quanta.
    """

    workload_name: str
    policy: str
    segments: tuple[Segment, ...]
    processes: tuple[ProcessOutcome, ...]
    quanta: tuple[int, ...] | None = None

    @property
    def makespan(self) -> int:
        return self.segments[-1].end

    @property
    def idle_time(self) -> int:
        return sum(s.length for s in self.segments if s.is_idle)

    def to_dict(self) -> dict:
        segments = []
        for s in self.segments:
            if s.is_idle:
                segments.append({"idle": True, "start": s.start, "end": s.end})
            else:
                segments.append({"pid": s.occupant, "start": s.start, "end": s.end})
        doc = {
            "workload": self.workload_name,
            "policy": self.policy,
            "segments": segments,
            "processes": [
                {
                    "pid": p.pid,
                    "arrival": p.arrival,
                    "burst": p.burst,
                    "first_start": p.first_start,
                    "completion": p.completion,
                }
                for p in self.processes
            ],
        }
        if self.quanta is not None:
            doc["quanta"] = list(self.quanta)
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


class _Proc:
    """Mutable per-process simulation state."""

    __slots__ = ("pid", "arrival", "burst", "index", "remaining", "first_start", "completion")

    def __init__(self, pid: str, arrival: int, burst: int, index: int) -> None:
        self.pid = pid
        self.arrival = arrival
        self.burst = burst
        self.index = index
        self.remaining = burst
        self.first_start: int | None = None
        self.completion: int | None = None

    def entry(self) -> ReadyEntry:
        return ReadyEntry(self.pid, self.remaining, self.arrival, self.index)


def simulate(workload: Workload, policy: PolicyConfig) -> Trace:
    """Run one policy over one workload and return its trace."""
    procs = [
        _Proc(p.pid, p.arrival, p.burst, i)
        for i, p in enumerate(workload.processes)
    ]
    if policy.kind == "smdrr":
        segments, quanta = _run_smdrr(procs)
    elif policy.kind == "rr":
        segments = _run_rr(procs, policy.quantum)
        quanta = [policy.quantum]
    elif policy.kind == "fcfs":
        segments = _run_fcfs(procs)
        quanta = None
    else:
        segments = _run_sjf(procs)
        quanta = None
    outcomes = tuple(
        ProcessOutcome(p.pid, p.arrival, p.burst, p.first_start, p.completion)
        for p in procs
    )
    return Trace(
        workload_name=workload.name,
        policy=policy.spelling(),
        segments=tuple(segments),
        processes=outcomes,
        quanta=tuple(quanta) if quanta is not None else None,
    )


def quantum_sequence(trace: Trace) -> list[int]:
    """Quanta chosen per SMDRR cycle (single fixed value for RR)."""
    if trace.quanta is None:
        raise UnsupportedPolicyError(f"policy {trace.policy!r} has no quantum sequence")
    return list(trace.quanta)


def _dispatch(proc: _Proc, now: int, run: int, segments: list[Segment]) -> int:
    if proc.first_start is None:
        proc.first_start = now
    segments.append(Segment(proc.pid, now, now + run))
    proc.remaining -= run
    if proc.remaining == 0:
        proc.completion = now + run
    return now + run


def _run_smdrr(procs: list[_Proc]) -> tuple[list[Segment], list[int]]:
    # Arrivals are admitted only between cycles: a process turning up
    # mid-cycle waits for the round to finish before it can be planned.
    pending = sorted(procs, key=lambda p: (p.arrival, p.index))
    now = pending[0].arrival
    ready: list[_Proc] = []
    segments: list[Segment] = []
    quanta: list[int] = []
    while pending or ready:
        while pending and pending[0].arrival <= now:
            ready.append(pending.pop(0))
        if not ready:
            segments.append(Segment(None, now, pending[0].arrival))
            now = pending[0].arrival
            continue
        plan = plan_cycle_smdrr(p.entry() for p in ready)
        quanta.append(plan.quantum)
        by_pid = {p.pid: p for p in ready}
        for pid in plan.order:
            proc = by_pid[pid]
            now = _dispatch(proc, now, min(plan.quantum, proc.remaining), segments)
            if proc.remaining == 0:
                ready.remove(proc)
    return segments, quanta


def _run_rr(procs: list[_Proc], quantum: int) -> list[Segment]:
    pending = sorted(procs, key=lambda p: (p.arrival, p.index))
    by_pid = {p.pid: p for p in procs}
    now = pending[0].arrival
    queue: list[str] = []
    segments: list[Segment] = []

    def take_arrivals(upto: int) -> list[_Proc]:
        arrived = []
        while pending and pending[0].arrival <= upto:
            arrived.append(pending.pop(0))
        return arrived

    queue = [p.pid for p in take_arrivals(now)]
    while queue or pending:
        if not queue:
            nxt = pending[0].arrival
            segments.append(Segment(None, now, nxt))
            now = nxt
            queue = [p.pid for p in take_arrivals(now)]
            continue
        proc = by_pid[queue.pop(0)]
        now = _dispatch(proc, now, min(quantum, proc.remaining), segments)
        arrived = take_arrivals(now)
        if proc.remaining > 0:
            queue = rr_requeue_position(queue, proc.pid, (p.entry() for p in arrived))
        else:
            queue += [p.pid for p in sorted(arrived, key=lambda p: (p.arrival, p.index))]
    return segments


def _run_fcfs(procs: list[_Proc]) -> list[Segment]:
    segments: list[Segment] = []
    ordered = sorted(procs, key=lambda p: (p.arrival, p.index))
    now = ordered[0].arrival
    for proc in ordered:
        if now < proc.arrival:
            segments.append(Segment(None, now, proc.arrival))
            now = proc.arrival
        now = _dispatch(proc, now, proc.burst, segments)
    return segments


def _run_sjf(procs: list[_Proc]) -> list[Segment]:
    segments: list[Segment] = []
    left = list(procs)
    now = min(p.arrival for p in left)
    while left:
        arrived = [p for p in left if p.arrival <= now]
        if not arrived:
            nxt = min(p.arrival for p in left)
            segments.append(Segment(None, now, nxt))
            now = nxt
            continue
        proc = min(arrived, key=lambda p: (p.burst, p.arrival, p.index))
        now = _dispatch(proc, now, proc.burst, segments)
        left.remove(proc)
    return segments
