"""Process workloads: validation, CSV/JSON I/O, seeded generation, built-in cases.

All times are integer milliseconds.  A zero burst is rejected outright
because the harmonic-mean quantum is undefined on it.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

_INT_RE = re.compile(r"-?[0-9]+", re.ASCII)
_CSV_HEADER = "pid,arrival,burst"
_MASK64 = (1 << 64) - 1


class WorkloadError(ValueError):
    """Invalid workload data (bad field, duplicate pid, malformed input)."""


@dataclass(frozen=True)
class ProcessSpec:
    """One process: identifier, arrival time (ms) and burst time (ms)."""

    pid: str
    arrival: int
    burst: int

    def __post_init__(self) -> None:
        if not isinstance(self.pid, str) or not self.pid:
            raise WorkloadError("pid must be a non-empty string")
        if not isinstance(self.arrival, int) or isinstance(self.arrival, bool):
            raise WorkloadError(f"process {self.pid}: arrival must be an integer")
        if not isinstance(self.burst, int) or isinstance(self.burst, bool):
            raise WorkloadError(f"process {self.pid}: burst must be an integer")
        if self.arrival < 0:
            raise WorkloadError(f"process {self.pid}: arrival must be >= 0")
        if self.burst < 1:
            raise WorkloadError(f"process {self.pid}: burst must be >= 1")


@dataclass(frozen=True)
class Workload:
    """A named, ordered collection of processes.

    List order is the submission order and seeds every deterministic
    tie-break downstream.
    """

    name: str
    processes: tuple[ProcessSpec, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "processes", tuple(self.processes))
        if not self.processes:
            raise WorkloadError("workload has no processes")
        seen: set[str] = set()
        for p in self.processes:
            if p.pid in seen:
                raise WorkloadError(f"duplicate pid {p.pid}")
            seen.add(p.pid)

    def __len__(self) -> int:
        return len(self.processes)


@dataclass(frozen=True)
class GeneratorSpec:
    """Parameters for the seeded uniform workload generator."""

    count: int
    burst_min: int
    burst_max: int
    arrival_min: int = 0
    arrival_max: int = 0
    seed: int = 0

    def __post_init__(self) -> None:
        if self.count < 1:
            raise WorkloadError("count must be >= 1")
        if self.burst_min < 1:
            raise WorkloadError("burst_min must be >= 1")
        if self.burst_max < self.burst_min:
            raise WorkloadError("burst range is empty (min > max)")
        if self.arrival_min < 0:
            raise WorkloadError("arrival_min must be >= 0")
        if self.arrival_max < self.arrival_min:
            raise WorkloadError("arrival range is empty (min > max)")
        if not 0 <= self.seed <= _MASK64:
            raise WorkloadError("seed must fit in 64 unsigned bits")


def _parse_int(text: str, where: str, field: str) -> int:
    if not _INT_RE.fullmatch(text):
        raise WorkloadError(f"{where}: {field} is not a base-10 integer: {text!r}")
    return int(text)


def parse_workload(text: str, format: str = "csv", name: str = "workload") -> Workload:
    """Parse a workload from CSV or JSON text.

    CSV has no name column, so `name` supplies one (JSON carries its own).
    Raises WorkloadError with the offending row/field on any invalid input.
    """
    if format == "csv":
        return _parse_csv(text, name)
    if format == "json":
        return _parse_json(text)
    raise ValueError(f"unknown workload format: {format!r}")


def _parse_csv(text: str, name: str) -> Workload:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise WorkloadError("empty workload file")
    if lines[0].strip() != _CSV_HEADER:
        raise WorkloadError(f"line 1: header must be exactly {_CSV_HEADER!r}")
    if len(lines) == 1:
        raise WorkloadError("workload file has a header but no processes")
    processes = []
    seen: set[str] = set()
    for lineno, line in enumerate(lines[1:], start=2):
        cells = line.strip().split(",")
        if len(cells) != 3:
            raise WorkloadError(f"line {lineno}: expected 3 fields, got {len(cells)}")
        pid = cells[0].strip()
        if not pid:
            raise WorkloadError(f"line {lineno}: pid is empty")
        if pid in seen:
            raise WorkloadError(f"line {lineno}: duplicate pid {pid}")
        seen.add(pid)
        arrival = _parse_int(cells[1].strip(), f"line {lineno}", "arrival")
        burst = _parse_int(cells[2].strip(), f"line {lineno}", "burst")
        try:
            processes.append(ProcessSpec(pid, arrival, burst))
        except WorkloadError as exc:
            raise WorkloadError(f"line {lineno}: {exc}") from None
    return Workload(name, tuple(processes))


def _parse_json(text: str) -> Workload:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise WorkloadError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise WorkloadError("top level must be an object")
    if not isinstance(doc.get("name"), str):
        raise WorkloadError("field 'name' must be a string")
    rows = doc.get("processes")
    if not isinstance(rows, list) or not rows:
        raise WorkloadError("field 'processes' must be a non-empty array")
    processes = []
    for i, row in enumerate(rows):
        where = f"processes[{i}]"
        if not isinstance(row, dict):
            raise WorkloadError(f"{where}: must be an object")
        for field in ("pid", "arrival", "burst"):
            if field not in row:
                raise WorkloadError(f"{where}: missing field {field!r}")
        for field in ("arrival", "burst"):
            value = row[field]
            if not isinstance(value, int) or isinstance(value, bool):
                raise WorkloadError(f"{where}: {field} must be an integer")
        try:
            processes.append(ProcessSpec(row["pid"], row["arrival"], row["burst"]))
        except WorkloadError as exc:
            raise WorkloadError(f"{where}: {exc}") from None
    try:
        return Workload(doc["name"], tuple(processes))
    except WorkloadError as exc:
        raise WorkloadError(f"workload: {exc}") from None


def serialize_workload(w: Workload, format: str = "csv") -> str:
    """Render a workload as CSV or JSON text; parse_workload inverts it."""
    if format == "csv":
        rows = [_CSV_HEADER]
        rows += [f"{p.pid},{p.arrival},{p.burst}" for p in w.processes]
        return "\n".join(rows) + "\n"
    if format == "json":
        doc = {
            "name": w.name,
            "processes": [
                {"pid": p.pid, "arrival": p.arrival, "burst": p.burst}
                for p in w.processes
            ],
        }
        return json.dumps(doc, indent=2) + "\n"
    raise ValueError(f"unknown workload format: {format!r}")


def _splitmix64(seed: int):
    """SplitMix64 stream; fixed algorithm so generated workloads are
    reproducible from the seed alone, independent of the Python runtime."""
    state = seed & _MASK64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        yield z ^ (z >> 31)


def generate_workload(spec: GeneratorSpec) -> Workload:
    """Generate `count` processes with uniform arrivals and bursts.

    Draws come from a SplitMix64 stream mapped into each range by modulo
    (arrival then burst, one pair per process); pids P1..Pn are assigned
    in nondecreasing arrival order.  Pure function of the spec.
    """
    draws = _splitmix64(spec.seed)
    arrival_span = spec.arrival_max - spec.arrival_min + 1
    burst_span = spec.burst_max - spec.burst_min + 1
    pairs = []
    for _ in range(spec.count):
        arrival = spec.arrival_min + next(draws) % arrival_span
        burst = spec.burst_min + next(draws) % burst_span
        pairs.append((arrival, burst))
    pairs.sort(key=lambda pair: pair[0])
    processes = tuple(
        ProcessSpec(f"P{i}", arrival, burst)
        for i, (arrival, burst) in enumerate(pairs, start=1)
    )
    return Workload(f"generated-seed{spec.seed}", processes)


_BUILTIN_CASES = {
    1: (("P1", 0, 20), ("P2", 0, 40), ("P3", 0, 83), ("P4", 0, 90)),
    2: (("P1", 0, 17), ("P2", 0, 27), ("P3", 0, 52), ("P4", 0, 57), ("P5", 0, 59)),
    3: (("P1", 0, 10), ("P2", 6, 14), ("P3", 12, 69), ("P4", 22, 75)),
    4: (("P1", 0, 18), ("P2", 3, 20), ("P3", 6, 50), ("P4", 11, 60), ("P5", 21, 68)),
}


def paper_case(case_id: int) -> Workload:
    """Return one of the four built-in benchmark workloads (1-4)."""
    if case_id not in _BUILTIN_CASES:
        raise WorkloadError(f"unknown case id: {case_id!r} (expected 1-4)")
    rows = _BUILTIN_CASES[case_id]
    return Workload(f"case-{case_id}", tuple(ProcessSpec(*row) for row in rows))
