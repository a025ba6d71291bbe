"""Brute-force trace followers, independent of smdrr.engine.

These re-derive schedules straight from the policy rules with no shared
code; acceptance tests compare engine traces against them segment for
segment.  Processes are plain (pid, arrival, burst) triples in
submission order; segments come back as (pid_or_None, start, end).
"""

import math
from fractions import Fraction


def smdrr_trace(procs):
    """Dynamic-quantum round robin: each cycle runs every ready process
    once for the ceiling of the harmonic mean of remaining bursts.
    Returns (segments, cycles) where cycles is [(remaining-tuple, quantum)].
    """
    arr = {p: a for p, a, _ in procs}
    rem = {p: b for p, _, b in procs}
    pos = {p: i for i, (p, _, _) in enumerate(procs)}
    t = min(arr.values())
    segs, cycles = [], []
    while rem:
        ready = sorted((p for p in rem if arr[p] <= t),
                       key=lambda p: (rem[p], arr[p], pos[p]))
        if not ready:
            nxt = min(arr[p] for p in rem)
            segs.append((None, t, nxt))
            t = nxt
            continue
        q = math.ceil(Fraction(len(ready)) / sum(Fraction(1, rem[p]) for p in ready))
        cycles.append((tuple(rem[p] for p in ready), q))
        for p in ready:
            run = min(q, rem[p])
            segs.append((p, t, t + run))
            t += run
            rem[p] -= run
            if rem[p] == 0:
                del rem[p]
    return segs, cycles


def rr_trace(procs, quantum):
    """Fixed-quantum round robin: FIFO queue, arrivals during a slice
    enter the queue ahead of the preempted process."""
    arr = {p: a for p, a, _ in procs}
    rem = {p: b for p, _, b in procs}
    pos = {p: i for i, (p, _, _) in enumerate(procs)}
    waiting = sorted(rem, key=lambda p: (arr[p], pos[p]))
    t = min(arr.values())
    queue, segs = [], []
    while waiting or queue:
        while waiting and arr[waiting[0]] <= t:
            queue.append(waiting.pop(0))
        if not queue:
            nxt = arr[waiting[0]]
            segs.append((None, t, nxt))
            t = nxt
            continue
        p = queue.pop(0)
        run = min(quantum, rem[p])
        segs.append((p, t, t + run))
        t += run
        rem[p] -= run
        while waiting and arr[waiting[0]] <= t:
            queue.append(waiting.pop(0))
        if rem[p] > 0:
            queue.append(p)
    return segs
