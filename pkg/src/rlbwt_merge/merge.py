"""Adaptive merge of two sorted context sets by alternating doubling searches.

The output is the interleave string (which input each row of the combined
order comes from) streamed as run-length compressed ``InterleaveRun``s.
Ties between equal contexts always put the set-1 row first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple

from .errors import ConfigurationError
from .rlbwt import Rlbwt

LOWER = "lower"
UPPER = "upper"


class InterleaveRun(NamedTuple):
    label: int
    count: int


@dataclass
class MergeStats:
    n: int = 0
    sigma: int = 0
    chars_extracted: int = 0
    comparisons: int = 0
    blocks_emitted: int = 0
    searches: int = 0


def flip(s: int) -> int:
    return 3 - s


def compare_rows(a, i: int, b, j: int, stats: MergeStats | None = None) -> int:
    """Order of row ``i`` of ``a`` against row ``j`` of ``b`` (-1, 0 or 1).

    Symbols are pulled in lockstep until they differ.  Contexts that agree on
    ``period_a + period_b`` symbols are equal; the sum of total lengths bounds
    the pulls even before both periods are known.
    """
    ca, cb = a.cursor(i), b.cursor(j)
    hard_cap = a.total_length + b.total_length
    order = 0
    k = 0
    while k < hard_cap:
        x, y = next(ca), next(cb)
        k += 1
        if x != y:
            order = -1 if x < y else 1
            break
        if ca.period is not None and cb.period is not None and k >= ca.period + cb.period:
            break
    if stats is not None:
        stats.comparisons += 1
        stats.chars_extracted += 2 * k
    return order


def doubling_search(target, start: int, probe, probe_row: int, mode: str = LOWER,
                    stats: MergeStats | None = None, trace: list | None = None) -> int:
    """Insertion row for ``probe[probe_row]`` in ``target``, searching from ``start``.

    Returns the smallest ``r >= start`` with ``target[r] >= x`` (``mode="lower"``)
    or ``target[r] > x`` (``mode="upper"``), or ``len(target)`` if there is
    none.  Probes ``start + 2**k - 1`` for ``k = 0, 1, ...`` and then bisects
    the last bracket, so a result ``d`` rows past ``start`` costs
    ``O(log d)`` comparisons.
    """
    if mode not in (LOWER, UPPER):
        raise ValueError(f"mode must be 'lower' or 'upper', not {mode!r}")
    threshold = 0 if mode == LOWER else 1
    n = len(target)

    def past(r):
        if trace is not None:
            trace.append(r)
        return compare_rows(target, r, probe, probe_row, stats) >= threshold

    lo = start
    hi = n
    step = 1
    pos = start
    while pos < n:
        if past(pos):
            hi = pos
            break
        lo = pos + 1
        pos = start + 2 * step - 1
        step *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if past(mid):
            hi = mid
        else:
            lo = mid + 1
    if stats is not None:
        stats.searches += 1
    return lo


def _check_alphabets(src1, src2) -> int:
    a1, a2 = tuple(src1.alphabet), tuple(src2.alphabet)
    if isinstance(src1, Rlbwt) and isinstance(src2, Rlbwt) and a1 != a2:
        raise ConfigurationError("inputs must be built over the same (union) alphabet")
    return len(set(a1) | set(a2))


def merge_interleave(src1, src2, sink: Callable[[InterleaveRun], object]) -> MergeStats:
    """Stream the interleave of two sorted context sets into ``sink``.

    The frontier row ``p[s]`` of the active set is searched for in the other
    set, starting just past that set's frontier; the rows skipped over form
    the next output run.  A row is therefore emitted by the search of the
    other side that passes it, and each search after the first may start one
    row beyond the frontier, since that row is already known to precede the
    row being searched for.
    """
    n1, n2 = len(src1), len(src2)
    if n1 == 0 or n2 == 0:
        raise ConfigurationError("both inputs must be non-empty")
    stats = MergeStats(n=n1 + n2, sigma=_check_alphabets(src1, src2))
    srcs = {1: src1, 2: src2}
    size = {1: n1, 2: n2}
    p = {1: 0, 2: 0}

    def emit(label, count):
        if count > 0:
            stats.blocks_emitted += 1
            sink(InterleaveRun(label, count))

    s = 1
    first = True
    while True:
        t = flip(s)
        start = p[t] if first else p[t] + 1
        mode = LOWER if s == 1 else UPPER
        j = doubling_search(srcs[t], start, srcs[s], p[s], mode, stats)
        emit(t, j - p[t])
        p[t] = j
        if j == size[t]:
            emit(s, size[s] - p[s])
            break
        s = t
        first = False
    return stats


def merge_runs(src1, src2) -> tuple[list[InterleaveRun], MergeStats]:
    """Collect the interleave runs in a list (convenient for small inputs)."""
    out: list[InterleaveRun] = []
    stats = merge_interleave(src1, src2, out.append)
    return out, stats


def expand(runs) -> list[int]:
    labels = []
    for label, count in runs:
        labels.extend([label] * count)
    return labels
