"""Interleave two RLBWTs into their combined RLBWT, block by block.

Work per block is proportional to the number of input runs it touches, and
the interleave stream is consumed as it is produced (``Combiner`` is a merge
sink), so the full interleave string is never stored.
"""

from __future__ import annotations

from typing import Iterable

from .errors import StreamCorruptionError
from .merge import InterleaveRun, MergeStats, merge_interleave
from .rlbwt import Rlbwt, Run, align_alphabets


class RunCursor:
    """Read position inside an RLBWT's run list."""

    __slots__ = ("bwt", "run_index", "offset_in_run", "consumed")

    def __init__(self, bwt: Rlbwt):
        self.bwt = bwt
        self.run_index = 0
        self.offset_in_run = 0
        self.consumed = 0

    @property
    def remaining(self) -> int:
        return self.bwt.total_length - self.consumed

    @property
    def exhausted(self) -> bool:
        return self.consumed == self.bwt.total_length


class RunBuilder:
    """Accumulates output runs, keeping them maximal."""

    __slots__ = ("runs", "runs_touched")

    def __init__(self):
        self.runs: list[Run] = []
        self.runs_touched = 0

    @property
    def last_symbol(self):
        return self.runs[-1].symbol if self.runs else None

    def append(self, symbol: int, length: int):
        if self.runs and self.runs[-1].symbol == symbol:
            self.runs[-1] = Run(symbol, self.runs[-1].length + length)
        else:
            self.runs.append(Run(symbol, length))

    def finish(self, alphabet=None) -> Rlbwt:
        return Rlbwt(self.runs, alphabet)


def take_block(cursor: RunCursor, count: int, builder: RunBuilder) -> None:
    """Copy the next ``count`` symbols under ``cursor`` into ``builder``."""
    if count < 1 or count > cursor.remaining:
        raise StreamCorruptionError(
            f"block of {count} symbols but only {cursor.remaining} remain")
    runs = cursor.bwt.runs
    need = count
    while need:
        sym, length = runs[cursor.run_index]
        avail = length - cursor.offset_in_run
        take = min(avail, need)
        builder.append(sym, take)
        builder.runs_touched += 1
        need -= take
        cursor.consumed += take
        if take == avail:
            cursor.run_index += 1
            cursor.offset_in_run = 0
        else:
            cursor.offset_in_run += take


class Combiner:
    """Merge sink that builds the combined RLBWT while the merge runs."""

    def __init__(self, bwt1: Rlbwt, bwt2: Rlbwt):
        self.cursors = {1: RunCursor(bwt1), 2: RunCursor(bwt2)}
        self.builder = RunBuilder()
        self.alphabet = tuple(sorted(set(bwt1.alphabet) | set(bwt2.alphabet)))

    def __call__(self, run: InterleaveRun) -> None:
        cur = self.cursors.get(run.label)
        if cur is None:
            raise StreamCorruptionError(f"unknown label {run.label!r}")
        take_block(cur, run.count, self.builder)

    def result(self) -> Rlbwt:
        for label, cur in self.cursors.items():
            if not cur.exhausted:
                raise StreamCorruptionError(
                    f"stream ended with {cur.remaining} symbols of input {label} unused")
        return self.builder.finish(self.alphabet)


def combine(bwt1: Rlbwt, bwt2: Rlbwt, interleave: Iterable[InterleaveRun]) -> Rlbwt:
    """Apply an interleave run stream to two RLBWTs."""
    sink = Combiner(bwt1, bwt2)
    for run in interleave:
        sink(InterleaveRun(*run))
    return sink.result()


def merge_rlbwts(bwt1: Rlbwt, bwt2: Rlbwt) -> tuple[Rlbwt, MergeStats, int]:
    """Merge two RLBWTs in a single pass.

    Returns the combined RLBWT, the merge statistics and the number of input
    runs touched while copying blocks.
    """
    bwt1, bwt2 = align_alphabets(bwt1, bwt2)
    sink = Combiner(bwt1, bwt2)
    stats = merge_interleave(bwt1, bwt2, sink)
    return sink.result(), stats, sink.builder.runs_touched


def merge_many(bwts: Iterable[Rlbwt]) -> Rlbwt:
    """Left fold of pairwise merges: ``((b1 + b2) + b3) + ...``."""
    it = iter(bwts)
    try:
        acc = next(it)
    except StopIteration:
        raise ValueError("need at least one RLBWT") from None
    for b in it:
        acc, _, _ = merge_rlbwts(acc, b)
    return acc
