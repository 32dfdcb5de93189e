"""Run-length compressed BWT with O(R)-entry directories.

Supports ``access``, per-symbol ``select``, F-column lookup and the forward
``psi`` step, each by binary search over run-indexed prefix sums.
"""

from __future__ import annotations

import re
from bisect import bisect_left, bisect_right
from itertools import groupby
from typing import Iterable, NamedTuple, Sequence

from .errors import BoundsError, ConfigurationError, FormatError, RankError, StructureError
from .extract import ContextCursor
from .text import TERMINATOR


class Run(NamedTuple):
    symbol: int
    length: int


class Rlbwt:
    """Immutable run-length BWT.

    ``alphabet`` may list symbols that never occur; they get empty F-column
    intervals.  Two RLBWTs that are to be merged must share an alphabet so
    that their F columns agree on symbol order.
    """

    __slots__ = ("runs", "run_starts", "alphabet", "c_array", "_dir_runs", "_dir_before", "_rank_of")

    def __init__(self, runs: Iterable[Run | tuple[int, int]], alphabet: Iterable[int] | None = None):
        merged: list[Run] = []
        for sym, length in runs:
            if length < 1:
                raise StructureError(f"run of {sym!r} has length {length}")
            if merged and merged[-1].symbol == sym:
                merged[-1] = Run(sym, merged[-1].length + length)
            else:
                merged.append(Run(sym, length))
        if not merged:
            raise StructureError("an RLBWT needs at least one run")

        present = {r.symbol for r in merged}
        if alphabet is None:
            alpha = sorted(present)
        else:
            alpha = sorted(set(alphabet))
            if not present <= set(alpha):
                raise ConfigurationError("alphabet does not cover every run symbol")

        starts = [0]
        dir_runs: dict[int, list[int]] = {c: [] for c in alpha}
        dir_before: dict[int, list[int]] = {c: [] for c in alpha}
        counts = dict.fromkeys(alpha, 0)
        for k, (sym, length) in enumerate(merged):
            dir_runs[sym].append(k)
            dir_before[sym].append(counts[sym])
            counts[sym] += length
            starts.append(starts[-1] + length)

        c_array = [0]
        for c in alpha:
            c_array.append(c_array[-1] + counts[c])

        self.runs = tuple(merged)
        self.run_starts = starts  # R + 1 entries, last is total_length
        self.alphabet = tuple(alpha)
        self.c_array = c_array  # sigma + 1 entries, c_array[k] = #symbols < alphabet[k]
        self._dir_runs = dir_runs
        self._dir_before = dir_before
        self._rank_of = {c: k for k, c in enumerate(alpha)}

    @classmethod
    def from_runs(cls, runs, alphabet=None) -> "Rlbwt":
        return cls(runs, alphabet)

    @classmethod
    def from_symbols(cls, symbols: Iterable[int], alphabet=None) -> "Rlbwt":
        return cls(((c, len(list(g))) for c, g in groupby(symbols)), alphabet)

    def with_alphabet(self, alphabet: Iterable[int]) -> "Rlbwt":
        return Rlbwt(self.runs, alphabet)

    @property
    def total_length(self) -> int:
        return self.run_starts[-1]

    def __len__(self) -> int:
        return self.run_starts[-1]

    @property
    def n_runs(self) -> int:
        return len(self.runs)

    @property
    def sigma(self) -> int:
        return len(self.alphabet)

    def __eq__(self, other):
        if not isinstance(other, Rlbwt):
            return NotImplemented
        return self.runs == other.runs and self.alphabet == other.alphabet

    def __repr__(self):
        return f"Rlbwt(runs={self.n_runs}, length={self.total_length}, sigma={self.sigma})"

    def directory_entries(self) -> int:
        """Stored entries: runs, run starts, per-symbol (run, count) pairs, C array."""
        per_symbol = sum(len(v) for v in self._dir_runs.values())
        return len(self.runs) + len(self.run_starts) + per_symbol + len(self.c_array)

    def count(self, c: int) -> int:
        k = self._rank_of.get(c)
        if k is None:
            return 0
        return self.c_array[k + 1] - self.c_array[k]

    def decompress(self) -> list[int]:
        out = []
        for sym, length in self.runs:
            out.extend([sym] * length)
        return out

    def _check(self, i: int):
        if not 0 <= i < self.run_starts[-1]:
            raise BoundsError(f"position {i} outside [0, {self.run_starts[-1]})")

    def run_index(self, i: int) -> int:
        """Index of the run containing position ``i``."""
        self._check(i)
        return bisect_right(self.run_starts, i) - 1

    def access(self, i: int) -> int:
        return self.runs[self.run_index(i)].symbol

    def select(self, c: int, k: int) -> int:
        """Position of the ``k``-th (1-based) occurrence of ``c``."""
        before = self._dir_before.get(c)
        if not before or not 1 <= k <= self.count(c):
            raise RankError(f"no occurrence {k} of symbol {c!r}")
        j = bisect_left(before, k) - 1
        return self.run_starts[self._dir_runs[c][j]] + (k - before[j]) - 1

    def f_symbol(self, i: int) -> int:
        self._check(i)
        return self.alphabet[bisect_right(self.c_array, i) - 1]

    def psi(self, i: int) -> int:
        """Row whose context is row ``i``'s context advanced by one symbol."""
        self._check(i)
        k = bisect_right(self.c_array, i) - 1
        return self.select(self.alphabet[k], i - self.c_array[k] + 1)

    def cursor(self, row: int) -> ContextCursor:
        return ContextCursor(self, row)


def union_alphabet(*bwts: Rlbwt) -> tuple[int, ...]:
    return tuple(sorted(set().union(*(b.alphabet for b in bwts))))


def align_alphabets(*bwts: Rlbwt) -> list[Rlbwt]:
    """Re-index each RLBWT over the union alphabet of all of them."""
    alpha = union_alphabet(*bwts)
    return [b if b.alphabet == alpha else b.with_alphabet(alpha) for b in bwts]


# ---------------------------------------------------------------------------
# text file format

MAGIC = "RLBWT 1"
_HEADER = re.compile(r"runs (\d+) length (\d+)")


def encode_symbol(c: int) -> str:
    if c == TERMINATOR:
        return "$"
    if 0x21 <= c <= 0x7E and c not in (0x24, 0x5C):
        return chr(c)
    return f"\\x{c:02x}"


def decode_symbol(tok: str) -> int:
    if tok == "$":
        return TERMINATOR
    if len(tok) == 1 and 0x21 <= ord(tok) <= 0x7E and tok != "\\":
        return ord(tok)
    if len(tok) == 4 and tok.startswith("\\x"):
        try:
            c = int(tok[2:], 16)
        except ValueError:
            pass
        else:
            if c not in (TERMINATOR, 0x24):
                return c
    raise FormatError(f"bad symbol token {tok!r}")


def dumps(bwt: Rlbwt) -> str:
    lines = [MAGIC, f"runs {bwt.n_runs} length {bwt.total_length}"]
    lines.extend(f"{encode_symbol(s)} {n}" for s, n in bwt.runs)
    return "\n".join(lines) + "\n"


def loads(data: str) -> Rlbwt:
    lines = data.splitlines()
    if not lines or lines[0] != MAGIC:
        raise FormatError("missing 'RLBWT 1' header")
    m = _HEADER.fullmatch(lines[1]) if len(lines) > 1 else None
    if m is None:
        raise FormatError("malformed 'runs <R> length <n>' line")
    n_runs, total = int(m.group(1)), int(m.group(2))
    body = lines[2:]
    if len(body) != n_runs:
        raise FormatError(f"header declares {n_runs} runs, found {len(body)}")
    runs = []
    for lineno, line in enumerate(body, 3):
        parts = line.split(" ")
        if len(parts) != 2 or not parts[1].isdigit() or int(parts[1]) < 1:
            raise FormatError(f"line {lineno}: expected '<symbol> <length>'")
        runs.append(Run(decode_symbol(parts[0]), int(parts[1])))
    bwt = Rlbwt(runs)
    if bwt.total_length != total:
        raise FormatError(f"header declares length {total}, runs sum to {bwt.total_length}")
    if bwt.n_runs != n_runs:
        raise FormatError("runs are not maximal")
    return bwt


def read_rlbwt(path) -> Rlbwt:
    with open(path, encoding="ascii") as fh:
        return loads(fh.read())


def write_rlbwt(bwt: Rlbwt, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(dumps(bwt))


def runs_of(symbols: Sequence[int]) -> list[Run]:
    return [Run(c, len(list(g))) for c, g in groupby(symbols)]
