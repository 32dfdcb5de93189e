"""Lazy forward extraction of contexts, one symbol per pull.

A cursor never runs out: contexts are circular, so the caller decides when
to stop.  Cursors notice when they return to their starting row and record
the period (the length of the underlying string), which lets comparisons
stop at the same cap the brute-force oracle uses.
"""

from __future__ import annotations

from typing import Protocol, Sequence

from .errors import BoundsError
from .text import terminate


class ContextSource(Protocol):
    """Anything the adaptive merge can search: a sorted set of contexts."""

    def __len__(self) -> int: ...

    @property
    def total_length(self) -> int: ...

    def cursor(self, row: int): ...


class ContextCursor:
    """Pulls the context of one eBWT row through ``f_symbol`` and ``psi``."""

    __slots__ = ("bwt", "start_row", "current_row", "emitted", "period")

    def __init__(self, bwt, row: int):
        if not 0 <= row < bwt.total_length:
            raise BoundsError(f"row {row} outside [0, {bwt.total_length})")
        self.bwt = bwt
        self.start_row = row
        self.current_row = row
        self.emitted = 0
        self.period: int | None = None

    def __iter__(self):
        return self

    def __next__(self) -> int:
        bwt = self.bwt
        c = bwt.f_symbol(self.current_row)
        self.current_row = bwt.psi(self.current_row)
        self.emitted += 1
        if self.period is None and self.current_row == self.start_row:
            self.period = self.emitted
        return c

    next_symbol = __next__

    def extraction_count(self) -> int:
        return self.emitted


def open_context(source, row: int):
    return source.cursor(row)


def next_symbol(cursor) -> int:
    return next(cursor)


def extraction_count(cursor) -> int:
    return cursor.emitted


class StringCursor:
    """Cursor over a single terminated string, read circularly from its start."""

    __slots__ = ("text", "pos", "emitted", "period")

    def __init__(self, text: bytes):
        self.text = text
        self.pos = 0
        self.emitted = 0
        self.period = len(text)

    def __iter__(self):
        return self

    def __next__(self) -> int:
        c = self.text[self.pos]
        self.pos = (self.pos + 1) % len(self.text)
        self.emitted += 1
        return c

    next_symbol = __next__

    def extraction_count(self) -> int:
        return self.emitted


class SortedStrings:
    """A plain sorted set of words, searchable by the adaptive merge.

    Each word is terminated so that a word sorts before its extensions, the
    same convention the eBWT contexts follow.
    """

    def __init__(self, words: Sequence[str | bytes]):
        texts = [terminate(w) for w in words]
        if texts != sorted(texts):
            raise ValueError("words must be given in sorted order")
        self.texts = texts
        self.total_length = sum(len(t) for t in texts)
        self.alphabet = tuple(sorted(set().union(*texts)))

    def __len__(self) -> int:
        return len(self.texts)

    def cursor(self, row: int) -> StringCursor:
        if not 0 <= row < len(self.texts):
            raise BoundsError(f"row {row} outside [0, {len(self.texts)})")
        return StringCursor(self.texts[row])
