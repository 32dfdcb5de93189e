"""Brute-force eBWT construction and block/LCP statistics.

Everything here is quadratic or worse and meant for desk-scale inputs
(a few thousand symbols).  It is the ground truth the fast path is checked
against, so it deliberately shares nothing with it beyond ``text``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cmp_to_key
from itertools import groupby
from typing import NamedTuple

from .text import Rotation, TextCollection, compare_contexts, symbols_str


class EbwtRow(NamedTuple):
    symbol: int
    rotation: Rotation
    label: int
    text: bytes

    def context(self, length: int | None = None) -> bytes:
        """The first ``length`` symbols of this row's circular context."""
        t, off = self.text, self.rotation.offset
        if length is None:
            length = len(t)
        return bytes(t[(off + k) % len(t)] for k in range(length))


@dataclass
class EbwtTable:
    rows: list[EbwtRow]

    def __len__(self):
        return len(self.rows)

    @property
    def symbols(self) -> list[int]:
        return [r.symbol for r in self.rows]

    @property
    def labels(self) -> list[int]:
        return [r.label for r in self.rows]

    def bwt_str(self) -> str:
        return symbols_str(self.symbols)

    def runs(self) -> list[tuple[int, int]]:
        """Run-length encoding of the BWT column as ``(symbol, length)`` pairs."""
        return [(c, len(list(g))) for c, g in groupby(self.symbols)]


@dataclass
class BoundaryReport:
    blocks: list[tuple[int, int, int]]  # (label, start row, length)
    boundary_lcps: list[int] = field(default_factory=list)

    @property
    def L(self) -> int:
        return sum(self.boundary_lcps)

    @property
    def block_count(self) -> int:
        return len(self.blocks)


def _row_cmp(x: EbwtRow, y: EbwtRow) -> int:
    order, _ = compare_contexts(x.text, x.rotation.offset, y.text, y.rotation.offset)
    if order:
        return order
    kx = (x.label, x.rotation.string_index, x.rotation.offset)
    ky = (y.label, y.rotation.string_index, y.rotation.offset)
    return (kx > ky) - (kx < ky)


def build_ebwt(*collections: TextCollection) -> EbwtTable:
    """Sort every rotation of every collection; ties go by (label, string, offset)."""
    if not collections:
        raise ValueError("need at least one collection")
    rows = []
    for coll in collections:
        for rot in coll.rotations():
            t = coll.string(rot)
            rows.append(EbwtRow(t[rot.offset - 1], rot, coll.set_label, t))
    rows.sort(key=cmp_to_key(_row_cmp))
    return EbwtTable(rows)


def build_sorted_strings(*collections: TextCollection) -> EbwtTable:
    """Like ``build_ebwt`` but with one row per whole string (offset 0 only).

    This is the plain "merge two sorted sets of words" setting; the row symbol
    is the terminator.
    """
    if not collections:
        raise ValueError("need at least one collection")
    rows = [EbwtRow(t[-1], Rotation(i, 0), coll.set_label, t)
            for coll in collections for i, t in enumerate(coll.strings)]
    rows.sort(key=cmp_to_key(_row_cmp))
    return EbwtTable(rows)


def boundary_report(table: EbwtTable, by: str = "label") -> BoundaryReport:
    """Blocks of equal source and the LCPs across each block boundary.

    ``by="label"`` groups rows by input set (the merge setting); ``by="string"``
    groups them by string index, which is how the single-collection eBWT
    figure is annotated.
    """
    if not table.rows:
        raise ValueError("empty table")
    if by == "label":
        key = lambda r: r.label
    elif by == "string":
        key = lambda r: (r.label, r.rotation.string_index)
    else:
        raise ValueError(f"unknown grouping {by!r}")

    blocks = []
    start = 0
    for k, g in groupby(table.rows, key=key):
        length = len(list(g))
        label = k if by == "label" else k[1]
        blocks.append((label, start, length))
        start += length

    lcps = []
    for (_, s0, n0), (_, s1, _) in zip(blocks, blocks[1:]):
        x, y = table.rows[s0 + n0 - 1], table.rows[s1]
        _, lcp = compare_contexts(x.text, x.rotation.offset, y.text, y.rotation.offset)
        lcps.append(lcp)
    return BoundaryReport(blocks, lcps)


def interleave_oracle(a: TextCollection, b: TextCollection) -> list[int]:
    """Label column (1 or 2) of the combined eBWT of ``a`` and ``b``."""
    table = build_ebwt(a.with_label(1), b.with_label(2))
    return table.labels


def effective_sigma(table: EbwtTable) -> int:
    """Number of distinct first symbols among the table's contexts."""
    return len({r.text[r.rotation.offset] for r in table.rows})
