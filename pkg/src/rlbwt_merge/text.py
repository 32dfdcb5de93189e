"""Symbols, terminated strings, text collections and circular context order.

Internally every string is a ``bytes`` object whose last byte is the
terminator, code ``0``.  Externally the terminator is written ``$`` (0x24).
Because code 0 is the smallest byte value, ordinary ``bytes`` comparison
already places the terminator below every other symbol.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .errors import FormatError, StructureError

TERMINATOR = 0
EXTERNAL_TERMINATOR = "$"


def symbol_str(code: int) -> str:
    """Printable form of a symbol code (``$`` for the terminator)."""
    return EXTERNAL_TERMINATOR if code == TERMINATOR else chr(code)


def symbols_str(codes: Iterable[int]) -> str:
    return "".join(symbol_str(c) for c in codes)


def terminate(s: str | bytes) -> bytes:
    """Encode ``s`` as a terminated string.

    ``$`` and NUL are reserved and rejected; non-ASCII characters must fit in
    a single byte (latin-1).
    """
    if isinstance(s, str):
        try:
            raw = s.encode("latin-1")
        except UnicodeEncodeError as exc:
            raise FormatError(f"multi-byte symbol in {s!r}") from exc
    else:
        raw = bytes(s)
    if b"$" in raw or b"\x00" in raw:
        raise FormatError(f"reserved symbol ($ or NUL) in {s!r}")
    return raw + b"\x00"


class Rotation(NamedTuple):
    string_index: int
    offset: int


@dataclass(frozen=True)
class TextCollection:
    """An ordered, non-empty list of terminated strings tagged with a set label."""

    strings: tuple[bytes, ...]
    set_label: int = 1

    def __post_init__(self):
        if not self.strings:
            raise StructureError("a text collection needs at least one string")
        for s in self.strings:
            if not s or s[-1] != TERMINATOR or TERMINATOR in s[:-1]:
                raise StructureError(f"string {s!r} must end with exactly one terminator")

    @classmethod
    def from_strings(cls, strings: Iterable[str | bytes], set_label: int = 1) -> "TextCollection":
        """Build a collection from unterminated strings, appending ``$`` to each."""
        return cls(tuple(terminate(s) for s in strings), set_label)

    def __len__(self) -> int:
        return len(self.strings)

    @property
    def total_length(self) -> int:
        return sum(len(s) for s in self.strings)

    @property
    def alphabet(self) -> tuple[int, ...]:
        return tuple(sorted(set().union(*self.strings)))

    def rotations(self) -> Iterator[Rotation]:
        for i, s in enumerate(self.strings):
            for off in range(len(s)):
                yield Rotation(i, off)

    def string(self, rot: Rotation) -> bytes:
        return self.strings[rot.string_index]

    def with_label(self, set_label: int) -> "TextCollection":
        return TextCollection(self.strings, set_label)

    def plain_strings(self) -> list[str]:
        """The strings without terminators, decoded as latin-1."""
        return [s[:-1].decode("latin-1") for s in self.strings]


def parse_text(lines: Iterable[str], set_label: int = 1) -> TextCollection:
    """Parse the one-string-per-line text format.

    Lines starting with ``>`` are FASTA-style headers and skipped.  Trailing
    newlines are stripped; an empty line is an error since every string must
    contain at least one symbol before its terminator is appended.
    """
    strings = []
    for lineno, line in enumerate(lines, 1):
        line = line.rstrip("\r\n")
        if line.startswith(">"):
            continue
        if not line:
            raise FormatError(f"line {lineno}: empty string")
        try:
            strings.append(terminate(line))
        except FormatError as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
    if not strings:
        raise FormatError("no strings in input")
    return TextCollection(tuple(strings), set_label)


def read_text(path, set_label: int = 1) -> TextCollection:
    with open(path, encoding="latin-1") as fh:
        return parse_text(fh, set_label)


def context_symbol(text: bytes, offset: int, k: int) -> int:
    """Symbol ``k`` positions into the circular context starting at ``offset``."""
    if not 0 <= offset < len(text):
        raise StructureError(f"offset {offset} outside string of length {len(text)}")
    if k < 0:
        raise StructureError("k must be non-negative")
    return text[(offset + k) % len(text)]


def compare_contexts(a: bytes, a_offset: int, b: bytes, b_offset: int) -> tuple[int, int]:
    """Compare two circular contexts.

    Returns ``(order, lcp)`` where ``order`` is -1, 0 or 1.  At most
    ``len(a) + len(b)`` positions are compared; contexts agreeing on all of
    them are rotation-equivalent and reported equal, with ``lcp`` equal to
    that cap.
    """
    na, nb = len(a), len(b)
    cap = na + nb
    i, j = a_offset, b_offset
    for k in range(cap):
        x, y = a[i], b[j]
        if x != y:
            return (-1 if x < y else 1), k
        i += 1
        if i == na:
            i = 0
        j += 1
        if j == nb:
            j = 0
    return 0, cap
