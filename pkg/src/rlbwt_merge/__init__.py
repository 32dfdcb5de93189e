"""Adaptive merging of run-length compressed BWTs and eBWTs."""

from .combine import combine, merge_many, merge_rlbwts
from .corpus import GeneratorSpec, build_rlbwt, generate, measure_merge
from .errors import (BoundsError, ConfigurationError, CorrectnessError, FormatError,
                     RankError, RlbwtError, StreamCorruptionError, StructureError)
from .extract import ContextCursor, SortedStrings, open_context
from .merge import InterleaveRun, MergeStats, compare_rows, doubling_search, merge_interleave
from .oracle import boundary_report, build_ebwt, interleave_oracle
from .rlbwt import Rlbwt, Run, read_rlbwt, write_rlbwt
from .text import Rotation, TextCollection, compare_contexts, context_symbol, parse_text

__all__ = [
    "BoundsError", "ConfigurationError", "ContextCursor", "CorrectnessError", "FormatError",
    "GeneratorSpec", "InterleaveRun", "MergeStats", "RankError", "Rlbwt", "RlbwtError",
    "Rotation", "Run", "SortedStrings", "StreamCorruptionError", "StructureError",
    "TextCollection", "boundary_report", "build_ebwt", "build_rlbwt", "combine",
    "compare_contexts", "compare_rows", "context_symbol", "doubling_search", "generate",
    "interleave_oracle", "measure_merge", "merge_interleave", "merge_many", "merge_rlbwts",
    "open_context", "parse_text", "read_rlbwt", "write_rlbwt",
]
