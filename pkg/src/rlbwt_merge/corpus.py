"""Synthetic collections and end-to-end measurements of merge cost.

The generator kinds are stand-ins for "repetitive but dissimilar" inputs:
mutated copies of one random base, reverse complements, independent random
strings, and repetitions of a short period.  Measurements report L next to
R and n so the relationship can be inspected; nothing here asserts a trend.
"""

from __future__ import annotations

import csv
import io
import random
from dataclasses import asdict, dataclass

from .combine import merge_rlbwts
from .errors import ConfigurationError, CorrectnessError
from .extract import SortedStrings
from .merge import expand, merge_runs
from .oracle import boundary_report, build_ebwt, build_sorted_strings, effective_sigma
from .rlbwt import Rlbwt, runs_of
from .text import TextCollection

KINDS = ("mutated-copies", "reverse-complement", "random", "concatenated-period")

_COMPLEMENT = {"A": "T", "T": "A", "C": "G", "G": "C"}


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str = "mutated-copies"
    base_length: int = 32
    copies: int = 4
    mutation_rate: float = 0.05
    alphabet: str = "ACGT"
    seed: int = 0


def reverse_complement(s: str) -> str:
    try:
        return "".join(_COMPLEMENT[c] for c in reversed(s))
    except KeyError as exc:
        raise ConfigurationError(f"cannot complement symbol {exc.args[0]!r}") from None


def reverse_complement_collection(coll: TextCollection, set_label: int | None = None) -> TextCollection:
    label = coll.set_label if set_label is None else set_label
    return TextCollection.from_strings([reverse_complement(s) for s in coll.plain_strings()], label)


def _mutate(s: str, rate: float, alphabet: str, rng: random.Random) -> str:
    out = []
    for c in s:
        if rng.random() < rate:
            c = rng.choice(alphabet)
        out.append(c)
    return "".join(out)


def generate(spec: GeneratorSpec, set_label: int = 1) -> TextCollection:
    """Deterministic collection for ``spec``."""
    if spec.kind not in KINDS:
        raise ConfigurationError(f"unknown generator kind {spec.kind!r}")
    if spec.base_length < 1 or spec.copies < 1:
        raise ConfigurationError("base_length and copies must be positive")
    if not 0.0 <= spec.mutation_rate <= 1.0:
        raise ConfigurationError("mutation_rate must lie in [0, 1]")
    if not spec.alphabet or "$" in spec.alphabet:
        raise ConfigurationError("alphabet must be non-empty and may not contain '$'")
    if spec.kind == "reverse-complement" and not set(spec.alphabet) <= set(_COMPLEMENT):
        raise ConfigurationError("reverse-complement needs an alphabet within ACGT")

    rng = random.Random(spec.seed)
    alpha = spec.alphabet

    def rand_str(n):
        return "".join(rng.choice(alpha) for _ in range(n))

    if spec.kind == "random":
        strings = [rand_str(spec.base_length) for _ in range(spec.copies)]
    elif spec.kind == "concatenated-period":
        period = rand_str(max(1, spec.base_length // spec.copies))
        strings = [_mutate(period * (i + 1), spec.mutation_rate, alpha, rng)
                   for i in range(spec.copies)]
    else:
        base = rand_str(spec.base_length)
        strings = [base] + [_mutate(base, spec.mutation_rate, alpha, rng)
                            for _ in range(spec.copies - 1)]
        if spec.kind == "reverse-complement":
            strings = [reverse_complement(s) for s in strings]
    return TextCollection.from_strings(strings, set_label)


def build_rlbwt(coll: TextCollection, alphabet=None) -> Rlbwt:
    """RLBWT of a collection's eBWT, via the brute-force sorter (desk scale)."""
    return Rlbwt.from_runs(runs_of(build_ebwt(coll).symbols), alphabet)


@dataclass
class MeasurementRow:
    kind: str
    n: int
    sigma: int
    r1: int
    r2: int
    r_out: int
    L: int
    blocks: int
    chars_extracted: int
    comparisons: int
    sigma_effective: int = 0
    runs_touched: int = 0


CSV_FIELDS = ["kind", "n", "sigma", "r1", "r2", "r_out", "L", "blocks", "chars_extracted", "comparisons"]


def _measure_words(a: TextCollection, b: TextCollection, kind: str) -> MeasurementRow:
    s1 = SortedStrings(sorted(a.plain_strings()))
    s2 = SortedStrings(sorted(b.plain_strings()))
    runs, stats = merge_runs(s1, s2)
    table = build_sorted_strings(a, b)
    if expand(runs) != table.labels:
        raise CorrectnessError("interleave differs from the oracle")
    report = boundary_report(table)
    return MeasurementRow(
        kind=kind, n=stats.n, sigma=stats.sigma, r1=0, r2=0, r_out=0, L=report.L,
        blocks=report.block_count, chars_extracted=stats.chars_extracted,
        comparisons=stats.comparisons, sigma_effective=effective_sigma(table),
    )


def measure_merge(a: TextCollection, b: TextCollection, kind: str = "custom",
                  whole_strings: bool = False) -> MeasurementRow:
    """Run the fast merge and the oracle on ``a`` and ``b`` and report both.

    Raises ``CorrectnessError`` when the combined RLBWT or the block count of
    the fast path differs from the oracle.  With ``whole_strings`` the inputs
    are merged as sorted word sets (one row per string, no RLBWT), and the
    run counts are reported as 0.
    """
    a, b = a.with_label(1), b.with_label(2)
    if whole_strings:
        return _measure_words(a, b, kind)
    bwt1, bwt2 = build_rlbwt(a), build_rlbwt(b)
    out, stats, touched = merge_rlbwts(bwt1, bwt2)

    table = build_ebwt(a, b)
    report = boundary_report(table)
    expected = Rlbwt.from_runs(runs_of(table.symbols), out.alphabet)
    if out != expected:
        raise CorrectnessError("combined RLBWT differs from the oracle eBWT")
    if stats.blocks_emitted != report.block_count:
        raise CorrectnessError(
            f"merge emitted {stats.blocks_emitted} blocks, oracle has {report.block_count}")
    return MeasurementRow(
        kind=kind, n=stats.n, sigma=stats.sigma, r1=bwt1.n_runs, r2=bwt2.n_runs,
        r_out=out.n_runs, L=report.L, blocks=report.block_count,
        chars_extracted=stats.chars_extracted, comparisons=stats.comparisons,
        sigma_effective=effective_sigma(table), runs_touched=touched,
    )


def measure_spec(spec: GeneratorSpec) -> MeasurementRow:
    """Measure a pair of collections built from ``spec``.

    Set 1 uses ``spec.seed`` and set 2 ``spec.seed + 1``, so for the
    mutated-copies kind the two sets are repetitive internally but built on
    unrelated bases.  For reverse-complement, set 2 is the reverse complement
    of the mutated-copies collection used as set 1.
    """
    if spec.kind == "reverse-complement":
        a = generate(GeneratorSpec(**{**asdict(spec), "kind": "mutated-copies"}))
        b = reverse_complement_collection(a, 2)
    else:
        a = generate(spec, 1)
        b = generate(GeneratorSpec(**{**asdict(spec), "seed": spec.seed + 1}), 2)
    return measure_merge(a, b, spec.kind)


def rows_to_csv(rows, extra: bool = False) -> str:
    names = CSV_FIELDS + (["sigma_effective", "runs_touched"] if extra else [])
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(names)
    for row in rows:
        d = asdict(row)
        w.writerow([d[k] for k in names])
    return buf.getvalue()

