import pytest

from rlbwt_merge.corpus import (CSV_FIELDS, GeneratorSpec, KINDS, generate, measure_merge,
                                measure_spec, reverse_complement, reverse_complement_collection,
                                rows_to_csv)
from rlbwt_merge.errors import ConfigurationError
from rlbwt_merge.oracle import boundary_report, build_ebwt
from rlbwt_merge.text import TextCollection

from conftest import GATTACA, GATTACA_RC


def test_reverse_complement_fig2():
    assert [reverse_complement(s) for s in GATTACA] == GATTACA_RC
    coll = reverse_complement_collection(TextCollection.from_strings(GATTACA), 2)
    assert coll.plain_strings() == GATTACA_RC and coll.set_label == 2


def test_reverse_complement_rejects_non_dna():
    with pytest.raises(ConfigurationError):
        reverse_complement("GATXACA")
    with pytest.raises(ConfigurationError):
        generate(GeneratorSpec(kind="reverse-complement", alphabet="ACGN"))


def test_single_unmutated_copy():
    spec = GeneratorSpec(kind="mutated-copies", base_length=12, copies=1, mutation_rate=0.0, seed=3)
    base = generate(spec).plain_strings()
    assert len(base) == 1 and len(base[0]) == 12
    more = generate(GeneratorSpec(**{**spec.__dict__, "copies": 3})).plain_strings()
    assert more == base * 3


@pytest.mark.parametrize("kind", KINDS)
def test_deterministic(kind):
    spec = GeneratorSpec(kind=kind, seed=11)
    assert generate(spec) == generate(spec)
    assert generate(spec) != generate(GeneratorSpec(kind=kind, seed=12))


@pytest.mark.parametrize("bad", [
    GeneratorSpec(kind="nope"), GeneratorSpec(copies=0), GeneratorSpec(mutation_rate=2.0),
    GeneratorSpec(alphabet=""), GeneratorSpec(alphabet="A$"),
])
def test_invalid_specs(bad):
    with pytest.raises(ConfigurationError):
        generate(bad)


def test_measure_animals(animals):
    row = measure_merge(*animals, whole_strings=True)
    assert row.L == 2
    assert row.blocks == 8
    assert row.n == 10


def test_measure_fig2(fig2):
    row = measure_merge(*fig2, kind="fig2")
    assert row.L == 18
    assert row.blocks == 18
    assert row.n == 54
    assert row.r_out <= row.r1 + row.r2 + row.blocks
    report = boundary_report(build_ebwt(*fig2))
    # boundary entering the block that starts at row "$GATACA"
    assert report.boundary_lcps[0] == 1 and report.blocks[1][1] == 2


def test_measure_identical_sets_records_ties():
    coll = TextCollection.from_strings(["GATTACAT"])
    row = measure_merge(coll, coll)
    assert row.blocks == 18
    lcps = boundary_report(build_ebwt(coll, coll.with_label(2))).boundary_lcps
    # the 9 boundaries inside a tied pair are capped at 9 + 9 symbols
    assert lcps[::2] == [18] * 9
    assert row.L == sum(lcps)


def test_disjoint_alphabets():
    a = TextCollection.from_strings(["AAAC", "CA"])
    b = TextCollection.from_strings(["GGT", "TTG"])
    row = measure_merge(a, b)
    assert row.L == 1  # only the shared terminator interval contributes
    words = measure_merge(TextCollection.from_strings(["AC", "CA"]),
                          TextCollection.from_strings(["GT", "TG"]), whole_strings=True)
    assert words.L == 0


@pytest.mark.parametrize("kind", KINDS)
def test_measure_spec_runs_every_kind(kind):
    row = measure_spec(GeneratorSpec(kind=kind, base_length=24, copies=3, seed=5))
    assert row.kind == kind
    assert row.blocks <= row.L + row.sigma_effective


def test_csv_header():
    row = measure_spec(GeneratorSpec(base_length=10, copies=2))
    text = rows_to_csv([row])
    header, line = text.splitlines()
    assert header == "kind,n,sigma,r1,r2,r_out,L,blocks,chars_extracted,comparisons"
    assert header.split(",") == CSV_FIELDS
    assert line.startswith("mutated-copies,")
