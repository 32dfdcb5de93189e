from collections import Counter

import pytest

from figures import (ANIMAL_LABELS, ANIMAL_LCPS, COMBINED, COMBINED_LABELS, COMBINED_LCPS,
                     EBWT_1, EBWT_1_LCPS, EBWT_1_STRINGS, EBWT_2, GATTACAT_BWT)
from rlbwt_merge.oracle import (boundary_report, build_ebwt, build_sorted_strings,
                                effective_sigma, interleave_oracle)
from rlbwt_merge.text import TextCollection, symbols_str
from suite import small_collections


def naive_bwt(s):
    s = s + "\0"
    rots = sorted(s[i:] + s[:i] for i in range(len(s)))
    return "".join(r[-1] for r in rots).replace("\0", "$")


def test_single_string_bwt():
    table = build_ebwt(TextCollection.from_strings(["GATTACAT"]))
    assert table.bwt_str() == GATTACAT_BWT == naive_bwt("GATTACAT")


def test_bare_terminator():
    table = build_ebwt(TextCollection((b"\x00",)))
    assert table.bwt_str() == "$"
    assert boundary_report(table).L == 0


def test_fig2_three_strings(fig2):
    a, _ = fig2
    table = build_ebwt(a)
    assert table.bwt_str() == EBWT_1
    assert table.bwt_str()[:3] == "TTA"
    strings = "".join(str(r.rotation.string_index + 1) for r in table.rows)
    assert strings == EBWT_1_STRINGS
    assert boundary_report(table, by="string").boundary_lcps == EBWT_1_LCPS


def test_fig2_reverse_complements(fig2):
    _, b = fig2
    assert build_ebwt(b).bwt_str() == EBWT_2


def test_fig2_combined(fig2):
    a, b = fig2
    table = build_ebwt(a, b)
    assert table.bwt_str() == COMBINED
    assert "".join(map(str, interleave_oracle(a, b))) == COMBINED_LABELS
    report = boundary_report(table)
    assert report.boundary_lcps == COMBINED_LCPS
    assert report.L == sum(COMBINED_LCPS) == 18
    assert report.block_count == 18


def test_animals(animals):
    table = build_sorted_strings(*animals)
    assert table.labels == ANIMAL_LABELS
    report = boundary_report(table)
    assert report.boundary_lcps == ANIMAL_LCPS
    assert report.L == 2
    assert report.block_count == 8


def test_single_collection_has_no_boundaries(fig2):
    report = boundary_report(build_ebwt(fig2[0]))
    assert report.block_count == 1
    assert report.boundary_lcps == [] and report.L == 0


def test_tie_rule_bare_terminators():
    bare = TextCollection((b"\x00",))
    assert interleave_oracle(bare, bare) == [1, 2]


def test_rows_are_sorted_and_symbols_precede_contexts(fig2):
    table = build_ebwt(*fig2)
    for r in table.rows:
        assert r.symbol == r.text[(r.rotation.offset - 1) % len(r.text)]
    for x, y in zip(table.rows, table.rows[1:]):
        cx, cy = x.context(len(x.text) + len(y.text)), y.context(len(x.text) + len(y.text))
        assert cx <= cy


@pytest.mark.parametrize("seed", range(40))
def test_properties_on_small_inputs(seed):
    a, b = small_collections(seed)
    table = build_ebwt(a, b)
    assert len(table) == a.total_length + b.total_length
    inputs = Counter(c for coll in (a, b) for s in coll.strings for c in s)
    assert Counter(table.symbols) == inputs
    # merging the per-set tables by the label column reproduces the joint table
    ta, tb = iter(build_ebwt(a).rows), iter(build_ebwt(b).rows)
    merged = [next(ta if lab == 1 else tb) for lab in interleave_oracle(a, b)]
    assert merged == table.rows
    report = boundary_report(table)
    assert sum(n for _, _, n in report.blocks) == len(table)
    labels = [lab for lab, _, _ in report.blocks]
    assert all(x != y for x, y in zip(labels, labels[1:]))
    assert report.block_count <= report.L + effective_sigma(table)


def test_disjoint_leading_symbols_give_zero_L():
    a = TextCollection.from_strings(["AXE", "CAT", "EEL"], 1)
    b = TextCollection.from_strings(["BEE", "DOG", "FLY"], 2)
    table = build_sorted_strings(a, b)
    report = boundary_report(table)
    for (_, s0, n0), (_, s1, _) in zip(report.blocks, report.blocks[1:]):
        assert table.rows[s0 + n0 - 1].context(1) != table.rows[s1].context(1)
    assert report.block_count == 6
    assert report.L == 0


def test_disjoint_alphabets_ebwt_only_share_terminator_boundary():
    a = TextCollection.from_strings(["AAA", "AA"], 1)
    b = TextCollection.from_strings(["CC", "CCC"], 2)
    report = boundary_report(build_ebwt(a, b))
    # the terminator is common to both sets, so the $-interval holds one
    # boundary whose contexts agree on exactly one symbol
    assert sorted(report.boundary_lcps) == [0] * (report.block_count - 2) + [1]
    assert report.L == 1
