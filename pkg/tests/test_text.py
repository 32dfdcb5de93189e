import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rlbwt_merge.errors import FormatError, StructureError
from rlbwt_merge.text import (TERMINATOR, Rotation, TextCollection, compare_contexts,
                              context_symbol, parse_text, symbols_str, terminate)


def t(s):
    return terminate(s)


def naive_lcp(a, i, b, j, cap):
    k = 0
    while k < cap and a[(i + k) % len(a)] == b[(j + k) % len(b)]:
        k += 1
    return k


def test_terminator_is_smallest():
    assert TERMINATOR == 0
    assert all(TERMINATOR < c for c in b"ACGT!~")
    assert t("CAT") == b"CAT\x00"
    assert symbols_str(t("CAT")) == "CAT$"


def test_compare_cat_fish():
    assert compare_contexts(t("CAT"), 0, t("FISH"), 0) == (-1, 0)


def test_compare_fox_frog():
    assert compare_contexts(t("FOX"), 0, t("FROG"), 0) == (-1, 1)
    assert compare_contexts(t("FROG"), 0, t("FOX"), 0) == (1, 1)


def test_compare_reflexive():
    s = t("GATTACAT")
    for off in range(len(s)):
        assert compare_contexts(s, off, s, off) == (0, 2 * len(s))


def test_terminator_sorts_shorter_word_first():
    assert compare_contexts(t("AB"), 0, t("ABC"), 0) == (-1, 2)


def test_context_symbol():
    s = t("GATTACAT")
    assert context_symbol(s, 1, 0) == ord("A")
    assert context_symbol(s, 8, 0) == TERMINATOR
    assert context_symbol(s, 8, 1) == ord("G")
    assert context_symbol(t("FISH"), 0, 3) == ord("H")
    with pytest.raises(StructureError):
        context_symbol(s, 9, 0)


def test_collection_validation():
    with pytest.raises(StructureError):
        TextCollection(())
    with pytest.raises(StructureError):
        TextCollection((b"AB",))
    with pytest.raises(StructureError):
        TextCollection((b"A\x00B\x00",))
    c = TextCollection.from_strings(["AB", "C"], set_label=2)
    assert c.total_length == 5
    assert list(c.rotations())[:3] == [Rotation(0, 0), Rotation(0, 1), Rotation(0, 2)]
    assert c.plain_strings() == ["AB", "C"]


def test_bare_terminator_is_legal():
    c = TextCollection((b"\x00",))
    assert c.total_length == 1


def test_parse_text():
    c = parse_text([">header\n", "GATTACAT\n", "GATACAT\r\n"])
    assert c.plain_strings() == ["GATTACAT", "GATACAT"]
    for bad in (["AB$C"], [""], [">only a header"], ["café中"]):
        with pytest.raises(FormatError):
            parse_text(bad)


alpha = st.text(alphabet="AB", min_size=0, max_size=6)


@settings(max_examples=300)
@given(alpha, alpha, st.data())
def test_lcp_matches_naive_loop(x, y, data):
    a, b = t(x), t(y)
    i = data.draw(st.integers(0, len(a) - 1))
    j = data.draw(st.integers(0, len(b) - 1))
    order, lcp = compare_contexts(a, i, b, j)
    assert lcp == naive_lcp(a, i, b, j, len(a) + len(b))
    if order:
        assert (a[(i + lcp) % len(a)] < b[(j + lcp) % len(b)]) == (order < 0)


@settings(max_examples=300)
@given(alpha, alpha, st.data())
def test_equality_only_for_identical_alignment(x, y, data):
    a, b = t(x), t(y)
    i = data.draw(st.integers(0, len(a) - 1))
    j = data.draw(st.integers(0, len(b) - 1))
    order, _ = compare_contexts(a, i, b, j)
    same = a == b and i == j
    assert (order == 0) == same
    assert compare_contexts(b, j, a, i)[0] == -order


def test_transitive_on_random_triples():
    rng = random.Random(7)
    pool = [t("".join(rng.choice("AB") for _ in range(rng.randint(0, 5)))) for _ in range(20)]
    ctx = [(s, o) for s in pool for o in range(len(s))]
    for _ in range(2000):
        x, y, z = rng.sample(ctx, 3)
        xy = compare_contexts(*x, *y)[0]
        yz = compare_contexts(*y, *z)[0]
        if xy <= 0 and yz <= 0:
            assert compare_contexts(*x, *z)[0] <= 0
