"""
Merging two sorted word lists adaptively
========================================

Two sorted sets of animal names are merged without comparing every pair:
each frontier word is located in the other list by a doubling search, and
only the rows it skips over are written out, as runs of set labels.
"""

from rlbwt_merge.extract import SortedStrings
from rlbwt_merge.merge import UPPER, doubling_search, expand, merge_runs
from rlbwt_merge.oracle import boundary_report, build_sorted_strings
from rlbwt_merge.text import TextCollection

first = ["CAT", "DOG", "ELEPHANT", "FOX", "HORSE", "PIG"]
second = ["FISH", "FROG", "LIZARD", "SNAKE"]
s1, s2 = SortedStrings(first), SortedStrings(second)

# %%
# The merge emits run-length compressed labels; expand them to see the
# interleave one word at a time.
runs, stats = merge_runs(s1, s2)
print("runs:", [(r.label, r.count) for r in runs])
print("labels:", expand(runs))
print(f"{stats.comparisons} comparisons, {stats.chars_extracted} characters read")

# %%
# Where does FISH go in the first list?  CAT is already known to be smaller,
# so the search starts at DOG and probes 1, 2 and 4 rows ahead before
# bisecting back to FOX.
probed = []
pos = doubling_search(s1, 1, s2, 0, UPPER, trace=probed)
print("FISH goes before", first[pos], "after probing", [first[r] for r in probed])

# %%
# The cost is governed by how much neighbouring words from different lists
# have in common.  Summing the common-prefix lengths across the block
# boundaries gives L.
table = build_sorted_strings(TextCollection.from_strings(first, 1),
                             TextCollection.from_strings(second, 2))
report = boundary_report(table)
print("boundary LCPs:", report.boundary_lcps, "L =", report.L)
