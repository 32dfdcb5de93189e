"""
How large is L on repetitive inputs?
====================================

Generate collections that are repetitive inside each set but unrelated
across sets, and tabulate L next to the run counts and the extraction cost.
Nothing is asserted here; the table is for inspection.
"""

import sys

from rlbwt_merge.corpus import KINDS, GeneratorSpec, measure_spec, rows_to_csv

rows = []
for kind in KINDS:
    for rate in (0.0, 0.02, 0.1):
        for seed in range(0, 6, 2):
            spec = GeneratorSpec(kind=kind, base_length=40, copies=6,
                                 mutation_rate=rate, seed=seed)
            rows.append(measure_spec(spec))

sys.stdout.write(rows_to_csv(rows, extra=True))

# %%
# Average L per kind, next to the number of symbols merged.
for kind in KINDS:
    sel = [r for r in rows if r.kind == kind]
    mean_L = sum(r.L for r in sel) / len(sel)
    mean_n = sum(r.n for r in sel) / len(sel)
    print(f"{kind:20s} mean L = {mean_L:7.1f}   mean n = {mean_n:6.1f}", file=sys.stderr)
