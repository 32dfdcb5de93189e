"""
RLBWT files and the command line
================================

Build RLBWT files from text, merge them with the ``rlbwt-merge`` command
and check the result against the brute-force oracle.
"""

import subprocess
import sys
import tempfile
from pathlib import Path

from rlbwt_merge.rlbwt import read_rlbwt
from rlbwt_merge.text import symbols_str

work = Path(tempfile.mkdtemp())
(work / "a.txt").write_text(">forward strands\nGATTACAT\nGATACAT\nGATTAGATA\n")
(work / "b.txt").write_text("ATGTAATC\nATGTATC\nTATCTAATC\n")


def cli(*args):
    proc = subprocess.run([sys.executable, "-m", "rlbwt_merge.cli", *map(str, args)],
                          capture_output=True, text=True)
    print("$ rlbwt-merge", *args, f"-> exit {proc.returncode}")
    for stream in (proc.stdout, proc.stderr):
        if stream:
            print(stream.rstrip())


# %%
cli("build", work / "a.txt", work / "a.rlbwt")
cli("build", work / "b.txt", work / "b.rlbwt")
print((work / "a.rlbwt").read_text())

# %%
cli("merge", work / "a.rlbwt", work / "b.rlbwt", "-o", work / "ab.rlbwt", "--stats")
print(symbols_str(read_rlbwt(work / "ab.rlbwt").decompress()))

# %%
cli("verify", work / "a.txt", work / "b.txt")
cli("stats", work / "a.txt", work / "b.txt")
cli("measure", "--kind", "reverse-complement", "--seed", "1", "--copies", "4",
    "--mutation-rate", "0.05", "--instances", "3")
