"""Regenerate a small corpus and check every algorithm against its tags.

Each corpus file carries the brute-force answer per cycle class.  This
script writes a fresh corpus to a temporary directory and runs the same
check as ``surfcyc validate``.

    python3 demos/corpus_check.py [COUNT]
"""

import sys
import tempfile

from surfcyc.cli import check_file
from surfcyc.corpus import generate_corpus, write_corpus

count = int(sys.argv[1]) if len(sys.argv) > 1 else 24
with tempfile.TemporaryDirectory() as tmp:
    files = write_corpus(tmp, generate_corpus(seed=11, count=count))
    bad = 0
    for f in files:
        name, problems = check_file(f)
        status = "ok" if not problems else "; ".join(problems)
        bad += bool(problems)
        print(f"{name:32s} {status}")
print(f"{len(files) - bad}/{len(files)} files agree with the oracle")
