import subprocess
import sys
from pathlib import Path

import pytest

DEMOS = Path(__file__).resolve().parent.parent / "demos"


@pytest.mark.parametrize("script,args", [
    ("torus_grid_walkthrough.py", []),
    ("dumbbell_neck.py", []),
    ("covers_tour.py", []),
    ("crossing_sequences.py", []),
    ("corpus_check.py", ["10"]),
])
def test_demo_runs(script, args):
    out = subprocess.run([sys.executable, str(DEMOS / script), *args],
                         capture_output=True, text=True, timeout=300)
    assert out.returncode == 0, out.stderr
    assert out.stdout.strip()


def test_corpus_demo_all_agree():
    out = subprocess.run([sys.executable, str(DEMOS / "corpus_check.py"), "10"],
                         capture_output=True, text=True, timeout=300)
    assert out.stdout.strip().splitlines()[-1] == "10/10 files agree with the oracle"
