"""
Automaton files and the command line
====================================

Automata are stored as plain transition tables.  The same files feed the
``freelang`` command.
"""

import subprocess
import sys
import tempfile
from pathlib import Path

from freelang import dumps_dfa, loads_dfa, make_witness, write_dfa

pair = make_witness("THM1_FACTOR_BOOL", 4, 5)
text = dumps_dfa(pair.left)
print(text, flush=True)
assert loads_dfa(text) == pair.left

with tempfile.TemporaryDirectory() as tmp:
    k, l = Path(tmp) / "K.dfa", Path(tmp) / "L.dfa"
    write_dfa(pair.left, k)
    write_dfa(pair.right, l)
    cli = [sys.executable, "-m", "freelang"]
    subprocess.run(cli + ["classify", str(k), "--format", "text"], check=True)
    subprocess.run(cli + ["op", "union", str(k), str(l)], check=True)
    subprocess.run(cli + ["table", "2", "-m", "6", "-n", "6", "--format", "text"], check=True)
