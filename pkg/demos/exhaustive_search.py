"""
Exhaustive search over small free automata
==========================================

Minimal free automata have a rigid shape (one accepting state, a sink, and
for finite languages a forward order on states), which makes enumeration of
all of them feasible for a handful of states.
"""

import time

from freelang import (SearchSpec, enumerate_minimal_free_dfas, impossibility_check,
                      max_complexity_search)

for cls in ("prefix", "suffix", "bifix", "factor", "subword"):
    counts = [sum(1 for _ in enumerate_minimal_free_dfas(cls, 2, n)) for n in range(2, 6)]
    print(f"{cls:8} binary, n = 2..5:", counts)

# largest union over all binary factor-free pairs
for m, n in ((4, 4), (5, 4), (5, 5), (6, 4), (6, 5), (6, 6)):
    r = max_complexity_search(SearchSpec("factor", 2, m, n, "union"))
    print(f"m={m} n={n}: {r.max_kappa}  ({r.seconds:.1f}s)")

# the subword-free union bound needs at least m+n-3 letters
for k in (4, 5):
    t0 = time.perf_counter()
    unattained = impossibility_check("subword", "union", 4, 4, k)
    print(f"{k} letters: bound 8 {'never reached' if unattained else 'reached'} "
          f"({time.perf_counter() - t0:.1f}s)")
