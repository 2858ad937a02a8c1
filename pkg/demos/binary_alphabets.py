"""
Binary free languages
=====================

With two letters, union of bifix-free languages loses two more states, and
union of factor-free languages loses min(m-3, n-3).  The second bound is
only known to be reachable; that it cannot be beaten is checked by
exhaustive search for small m, n.
"""

from freelang import SearchSpec, max_complexity_search, verify_witness

for m, n in ((6, 6), (6, 7), (7, 7)):
    (union, sym) = verify_witness("PROP6_BIFIX_BINARY", m, n)
    print(f"bifix  m={m} n={n}: ∪ {union.measured_kappa}, ⊕ {sym.measured_kappa} "
          f"(bound {union.expected['value']})")

for m, n in ((6, 6), (6, 7), (7, 6)):
    union = verify_witness("PROP8_FACTOR_BINARY", m, n)[0]
    tag = "conjectured tight" if union.expected["conjectural"] else "proved"
    print(f"factor m={m} n={n}: ∪ {union.measured_kappa} ({tag})")

# every binary factor-free pair with 4 <= n <= m <= 5 states
for m, n in ((4, 4), (5, 4), (5, 5)):
    r = max_complexity_search(SearchSpec("factor", 2, m, n, "union"))
    print(f"search m={m} n={n}: max κ(K∪L) = {r.max_kappa} over "
          f"{r.candidates_examined} pairs")
