"""
Product, star and reversal
==========================

For free languages product and star are cheap: m+n-2 and n-1 quotients.
Reversal still grows exponentially, to 2^(n-3)+2.
"""

from freelang import make_witness, quotient_complexity, reverse
from freelang.automata import product, star

for m, n in ((4, 5), (6, 6)):
    pair = make_witness("THM3_PRODUCT_UNARY", m, n)
    print(f"κ({pair.descriptions[0]} · {pair.descriptions[1]}) =",
          product(pair.left, pair.right).state_count)

for n in (5, 7):
    L = make_witness("THM4_STAR_BINARY", None, n).left
    print(f"n={n}: κ(L*) = {star(L).state_count}")

# factor-free: cKc around a language whose reversal is as large as possible
for n in range(3, 8):
    L = make_witness("THM5_REVERSAL_FACTOR", None, n).left
    print(f"factor-free  n={n}: κ(L^R) = {reverse(L).state_count}")

# subword-free: one letter per non-empty subset of {1, ..., n-3}
for n in range(4, 8):
    L = make_witness("THM6_REVERSAL_SUBWORD", None, n).left
    print(f"subword-free n={n}: {len(L.alphabet)} letters, κ(L)={quotient_complexity(L)}, "
          f"κ(L^R) = {reverse(L).state_count}")
