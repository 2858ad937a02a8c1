"""
Boolean operations on factor-free and subword-free languages
============================================================

Witness pairs meet the upper bounds exactly.  The subword-free pair needs an
alphabet that grows with m and n; dropping a few letters keeps intersection
and difference tight.
"""

from freelang import make_witness, verify_witness
from freelang.automata import boolean_combine, restrict_alphabet

m, n = 5, 6

# factor-free over three letters
for report in verify_witness("THM1_FACTOR_BOOL", m, n):
    print(f"{report.operation:21} κ={report.measured_kappa:3}  "
          f"bound {report.expected['formula']} = {report.expected['value']}  {report.verdict}")

# subword-free over m+n-3 letters
pair = make_witness("THM2_SUBWORD_BOOL", m, n)
print("\nalphabet:", " ".join(pair.left.alphabet.names))
for report in verify_witness("THM2_SUBWORD_BOOL", m, n):
    print(f"{report.operation:21} κ={report.measured_kappa:3}  {report.verdict}")

# intersection survives removing b, c and the two last private letters
drop = {"b", "c", f"d{m - 1}", f"e{n - 1}"}
keep = [x for x in pair.left.alphabet.names if x not in drop]
K, L = restrict_alphabet(pair.left, keep), restrict_alphabet(pair.right, keep)
print(f"\nintersection over {len(keep)} letters:",
      boolean_combine(K, L, "intersection").state_count)
