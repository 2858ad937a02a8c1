"""
Quotient complexity of a regular language
=========================================

Build automata from regular expressions, minimize them and read off the
number of quotients.  The empty quotient counts, so a finite language always
pays one state for its sink.
"""

from freelang import (Alphabet, classify, enumerate_language, minimize, quotient_complexity,
                      regex_to_dfa)

sigma = Alphabet.of("abc")

# a word of length 3 needs 5 quotients: a^3, a^2, a, ε and ∅
K = regex_to_dfa("a^3", sigma)
print("κ(a^3) =", quotient_complexity(K))

# a factor-free language with one starred block per position
K = regex_to_dfa("a(c*(a|b))^{2}", sigma)
print("κ(a(c*(a|b))^2) =", quotient_complexity(K))
print("shortest words:", [sigma.show(w) for w in enumerate_language(K, 4)])

# minimization returns a canonical numbering: equal languages give equal automata
K1 = regex_to_dfa("(a|b)*", sigma)
K2 = regex_to_dfa("(a*b*)*", sigma)
print("same minimal DFA:", minimize(K1) == minimize(K2))

# freeness flags; ab*a is factor-free but infinite, so not subword-free
for text in ("a|ab", "ab*a", "ab|ba", "a*"):
    flags = classify(regex_to_dfa(text, sigma))
    print(f"{text:6}", {k: v for k, v in flags.to_dict().items() if v})
