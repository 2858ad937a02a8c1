import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from freelang.automata import Alphabet, quotient_complexity
from freelang.regex import (Concat, Empty, Epsilon, Letter, Power, RegexSyntaxError, Star, Union,
                            parse_regex, print_regex, regex_to_dfa)
from oracles import regex_matches, run, words_upto

AB = Alphabet.of("ab")
ABC = Alphabet.of("abc")


def test_parse_precedence():
    a, b = Letter(0), Letter(1)
    assert parse_regex("a|ab*", AB) == Union(a, Concat(a, Star(b)))
    assert parse_regex("(ab)^{3}", AB) == Power(Concat(a, b), 3)
    assert parse_regex("a∪b", AB) == Union(a, b)
    assert parse_regex("()", AB) == Epsilon()
    assert parse_regex("ε", AB) == Epsilon()
    assert parse_regex("∅", AB) == Empty()


def test_quoted_multichar_letters():
    sigma = Alphabet.of(["a", "d3"])
    assert parse_regex("a'd3'", sigma) == Concat(Letter(0), Letter(1))


@pytest.mark.parametrize("text,pos", [("a(b", 3), ("a|*", 2), ("ax", 1), ("a^", 2)])
def test_syntax_errors_report_position(text, pos):
    with pytest.raises(RegexSyntaxError) as info:
        parse_regex(text, AB)
    assert info.value.pos == pos


def test_epsilon_kappa():
    assert quotient_complexity(regex_to_dfa("()", AB)) == 2


def test_factor_witness_kappa():
    # a(c*(a|b))^{m-3} at m = 5
    assert quotient_complexity(regex_to_dfa("a(c*(a|b))^{2}", ABC)) == 5


def test_binary_factor_union_right_operand_kappa():
    n = 7
    assert quotient_complexity(regex_to_dfa(f"(a|b)(ba*)^{{{n - 4}}}b", AB)) == n


WITNESS_REGEXES = [
    ("a(c*(a|b))^{3}", ABC),
    ("a(b*(a|c))^{2}", ABC),
    ("(a|b)(ba*)^{3}b", AB),
    ("((ba*)^{2}b|a)*", AB),
    ("a^{4}", AB),
    ("(a^{2})*", AB),
]


@pytest.mark.parametrize("text,sigma", WITNESS_REGEXES)
def test_semantic_fidelity_on_witness_regexes(text, sigma):
    r = parse_regex(text, sigma)
    d = regex_to_dfa(r, sigma)
    for w in words_upto(len(sigma), 6):
        assert run(d, w) == regex_matches(r, w), sigma.show(w)


def regexes(k):
    leaves = st.one_of(st.just(Empty()), st.just(Epsilon()),
                       st.integers(0, k - 1).map(Letter))
    return st.recursive(leaves, lambda sub: st.one_of(
        st.builds(Union, sub, sub),
        st.builds(Concat, sub, sub),
        st.builds(Star, sub),
        st.builds(Power, sub, st.integers(0, 3)),
    ), max_leaves=8)


@settings(max_examples=200, deadline=None)
@given(regexes(2))
def test_print_parse_round_trip(r):
    assert parse_regex(print_regex(r, AB), AB) == r


@settings(max_examples=150, deadline=None)
@given(regexes(2))
def test_regex_to_dfa_matches_backtracking_oracle(r):
    d = regex_to_dfa(r, AB)
    assert d.is_complete
    for w in words_upto(2, 5):
        assert run(d, w) == regex_matches(r, w)


def test_round_trip_with_awkward_names():
    sigma = Alphabet.of(["a", "d3", "1", "*"])
    r = Concat(Letter(1), Star(Union(Letter(2), Letter(3))))
    assert parse_regex(print_regex(r, sigma), sigma) == r
