import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from freelang.automata import Alphabet, Dfa, equivalent
from freelang.textformat import DfaFormatError, dumps_dfa, loads_dfa, read_dfa, write_dfa


@st.composite
def dfas(draw):
    k = draw(st.integers(1, 3))
    n = draw(st.integers(1, 6))
    sigma = Alphabet.of(draw(st.lists(st.sampled_from(["a", "b", "c", "d3", "x_1"]),
                                      min_size=k, max_size=k, unique=True)))
    delta = draw(st.lists(st.lists(st.integers(0, n - 1), min_size=k, max_size=k),
                          min_size=n, max_size=n))
    finals = draw(st.sets(st.integers(0, n - 1)))
    return Dfa(sigma, delta, draw(st.integers(0, n - 1)), finals)


@settings(max_examples=200, deadline=None)
@given(dfas())
def test_round_trip(d):
    assert loads_dfa(dumps_dfa(d)) == d


def test_file_round_trip(tmp_path):
    d = Dfa(Alphabet.of("ab"), [[1, 2], [2, 2], [2, 2]], 0, {1})
    write_dfa(d, tmp_path / "k.dfa")
    assert equivalent(read_dfa(tmp_path / "k.dfa"), d)


def test_comments_and_partial_rows():
    text = """# a then nothing
states 2
alphabet a b
initial 0
finals 1   # accepting
1 -
- -
"""
    d = loads_dfa(text)
    assert d.delta == ((1, None), (None, None))


@pytest.mark.parametrize("text,line", [
    ("states 1\nalphabet a\ninitial 0\nfinals\n0 0\n", 5),
    ("states 1\nalphabet a\nfinals\n", 3),
    ("states x\nalphabet a\ninitial 0\nfinals\n0\n", 1),
    ("states 2\nalphabet a\ninitial 0\nfinals 1\n0\n", 6),
    ("states 1\nalphabet a\ninitial 0\nfinals\nq\n", 5),
])
def test_errors_carry_line(text, line):
    with pytest.raises(DfaFormatError) as info:
        loads_dfa(text)
    assert info.value.line == line
