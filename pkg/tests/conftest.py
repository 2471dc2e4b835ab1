import hypothesis.strategies as st
import pytest

from permrev.dfa import Dfa
from permrev.witness import build_witness


@st.composite
def dfas(draw, max_states=5, max_alphabet=3):
    n = draw(st.integers(1, max_states))
    k = draw(st.integers(1, max_alphabet))
    delta = tuple(
        tuple(draw(st.integers(0, n - 1)) for _ in range(k)) for _ in range(n)
    )
    start = draw(st.integers(0, n - 1))
    finals = frozenset(draw(st.sets(st.integers(0, n - 1))))
    return Dfa(n, k, delta, start, finals)


@st.composite
def pfas(draw, max_states=6, alphabet_size=2):
    n = draw(st.integers(1, max_states))
    columns = [draw(st.permutations(tuple(range(n)))) for _ in range(alphabet_size)]
    delta = tuple(tuple(col[q] for col in columns) for q in range(n))
    start = draw(st.integers(0, n - 1))
    finals = frozenset(draw(st.sets(st.integers(0, n - 1))))
    return Dfa(n, alphabet_size, delta, start, finals)


@st.composite
def dfa_with_word(draw, max_states=5, max_alphabet=3, max_len=8):
    dfa = draw(dfas(max_states=max_states, max_alphabet=max_alphabet))
    word = tuple(
        draw(st.lists(st.integers(0, dfa.alphabet_size - 1), max_size=max_len))
    )
    return dfa, word


@st.composite
def perms(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    return tuple(draw(st.permutations(tuple(range(n)))))


@pytest.fixture(scope="session")
def witness_3_4():
    return build_witness(3, 4)
