"""Hypothesis strategies for braid words and free-group words."""

from hypothesis import strategies as st

from loopbraid.braid import BraidWord, generators
from loopbraid.freegroup import reduce


@st.composite
def braid_words(draw, n=None, max_n=6, max_len=20):
    if n is None:
        n = draw(st.integers(1, max_n))
    letters = draw(st.lists(st.sampled_from(generators(n)), max_size=max_len))
    return BraidWord(n, tuple(letters))


@st.composite
def braid_pairs(draw, max_n=6, max_len=20):
    n = draw(st.integers(1, max_n))
    return draw(braid_words(n=n, max_len=max_len)), draw(braid_words(n=n, max_len=max_len))


@st.composite
def free_words(draw, n=None, max_n=6, max_len=20):
    if n is None:
        n = draw(st.integers(1, max_n))
    raw = draw(st.lists(st.tuples(st.integers(1, n), st.sampled_from([1, -1])), max_size=max_len))
    return reduce(raw, n)
