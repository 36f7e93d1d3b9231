import random

import pytest
from hypothesis import given, settings

from loopbraid.braid import BraidWord, Kind, format_word, parse_word, random_word, word_equal
from loopbraid.conjugacy import (
    Conjugate,
    Distinguished,
    SearchConfig,
    Unknown,
    check_certificate,
    invariant_values,
    normal_form_conjugator,
    refute,
    search_witness,
)
from loopbraid.markov import conjugate

from strategies import braid_pairs


def w(text, n):
    return parse_word(text, n)


def test_refute_examples():
    assert refute(w("s1", 2), w("s1^-1", 2)) is None
    d = refute(w("s1", 2), w("r1", 2))
    assert d == Distinguished("sigma_parity", (1, 0))
    with pytest.raises(ValueError):
        refute(w("s1", 2), w("s1", 3))


def test_refute_reports_signed_cycle_type():
    d = refute(w("t1 s1", 2), w("s1", 2))
    assert d.invariant == "signed_cycle_type"
    assert d.values == ([[2, -1]], [[2, 1]])


@settings(max_examples=300)
@given(braid_pairs(max_n=5, max_len=12))
def test_refute_never_fires_on_conjugates(pair):
    beta, gamma = pair
    assert refute(beta, conjugate(beta, gamma)) is None


@settings(max_examples=200)
@given(braid_pairs(max_n=4, max_len=8))
def test_distinguished_values_really_differ(pair):
    b1, b2 = pair
    d = refute(b1, b2)
    if d is not None:
        assert invariant_values(b1)[d.invariant] != invariant_values(b2)[d.invariant]


def test_search_examples():
    v = search_witness(w("s1", 2), w("r1 s1 r1", 2), SearchConfig(radius=1))
    assert v == Conjugate(w("r1", 2), 1)
    b = w("s1 t1 s1", 2)
    assert search_witness(b, b, SearchConfig(radius=0)) == Conjugate(BraidWord.empty(2), 0)


def test_s1_and_its_inverse_are_conjugate_on_two_strands():
    # Recorded outcome of the search; the witness re-checks independently.
    v = search_witness(w("s1", 2), w("s1^-1", 2), SearchConfig(radius=4))
    assert isinstance(v, Conjugate)
    assert format_word(v.witness) == "t2 t1 r1"
    assert any(g.kind is Kind.TAU for g in v.witness)
    assert check_certificate(w("s1", 2), w("s1^-1", 2), v.witness)
    assert search_witness(w("s1", 2), w("s1^-1", 2), SearchConfig(radius=2)) == Unknown(2)


def test_search_short_circuits_on_refutation():
    v = search_witness(w("s1", 2), w("r1", 2))
    assert isinstance(v, Distinguished)


def test_search_budget():
    b1, b2 = w("s1 s2 t1", 3), w("s2 s1 t3", 3)
    assert refute(b1, b2) is None
    v = search_witness(b1, b2, SearchConfig(radius=5, budget=3))
    assert isinstance(v, Unknown) and v.radius == 0


def test_search_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(radius=-1)
    with pytest.raises(ValueError):
        SearchConfig(budget=0)


def test_search_is_deterministic():
    rng = random.Random(5)
    for _ in range(20):
        beta = random_word(3, 6, rng)
        b2 = conjugate(beta, random_word(3, 2, rng))
        assert search_witness(beta, b2) == search_witness(beta, b2)


def test_check_certificate_examples():
    rng = random.Random(1)
    for _ in range(50):
        n = rng.randint(1, 4)
        beta, gamma = random_word(n, 8, rng), random_word(n, 4, rng)
        assert check_certificate(beta, conjugate(beta, gamma), gamma)
    beta = w("s1 t2", 2)
    assert check_certificate(beta, beta, BraidWord.empty(2))
    for gamma in ("1", "r1", "t1 s1", "s1^-1 t2 r1"):
        assert not check_certificate(w("s1", 2), w("r1", 2), w(gamma, 2))


def test_verdict_documents():
    assert Conjugate(w("r1", 2), 1).to_dict() == {"verdict": "conjugate", "witness": "r1", "radius": 1}
    assert Unknown(3).to_dict() == {"verdict": "unknown", "radius": 3}
    assert Distinguished("sigma_parity", (1, 0)).to_dict() == {
        "verdict": "distinguished",
        "invariant": "sigma_parity",
        "values": [1, 0],
        "radius": 0,
    }


def test_normal_form_conjugator_examples():
    pi, alpha = normal_form_conjugator(w("s1 t2", 2))
    assert format_word(pi) == "t1" and word_equal(alpha, w("s1", 2))
    g = w("s1 r1 s1^-1", 2)
    assert normal_form_conjugator(g) == (BraidWord.empty(2), g)
    assert normal_form_conjugator(w("t1 t1", 2)) == (BraidWord.empty(2), BraidWord.empty(2))


@settings(max_examples=200)
@given(braid_pairs(max_n=5, max_len=12))
def test_conjugating_by_factored_form(pair):
    beta, gamma = pair
    pi, alpha = normal_form_conjugator(gamma)
    assert word_equal(conjugate(beta, gamma), conjugate(conjugate(beta, alpha), pi))
