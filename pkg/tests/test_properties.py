"""Randomized structural properties of the algebra operations."""

import hypothesis.strategies as st
from hypothesis import given, settings

from pda.element import Element

from helpers import corpus_entry


def _dga():
    return corpus_entry("hopf")[2]


def _monomial(dga, word):
    return Element.monomial(tuple(word), frozenset({(0,) * dga.n_t}), dga.n_t, dga.comm)


symbols = st.sampled_from(["w_c3", "w_c4", "w_c1_c2", "w_c2_c1"])
words = st.lists(symbols, min_size=0, max_size=4)


@given(words, words)
@settings(max_examples=100, deadline=None)
def test_leibniz_rule(u, v):
    dga = _dga()
    x, y = _monomial(dga, u), _monomial(dga, v)
    assert dga.d(x * y) == dga.d(x) * y + x * dga.d(y)


@given(words)
@settings(max_examples=100, deadline=None)
def test_d_squared_zero_on_monomials(w):
    dga = _dga()
    assert dga.d(dga.d(_monomial(dga, w))) == dga.zero()


@given(words)
@settings(max_examples=100, deadline=None)
def test_d_lowers_filtration_never_raises(w):
    dga = _dga()
    x = _monomial(dga, w)
    lvl = dga.term_level(tuple(w))
    for word, _ in dga.d(x).monomials():
        assert dga.term_level(word) <= lvl


@given(words)
@settings(max_examples=100, deadline=None)
def test_stab_homotopy_identity_random(w):
    dga, _, _ = _dga().stabilized(1, 1)
    x = _monomial(dga, w)
    lhs = x + dga.stab_projection(x)
    rhs = dga.d(dga.stab_homotopy(x)) + dga.stab_homotopy(dga.d(x))
    assert lhs == rhs


@given(words)
@settings(max_examples=50, deadline=None)
def test_quotient_projection_commutes_with_d(w):
    dga = _dga()
    com = dga.quotient("com")
    images = {s: com.gen(s) for s in dga.symbols()}
    x = _monomial(dga, w)
    assert com.apply_morphism(images, dga.d(x)) == com.d(
        com.apply_morphism(images, x)
    )
