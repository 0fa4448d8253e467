import pytest

from pda.words import generate_words, restrict_to_pieces, word_symbol

from helpers import CORPUS, corpus_entry


@pytest.mark.parametrize("name", CORPUS)
def test_generated_words_are_admissible(name):
    d, _, _ = corpus_entry(name)
    words = generate_words(d)
    symbols = {w.symbol for w in words}
    assert len(symbols) == len(words)
    for w in words:
        assert len(set(w.chords)) == len(w.chords)
        assert len(set(w.pieces)) == len(w.pieces)
        assert w.level == len(w.chords) <= d.n_pieces


@pytest.mark.parametrize("name", CORPUS)
def test_rotations_are_distinct_generators(name):
    d, _, _ = corpus_entry(name)
    chord_sets = {w.chords for w in generate_words(d)}
    for chords in chord_sets:
        for i in range(len(chords)):
            assert chords[i:] + chords[:i] in chord_sets


def test_hopf_generator_set_golden():
    d, _, _ = corpus_entry("hopf")
    words = {w.symbol: w for w in generate_words(d)}
    assert set(words) == {"w_c3", "w_c4", "w_c1_c2", "w_c2_c1"}
    assert all(w.grading == 1 for w in words.values())


def test_restrict_to_pieces():
    d, _, _ = corpus_entry("three_chain")
    words = generate_words(d)
    sub = restrict_to_pieces(words, d, {1})
    assert sub
    for w in sub:
        assert set(w.pieces) <= {1}


def test_word_symbol_shape():
    assert word_symbol(("a", "b")) == "w_a_b"
