import pytest

from helpers import CORPUS, corpus_entry, check_inscription_outputs


@pytest.mark.parametrize("name", CORPUS)
def test_inscription_outputs_admissible_and_shorter(name):
    d, ds, dga = corpus_entry(name)
    check_inscription_outputs(d, ds, dga)


def test_hopf_differential_golden():
    _, _, dga = corpus_entry("hopf")
    table = {s: dga.render(dga.differentials[s]) for s in dga.symbols()}
    assert table == {
        "w_c3": "T2^-1 + 1",
        "w_c4": "1 + T1",
        "w_c1_c2": "T2^-1",
        "w_c2_c1": "T2^-1",
    }


def test_trefoil_differential_golden():
    _, _, dga = corpus_entry("trefoil")
    assert dga.render(dga.differentials["w_q4"]) == (
        "1 + w_a1 + w_a1*w_a2*w_a3 + w_a3"
    )
    assert dga.render(dga.differentials["w_q5"]) == (
        "1 + w_a1 + w_a3 + w_a3*w_a2*w_a1"
    )


def test_three_chain_differential_golden():
    _, _, dga = corpus_entry("three_chain")
    table = {s: dga.render(dga.differentials[s]) for s in dga.symbols()}
    assert table["w_c7"] == "1 + T3"
    assert table["w_c1_c2"] == "1"
    assert table["w_c2_c1"] == "1"
    assert table["w_c5_c6"] == "T2"
    assert table["w_c6_c5"] == "T2"
