import pytest

from pda.algebra import parse_expression

from helpers import (
    CORPUS,
    corpus_entry,
    check_algebra_axioms,
    check_quotient_chain_maps,
    check_stab_homotopy,
)


@pytest.mark.parametrize("name", CORPUS)
def test_square_zero_degree_filtration(name):
    _, _, dga = corpus_entry(name)
    check_algebra_axioms(dga)


@pytest.mark.parametrize("name", CORPUS)
def test_quotients_are_chain_maps(name):
    _, _, dga = corpus_entry(name)
    check_quotient_chain_maps(dga)


def test_cyclic_quotient_merges_rotations():
    _, _, dga = corpus_entry("hopf")
    cyc = dga.quotient("cyc")
    assert len(cyc.generators) == 3  # w_c1_c2 and w_c2_c1 merge


def test_stab_homotopy_identity():
    _, _, dga = corpus_entry("hopf")
    check_stab_homotopy(dga, n_samples=200)


def test_stabilization_preserves_linear_homology():
    from pda.invariants import augmentations, bilinearized_complex

    _, _, dga = corpus_entry("hopf")
    stab, _, _ = dga.stabilized(1, 1)
    eps = augmentations(dga, 1)[0]
    eps_s = augmentations(stab, 1)[0]
    before = {n: v for n, v in bilinearized_complex(dga, eps, eps, 1).homology_dims().items() if v}
    after = {n: v for n, v in bilinearized_complex(stab, eps_s, eps_s, 1).homology_dims().items() if v}
    assert before == after


def test_parse_render_round_trip():
    _, _, dga = corpus_entry("hopf")
    for s in dga.symbols():
        x = dga.differentials[s]
        back = parse_expression(
            dga.render(x), dga.t_names, set(dga.symbols()), dga.comm
        )
        assert back == x


def test_invert_tame_round_trip():
    _, _, dga = corpus_entry("trefoil")
    images = {s: dga.gen(s) for s in dga.symbols()}
    images["w_q4"] = dga.gen("w_q4") + dga.gen("w_a1") * dga.gen("w_a2")
    inv = dga.invert_tame(images)
    for s in dga.symbols():
        assert dga.apply_morphism(images, inv[s]) == dga.gen(s)
