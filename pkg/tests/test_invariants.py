import pytest

from pda.families import torsion_family
from pda.invariants import (
    INF,
    augmentation_tree,
    augmentations,
    bilinearized_complex,
    poincare_polynomial,
    polynomial_str,
    spectral_polynomial,
    spectral_sequence,
    tau_aug,
    tau_vanishing,
)

from helpers import (
    CORPUS,
    corpus_entry,
    check_fundamental_class,
    check_spectral_stabilization,
)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_torsion_family(k):
    dga = torsion_family(k)
    assert tau_aug(dga) == k
    assert tau_vanishing(dga, k + 1, bound=1)[0] == "VANISHES"
    assert tau_vanishing(dga, k, bound=1)[0] == "NONZERO"


def test_hopf_torsion():
    _, _, dga = corpus_entry("hopf")
    assert tau_aug(dga) == 1
    assert len(augmentations(dga, 1)) == 1
    status, witness = tau_vanishing(dga, 2, bound=1)
    assert status == "VANISHES"
    assert dga.d(witness) == dga.one()


def test_unknot_unaugmented():
    _, _, dga = corpus_entry("unknot")
    assert tau_aug(dga) in (0, INF) or isinstance(tau_aug(dga), int)
    assert dga.render(dga.differentials["w_c1"]) in ("1 + T1", "T1 + 1")


@pytest.mark.parametrize("name", ["hopf", "trefoil", "polyfillable", "three_chain"])
def test_spectral_pages_stabilize(name):
    _, _, dga = corpus_entry(name)
    check_spectral_stabilization(dga)


@pytest.mark.parametrize("name", ["trefoil", "polyfillable"])
def test_fundamental_class_vanishes_on_diagonal(name):
    _, _, dga = corpus_entry(name)
    check_fundamental_class(dga)


def test_polyfillable_augmentation_tree():
    _, _, dga = corpus_entry("polyfillable")
    tree = augmentation_tree(dga)
    by_level = {}
    for lvl, cid in tree.vertices:
        by_level.setdefault(lvl, []).append(cid)
    assert len(by_level[1]) == 5
    assert len(by_level[2]) == 3
    # every level-2 class restricts to a level-1 class
    children = {c for c, _ in tree.edges}
    for v in tree.vertices:
        if v[0] == 2:
            assert v in children


def test_polyfillable_poincare_table():
    _, _, dga = corpus_entry("polyfillable")
    augs2 = augmentations(dga, 2)
    assert len(augs2) == 3
    for i, el in enumerate(augs2):
        for j, er in enumerate(augs2):
            p = polynomial_str(
                poincare_polynomial(bilinearized_complex(dga, el, er, 2)), ["t"]
            )
            assert p == ("2 + 2*t" if i == j else "1 + t")


def test_polyfillable_spectral_polynomial_factorization():
    _, _, dga = corpus_entry("polyfillable")
    augs2 = augmentations(dga, 2)
    for el in augs2:
        for er in augs2:
            cx = bilinearized_complex(dga, el, er, 2)
            p = poincare_polynomial(cx)
            pages = spectral_sequence(cx)
            spec = spectral_polynomial(pages)
            # expected (1 + x) * P(t), all mass at filtration level 1
            expected = {}
            for n, c in p.items():
                for r in (0, 1):
                    expected[(n, r, 1)] = c
            assert spec == expected


def test_bilinearized_respects_restriction():
    _, _, dga = corpus_entry("polyfillable")
    for eps in augmentations(dga, 2):
        r = eps.restrict(dga, 1)
        p2 = poincare_polynomial(bilinearized_complex(dga, eps, eps, 2))
        p1 = poincare_polynomial(bilinearized_complex(dga, r, r, 1))
        assert p2 == p1
