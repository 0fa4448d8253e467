import pytest

from pda.disks import DiskLimits, enumerate_disks

from helpers import CORPUS, corpus_entry, check_disk_routes_agree


@pytest.mark.parametrize("name", CORPUS)
def test_fast_path_matches_oracle(name):
    d, ds, _ = corpus_entry(name)
    check_disk_routes_agree(d, ds)


def test_unknot_disks_golden():
    _, ds, _ = corpus_entry("unknot")
    assert len(ds.disks) == 2
    assert sorted(tuple(k.t_exponents) for k in ds.disks) == [(0,), (1,)]
    for k in ds.disks:
        assert k.corners == (("c1", 1),)


def test_hopf_disk_count():
    _, ds, _ = corpus_entry("hopf")
    assert len(ds.disks) == 7


def test_node_budget_marks_truncation():
    d, _, _ = corpus_entry("polyfillable")
    ds = enumerate_disks(d, DiskLimits(max_face_multiplicity=2, max_nodes=10))
    assert ds.truncated


def test_every_disk_has_positive_corner():
    for name in CORPUS:
        _, ds, _ = corpus_entry(name)
        for k in ds.disks:
            assert k.positive_corners
