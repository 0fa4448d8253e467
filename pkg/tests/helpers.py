"""Shared fixtures and property checks used across the test modules."""

from __future__ import annotations

import pathlib
import random

import pda
from pda.build import assemble_pda
from pda.diagram import LagrangianDiagram
from pda.disks import (
    DiskLimits,
    enumerate_disks,
    index_defect,
    is_admissible,
    oracle_enumerate,
)
from pda.element import Element
from pda.inscription import inscribe
from pda.invariants import (
    augmentations,
    fundamental_class_zero,
    bilinearized_complex,
    spectral_sequence,
)
from pda.words import generate_words

DATA = pathlib.Path(pda.__file__).parent / "data"
CORPUS = ["unknot", "hopf", "trefoil", "double_twist", "three_chain", "polyfillable"]
LIMITS = DiskLimits(max_face_multiplicity=2)

_cache = {}


def corpus_entry(name):
    """(diagram, disk set, algebra) for one bundled diagram, cached."""
    if name not in _cache:
        d = LagrangianDiagram.load(DATA / f"{name}.json")
        ds = enumerate_disks(d, LIMITS)
        assert not ds.truncated
        _cache[name] = (d, ds, assemble_pda(d, LIMITS, disk_set=ds))
    return _cache[name]


# ---------------------------------------------------------------------------
# Property checks (each returns None, raising AssertionError on failure)


def check_algebra_axioms(dga):
    assert dga.check_square_zero() == []
    assert dga.check_degree() == []
    assert dga.check_filtration() == []


def check_inscription_outputs(d, disk_set, dga):
    """Every inscription yields admissible generator words no longer than w.

    Disks that inscribe into some admissible word must themselves pass the
    splitting-arc admissibility test and have index defect zero.
    """
    words = generate_words(d)
    by_chords = {w.chords: w for w in words}
    for disk in disk_set.disks:
        inscribes = False
        for w in words:
            res = inscribe(disk, w, d)
            if res is None:
                continue
            inscribes = True
            for out in res.words:
                assert out in by_chords, f"inadmissible output {out}"
                assert len(out) <= w.length
        if inscribes:
            assert is_admissible(disk, d)
            assert index_defect(disk, d) == 0


def check_quotient_chain_maps(dga):
    for mode in ("com", "cyc"):
        q = dga.quotient(mode)
        assert q.check_square_zero() == []
        if mode == "com":
            images = {s: q.gen(s) for s in dga.symbols()}
        else:
            rep = dga._cyclic_representatives()
            images = {s: q.gen(rep[s]) for s in dga.symbols()}
        assert dga.check_chain_map(q, images) == []


def check_disk_routes_agree(d, disk_set):
    oracle = oracle_enumerate(d, LIMITS)
    assert sorted(k.steps for k in disk_set.disks) == sorted(
        k.steps for k in oracle.disks
    )


def check_spectral_stabilization(dga):
    """Pages of every bilinearized complex stabilize by the piece count."""
    top = dga.max_level
    for eps in augmentations(dga, top):
        cx = bilinearized_complex(dga, eps, eps, top)
        pages = spectral_sequence(cx)
        assert pages.stable_page <= top


def check_fundamental_class(dga):
    top = dga.max_level
    for eps in augmentations(dga, top):
        assert fundamental_class_zero(dga, eps, eps, top)


def check_stab_homotopy(dga, n_samples=500, seed=0):
    """Id - projection = d h + h d on random monomials of the stabilization."""
    stab, _, _ = dga.stabilized(1, 1)
    stab, _, _ = stab.stabilized(0, stab.max_level)
    syms = stab.symbols()
    rng = random.Random(seed)
    for _ in range(n_samples):
        word = tuple(rng.choice(syms) for _ in range(rng.randint(0, 4)))
        x = Element.monomial(word, frozenset({(0,) * stab.n_t}), stab.n_t, stab.comm)
        lhs = x + stab.stab_projection(x)
        rhs = stab.d(stab.stab_homotopy(x)) + stab.stab_homotopy(stab.d(x))
        assert lhs == rhs, f"homotopy identity fails on {word}"
