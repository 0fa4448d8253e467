import json

import pytest

from pda.build import assemble_pda
from pda.diagram import LagrangianDiagram
from pda.disks import DiskLimits
from pda.moves import MoveError, MoveSpec, double_point_phi, verify_triple_point

from helpers import DATA

MOVES = DATA / "moves"
LIMITS = DiskLimits(max_face_multiplicity=2)


def _dga(path):
    d = LagrangianDiagram.load(path)
    return d, assemble_pda(d, LIMITS)


def test_triple_point_pair_verifies():
    dm, am = _dga(MOVES / "triple_minus.json")
    _, ap = _dga(MOVES / "triple_plus.json")
    spec = MoveSpec.load(MOVES / "triple_spec.json")
    report = verify_triple_point(am, ap, dm, spec)
    assert report.ok, report.errors
    nontrivial = [s for s, img in report.phi.items() if "+" in img]
    assert nontrivial  # the chain map is not the identity


def test_triple_point_phi_is_involutive():
    dm, am = _dga(MOVES / "triple_minus.json")
    spec = MoveSpec.load(MOVES / "triple_spec.json")
    from pda.moves import triangle_morphism

    images = triangle_morphism(am, dm, spec.triangle)
    for s in am.symbols():
        once = am.apply_morphism(images, am.gen(s))
        twice = am.apply_morphism(images, once)
        assert twice == am.gen(s)


def test_double_point_pair_verifies():
    _, am = _dga(MOVES / "double_minus.json")
    _, ap = _dga(MOVES / "double_plus.json")
    spec = MoveSpec.load(MOVES / "double_spec.json")
    report, stabilized, images = double_point_phi(am, ap, spec)
    assert report.ok, report.errors
    assert "final chain map verified on every generator" in report.stages
    assert am.check_chain_map(stabilized, images) == []


def test_mismatched_correspondence_rejected():
    dm, am = _dga(MOVES / "triple_minus.json")
    _, ap = _dga(MOVES / "triple_plus.json")
    spec = MoveSpec.load(MOVES / "triple_spec.json")
    bad = MoveSpec(
        spec.move_type,
        {k: k for k in list(spec.correspondence)[:-1]},
        triangle=spec.triangle,
    )
    with pytest.raises(MoveError):
        verify_triple_point(am, ap, dm, bad)


def test_move_spec_round_trip(tmp_path):
    spec = MoveSpec.load(MOVES / "double_spec.json")
    p = tmp_path / "spec.json"
    spec.save(p)
    again = MoveSpec.load(p)
    assert again.to_json() == spec.to_json()
