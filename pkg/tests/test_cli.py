import json

from click.testing import CliRunner

from pda.cli import main
from pda.families import torsion_family

from helpers import DATA

MOVES = DATA / "moves"


def run(*args):
    return CliRunner().invoke(main, [str(a) for a in args])


def test_compute_hopf():
    r = run("compute", DATA / "hopf.json")
    assert r.exit_code == 0
    assert "d = 1 + T1" in r.output
    assert "checks: ok" in r.output


def test_missing_file_exits_1():
    r = run("compute", "/does/not/exist.json")
    assert r.exit_code == 1


def test_bad_presentation_exits_2(tmp_path):
    bad = {
        "generators": [
            {"symbol": "a", "degree": 1, "level": 1},
            {"symbol": "b", "degree": 0, "level": 1},
            {"symbol": "c", "degree": -1, "level": 1},
        ],
        "differentials": {"a": "b", "b": "c"},
        "max_level": 1,
    }
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(bad))
    r = run("compute", p)
    assert r.exit_code == 2


def test_json_output_is_byte_stable():
    a = run("compute", DATA / "polyfillable.json", "--max-multiplicity", 2,
            "--format", "json")
    b = run("compute", DATA / "polyfillable.json", "--max-multiplicity", 2,
            "--format", "json")
    assert a.exit_code == b.exit_code == 0
    assert a.output == b.output
    data = json.loads(a.output)
    assert data["schema_version"] == 1
    assert len(data["generators"]) == 14


def test_invariants_on_presentation(tmp_path):
    p = tmp_path / "torsion3.json"
    torsion_family(3).save(p)
    r = run("invariants", p, "--torsion-bound", 1)
    assert r.exit_code == 0
    assert "tau_aug: 3" in r.output
    assert "vanishing level: 4" in r.output


def test_augs_and_tree_and_poincare():
    r = run("augs", DATA / "polyfillable.json", "--max-multiplicity", 2,
            "--level", 1)
    assert r.exit_code == 0
    assert "5 augmentation(s)" in r.output
    r = run("tree", DATA / "polyfillable.json", "--max-multiplicity", 2)
    assert r.exit_code == 0
    assert "9 vertices, 8 edges" in r.output
    r = run("poincare", DATA / "polyfillable.json", "--max-multiplicity", 2)
    assert r.exit_code == 0
    assert "P[0,1] = 1 + t" in r.output
    assert "P[0,0] = 2 + 2*t" in r.output


def test_list_generators_and_dump_disks():
    r = run("list-generators", DATA / "hopf.json")
    assert r.exit_code == 0
    assert "w_c1_c2" in r.output
    r = run("dump-disks", DATA / "unknot.json")
    assert r.exit_code == 0
    assert "total: 2" in r.output


def test_verify_move_pass_and_mismatch(tmp_path):
    r = run("verify-move", MOVES / "triple_minus.json",
            MOVES / "triple_plus.json", MOVES / "triple_spec.json",
            "--max-multiplicity", 2)
    assert r.exit_code == 0
    assert "PASS" in r.output
    r = run("verify-move", MOVES / "double_minus.json",
            MOVES / "double_plus.json", MOVES / "double_spec.json",
            "--max-multiplicity", 2)
    assert r.exit_code == 0
    assert "final chain map verified" in r.output
    # mismatched spec: wrong pairing for the double move
    spec = json.load(open(MOVES / "double_spec.json"))
    spec["pair"] = ["c1", "c2"]
    p = tmp_path / "bad_spec.json"
    p.write_text(json.dumps(spec))
    r = run("verify-move", MOVES / "double_minus.json",
            MOVES / "double_plus.json", p, "--max-multiplicity", 2)
    assert r.exit_code == 1
