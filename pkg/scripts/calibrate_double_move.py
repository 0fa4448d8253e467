"""Search for a two-component diagram pair related by a double-point move.

The plus diagram is the bundled two-fish link with homology coefficients
turned off.  The minus diagram adds one finger of L1 pushed across an arc of
L2, creating a mixed chord pair (a, b).  The search runs over insertion arcs,
insertion orders, and the grading of b, keeping configurations for which the
full chain-map construction verifies.
"""
import itertools, json, sys

from pda.diagram import LagrangianDiagram
from pda.disks import DiskLimits
from pda.build import assemble_pda
from pda.moves import MoveSpec, double_point_phi

PLUS = {
  "name": "double-move-plus",
  "components": [
    {"id":"L1","rot":0,"visits":[["c4","over"],["c2","over"],["c1","under"],["c4","under"]]},
    {"id":"L2","rot":0,"visits":[["c3","over"],["c3","under"],["c2","under"],["c1","over"]]}],
  "crossings": [
    {"id":"c1","sign":1,"grading":0},{"id":"c2","sign":1,"grading":0},
    {"id":"c3","sign":-1,"grading":1},{"id":"c4","sign":-1,"grading":1}],
  "markers": {"L1":{"star":0,"dot":0},"L2":{"star":0,"dot":2}},
  "partition": {"L1":1,"L2":2},
  "options": {"grading":"z","h1_coefficients":False,
              "outer":{"component":"L1","arc":0,"side":"right"}}}

ACTIONS = {"c1": 2.0, "c2": 2.2, "c3": 4.0, "c4": 4.5, "a": 1.1, "b": 1.0}

def main():
    d_plus = LagrangianDiagram.from_json(PLUS)
    dga_plus = assemble_pda(d_plus, DiskLimits(max_face_multiplicity=2))
    l1 = PLUS["components"][0]["visits"]
    l2 = PLUS["components"][1]["visits"]
    hits = 0
    for p1, o1, p2, o2, gb in itertools.product(
            range(4), (0, 1), range(4), (0, 1), (-1, 0, 1)):
        ga = gb + 1
        ins1 = [["a","over"],["b","over"]] if o1 == 0 else [["b","over"],["a","over"]]
        ins2 = [["a","under"],["b","under"]] if o2 == 0 else [["b","under"],["a","under"]]
        spec = json.loads(json.dumps(PLUS))
        spec["name"] = "double-move-minus"
        spec["components"][0]["visits"] = l1[:p1+1] + ins1 + l1[p1+1:]
        spec["components"][1]["visits"] = l2[:p2+1] + ins2 + l2[p2+1:]
        spec["crossings"] += [
            {"id":"a","sign": 1 if ga % 2 == 0 else -1,"grading": ga},
            {"id":"b","sign": 1 if gb % 2 == 0 else -1,"grading": gb}]
        try:
            d_minus = LagrangianDiagram.from_json(spec)
            dga_minus = assemble_pda(d_minus, DiskLimits(max_face_multiplicity=2))
        except Exception:
            continue
        mspec = MoveSpec(move_type="double",
                         correspondence={c: c for c in ("c1","c2","c3","c4")},
                         pair=("a","b"), actions=ACTIONS)
        try:
            report, S, images = double_point_phi(dga_minus, dga_plus, mspec)
        except Exception as e:
            continue
        if report.ok:
            hits += 1
            print("HIT", p1, o1, p2, o2, "gb", gb, flush=True)
            if hits == 1:
                with open("/tmp/double_hit.json","w") as f:
                    json.dump(spec, f, indent=1)
                for s in report.stages: print("   ", s)
                for s, im in report.phi.items(): print("    Phi", s, "=", im)
    print("hits", hits)

if __name__ == "__main__":
    main()
