"""Search for a diagram pair related by a triple-point move.

Scans corpus diagrams for triangular faces, flips each by swapping the two
crossing visits along each of the three bounding strands, and keeps flips
whose assembled algebra is conjugate to the original via Phi = Id + mu_u
for some labeling (c, b, a) of the triangle chords.
"""
import itertools, json, sys

from pda.diagram import LagrangianDiagram
from pda.disks import DiskLimits
from pda.build import assemble_pda
from pda.moves import MoveSpec, verify_triple_point, MoveError


def triangle_faces(d):
    comp_by_id = {c.id: c for c in d.components}
    out = []
    for f, orbit in enumerate(d.faces):
        if len(orbit) != 3 or f == d.outer_face:
            continue
        arcs = [d.arcs[dart[0]] for dart in orbit]
        spots = [(a.component, a.position) for a in arcs]
        crossings, touched = set(), set()
        for a in arcs:
            v = comp_by_id[a.component].visits
            n = len(v)
            crossings.add(v[a.position][0])
            crossings.add(v[(a.position + 1) % n][0])
            touched.add((a.component, a.position))
            touched.add((a.component, (a.position + 1) % n))
        if len(crossings) == 3 and len(touched) == 6:
            out.append((f, spots, sorted(crossings)))
    return out


def flipped_spec(spec, d, spots):
    new = json.loads(json.dumps(spec))
    for comp_id, i in spots:
        comp = next(c for c in new["components"] if c["id"] == comp_id)
        v = comp["visits"]
        n = len(v)
        v[i], v[(i + 1) % n] = v[(i + 1) % n], v[i]
    return new


def main(paths):
    limits = DiskLimits(max_face_multiplicity=2)
    for path in paths:
        spec = json.load(open(path))
        d = LagrangianDiagram.from_json(spec)
        dga = assemble_pda(d, limits)
        for f, spots, tri in triangle_faces(d):
            try:
                new = flipped_spec(spec, d, spots)
                new["name"] = spec.get("name", "diagram") + "-flipped"
                d2 = LagrangianDiagram.from_json(new)
                dga2 = assemble_pda(d2, limits)
            except Exception as e:
                print(path, "face", f, tri, "flip invalid:", e)
                continue
            corr = {c["id"]: c["id"] for c in spec["crossings"]}
            for mt in ("I", "II"):
                for c, b, a in itertools.permutations(tri):
                    for direction in ("fwd", "rev"):
                        dm, dp = (dga, dga2) if direction == "fwd" else (dga2, dga)
                        ddm = d if direction == "fwd" else d2
                        ms = MoveSpec(mt, corr, triangle=(c, b, a))
                        try:
                            rep = verify_triple_point(dm, dp, ddm, ms)
                        except MoveError as e:
                            continue
                        if rep.ok:
                            print("HIT", path, "face", f, mt, (c, b, a), direction)
                            for s in rep.stages: print("   ", s)
                            for s, im in sorted(rep.phi.items()):
                                print("    Phi", s, "=", im)
                            with open("/tmp/triple_hit.json", "w") as fo:
                                json.dump({"minus": spec if direction == "fwd" else new,
                                           "plus": new if direction == "fwd" else spec,
                                           "triangle": [c, b, a],
                                           "move_type": mt}, fo, indent=1)


if __name__ == "__main__":
    main(sys.argv[1:])
