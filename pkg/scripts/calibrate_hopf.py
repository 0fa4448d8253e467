#!/usr/bin/env python3
"""Search for a Hopf-link diagram whose disk counts match the target table.

Target disk set (up to extra disks irrelevant to the generator words):
  c3 monogons with coefficients 1 and T2^-1,
  c4 monogons with coefficients 1 and T1,
  exactly one bigon with positive corners {c1, c2}, coefficient T2^-1,
  a triangle c3+ c1- c2-.
"""

import itertools
import sys

sys.path.insert(0, "src")

from pda.diagram import LagrangianDiagram, DiagramError
from pda.disks import DiskLimits, enumerate_disks


def candidates():
    base1 = [["c4", "over"], ["c1", "under"], ["c2", "over"], ["c4", "under"]]
    base2 = [["c3", "over"], ["c2", "under"], ["c1", "over"], ["c3", "under"]]
    for perm1 in itertools.permutations(base1[1:]):
        v1 = [base1[0]] + list(perm1)
        for perm2 in itertools.permutations(base2[1:]):
            v2 = [base2[0]] + list(perm2)
            yield v1, v2


def main():
    hits = []
    for v1, v2 in candidates():
        for dot1, dot2 in itertools.product(range(4), repeat=2):
            spec = {
                "components": [
                    {"id": "L1", "rot": 0, "visits": v1},
                    {"id": "L2", "rot": 0, "visits": v2},
                ],
                "crossings": [
                    {"id": "c1", "sign": 1, "grading": 0},
                    {"id": "c2", "sign": 1, "grading": 0},
                    {"id": "c3", "sign": -1, "grading": 1},
                    {"id": "c4", "sign": -1, "grading": 1},
                ],
                "markers": {
                    "L1": {"star": 0, "dot": dot1},
                    "L2": {"star": 0, "dot": dot2},
                },
                "partition": {"L1": 1, "L2": 2},
                "options": {
                    "grading": "z",
                    "h1_coefficients": True,
                    "outer": {"component": "L1", "arc": 0, "side": "left"},
                },
            }
            try:
                d0 = LagrangianDiagram.from_json(spec)
            except DiagramError:
                continue
            for outer_face in range(len(d0.faces)):
                arc0 = d0.faces[outer_face][0]
                arc = d0.arcs[arc0[0]]
                spec["options"]["outer"] = {
                    "component": arc.component,
                    "arc": arc.position,
                    "side": "left" if arc0[1] == 1 else "right",
                }
                d = LagrangianDiagram.from_json(spec)
                disks = enumerate_disks(d, DiskLimits(max_face_multiplicity=2)).disks
                mono3 = sorted(
                    dk.t_exponents for dk in disks if dk.corners == (("c3", 1),)
                )
                mono4 = sorted(
                    dk.t_exponents for dk in disks if dk.corners == (("c4", 1),)
                )
                bigons = [
                    dk
                    for dk in disks
                    if sorted(dk.positive_corners) == ["c1", "c2"]
                    and not dk.negative_corners
                ]
                if mono3 != [(0, -1), (0, 0)] or mono4 != [(1, 0), (0, 0)][::-1]:
                    continue
                if len(bigons) != 1 or bigons[0].t_exponents != (0, -1):
                    continue
                hits.append((v1, v2, dot1, dot2, spec["options"]["outer"], len(disks)))
                print("HIT", v1, v2, dot1, dot2, spec["options"]["outer"])
                for dk in disks:
                    print("   ", dk.corners, dk.t_exponents)
    print(len(hits), "hits")


if __name__ == "__main__":
    main()
