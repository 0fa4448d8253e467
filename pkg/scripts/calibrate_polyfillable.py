"""Search for the two-component diagram realizing the reference presentation.

Component K is the 5-crossing knot found by calibrate_trefoil.py.  Component U is
a one-crossing fish whose body encircles the crossing a1, meeting the four arcs of
K adjacent to a1 in four mixed crossings.  The search runs over the assignment of
the four mixed chord types to those arcs, the order in which U meets them, and the
kink orientation, comparing the assembled differential table against the bundled
reference presentation.
"""
import itertools, json, sys

from pda.diagram import LagrangianDiagram
from pda.disks import DiskLimits
from pda.build import assemble_pda
from pda.algebra import FreeMfDGA

REF = FreeMfDGA.load("src/pda/data/polyfillable_presentation.json")

# chord types: (name-in-reference, over-component, sign, grading)
TYPES = [
    ("c12_1", "U", 1, 0),
    ("c21_1", "K", -1, -1),
    ("c12_2", "U", -1, 1),
    ("c21_2", "K", 1, 0),
]

RENAMES = {"a1": "c11_1", "a2": "c11_2", "a3": "c11_3", "q4": "c11_4", "q5": "c11_5", "u": "c22_1"}


def ref_table():
    # reference differentials as {gen-word-tuple: set of monomial word-tuples}
    out = {}
    for g in REF.generators:
        el = REF.differentials[g.symbol]
        terms = set()
        for word, exps in el.monomials():
            terms.add(tuple(tuple(REF.generator(s).word) for s in word))
        out[tuple(g.word)] = (g.degree, terms)
    return out


REF_TABLE = ref_table()


def my_table(dga, qswap):
    ren = dict(RENAMES)
    if qswap:
        ren["q4"], ren["q5"] = "c11_5", "c11_4"
    def rw(word_chords):
        return tuple(ren.get(c, c) for c in word_chords)
    out = {}
    for g in dga.generators:
        el = dga.differentials[g.symbol]
        terms = set()
        for word, exps in el.monomials():
            terms.add(tuple(rw(dga.generator(s).word) for s in word))
        out[rw(g.word)] = (g.degree, terms)
    return out


def main():
    k_base = ["q4o","q4u","a3u","a2o","M3","a1u","M4","q5u","q5o","a3o","a2u","M8","a1o","M9"]
    hits = 0
    tried = 0
    for assign in itertools.permutations(range(4)):       # type index for M3,M4,M8,M9
        for order in itertools.permutations(range(4)):    # U meets arcs in this order (slots M3,M4,M8,M9)
            for kink in (("over","under"),("under","over")):
                tried += 1
                slot_names = {}
                for slot, ti in zip(("M3","M4","M8","M9"), assign):
                    slot_names[slot] = TYPES[ti]
                kv = []
                for v in k_base:
                    if v.startswith("M"):
                        name, overc, sg, gr = slot_names[v]
                        kv.append([name, "under" if overc == "U" else "over"])
                    else:
                        kv.append([v[:-1], "over" if v[-1] == "o" else "under"])
                uv = [["u", kink[0]], ["u", kink[1]]]
                for slot_i in order:
                    slot = ("M3","M4","M8","M9")[slot_i]
                    name, overc, sg, gr = slot_names[slot]
                    uv.append([name, "over" if overc == "U" else "under"])
                spec = {
                    "name": "polyfillable-candidate",
                    "components": [
                        {"id": "K", "rot": 0, "visits": kv},
                        {"id": "U", "rot": 0, "visits": uv},
                    ],
                    "crossings": [
                        {"id":"a1","sign":1,"grading":0},{"id":"a2","sign":1,"grading":0},
                        {"id":"a3","sign":1,"grading":0},{"id":"q4","sign":-1,"grading":1},
                        {"id":"q5","sign":-1,"grading":1},{"id":"u","sign":-1,"grading":1},
                    ] + [{"id": t[0], "sign": t[2], "grading": t[3]} for t in TYPES],
                    "markers": {"K": {"star": 0, "dot": 0}, "U": {"star": 0, "dot": 0}},
                    "partition": {"K": 1, "U": 2},
                    "options": {"grading": "z", "h1_coefficients": False,
                                "outer": {"component": "K", "arc": 0, "side": "right"}},
                }
                try:
                    d = LagrangianDiagram.from_json(spec)
                except Exception:
                    continue
                try:
                    dga = assemble_pda(d, DiskLimits(max_face_multiplicity=2))
                except Exception:
                    continue
                for qswap in (False, True):
                    if my_table(dga, qswap) == REF_TABLE:
                        hits += 1
                        print("HIT", assign, order, kink, "qswap", qswap)
                        with open("/tmp/poly_hit.json", "w") as f:
                            json.dump(spec, f, indent=1)
    print("tried", tried, "hits", hits)


if __name__ == "__main__":
    main()
