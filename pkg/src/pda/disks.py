"""Combinatorial holomorphic disks in a Lagrangian-projection diagram.

A disk is an immersed convex-corner polygon: a closed boundary walk along
diagram arcs, turning at crossings either straight through or by a convex
corner, with the disk on the left.  Validity is checked combinatorially:

1. every arc is traversed in a single direction, at most `limit` times;
2. face winding numbers (integrated across arcs from the outer face) lie
   in [0, limit] and vanish on the outer face;
3. at each crossing the interior sheet count w_v, recovered from each
   quadrant as (winding) - (boundary passes covering it) - (corners at
   it), is the same for all four quadrants and non-negative;
4. the Euler count Sum_v w_v - Sum_arcs min(n_left, n_right) + Sum_f n_f
   equals 1 (this excludes branched covers such as doubled monogons);
5. at least one corner is positive.

Two independent enumeration routes are provided: a depth-first boundary
walk (`enumerate_disks`) and an exhaustive sweep over face-multiplicity
vectors (`oracle_enumerate`).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .diagram import Dart, LagrangianDiagram

Step = Tuple[Dart, str]  # traverse dart, then transition "s"|"c"


@dataclass(frozen=True)
class DiskLimits:
    max_face_multiplicity: int = 8
    max_nodes: int = 2_000_000  # DFS node budget before truncation


@dataclass(frozen=True)
class Disk:
    """Canonical boundary data of one immersed polygon."""

    steps: Tuple[Step, ...]  # canonical (lexicographically least) rotation
    corners: Tuple[Tuple[str, int], ...]  # (chord id, Reeb sign) in walk order
    run_components: Tuple[str, ...]  # component of the arc run after corner i
    t_exponents: Tuple[int, ...]
    star_exponents: Tuple[int, ...]

    @property
    def positive_corners(self) -> Tuple[str, ...]:
        return tuple(c for c, s in self.corners if s == 1)

    @property
    def negative_corners(self) -> Tuple[str, ...]:
        return tuple(c for c, s in self.corners if s == -1)


@dataclass
class DiskSet:
    disks: List[Disk]
    truncated: bool = False


def _canonical(steps: Sequence[Step]) -> Tuple[Step, ...]:
    steps = tuple(steps)
    return min(steps[i:] + steps[:i] for i in range(len(steps)))


def _winding(d: LagrangianDiagram, usage: Dict[Dart, int]) -> Optional[List[int]]:
    """Integrate face winding numbers from the outer face; None if inconsistent."""
    n = [None] * len(d.faces)
    n[d.outer_face] = 0
    frontier = [d.outer_face]
    # jump across arc a: left(+dart) = right(+dart) + net(+dir traversals)
    while frontier:
        f = frontier.pop()
        for arc in d.arcs:
            left = d.face_of_dart[(arc.index, 1)]
            right = d.face_of_dart[(arc.index, -1)]
            net = usage.get((arc.index, 1), 0) - usage.get((arc.index, -1), 0)
            for src, dst, delta in ((right, left, net), (left, right, -net)):
                if src == f:
                    val = n[f] + delta
                    if n[dst] is None:
                        n[dst] = val
                        frontier.append(dst)
                    elif n[dst] != val:
                        return None
    if any(v is None for v in n):
        return None
    return n  # type: ignore[return-value]


def validate_walk(
    d: LagrangianDiagram, steps: Sequence[Step], limit: int
) -> Optional[Disk]:
    """Check walk validity and build the Disk, or return None."""
    usage: Dict[Dart, int] = {}
    for dart, _t in steps:
        usage[dart] = usage.get(dart, 0) + 1
    for (arc, _dir), _cnt in usage.items():
        if (arc, 1) in usage and (arc, -1) in usage:
            return None
        if usage.get((arc, 1), 0) + usage.get((arc, -1), 0) > limit:
            return None
    winding = _winding(d, usage)
    if winding is None or winding[d.outer_face] != 0:
        return None
    if any(v < 0 or v > limit for v in winding):
        return None

    # per-crossing pass/corner tallies
    passes: Dict[Tuple[str, int], int] = {}  # (crossing, incoming stub) -> count
    corners_at: Dict[Tuple[str, int], int] = {}  # quadrant -> count
    m = len(steps)
    for i, (dart, trans) in enumerate(steps):
        cid, k = d.dart_head(dart)
        nxt = steps[(i + 1) % m][0]
        if trans == "s":
            expect = d.straight_successor(dart)
            if nxt != expect:
                return None
            passes[(cid, k)] = passes.get((cid, k), 0) + 1
        else:
            expect, quad = d.corner_successor(dart)
            if nxt != expect:
                return None
            corners_at[quad] = corners_at.get(quad, 0) + 1

    qface = quadrant_faces(d)
    total_w = 0
    for c in d.crossings:
        w_vals = set()
        for q in range(4):
            cover = corners_at.get((c.id, q), 0)
            for k in range(4):
                if q in ((k + 2) % 4, (k + 3) % 4):
                    cover += passes.get((c.id, k), 0)
            w_vals.add(winding[qface[(c.id, q)]] - cover)
        if len(w_vals) != 1:
            return None
        w = w_vals.pop()
        if w < 0:
            return None
        total_w += w

    edge_sum = 0
    for arc in d.arcs:
        left = winding[d.face_of_dart[(arc.index, 1)]]
        right = winding[d.face_of_dart[(arc.index, -1)]]
        edge_sum += min(left, right)
    if total_w - edge_sum + sum(winding) != 1:
        return None

    return _build_disk(d, _canonical(steps))


def quadrant_faces(d: LagrangianDiagram) -> Dict[Tuple[str, int], int]:
    """Map each quadrant (crossing, k) to the face it belongs to."""
    out: Dict[Tuple[str, int], int] = {}
    for dart, face in d.face_of_dart.items():
        _nxt, quad = d.corner_successor(dart)
        out[quad] = face
    return out


def _build_disk(d: LagrangianDiagram, steps: Tuple[Step, ...]) -> Optional[Disk]:
    corners: List[Tuple[str, int]] = []
    corner_positions: List[int] = []
    m = len(steps)
    for i, (dart, trans) in enumerate(steps):
        if trans == "c":
            cid, k = d.dart_head(dart)
            quad = (cid, (k + 3) % 4)
            corners.append((cid, d.reeb_sign(quad)))
            corner_positions.append(i)
    if not any(s == 1 for _c, s in corners):
        return None
    # run after corner j: darts from step corner_positions[j]+1 .. next corner
    runs: List[str] = []
    for j, pos in enumerate(corner_positions):
        nxt_pos = corner_positions[(j + 1) % len(corner_positions)]
        i = (pos + 1) % m
        comp = d.arcs[steps[i][0][0]].component
        runs.append(comp)
        while i != (nxt_pos + 1) % m:
            if d.arcs[steps[i][0][0]].component != comp:
                return None  # straight runs stay on one component
            i = (i + 1) % m
    n_t = len(d.components) if d.options.get("h1_coefficients", True) else 0
    t_exp = [0] * n_t
    star_exp = [0] * len(d.components)
    for dart, _t in steps:
        arc = d.arcs[dart[0]]
        ti = d.t_index(arc.component)
        if arc.dot and n_t:
            t_exp[ti] += dart[1]
        if arc.star:
            star_exp[ti] += dart[1]
    return Disk(
        steps=steps,
        corners=tuple(corners),
        run_components=tuple(runs),
        t_exponents=tuple(t_exp),
        star_exponents=tuple(star_exp),
    )


# ---------------------------------------------------------------------------
# Fast path: depth-first boundary walk


def enumerate_disks(d: LagrangianDiagram, limits: DiskLimits = DiskLimits()) -> DiskSet:
    limit = limits.max_face_multiplicity
    if limit < 1:
        raise ValueError("max_face_multiplicity must be >= 1")
    found: Dict[Tuple[Step, ...], Disk] = {}
    budget = [limits.max_nodes]
    truncated = [False]
    max_len = len(d.arcs) * limit
    # a traversed dart has the disk on its left, so its left face has winding
    # >= 1 and can never be the outer face
    banned = {
        dart for dart in d.face_of_dart if d.face_of_dart[dart] == d.outer_face
    }

    def dfs(seed: Dart, dart: Dart, steps: List[Step], usage: Dict[Dart, int]):
        if budget[0] <= 0:
            truncated[0] = True
            return
        budget[0] -= 1
        if len(steps) >= max_len:
            return
        arc, direction = dart
        if usage.get((arc, -direction), 0):
            return
        if usage.get(dart, 0) >= limit:
            return
        usage[dart] = usage.get(dart, 0) + 1
        for trans in ("s", "c"):
            if trans == "s":
                nxt = d.straight_successor(dart)
            else:
                nxt, _quad = d.corner_successor(dart)
            steps.append((dart, trans))
            if nxt == seed:
                disk = validate_walk(d, steps, limit)
                if disk is not None:
                    found.setdefault(disk.steps, disk)
            # every disk is reachable from its lexicographically least dart,
            # so never walk onto a dart below the seed
            if nxt >= seed and nxt not in banned:
                dfs(seed, nxt, steps, usage)
            steps.pop()
        usage[dart] -= 1
        if not usage[dart]:
            del usage[dart]

    for arc in d.arcs:
        for direction in (1, -1):
            seed = (arc.index, direction)
            if seed not in banned:
                dfs(seed, seed, [], {})
    disks = [found[k] for k in sorted(found)]
    return DiskSet(disks=disks, truncated=truncated[0])


# ---------------------------------------------------------------------------
# Oracle: exhaustive face-multiplicity sweep


def oracle_enumerate(d: LagrangianDiagram, limits: DiskLimits = DiskLimits()) -> DiskSet:
    limit = limits.max_face_multiplicity
    if limit < 1:
        raise ValueError("max_face_multiplicity must be >= 1")
    bounded = [f for f in range(len(d.faces)) if f != d.outer_face]
    found: Dict[Tuple[Step, ...], Disk] = {}
    for values in itertools.product(range(limit + 1), repeat=len(bounded)):
        if not any(values):
            continue
        winding = [0] * len(d.faces)
        for f, v in zip(bounded, values):
            winding[f] = v
        for disk in _disks_for_multiplicity(d, winding, limit):
            found.setdefault(disk.steps, disk)
    disks = [found[k] for k in sorted(found)]
    return DiskSet(disks=disks, truncated=False)


def _disks_for_multiplicity(
    d: LagrangianDiagram, winding: List[int], limit: int
) -> List[Disk]:
    # arc usage and direction forced by winding jumps
    usage: Dict[int, int] = {}
    direction: Dict[int, int] = {}
    for arc in d.arcs:
        left = winding[d.face_of_dart[(arc.index, 1)]]
        right = winding[d.face_of_dart[(arc.index, -1)]]
        t = left - right
        usage[arc.index] = abs(t)
        direction[arc.index] = 1 if t > 0 else (-1 if t < 0 else 0)

    qface = quadrant_faces(d)
    # stub in/out usage
    def stub_flow(cid: str, k: int) -> Tuple[int, int]:
        arc_idx, end = d.stub_to_end[(cid, k)]
        u = usage[arc_idx]
        if not u:
            return (0, 0)
        incoming = (end == "head") == (direction[arc_idx] == 1)
        return (u, 0) if incoming else (0, u)

    per_vertex: List[List[dict]] = []
    for c in d.crossings:
        flows = [stub_flow(c.id, k) for k in range(4)]
        nq = [winding[qface[(c.id, q)]] for q in range(4)]
        solutions = []
        max_p = max([f[0] for f in flows] + [0])
        for p in itertools.product(range(max_p + 1), repeat=4):
            cs = []
            ok = True
            for q in range(4):
                # corner at q: incoming stub q+1, outgoing stub q
                cq = flows[q][1] - p[(q + 2) % 4]
                if cq < 0 or flows[(q + 1) % 4][0] - p[(q + 1) % 4] != cq:
                    ok = False
                    break
                cs.append(cq)
            if not ok:
                continue
            ws = {nq[q] - p[(q + 2) % 4] - p[(q + 1) % 4] - cs[q] for q in range(4)}
            if len(ws) != 1:
                continue
            w = ws.pop()
            if w < 0:
                continue
            solutions.append({"p": p, "c": tuple(cs), "w": w})
        if not solutions:
            return []
        per_vertex.append(solutions)

    edge_sum = 0
    for arc in d.arcs:
        left = winding[d.face_of_dart[(arc.index, 1)]]
        right = winding[d.face_of_dart[(arc.index, -1)]]
        edge_sum += min(left, right)
    total_n = sum(winding)

    out: List[Disk] = []
    for combo in itertools.product(*per_vertex):
        if sum(s["w"] for s in combo) - edge_sum + total_n != 1:
            continue
        out.extend(_link_traversals(d, usage, direction, combo, limit))
    return out


def _link_traversals(
    d: LagrangianDiagram,
    usage: Dict[int, int],
    direction: Dict[int, int],
    combo: Sequence[dict],
    limit: int,
) -> List[Disk]:
    """Connect individual arc traversals through each crossing's transitions.

    Emits a disk for every strand-level linking forming a single closed walk.
    """
    # traversal slots per arc
    slots: List[Tuple[int, int]] = []  # (arc index, copy)
    slot_id: Dict[Tuple[int, int], int] = {}
    for arc in d.arcs:
        for j in range(usage[arc.index]):
            slot_id[(arc.index, j)] = len(slots)
            slots.append((arc.index, j))
    if not slots:
        return []

    # per crossing: transition instances (in stub, out stub, kind)
    per_vertex_choices: List[List[List[Tuple[int, int, int, str]]]] = []
    for c, sol in zip(d.crossings, combo):
        instances: List[Tuple[int, int, str]] = []
        for k in range(4):
            for _ in range(sol["p"][k]):
                instances.append((k, (k + 2) % 4, "s"))
        for q in range(4):
            for _ in range(sol["c"][q]):
                instances.append(((q + 1) % 4, q, "c"))
        # incoming slots available per stub
        in_slots: Dict[int, List[int]] = {k: [] for k in range(4)}
        out_slots: Dict[int, List[int]] = {k: [] for k in range(4)}
        for k in range(4):
            arc_idx, end = d.stub_to_end[(c.id, k)]
            u = usage[arc_idx]
            if not u:
                continue
            incoming = (end == "head") == (direction[arc_idx] == 1)
            target = in_slots[k] if incoming else out_slots[k]
            for j in range(u):
                target.append(slot_id[(arc_idx, j)])
        # enumerate assignments of instances to (in slot, out slot)
        assignments: List[List[Tuple[int, int, int, str]]] = [[]]
        for k in range(4):
            insts_k = [(i, inst) for i, inst in enumerate(instances) if inst[0] == k]
            if len(insts_k) != len(in_slots[k]):
                assignments = []
                break
            new_assignments = []
            for perm in itertools.permutations(in_slots[k]):
                for base in assignments:
                    new_assignments.append(
                        base + [
                            (s_in, inst[1], i, inst[2])
                            for s_in, (i, inst) in zip(perm, insts_k)
                        ]
                    )
            assignments = new_assignments
        if not assignments:
            return []
        # now assign out slots per stub
        full_choices: List[List[Tuple[int, int, int, str]]] = []
        for base in assignments:
            partial: List[List[Tuple[int, int, int, str]]] = [[]]
            for k in range(4):
                insts_k = [t for t in base if t[1] == k]
                if len(insts_k) != len(out_slots[k]):
                    partial = []
                    break
                nxt_partial = []
                for perm in itertools.permutations(out_slots[k]):
                    for p_base in partial:
                        nxt_partial.append(
                            p_base + [
                                (t[0], s_out, t[2], t[3])
                                for s_out, t in zip(perm, insts_k)
                            ]
                        )
                partial = nxt_partial
            full_choices.extend(partial)
        per_vertex_choices.append(full_choices)

    out: List[Disk] = []
    seen: Set[Tuple[Step, ...]] = set()
    for choice in itertools.product(*per_vertex_choices):
        succ: Dict[int, Tuple[int, str]] = {}
        for vertex_assign in choice:
            for s_in, s_out, _i, kind in vertex_assign:
                succ[s_in] = (s_out, kind)
        if len(succ) != len(slots):
            continue
        # walk the single cycle
        start = 0
        steps: List[Step] = []
        cur = start
        ok = True
        for _ in range(len(slots)):
            arc_idx, _copy = slots[cur]
            dart = (arc_idx, direction[arc_idx])
            nxt, kind = succ[cur]
            steps.append((dart, kind))
            cur = nxt
            if cur == start:
                break
        if cur != start or len(steps) != len(slots):
            continue
        canon = _canonical(steps)
        if canon in seen:
            continue
        seen.add(canon)
        disk = validate_walk(d, canon, limit)
        if disk is not None:
            out.append(disk)
    return out


# ---------------------------------------------------------------------------
# Admissibility


def is_admissible(disk: Disk, d: LagrangianDiagram) -> bool:
    """Splitting-arc test on the disk's boundary word.

    For every pair of boundary runs lying on pieces with equal labels, the
    splitting arc joining them cuts the corners into two sides; at least
    one side must contain no punctures or only negative piece-pure chords.
    """
    chords = {ch.id: ch for ch in d.chords()}
    m = len(disk.corners)
    if m == 0:
        return True
    pieces = [d.partition[c] for c in disk.run_components]

    def side_ok(side: Sequence[int]) -> bool:
        if not side:
            return True
        for i in side:
            cid, sign = disk.corners[i]
            ch = chords[cid]
            if sign == 1 or not ch.piece_pure:
                return False
        return True

    for i in range(m):
        for j in range(i + 1, m):
            if pieces[i] != pieces[j]:
                continue
            # runs i and j; side A = corners i+1..j, side B = corners j+1..i
            side_a = list(range(i + 1, j + 1))
            side_b = [x % m for x in range(j + 1, i + 1 + m)]
            if not (side_ok(side_a) or side_ok(side_b)):
                return False
    return True


def index_defect(disk: Disk, d: LagrangianDiagram) -> int:
    """(Sum_+ g - Sum_- g + deg of H1 coefficient) - (2 - #positive corners)."""
    chords = {ch.id: ch for ch in d.chords()}
    total = 0
    m_plus = 0
    for cid, sign in disk.corners:
        g = chords[cid].grading
        if sign == 1:
            total += g
            m_plus += 1
        else:
            total -= g
    total += sum(e * td for e, td in zip(disk.t_exponents, d.t_degrees()))
    return total - (2 - m_plus)
