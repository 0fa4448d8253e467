"""Inscription of disks into generator-word planar diagrams.

The planar diagram of a word w of length L is a circle with 2L slots:
chord slots at even positions 2j and capping-arc slots at odd positions
2j+1 (arc j runs from the end of chord j to the start of chord j+1 and
carries the piece label shared by those endpoints).

A disk u inscribes into w when its positive corners visit a subset of
w's chords in matching cyclic order with total wrap 1.  Between two
consecutive positive corners at word positions p and p' the disk runs
along capping arcs, touching down at its negative corners; each negative
chord cuts off one complement region.  Choosing which arc each touchdown
lands on distributes the untouched chords of w (covered by trivial
strips) among the negatives: the region of the s-th negative n_s spanning
arcs o_{s-1} < ... < o_s yields the output word
(n_s, w[o_{s-1}+1], ..., w[o_s]).  Piece labels of the disk's boundary
runs must match the arcs they land on, and the negative chords' endpoint
pieces must match the arcs holding their feet.

Output words are rotated to start at their least-index chord and sorted
by that index, where chords are indexed by first-encountered endpoint
walking the circle from chord slot 0: covered chords at their slot,
negatives at their first touchdown foot (feet on one arc ordered by the
disk's own boundary order).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .diagram import Chord, LagrangianDiagram
from .disks import Disk
from .words import CyclicWord


class InscriptionAmbiguityError(ValueError):
    """Distinct split choices produced distinct inscription results."""


@dataclass(frozen=True)
class InscriptionResult:
    words: Tuple[Tuple[str, ...], ...]  # ordered output words (chord tuples)
    t_exponents: Tuple[int, ...]


def inscribe(
    disk: Disk, word: CyclicWord, d: LagrangianDiagram
) -> Optional[InscriptionResult]:
    chords = {c.id: c for c in d.chords()}
    L = word.length
    pos_in_w = {c: j for j, c in enumerate(word.chords)}

    corners = disk.corners
    m = len(corners)
    plus_idx = [i for i in range(m) if corners[i][1] == 1]
    plus_chords = [corners[i][0] for i in plus_idx]
    if len(set(plus_chords)) != len(plus_chords):
        return None
    if any(c not in pos_in_w for c in plus_chords):
        return None
    p = [pos_in_w[c] for c in plus_chords]
    k = len(p)
    diffs = [((p[(t + 1) % k] - p[t]) % L) or L for t in range(k)]
    if sum(diffs) != L:
        return None

    def arc_piece(j: int) -> int:
        return chords[word.chords[j % L]].end_piece

    def run_piece(i: int) -> int:
        return d.partition[disk.run_components[i % m]]

    # Per-gap split enumeration.  Gap t runs from plus corner t to t+1.
    gap_options: List[List[List[dict]]] = []
    for t in range(k):
        i_t = plus_idx[t]
        i_next = plus_idx[(t + 1) % k]
        n_count = (i_next - i_t) % m or m
        negatives = [corners[(i_t + s) % m][0] for s in range(1, n_count)]
        runs = [(i_t + s) % m for s in range(n_count)]  # run s follows n_s
        r = len(negatives)
        Lt = diffs[t]
        base = p[t]
        options: List[List[dict]] = []
        if r == 0:
            if Lt == 1 and run_piece(runs[0]) == arc_piece(base):
                options.append([])
            gap_options.append(options)
            if not options:
                return None
            continue
        interior = [
            seq
            for seq in itertools.combinations_with_replacement(range(Lt), r - 1)
        ]
        for mids in interior:
            offs = [0] + list(mids) + [Lt - 1]
            if any(offs[s] > offs[s + 1] for s in range(r)):
                continue
            ok = True
            for s in range(r + 1):
                if run_piece(runs[s]) != arc_piece(base + offs[s]):
                    ok = False
                    break
            if not ok:
                continue
            regions = []
            for s in range(1, r + 1):
                n = chords[negatives[s - 1]]
                if n.end_piece != arc_piece(base + offs[s - 1]):
                    ok = False
                    break
                if n.start_piece != arc_piece(base + offs[s]):
                    ok = False
                    break
                covered = [
                    word.chords[(base + o) % L]
                    for o in range(offs[s - 1] + 1, offs[s] + 1)
                ]
                regions.append(
                    {
                        "negative": negatives[s - 1],
                        "covered": covered,
                        "arc_in": (base + offs[s - 1]) % L,
                        "arc_out": (base + offs[s]) % L,
                        "gap": t,
                        "index_in_gap": s,
                    }
                )
            if ok:
                options.append(regions)
        gap_options.append(options)
        if not options:
            return None

    results = set()
    for choice in itertools.product(*gap_options):
        regions = [reg for gap in choice for reg in gap]
        results.add(_order_output(regions, word, L))
    if len(results) > 1:
        raise InscriptionAmbiguityError(
            f"ambiguous inscription of disk {disk.corners} into {word.chords}: "
            f"{sorted(results)}"
        )
    words_out = results.pop()
    return InscriptionResult(words=words_out, t_exponents=disk.t_exponents)


def _order_output(
    regions: Sequence[dict], word: CyclicWord, L: int
) -> Tuple[Tuple[str, ...], ...]:
    """Rotate each region word to its least-index chord; sort words by it."""
    # encounter position of covered chord at word position j: (2j, -1, 0);
    # negative feet on arc j: (2j+1, gap, index in gap walk order)
    foot_rank: Dict[str, tuple] = {}
    for reg in regions:
        f1 = (2 * reg["arc_in"] + 1, reg["gap"], 2 * reg["index_in_gap"])
        f2 = (2 * reg["arc_out"] + 1, reg["gap"], 2 * reg["index_in_gap"] + 1)
        foot_rank[reg["negative"]] = min(f1, f2)
    pos_in_w = {c: j for j, c in enumerate(word.chords)}

    def encounter(chord: str) -> tuple:
        if chord in foot_rank:
            return foot_rank[chord]
        return (2 * pos_in_w[chord], -1, 0)

    out = []
    for reg in regions:
        cyc = [reg["negative"]] + list(reg["covered"])
        best = min(range(len(cyc)), key=lambda i: encounter(cyc[i]))
        rotated = tuple(cyc[best:] + cyc[:best])
        out.append((encounter(rotated[0]), rotated))
    out.sort(key=lambda pair: pair[0])
    return tuple(w for _e, w in out)


def mu(
    disk: Disk, word: CyclicWord, d: LagrangianDiagram
) -> Optional[InscriptionResult]:
    """Inscription as an operator value; None encodes the zero case."""
    return inscribe(disk, word, d)
