"""Generator words: admissible piece-cyclic words of chords.

A generator is an ordered tuple of chords, composable around the cycle
(end piece of each chord = start piece of the next) with pairwise
distinct ending pieces; rotations are distinct generators.  The marker
sits implicitly before position 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .diagram import Chord, LagrangianDiagram


@dataclass(frozen=True)
class CyclicWord:
    chords: Tuple[str, ...]
    pieces: Tuple[int, ...]  # ending piece of each chord
    grading: int

    @property
    def length(self) -> int:
        return len(self.chords)

    @property
    def level(self) -> int:
        return len(self.chords)

    @property
    def symbol(self) -> str:
        return word_symbol(self.chords)


def word_symbol(chords: Sequence[str]) -> str:
    return "w_" + "_".join(chords)


def word_grading(
    chords_in_word: Sequence[Chord],
    connecting_maslov: Optional[Dict[Tuple[str, str], int]] = None,
) -> int:
    """|w| = length - 1 + sum of chord gradings + connecting offsets."""
    total = len(chords_in_word) - 1 + sum(c.grading for c in chords_in_word)
    if connecting_maslov:
        n = len(chords_in_word)
        for i in range(n):
            a = chords_in_word[i]
            b = chords_in_word[(i + 1) % n]
            if a.end_component != b.start_component:
                total += connecting_maslov.get(
                    (a.end_component, b.start_component), 0
                )
    return total


def generate_words(d: LagrangianDiagram) -> List[CyclicWord]:
    """All admissible piece-cyclic words, in (length, chord tuple) order."""
    chords = d.chords()
    by_id = {c.id: c for c in chords}
    conn = _connecting_offsets(d)
    out: List[CyclicWord] = []

    def extend(path: List[str], used_pieces: List[int]):
        if path:
            first = by_id[path[0]]
            last = by_id[path[-1]]
            if last.end_piece == first.start_piece:
                word_chords = [by_id[c] for c in path]
                out.append(
                    CyclicWord(
                        chords=tuple(path),
                        pieces=tuple(used_pieces),
                        grading=word_grading(word_chords, conn),
                    )
                )
        if len(path) >= d.n_pieces:
            return
        for c in chords:
            if path and by_id[path[-1]].end_piece != c.start_piece:
                continue
            if c.end_piece in used_pieces:
                continue
            path.append(c.id)
            used_pieces.append(c.end_piece)
            extend(path, used_pieces)
            path.pop()
            used_pieces.pop()

    extend([], [])
    out.sort(key=lambda w: (w.length, w.chords))
    return out


def _connecting_offsets(d: LagrangianDiagram) -> Dict[Tuple[str, str], int]:
    raw = d.options.get("connecting_maslov", {})
    out: Dict[Tuple[str, str], int] = {}
    for key, val in raw.items():
        a, b = key.split(",")
        out[(a, b)] = int(val)
    return out


def restrict_to_pieces(
    words: Sequence[CyclicWord], d: LagrangianDiagram, pieces: Sequence[int]
) -> List[CyclicWord]:
    """Words all of whose chords have both endpoints on the given pieces."""
    keep = set(pieces)
    if not keep:
        raise ValueError("piece subset must be non-empty")
    by_id = {c.id: c for c in d.chords()}
    out = []
    for w in words:
        if all(
            by_id[c].start_piece in keep and by_id[c].end_piece in keep
            for c in w.chords
        ):
            out.append(w)
    return out
