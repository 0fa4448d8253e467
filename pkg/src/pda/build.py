"""Assemble the filtered DGA of a diagram from its disks and words."""

from __future__ import annotations

from typing import Dict, List, Optional

from .algebra import FreeMfDGA, Generator
from .diagram import LagrangianDiagram
from .disks import DiskLimits, DiskSet, enumerate_disks
from .element import Element
from .inscription import inscribe
from .words import CyclicWord, generate_words


def assemble_pda(
    d: LagrangianDiagram,
    limits: DiskLimits = DiskLimits(),
    disk_set: Optional[DiskSet] = None,
    validate: bool = True,
) -> FreeMfDGA:
    """Words + disk inscriptions -> differential table.

    The differential of a word sums the inscription values of every
    enumerated disk.  A truncated disk search marks the result incomplete,
    downgrading validation failures to warnings.
    """
    if disk_set is None:
        disk_set = enumerate_disks(d, limits)
    words = generate_words(d)
    by_chords = {w.chords: w for w in words}
    t_names = d.t_names()
    n_t = len(t_names)
    grading = d.options.get("grading", "z")
    modulus = int(d.options.get("grading_modulus", 0))

    gens = [
        Generator(w.symbol, w.grading, w.level, word=w.chords) for w in words
    ]
    diffs: Dict[str, Element] = {}
    for w in words:
        total = Element.zero(n_t)
        for disk in disk_set.disks:
            res = inscribe(disk, w, d)
            if res is None:
                continue
            for out in res.words:
                if out not in by_chords:
                    raise ValueError(
                        f"inscription output {out} of disk {disk.corners} into "
                        f"{w.chords} is not an admissible generator"
                    )
            exps = res.t_exponents if n_t else ()
            term = Element.monomial(
                tuple(by_chords[out].symbol for out in res.words),
                frozenset({tuple(exps)}),
                n_t,
            )
            total = total + term
        diffs[w.symbol] = total

    dga = FreeMfDGA(
        generators=gens,
        differentials=diffs,
        grading=grading,
        grading_modulus=modulus,
        t_names=t_names,
        t_degrees=d.t_degrees(),
        max_level=max(d.n_pieces, 1),
        mode="full",
        incomplete=disk_set.truncated,
        name=d.name,
    )
    if validate:
        errors = (
            dga.check_degree() + dga.check_filtration() + dga.check_square_zero()
        )
        if errors:
            if dga.incomplete:
                import warnings

                warnings.warn(
                    "possibly incomplete disk enumeration; invariant checks "
                    "failed:\n" + "\n".join(errors)
                )
            else:
                raise ValueError("assembled algebra invalid:\n" + "\n".join(errors))
    return dga
