"""Parametric families of max-filtered DGA presentations.

These are hand-entered algebra presentations (not derived from diagrams) that
realize prescribed values of the torsion invariants, used as calibration
targets for the torsion and augmentation machinery.
"""

from __future__ import annotations

from .algebra import FreeMfDGA, Generator
from .element import Element


def torsion_family(k: int) -> FreeMfDGA:
    """An algebra with augmentation torsion exactly ``k``.

    A single degree-1 generator ``w`` of word length ``k + 1`` satisfies
    ``dw = 1``. Every filtration piece up to level ``k`` is the trivial
    algebra and admits the empty augmentation; at level ``k + 1`` the unit
    becomes exact (witness ``w``, word length 1) and no augmentation exists.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    return FreeMfDGA(
        generators=[Generator("w", 1, k + 1)],
        differentials={"w": Element.one(0, False)},
        grading="z",
        max_level=k + 1,
        name=f"torsion-{k}",
    )
