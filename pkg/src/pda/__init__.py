"""Planar diagram algebras for partitioned Legendrian links."""

from .algebra import FreeMfDGA, Generator, parse_expression
from .element import Element

__all__ = ["FreeMfDGA", "Generator", "Element", "parse_expression"]

__version__ = "0.1.0"
