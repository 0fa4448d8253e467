"""Noncommutative polynomials over GF(2) with Laurent-monomial coefficients.

A coefficient is a GF(2) sum of Laurent monomials in variables T_1..T_N,
stored as a frozenset of exponent tuples (addition = symmetric difference).
An element is a finite GF(2) sum of (coefficient, word) pairs where a word
is a tuple of generator symbols; () is the unit monomial.

Elements come in two flavours: free (word order kept) and exterior
(`comm=True`: symbols sorted, repeated symbols kill the term).  The
exterior flavour implements the characteristic-2 quotient used by the
`com`/`cyc` algebra modes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Tuple

Word = Tuple[str, ...]
ExpVec = Tuple[int, ...]
Coeff = FrozenSet[ExpVec]


def coeff_zero() -> Coeff:
    return frozenset()


def coeff_one(n_t: int) -> Coeff:
    return frozenset({(0,) * n_t})


def coeff_add(a: Coeff, b: Coeff) -> Coeff:
    return a ^ b


def coeff_mul(a: Coeff, b: Coeff) -> Coeff:
    out: set = set()
    for x in a:
        for y in b:
            z = tuple(i + j for i, j in zip(x, y))
            if z in out:
                out.remove(z)
            else:
                out.add(z)
    return frozenset(out)


def coeff_t(n_t: int, index: int, power: int = 1) -> Coeff:
    e = [0] * n_t
    e[index] = power
    return frozenset({tuple(e)})


def _sorted_coeff(c: Coeff) -> Tuple[ExpVec, ...]:
    return tuple(sorted(c))


@dataclass(frozen=True)
class Element:
    """Immutable algebra element.  terms maps word -> nonzero coefficient."""

    n_t: int
    comm: bool = False
    terms: Tuple[Tuple[Word, Tuple[ExpVec, ...]], ...] = field(default_factory=tuple)

    # -- construction helpers -------------------------------------------------

    @staticmethod
    def from_dict(d: Dict[Word, Coeff], n_t: int, comm: bool = False) -> "Element":
        acc: Dict[Word, Coeff] = {}
        for w, c in d.items():
            if comm:
                w, c = _normalize_comm(w, c)
            if not c:
                continue
            acc[w] = coeff_add(acc.get(w, coeff_zero()), c)
        items = tuple(
            (w, _sorted_coeff(c)) for w, c in sorted(acc.items()) if c
        )
        return Element(n_t=n_t, comm=comm, terms=items)

    @staticmethod
    def zero(n_t: int, comm: bool = False) -> "Element":
        return Element(n_t=n_t, comm=comm, terms=())

    @staticmethod
    def one(n_t: int, comm: bool = False) -> "Element":
        return Element.from_dict({(): coeff_one(n_t)}, n_t, comm)

    @staticmethod
    def gen(symbol: str, n_t: int, comm: bool = False) -> "Element":
        return Element.from_dict({(symbol,): coeff_one(n_t)}, n_t, comm)

    @staticmethod
    def monomial(word: Iterable[str], coeff: Coeff, n_t: int, comm: bool = False) -> "Element":
        return Element.from_dict({tuple(word): coeff}, n_t, comm)

    # -- accessors ------------------------------------------------------------

    def as_dict(self) -> Dict[Word, Coeff]:
        return {w: frozenset(c) for w, c in self.terms}

    def is_zero(self) -> bool:
        return not self.terms

    def monomials(self):
        """Iterate (word, exponent-vector) additive generators."""
        for w, c in self.terms:
            for e in c:
                yield w, e

    def coefficient(self, word: Word) -> Coeff:
        for w, c in self.terms:
            if w == word:
                return frozenset(c)
        return coeff_zero()

    def support_symbols(self) -> set:
        out: set = set()
        for w, _ in self.terms:
            out.update(w)
        return out

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: "Element") -> "Element":
        assert self.n_t == other.n_t and self.comm == other.comm
        d = self.as_dict()
        for w, c in other.terms:
            d[w] = coeff_add(d.get(w, coeff_zero()), frozenset(c))
        return Element.from_dict(d, self.n_t, self.comm)

    def __mul__(self, other: "Element") -> "Element":
        assert self.n_t == other.n_t and self.comm == other.comm
        d: Dict[Word, Coeff] = {}
        for w1, c1 in self.terms:
            for w2, c2 in other.terms:
                w = w1 + w2
                c = coeff_mul(frozenset(c1), frozenset(c2))
                if self.comm:
                    w, c = _normalize_comm(w, c)
                if not c:
                    continue
                d[w] = coeff_add(d.get(w, coeff_zero()), c)
        return Element.from_dict(d, self.n_t, self.comm)

    def scale(self, coeff: Coeff) -> "Element":
        d = {w: coeff_mul(frozenset(c), coeff) for w, c in self.terms}
        return Element.from_dict(d, self.n_t, self.comm)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return (self.n_t, self.comm, self.terms) == (other.n_t, other.comm, other.terms)

    def __hash__(self) -> int:
        return hash((self.n_t, self.comm, self.terms))

    # -- display --------------------------------------------------------------

    def render(self, t_names: Tuple[str, ...] = ()) -> str:
        if not self.terms:
            return "0"
        names = t_names or tuple(f"T{i+1}" for i in range(self.n_t))
        parts = []
        for w, c in self.terms:
            for e in sorted(c):
                factors = [
                    f"{names[i]}^{p}" if p != 1 else names[i]
                    for i, p in enumerate(e)
                    if p
                ]
                factors.extend(w)
                parts.append("*".join(factors) if factors else "1")
        return " + ".join(parts)

    def __repr__(self) -> str:  # pragma: no cover - debug aid
        return f"Element({self.render()})"


def _normalize_comm(w: Word, c: Coeff) -> Tuple[Word, Coeff]:
    if len(set(w)) != len(w):
        return (), coeff_zero()
    return tuple(sorted(w)), c
