"""Filtered noncommutative differential graded algebras over GF(2).

A presentation consists of an ordered list of generators, each carrying an
integer degree and a filtration level, together with a differential table.
Coefficients live in GF(2) or in GF(2)[T_1^{+-1},..,T_N^{+-1}] with graded
T variables.  The filtration is by level: F^l is the subalgebra generated
by all generators of level <= l, and the differential must preserve each
F^l.

Gradings: "z" (integers), "z2" (mod 2), "z2r" (mod 2r, r stored in
`grading_modulus`).  Modes: "full" (free noncommutative), "com" (exterior
characteristic-2 commutative quotient), "cyc" (cyclic-word quotient of the
commutative quotient, available when generators carry cyclic words).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field, replace
from typing import Dict, Iterable, List, Optional, Tuple

from .element import Coeff, Element, Word, coeff_add, coeff_one, coeff_zero

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class Generator:
    symbol: str
    degree: int
    level: int
    word: Optional[Tuple[str, ...]] = None  # cyclic word of chord labels, if any


@dataclass
class FreeMfDGA:
    """A max-filtered DGA presentation with explicit differential table."""

    generators: List[Generator]
    differentials: Dict[str, Element]
    grading: str = "z"  # "z" | "z2" | "z2r"
    grading_modulus: int = 0  # 2r when grading == "z2r", else ignored
    t_names: Tuple[str, ...] = ()
    t_degrees: Tuple[int, ...] = ()
    max_level: int = 1
    mode: str = "full"
    incomplete: bool = False
    name: str = ""
    stab_pairs: List[Tuple[str, str]] = field(default_factory=list)

    # -- basic access ---------------------------------------------------------

    def __post_init__(self) -> None:
        self._by_symbol = {g.symbol: g for g in self.generators}
        if len(self._by_symbol) != len(self.generators):
            raise ValueError("duplicate generator symbols")
        for s in self.differentials:
            if s not in self._by_symbol:
                raise ValueError(f"differential for unknown generator {s!r}")

    @property
    def n_t(self) -> int:
        return len(self.t_names)

    @property
    def comm(self) -> bool:
        return self.mode in ("com", "cyc")

    def generator(self, symbol: str) -> Generator:
        return self._by_symbol[symbol]

    def symbols(self) -> List[str]:
        return [g.symbol for g in self.generators]

    def zero(self) -> Element:
        return Element.zero(self.n_t, self.comm)

    def one(self) -> Element:
        return Element.one(self.n_t, self.comm)

    def gen(self, symbol: str) -> Element:
        if symbol not in self._by_symbol:
            raise KeyError(symbol)
        return Element.gen(symbol, self.n_t, self.comm)

    def generators_at_level(self, level: int) -> List[Generator]:
        return [g for g in self.generators if g.level <= level]

    # -- grading --------------------------------------------------------------

    def _modulus(self) -> int:
        if self.grading == "z":
            return 0
        if self.grading == "z2":
            return 2
        return self.grading_modulus

    def reduce_degree(self, d: int) -> int:
        m = self._modulus()
        return d % m if m else d

    def term_degree(self, word: Word, exps: Tuple[int, ...]) -> int:
        d = sum(self._by_symbol[s].degree for s in word)
        d += sum(e * td for e, td in zip(exps, self.t_degrees))
        return self.reduce_degree(d)

    def element_degree(self, x: Element) -> Optional[int]:
        """Common degree of all terms, or None if inhomogeneous or zero."""
        degs = {self.term_degree(w, e) for w, e in x.monomials()}
        if len(degs) == 1:
            return degs.pop()
        return None

    def term_level(self, word: Word) -> int:
        return max((self._by_symbol[s].level for s in word), default=0)

    # -- differential ---------------------------------------------------------

    def d(self, x: Element) -> Element:
        """Extend the differential table by GF(2)-linearity and Leibniz."""
        out = self.zero()
        for word, exps in x.monomials():
            coeff: Coeff = frozenset({exps})
            for i, sym in enumerate(word):
                dg = self.differentials.get(sym)
                if dg is None or dg.is_zero():
                    continue
                left = Element.monomial(word[:i], coeff_one(self.n_t), self.n_t, self.comm)
                right = Element.monomial(word[i + 1 :], coeff_one(self.n_t), self.n_t, self.comm)
                out = out + (left * dg * right).scale(coeff)
        return out

    # -- structural checks ----------------------------------------------------

    def check_degree(self) -> List[str]:
        """Every differential must drop degree by exactly 1 (term by term)."""
        errors = []
        for sym, dx in self.differentials.items():
            g = self._by_symbol[sym]
            want = self.reduce_degree(g.degree - 1)
            for w, e in dx.monomials():
                got = self.term_degree(w, e)
                if got != want:
                    errors.append(
                        f"d({sym}): term {w} has degree {got}, expected {want}"
                    )
        return errors

    def check_filtration(self) -> List[str]:
        errors = []
        for sym, dx in self.differentials.items():
            lvl = self._by_symbol[sym].level
            for w, _ in dx.monomials():
                if self.term_level(w) > lvl:
                    errors.append(
                        f"d({sym}): term {w} leaves filtration level {lvl}"
                    )
        return errors

    def check_square_zero(self) -> List[str]:
        errors = []
        for sym in self.differentials:
            sq = self.d(self.differentials[sym])
            if not sq.is_zero():
                errors.append(f"d^2({sym}) = {sq.render(self.t_names)}")
        return errors

    def validate(self) -> None:
        errors = self.check_degree() + self.check_filtration() + self.check_square_zero()
        if errors:
            raise ValueError("invalid presentation:\n" + "\n".join(errors))

    # -- quotients ------------------------------------------------------------

    def quotient(self, mode: str) -> "FreeMfDGA":
        """Pass to the commutative ("com") or cyclic-word ("cyc") quotient."""
        if mode == "full":
            return self
        if self.mode != "full":
            raise ValueError("quotient only defined from the full algebra")
        if mode == "com":
            diffs = {
                s: _convert(dx, comm=True) for s, dx in self.differentials.items()
            }
            return replace(self, differentials=diffs, mode="com")
        if mode == "cyc":
            rep = self._cyclic_representatives()
            gens = [g for g in self.generators if rep[g.symbol] == g.symbol]
            diffs = {}
            for g in gens:
                dx = self.differentials.get(g.symbol, self.zero())
                diffs[g.symbol] = _substitute_symbols(dx, rep, comm=True)
            out = replace(self, generators=gens, differentials=diffs, mode="cyc")
            return out
        raise ValueError(f"unknown mode {mode!r}")

    def _cyclic_representatives(self) -> Dict[str, str]:
        """Map each generator to the representative of its rotation class."""
        by_class: Dict[Tuple[str, ...], str] = {}
        rep: Dict[str, str] = {}
        for g in self.generators:
            if g.word is None:
                rep[g.symbol] = g.symbol
                continue
            key = min(
                tuple(g.word[i:] + g.word[:i]) for i in range(len(g.word))
            )
            if key not in by_class:
                by_class[key] = g.symbol
            rep[g.symbol] = by_class[key]
        return rep

    # -- stabilization --------------------------------------------------------

    def stabilized(self, degree: int, level: int, base: str = "e") -> Tuple["FreeMfDGA", str, str]:
        """Add a cancelling pair e1 (given degree) and e2 with d(e1) = e2."""
        k = 1
        while f"{base}{k}_1" in self._by_symbol or f"{base}{k}_2" in self._by_symbol:
            k += 1
        s1, s2 = f"{base}{k}_1", f"{base}{k}_2"
        gens = self.generators + [
            Generator(s1, degree, level),
            Generator(s2, degree - 1, level),
        ]
        diffs = dict(self.differentials)
        diffs[s1] = Element.gen(s2, self.n_t, self.comm)
        diffs[s2] = Element.zero(self.n_t, self.comm)
        out = replace(self, generators=gens, differentials=diffs,
                      stab_pairs=self.stab_pairs + [(s1, s2)])
        return out, s1, s2

    def stab_projection(self, x: Element) -> Element:
        """Kill every term containing a stabilization generator."""
        esyms = {s for pair in self.stab_pairs for s in pair}
        d = {w: c for w, c in x.as_dict().items() if not (set(w) & esyms)}
        return Element.from_dict(d, self.n_t, self.comm)

    def stab_homotopy(self, x: Element) -> Element:
        """Chain homotopy h with id - projection = d h + h d.

        On a monomial, locate the leftmost stabilization-generator factor:
        no such factor or an e1 gives 0; an e2 is replaced by its e1.
        """
        e1_of = {s2: s1 for s1, s2 in self.stab_pairs}
        e_all = set(e1_of) | set(e1_of.values())
        out: Dict[Word, Coeff] = {}
        for w, c in x.as_dict().items():
            pos = next((i for i, s in enumerate(w) if s in e_all), None)
            if pos is None or w[pos] not in e1_of:
                continue
            nw = w[:pos] + (e1_of[w[pos]],) + w[pos + 1 :]
            out[nw] = coeff_add(out.get(nw, coeff_zero()), c)
        return Element.from_dict(out, self.n_t, self.comm)

    # -- morphisms ------------------------------------------------------------

    def apply_morphism(self, images: Dict[str, Element], x: Element) -> Element:
        """Apply the algebra endomorphism sending each symbol to its image.

        Symbols missing from `images` map to themselves.
        """
        out = self.zero()
        for word, exps in x.monomials():
            term = Element.monomial((), frozenset({exps}), self.n_t, self.comm)
            for sym in word:
                term = term * (images[sym] if sym in images else self.gen(sym))
            out = out + term
        return out

    def invert_tame(self, images: Dict[str, Element]) -> Dict[str, Element]:
        """Invert an automorphism of the form g -> g + (terms without g).

        Iterates s -> s + (g_s - phi(g_s)) substituted; converges because the
        correction for each symbol never reintroduces that symbol.
        """
        inv = {s: self.gen(s) for s in images}
        for _ in range(len(images) + 2):
            new = {}
            changed = False
            for s, img in images.items():
                corr = img + self.gen(s)  # the non-g part of phi(g)
                cand = self.gen(s) + self.apply_morphism(inv, corr)
                if cand != inv[s]:
                    changed = True
                new[s] = cand
            inv = new
            if not changed:
                break
        # validate
        for s, img in images.items():
            back = self.apply_morphism(inv, img)
            if back != self.gen(s):
                raise ValueError(f"morphism is not a tame automorphism at {s!r}")
        return inv

    def check_chain_map(self, other: "FreeMfDGA", images: Dict[str, Element]) -> List[str]:
        """Check phi d = d phi for phi: self -> other given on generators."""
        errors = []
        for g in self.generators:
            lhs = other.apply_morphism(images, self.differentials.get(g.symbol, self.zero()))
            rhs = other.d(other.apply_morphism(images, self.gen(g.symbol)))
            if lhs != rhs:
                diff = lhs + rhs
                errors.append(f"phi(d {g.symbol}) != d phi({g.symbol}): {diff.render(other.t_names)}")
        return errors

    # -- serialization --------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "name": self.name,
            "grading": self.grading,
            "grading_modulus": self.grading_modulus,
            "t_names": list(self.t_names),
            "t_degrees": list(self.t_degrees),
            "max_level": self.max_level,
            "mode": self.mode,
            "incomplete": self.incomplete,
            "generators": [
                {
                    "symbol": g.symbol,
                    "degree": g.degree,
                    "level": g.level,
                    **({"word": list(g.word)} if g.word is not None else {}),
                }
                for g in self.generators
            ],
            "differentials": {
                s: self.render(dx) for s, dx in self.differentials.items()
            },
            "stab_pairs": [list(p) for p in self.stab_pairs],
        }

    def render(self, x: Element) -> str:
        return x.render(self.t_names)

    @staticmethod
    def from_json(data: dict) -> "FreeMfDGA":
        t_names = tuple(data.get("t_names", []))
        mode = data.get("mode", "full")
        comm = mode in ("com", "cyc")
        gens = [
            Generator(
                g["symbol"],
                int(g["degree"]),
                int(g["level"]),
                tuple(g["word"]) if "word" in g else None,
            )
            for g in data["generators"]
        ]
        symbols = {g.symbol for g in gens}
        diffs = {
            s: parse_expression(expr, t_names, symbols, comm)
            for s, expr in data.get("differentials", {}).items()
        }
        for g in gens:
            diffs.setdefault(g.symbol, Element.zero(len(t_names), comm))
        return FreeMfDGA(
            generators=gens,
            differentials=diffs,
            grading=data.get("grading", "z"),
            grading_modulus=int(data.get("grading_modulus", 0)),
            t_names=t_names,
            t_degrees=tuple(data.get("t_degrees", [])),
            max_level=int(data.get("max_level", 1)),
            mode=mode,
            incomplete=bool(data.get("incomplete", False)),
            name=data.get("name", ""),
            stab_pairs=[tuple(p) for p in data.get("stab_pairs", [])],
        )

    @staticmethod
    def load(path) -> "FreeMfDGA":
        with open(path) as fh:
            return FreeMfDGA.from_json(json.load(fh))

    def save(self, path) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh, indent=2, sort_keys=True)
            fh.write("\n")


_FACTOR_RE = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*?)(?:\^(-?\d+))?$")


def parse_expression(
    expr: str,
    t_names: Tuple[str, ...],
    symbols: Iterable[str],
    comm: bool = False,
) -> Element:
    """Parse '+'-separated products of '1', T-powers, and generator symbols."""
    symbols = set(symbols)
    n_t = len(t_names)
    t_index = {n: i for i, n in enumerate(t_names)}
    result = Element.zero(n_t, comm)
    expr = expr.strip()
    if expr in ("", "0"):
        return result
    for term in expr.split("+"):
        word: List[str] = []
        exps = [0] * n_t
        for factor in term.strip().split("*"):
            factor = factor.strip()
            if factor == "1":
                continue
            m = _FACTOR_RE.match(factor)
            if not m:
                raise ValueError(f"bad factor {factor!r} in {expr!r}")
            base, power = m.group(1), m.group(2)
            if base in t_index:
                exps[t_index[base]] += int(power) if power is not None else 1
            elif factor in symbols:
                word.append(factor)
            else:
                raise ValueError(f"unknown factor {factor!r} in {expr!r}")
        result = result + Element.monomial(
            word, frozenset({tuple(exps)}), n_t, comm
        )
    return result


def _convert(x: Element, comm: bool) -> Element:
    return Element.from_dict(x.as_dict(), x.n_t, comm)


def _substitute_symbols(x: Element, mapping: Dict[str, str], comm: bool) -> Element:
    d: Dict[Word, Coeff] = {}
    for w, c in x.as_dict().items():
        nw = tuple(mapping.get(s, s) for s in w)
        d[nw] = coeff_add(d.get(nw, coeff_zero()), c)
    return Element.from_dict(d, x.n_t, comm)
