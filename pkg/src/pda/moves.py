"""Verification of invariance mechanics for diagram moves.

Two checks are provided, each comparing the algebras assembled from a pair
of diagrams given as input (the moved diagram is never synthesized):

* triple-point (Reidemeister III) moves: the map Phi = Id + mu_u for a
  designated triangle u with boundary word c+ b- a- is an involutive tame
  automorphism, and d_plus = Phi d_minus Phi is checked on every generator;

* double-point (Reidemeister II) moves eliminating a mixed chord pair
  (a, b): the target algebra is extended by one cancelling generator pair
  per word containing a, a base morphism Phi_0 is built from the splitting
  d_minus(w_l a w_r) = (w_l b w_r) + x + y, and homotopy-driven
  corrections ordered by chord actions upgrade it to a verified chain map.

Chord actions are user-declared positive numbers; the checks verify the
inequalities the construction relies on (differentials strictly decrease
action, and the action of a exceeds that of b) rather than assuming them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import Element, FreeMfDGA, Generator
from .diagram import LagrangianDiagram
from .inscription import inscribe
from .words import CyclicWord, word_symbol


class MoveError(ValueError):
    pass


@dataclass(frozen=True)
class MoveSpec:
    """Chord-level description of a move relating two diagrams.

    `correspondence` maps chord ids of the minus diagram to chord ids of
    the plus diagram and must preserve start/end pieces.  For triple-point
    moves `triangle` lists (c, b, a): the designated disk has one positive
    corner at c followed by negative corners at b then a.  For double-point
    moves `pair` lists the eliminated chords (a, b) of the minus diagram
    and `actions` assigns each minus chord a positive action.
    """

    move_type: str  # "I", "II", or "double"
    correspondence: Dict[str, str]
    triangle: Optional[Tuple[str, str, str]] = None
    pair: Optional[Tuple[str, str]] = None
    actions: Dict[str, float] = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "schema_version": 1,
            "move_type": self.move_type,
            "correspondence": dict(self.correspondence),
        }
        if self.triangle is not None:
            out["triangle"] = list(self.triangle)
        if self.pair is not None:
            out["pair"] = list(self.pair)
        if self.actions:
            out["actions"] = dict(self.actions)
        return out

    @staticmethod
    def from_json(data: dict) -> "MoveSpec":
        return MoveSpec(
            move_type=data["move_type"],
            correspondence=dict(data["correspondence"]),
            triangle=tuple(data["triangle"]) if "triangle" in data else None,
            pair=tuple(data["pair"]) if "pair" in data else None,
            actions=dict(data.get("actions", {})),
        )

    @staticmethod
    def load(path) -> "MoveSpec":
        with open(path) as f:
            return MoveSpec.from_json(json.load(f))

    def save(self, path) -> None:
        with open(path, "w") as f:
            json.dump(self.to_json(), f, indent=1, sort_keys=True)
            f.write("\n")


@dataclass
class MoveReport:
    ok: bool
    stages: List[str]
    errors: List[str]
    phi: Dict[str, str] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "stages": list(self.stages),
            "errors": list(self.errors),
            "phi": dict(self.phi),
        }


# ---------------------------------------------------------------------------
# Triple-point moves


class _TriangleDisk:
    """Duck-typed stand-in for a Disk: one positive and two negative corners.

    The boundary reads c+ (run on end-piece of c) b- (run on start-piece of
    b) a- (run on start-piece of a); run components are representatives of
    those pieces, which is all the inscription routine consults.
    """

    def __init__(self, d: LagrangianDiagram, c: str, b: str, a: str):
        chords = {ch.id: ch for ch in d.chords()}
        for x in (c, b, a):
            if x not in chords:
                raise MoveError(f"triangle chord {x!r} not in diagram")
        comp_of_piece = {}
        for comp, piece in d.partition.items():
            comp_of_piece.setdefault(piece, comp)
        self.corners = ((c, 1), (b, -1), (a, -1))
        try:
            self.run_components = (
                comp_of_piece[chords[c].end_piece],
                comp_of_piece[chords[b].start_piece],
                comp_of_piece[chords[a].start_piece],
            )
        except KeyError as e:
            raise MoveError(f"no component realizes piece {e}")
        self.t_exponents = (0,) * len(d.t_names())
        self.star_exponents = (0,) * len(d.t_names())


def _word_of(dga: FreeMfDGA, d: LagrangianDiagram, g: Generator) -> CyclicWord:
    chords = {c.id: c for c in d.chords()}
    pieces = tuple(chords[c].end_piece for c in g.word)
    return CyclicWord(tuple(g.word), pieces, g.degree)


def triangle_morphism(
    dga: FreeMfDGA, d: LagrangianDiagram, triangle: Sequence[str]
) -> Dict[str, Element]:
    """Images of Phi = Id + mu_u for the triangle u with word c+ b- a-."""
    c, b, a = triangle
    disk = _TriangleDisk(d, c, b, a)
    images: Dict[str, Element] = {}
    for g in dga.generators:
        if c not in g.word:
            continue
        res = inscribe(disk, _word_of(dga, d, g), d)
        if res is None:
            continue
        term = Element.one(dga.n_t, dga.comm)
        for w in res.words:
            sym = word_symbol(w)
            if sym not in {x.symbol for x in dga.generators}:
                raise MoveError(
                    f"mu output {sym!r} for {g.symbol!r} is not a generator"
                )
            term = term * dga.gen(sym)
        images[g.symbol] = dga.gen(g.symbol) + term
    return images


def _transport(
    dga_from: FreeMfDGA, dga_to: FreeMfDGA, correspondence: Dict[str, str]
) -> Dict[str, str]:
    """Symbol bijection induced by a chord correspondence; raises if broken."""
    to_syms = {g.symbol for g in dga_to.generators}
    out = {}
    for g in dga_from.generators:
        try:
            sym = word_symbol([correspondence[c] for c in g.word])
        except KeyError as e:
            raise MoveError(f"correspondence missing chord {e}")
        if sym not in to_syms:
            raise MoveError(f"{g.symbol!r} has no counterpart ({sym!r} missing)")
        h = dga_to.generator(sym)
        if (h.degree, h.level) != (g.degree, g.level):
            raise MoveError(f"degree/level mismatch {g.symbol!r} vs {sym!r}")
        out[g.symbol] = sym
    if len(set(out.values())) != len(out) or len(out) != len(to_syms):
        raise MoveError("correspondence is not a generator bijection")
    return out


def verify_triple_point(
    dga_minus: FreeMfDGA,
    dga_plus: FreeMfDGA,
    d_minus: LagrangianDiagram,
    spec: MoveSpec,
) -> MoveReport:
    """Check d_plus = Phi d_minus Phi for Phi = Id + mu_(triangle)."""
    stages, errors = [], []
    if spec.move_type not in ("I", "II"):
        raise MoveError(f"not a triple-point spec: {spec.move_type!r}")
    if spec.triangle is None:
        raise MoveError("spec.triangle is required")
    sym_map = _transport(dga_minus, dga_plus, spec.correspondence)
    stages.append(f"generator correspondence: {len(sym_map)} generators")

    phi_minus = triangle_morphism(dga_minus, d_minus, spec.triangle)
    stages.append(f"Phi touches {len(phi_minus)} generators")
    # Phi is involutive: mu removes the positive chord, so mu o mu = 0
    for s, img in phi_minus.items():
        back = dga_minus.apply_morphism(phi_minus, img)
        if back != dga_minus.gen(s):
            errors.append(f"Phi is not involutive at {s!r}")
    # transport Phi to plus symbols and check Phi d_minus = d_plus Phi
    images = {
        sym_map[s]: _rename(dga_plus, img, sym_map)
        for s, img in phi_minus.items()
    }
    renamed_minus = _renamed_dga(dga_minus, dga_plus, sym_map)
    errs = renamed_minus.check_chain_map(dga_plus, images)
    errors.extend(errs)
    if not errs:
        stages.append("d_plus = Phi d_minus Phi on every generator")
    phi_txt = {s: dga_plus.render(img) for s, img in sorted(images.items())}
    return MoveReport(ok=not errors, stages=stages, errors=errors, phi=phi_txt)


def _rename(dga_to: FreeMfDGA, x: Element, sym_map: Dict[str, str]) -> Element:
    out: Dict[Tuple[str, ...], object] = {}
    for w, cf in x.as_dict().items():
        nw = tuple(sym_map.get(s, s) for s in w)
        out[nw] = cf
    return Element.from_dict(out, dga_to.n_t, dga_to.comm)


def _renamed_dga(
    dga: FreeMfDGA, dga_to: FreeMfDGA, sym_map: Dict[str, str]
) -> FreeMfDGA:
    from dataclasses import replace

    gens = [replace(g, symbol=sym_map[g.symbol]) for g in dga.generators]
    diffs = {
        sym_map[s]: _rename(dga_to, el, sym_map)
        for s, el in dga.differentials.items()
    }
    return replace(dga, generators=gens, differentials=diffs)


# ---------------------------------------------------------------------------
# Double-point moves


def _word_action(actions: Dict[str, float], word: Sequence[str]) -> float:
    return sum(actions[c] for c in word)


def _element_max_action(
    dga: FreeMfDGA, actions_by_symbol: Dict[str, float], x: Element
) -> float:
    best = 0.0
    for w, _ in x.monomials():
        best = max(best, sum(actions_by_symbol[s] for s in w))
    return best


def double_point_phi(
    dga_minus: FreeMfDGA,
    dga_plus: FreeMfDGA,
    spec: MoveSpec,
) -> Tuple[MoveReport, Optional[FreeMfDGA], Dict[str, Element]]:
    """Build and verify the chain map A_minus -> (stabilized A_plus).

    Returns (report, stabilized plus algebra, generator images).
    """
    stages, errors = [], []
    if spec.move_type != "double":
        raise MoveError(f"not a double-point spec: {spec.move_type!r}")
    if spec.pair is None:
        raise MoveError("spec.pair is required")
    a, b = spec.pair
    actions = spec.actions
    minus_syms = {g.symbol for g in dga_minus.generators}

    if not actions or any(v <= 0 for v in actions.values()):
        raise MoveError("positive actions required for every chord")
    if actions[a] <= actions[b]:
        errors.append("action(a) must exceed action(b)")

    act_of = {g.symbol: _word_action(actions, g.word) for g in dga_minus.generators}
    # differentials must strictly decrease action
    for g in dga_minus.generators:
        el = dga_minus.differentials[g.symbol]
        if el != dga_minus.zero():
            top = _element_max_action(dga_minus, act_of, el)
            if top >= act_of[g.symbol]:
                errors.append(f"d does not decrease action at {g.symbol!r}")
    stages.append("action inequalities verified")

    a_gens = [g for g in dga_minus.generators if a in g.word]
    b_of: Dict[str, str] = {}
    for g in a_gens:
        partner = word_symbol([b if c == a else c for c in g.word])
        if partner not in minus_syms:
            raise MoveError(f"no partner word for {g.symbol!r}")
        b_of[g.symbol] = partner
    pairs = sorted(b_of.items(), key=lambda kv: (act_of[kv[0]], kv[0]))
    stages.append(f"{len(pairs)} cancelling word pairs")

    # plus generators must be exactly the a,b-free minus generators
    free = [g for g in dga_minus.generators if a not in g.word and b not in g.word]
    plus_syms = {g.symbol for g in dga_plus.generators}
    if {g.symbol for g in free} != plus_syms:
        raise MoveError("plus generators != a,b-free minus generators")

    S = dga_plus
    e_of: Dict[str, Tuple[str, str]] = {}
    for a_sym, _b_sym in pairs:
        g = dga_minus.generator(a_sym)
        S, s1, s2 = S.stabilized(g.degree, g.level)
        e_of[a_sym] = (s1, s2)
    stages.append(f"stabilized plus algebra by {len(pairs)} pairs")

    # splitting d(w_l a w_r) = (w_l b w_r) + x + y
    split: Dict[str, Tuple[Element, Element]] = {}
    for a_sym, b_sym in pairs:
        el = dga_minus.differentials[a_sym]
        terms = el.as_dict()
        partner = (b_sym,)
        if partner not in terms:
            errors.append(f"d {a_sym!r} has no {b_sym!r} term")
            continue
        x_d, y_d = {}, {}
        for w, cf in terms.items():
            if w == partner:
                continue
            has_a = any(a in dga_minus.generator(s).word for s in w)
            has_b = any(b in dga_minus.generator(s).word for s in w)
            if has_b:
                errors.append(f"unexpected extra b-term in d {a_sym!r}")
            elif has_a:
                x_d[w] = cf
            else:
                y_d[w] = cf
        split[a_sym] = (
            Element.from_dict(x_d, dga_minus.n_t, dga_minus.comm),
            Element.from_dict(y_d, dga_minus.n_t, dga_minus.comm),
        )
    if errors:
        return MoveReport(False, stages, errors), None, {}
    stages.append("differential splittings extracted")

    # Phi_0: a-words to e1; b-words to e2 + Phi_0(x) + y; others fixed
    images: Dict[str, Element] = {}
    for a_sym, b_sym in pairs:
        images[a_sym] = S.gen(e_of[a_sym][0])
    for a_sym, b_sym in pairs:
        x, y = split[a_sym]
        images[b_sym] = (
            S.gen(e_of[a_sym][1]) + S.apply_morphism(images, x + y)
        )

    def projected_gap(sym: str) -> Element:
        img = images[sym] if sym in images else S.gen(sym)
        lhs = S.stab_projection(S.d(img))
        rhs = S.stab_projection(
            S.apply_morphism(images, dga_minus.differentials[sym])
        )
        return lhs + rhs

    bad = [g.symbol for g in dga_minus.generators if projected_gap(g.symbol) != S.zero()]
    if bad:
        errors.append(f"projected chain identity fails at {bad}")
        return MoveReport(False, stages, errors), S, images
    stages.append("projected chain identity holds for Phi_0")

    # homotopy-driven corrections on a,b-free generators, in action order
    for g in sorted(free, key=lambda g: (act_of[g.symbol], g.symbol)):
        sym = g.symbol
        img = images[sym] if sym in images else S.gen(sym)
        gap = S.d(img) + S.apply_morphism(
            images, dga_minus.differentials[sym]
        )
        if gap == S.zero():
            continue
        psi = {sym: S.gen(sym) + S.stab_homotopy(gap)}
        new_images = {
            s: S.apply_morphism(psi, el) for s, el in images.items()
        }
        new_images[sym] = psi[sym]
        images = new_images
        # keep b-word images tied to the corrected x and y parts
        for a_sym, b_sym in pairs:
            x, y = split[a_sym]
            images[b_sym] = S.gen(e_of[a_sym][1]) + S.apply_morphism(
                images, x + y
            )
    stages.append("homotopy corrections applied")

    errs = dga_minus.check_chain_map(S, images)
    errors.extend(errs)
    if not errs:
        stages.append("final chain map verified on every generator")
    return MoveReport(ok=not errors, stages=stages, errors=errors,
                      phi={s: S.render(el) for s, el in sorted(images.items())}), S, images
