"""Derived invariants of a filtered DGA presentation.

Augmentation varieties and trees, (algebraic) torsion with vanishing
certificates, bilinearized chain/cochain complexes, fundamental classes,
word-length spectral sequences, and Poincare polynomials.  All linear
algebra is over GF(2) via bitset vectors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from . import linalg
from .algebra import FreeMfDGA
from .element import Element, Word

INF = "inf"


# ---------------------------------------------------------------------------
# Augmentations


@dataclass(frozen=True)
class Augmentation:
    """GF(2) algebra map: listed generators -> 1, others -> 0, all T_i -> 1."""

    level: int
    ones: FrozenSet[str]

    def value(self, symbol: str) -> int:
        return 1 if symbol in self.ones else 0

    def evaluate(self, x: Element) -> int:
        total = 0
        for word, _exps in x.monomials():
            if all(s in self.ones for s in word):
                total ^= 1
        return total

    def restrict(self, dga: FreeMfDGA, level: int) -> "Augmentation":
        keep = {s for s in self.ones if dga.generator(s).level <= level}
        return Augmentation(level, frozenset(keep))

    def key(self) -> Tuple[str, ...]:
        return tuple(sorted(self.ones))


def degree_zero_generators(dga: FreeMfDGA, level: int) -> List[str]:
    return [
        g.symbol
        for g in dga.generators_at_level(level)
        if dga.reduce_degree(g.degree) == 0
    ]


def augmentations(dga: FreeMfDGA, level: int) -> List[Augmentation]:
    """Brute-force the augmentation variety of F^level."""
    zero_syms = degree_zero_generators(dga, level)
    gens = dga.generators_at_level(level)
    out = []
    for bits in itertools.product((0, 1), repeat=len(zero_syms)):
        ones = frozenset(s for s, b in zip(zero_syms, bits) if b)
        eps = Augmentation(level, ones)
        if all(
            eps.evaluate(dga.differentials.get(g.symbol, dga.zero())) == 0
            for g in gens
        ):
            out.append(eps)
    return out


def tau_aug(dga: FreeMfDGA):
    """Greatest level whose filtration piece admits an augmentation.

    Returns "inf" when the top level is augmented, 0 when not even level 1 is.
    """
    best = 0
    for level in range(1, dga.max_level + 1):
        if augmentations(dga, level):
            best = level
    return INF if best == dga.max_level else best


# ---------------------------------------------------------------------------
# Torsion / vanishing certificates

T_EXPONENT_BOUND = 2


def _witness_monomials(dga: FreeMfDGA, level: int, bound: int):
    """Degree-1 monomials of word length <= bound within F^level."""
    syms = [g.symbol for g in dga.generators_at_level(level)]
    exp_range = range(-T_EXPONENT_BOUND, T_EXPONENT_BOUND + 1)
    want = dga.reduce_degree(1)
    for length in range(0, bound + 1):
        for word in itertools.product(syms, repeat=length):
            if dga.comm and len(set(word)) != len(word):
                continue
            for exps in itertools.product(exp_range, repeat=dga.n_t):
                if dga.term_degree(word, exps) == want:
                    yield word, exps


def tau_vanishing(dga: FreeMfDGA, level: int, bound: int = 3):
    """Decide whether 1 is exact in F^level, searching bounded witnesses.

    Returns ("VANISHES", witness element), ("NONZERO", augmentation) or
    ("UNKNOWN", None).
    """
    basis = list(_witness_monomials(dga, level, bound))
    index: Dict[Tuple[Word, Tuple[int, ...]], int] = {}
    columns = []
    target_key = ((), (0,) * dga.n_t)

    def vec(x: Element) -> int:
        v = 0
        for w, e in x.monomials():
            key = (w, e)
            if key not in index:
                index[key] = len(index)
            v ^= 1 << index[key]
        return v

    target = vec(Element.one(dga.n_t, dga.comm))
    for word, exps in basis:
        mono = Element.monomial(word, frozenset({exps}), dga.n_t, dga.comm)
        columns.append(vec(dga.d(mono)))
    combo = linalg.solve(columns, target)
    if combo is not None:
        witness = dga.zero()
        for i, (word, exps) in enumerate(basis):
            if (combo >> i) & 1:
                witness = witness + Element.monomial(
                    word, frozenset({exps}), dga.n_t, dga.comm
                )
        return ("VANISHES", witness)
    augs = augmentations(dga, level)
    if augs:
        return ("NONZERO", augs[0])
    return ("UNKNOWN", None)


def torsion_report(dga: FreeMfDGA, bound: int = 3) -> dict:
    """Per-level vanishing/augmentation status plus the torsion summary."""
    levels = {}
    vanish_level = None
    for level in range(1, dga.max_level + 1):
        status, witness = tau_vanishing(dga, level, bound)
        entry = {"status": status}
        if status == "VANISHES":
            entry["witness"] = witness.render(dga.t_names)
            if vanish_level is None:
                vanish_level = level
        elif status == "NONZERO":
            entry["augmentation"] = list(witness.key())
        levels[level] = entry
    return {
        "tau_aug": tau_aug(dga),
        "vanishing_level": vanish_level,
        "levels": levels,
        "bound": bound,
    }


# ---------------------------------------------------------------------------
# Linear (bilinearized) complexes


@dataclass
class LinearComplex:
    """Finite filtered GF(2) chain complex: D lowers degree by 1."""

    basis: List[str]
    degrees: List[int]
    levels: List[int]
    columns: List[int]  # columns[i] = D(basis[i]) as a bitmask
    max_level: int
    modulus: int = 0

    def reduce(self, d: int) -> int:
        return d % self.modulus if self.modulus else d

    def degree_set(self) -> List[int]:
        return sorted({self.reduce(d) for d in self.degrees})

    def indices(self, degree: Optional[int] = None, max_lvl: Optional[int] = None) -> List[int]:
        out = []
        for i in range(len(self.basis)):
            if degree is not None and self.reduce(self.degrees[i]) != self.reduce(degree):
                continue
            if max_lvl is not None and self.levels[i] > max_lvl:
                continue
            out.append(i)
        return out

    def apply(self, v: int) -> int:
        out = 0
        i = 0
        while v:
            if v & 1:
                out ^= self.columns[i]
            v >>= 1
            i += 1
        return out

    def check_square_zero(self) -> bool:
        return all(self.apply(c) == 0 for c in self.columns)

    def homology_dims(self) -> Dict[int, int]:
        """dim H_n for each degree class n that supports basis vectors."""
        dims: Dict[int, int] = {}
        for n in self.degree_set():
            idx = self.indices(degree=n)
            rank_from_n = linalg.rank([self.columns[i] for i in idx])
            idx_up = self.indices(degree=self.reduce(n + 1))
            img_vecs = [self.columns[i] for i in idx_up]
            # image lands in degree n by homogeneity
            dims[n] = len(idx) - rank_from_n - linalg.rank(img_vecs)
        return dims

    def transpose(self) -> "LinearComplex":
        """Adjoint complex: reversed degrees, filtration turned ascending."""
        n = len(self.basis)
        cols = [0] * n
        for j in range(n):
            c = self.columns[j]
            for i in range(n):
                if (c >> i) & 1:
                    cols[i] |= 1 << j
        return LinearComplex(
            basis=list(self.basis),
            degrees=[-d for d in self.degrees],
            levels=[self.max_level + 1 - l for l in self.levels],
            columns=cols,
            max_level=self.max_level,
            modulus=self.modulus,
        )


def bilinearized_complex(
    dga: FreeMfDGA, eps_l: Augmentation, eps_r: Augmentation, level: int
) -> LinearComplex:
    """Linear complex on F^level generators twisted by two augmentations.

    The differential of a generator keeps, from each word of its image, the
    terms where one factor stays a generator, the left factors feed eps_l
    and the right factors feed eps_r; constant terms are dropped.
    """
    gens = dga.generators_at_level(level)
    pos = {g.symbol: i for i, g in enumerate(gens)}
    columns = []
    for g in gens:
        col = 0
        for word, _exps in dga.differentials.get(g.symbol, dga.zero()).monomials():
            for i, sym in enumerate(word):
                if all(eps_l.value(s) for s in word[:i]) and all(
                    eps_r.value(s) for s in word[i + 1 :]
                ):
                    col ^= 1 << pos[sym]
        columns.append(col)
    cx = LinearComplex(
        basis=[g.symbol for g in gens],
        degrees=[g.degree for g in gens],
        levels=[g.level for g in gens],
        columns=columns,
        max_level=level,
        modulus=dga._modulus(),
    )
    if not cx.check_square_zero():
        raise ValueError("bilinearized differential does not square to zero")
    return cx


def cochain_complex(
    dga: FreeMfDGA, eps_l: Augmentation, eps_r: Augmentation, level: int
) -> LinearComplex:
    """Adjoint of the bilinearized complex with the word-length cofiltration."""
    return bilinearized_complex(dga, eps_l, eps_r, level).transpose()


def fundamental_class_zero(
    dga: FreeMfDGA, eps_l: Augmentation, eps_r: Augmentation, level: int
) -> bool:
    """True iff eps_l + eps_r kills every degree-0 cycle (homotopic pair)."""
    cx = bilinearized_complex(dga, eps_l, eps_r, level)
    idx = cx.indices(degree=0)
    cols = [cx.columns[i] for i in idx]
    for mask in linalg.kernel(cols):
        val = 0
        for j, i in enumerate(idx):
            if (mask >> j) & 1:
                s = cx.basis[i]
                val ^= eps_l.value(s) ^ eps_r.value(s)
        if val:
            return False
    return True


# ---------------------------------------------------------------------------
# Augmentation tree


@dataclass
class AugTree:
    """Vertices are (level, class id); each class stores its augmentations."""

    vertices: List[Tuple[int, int]]
    members: Dict[Tuple[int, int], List[Augmentation]]
    edges: List[Tuple[Tuple[int, int], Tuple[int, int]]]  # (child, parent)

    def to_json(self) -> dict:
        return {
            "vertices": [
                {
                    "level": lvl,
                    "class": cid,
                    "augmentations": [list(a.key()) for a in self.members[(lvl, cid)]],
                }
                for (lvl, cid) in self.vertices
            ],
            "edges": [
                {"child": list(c), "parent": list(p)} for c, p in self.edges
            ],
        }


def augmentation_tree(dga: FreeMfDGA) -> AugTree:
    """Homotopy classes of augmentations per level, linked by restriction."""
    root = (0, 0)
    vertices = [root]
    members: Dict[Tuple[int, int], List[Augmentation]] = {
        root: [Augmentation(0, frozenset())]
    }
    edges: List[Tuple[Tuple[int, int], Tuple[int, int]]] = []
    class_of: Dict[Tuple[int, Tuple[str, ...]], Tuple[int, int]] = {
        (0, ()): root
    }
    for level in range(1, dga.max_level + 1):
        augs = augmentations(dga, level)
        classes: List[List[Augmentation]] = []
        for eps in augs:
            placed = False
            for cls in classes:
                if fundamental_class_zero(dga, eps, cls[0], level):
                    cls.append(eps)
                    placed = True
                    break
            if not placed:
                classes.append([eps])
        for cid, cls in enumerate(classes):
            v = (level, cid)
            vertices.append(v)
            members[v] = cls
            for eps in cls:
                class_of[(level, eps.key())] = v
            parent_eps = cls[0].restrict(dga, level - 1)
            parent = class_of.get((level - 1, parent_eps.key()))
            if parent is None and level - 1 >= 1:
                # restriction is an augmentation but may not be a class rep key;
                # find its class by the fundamental-class test
                for (lvl, cid2) in vertices:
                    if lvl != level - 1:
                        continue
                    if fundamental_class_zero(
                        dga, parent_eps, members[(lvl, cid2)][0], level - 1
                    ):
                        parent = (lvl, cid2)
                        break
            if parent is None:
                parent = root if level - 1 == 0 else None
            if parent is not None:
                edges.append((v, parent))
    return AugTree(vertices=vertices, members=members, edges=edges)


# ---------------------------------------------------------------------------
# Spectral sequence of a filtered complex


@dataclass
class SpectralPages:
    """pages[r][(p, n)] = dim E^r at filtration p, homological degree n."""

    pages: List[Dict[Tuple[int, int], int]]
    max_level: int
    stable_page: int

    def to_json(self) -> dict:
        return {
            "max_level": self.max_level,
            "stable_page": self.stable_page,
            "pages": [
                {f"{p},{n}": d for (p, n), d in sorted(page.items()) if d}
                for page in self.pages
            ],
        }


def spectral_sequence(cx: LinearComplex, r_max: Optional[int] = None) -> SpectralPages:
    """Dimension tables of the pages of the level-filtered complex.

    Uses dim E^r_{p,n} = dim Z^r_{p,n} - dim(Z^{r-1}_{p-1,n} + D Z^{r-1}_{p+r-1,n+1})
    with Z^r_{p,n} = {x in F_p of degree n : Dx in F_{p-r}}.
    """
    if r_max is None:
        r_max = cx.max_level + 1

    def z_basis(p: int, n: int, target_p: int) -> List[int]:
        """Basis of {x in F_p of degree n : Dx in F_target_p}."""
        p = min(p, cx.max_level)
        if p < 0:
            return []
        idx = cx.indices(degree=n, max_lvl=p)
        if not idx:
            return []
        local_cols = [cx.columns[i] for i in idx]
        sub = (
            [1 << i for i in cx.indices(degree=cx.reduce(n - 1), max_lvl=target_p)]
            if target_p >= 0
            else []
        )
        local = linalg.preimage_basis(local_cols, sub, len(idx))
        out = []
        for m in local:
            v = 0
            for j, i in enumerate(idx):
                if (m >> j) & 1:
                    v |= 1 << i
            out.append(v)
        return out

    degrees = cx.degree_set()
    pages: List[Dict[Tuple[int, int], int]] = []
    for r in range(0, r_max + 1):
        page: Dict[Tuple[int, int], int] = {}
        for p in range(0, cx.max_level + 1):
            for n in degrees:
                z = z_basis(p, n, p - r)
                if not z:
                    page[(p, n)] = 0
                    continue
                boundary = z_basis(p - 1, n, p - r)
                upstairs = z_basis(p + r - 1, cx.reduce(n + 1), p)
                image = [cx.apply(v) for v in upstairs]
                denom = boundary + image
                page[(p, n)] = linalg.rank(z) - linalg.intersect_dim(z, denom)
        pages.append(page)
    stable = r_max
    for r in range(1, r_max):
        if pages[r] == pages[r + 1]:
            stable = r
            break
    return SpectralPages(pages=pages, max_level=cx.max_level, stable_page=stable)


# ---------------------------------------------------------------------------
# Poincare polynomials


def poincare_polynomial(cx: LinearComplex) -> Dict[int, int]:
    """P(t): homological-degree -> Betti number."""
    return {n: d for n, d in cx.homology_dims().items() if d}


def spectral_polynomial(pages: SpectralPages) -> Dict[Tuple[int, int, int], int]:
    """Three-variable table: (t, x, y) exponent -> coefficient.

    t tracks homological degree, x the page (exponent r-1), y the filtration
    level; pages are summed from 1 through the filtration length.
    """
    out: Dict[Tuple[int, int, int], int] = {}
    for r in range(1, pages.max_level + 1):
        for (p, n), d in pages.pages[r].items():
            if not d:
                continue
            key = (n, r - 1, p)
            out[key] = out.get(key, 0) + d
    return out


def polynomial_str(poly: Dict, variables: Sequence[str]) -> str:
    if not poly:
        return "0"
    parts = []
    for key in sorted(poly):
        exps = (key,) if isinstance(key, int) else key
        coeff = poly[key]
        factors = []
        for v, e in zip(variables, exps):
            if e == 0:
                continue
            factors.append(v if e == 1 else f"{v}^{e}")
        mono = "*".join(factors)
        if not mono:
            parts.append(str(coeff))
        elif coeff == 1:
            parts.append(mono)
        else:
            parts.append(f"{coeff}*{mono}")
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# Combining per-piece augmentations


def combine_ce_augmentations(
    dga: FreeMfDGA,
    piece_of: Dict[str, Optional[int]],
    per_piece: Dict[int, Set[str]],
) -> Augmentation:
    """Assemble a level-1 augmentation from augmentations of the pure pieces.

    piece_of maps each level-1 generator symbol to its pure piece id, or None
    for mixed generators (which are sent to 0).
    """
    ones = set()
    for g in dga.generators_at_level(1):
        piece = piece_of.get(g.symbol)
        if piece is not None and g.symbol in per_piece.get(piece, set()):
            if dga.reduce_degree(g.degree) != 0:
                raise ValueError(f"{g.symbol} has nonzero degree, cannot map to 1")
            ones.add(g.symbol)
    eps = Augmentation(1, frozenset(ones))
    for g in dga.generators_at_level(1):
        if eps.evaluate(dga.differentials.get(g.symbol, dga.zero())) != 0:
            raise ValueError(
                f"combined map fails the cocycle condition at {g.symbol}"
            )
    return eps
