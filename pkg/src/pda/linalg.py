"""GF(2) linear algebra on int bitsets.

Vectors are Python ints (bit i = coordinate i).  Matrices are lists of
column vectors unless stated otherwise.  Everything here is exact.
"""

from __future__ import annotations

from typing import List, Optional, Tuple


def rank(vectors: List[int]) -> int:
    """Rank of the span of the given vectors."""
    basis: List[int] = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return len(basis)


def row_reduce(vectors: List[int]) -> List[int]:
    """A reduced basis (descending leading bits) for the span."""
    basis: List[int] = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    # back-substitute for a canonical reduced form
    for i in range(len(basis)):
        lead = basis[i].bit_length() - 1
        for j in range(len(basis)):
            if j != i and (basis[j] >> lead) & 1:
                basis[j] ^= basis[i]
    basis.sort(reverse=True)
    return basis


def in_span(v: int, basis: List[int]) -> bool:
    """Whether v lies in the span of a reduced (or any) basis."""
    for b in basis:
        v = min(v, v ^ b)
    return v == 0


def solve(columns: List[int], target: int) -> Optional[int]:
    """Solve sum_{i in S} columns[i] = target; returns S as a bitmask or None.

    Gaussian elimination tracking combinations.
    """
    basis: List[Tuple[int, int]] = []  # (vector, combination mask)
    for i, c in enumerate(columns):
        comb = 1 << i
        for b, bc in basis:
            if c ^ b < c:
                c ^= b
                comb ^= bc
        if c:
            basis.append((c, comb))
            basis.sort(reverse=True)
    v, comb = target, 0
    for b, bc in basis:
        if v ^ b < v:
            v ^= b
            comb ^= bc
    return comb if v == 0 else None


def kernel(columns: List[int]) -> List[int]:
    """Basis of {masks m : xor of columns[i] for i in m == 0}."""
    basis: List[Tuple[int, int]] = []
    ker: List[int] = []
    for i, c in enumerate(columns):
        comb = 1 << i
        for b, bc in basis:
            if c ^ b < c:
                c ^= b
                comb ^= bc
        if c:
            basis.append((c, comb))
            basis.sort(reverse=True)
        else:
            ker.append(comb)
    return ker


def intersect_dim(a_basis: List[int], b_basis: List[int]) -> int:
    """dim(A ∩ B) = dim A + dim B - dim(A + B)."""
    return rank(a_basis) + rank(b_basis) - rank(list(a_basis) + list(b_basis))


def preimage_basis(columns: List[int], subspace: List[int], n_cols: int) -> List[int]:
    """Basis (as input-coordinate masks) of {x : M x in span(subspace)}.

    columns: the matrix M by columns; x ranges over GF(2)^n_cols.
    """
    red = row_reduce(subspace)

    def residue(v: int) -> int:
        for b in red:
            v = min(v, v ^ b)
        return v

    resid_cols = [residue(c) for c in columns[:n_cols]]
    basis: List[Tuple[int, int]] = []
    ker: List[int] = []
    for i, c in enumerate(resid_cols):
        comb = 1 << i
        for b, bc in basis:
            if c ^ b < c:
                c ^= b
                comb ^= bc
        if c:
            basis.append((c, comb))
            basis.sort(reverse=True)
        else:
            ker.append(comb)
    return ker
