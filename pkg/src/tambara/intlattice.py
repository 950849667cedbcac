"""Exact integer lattice routines: Hermite normal form, kernels, and
membership tests.

Vectors are rows; a lattice is the row span of a matrix.  The HNF used
here is canonical: rows ordered by pivot column, pivots positive, entries
above each pivot reduced into [0, pivot).  Lattice equality is therefore
matrix equality, and membership is a greedy echelon solve.  Everything is
plain Python ints, so norms-of-norms sized entries are exact.
"""

from __future__ import annotations


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: returns (g, x, y) with g = a*x + b*y, g >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def hnf(rows: list[list[int]]) -> list[list[int]]:
    """Canonical row-style Hermite normal form of the span of ``rows``."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return []
    ncols = len(m[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, len(m)):
            if not m[i][col]:
                continue
            a, b = m[r][col], m[i][col]
            g, x, y = xgcd(a, b)
            u, v = -(b // g), a // g
            m[r], m[i] = (
                [x * p + y * q for p, q in zip(m[r], m[i])],
                [u * p + v * q for p, q in zip(m[r], m[i])],
            )
        if m[r][col] < 0:
            m[r] = [-p for p in m[r]]
        for i in range(r):
            q = m[i][col] // m[r][col]
            if q:
                m[i] = [p - q * t for p, t in zip(m[i], m[r])]
        r += 1
    return m[:r]


def in_row_span(basis: list[list[int]], vec) -> bool:
    """Is vec an integer combination of the (HNF) basis rows?"""
    v = list(vec)
    for row in basis:
        c = next((j for j, e in enumerate(row) if e), None)
        if c is None:
            continue
        q, rem = divmod(v[c], row[c])
        if rem:
            return False
        if q:
            v = [p - q * t for p, t in zip(v, row)]
    return not any(v)


def is_sublattice(inner: list[list[int]], outer: list[list[int]]) -> bool:
    """Does every row of ``inner`` lie in the span of ``outer``?"""
    return all(in_row_span(outer, row) for row in inner)


def kernel(rows: list[list[int]], ncols: int) -> list[list[int]]:
    """HNF basis of {x in Z^ncols : rows . x = 0 for every condition row}."""
    nconds = len(rows)
    if nconds == 0:
        return hnf([[int(i == j) for j in range(ncols)] for i in range(ncols)])
    # Row-reduce [A^T | I]; rows whose A^T block vanishes record the
    # unimodular combinations of coordinates killing every condition.
    aug = [
        [rows[cond][j] for cond in range(nconds)]
        + [int(t == j) for t in range(ncols)]
        for j in range(ncols)
    ]
    reduced = hnf(aug)
    gens = [row[nconds:] for row in reduced if not any(row[:nconds])]
    return hnf(gens)


def preimage_mod(rows: list[list[int]], ncols: int, p: int) -> list[list[int]]:
    """HNF basis of {x in Z^ncols : rows . x = 0 mod p} (exactly 0 if p = 0)."""
    if p == 0:
        return kernel(rows, ncols)
    nconds = len(rows)
    if nconds == 0:
        return kernel(rows, ncols)
    # Solve A x + p y = 0 in Z^(ncols + nconds) and project onto x.
    augmented = [row + [p if i == j else 0 for j in range(nconds)]
                 for i, row in enumerate(rows)]
    full = kernel(augmented, ncols + nconds)
    return hnf([row[:ncols] for row in full])
