"""Exact linear algebra over the rationals on small dense matrices."""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

IntVec = tuple[int, ...]


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def primitive(v: Iterable) -> IntVec:
    """Scale a rational vector to the primitive integer vector on the same ray.

    The zero vector is returned unchanged (as integers).
    """
    v = [Fraction(x) for x in v]
    den = reduce(lcm, (x.denominator for x in v), 1)
    ints = [int(x * den) for x in v]
    g = reduce(gcd, ints, 0)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        m[r] = [x / piv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[IntVec]:
    """Primitive integer basis of {x : rows . x = 0}, one vector per free column."""
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(primitive(x))
    return basis


def solve(rows: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    """Solve a square nonsingular system exactly."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    n = len(rows[0])
    if pivots[:n] != list(range(n)) or len(pivots) > n:
        raise ValueError("system is singular or inconsistent")
    return [red[i][n] for i in range(n)]


def project_out(v: Sequence, basis_rref: Sequence[Sequence[Fraction]]) -> list[Fraction]:
    """Orthogonal projection of v onto the complement of span(basis).

    ``basis_rref`` must be an orthogonal basis (see :func:`orthogonalize`).
    """
    out = [Fraction(x) for x in v]
    for b in basis_rref:
        bb = dot(b, b)
        c = dot(out, b) / bb
        out = [x - c * y for x, y in zip(out, b)]
    return out


def orthogonalize(vectors: Sequence[Sequence]) -> list[list[Fraction]]:
    """Gram-Schmidt without normalisation, exact."""
    basis: list[list[Fraction]] = []
    for v in vectors:
        w = project_out(v, basis)
        if any(w):
            basis.append(w)
    return basis
