"""Exact rational polyhedral cones.

A cone is given by equalities ``<f, x> = 0`` and inequalities ``<f, x> >= 0``
with integer normals. Its generators (extreme rays modulo the lineality space,
plus a lineality basis) are computed by the double description method in
integer arithmetic, so every sign decision downstream is exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

from ._linalg import dot, nullspace, orthogonalize, primitive, project_out, rank, rref

RationalVector = tuple[Fraction, ...]


class ConeError(ValueError):
    pass


@dataclass(frozen=True)
class Functional:
    """Primitive integer covector."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not any(self.coeffs):
            raise ConeError("zero functional")
        if reduce(gcd, self.coeffs, 0) != 1:
            raise ConeError(f"functional {self.coeffs} is not primitive")

    @classmethod
    def of(cls, v: Iterable) -> "Functional":
        """Primitive functional on the ray of ``v`` (orientation kept)."""
        if isinstance(v, Functional):
            return v
        p = primitive(v)
        if not any(p):
            raise ConeError("zero functional")
        return cls(p)

    def canonical(self) -> "Functional":
        """Representative of the hyperplane with first nonzero entry positive."""
        first = next(c for c in self.coeffs if c)
        return self if first > 0 else -self

    def __neg__(self) -> "Functional":
        return Functional(tuple(-c for c in self.coeffs))

    def __call__(self, x: Sequence):
        return dot(self.coeffs, x)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)


@dataclass(frozen=True)
class Cone:
    ambient_dim: int
    equalities: tuple[Functional, ...]
    inequalities: tuple[Functional, ...]
    rays: tuple[tuple[int, ...], ...]
    lineality: tuple[tuple[int, ...], ...]
    dim: int

    @property
    def is_zero(self) -> bool:
        return self.dim == 0

    @property
    def is_pointed(self) -> bool:
        return not self.lineality

    def to_json(self) -> dict:
        return {
            "equalities": [list(f) for f in self.equalities],
            "inequalities": [list(f) for f in self.inequalities],
            "rays": [list(r) for r in self.rays],
            "lineality": [list(v) for v in self.lineality],
            "dim": self.dim,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    def __contains__(self, point) -> bool:
        return contains(self, point)


def _coerce(fs, d: int) -> list[Functional]:
    out = []
    for f in fs:
        f = Functional.of(f)
        if len(f) != d:
            raise ConeError(f"functional {f.coeffs} has length {len(f)}, ambient dimension is {d}")
        out.append(f)
    return out


def _dedup(fs: Iterable[Functional]) -> list[Functional]:
    seen, out = set(), []
    for f in fs:
        if f not in seen:
            seen.add(f)
            out.append(f)
    return out


def _prim(v) -> tuple[int, ...]:
    g = reduce(gcd, v, 0)
    return tuple(x // g for x in v) if g > 1 else tuple(v)


def _double_description(equalities, inequalities, d):
    """Generators of {E x = 0, G x >= 0}: (rays, lineality basis).

    Invariant: every processed inequality vanishes on the current lineality
    basis, and the rays are a minimal generating set modulo lineality.
    """
    lin = [tuple(v) for v in nullspace([f.coeffs for f in equalities], d)] if equalities else \
        [tuple(1 if i == j else 0 for j in range(d)) for i in range(d)]
    rays: list[tuple[int, ...]] = []
    zeros: list[int] = []  # bitmask of processed inequalities tight at each ray
    for bit, g in enumerate(inequalities):
        mask = 1 << bit
        gvals = [g(l) for l in lin]
        piv = next((i for i, v in enumerate(gvals) if v), None)
        if piv is not None:
            l, gl = lin[piv], gvals[piv]
            if gl < 0:
                l, gl = tuple(-x for x in l), -gl
            lin = [_prim(tuple(gl * a - gv * b for a, b in zip(lj, l)))
                   for j, (lj, gv) in enumerate(zip(lin, (g(x) for x in lin))) if j != piv]
            new_rays = []
            for r, z in zip(rays, zeros):
                gr = g(r)
                new_rays.append(_prim(tuple(gl * a - gr * b for a, b in zip(r, l))) if gr else r)
            rays = new_rays + [l]
            # projected rays now lie on g = 0; the new ray l is tight on every earlier inequality
            zeros = [z | mask for z in zeros] + [mask - 1]
            continue
        vals = [g(r) for r in rays]
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        zer = [i for i, v in enumerate(vals) if v == 0]
        if not neg:
            zeros = [z | (mask if vals[i] == 0 else 0) for i, z in enumerate(zeros)]
            continue
        new_rays = [rays[i] for i in pos] + [rays[i] for i in zer]
        new_zeros = [zeros[i] for i in pos] + [zeros[i] | mask for i in zer]
        for p in pos:
            for q in neg:
                common = zeros[p] & zeros[q]
                if any((zeros[w] & common) == common for w in range(len(rays)) if w != p and w != q):
                    continue
                v = tuple(vals[p] * a - vals[q] * b for a, b in zip(rays[q], rays[p]))
                new_rays.append(_prim(v))
                new_zeros.append(common | mask)
        rays, zeros = new_rays, new_zeros
    return rays, lin


def _canonical_generators(rays, lin, d):
    """Lineality as primitive RREF basis; rays projected orthogonally off it, sorted."""
    if lin:
        red, _ = rref(lin)
        lin_out = sorted((primitive(row) for row in red), reverse=True)
        ortho = orthogonalize(lin_out)
        rays = [primitive(project_out(r, ortho)) for r in rays]
        rays = [r for r in rays if any(r)]
    else:
        lin_out = []
    return tuple(sorted(set(rays))), tuple(lin_out)


def cone_from_h(equalities: Sequence, inequalities: Sequence, ambient_dim: int) -> Cone:
    """Cone {x : <e, x> = 0 for e in equalities, <g, x> >= 0 for g in inequalities}.

    Inequalities vanishing on the whole cone are moved to the equalities.
    An infeasible system yields the zero cone.
    """
    d = ambient_dim
    eqs = _dedup(f.canonical() for f in _coerce(equalities, d))
    ineqs = _dedup(_coerce(inequalities, d))
    rays, lin = _double_description(eqs, ineqs, d)
    rays, lin = _canonical_generators(rays, lin, d)
    implied = [g for g in ineqs if all(g(r) == 0 for r in rays)]
    if implied:
        eqs = _dedup(eqs + [g.canonical() for g in implied])
        ineqs = [g for g in ineqs if g not in set(implied)]
    dimension = len(lin) + rank(rays) if rays else len(lin)
    return Cone(d, tuple(eqs), tuple(ineqs), rays, lin, dimension)


def cone_from_v(rays: Sequence, lineality: Sequence, ambient_dim: int) -> Cone:
    """Cone generated by ``rays`` plus the span of ``lineality``.

    The H-representation is obtained from the dual cone: its rays are the
    facet normals and its lineality space gives the equalities.
    """
    if not rays and not lineality:
        unit = [[int(i == j) for j in range(ambient_dim)] for i in range(ambient_dim)]
        return cone_from_h(unit, [], ambient_dim)
    dual = cone_from_h(list(lineality), list(rays), ambient_dim)
    equalities = [Functional.of(v) for v in dual.lineality]
    facets = [Functional.of(v) for v in dual.rays]
    return cone_from_h(equalities, facets, ambient_dim)


def facets(c: Cone) -> list[Functional]:
    """Irredundant facet normals of ``c`` (modulo its equalities)."""
    return [Functional.of(v) for v in cone_from_h(list(c.lineality), list(c.rays), c.ambient_dim).rays] \
        if c.dim > 0 else []


def irredundant(c: Cone) -> Cone:
    """Same cone with a canonical H-representation: facet normals and an RREF equality basis."""
    if c.dim == 0:
        return c
    dual = cone_from_h(list(c.lineality), list(c.rays), c.ambient_dim)
    eqs = tuple(Functional.of(v).canonical() for v in dual.lineality)
    ineqs = tuple(Functional.of(v) for v in dual.rays)
    return Cone(c.ambient_dim, eqs, ineqs, c.rays, c.lineality, c.dim)


def dim(c: Cone) -> int:
    return c.dim


def _as_fractions(p) -> RationalVector:
    return tuple(Fraction(x) for x in p)


def relint_point(c: Cone) -> RationalVector:
    """Sum of the ray generators and the lineality basis."""
    if c.dim == 0:
        raise ConeError("no relative interior point: zero cone")
    gens = list(c.rays) + list(c.lineality)
    return tuple(Fraction(sum(col)) for col in zip(*gens))


def _check_dim(c: Cone, n: int):
    if c.ambient_dim != n:
        raise ConeError(f"dimension mismatch: cone lives in dimension {c.ambient_dim}, got {n}")


def contains(c: Cone, p: Sequence) -> bool:
    _check_dim(c, len(p))
    return all(e(p) == 0 for e in c.equalities) and all(g(p) >= 0 for g in c.inequalities)


def subcone(a: Cone, b: Cone) -> bool:
    """a is contained in b."""
    _check_dim(b, a.ambient_dim)
    return all(contains(b, r) for r in a.rays) and \
        all(contains(b, v) and contains(b, [-x for x in v]) for v in a.lineality)


def cone_eq(a: Cone, b: Cone) -> bool:
    return a.dim == b.dim and subcone(a, b) and subcone(b, a)


def face(c: Cone, tight: Sequence) -> Cone:
    """The face of ``c`` cut out by supporting hyperplanes in ``tight``."""
    tight = _coerce(tight, c.ambient_dim)
    for f in tight:
        if any(f(r) < 0 for r in c.rays) or any(f(v) != 0 for v in c.lineality):
            raise ConeError(f"not a supporting halfspace: {f.coeffs}")
    if not tight:
        return c
    return cone_from_h(list(c.equalities) + tight, list(c.inequalities), c.ambient_dim)


def is_face_of(f: Cone, c: Cone) -> bool:
    if not subcone(f, c):
        return False
    gens = list(f.rays) + list(f.lineality)
    vanishing = [g for g in c.inequalities if all(g(x) == 0 for x in gens)]
    return cone_eq(face(c, vanishing), f)


def faces_of_dim(c: Cone, k: int) -> list[Cone]:
    """All faces of ``c`` of dimension ``k`` (pointed cones only)."""
    if k > c.dim or k < 0:
        return []
    if k == c.dim:
        return [c]
    level = [c]
    for _ in range(c.dim - k):
        seen, nxt = set(), []
        for cell in level:
            for g in facets(cell):
                fc = face(cell, [g])
                key = (fc.rays, fc.lineality)
                if key not in seen:
                    seen.add(key)
                    nxt.append(fc)
        level = nxt
    return sorted(level, key=lambda x: (x.rays, x.lineality))


def scale_to_integer(p: Sequence) -> tuple[int, ...]:
    """Positive multiple of a rational point with integer entries (same signs everywhere)."""
    p = [Fraction(x) for x in p]
    den = reduce(lcm, (x.denominator for x in p), 1)
    return tuple(int(x * den) for x in p)
