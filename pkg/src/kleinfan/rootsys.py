"""Finite and affine simply-laced root data.

Node labels follow Bourbaki:

* ``A_r``: the path 1 - 2 - ... - r; the affine node 0 joins 1 and r
  (a double edge when r = 1).
* ``D_r``: the path 1 - 2 - ... - (r-2) with r-1 and r both attached to r-2;
  the affine node 0 joins node 2.
* ``E_r``: the path 1 - 3 - 4 - 5 - ... - r with node 2 attached to 4; the
  affine node 0 joins node 2 (E6), node 1 (E7) or node 8 (E8).

Roots are integer tuples of coefficients on the simple roots 1..r.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from ._linalg import nullspace

Root = tuple[int, ...]


class RootSystemError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class DynkinType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in ("A", "D", "E"):
            raise RootSystemError(f"unknown family {self.family!r}; expected one of A, D, E")
        if self.family == "A" and self.rank < 1:
            raise RootSystemError("type A requires rank >= 1")
        if self.family == "D" and self.rank < 4:
            raise RootSystemError("type D requires rank >= 4")
        if self.family == "E" and self.rank not in (6, 7, 8):
            raise RootSystemError("type E requires rank in {6, 7, 8}")

    @classmethod
    def parse(cls, text: str) -> "DynkinType":
        m = re.fullmatch(r"\s*([ADEade])_?(\d+)\s*", text)
        if not m:
            raise RootSystemError(f"cannot parse Dynkin type {text!r} (expected e.g. A2, D4, E8)")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def finite_edges(dynkin: DynkinType) -> list[tuple[int, int]]:
    r = dynkin.rank
    if dynkin.family == "A":
        return [(i, i + 1) for i in range(1, r)]
    if dynkin.family == "D":
        return [(i, i + 1) for i in range(1, r - 2)] + [(r - 2, r - 1), (r - 2, r)]
    return [(1, 3), (2, 4)] + [(i, i + 1) for i in range(3, r)]


def affine_edges(dynkin: DynkinType) -> list[tuple[int, int]]:
    """Edges of the extended diagram; (0, 1) appears twice for A1."""
    r = dynkin.rank
    if dynkin.family == "A":
        extra = [(0, 1), (0, r)]
    elif dynkin.family == "D":
        extra = [(0, 2)]
    else:
        extra = [(0, {6: 2, 7: 1, 8: 8}[r])]
    return extra + finite_edges(dynkin)


def _cartan(size: int, edges, offset: int) -> tuple[tuple[int, ...], ...]:
    m = [[2 if i == j else 0 for j in range(size)] for i in range(size)]
    for a, b in edges:
        m[a - offset][b - offset] -= 1
        m[b - offset][a - offset] -= 1
    return tuple(tuple(row) for row in m)


@dataclass(frozen=True)
class RootSystem:
    dynkin: DynkinType
    cartan: tuple[tuple[int, ...], ...]
    affine_cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...]
    delta: tuple[int, ...]
    coxeter: int

    @property
    def rank(self) -> int:
        return self.dynkin.rank

    @property
    def highest_root(self) -> Root:
        return self.positive_roots[-1]

    @property
    def nodes(self) -> tuple[int, ...]:
        return tuple(range(1, self.rank + 1))

    def diagram(self) -> dict:
        """Labelled extended Dynkin diagram, for echoing in outputs."""
        return {
            "type": str(self.dynkin),
            "nodes": list(range(self.rank + 1)),
            "affine_node": 0,
            "edges": [list(e) for e in affine_edges(self.dynkin)],
            "marks": list(self.delta),
        }


def _height(root: Root) -> int:
    return sum(root)


def _positive_roots(cartan) -> list[Root]:
    """Closure from the simple roots via root strings.

    For a root a and simple root i with p = largest k such that a - k*rho_i is
    a root, a + rho_i is a root iff <a, rho_i> < p.
    """
    r = len(cartan)
    simple = [tuple(1 if j == i else 0 for j in range(r)) for i in range(r)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = set()
        for a in layer:
            for i in range(r):
                p = 0
                down = list(a)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                pairing = sum(cartan[i][j] * a[j] for j in range(r))
                if pairing < p:
                    b = list(a)
                    b[i] += 1
                    nxt.add(tuple(b))
        nxt -= roots
        roots |= nxt
        layer = sorted(nxt)
    return sorted(roots, key=lambda a: (_height(a), a))


@lru_cache(maxsize=None)
def build_root_system(dynkin: DynkinType) -> RootSystem:
    r = dynkin.rank
    cartan = _cartan(r, finite_edges(dynkin), offset=1)
    affine = _cartan(r + 1, affine_edges(dynkin), offset=0)
    roots = _positive_roots(cartan)
    kernel = nullspace(affine, r + 1)
    if len(kernel) != 1:
        raise RootSystemError(f"affine Cartan matrix of {dynkin} has kernel of dimension {len(kernel)}")
    delta = kernel[0]
    if delta[0] < 0:
        delta = tuple(-x for x in delta)
    if delta[0] != 1 or min(delta) <= 0:
        raise RootSystemError(f"kernel generator {delta} of {dynkin} is not a positive vector with delta_0 = 1")
    return RootSystem(
        dynkin=dynkin,
        cartan=cartan,
        affine_cartan=affine,
        positive_roots=tuple(roots),
        delta=tuple(delta),
        coxeter=sum(delta),
    )


def parse_nodes(rs: RootSystem, K) -> frozenset[int]:
    """Validate a node subset of {1..r}."""
    K = list(K)
    bad = [k for k in K if not isinstance(k, int) or not 1 <= k <= rs.rank]
    if bad:
        raise RootSystemError(f"nodes {bad} outside 1..{rs.rank} for {rs.dynkin}")
    if len(set(K)) != len(K):
        raise RootSystemError(f"duplicate nodes in {K}")
    return frozenset(K)


def phi_plus_K(rs: RootSystem, K) -> list[Root]:
    """Positive roots supported on the nodes in K."""
    K = parse_nodes(rs, K)
    return [a for a in rs.positive_roots
            if all(c == 0 or i + 1 in K for i, c in enumerate(a))]


def reflect(rs: RootSystem, root: Root, i: int) -> Root:
    """Simple reflection s_i (node i in 1..r) applied to a root."""
    pairing = sum(rs.cartan[i - 1][j] * root[j] for j in range(rs.rank))
    out = list(root)
    out[i - 1] -= pairing
    return tuple(out)
