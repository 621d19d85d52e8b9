"""GIT wall-and-chamber combinatorics for v = (1, n*delta).

Stability parameters live in Theta_v, identified with Q^(r+1) through the
coordinates (theta_0, ..., theta_r) = (theta(rho_0), ..., theta(rho_r)); the
framing coordinate is eliminated by theta(rho_inf) = -n * theta(delta). A
class gamma = (gamma_inf, sum gamma_i rho_i) therefore pairs with theta
through the covector gamma_i - n * gamma_inf * delta_i.

The walls are

    delta^perp,  (m*delta + alpha)^perp,  (m*delta - alpha)^perp

for positive roots alpha of the finite root system and 0 <= m < n. Everything
here happens inside the fundamental cone F = {theta(delta) >= 0,
theta(rho_i) >= 0}, the only region on which the toolkit certifies a fan.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from . import polycone
from .polycone import Cone, ConeError, Functional, RationalVector, cone_eq, cone_from_h, contains, \
    relint_point, subcone
from .rootsys import Root, RootSystem, parse_nodes, phi_plus_K

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 2 ** 20

N1_CAVEAT = ("n = 1: Picard rank and Q-factoriality are computed combinatorially only; "
             "the linearisation map has a one-dimensional kernel and is not modelled")


class BudgetExceeded(RuntimeError):
    def __init__(self, used: int, budget: int, what: str):
        super().__init__(f"{what}: more than {budget} candidate sign vectors (budget {budget}, reached {used})")
        self.used = used
        self.budget = budget


class _Budget:
    def __init__(self, limit: int, what: str):
        self.limit, self.used, self.what = limit, 0, what

    def spend(self, k: int = 1):
        self.used += k
        if self.used > self.limit:
            raise BudgetExceeded(self.used, self.limit, self.what)


# -- functionals in Theta_v coordinates ---------------------------------------

def theta_functional(rs: RootSystem, n: int, gamma: Sequence[int], gamma_inf: int = 0) -> Functional:
    """Covector of gamma in Z (+) R(Gamma) on Theta_v (gamma indexed 0..r)."""
    return Functional.of([g - n * gamma_inf * d for g, d in zip(gamma, rs.delta)])


def delta_functional(rs: RootSystem) -> Functional:
    return Functional(rs.delta)


def rho_functional(rs: RootSystem, i: int) -> Functional:
    return Functional(tuple(int(j == i) for j in range(rs.rank + 1)))


def _affine(root: Root) -> tuple[int, ...]:
    return (0,) + tuple(root)


def _combo(rs: RootSystem, m: int, sign: int, root: Root) -> tuple[int, ...]:
    return tuple(m * d + sign * a for d, a in zip(rs.delta, _affine(root)))


def theta_delta(rs: RootSystem, theta: Sequence) -> Fraction:
    return Fraction(sum(d * t for d, t in zip(rs.delta, theta)))


def cone_F(rs: RootSystem, n: int = 1) -> Cone:
    """The simplicial cone theta(delta) >= 0, theta(rho_i) >= 0 (independent of n)."""
    return _cone_F(rs)


@lru_cache(maxsize=None)
def _cone_F(rs: RootSystem) -> Cone:
    ineqs = [delta_functional(rs)] + [rho_functional(rs, i) for i in rs.nodes]
    return cone_from_h([], ineqs, rs.rank + 1)


# -- arrangement ---------------------------------------------------------------

@dataclass(frozen=True)
class Arrangement:
    rs: RootSystem
    n: int
    hyperplanes: tuple[Functional, ...]
    labels: tuple[str, ...]
    cuts_interior: tuple[bool, ...]

    @property
    def interior_cutting(self) -> list[Functional]:
        return [h for h, c in zip(self.hyperplanes, self.cuts_interior) if c]

    @property
    def dim(self) -> int:
        return self.rs.rank + 1

    @property
    def F(self) -> Cone:
        return cone_F(self.rs, self.n)

    def signs(self, theta: Sequence) -> tuple[int, ...]:
        out = []
        for h in self.hyperplanes:
            v = h(theta)
            out.append((v > 0) - (v < 0))
        return tuple(out)

    def to_json(self) -> dict:
        return {
            "type": str(self.rs.dynkin),
            "n": self.n,
            "diagram": self.rs.diagram(),
            "count": len(self.hyperplanes),
            "hyperplanes": [
                {"label": lab, "normal": list(h), "interior_cutting": cut}
                for h, lab, cut in zip(self.hyperplanes, self.labels, self.cuts_interior)
            ],
            "interior_cutting_count": sum(self.cuts_interior),
        }


def _root_label(root: Root) -> str:
    return "a[" + ",".join(map(str, root)) + "]"


def build_arrangement(rs: RootSystem, n: int) -> Arrangement:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    return _build_arrangement(rs, n)


@lru_cache(maxsize=None)
def _build_arrangement(rs: RootSystem, n: int) -> Arrangement:
    candidates: list[tuple[str, tuple[int, ...]]] = [("delta", rs.delta)]
    for m in range(n):
        for a in rs.positive_roots:
            if m == 0:
                candidates.append((_root_label(a), _combo(rs, 0, 1, a)))
                candidates.append(("-" + _root_label(a), _combo(rs, 0, -1, a)))
            else:
                candidates.append((f"{m}d-{_root_label(a)}", _combo(rs, m, -1, a)))
                candidates.append((f"{m}d+{_root_label(a)}", _combo(rs, m, 1, a)))
    seen: dict[Functional, str] = {}
    for label, vec in candidates:
        h = Functional.of(vec).canonical()
        seen.setdefault(h, label)
    hyperplanes = tuple(seen)
    F = cone_F(rs, n)
    cuts = tuple(any(h(r) > 0 for r in F.rays) and any(h(r) < 0 for r in F.rays) for h in hyperplanes)
    return Arrangement(rs, n, hyperplanes, tuple(seen.values()), cuts)


# -- GIT cones -----------------------------------------------------------------

@dataclass(frozen=True)
class GitCone:
    cone: Cone
    sign_vector: tuple[int, ...]
    label: str = "other"

    @property
    def dim(self) -> int:
        return self.cone.dim

    @property
    def signs(self) -> str:
        return "".join("+" if s > 0 else "-" if s < 0 else "0" for s in self.sign_vector)

    def to_json(self) -> dict:
        out = {"label": self.label}
        out.update(self.cone.to_json())
        out["sign_vector"] = self.signs
        return out


def _as_cone(c) -> Cone:
    return c.cone if isinstance(c, GitCone) else c


def _interior_point(c: Cone) -> RationalVector:
    if c.dim == 0:
        return tuple(Fraction(0) for _ in range(c.ambient_dim))
    return relint_point(c)


def _wrap(a: Arrangement, c: Cone, label: str) -> GitCone:
    return GitCone(polycone.irredundant(c), a.signs(_interior_point(c)), label)


def _K_label(K) -> str:
    return "{" + ",".join(map(str, sorted(K))) + "}"


def _check_n(n):
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")


def sigma_K(rs: RootSystem, n: int, K: Iterable[int]) -> GitCone:
    """theta(rho_k) = 0 (k in K), theta(rho_i) >= (n-1) theta(delta) (i not in K), theta(delta) >= 0."""
    _check_n(n)
    K = parse_nodes(rs, K)
    d = delta_functional(rs)
    eqs = [rho_functional(rs, k) for k in sorted(K)]
    ineqs = [d] + [Functional.of([e - (n - 1) * dd for e, dd in zip(rho_functional(rs, i), rs.delta)])
                   for i in rs.nodes if i not in K]
    c = cone_from_h(eqs, ineqs, rs.rank + 1)
    return _wrap(build_arrangement(rs, n), c, "sigma_" + _K_label(K))


def sigma_prime_K(rs: RootSystem, n: int, K: Iterable[int]) -> GitCone:
    """theta(delta) = 0, theta(rho_k) = 0 (k in K), theta(rho_i) >= 0 otherwise."""
    _check_n(n)
    K = parse_nodes(rs, K)
    eqs = [delta_functional(rs)] + [rho_functional(rs, k) for k in sorted(K)]
    ineqs = [rho_functional(rs, i) for i in rs.nodes if i not in K]
    c = cone_from_h(eqs, ineqs, rs.rank + 1)
    if c.dim != rs.rank - len(K):
        raise AssertionError(f"sigma'_K has dimension {c.dim}, expected {rs.rank - len(K)}")
    return _wrap(build_arrangement(rs, n), c, "sigma_prime_" + _K_label(K))


def chamber_C_K(rs: RootSystem, n: int, K: Iterable[int]) -> GitCone:
    """Closure of {theta(rho_k) > 0, theta(rho_i) > (n-1) theta(delta), theta(delta) > sum_K delta_k theta(rho_k)}."""
    _check_n(n)
    K = parse_nodes(rs, K)
    ineqs = [rho_functional(rs, k) for k in sorted(K)]
    ineqs += [Functional.of([e - (n - 1) * dd for e, dd in zip(rho_functional(rs, i), rs.delta)])
              for i in rs.nodes if i not in K]
    top = [dd - (rs.delta[j] if j in K else 0) for j, dd in enumerate(rs.delta)]
    ineqs.append(Functional.of(top))
    c = cone_from_h([], ineqs, rs.rank + 1)
    if c.dim != rs.rank + 1:
        raise AssertionError(f"C_K closure has dimension {c.dim}, expected {rs.rank + 1}")
    return _wrap(build_arrangement(rs, n), c, "chamber_" + _K_label(K))


def chamber_witness(rs: RootSystem, n: int, K: Iterable[int]) -> RationalVector:
    """theta(rho_k) = 1 on K, theta(delta) = h, theta(rho_i) = (n-1)h + 1 off K."""
    K = parse_nodes(rs, K)
    h = rs.coxeter
    theta = [Fraction(0)] + [Fraction(1 if i in K else (n - 1) * h + 1) for i in rs.nodes]
    theta[0] = h - sum(d * t for d, t in zip(rs.delta[1:], theta[1:]))
    return tuple(theta)


def in_interior(c: Cone, theta: Sequence) -> bool:
    """theta is in the interior of a full-dimensional cone."""
    return c.dim == c.ambient_dim and all(g(theta) > 0 for g in polycone.facets(c))


# -- localisation ----------------------------------------------------------------

def _require_in_F(a: Arrangement, theta: Sequence, what: str):
    if len(theta) != a.dim:
        raise ConeError(f"dimension mismatch: expected {a.dim} coordinates, got {len(theta)}")
    if not contains(a.F, theta):
        raise ConeError(f"{what} only defined inside F; point {tuple(map(str, theta))} is outside F")


def _closeness_key(f: Functional, theta):
    v = f(theta)
    return Fraction(v * v, sum(c * c for c in f.coeffs))


def _cell(a: Arrangement, signs: Sequence[int], within: Cone, reference=None) -> Cone:
    eqs = list(within.equalities) + [h for h, s in zip(a.hyperplanes, signs) if s == 0]
    ineqs = list(within.inequalities) + [h if s > 0 else -h for h, s in zip(a.hyperplanes, signs) if s != 0]
    if reference is not None:
        # nearest walls first: they are the likely facets, so later ones are redundant
        ineqs.sort(key=lambda f: _closeness_key(f, reference))
    return cone_from_h(eqs, ineqs, a.dim)


def git_cone_of(a: Arrangement, theta: Sequence) -> GitCone:
    """The GIT cone containing theta in its relative interior."""
    _require_in_F(a, theta, "git_cone_of")
    theta = tuple(Fraction(x) for x in theta)
    signs = a.signs(theta)
    c = _cell(a, signs, a.F, reference=theta)
    return GitCone(polycone.irredundant(c), signs, "other")


def is_git_cone(a: Arrangement, c) -> bool:
    """c is the closure of a single cell of the arrangement inside F."""
    c = _as_cone(c)
    if not subcone(c, a.F):
        return False
    return cone_eq(git_cone_of(a, _interior_point(c)).cone, c)


def is_chamber(a: Arrangement, c) -> bool:
    """Full-dimensional and on one weak side of every wall (c must lie in F)."""
    c = _as_cone(c)
    if not subcone(c, a.F):
        raise ConeError("chamber test only defined inside F")
    if c.dim != a.dim:
        return False
    for h in a.hyperplanes:
        vals = [h(r) for r in c.rays]
        if any(v > 0 for v in vals) and any(v < 0 for v in vals):
            return False
    return True


def minimal_face_of_F(rs: RootSystem, n: int, c) -> Cone:
    c = _as_cone(c)
    F = cone_F(rs, n)
    if not subcone(c, F):
        raise ConeError("cone is not contained in F")
    gens = list(c.rays) + list(c.lineality)
    tight = [g for g in F.inequalities if all(g(x) == 0 for x in gens)]
    return polycone.face(F, tight)


def picard_rank(a: Arrangement, theta: Sequence) -> int:
    return git_cone_of(a, theta).dim


def is_q_factorial(a: Arrangement, theta: Sequence) -> bool:
    gc = git_cone_of(a, theta)
    return gc.dim == minimal_face_of_F(a.rs, a.n, gc.cone).dim


# -- enumeration ---------------------------------------------------------------

def _cutting(a: Arrangement, c: Cone) -> list[int]:
    """Indices of walls meeting the relative interior of c in a codimension-one set."""
    out = []
    for i, h in enumerate(a.hyperplanes):
        vals = [h(r) for r in c.rays]
        if any(v > 0 for v in vals) and any(v < 0 for v in vals):
            out.append(i)
    return out


def _split(a: Arrangement, start: Cone, walls: Sequence[int], budget: _Budget) -> list[Cone]:
    """Refine ``start`` by the given walls, keeping cells of full dimension in ``start``."""
    regions = [start]
    for i in walls:
        h = a.hyperplanes[i]
        nxt = []
        for R in regions:
            vals = [h(r) for r in R.rays]
            if all(v >= 0 for v in vals) or all(v <= 0 for v in vals):
                budget.spend(1)
                nxt.append(R)
                continue
            budget.spend(2)
            for side in (h, -h):
                piece = cone_from_h(list(R.equalities), list(R.inequalities) + [side], a.dim)
                if piece.dim == start.dim:
                    nxt.append(polycone.irredundant(piece))
        regions = nxt
    return regions


def _sorted(cones: Iterable[GitCone]) -> list[GitCone]:
    return sorted(cones, key=lambda g: (g.cone.dim, g.cone.rays, g.cone.lineality))


def chambers_containing(a: Arrangement, c, budget: int = DEFAULT_BUDGET) -> list[GitCone]:
    """All chamber closures in F whose closure contains c."""
    c = _as_cone(c)
    if not subcone(c, a.F):
        raise ConeError("chambers_containing only defined inside F")
    p = _interior_point(c)
    signs = a.signs(p)
    free = [i for i, cut in enumerate(a.cuts_interior) if cut and signs[i] == 0]
    fixed = [i for i, cut in enumerate(a.cuts_interior) if cut and signs[i] != 0]
    ineqs = list(a.F.inequalities) + [a.hyperplanes[i] if signs[i] > 0 else -a.hyperplanes[i] for i in fixed]
    start = cone_from_h([], ineqs, a.dim)
    if start.dim != a.dim:
        return []
    regions = _split(a, start, free, _Budget(budget, "chambers_containing"))
    out = [_wrap(a, R, "chamber") for R in regions if subcone(c, R)]
    return _sorted(out)


def _check_face_of_F(a: Arrangement, Fp: Cone):
    if not polycone.is_face_of(Fp, a.F):
        raise ConeError("expected a face of F")


def top_cells(a: Arrangement, Fp: Cone | None = None, budget: int = DEFAULT_BUDGET) -> list[GitCone]:
    """GIT cones of dimension dim(Fp) inside the face Fp of F (default: the chambers in F)."""
    Fp = a.F if Fp is None else _as_cone(Fp)
    _check_face_of_F(a, Fp)
    if Fp.dim == 0:
        return [_wrap(a, Fp, "other")]
    regions = _split(a, Fp, _cutting(a, Fp), _Budget(budget, "top_cells"))
    label = "chamber" if Fp.dim == a.dim else "other"
    return _sorted(_wrap(a, R, label) for R in regions)


def enumerate_git_cones_in_face(a: Arrangement, Fp, d: int, budget: int = DEFAULT_BUDGET) -> list[GitCone]:
    """All GIT cones of dimension d contained in the face Fp of F."""
    Fp = _as_cone(Fp)
    _check_face_of_F(a, Fp)
    if d > Fp.dim or d < 0:
        return []
    tops = top_cells(a, Fp, budget)
    if d == Fp.dim:
        return tops
    seen, out = set(), []
    for t in tops:
        for f in polycone.faces_of_dim(t.cone, d):
            key = (f.rays, f.lineality)
            if key not in seen:
                seen.add(key)
                out.append(_wrap(a, f, "other"))
    return _sorted(out)


def adjacency(cells: Sequence[GitCone]) -> list[tuple[int, int]]:
    """Pairs of cells sharing a common facet."""
    pairs = set()
    for i, ci in enumerate(cells):
        for g in polycone.facets(ci.cone):
            fc = polycone.face(ci.cone, [g])
            for j, cj in enumerate(cells):
                if j != i and subcone(fc, cj.cone):
                    pairs.add((min(i, j), max(i, j)))
    return sorted(pairs)


def walk_chambers(a: Arrangement, Fp: Cone | None = None, budget: int = DEFAULT_BUDGET) -> list[GitCone]:
    """Top cells of Fp found by walking across walls from one starting cell.

    Independent of the sign-vector refinement in :func:`top_cells`: each step
    leaves a cell through the relative interior of a facet and localises the
    landing point with :func:`git_cone_of`.
    """
    Fp = a.F if Fp is None else _as_cone(Fp)
    _check_face_of_F(a, Fp)
    spent = _Budget(budget, "walk_chambers")
    start = git_cone_of(a, _generic_point(a, Fp))
    found = {start.cone.rays: start}
    queue = [start]
    while queue:
        cell = queue.pop()
        centre = relint_point(cell.cone)
        for g in polycone.facets(cell.cone):
            fc = polycone.face(cell.cone, [g])
            p = relint_point(fc)
            if any(f(p) == 0 for f in Fp.inequalities):
                continue  # facet lies on the boundary of Fp
            spent.spend(1)
            q = _step_across(a, Fp, p, centre)
            nb = git_cone_of(a, q)
            if nb.cone.rays not in found:
                found[nb.cone.rays] = nb
                queue.append(nb)
    return _sorted(GitCone(g.cone, g.sign_vector, "chamber" if Fp.dim == a.dim else "other")
                   for g in found.values())


def _generic_point(a: Arrangement, Fp: Cone) -> RationalVector:
    """A point of relint(Fp) off every wall that cuts relint(Fp)."""
    base = relint_point(Fp)
    rays = list(Fp.rays)
    walls = [a.hyperplanes[i] for i in _cutting(a, Fp)]
    k = 1
    while True:
        # moment-curve perturbation: finitely many k make some wall vanish
        p = tuple(b + sum(Fraction(k ** (j + 1), 10 ** (3 * (j + 1))) * r[idx] for j, r in enumerate(rays))
                  for idx, b in enumerate(base))
        if all(h(p) != 0 for h in walls):
            return p
        k += 1


def _step_across(a: Arrangement, Fp: Cone, p, centre) -> RationalVector:
    """Point just beyond p, away from centre, crossing only the walls through p."""
    direction = [x - y for x, y in zip(p, centre)]
    t = Fraction(1)
    for h in list(a.hyperplanes) + list(Fp.inequalities):
        hp, hd = h(p), h(direction)
        if hp != 0 and hp * hd < 0:
            t = min(t, Fraction(-hp, 1) / hd / 2 if hd else t)
    return tuple(x + t * y for x, y in zip(p, direction))


# -- verification ----------------------------------------------------------------

@dataclass
class Clause:
    name: str
    expected: str
    computed: str
    passed: bool | None

    def to_json(self) -> dict:
        return {"name": self.name, "expected": self.expected, "computed": self.computed, "pass": self.passed}


@dataclass
class VerificationReport:
    dynkin: str
    n: int
    K: tuple[int, ...]
    clauses: list[Clause] = field(default_factory=list)

    @property
    def overall(self) -> bool | None:
        flags = [c.passed for c in self.clauses]
        if any(f is False for f in flags):
            return False
        if any(f is None for f in flags):
            return None
        return True

    def clause(self, prefix: str) -> Clause:
        return next(c for c in self.clauses if c.name.startswith(prefix))

    def to_json(self) -> dict:
        return {
            "type": self.dynkin,
            "n": self.n,
            "K": list(self.K),
            "clauses": [c.to_json() for c in self.clauses],
            "overall": self.overall,
        }


def _describe(c: Cone) -> str:
    return f"dim {c.dim}, rays {[list(r) for r in c.rays]}"


def verify_main_theorem(rs: RootSystem, n: int, K: Iterable[int], budget: int = DEFAULT_BUDGET,
                        uniqueness: bool = True) -> VerificationReport:
    """Check the combinatorial characterisation of sigma_K clause by clause.

    With ``uniqueness=False`` the sweeps (f) and (g) are left out of the
    report. If they run out of budget they are reported with ``pass`` None,
    which makes ``overall`` None.
    """
    if not isinstance(n, int) or n < 2:
        raise ValueError("verify_main_theorem requires n >= 2")
    K = parse_nodes(rs, K)
    a = build_arrangement(rs, n)
    r = rs.rank
    report = VerificationReport(str(rs.dynkin), n, tuple(sorted(K)))
    sig = sigma_K(rs, n, K)
    sigp = sigma_prime_K(rs, n, K)
    ck = chamber_C_K(rs, n, K)
    theta = relint_point(sig.cone)
    local = git_cone_of(a, theta)

    f = polycone.face(ck.cone, [rho_functional(rs, k) for k in sorted(K)])
    ok = cone_eq(f, sig.cone)
    report.clauses.append(Clause("(a) sigma_K = face of C_K closure on rho_k, k in K", "equal",
                                 "equal" if ok else f"face is {_describe(f)}", ok))

    want = r - len(K) + 1
    git_ok = cone_eq(local.cone, sig.cone)
    report.clauses.append(Clause("(b) sigma_K is a GIT cone of dimension r-|K|+1",
                                 f"GIT cone, dim {want}",
                                 f"{'GIT cone' if git_ok else 'not a GIT cone'}, dim {sig.dim}",
                                 git_ok and sig.dim == want))

    inside = subcone(sigp.cone, sig.cone)
    off_delta = any(delta_functional(rs)(x) != 0 for x in sig.cone.rays)
    report.clauses.append(Clause("(c) sigma'_K in sigma_K and sigma_K not in delta-perp",
                                 "contained, not in delta-perp",
                                 f"{'contained' if inside else 'not contained'}, "
                                 f"{'not in' if off_delta else 'in'} delta-perp",
                                 inside and off_delta))

    qf = local.dim == minimal_face_of_F(rs, n, local.cone).dim
    report.clauses.append(Clause("(d) relint(sigma_K) is Q-factorial", "True", str(qf), qf))

    codim = sig.dim - sigp.dim
    facial = polycone.is_face_of(sigp.cone, sig.cone)
    report.clauses.append(Clause("(e) sigma'_K is a codimension-one face of sigma_K", "face, codim 1",
                                 f"{'face' if facial else 'not a face'}, codim {codim}",
                                 facial and codim == 1))

    if not uniqueness:
        return report

    try:
        cands = _uniqueness_candidates(a, sigp.cone, want, budget)
        ok = len(cands) == 1 and cone_eq(cands[0].cone, sig.cone)
        report.clauses.append(Clause("(f) uniqueness among GIT cones in F'", "1 candidate equal to sigma_K",
                                     f"{len(cands)} candidate(s)" + (", equal to sigma_K" if ok else ""), ok))
    except BudgetExceeded as exc:
        log.warning("clause (f) skipped: %s", exc)
        report.clauses.append(Clause("(f) uniqueness among GIT cones in F'", "1 candidate equal to sigma_K",
                                     f"skipped: {exc}", None))
    try:
        chambers = chambers_containing(a, sig, budget)
        equal = len(chambers) == 1 and cone_eq(chambers[0].cone, ck.cone)
        computed = f"{len(chambers)} chamber(s)"
        if len(chambers) == 1:
            computed += ", equal to C_K closure" if equal else f", {_describe(chambers[0].cone)} != C_K closure"
        report.clauses.append(Clause("(g) unique chamber containing sigma_K is C_K", "[C_K closure]",
                                     computed, equal))
    except BudgetExceeded as exc:
        log.warning("clause (g) skipped: %s", exc)
        report.clauses.append(Clause("(g) unique chamber containing sigma_K is C_K", "[C_K closure]",
                                     f"skipped: {exc}", None))
    return report


def _uniqueness_candidates(a: Arrangement, sigp: Cone, d: int, budget: int) -> list[GitCone]:
    """GIT cones of dimension d, containing sigma'_K, not in delta-perp, Q-factorial.

    Every face of F of dimension d that contains sigma'_K is searched, so the
    minimal face F' is not presupposed.
    """
    delta = delta_functional(a.rs)
    out = []
    for Fp in polycone.faces_of_dim(a.F, d):
        if not subcone(sigp, Fp):
            continue
        for gc in enumerate_git_cones_in_face(a, Fp, d, budget):
            if not subcone(sigp, gc.cone):
                continue
            if all(delta(x) == 0 for x in gc.cone.rays):
                continue
            if not is_q_factorial(a, relint_point(gc.cone)):
                continue
            out.append(gc)
    return out
