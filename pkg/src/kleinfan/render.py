"""SVG rendering of the height-one slice of F for rank-2 types."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence
from xml.sax.saxutils import escape

from ._linalg import solve
from .gitfan import Arrangement, GitCone, delta_functional, rho_functional
from .polycone import Cone

WIDTH, HEIGHT = 400, 400
# screen positions of the three rays of F: the apex rho_1-perp & rho_2-perp at the
# bottom, the delta-perp edge along the top
_APEX, _LEFT, _RIGHT = (Fraction(200), Fraction(370)), (Fraction(20), Fraction(50)), (Fraction(380), Fraction(50))


class RenderError(ValueError):
    pass


def slice_functional(a: Arrangement) -> tuple[int, ...]:
    """theta(delta) + sum_i theta(rho_i): strictly positive on F minus the origin."""
    d = delta_functional(a.rs)
    return tuple(x + (1 if j > 0 else 0) for j, x in enumerate(d))


class _Chart:
    def __init__(self, a: Arrangement):
        F = a.F
        delta = delta_functional(a.rs)
        r1, r2 = rho_functional(a.rs, 1), rho_functional(a.rs, 2)
        apex = next(r for r in F.rays if delta(r) != 0)
        left = next(r for r in F.rays if delta(r) == 0 and r1(r) == 0)
        right = next(r for r in F.rays if delta(r) == 0 and r2(r) == 0)
        self.rays = [apex, left, right]
        self.screen = [_APEX, _LEFT, _RIGHT]
        self.ell = slice_functional(a)
        self.columns = [[self.rays[j][i] for j in range(3)] for i in range(3)]

    def __call__(self, theta: Sequence) -> tuple[Fraction, Fraction]:
        mu = solve(self.columns, list(theta))
        w = [m * sum(e * x for e, x in zip(self.ell, r)) for m, r in zip(mu, self.rays)]
        total = sum(w)
        lam = [x / total for x in w]
        return (sum(l * p[0] for l, p in zip(lam, self.screen)),
                sum(l * p[1] for l, p in zip(lam, self.screen)))


def _fmt(x: Fraction) -> str:
    return f"{float(x):.3f}"


def _pt(p) -> str:
    return f"{_fmt(p[0])},{_fmt(p[1])}"


def _ordered_polygon(points):
    """Vertices of a convex polygon in angular order (exact)."""
    cx = sum(p[0] for p in points) / len(points)
    cy = sum(p[1] for p in points) / len(points)

    def pseudo_angle(p):
        # monotone in the polar angle, values in [0, 4)
        dx, dy = p[0] - cx, p[1] - cy
        t = dx / (abs(dx) + abs(dy))
        return 1 - t if dy >= 0 else 3 + t

    return sorted(points, key=pseudo_angle)


def wall_segments(a: Arrangement) -> list[tuple[str, tuple, tuple]]:
    """Segments cut on the slice triangle by walls meeting the interior of F."""
    chart = _Chart(a)
    out = []
    for h, label, cut in zip(a.hyperplanes, a.labels, a.cuts_interior):
        if not cut:
            continue
        pts = []
        rays = chart.rays
        for i in range(3):
            for j in range(i + 1, 3):
                hi, hj = h(rays[i]), h(rays[j])
                if hi * hj < 0:
                    pts.append(tuple(hi * b - hj * c for b, c in zip(rays[j], rays[i])))
        for r in rays:
            if h(r) == 0:
                pts.append(r)
        p, q = sorted(chart(x) for x in pts)[:2]
        out.append((label, p, q))
    return out


def _cone_slice(chart: _Chart, c: Cone):
    return [chart(r) for r in c.rays]


def render_slice(a: Arrangement, highlight: Sequence[GitCone] = (), chambers: Sequence[GitCone] = ()) -> str:
    """SVG document of the slice of F, its walls, optional chambers and highlighted cones."""
    if a.rs.rank != 2:
        raise RenderError(f"slice rendering needs a rank-2 type, got {a.rs.dynkin}")
    chart = _Chart(a)
    tri = [chart(r) for r in chart.rays]
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT + 20}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT + 20}">',
        f'<title>GIT cones in F for {a.rs.dynkin}, n={a.n}</title>',
        '<style>.F{fill:none;stroke:#000;stroke-width:1.5}.wall{stroke:#000;stroke-width:1}'
        '.chamber{fill:#f4f4f4;stroke:none}.hl{fill:#d00;stroke:#d00;stroke-width:4;fill-opacity:0.85}'
        'text{font-family:serif;font-size:13px}</style>',
    ]
    for i, ch in enumerate(chambers):
        pts = _ordered_polygon(_cone_slice(chart, ch.cone))
        lines.append(f'<polygon class="chamber" id="chamber-{i}" points="{" ".join(_pt(p) for p in pts)}"/>')
    for h_label, p, q in wall_segments(a):
        lines.append(f'<line class="wall" data-wall="{escape(h_label)}" x1="{_fmt(p[0])}" y1="{_fmt(p[1])}" '
                     f'x2="{_fmt(q[0])}" y2="{_fmt(q[1])}"/>')
    lines.append(f'<polygon class="F" points="{" ".join(_pt(p) for p in tri)}"/>')
    for gc in highlight:
        pts = _cone_slice(chart, gc.cone)
        tag = escape(gc.label)
        if len(pts) == 1:
            (x, y), = pts
            lines.append(f'<circle class="hl" data-cone="{tag}" cx="{_fmt(x)}" cy="{_fmt(y)}" r="4"/>')
        elif len(pts) == 2:
            p, q = sorted(pts)
            lines.append(f'<line class="hl" data-cone="{tag}" x1="{_fmt(p[0])}" y1="{_fmt(p[1])}" '
                         f'x2="{_fmt(q[0])}" y2="{_fmt(q[1])}"/>')
        elif pts:
            pts = _ordered_polygon(pts)
            lines.append(f'<polygon class="hl" data-cone="{tag}" points="{" ".join(_pt(p) for p in pts)}"/>')
        if pts:
            cx = sum(p[0] for p in pts) / len(pts)
            cy = sum(p[1] for p in pts) / len(pts)
            lines.append(f'<text x="{_fmt(cx + 6)}" y="{_fmt(cy + 16)}">{tag}</text>')
    mid = lambda p, q: ((p[0] + q[0]) / 2, (p[1] + q[1]) / 2)
    for (x, y), text in ((mid(tri[1], tri[2]), "delta-perp"), (mid(tri[0], tri[1]), "rho1-perp"),
                         (mid(tri[0], tri[2]), "rho2-perp")):
        lines.append(f'<text x="{_fmt(x - 30)}" y="{_fmt(y - 8)}">{text}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
