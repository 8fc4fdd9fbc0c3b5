"""Hand-rolled SVG diagrams of the polytope, intersection points and trees.

Only spaces of total dimension at most 2 are drawable.  The viewBox is
normalized to the polytope bounding box; output is a deterministic string.
"""

from __future__ import annotations

from fractions import Fraction

from . import category
from .polytope import ProductPolytope

_POINT_COLORS = ("#c02020", "#2040c0", "#108030")
_MARGIN = 0.35
_SCALE = 140.0


def _fmt(x: float) -> str:
    return f"{x:.3f}"


class _Canvas:
    def __init__(self, width: float, height: float):
        self.parts: list[str] = []
        self.width = width
        self.height = height

    def map(self, x: float, y: float) -> tuple[float, float]:
        # polytope coordinates to SVG pixels, y axis flipped
        return ((x + _MARGIN) * _SCALE, (self.height - y - _MARGIN) * _SCALE)

    def line(self, p, q, color="#000000", width=1.5, dash=None):
        x1, y1 = self.map(*p)
        x2, y2 = self.map(*q)
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        self.parts.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            f'stroke="{color}" stroke-width="{width}"{dash_attr}/>')

    def polygon(self, pts, color="#000000", width=2.0):
        mapped = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in (self.map(*p) for p in pts))
        self.parts.append(
            f'<polygon points="{mapped}" fill="none" stroke="{color}" '
            f'stroke-width="{width}"/>')

    def circle(self, p, radius=4.0, color="#000000"):
        x, y = self.map(*p)
        self.parts.append(
            f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{radius}" fill="{color}"/>')

    def text(self, p, content, size=11, color="#000000", dx=6.0, dy=-6.0):
        x, y = self.map(*p)
        self.parts.append(
            f'<text x="{_fmt(x + dx)}" y="{_fmt(y + dy)}" font-size="{size}" '
            f'font-family="monospace" fill="{color}">{content}</text>')

    def render(self) -> str:
        w = _fmt((self.width + _MARGIN) * _SCALE)
        h = _fmt((self.height + _MARGIN) * _SCALE)
        head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
                f'viewBox="0 0 {w} {h}">')
        body = "\n".join(self.parts)
        return f"{head}\n{body}\n</svg>\n"


def _embed(P: ProductPolytope, coords) -> tuple[float, float]:
    vals = [float(c) for c in coords]
    if P.total_dim == 1:
        return vals[0], 0.0
    return vals[0], vals[1]


def _outline(P: ProductPolytope) -> list[tuple[float, float]]:
    if P.total_dim == 1:
        return [(0.0, 0.0), (2.0, 0.0)]
    if len(P.factors) == 1:
        return [(0.0, 0.0), (2.0, 0.0), (0.0, 2.0)]
    return [(0.0, 0.0), (2.0, 0.0), (2.0, 2.0), (0.0, 2.0)]


def _full_point(gen) -> tuple | None:
    return gen.point()


def render_triple(P: ProductPolytope, labels, precision_bits: int = 64) -> str:
    """Diagram of the generator points and the composition trees of a triple."""
    if P.total_dim > 2:
        raise ValueError("plotting supports total dimension <= 2 only")
    if len(labels) != 3:
        raise ValueError("expected three object labels")
    a, b, c = [tuple(int(x) for x in L) for L in labels]
    height = 2.0 if P.total_dim > 1 else 0.6
    canvas = _Canvas(2.0 + _MARGIN, height + _MARGIN)
    outline = _outline(P)
    if len(outline) == 2:
        canvas.line(outline[0], outline[1], width=2.0)
    else:
        canvas.polygon(outline)

    pairs = [(a, b), (b, c), (a, c)]
    spaces = [category.hom_space(P, L, M) for L, M in pairs]
    for (L, M), hs, color in zip(pairs, spaces, _POINT_COLORS):
        canvas.text(_embed(P, (0, 0)), f"{L}->{M}", size=12, color=color,
                    dx=8.0, dy=18.0 + 14.0 * _POINT_COLORS.index(color))
        for g in hs.by_degree(0):
            pt = _full_point(g)
            if pt is None:
                continue
            xy = _embed(P, pt)
            canvas.circle(xy, radius=3.5, color=color)
            canvas.text(xy, f"I={tuple(g.index)}", size=9, color=color)

    if all(x <= y for x, y in zip(a, b)) and all(x <= y for x, y in zip(b, c)):
        for u in spaces[0].by_degree(0):
            for v in spaces[1].by_degree(0):
                tree = category.gradient_tree(u, v)
                if any(t.kind == "identity" for t in tree.factor_trees):
                    continue
                p = P.join(t.v_ab if t.kind == "point" else t.v_ac
                           for t in tree.factor_trees)
                q = P.join(t.v_bc if t.kind == "point" else t.v_ac
                           for t in tree.factor_trees)
                meet = P.join(t.v_ac for t in tree.factor_trees)
                if p != q:
                    canvas.line(_embed(P, p), _embed(P, q), color="#888888",
                                width=1.0, dash="5,4")
                mxy = _embed(P, meet)
                canvas.circle(mxy, radius=2.0, color="#555555")
                canvas.text(mxy, f"{tree.weight().to_float(precision_bits):.4f}",
                            size=8, color="#555555", dx=4.0, dy=10.0)
    return canvas.render()
