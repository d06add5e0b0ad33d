"""Deterministic TikZ and SVG drawings of diagrams, tilings, link patterns and trees.

Each object is drawn once onto a :class:`Canvas` of primitives and then
emitted in either format.  Box (i, j) is the diamond centred at (i, j) with
vertices (i +- 1, j) and (i, j +- 1); the string's path runs through
(i, h(i)).  Coordinates are printed with fixed precision so the output is
byte-stable.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .ballot import Configuration
from .laurent import CASE_A, Case
from .linkpattern import link_pattern
from .strings import PLUS, Diagram, check_sign, diagram, heights
from .tree import Tree

__all__ = ["FORMAT_VERSION", "Canvas", "draw_diagram", "draw_configuration",
           "draw_link_pattern", "draw_tree", "render_diagram",
           "render_configuration", "render_link_pattern", "render_tree", "emit"]

FORMAT_VERSION = 1
SVG_SCALE = 20
FORMATS = ("tikz", "svg")


def _f(x: float) -> str:
    s = f"{x:.2f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


@dataclass
class Canvas:
    """A list of drawing primitives; y grows upwards."""
    items: list = field(default_factory=list)

    def line(self, pts, style: str = "solid"):
        self.items.append(("line", tuple(pts), style))

    def polygon(self, pts, style: str = "solid"):
        self.items.append(("polygon", tuple(pts), style))

    def arc(self, x1: float, x2: float, y: float = 0.0, style: str = "solid"):
        """Upper half circle from (x1, y) to (x2, y)."""
        self.items.append(("arc", (x1, x2, y), style))

    def dot(self, p, r: float = 0.1):
        self.items.append(("dot", (p, r), "solid"))

    def text(self, p, s: str):
        self.items.append(("text", (p, s), "solid"))

    def bounds(self) -> tuple[float, float, float, float]:
        xs, ys = [0.0], [0.0]
        for kind, data, _ in self.items:
            if kind in ("line", "polygon"):
                xs += [p[0] for p in data]
                ys += [p[1] for p in data]
            elif kind == "arc":
                x1, x2, y = data
                xs += [x1, x2]
                ys += [y, y + abs(x2 - x1) / 2]
            else:
                (x, y), _ = data
                xs.append(x)
                ys.append(y)
        return min(xs) - 1, min(ys) - 1, max(xs) + 1, max(ys) + 1


_TIKZ_STYLE = {"solid": "", "dotted": "[dotted]", "thick": "[thick]",
               "dashed": "[dashed]", "arrow": "[dotted,->]"}


def to_tikz(c: Canvas) -> str:
    out = [f"% ballotkl figure, format {FORMAT_VERSION}", "\\begin{tikzpicture}"]
    for kind, data, style in c.items:
        st = _TIKZ_STYLE[style]
        if kind == "line":
            path = "--".join(f"({_f(x)},{_f(y)})" for x, y in data)
            out.append(f"\\draw{st} {path};")
        elif kind == "polygon":
            path = "--".join(f"({_f(x)},{_f(y)})" for x, y in data)
            out.append(f"\\draw{st} {path}--cycle;")
        elif kind == "arc":
            x1, x2, y = data
            r = abs(x2 - x1) / 2
            out.append(f"\\draw{st} ({_f(x1)},{_f(y)}) arc (180:0:{_f(r)});")
        elif kind == "dot":
            (x, y), r = data
            out.append(f"\\filldraw ({_f(x)},{_f(y)}) circle ({_f(r)});")
        else:
            (x, y), s = data
            out.append(f"\\node at ({_f(x)},{_f(y)}) {{${s}$}};")
    out.append("\\end{tikzpicture}")
    return "\n".join(out) + "\n"


_SVG_STYLE = {"solid": 'stroke="black" fill="none"',
              "dotted": 'stroke="black" fill="none" stroke-dasharray="2,3"',
              "dashed": 'stroke="black" fill="none" stroke-dasharray="6,4"',
              "thick": 'stroke="black" fill="none" stroke-width="2"',
              "arrow": 'stroke="black" fill="none" stroke-dasharray="2,3" marker-end="url(#arrow)"'}


def to_svg(c: Canvas) -> str:
    x0, y0, x1, y1 = c.bounds()
    s = SVG_SCALE

    def pt(x, y):
        return f"{_f((x - x0) * s)},{_f((y1 - y) * s)}"

    w, h = _f((x1 - x0) * s), _f((y1 - y0) * s)
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
           f'viewBox="0 0 {w} {h}">',
           f"<!-- ballotkl figure, format {FORMAT_VERSION} -->",
           '<defs><marker id="arrow" markerWidth="6" markerHeight="6" refX="5" '
           'refY="3" orient="auto"><path d="M0,0 L6,3 L0,6 z"/></marker></defs>']
    for kind, data, style in c.items:
        st = _SVG_STYLE[style]
        if kind == "line":
            out.append(f'<polyline points="{" ".join(pt(*p) for p in data)}" {st}/>')
        elif kind == "polygon":
            out.append(f'<polygon points="{" ".join(pt(*p) for p in data)}" {st}/>')
        elif kind == "arc":
            xa, xb, y = data
            r = _f(abs(xb - xa) / 2 * s)
            out.append(f'<path d="M{pt(xa, y)} A{r},{r} 0 0 1 {pt(xb, y)}" {st}/>')
        elif kind == "dot":
            (x, y), r = data
            cx, cy = pt(x, y).split(",")
            out.append(f'<circle cx="{cx}" cy="{cy}" r="{_f(r * s)}" fill="black"/>')
        else:
            (x, y), text = data
            cx, cy = pt(x, y).split(",")
            out.append(f'<text x="{cx}" y="{cy}" font-size="{_f(0.6 * s)}" '
                       f'text-anchor="middle" dominant-baseline="middle">{text}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit(c: Canvas, fmt: str) -> str:
    if fmt == "tikz":
        return to_tikz(c)
    if fmt == "svg":
        return to_svg(c)
    raise ValueError(f"unknown figure format {fmt!r}; choose from {FORMATS}")


def _diamond(i: int, j: int):
    return [(i - 1, j), (i, j + 1), (i + 1, j), (i, j - 1)]


def _frame(c: Canvas, n: int, eps: int):
    """Axes, the boundary line j = eps*i and the vertical line at column n."""
    c.line([(0, 0), (n + 1, 0)], "dashed")
    c.line([(0, 0), (n, eps * n)], "dashed")
    if n:
        c.line([(n, 0), (n, eps * n)], "dashed")


def _path(c: Canvas, alpha: str, eps: int):
    h = heights(alpha, eps)
    c.line([(i, y) for i, y in enumerate(h)], "thick")


def draw_diagram(alpha: str, eps: int = PLUS, boxes: Diagram | None = None) -> Canvas:
    """The diagram of alpha (or an explicit box set) with its path and axes."""
    check_sign(eps)
    c = Canvas()
    n = len(alpha)
    _frame(c, n, eps)
    d = boxes if boxes is not None else diagram(alpha, eps) if alpha else None
    if d is not None:
        for i, j in d.sorted_boxes():
            c.polygon(_diamond(i, j))
    if alpha:
        _path(c, alpha, eps)
    return c


def draw_configuration(conf: Configuration, alpha: str, beta: str,
                       eps: int = PLUS) -> Canvas:
    """Both paths, every box of the skew region, and each strip's centre line."""
    c = Canvas()
    _frame(c, conf.n, eps)
    for i, j in sorted(conf.boxes()):
        c.polygon(_diamond(i, j), "dotted")
    _path(c, alpha, eps)
    _path(c, beta, eps)
    for s in conf:
        if len(s) == 1:
            c.dot(s.start, 0.12)
        else:
            c.line(s.boxes, "thick")
    return c


def draw_link_pattern(beta: str, case: Case = CASE_A) -> Canvas:
    lp = link_pattern(beta, case)
    n = len(beta)
    c = Canvas()
    c.line([(0.5, 0), (n + 0.5, 0)])
    for i in range(1, n + 1):
        c.dot((i, 0), 0.06)
    for i, j in lp.arcs:
        c.arc(i, j)
    if case.kind == "A":
        for marks, lab in ((lp.o_marks, "o"), (lp.e_marks, "e")):
            for i in marks:
                c.line([(i, 0), (i, n / 2 + 1)])
                c.text((i, n / 2 + 1.5), lab)
    else:
        for i, p in sorted(lp.labeled_verticals.items()):
            c.line([(i, 0), (i, n / 2 + 1)])
            c.text((i, n / 2 + 1.5), str(p))
        for i, j in lp.dotted_pairs:
            c.line([(i, 0), (i, n / 2 + 1)])
            c.line([(j, 0), (j, n / 2 + 1)])
            c.line([(i, n / 2 + 1), (j, n / 2 + 1)], "dotted")
        for i in lp.circled_twos:
            c.text((i, -0.6), "\\circ")
    return c


def draw_tree(tree: Tree, labels=None) -> Canvas:
    """Edges hang from their parent's lower node; roots hang from y = 0.

    Marks sit beside each edge, capacities below each leaf, labels (if
    given) at the midpoint, and precedence arrows are dotted.
    """
    c = Canvas()
    xs = {e.index: sum(e.pos) / len(e.pos) for e in tree.edges}
    depth: dict[int, int] = {}
    for e in tree.edges:
        depth[e.index] = len(tree.ancestors(e.index)) + 1
    bottom = {i: (xs[i], -2 * depth[i]) for i in xs}

    def top(e):
        return bottom[e.parent] if e.parent is not None else (xs[e.index], 0)

    mids = {}
    for e in tree.edges:
        a, b = top(e), bottom[e.index]
        c.line([a, b], "thick")
        c.dot(a)
        c.dot(b)
        mid = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
        mids[e.index] = mid
        tag = e.mark or ""
        if labels is not None:
            tag = f"{tag}{'' if not tag else ':'}{labels[e.index]}"
        if tag:
            c.text((mid[0] + 0.5, mid[1]), tag)
        if e.is_leaf and e.capacity is not None:
            c.text((b[0], b[1] - 0.7), f"({e.capacity})")
    for a, b in tree.arrows:
        c.line([mids[a], mids[b]], "arrow")
    return c


def render_diagram(alpha: str, eps: int = PLUS, fmt: str = "tikz") -> str:
    return emit(draw_diagram(alpha, eps), fmt)


def render_configuration(conf: Configuration, alpha: str, beta: str,
                         eps: int = PLUS, fmt: str = "tikz") -> str:
    return emit(draw_configuration(conf, alpha, beta, eps), fmt)


def render_link_pattern(beta: str, case: Case = CASE_A, fmt: str = "tikz") -> str:
    return emit(draw_link_pattern(beta, case), fmt)


def render_tree(tree: Tree, labels=None, fmt: str = "tikz") -> str:
    return emit(draw_tree(tree, labels), fmt)
